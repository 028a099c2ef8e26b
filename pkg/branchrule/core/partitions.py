# -*- coding: utf-8 -*-

"""Integer partitions and the cell geometry of their Young diagrams.

Cells are 1-based (row, col) pairs. Any integer pair is a legal cell, so the
same type serves diagram cells, outer corners and hook walk positions.
"""

import collections
import logging


LOG = logging.getLogger('branchrule.backend')


Cell = collections.namedtuple('Cell', ['row', 'col'])


class Partition(object):
    """Immutable integer partition lambda_1 >= lambda_2 >= ... > 0."""

    __slots__ = ('_parts', '_conjugate')

    def __init__(self, parts=()):
        parts = [int(i) for i in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for index, part in enumerate(parts):
            if part <= 0:
                raise ValueError(
                    'Partition parts have to be positive: {parts}'.format(
                        **locals()
                    )
                )
            if index and part > parts[index - 1]:
                raise ValueError(
                    'Partition parts have to be weakly decreasing: '
                    '{parts}'.format(**locals())
                )
        self._parts = tuple(parts)
        self._conjugate = None

    @classmethod
    def from_parts(cls, parts):
        """Returns partition of given parts, trailing zeros are stripped."""
        return cls(parts)

    @property
    def parts(self):
        return self._parts

    @property
    def size(self):
        return sum(self._parts)

    @property
    def length(self):
        return len(self._parts)

    @property
    def first(self):
        """Length of the first row, 0 for the empty partition."""
        return self._parts[0] if self._parts else 0

    def is_rectangle(self):
        return not self._parts or self._parts[0] == self._parts[-1]

    def __iter__(self):
        return iter(self._parts)

    def __bool__(self):
        return bool(self._parts)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self._parts == other._parts

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __lt__(self, other):
        return self._parts < other._parts

    def __hash__(self):
        return hash(self._parts)

    def __repr__(self):
        return 'Partition({})'.format(list(self._parts))

    def __str__(self):
        if not self._parts:
            return '0'
        if all(i <= 9 for i in self._parts):
            return ''.join(str(i) for i in self._parts)
        text = ','.join(str(i) for i in self._parts)
        return text if len(self._parts) > 1 else text + ','

    # ------------------------------------------------------------- geometry
    def conjugate(self):
        """Returns the transposed partition."""
        if self._conjugate is None:
            self._conjugate = Partition(
                [sum(1 for i in self._parts if i >= j)
                 for j in range(1, self.first + 1)]
            )
        return self._conjugate

    def extended_row_length(self, i):
        """Returns lambda_i for any integer i: lambda_1 above the diagram and
        0 below it.
        """
        if i <= 0:
            return self.first
        if i > self.length:
            return 0
        return self._parts[i - 1]

    def extended_col_length(self, j):
        """Returns lambda'_j for any integer j."""
        if j <= 0:
            return self.length
        if j > self.first:
            return 0
        return self.conjugate()._parts[j - 1]

    def __contains__(self, cell):
        row, col = cell
        return 1 <= row <= self.length and 1 <= col <= self._parts[row - 1]

    def cells(self):
        """Returns diagram cells in reading order."""
        return [Cell(i, j) for i, part in enumerate(self._parts, 1)
                for j in range(1, part + 1)]

    def hook_length(self, cell):
        if cell not in self:
            raise ValueError(
                'Cell {cell} is outside of diagram {self}.'.format(**locals())
            )
        i, j = cell
        return (self.extended_row_length(i) + self.extended_col_length(j)
                - i - j + 1)

    def hook_lengths(self):
        """Returns hook lengths of all cells in reading order."""
        return [self.hook_length(c) for c in self.cells()]

    def corners(self):
        """Returns cells with hook length 1, ordered by increasing row."""
        result = []
        for i, part in enumerate(self._parts, 1):
            if self.extended_row_length(i + 1) < part:
                result.append(Cell(i, part))
        return result

    def outer_corners(self):
        """Returns cells which can be added to the diagram, ordered by
        increasing row. The empty partition has the single outer corner (1,1).
        """
        result = [Cell(1, self.first + 1)]
        for i in range(2, self.length + 2):
            part = self.extended_row_length(i)
            if part < self.extended_row_length(i - 1):
                result.append(Cell(i, part + 1))
        return result

    def complement(self, a, b):
        """Returns partition formed by the complement of the diagram inside
        a x b rectangle, read upside down.
        """
        if a < self.length or b < self.first:
            raise ValueError(
                'Rectangle {a}x{b} does not contain diagram {self}.'.format(
                    **locals()
                )
            )
        parts = [b] * (a - self.length)
        parts.extend(b - i for i in reversed(self._parts))
        return Partition([i for i in parts if i])

    def add_cell(self, cell):
        if cell not in self.outer_corners():
            raise ValueError(
                'Cell {cell} is not an outer corner of {self}.'.format(
                    **locals()
                )
            )
        parts = list(self._parts) + [0]
        parts[cell[0] - 1] += 1
        return Partition(parts)

    def remove_cell(self, cell):
        if cell not in self.corners():
            raise ValueError(
                'Cell {cell} is not a corner of {self}.'.format(**locals())
            )
        parts = list(self._parts)
        parts[cell[0] - 1] -= 1
        return Partition(parts)


def partitions_of(n):
    """Returns all partitions of n in lexicographic descending order."""
    if n < 0:
        raise ValueError('Cannot partition negative number: %s' % n)

    def _generate(rest, largest):
        if not rest:
            yield ()
            return
        for part in range(min(rest, largest), 0, -1):
            for tail in _generate(rest - part, part):
                yield (part,) + tail

    return [Partition(parts) for parts in _generate(n, n)]


def parse_partition(text):
    """Parses partition from digit string ("66532") or comma separated list
    ("10,2,1"). Empty string and "0" stand for the empty partition.
    """
    if isinstance(text, Partition):
        return text
    text = str(text).strip()
    try:
        if ',' in text:
            parts = [int(i) for i in text.split(',') if i.strip()]
        else:
            parts = [int(i) for i in text]
    except ValueError:
        raise ValueError('Given value is not a partition: %s' % text)
    return Partition(parts)
