# -*- coding: utf-8 -*-

"""Weight preserving bijection between label arrangements of both sides of
the complementary weighted branching rule.

An arrangement F labels every cell (i,j) of the diagram with x_k,
i <= k <= lambda'_j, or y_l, j <= l <= lambda_i. Reading labels as moves
(x_k jumps to (i, lambda_k+1), y_l to (lambda'_l+1, j)) gives a hook walk
from (1,1) to an outer corner (r,s). phi shifts the walk labels and their
projections onto row r and column s, then pushes row r one square to the
left and column s one square up. The result G is an arrangement of the
summand of outer corner (r,s).

Variants x, y and xy carry a chosen row p and/or column q: their walks start
in (1, lambda_p+1), (lambda'_q+1, 1) or (lambda'_q+1, lambda_p+1), cells in
column 1 and/or row 1 are left unlabeled and x_p / y_q fill the holes in row
r / column s before the final push.
"""

import collections
import itertools
import logging

from . import polynomials
from .partitions import Cell, Partition


LOG = logging.getLogger('branchrule.backend')


VARIANTS = ('', 'x', 'y', 'xy')


class Label(collections.namedtuple('Label', ['axis', 'index'])):
    __slots__ = ()

    def __str__(self):
        return '{0}{1}'.format(self.axis, self.index)

    @classmethod
    def parse(cls, token):
        token = token.strip()
        if len(token) < 2 or token[0] not in 'xy':
            raise ValueError('Invalid label: %s' % token)
        try:
            return cls(token[0], int(token[1:]))
        except ValueError:
            raise ValueError('Invalid label: %s' % token)

    def variable(self):
        return polynomials.Variable(self.axis, self.index)


WalkTrace = collections.namedtuple('WalkTrace', ['cells', 'rows', 'cols'])


def make_trace(cells):
    cells = tuple(Cell(*c) for c in cells)
    return WalkTrace(cells,
                     tuple(sorted(set(c.row for c in cells))),
                     tuple(sorted(set(c.col for c in cells))))


def _check_variant(variant):
    if variant not in VARIANTS:
        raise ValueError('Unknown bijection variant: %s' % variant)


# --------------------------------------------------------------- domains
def f_candidates(lam, cell):
    """Returns admissible labels of a cell of an F arrangement."""
    i, j = cell
    return ([Label('x', k) for k in range(i, lam.extended_col_length(j) + 1)] +
            [Label('y', l) for l in range(j, lam.extended_row_length(i) + 1)])


def g_candidates(lam, corner, cell):
    """Returns admissible labels of a cell of a G arrangement with given
    outer corner.
    """
    r, s = corner
    i, j = cell
    if i == r:
        return ([Label('x', k)
                 for k in range(r, lam.extended_col_length(j) + 1)] +
                [Label('y', l)
                 for l in range(j + 1, lam.extended_row_length(r) + 1)])
    if j == s:
        return ([Label('x', k)
                 for k in range(i + 1, lam.extended_col_length(s) + 1)] +
                [Label('y', l)
                 for l in range(s, lam.extended_row_length(i) + 1)])
    return f_candidates(lam, cell)


def f_domain(lam, variant=''):
    """Returns cells labeled in an F arrangement of given variant."""
    return [c for c in lam.cells()
            if not ('x' in variant and c.col == 1)
            and not ('y' in variant and c.row == 1)]


def g_domain(lam, corner, variant=''):
    """Returns cells labeled in a G arrangement of given variant."""
    r, s = corner
    return [c for c in lam.cells()
            if c.row == r or c.col == s
            or (not ('x' in variant and c.col == 1)
                and not ('y' in variant and c.row == 1))]


def admitted_corners(lam, variant=''):
    return [c for c in lam.outer_corners()
            if not ('x' in variant and c.col == 1)
            and not ('y' in variant and c.row == 1)]


def variant_choices(lam, variant):
    """Returns (row, column) choices of the left-hand side prefactor."""
    if variant == 'x':
        return [(p, None) for p in range(1, lam.length + 1)]
    if variant == 'y':
        return [(None, q) for q in range(1, lam.first + 1)]
    if variant == 'xy':
        return [(p, q) for p in range(1, lam.length + 1)
                for q in range(1, lam.first + 1) if (p, q) not in lam]
    return [(None, None)]


# ----------------------------------------------------------- arrangements
class _Arrangement(object):

    def __init__(self, partition, labels, variant=''):
        _check_variant(variant)
        self.partition = partition
        self.variant = variant
        self._labels = dict((Cell(*c), l if isinstance(l, Label)
                             else Label.parse(l))
                            for c, l in labels.items())

    @property
    def labels(self):
        return dict(self._labels)

    def __getitem__(self, cell):
        return self._labels[Cell(*cell)]

    def get(self, cell, default=None):
        return self._labels.get(Cell(*cell), default)

    def _key(self):
        return (self.partition, self.variant,
                tuple(sorted(self._labels.items())))

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key())


class ArrangementF(_Arrangement):
    """Labels of the left-hand side. Variants carry the chosen prefactor
    row and/or column.
    """

    def __init__(self, partition, labels, variant='', row=None, column=None):
        super(ArrangementF, self).__init__(partition, labels, variant)
        self.row = row
        self.column = column

    def _key(self):
        return super(ArrangementF, self)._key() + (self.row, self.column)

    def start(self):
        """Returns the first square of the hook walk."""
        lam = self.partition
        i, j = 1, 1
        if 'x' in self.variant:
            j = lam.extended_row_length(self.row) + 1
        if 'y' in self.variant:
            i = lam.extended_col_length(self.column) + 1
        return Cell(i, j)

    def prefix_labels(self):
        result = []
        if 'x' in self.variant:
            result.append(Label('x', self.row))
        if 'y' in self.variant:
            result.append(Label('y', self.column))
        return result

    def __repr__(self):
        return 'ArrangementF({0}, variant={1!r}, row={2}, column={3})'.format(
            self.partition, self.variant, self.row, self.column
        )


class ArrangementG(_Arrangement):
    """Labels of the right-hand side summand of an outer corner."""

    def __init__(self, partition, outer_corner, labels, variant=''):
        super(ArrangementG, self).__init__(partition, labels, variant)
        self.outer_corner = Cell(*outer_corner)

    def _key(self):
        return super(ArrangementG, self)._key() + (self.outer_corner,)

    def __repr__(self):
        return 'ArrangementG({0}, corner={1}, variant={2!r})'.format(
            self.partition, tuple(self.outer_corner), self.variant
        )


class IntermediateArrangement(object):
    """Arrangement between the shifts and the final push. The outer corner
    holds up to two labels, one x and one y.
    """

    def __init__(self, partition, outer_corner):
        self.partition = partition
        self.outer_corner = Cell(*outer_corner)
        self.labels = {}
        self.corner = {}

    def put(self, cell, label):
        cell = Cell(*cell)
        if cell == self.outer_corner:
            if label.axis in self.corner:
                raise RuntimeError('Outer corner {0} already holds label {1}'
                                   .format(cell, self.corner[label.axis]))
            self.corner[label.axis] = label
            return
        if cell in self.labels:
            raise RuntimeError('Cell {0} already holds label {1}'.format(
                cell, self.labels[cell]
            ))
        self.labels[cell] = label

    def get(self, cell, axis=None):
        cell = Cell(*cell)
        if cell == self.outer_corner:
            return self.corner.get(axis)
        return self.labels.get(cell)

    def take(self, cell, axis=None):
        cell = Cell(*cell)
        if cell == self.outer_corner:
            return self.corner.pop(axis, None)
        return self.labels.pop(cell, None)

    def occupants(self):
        """Returns labels held by the outer corner."""
        return [self.corner[a] for a in ('x', 'y') if a in self.corner]


# ------------------------------------------------------------- validation
def _valid_labels(arrangement, domain, candidates):
    labels = arrangement.labels
    if set(labels) != set(domain):
        return False
    for cell in domain:
        if labels[cell] not in candidates(cell):
            return False
    return True


def validate_F(F):
    lam = F.partition
    if (F.row, F.column) not in variant_choices(lam, F.variant):
        return False
    return _valid_labels(F, f_domain(lam, F.variant),
                         lambda c: f_candidates(lam, c))


def validate_G(G):
    lam = G.partition
    corner = G.outer_corner
    if corner not in admitted_corners(lam, G.variant):
        return False
    return _valid_labels(G, g_domain(lam, corner, G.variant),
                         lambda c: g_candidates(lam, corner, c))


# ------------------------------------------------------------------- walk
def hook_walk_from_F(F):
    """Returns trace of the hook walk encoded by labels of F."""
    lam = F.partition
    outer = set(lam.outer_corners())
    current = F.start()
    cells = [current]
    while current not in outer:
        if current not in lam:
            raise ValueError('Hook walk left the diagram at %s.' % (current,))
        label = F[current]
        i, j = current
        if label.axis == 'x':
            current = Cell(i, lam.extended_row_length(label.index) + 1)
        else:
            current = Cell(lam.extended_col_length(label.index) + 1, j)
        cells.append(current)
    LOG.debug('Hook walk for %s: %s' % (lam, cells))
    return make_trace(cells)


def move_plan(trace):
    """Returns list of (source, destination, axis) label moves of the
    relabeling. Axis names the part of the outer corner a walk label is
    moved to, it is None for projection moves.
    """
    r, s = trace.cells[-1]
    moves = []
    for (i, j), (k, l) in zip(trace.cells, trace.cells[1:]):
        if i == k:
            moves.append((Cell(i, j), Cell(r, l), 'x'))
            if i != r:
                moves.append((Cell(r, j), Cell(i, j), None))
        else:
            moves.append((Cell(i, j), Cell(k, s), 'y'))
            if j != s:
                moves.append((Cell(i, s), Cell(i, j), None))
    return moves


# -------------------------------------------------------------------- phi
def relabel(F, trace=None):
    """Returns IntermediateArrangement of F: labels shifted along the walk
    and its projections, prefactor labels placed into the holes.
    """
    trace = trace or hook_walk_from_F(F)
    r, s = trace.cells[-1]
    start = trace.cells[0]
    state = IntermediateArrangement(F.partition, (r, s))
    state.labels = F.labels
    moves = move_plan(trace)
    moved = [(dst, F[src]) for src, dst, axis in moves]
    for src, dst, axis in moves:
        state.take(src)
    for dst, label in moved:
        state.put(dst, label)
    if 'x' in F.variant:
        state.put((r, start.col), Label('x', F.row))
    if 'y' in F.variant:
        state.put((start.row, s), Label('y', F.column))
    return state


def push(state, variant=''):
    """Returns ArrangementG from the state by pushing row r one square to
    the left and column s one square up.
    """
    r, s = state.outer_corner
    labels = {}
    for (i, j), label in state.labels.items():
        if i != r and j != s:
            labels[(i, j)] = label
    for j in range(1, s):
        axis = 'x' if j + 1 == s else None
        label = state.get((r, j + 1), axis)
        if label is not None:
            labels[(r, j)] = label
    for i in range(1, r):
        axis = 'y' if i + 1 == r else None
        label = state.get((i + 1, s), axis)
        if label is not None:
            labels[(i, s)] = label
    return ArrangementG(state.partition, (r, s), labels, variant)


def phi(F):
    """Maps arrangement F (of any variant) to its G arrangement."""
    if not validate_F(F):
        raise ValueError('Given arrangement is not admissible: %r' % F)
    state = relabel(F)
    G = push(state, F.variant)
    if not validate_G(G):
        raise RuntimeError('Relabeling produced inadmissible arrangement '
                           '%r' % G)
    return G


def phi_variant(F, variant=None):
    """Maps a variant arrangement F. Variant, when given, has to match the
    variant of F.
    """
    if not F.variant or (variant is not None and variant != F.variant):
        raise ValueError('Arrangement variant {0!r} does not match requested '
                         'variant {1!r}.'.format(F.variant, variant))
    return phi(F)


# ---------------------------------------------------------------- inverse
def read_projections(G):
    """Returns (I, J, row, column): walk projections onto column s and row r
    and the prefactor row/column of variant arrangements.
    """
    lam = G.partition
    r, s = G.outer_corner
    cols = set()
    for j in range(2, s + 1):
        label = G.get((r, j - 1))
        if label and label.axis == 'x' and \
                label.index > lam.extended_col_length(j):
            cols.add(j)
    rows = set()
    for i in range(2, r + 1):
        label = G.get((i - 1, s))
        if label and label.axis == 'y' and \
                label.index > lam.extended_row_length(i):
            rows.add(i)
    row = column = None
    if 'x' in G.variant:
        if not cols:
            raise ValueError('Missing projection marker in row %d.' % r)
        row = G[(r, min(cols) - 1)].index
    else:
        cols.add(1)
    if 'y' in G.variant:
        if not rows:
            raise ValueError('Missing projection marker in column %d.' % s)
        column = G[(min(rows) - 1, s)].index
    else:
        rows.add(1)
    return sorted(rows), sorted(cols), row, column


def unpush(G):
    """Returns IntermediateArrangement of G by pushing row r one square to
    the right and column s one square down.
    """
    r, s = G.outer_corner
    state = IntermediateArrangement(G.partition, (r, s))
    for (i, j), label in G.labels.items():
        if i == r:
            state.put((r, j + 1), label)
        elif j == s:
            state.put((i + 1, s), label)
        else:
            state.put((i, j), label)
    return state


def _rebuild_walk(state, start, rows, cols):
    r, s = state.outer_corner
    current = start
    cells = [current]
    while current != (r, s):
        i, j = current
        if i == r:
            right = True
        elif j == s:
            right = False
        else:
            label = state.get(current)
            if label is None:
                raise ValueError('Walk square %s has no label.' % (current,))
            if label.axis == 'x':
                right = label.index >= r
            else:
                right = label.index <= s - 1
        try:
            if right:
                current = Cell(i, min(c for c in cols if c > j))
            else:
                current = Cell(min(c for c in rows if c > i), j)
        except ValueError:
            raise ValueError('Projections do not lead to outer corner '
                             '%s.' % ((r, s),))
        cells.append(current)
    return make_trace(cells)


def phi_inverse(G):
    """Maps arrangement G back to the F arrangement it comes from."""
    if not validate_G(G):
        raise ValueError('Given arrangement is not admissible: %r' % G)
    lam = G.partition
    r, s = G.outer_corner
    rows, cols, row, column = read_projections(G)
    start = Cell(rows[0], cols[0])
    state = unpush(G)
    if 'x' in G.variant:
        state.take((r, start.col), 'x')
    if 'y' in G.variant:
        state.take((start.row, s), 'y')
    trace = _rebuild_walk(state, start, rows, cols)
    labels = dict(state.labels)
    for src, dst, axis in move_plan(trace):
        label = state.get(dst, axis)
        if label is None:
            raise ValueError('Missing label in %s while undoing relabeling.'
                             % (dst,))
        labels[src] = label
    F = ArrangementF(lam, labels, G.variant, row=row, column=column)
    if not validate_F(F):
        raise ValueError('Arrangement %r is not in the image of phi.' % G)
    return F


def phi_variant_inverse(G, variant=None):
    """Maps a variant arrangement G back to its F arrangement."""
    if not G.variant or (variant is not None and variant != G.variant):
        raise ValueError('Arrangement variant {0!r} does not match requested '
                         'variant {1!r}.'.format(G.variant, variant))
    return phi_inverse(G)


# ------------------------------------------------------------ enumeration
def _fillings(domain, candidates):
    choices = [candidates(c) for c in domain]
    for labels in itertools.product(*choices):
        yield dict(zip(domain, labels))


def enumerate_F(lam, variant=''):
    """Yields every F arrangement of given variant exactly once. Cells are
    filled in reading order with labels x_i..x_{lambda'_j}, y_j..y_{lambda_i}.
    """
    _check_variant(variant)
    domain = f_domain(lam, variant)
    for row, column in variant_choices(lam, variant):
        for labels in _fillings(domain, lambda c: f_candidates(lam, c)):
            yield ArrangementF(lam, labels, variant, row=row, column=column)


def enumerate_G(lam, variant=''):
    """Yields every G arrangement of given variant, outer corners in
    increasing row order.
    """
    _check_variant(variant)
    for corner in admitted_corners(lam, variant):
        domain = g_domain(lam, corner, variant)
        for labels in _fillings(domain,
                                lambda c: g_candidates(lam, corner, c)):
            yield ArrangementG(lam, corner, labels, variant)


def count_F(lam, variant=''):
    domain = f_domain(lam, variant)
    total = 1
    for cell in domain:
        total *= len(f_candidates(lam, cell))
    return total * len(variant_choices(lam, variant))


def count_G(lam, variant=''):
    total = 0
    for corner in admitted_corners(lam, variant):
        term = 1
        for cell in g_domain(lam, corner, variant):
            term *= len(g_candidates(lam, corner, cell))
        total += term
    return total


def weight(arrangement):
    """Returns product of all labels (and prefactor labels) as Monomial."""
    labels = list(arrangement.labels.values())
    if isinstance(arrangement, ArrangementF):
        labels.extend(arrangement.prefix_labels())
    return polynomials.Monomial.from_variables(l.variable() for l in labels)


def weight_sum(arrangements):
    """Returns sum of weights of given arrangements as Polynomial."""
    terms = collections.Counter(weight(a) for a in arrangements)
    return polynomials.Polynomial(dict(terms))


# --------------------------------------------------------------- checks
RoundTrip = collections.namedtuple('RoundTrip', [
    'partition', 'variant', 'total', 'passed', 'images', 'codomain',
    'failures'
])


def check_round_trips(lam, variant='', arrangements=None, limit=10):
    """Applies phi and phi_inverse to given arrangements (all of F by
    default) and collects failures (at most `limit` of them are kept).
    """
    if arrangements is None:
        arrangements = enumerate_F(lam, variant)
    total = passed = 0
    images = set()
    failures = []
    for F in arrangements:
        total += 1
        try:
            G = phi(F)
            ok = (phi_inverse(G) == F and weight(G) == weight(F))
        except (ValueError, RuntimeError) as ex:
            LOG.debug('Round trip of %r failed: %s' % (F, ex))
            G, ok = None, False
        if ok:
            passed += 1
            images.add(G)
        elif len(failures) < limit:
            failures.append(format_arrangement(F))
    LOG.info('Round trips for %s (variant %r): %d/%d'
             % (lam, variant, passed, total))
    return RoundTrip(lam, variant, total, passed, len(images),
                     count_G(lam, variant), failures)


# ------------------------------------------------------------ text format
def format_arrangement(arrangement):
    """Returns text form: optional header lines, then one line per diagram
    row with labels separated by spaces; '.' marks an unlabeled cell.
    """
    lines = []
    if isinstance(arrangement, ArrangementG):
        lines.append('corner {0} {1}'.format(*arrangement.outer_corner))
        if arrangement.variant:
            lines.append('variant {}'.format(arrangement.variant))
    else:
        if arrangement.row is not None:
            lines.append('row {}'.format(arrangement.row))
        if arrangement.column is not None:
            lines.append('column {}'.format(arrangement.column))
    for i, part in enumerate(arrangement.partition, 1):
        lines.append(' '.join(
            str(arrangement.get((i, j)) or '.') for j in range(1, part + 1)
        ))
    return '\n'.join(lines)


def parse_arrangement(text, partition=None):
    """Parses text form of an arrangement. Partition is read from row
    lengths unless given.
    """
    headers = {}
    rows = []
    for line in text.strip().splitlines():
        tokens = line.split()
        if tokens and tokens[0] in ('corner', 'variant', 'row', 'column'):
            headers[tokens[0]] = tokens[1:]
        elif tokens:
            rows.append(tokens)
    lam = partition or Partition([len(r) for r in rows])
    labels = {}
    for i, tokens in enumerate(rows, 1):
        for j, token in enumerate(tokens, 1):
            if token != '.':
                labels[(i, j)] = Label.parse(token)
    if 'corner' in headers:
        corner = tuple(int(i) for i in headers['corner'])
        variant = (headers.get('variant') or [''])[0]
        return ArrangementG(lam, corner, labels, variant)
    row = int(headers['row'][0]) if 'row' in headers else None
    column = int(headers['column'][0]) if 'column' in headers else None
    variant = ('x' if row is not None else '') + \
        ('y' if column is not None else '')
    return ArrangementF(lam, labels, variant, row=row, column=column)
