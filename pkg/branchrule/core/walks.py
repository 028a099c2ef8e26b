# -*- coding: utf-8 -*-

"""Weighted hook walks on the whole plane.

Lines i = 0, i = l, j = 0, j = lambda_1 and the border of the diagram split
the plane into regions R1..R10. A walk starts in a square chosen with
probability proportional to x_i * y_j and moves toward the bold lines:
down/right in R1-R4 (stopping in a corner), up/left in R5-R8 (stopping in an
outer corner), up/right in R9 (stopping in (l+1, 0)) and down/left in R10
(stopping in (0, lambda_1+1)). A step to (i', j) has probability proportional
to x_i', a step to (i, j') proportional to y_j'.

Weights have finite support, so every region is a finite set of squares and
all probabilities here are exact Fractions.
"""

import bisect
import collections
import itertools
import logging
import math
import random

from fractions import Fraction

import yaml

from ..conf import project
from . import runners
from . import tableaux
from .bijection import make_trace
from .partitions import Cell


LOG = logging.getLogger('branchrule.backend')


R1, R2, R3, R4, R5, R6, R7, R8, R9, R10 = (
    'R1', 'R2', 'R3', 'R4', 'R5', 'R6', 'R7', 'R8', 'R9', 'R10'
)
BOUNDARY = 'boundary'
REGIONS = (R1, R2, R3, R4, R5, R6, R7, R8, R9, R10)
CORNER_REGIONS = (R1, R2, R3, R4)
OUTER_REGIONS = (R5, R6, R7, R8)

# (row block, column block) of rectangular regions
_BLOCKS = {
    R2: ('in', 'low'), R3: ('low', 'in'), R4: ('low', 'low'),
    R6: ('in', 'high'), R7: ('high', 'in'), R8: ('high', 'high'),
    R9: ('high', 'low'), R10: ('low', 'high'),
}


def _fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise ValueError('Weights have to be exact, got float %r' % value)
    return Fraction(str(value).strip())


def _ratio(numerator, denominator, what='denominator'):
    if not denominator:
        raise ValueError('Zero %s, weights do not cover required indices.'
                         % what)
    return Fraction(numerator) / denominator


class WeightSystem(object):
    """Finite support positive rational weights (x_i), (y_j), i, j in Z.
    Indices without a stored weight have weight 0.
    """

    def __init__(self, x_weights=None, y_weights=None):
        self._x = self._load(x_weights or {}, 'x')
        self._y = self._load(y_weights or {}, 'y')
        self._hash = None

    @staticmethod
    def _load(weights, axis):
        result = {}
        for index, value in weights.items():
            try:
                index = int(index)
                value = _fraction(value)
            except (TypeError, ValueError, ZeroDivisionError):
                raise ValueError(
                    'Invalid weight {axis}[{index}] = {value!r}'.format(
                        **locals()
                    )
                )
            if value < 0:
                raise ValueError(
                    'Weight {axis}[{index}] is negative: {value}'.format(
                        **locals()
                    )
                )
            if value:
                result[index] = value
        return result

    # --------------------------------------------------------- constructors
    @classmethod
    def uniform(cls, lam, margin=None, value=1):
        """Returns equal weights on rows 1-margin .. l+margin and columns
        1-margin .. lambda_1+margin.
        """
        margin = project.UNIFORM_WEIGHT_MARGIN if margin is None else margin
        rows = range(1 - margin, lam.length + margin + 1)
        cols = range(1 - margin, lam.first + margin + 1)
        return cls(dict((i, value) for i in rows),
                   dict((j, value) for j in cols))

    @classmethod
    def random(cls, lam, seed, margin=None, high=9):
        """Returns seeded random weights p/q, 1 <= p, q <= high, on the
        index windows of uniform().
        """
        margin = project.UNIFORM_WEIGHT_MARGIN if margin is None else margin
        rng = random.Random(seed)

        def _value():
            return Fraction(rng.randint(1, high), rng.randint(1, high))

        rows = range(1 - margin, lam.length + margin + 1)
        cols = range(1 - margin, lam.first + margin + 1)
        return cls(dict((i, _value()) for i in rows),
                   dict((j, _value()) for j in cols))

    @classmethod
    def from_dict(cls, data):
        """Loads weights from {"x": {"1": "3/2", ...}, "y": {...}}."""
        if not isinstance(data, dict) or set(data) - set(['x', 'y']):
            raise ValueError('Weights have to be mapping with keys "x" and '
                             '"y", got: %r' % (data,))
        for axis in ('x', 'y'):
            if not isinstance(data.get(axis) or {}, dict):
                raise ValueError('Weights "%s" have to be mapping.' % axis)
        return cls(data.get('x'), data.get('y'))

    @classmethod
    def from_file(cls, path):
        """Loads weights from json or yaml file."""
        with open(path) as wfile:
            try:
                data = yaml.safe_load(wfile)
            except yaml.YAMLError as ex:
                raise ValueError('Failed to parse weights file %s: %s'
                                 % (path, ex))
        return cls.from_dict(data)

    def to_dict(self):
        return {
            'x': dict((str(i), str(v)) for i, v in sorted(self._x.items())),
            'y': dict((str(j), str(v)) for j, v in sorted(self._y.items())),
        }

    # ------------------------------------------------------------- access
    def x(self, index):
        return self._x.get(index, Fraction(0))

    def y(self, index):
        return self._y.get(index, Fraction(0))

    def rows(self):
        return sorted(self._x)

    def cols(self):
        return sorted(self._y)

    @staticmethod
    def _sum(weights, low, high):
        return sum((v for i, v in weights.items()
                    if (low is None or i >= low)
                    and (high is None or i <= high)), Fraction(0))

    def x_sum(self, low=None, high=None):
        """Returns x_low + ... + x_high, None stands for unbounded end."""
        return self._sum(self._x, low, high)

    def y_sum(self, low=None, high=None):
        return self._sum(self._y, low, high)

    def restricted(self, rows, cols):
        """Returns weights kept only on given row and column indices."""
        rows, cols = set(rows), set(cols)
        return WeightSystem(
            dict((i, v) for i, v in self._x.items() if i in rows),
            dict((j, v) for j, v in self._y.items() if j in cols),
        )

    def _key(self):
        return (frozenset(self._x.items()), frozenset(self._y.items()))

    def __eq__(self, other):
        return isinstance(other, WeightSystem) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        return 'WeightSystem(x={0}, y={1})'.format(
            self.to_dict()['x'], self.to_dict()['y']
        )


# ---------------------------------------------------------------- regions
def _block(index, size):
    if index <= 0:
        return 'low'
    return 'in' if index <= size else 'high'


def block(cell, lam):
    """Returns region R1..R10 of the square, terminal squares included."""
    blocks = (_block(cell[0], lam.length), _block(cell[1], lam.first))
    if blocks == ('in', 'in'):
        return R1 if cell in lam else R5
    for region, value in _BLOCKS.items():
        if value == blocks:
            return region


def special_terminals(lam):
    """Returns terminal squares of R9 and R10 walks."""
    return Cell(lam.length + 1, 0), Cell(0, lam.first + 1)


def classify(cell, lam):
    """Returns region of the square or BOUNDARY for (l+1, 0) and
    (0, lambda_1+1).
    """
    cell = Cell(*cell)
    if cell in special_terminals(lam):
        return BOUNDARY
    return block(cell, lam)


def candidates(cell, lam):
    """Returns (vertical, horizontal) lists of squares the walk may step
    to from given square.
    """
    i, j = cell
    region = block(cell, lam)
    row, col = lam.extended_row_length(i), lam.extended_col_length(j)
    if region in CORNER_REGIONS:
        rows, cols = range(i + 1, col + 1), range(j + 1, row + 1)
    elif region in OUTER_REGIONS:
        rows, cols = range(col + 1, i), range(row + 1, j)
    elif region == R9:
        rows, cols = range(lam.length + 1, i), range(j + 1, 1)
    else:
        rows, cols = range(i + 1, 1), range(lam.first + 1, j)
    return [Cell(k, j) for k in rows], [Cell(i, l) for l in cols]


def is_terminal(cell, lam):
    vertical, horizontal = candidates(cell, lam)
    return not vertical and not horizontal


def step_distribution(cell, lam, W):
    """Returns list of (square, probability) of one step from given square.
    Squares with zero weight are left out.
    """
    cell = Cell(*cell)
    vertical, horizontal = candidates(cell, lam)
    if not vertical and not horizontal:
        raise ValueError('Square {cell} is terminal for {lam}.'.format(
            **locals()
        ))
    weighted = ([(c, W.x(c.row)) for c in vertical] +
                [(c, W.y(c.col)) for c in horizontal])
    weighted = [(c, w) for c, w in weighted if w]
    total = sum(w for c, w in weighted)
    if not total:
        raise ValueError('Zero normalizing mass in square {cell} of '
                         '{lam}.'.format(**locals()))
    return [(c, w / total) for c, w in weighted]


def region_mass(lam, region, W):
    """Returns sum of x_i y_j over squares of the region."""
    inside = sum((W.x(i) * W.y(j) for i, j in lam.cells()), Fraction(0))
    if region == R1:
        return inside
    if region == R5:
        return (W.x_sum(1, lam.length) * W.y_sum(1, lam.first)) - inside
    if region not in _BLOCKS:
        raise ValueError('Unknown region: %s' % region)
    rows, cols = _BLOCKS[region]
    x_bounds = {'low': (None, 0), 'in': (1, lam.length),
                'high': (lam.length + 1, None)}[rows]
    y_bounds = {'low': (None, 0), 'in': (1, lam.first),
                'high': (lam.first + 1, None)}[cols]
    return W.x_sum(*x_bounds) * W.y_sum(*y_bounds)


def total_mass(W):
    return W.x_sum() * W.y_sum()


def region_probability(lam, region, W):
    return _ratio(region_mass(lam, region, W), total_mass(W), 'total mass')


# --------------------------------------------------------------- sampling
def _integer_weights(weights):
    """Scales positive Fractions to integers with common denominator."""
    scale = 1
    for w in weights:
        scale = scale * w.denominator // math.gcd(scale, w.denominator)
    return [int(w * scale) for w in weights]


class _Sampler(object):
    """Exact sampling from finite distributions by randrange on cumulative
    integer weights.
    """

    def __init__(self, items, weights):
        self.items = items
        self.cumulative = list(itertools.accumulate(_integer_weights(weights)))
        self.total = self.cumulative[-1] if self.cumulative else 0

    def choose(self, rng):
        return self.items[bisect.bisect_right(self.cumulative,
                                              rng.randrange(self.total))]


class StartSampler(object):
    """Samples starting squares with probability proportional to x_i y_j,
    optionally within a region.
    """

    def __init__(self, W, lam=None, region=None):
        if region is not None and lam is None:
            raise ValueError('Partition is required to sample from region.')
        cells, weights = [], []
        for i in W.rows():
            for j in W.cols():
                if region is None or block((i, j), lam) == region:
                    cells.append(Cell(i, j))
                    weights.append(W.x(i) * W.y(j))
        if not cells:
            raise ValueError('Region %s has zero mass under given weights.'
                             % (region or 'plane'))
        self._sampler = _Sampler(cells, weights)

    def choose(self, rng):
        return self._sampler.choose(rng)


class StepSampler(object):
    """Caches step tables of a partition and weight system."""

    def __init__(self, lam, W):
        self.partition = lam
        self.weights = W
        self._tables = {}

    def choose(self, cell, rng):
        """Returns next square or None when given square is terminal."""
        try:
            table = self._tables[cell]
        except KeyError:
            if is_terminal(cell, self.partition):
                table = None
            else:
                dist = step_distribution(cell, self.partition, self.weights)
                table = _Sampler([c for c, p in dist], [p for c, p in dist])
            self._tables[cell] = table
        return table.choose(rng) if table else None


def sample_start(W, rng, lam=None, region=None):
    return StartSampler(W, lam, region).choose(rng)


def run_walk(start, lam, W, rng, steps=None):
    """Runs weighted hook walk from given square until it terminates.
    Returns WalkTrace.
    """
    steps = steps or StepSampler(lam, W)
    current = Cell(*start)
    cells = [current]
    while True:
        current = steps.choose(current, rng)
        if current is None:
            break
        cells.append(current)
    return make_trace(cells)


# ----------------------------------------------------------- closed forms
def _check_corner(lam, corner):
    if Cell(*corner) not in lam.corners():
        raise ValueError('Square {corner} is not a corner of {lam}.'.format(
            **locals()
        ))


def _check_outer_corner(lam, corner):
    if Cell(*corner) not in lam.outer_corners():
        raise ValueError(
            'Square {corner} is not an outer corner of {lam}.'.format(
                **locals()
            )
        )


def prod_rs(lam, corner, W):
    """Returns x_r y_s prod(1 + x_i/(x_{i+1}+..+x_r+y_{s+1}+..+y_{lambda_i}))
    prod(1 + y_j/(x_{r+1}+..+x_{lambda'_j}+y_{j+1}+..+y_s)).
    """
    _check_corner(lam, corner)
    r, s = corner
    value = W.x(r) * W.y(s)
    for i in range(1, r):
        den = W.x_sum(i + 1, r) + W.y_sum(s + 1, lam.extended_row_length(i))
        value *= 1 + _ratio(W.x(i), den)
    for j in range(1, s):
        den = W.x_sum(r + 1, lam.extended_col_length(j)) + W.y_sum(j + 1, s)
        value *= 1 + _ratio(W.y(j), den)
    return value


def prod_prime_rs(lam, corner, W):
    """Returns prod(1 - x_i/(x_i+..+x_{r-1}+y_s+..+y_{lambda_i}))
    prod(1 - y_j/(x_r+..+x_{lambda'_j}+y_j+..+y_{s-1})).
    """
    _check_outer_corner(lam, corner)
    r, s = corner
    value = Fraction(1)
    for i in range(1, r):
        den = W.x_sum(i, r - 1) + W.y_sum(s, lam.extended_row_length(i))
        value *= 1 - _ratio(W.x(i), den)
    for j in range(1, s):
        den = W.x_sum(r, lam.extended_col_length(j)) + W.y_sum(j, s - 1)
        value *= 1 - _ratio(W.y(j), den)
    return value


def _corner_sums(lam, corner, W):
    r, s = corner
    after = W.x_sum(r + 1, lam.length) + W.y_sum(1, s)
    before = W.x_sum(1, r) + W.y_sum(s + 1, lam.first)
    return after, before


def _outer_corner_sums(lam, corner, W):
    r, s = corner
    after = W.x_sum(r, lam.length) + W.y_sum(1, s - 1)
    before = W.x_sum(1, r - 1) + W.y_sum(s, lam.first)
    return after, before


def _corner_probability(lam, corner, region, W):
    prod = prod_rs(lam, corner, W)
    after, before = _corner_sums(lam, corner, W)
    if region == R1:
        return _ratio(prod, region_mass(lam, R1, W))
    if region == R2:
        return _ratio(prod, W.x_sum(1, lam.length) * after)
    if region == R3:
        return _ratio(prod, W.y_sum(1, lam.first) * before)
    return _ratio(prod, after * before)


def _outer_corner_probability(lam, corner, region, W):
    prod = prod_prime_rs(lam, corner, W)
    after, before = _outer_corner_sums(lam, corner, W)
    if region == R5:
        return _ratio(after * before * prod, region_mass(lam, R5, W))
    if region == R6:
        return _ratio(after * prod, W.x_sum(1, lam.length))
    if region == R7:
        return _ratio(before * prod, W.y_sum(1, lam.first))
    return prod


def _unconditional_probability(lam, terminal, W):
    total = total_mass(W)
    if terminal in special_terminals(lam):
        region = R9 if terminal == special_terminals(lam)[0] else R10
        return _ratio(region_mass(lam, region, W), total, 'total mass')
    r, s = terminal
    if terminal in lam.corners():
        after, before = _corner_sums(lam, terminal, W)
        factor = ((1 + _ratio(W.x_sum(None, 0), before)) *
                  (1 + _ratio(W.y_sum(None, 0), after)))
        return _ratio(factor * prod_rs(lam, terminal, W), total,
                      'total mass')
    if terminal in lam.outer_corners():
        first = W.x_sum(1, r - 1) + W.y_sum(s, None)
        second = W.x_sum(r, None) + W.y_sum(1, s - 1)
        return _ratio(first * second * prod_prime_rs(lam, terminal, W),
                      total, 'total mass')
    raise ValueError('Square {terminal} is not a terminal square of '
                     '{lam}.'.format(**locals()))


def _check_region(lam, conditioning, W):
    if conditioning is not None and conditioning not in REGIONS:
        raise ValueError('Unknown region: %s' % conditioning)
    if not lam and conditioning in (None, ) + CORNER_REGIONS:
        raise ValueError('The empty partition has no corners.')
    if conditioning is not None and not region_mass(lam, conditioning, W):
        raise ValueError('Region %s has zero mass under given weights.'
                         % conditioning)


def terminal_probability(lam, terminal, conditioning, W):
    """Returns exact probability that the walk started in the region
    (conditioning None: anywhere) stops in given terminal square.
    """
    terminal = Cell(*terminal)
    _check_region(lam, conditioning, W)
    if conditioning is None:
        return _unconditional_probability(lam, terminal, W)
    if conditioning in CORNER_REGIONS:
        if terminal not in lam.corners():
            return Fraction(0)
        return _corner_probability(lam, terminal, conditioning, W)
    if conditioning in OUTER_REGIONS:
        if terminal not in lam.outer_corners():
            return Fraction(0)
        return _outer_corner_probability(lam, terminal, conditioning, W)
    index = 0 if conditioning == R9 else 1
    return Fraction(int(terminal == special_terminals(lam)[index]))


def terminals(lam, conditioning=None):
    """Returns squares where walks started in the region can stop."""
    if conditioning in CORNER_REGIONS:
        return list(lam.corners())
    if conditioning in OUTER_REGIONS:
        return list(lam.outer_corners())
    if conditioning == R9:
        return [special_terminals(lam)[0]]
    if conditioning == R10:
        return [special_terminals(lam)[1]]
    return (list(lam.corners()) + list(lam.outer_corners()) +
            list(special_terminals(lam)))


class TerminalDistribution(object):
    """Exact distribution of terminal squares."""

    def __init__(self, partition, conditioning, probabilities):
        self.partition = partition
        self.conditioning = conditioning
        self.probabilities = dict((Cell(*c), p)
                                  for c, p in probabilities.items())

    def __getitem__(self, terminal):
        return self.probabilities.get(Cell(*terminal), Fraction(0))

    def __iter__(self):
        return iter(sorted(self.probabilities))

    def items(self):
        return sorted(self.probabilities.items())

    def total(self):
        return sum(self.probabilities.values(), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, TerminalDistribution):
            return NotImplemented
        mine = dict((c, p) for c, p in self.probabilities.items() if p)
        theirs = dict((c, p) for c, p in other.probabilities.items() if p)
        return mine == theirs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def to_dict(self):
        return {
            'partition': str(self.partition),
            'conditioning': self.conditioning or 'unconditional',
            'probabilities': [
                {'terminal': list(c), 'exact': str(p), 'decimal': float(p)}
                for c, p in self.items()
            ],
        }


def terminal_distribution(lam, conditioning, W):
    """Returns closed form TerminalDistribution."""
    return TerminalDistribution(lam, conditioning, dict(
        (c, terminal_probability(lam, c, conditioning, W))
        for c in terminals(lam, conditioning)
    ))


def unconditional_distribution(lam, W):
    return terminal_distribution(lam, None, W)


def uniform_corollary_probability(lam, terminal, conditioning):
    """Returns terminal probability for equal weights on x_1..x_l and
    y_1..y_{lambda_1}, computed from numbers of standard Young tableaux.
    """
    if conditioning not in CORNER_REGIONS + OUTER_REGIONS:
        raise ValueError('Uniform formulas exist only for regions R1-R8, '
                         'got: %s' % conditioning)
    terminal = Cell(*terminal)
    n, length, first = lam.size, lam.length, lam.first
    if not lam and conditioning != R8:
        raise ValueError('Region %s is empty for the empty partition.'
                         % conditioning)
    if conditioning == R5 and length * first == n:
        raise ValueError('Region R5 is empty for rectangular partition '
                         '%s.' % lam)
    r, s = terminal
    f = tableaux.syt_count(lam)
    if conditioning in CORNER_REGIONS:
        if terminal not in lam.corners():
            return Fraction(0)
        g = tableaux.syt_count(lam.remove_cell(terminal))
        denominator = {
            R1: 1,
            R2: Fraction(length * (length - r + s), n),
            R3: Fraction(first * (first + r - s), n),
            R4: Fraction((length - r + s) * (first + r - s), n),
        }[conditioning]
        return Fraction(g, f) / denominator
    if terminal not in lam.outer_corners():
        return Fraction(0)
    g = tableaux.syt_count(lam.add_cell(terminal))
    numerator, denominator = {
        R5: ((length - r + s) * (first + r - s), length * first - n),
        R6: (length - r + s, length),
        R7: (first + r - s, first),
        R8: (1, 1),
    }[conditioning]
    return Fraction(numerator * g, (n + 1) * denominator * f)


# ------------------------------------------------------------- projections
def _subsets_between(low, high, allowed):
    """Yields sets containing low and high plus any allowed index strictly
    between them.
    """
    inner = [k for k in allowed if low < k < high]
    for size in range(len(inner) + 1):
        for chosen in itertools.combinations(inner, size):
            yield set((low, high) + chosen)


def projection_probability(rows, cols, start, lam, W):
    """Returns probability that a walk from `start` has vertical projection
    `rows` and horizontal projection `cols`. The walk stops in a corner
    (max rows, max cols) or in an outer corner (min rows, min cols).
    """
    rows, cols = set(rows), set(cols)
    if not rows or not cols:
        raise ValueError('Projections have to be nonempty.')
    start = Cell(*start)
    low, high = Cell(min(rows), min(cols)), Cell(max(rows), max(cols))
    if start == low and high in lam.corners():
        r, s = high
        value = Fraction(1)
        for i in rows - set([start.row]):
            value *= W.x(i)
        for j in cols - set([start.col]):
            value *= W.y(j)
        for i in rows - set([r]):
            value = _ratio(value, W.x_sum(i + 1, r) +
                           W.y_sum(s + 1, lam.extended_row_length(i)))
        for j in cols - set([s]):
            value = _ratio(value, W.x_sum(r + 1, lam.extended_col_length(j)) +
                           W.y_sum(j + 1, s))
        return value
    if start == high and low in lam.outer_corners():
        r, s = low
        value = Fraction(1)
        for i in rows - set([start.row]):
            value *= W.x(i)
        for j in cols - set([start.col]):
            value *= W.y(j)
        for i in rows - set([r]):
            value = _ratio(value, W.x_sum(r, i - 1) +
                           W.y_sum(lam.extended_row_length(i) + 1, s - 1))
        for j in cols - set([s]):
            value = _ratio(value,
                           W.x_sum(lam.extended_col_length(j) + 1, r - 1) +
                           W.y_sum(s, j - 1))
        return value
    raise ValueError(
        'Projections {rows}, {cols} are inconsistent with start {start} '
        'in {lam}.'.format(rows=sorted(rows), cols=sorted(cols),
                           start=tuple(start), lam=lam)
    )


def terminal_probability_by_projections(lam, terminal, conditioning, W):
    """Returns P(terminal | region) summed from projection probabilities of
    all start squares of the region and all admissible projections.
    """
    terminal = Cell(*terminal)
    if conditioning not in CORNER_REGIONS + OUTER_REGIONS:
        raise ValueError('Projection sums exist only for regions R1-R8.')
    _check_region(lam, conditioning, W)
    corner = conditioning in CORNER_REGIONS
    if terminal not in (lam.corners() if corner else lam.outer_corners()):
        return Fraction(0)
    r, s = terminal
    total = Fraction(0)
    for i in W.rows():
        for j in W.cols():
            if block((i, j), lam) != conditioning:
                continue
            if corner and (i > r or j > s) or \
                    not corner and (i < r or j < s):
                continue
            mass = W.x(i) * W.y(j)
            row_sets = _subsets_between(min(i, r), max(i, r), W.rows())
            for rows in row_sets:
                col_sets = _subsets_between(min(j, s), max(j, s), W.cols())
                for cols in col_sets:
                    total += mass * projection_probability(
                        rows, cols, (i, j), lam, W
                    )
    return total / region_mass(lam, conditioning, W)


# ------------------------------------------------------------------ exact
def exact_walk_distribution(lam, conditioning, W):
    """Returns TerminalDistribution of walks started in the region computed
    by dynamic programming over step distributions.
    """
    if conditioning is not None and conditioning not in REGIONS:
        raise ValueError('Unknown region: %s' % conditioning)
    memo = {}

    def _from(cell):
        if cell in memo:
            return memo[cell]
        if is_terminal(cell, lam):
            result = {cell: Fraction(1)}
        else:
            result = collections.defaultdict(Fraction)
            for target, probability in step_distribution(cell, lam, W):
                for end, value in _from(target).items():
                    result[end] += probability * value
        memo[cell] = result
        return result

    totals = collections.defaultdict(Fraction)
    mass = Fraction(0)
    for i in W.rows():
        for j in W.cols():
            cell = Cell(i, j)
            if conditioning is not None and block(cell, lam) != conditioning:
                continue
            weight = W.x(i) * W.y(j)
            mass += weight
            for end, value in _from(cell).items():
                totals[end] += weight * value
    if not mass:
        raise ValueError('Region %s has zero mass under given weights.'
                         % (conditioning or 'plane'))
    LOG.debug('Exact walk distribution of %s (%s) used %d squares.'
              % (lam, conditioning, len(memo)))
    return TerminalDistribution(
        lam, conditioning, dict((c, v / mass) for c, v in totals.items())
    )


# ------------------------------------------------------------ monte carlo
MonteCarloEstimate = collections.namedtuple(
    'MonteCarloEstimate', ['terminal', 'count', 'estimate', 'stderr']
)


def _worker_trials(trials, workers):
    size, rest = divmod(trials, workers)
    return [size + (1 if k < rest else 0) for k in range(workers)]


def monte_carlo_estimate(lam, conditioning, W, trials=None, seed=0,
                         workers=None):
    """Estimates terminal probabilities from sampled walks. Trials are split
    among greenlet workers, worker k uses Random seeded by (seed, k).
    Returns dict terminal -> MonteCarloEstimate.
    """
    trials = project.MONTE_CARLO_TRIALS if trials is None else trials
    workers = project.MONTE_CARLO_WORKERS if workers is None else workers
    if trials < 1:
        raise ValueError('At least one trial is required.')
    if workers < 1:
        raise ValueError('At least one worker is required.')
    workers = min(workers, trials)
    if conditioning is not None and conditioning not in REGIONS:
        raise ValueError('Unknown region: %s' % conditioning)
    starts = StartSampler(W, lam, conditioning)
    steps = StepSampler(lam, W)
    interval = project.MONTE_CARLO_SWITCH_INTERVAL

    def _work(index, count):
        rng = random.Random('{0}:{1}'.format(seed, index))
        counts = collections.Counter()
        for trial in range(count):
            trace = run_walk(starts.choose(rng), lam, W, rng, steps=steps)
            counts[trace.cells[-1]] += 1
            if interval and (trial + 1) % interval == 0:
                runners.pause()
        LOG.debug('Monte Carlo worker %d finished %d walks.' % (index, count))
        return counts

    arguments = list(enumerate(_worker_trials(trials, workers)))
    counts = collections.Counter()
    for partial in runners.run_workers(_work, arguments):
        counts.update(partial)
    result = {}
    for terminal, count in counts.items():
        p = Fraction(count, trials)
        result[terminal] = MonteCarloEstimate(
            terminal, count, p, math.sqrt(float(p * (1 - p)) / trials)
        )
    return result


Agreement = collections.namedtuple('Agreement', [
    'terminal', 'exact', 'estimate', 'stderr', 'deviation', 'passed'
])


def compare_estimates(estimates, exact, trials, sigma=None):
    """Compares Monte Carlo estimates with exact TerminalDistribution. The
    tolerance is sigma binomial standard errors of the exact value.
    """
    sigma = project.MONTE_CARLO_SIGMA if sigma is None else sigma
    result = []
    for terminal in sorted(set(exact.probabilities) | set(estimates)):
        p = exact[terminal]
        estimate = estimates[terminal].estimate \
            if terminal in estimates else Fraction(0)
        stderr = math.sqrt(float(p * (1 - p)) / trials)
        deviation = abs(float(estimate - p))
        passed = (deviation <= sigma * stderr) if stderr else estimate == p
        result.append(Agreement(terminal, p, estimate, stderr, deviation,
                                passed))
    return result
