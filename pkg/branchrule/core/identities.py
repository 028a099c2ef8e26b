# -*- coding: utf-8 -*-

"""Both sides of the weighted branching identities.

Every builder returns ProductSum objects, so sides can be either expanded
(full_expansion) or compared at random points (random_eval). The public
``*_lhs``/``*_rhs``/``*_sides`` helpers expand on request.
"""

import logging

from ..conf import project

from . import polynomials
from .partitions import Partition
from .polynomials import (ProductSum, Polynomial, linear_form, xs, ys, x, y)


LOG = logging.getLogger('branchrule.backend')


WBR = 'wbr'
WBR_X = 'wbr-x'
WBR_Y = 'wbr-y'
WBR_XY = 'wbr-xy'
CWBR = 'cwbr'
CWBR_X = 'cwbr-x'
CWBR_Y = 'cwbr-y'
CWBR_XY = 'cwbr-xy'
Y2_REDUCED = 'y2'

WBR_FAMILY = (WBR, WBR_X, WBR_Y, WBR_XY)
CWBR_FAMILY = (CWBR, CWBR_X, CWBR_Y, CWBR_XY)
IDENTITIES = WBR_FAMILY + CWBR_FAMILY + (Y2_REDUCED,)

FULL_EXPANSION = 'full_expansion'
RANDOM_EVAL = 'random_eval'
MODES = (FULL_EXPANSION, RANDOM_EVAL)

# complementary identity -> (corner identity of the complement, rectangle)
# rectangle is given as offsets to (l(lambda), lambda_1)
COMPLEMENT_PAIRS = {
    CWBR: (WBR_XY, (1, 1)),
    CWBR_X: (WBR_X, (0, 1)),
    CWBR_Y: (WBR_Y, (1, 0)),
    CWBR_XY: (WBR, (0, 0)),
}


def _variant(identity):
    if identity not in IDENTITIES:
        raise ValueError('Unknown identity: %s' % identity)
    if identity == Y2_REDUCED:
        return 'y'
    return identity.partition('-')[2]


# ------------------------------------------------------------------ factors
def hook_factor(lam, cell):
    """x_i + ... + x_{lambda'_j} + y_j + ... + y_{lambda_i}"""
    i, j = cell
    return linear_form(xs(i, lam.extended_col_length(j)) +
                       ys(j, lam.extended_row_length(i)))


def inner_hook_factor(lam, cell):
    """x_{i+1} + ... + x_{lambda'_j} + y_{j+1} + ... + y_{lambda_i}"""
    i, j = cell
    return linear_form(xs(i + 1, lam.extended_col_length(j)) +
                       ys(j + 1, lam.extended_row_length(i)))


def xy_prefactor(lam, algebraic=False):
    """Returns sum of x_p*y_q over cells of the bounding box outside of the
    diagram. With algebraic=True it is computed as
    (sum x_p)(sum y_q) - sum over diagram cells of x_p*y_q.
    """
    if algebraic:
        box = (linear_form(xs(1, lam.length)) *
               linear_form(ys(1, lam.first)))
        return box - cell_sum(lam.cells())
    return cell_sum(
        (p, q) for p in range(1, lam.length + 1)
        for q in range(1, lam.first + 1) if (p, q) not in lam
    )


def checked_xy_prefactor(lam):
    """Returns xy_prefactor of lambda after checking that the box-sum form
    and the algebraic form agree. Raises RuntimeError otherwise.
    """
    boxes = xy_prefactor(lam)
    algebraic = xy_prefactor(lam, algebraic=True)
    if boxes != algebraic:
        raise RuntimeError('Forms of xy prefactor differ for %s: %s != %s'
                           % (lam, boxes, algebraic))
    return boxes


def cell_sum(cells):
    """Returns sum of x_p*y_q over given cells."""
    terms = {}
    for p, q in cells:
        mono = polynomials.Monomial([(x(p), 1), (y(q), 1)])
        terms[mono] = terms.get(mono, 0) + 1
    return Polynomial(terms)


def _complementary_prefactor(lam, variant):
    if variant == 'x':
        return [linear_form(xs(1, lam.length))]
    if variant == 'y':
        return [linear_form(ys(1, lam.first))]
    if variant == 'xy':
        return [checked_xy_prefactor(lam)]
    return []


def _corner_prefactor(lam, variant):
    if variant == 'x':
        return [linear_form(xs(1, lam.length))]
    if variant == 'y':
        return [linear_form(ys(1, lam.first))]
    if variant == 'xy':
        return []
    return [cell_sum(lam.cells())]


def _admitted_outer_corners(lam, variant):
    result = []
    for r, s in lam.outer_corners():
        if 'x' in variant and s == 1:
            continue
        if 'y' in variant and r == 1:
            continue
        result.append((r, s))
    return result


def _admitted_cells(lam, variant):
    return [(i, j) for i, j in lam.cells()
            if not ('y' in variant and i == 1)
            and not ('x' in variant and j == 1)]


# ------------------------------------------------------- complementary rule
def complementary_terms(lam, variant='', reduced=False):
    """Returns (lhs, rhs) ProductSums of CWBR (variant '') or of its x, y
    and xy variants. With reduced=True factors common to both sides are
    cancelled: cells are restricted to rows I and columns J of admitted
    outer corners and corrective factors are kept only for i+1 in I
    (resp. j+1 in J).
    """
    corners = _admitted_outer_corners(lam, variant)
    cells = _admitted_cells(lam, variant)
    rows = set(r for r, s in corners)
    cols = set(s for r, s in corners)
    if reduced:
        cells = [(i, j) for i, j in cells if i in rows and j in cols]

    def keep_row_factor(i):
        return not reduced or i + 1 in rows

    def keep_col_factor(j):
        return not reduced or j + 1 in cols

    lhs = [_complementary_prefactor(lam, variant) +
           [hook_factor(lam, c) for c in cells]]
    rhs = []
    for r, s in corners:
        factors = [hook_factor(lam, (i, j)) for i, j in cells
                   if i != r and j != s]
        factors.extend(
            linear_form(xs(i + 1, r - 1) +
                        ys(s, lam.extended_row_length(i)))
            for i in range(1, r) if keep_row_factor(i)
        )
        factors.extend(
            linear_form(xs(r, lam.extended_col_length(j)) +
                        ys(j + 1, s - 1))
            for j in range(1, s) if keep_col_factor(j)
        )
        rhs.append(factors)
    LOG.debug('Built complementary identity (variant=%r, reduced=%s) for %s: '
              '%d summands' % (variant, reduced, lam, len(rhs)))
    return ProductSum(lhs), ProductSum(rhs)


def cwbr_lhs(lam):
    return complementary_terms(lam)[0].expand()


def cwbr_rhs(lam):
    return complementary_terms(lam)[1].expand()


def cwbr_variant_sides(identity, lam):
    if identity not in (CWBR_X, CWBR_Y, CWBR_XY):
        raise ValueError('Not a complementary variant: %s' % identity)
    lhs, rhs = complementary_terms(lam, _variant(identity))
    return lhs.expand(), rhs.expand()


def y2_reduced_terms(lam):
    return complementary_terms(lam, 'y', reduced=True)


def y2_reduced_sides(lam):
    lhs, rhs = y2_reduced_terms(lam)
    return lhs.expand(), rhs.expand()


def y2_projection_sets(lam):
    """Returns (I, J) of the reduced y identity."""
    corners = _admitted_outer_corners(lam, 'y')
    return (sorted(set(r for r, s in corners)),
            sorted(set(s for r, s in corners)))


# ---------------------------------------------------------- weighted rule
def corner_terms(lam, variant='', reduced=False):
    """Returns (lhs, rhs) ProductSums of the weighted branching formula
    (variant '') or of its x, y and xy variants. With reduced=True cells are
    restricted to corner rows and corner columns and corrective factors are
    kept only for index 1 or when i-1 (resp. j-1) is a corner row (column).
    """
    corners = lam.corners()
    rows = set(r for r, s in corners)
    cols = set(s for r, s in corners)
    cells = [c for c in lam.cells() if c not in corners]
    if reduced:
        cells = [(i, j) for i, j in cells if i in rows and j in cols]
    first_row = 2 if 'y' in variant else 1
    first_col = 2 if 'x' in variant else 1

    def keep_row_factor(i):
        return not reduced or i == 1 or i - 1 in rows

    def keep_col_factor(j):
        return not reduced or j == 1 or j - 1 in cols

    lhs = [_corner_prefactor(lam, variant) +
           [inner_hook_factor(lam, c) for c in cells]]
    rhs = []
    for r, s in corners:
        factors = [inner_hook_factor(lam, (i, j)) for i, j in cells
                   if i != r and j != s]
        factors.extend(
            linear_form(xs(i, r) + ys(s + 1, lam.extended_row_length(i)))
            for i in range(first_row, r + 1) if keep_row_factor(i)
        )
        factors.extend(
            linear_form(xs(r + 1, lam.extended_col_length(j)) + ys(j, s))
            for j in range(first_col, s + 1) if keep_col_factor(j)
        )
        rhs.append(factors)
    LOG.debug('Built corner identity (variant=%r, reduced=%s) for %s: '
              '%d summands' % (variant, reduced, lam, len(rhs)))
    return ProductSum(lhs), ProductSum(rhs)


def wbr_sides(identity, lam):
    if identity not in WBR_FAMILY:
        raise ValueError('Not a weighted branching identity: %s' % identity)
    lhs, rhs = identity_terms(identity, lam)
    return lhs.expand(), rhs.expand()


def reduced_cwbr_sides(identity, lam):
    """Expanded sides of the complementary identity restricted to rows and
    columns of admitted outer corners.
    """
    if identity == Y2_REDUCED:
        identity = CWBR_Y
    if identity not in CWBR_FAMILY:
        raise ValueError('Not a complementary identity: %s' % identity)
    lhs, rhs = complementary_terms(lam, _variant(identity), reduced=True)
    return lhs.expand(), rhs.expand()


def reduced_wbr_sides(identity, mu):
    """Expanded sides of the weighted branching identity restricted to corner
    rows and corner columns.
    """
    if identity not in WBR_FAMILY:
        raise ValueError('Not a weighted branching identity: %s' % identity)
    if identity == WBR_XY and not mu:
        raise ValueError('Identity %s is undefined for the empty partition.'
                         % identity)
    lhs, rhs = corner_terms(mu, _variant(identity), reduced=True)
    return lhs.expand(), rhs.expand()


def identity_terms(identity, lam):
    """Returns (lhs, rhs) ProductSums of given identity."""
    variant = _variant(identity)
    if identity == Y2_REDUCED:
        return y2_reduced_terms(lam)
    if identity in CWBR_FAMILY:
        return complementary_terms(lam, variant)
    if identity == WBR_XY and not lam:
        raise ValueError('Identity %s is undefined for the empty partition.'
                         % identity)
    return corner_terms(lam, variant)


# -------------------------------------------------------------- reporting
class VerificationReport(object):
    """Verdict of a single identity check."""

    def __init__(self, identity, partition, mode, verdict, detail=None):
        self.identity = identity
        self.partition = partition
        self.mode = mode
        self.verdict = verdict
        self.detail = detail or {}

    def __bool__(self):
        return bool(self.verdict)

    def __repr__(self):
        return ('VerificationReport({identity}, {partition}, {mode}, '
                '{verdict})'.format(**self.__dict__))

    def to_dict(self):
        detail = {}
        for key, value in self.detail.items():
            if key == 'failing_point' and value:
                value = dict((polynomials.format_variable(k), str(v))
                             for k, v in value.items())
            elif not isinstance(value, (int, bool, str, type(None), list)):
                value = str(value)
            detail[key] = value
        return {
            'identity': self.identity,
            'partition': str(self.partition),
            'mode': self.mode,
            'verdict': bool(self.verdict),
            'detail': detail,
        }


def check_sides(identity, lam, lhs, rhs, mode=FULL_EXPANSION, trials=None,
                seed=0):
    """Compares given sides in given mode and returns VerificationReport."""
    if mode not in MODES:
        raise ValueError('Unknown verification mode: %s' % mode)
    if mode == FULL_EXPANSION:
        lhs_poly, rhs_poly = lhs.expand(), rhs.expand()
        verdict = lhs_poly == rhs_poly
        detail = {'lhs_terms': len(lhs_poly), 'rhs_terms': len(rhs_poly)}
        if not verdict:
            detail['difference_terms'] = len(lhs_poly - rhs_poly)
    else:
        result = polynomials.equal_by_random_evaluation(
            lhs, rhs, trials=trials, rng_seed=seed
        )
        verdict = result.verdict
        detail = {
            'trials': result.trials,
            'seed': seed,
            'error_bound': result.error_bound,
            'failing_point': result.failing_point,
        }
    LOG.debug('Identity %s for %s in mode %s: %s'
              % (identity, lam, mode, verdict))
    return VerificationReport(identity, lam, mode, verdict, detail)


def _expansion_mode(lam, mode, fallback):
    if mode != FULL_EXPANSION or lam.size <= project.FULL_EXPANSION_MAX_SIZE:
        return mode, None
    fallback = project.EXPANSION_FALLBACK if fallback is None else fallback
    if not fallback:
        raise ValueError(
            'Partition {0} of size {1} exceeds full expansion limit {2}. '
            'Use random_eval mode instead.'.format(
                lam, lam.size, project.FULL_EXPANSION_MAX_SIZE
            )
        )
    LOG.info('Partition %s exceeds full expansion limit, falling back to '
             'random evaluation.' % lam)
    return RANDOM_EVAL, 'size %d exceeds full expansion limit %d' % (
        lam.size, project.FULL_EXPANSION_MAX_SIZE
    )


def verify(identity, lam, mode=FULL_EXPANSION, trials=None, seed=0,
           fallback=None):
    """Verifies given identity for given partition."""
    mode, reason = _expansion_mode(lam, mode, fallback)
    lhs, rhs = identity_terms(identity, lam)
    report = check_sides(identity, lam, lhs, rhs, mode=mode, trials=trials,
                         seed=seed)
    if reason:
        report.detail['fallback'] = reason
    return report


# ---------------------------------------------------- complement reduction
def complement_substitution(a, b):
    """Returns variable mapping x_i -> x_{a+1-i}, y_j -> y_{b+1-j}."""
    mapping = {}
    for i in range(1, a + 1):
        mapping[x(i)] = x(a + 1 - i)
    for j in range(1, b + 1):
        mapping[y(j)] = y(b + 1 - j)
    return mapping


def complement_equivalence_check(lam, identity=CWBR_Y, mode=FULL_EXPANSION,
                                 trials=16, seed=0, fallback=None):
    """Checks that the reduced complementary identity of lambda is the
    reduced corner identity of its complementary partition after reversing
    variable indices. The y identity pairs with the complement in the
    (l+1) x lambda_1 rectangle; cwbr, cwbr-x and cwbr-xy use rectangles
    (l+1, lambda_1+1), (l, lambda_1+1) and (l, lambda_1).
    """
    if not lam:
        raise ValueError('Complement check requires nonempty partition.')
    if identity == Y2_REDUCED:
        identity = CWBR_Y
    if identity not in COMPLEMENT_PAIRS:
        raise ValueError('No complement pairing for identity: %s' % identity)
    mode, reason = _expansion_mode(lam, mode, fallback)
    partner, (da, db) = COMPLEMENT_PAIRS[identity]
    a, b = lam.length + da, lam.first + db
    mu = lam.complement(a, b)
    lam_lhs, lam_rhs = complementary_terms(lam, _variant(identity),
                                           reduced=True)
    mu_lhs, mu_rhs = corner_terms(mu, _variant(partner), reduced=True)
    mapping = complement_substitution(a, b)
    mu_lhs, mu_rhs = mu_lhs.substitute(mapping), mu_rhs.substitute(mapping)
    left = check_sides(identity, lam, lam_lhs, mu_lhs, mode, trials, seed)
    right = check_sides(identity, lam, lam_rhs, mu_rhs, mode, trials, seed)
    detail = {
        'complement': str(mu),
        'rectangle': [a, b],
        'partner': partner,
        'lhs_match': bool(left),
        'rhs_match': bool(right),
    }
    if reason:
        detail['fallback'] = reason
    return VerificationReport(identity, lam, mode, bool(left and right),
                              detail)


# ------------------------------------------------------- all-ones values
def specialize_all_ones(identity, lam):
    """Returns both sides of given identity evaluated at x_i = y_j = 1."""
    lhs, rhs = identity_terms(identity, lam)
    point = dict((var, 1) for var in lhs.variables() | rhs.variables())
    return int(lhs.evaluate(point)), int(rhs.evaluate(point))


def hook_plus_one_product(lam):
    """Returns product of (h+1) over all cells."""
    result = 1
    for hook in lam.hook_lengths():
        result *= hook + 1
    return result


def complementary_hook_sum(lam):
    """Returns sum over outer corners (r,s) of the product of (h+1) over cells
    outside row r and column s times prod_{i<r} h_{is} * prod_{j<s} h_{rj}.
    """
    total = 0
    for r, s in lam.outer_corners():
        term = 1
        for i, j in lam.cells():
            if i != r and j != s:
                term *= lam.hook_length((i, j)) + 1
        for i in range(1, r):
            term *= lam.hook_length((i, s))
        for j in range(1, s):
            term *= lam.hook_length((r, j))
        total += term
    return total


def corner_hook_value(lam):
    """Returns n * prod over non-corner cells of (h-1)."""
    result = lam.size
    corners = lam.corners()
    for cell in lam.cells():
        if cell not in corners:
            result *= lam.hook_length(cell) - 1
    return result
