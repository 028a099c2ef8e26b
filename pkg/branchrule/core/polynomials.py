# -*- coding: utf-8 -*-

"""Exact sparse polynomials in commuting variables x_i, y_j.

Polynomial keeps a map Monomial -> nonzero integer coefficient. ProductSum
keeps a sum of products of polynomial factors without expanding it and
shares the evaluation interface with Polynomial, which lets identities be
tested by random evaluation long after full expansion becomes infeasible.
"""

import collections
import itertools
import logging
import random

from fractions import Fraction

from ..conf import project


LOG = logging.getLogger('branchrule.backend')


Variable = collections.namedtuple('Variable', ['axis', 'index'])


def x(index):
    return Variable('x', index)


def y(index):
    return Variable('y', index)


def xs(start, stop):
    """Returns variables x_start .. x_stop, empty when start > stop."""
    return [x(i) for i in range(start, stop + 1)]


def ys(start, stop):
    """Returns variables y_start .. y_stop, empty when start > stop."""
    return [y(j) for j in range(start, stop + 1)]


def format_variable(var):
    if var.index < 0:
        return '{0}({1})'.format(var.axis, var.index)
    return '{0}{1}'.format(var.axis, var.index)


class Monomial(tuple):
    """Canonical monomial: sorted tuple of (Variable, positive exponent)."""

    __slots__ = ()

    def __new__(cls, powers=()):
        if isinstance(powers, dict):
            powers = powers.items()
        merged = {}
        for var, exp in powers:
            if exp < 0:
                raise ValueError('Negative exponent of %s' % (var,))
            merged[var] = merged.get(var, 0) + exp
        return super(Monomial, cls).__new__(
            cls, sorted((v, e) for v, e in merged.items() if e)
        )

    @classmethod
    def from_variables(cls, variables):
        """Returns product of given variables (repetitions allowed)."""
        return cls(collections.Counter(variables))

    def degree(self):
        return sum(exp for var, exp in self)

    def __mul__(self, other):
        return Monomial(itertools.chain(self, other))

    def exponents(self):
        return dict(self)

    def __str__(self):
        if not self:
            return '1'
        return '*'.join(
            format_variable(var) + ('^%d' % exp if exp > 1 else '')
            for var, exp in self
        )


ONE = Monomial()


class Polynomial(object):
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        self._terms = {}
        for mono, coeff in (terms or {}).items():
            if not isinstance(mono, Monomial):
                mono = Monomial(mono)
            coeff = self._terms.get(mono, 0) + coeff
            if coeff:
                self._terms[mono] = coeff
            else:
                self._terms.pop(mono, None)

    @classmethod
    def constant(cls, value):
        return cls({ONE: value})

    @classmethod
    def variable(cls, var):
        return cls({Monomial([(var, 1)]): 1})

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def variables(self):
        return set(var for mono in self._terms for var, exp in mono)

    def total_degree(self):
        return max([mono.degree() for mono in self._terms] or [0])

    # ----------------------------------------------------------- arithmetic
    @staticmethod
    def _coerce(other):
        if isinstance(other, (Polynomial, ProductSum)):
            return other if isinstance(other, Polynomial) else other.expand()
        if isinstance(other, int):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            terms[mono] = terms.get(mono, 0) + coeff
        return Polynomial(terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(dict((m, -c) for m, c in self._terms.items()))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for mono1, coeff1 in self._terms.items():
            for mono2, coeff2 in other._terms.items():
                mono = mono1 * mono2
                terms[mono] = terms.get(mono, 0) + coeff1 * coeff2
        return Polynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        result = Polynomial.constant(1)
        for i in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # ----------------------------------------------------------- evaluation
    def evaluate(self, assignment):
        """Returns exact value of the polynomial at given point. Assignment
        maps Variable to int or Fraction.
        """
        total = 0
        for mono, coeff in self._terms.items():
            value = coeff
            for var, exp in mono:
                try:
                    base = assignment[var]
                except KeyError:
                    raise ValueError(
                        'Missing value for variable {0}.'.format(
                            format_variable(var)
                        )
                    )
                value *= base if exp == 1 else base ** exp
            total += value
        return total

    def substitute(self, mapping):
        """Returns polynomial with variables renamed by given mapping.
        Variables missing in the mapping are kept.
        """
        terms = {}
        for mono, coeff in self._terms.items():
            renamed = Monomial((mapping.get(var, var), exp)
                               for var, exp in mono)
            terms[renamed] = terms.get(renamed, 0) + coeff
        return Polynomial(terms)

    def __repr__(self):
        return 'Polynomial({!r})'.format(str(self))

    def __str__(self):
        if not self._terms:
            return '0'
        chunks = []
        for mono, coeff in sorted(self._terms.items()):
            sign = '-' if coeff < 0 else '+'
            coeff = abs(coeff)
            if not mono:
                body = str(coeff)
            elif coeff == 1:
                body = str(mono)
            else:
                body = '{0}*{1}'.format(coeff, mono)
            if not chunks:
                chunks.append(body if sign == '+' else '-' + body)
            else:
                chunks.append('{0} {1}'.format(sign, body))
        return ' '.join(chunks)


ZERO = Polynomial()


class ProductSum(object):
    """Unexpanded sum of products of polynomial factors. An empty product
    is 1 and an empty sum is 0.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms=()):
        self._terms = tuple(tuple(factors) for factors in terms)

    @property
    def terms(self):
        return self._terms

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        return ProductSum(self._terms + other.terms)

    def variables(self):
        return set(var for factors in self._terms for factor in factors
                   for var in factor.variables())

    def total_degree(self):
        return max([sum(f.total_degree() for f in factors)
                    for factors in self._terms] or [0])

    def expand(self):
        result = ZERO
        for factors in self._terms:
            result = result + product(factors)
        return result

    def evaluate(self, assignment):
        total = 0
        for factors in self._terms:
            value = 1
            for factor in factors:
                value *= factor.evaluate(assignment)
                if not value:
                    break
            total += value
        return total

    def substitute(self, mapping):
        return ProductSum(
            [f.substitute(mapping) for f in factors]
            for factors in self._terms
        )

    def __str__(self):
        chunks = []
        for factors in self._terms:
            chunks.append('*'.join('({})'.format(f) for f in factors) or '1')
        return ' + '.join(chunks) or '0'


def add(p, q):
    return p + q


def sub(p, q):
    return p - q


def mul(p, q):
    return p * q


def product(factors):
    result = Polynomial.constant(1)
    for factor in factors:
        result = result * factor
        if result.is_zero():
            break
    return result


def linear_form(variables):
    """Returns sum of given variables, each with coefficient 1."""
    return Polynomial(dict((Monomial([(var, 1)]), 1) for var in variables))


def evaluate(p, assignment):
    return p.evaluate(assignment)


def all_ones(p):
    """Returns assignment mapping every variable of p to 1."""
    return dict((var, 1) for var in p.variables())


class EvaluationVerdict(object):
    """Result of a randomized equality test. Evaluates to the verdict in
    boolean context; error_bound bounds the probability that a true verdict
    is wrong.
    """

    def __init__(self, verdict, trials, error_bound, failing_point=None):
        self.verdict = verdict
        self.trials = trials
        self.error_bound = error_bound
        self.failing_point = failing_point

    def __bool__(self):
        return self.verdict

    def __repr__(self):
        return 'EvaluationVerdict({0}, trials={1}, error_bound={2})'.format(
            self.verdict, self.trials, self.error_bound
        )


def random_points(variables, trials, rng_seed, low=None, high=None):
    """Yields `trials` random integer points covering given variables."""
    low = project.RANDOM_EVAL_LOW if low is None else low
    high = project.RANDOM_EVAL_HIGH if high is None else high
    rng = random.Random(rng_seed)
    variables = sorted(variables)
    for trial in range(trials):
        yield dict((var, rng.randint(low, high)) for var in variables)


def error_bound(degree, trials, low=None, high=None):
    """Returns (degree / sample-space size) ** trials, capped at 1."""
    low = project.RANDOM_EVAL_LOW if low is None else low
    high = project.RANDOM_EVAL_HIGH if high is None else high
    single = min(Fraction(degree, high - low + 1), Fraction(1))
    return single ** trials


def equal_by_random_evaluation(p, q, trials=None, rng_seed=0,
                               low=None, high=None):
    """Compares p and q at random integer points. Both arguments can be
    Polynomial or ProductSum objects.
    """
    trials = project.RANDOM_EVAL_TRIALS if trials is None else trials
    if trials < 1:
        raise ValueError('At least one evaluation trial is required.')
    degree = max(p.total_degree(), q.total_degree())
    bound = error_bound(degree, trials, low=low, high=high)
    variables = p.variables() | q.variables()
    for point in random_points(variables, trials, rng_seed, low, high):
        if p.evaluate(point) != q.evaluate(point):
            LOG.debug('Random evaluation mismatch at %s' % point)
            return EvaluationVerdict(False, trials, bound, point)
    return EvaluationVerdict(True, trials, bound)
