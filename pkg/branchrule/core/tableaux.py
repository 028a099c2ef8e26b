# -*- coding: utf-8 -*-

"""Numbers of standard Young tableaux and the recursions they satisfy."""

import collections
import logging
import math

from fractions import Fraction

from .partitions import partitions_of


LOG = logging.getLogger('branchrule.backend')


def syt_count(lam):
    """Returns f^lambda = n! / prod of hook lengths."""
    denominator = 1
    for hook in lam.hook_lengths():
        denominator *= hook
    return math.factorial(lam.size) // denominator


def iter_standard_tableaux(lam):
    """Yields standard Young tableaux of given shape as tuples of rows.
    Entries 1..n are placed one by one into squares whose upper and left
    neighbours are already filled.
    """
    parts = list(lam)
    rows = [[] for part in parts]

    def _fill(value):
        if value > lam.size:
            yield tuple(tuple(row) for row in rows)
            return
        for i, row in enumerate(rows):
            if len(row) < parts[i] and (not i or len(rows[i - 1]) > len(row)):
                row.append(value)
                for tableau in _fill(value + 1):
                    yield tableau
                row.pop()

    return _fill(1)


def count_syt_by_enumeration(lam):
    return sum(1 for tableau in iter_standard_tableaux(lam))


def check_removal_recursion(lam):
    """Checks f^lambda = sum of f^(lambda-c) over corners c."""
    if not lam:
        return True
    return syt_count(lam) == sum(syt_count(lam.remove_cell(c))
                                 for c in lam.corners())


def check_addition_recursion(lam):
    """Checks (n+1) f^lambda = sum of f^(lambda+c) over outer corners c."""
    return (lam.size + 1) * syt_count(lam) == sum(
        syt_count(lam.add_cell(c)) for c in lam.outer_corners()
    )


class RecursionCheck(object):
    """Verdict of one recursion. Skipped checks carry reason and evaluate
    to True.
    """

    def __init__(self, name, region, lhs=None, rhs=None, holds=None,
                 reason=None):
        self.name = name
        self.region = region
        self.lhs = lhs
        self.rhs = rhs
        self.holds = holds
        self.reason = reason

    @property
    def skipped(self):
        return self.reason is not None

    def __bool__(self):
        return self.skipped or bool(self.holds)

    def __repr__(self):
        if self.skipped:
            return 'RecursionCheck({0}, skipped: {1})'.format(self.name,
                                                              self.reason)
        return 'RecursionCheck({0}, {1} == {2}: {3})'.format(
            self.name, self.lhs, self.rhs, self.holds
        )

    def to_dict(self):
        return {
            'name': self.name, 'region': self.region,
            'lhs': None if self.lhs is None else str(self.lhs),
            'rhs': None if self.rhs is None else str(self.rhs),
            'holds': self.holds, 'skipped': self.skipped,
            'reason': self.reason,
        }


def _lcm(numbers):
    result = 1
    for number in numbers:
        result = result * number // math.gcd(result, number)
    return result


def _corner_recursion(lam, name, region, weight, normalizer):
    """Checks normalizer * f = n * sum f^(lambda-c) / weight(c) both in
    rational form and in integer form with cleared denominators.
    """
    if not lam:
        return RecursionCheck(name, region,
                              reason='the empty partition has no corners')
    f = syt_count(lam)
    terms = [(syt_count(lam.remove_cell(c)), weight(c))
             for c in lam.corners()]
    rational = lam.size * sum(Fraction(g, w) for g, w in terms)
    scale = _lcm(w for g, w in terms)
    lhs = normalizer * f * scale
    rhs = lam.size * sum(g * (scale // w) for g, w in terms)
    return RecursionCheck(name, region, lhs, rhs,
                          holds=(lhs == rhs and rational == normalizer * f))


def _outer_recursion(lam, name, region, weight, normalizer):
    """Checks (n+1) * normalizer * f = sum weight(c) f^(lambda+c)."""
    lhs = (lam.size + 1) * normalizer * syt_count(lam)
    rhs = sum(weight(c) * syt_count(lam.add_cell(c))
              for c in lam.outer_corners())
    return RecursionCheck(name, region, lhs, rhs, holds=(lhs == rhs))


def check_new_recursions(lam):
    """Returns list of RecursionCheck of the six recursions obtained from
    equal-weight walks started in regions R2-R7.
    """
    n, length, first = lam.size, lam.length, lam.first

    def _down(c):
        return length - c.row + c.col

    def _up(c):
        return first + c.row - c.col

    result = [
        _corner_recursion(lam, 'l*f = n*sum f(-c)/(l-r+s)', 'R2',
                          _down, length),
        _corner_recursion(lam, 'lambda_1*f = n*sum f(-c)/(lambda_1+r-s)',
                          'R3', _up, first),
        _corner_recursion(lam, 'f = n*sum f(-c)/((l-r+s)(lambda_1+r-s))',
                          'R4', lambda c: _down(c) * _up(c), 1),
    ]
    name = '(n+1)(l*lambda_1-n)f = sum (l-r+s)(lambda_1+r-s)f(+c)'
    if length * first == n:
        result.append(RecursionCheck(
            name, 'R5', reason='region R5 is empty for rectangular shapes'
        ))
    else:
        result.append(_outer_recursion(
            lam, name, 'R5', lambda c: _down(c) * _up(c), length * first - n
        ))
    result.append(_outer_recursion(
        lam, '(n+1)*l*f = sum (l-r+s)f(+c)', 'R6', _down, length
    ))
    result.append(_outer_recursion(
        lam, '(n+1)*lambda_1*f = sum (lambda_1+r-s)f(+c)', 'R7', _up, first
    ))
    LOG.debug('New recursions for %s: %s' % (lam, result))
    return result


def sum_squares(n):
    """Returns sum of (f^lambda)^2 over partitions of n."""
    return sum(syt_count(lam) ** 2 for lam in partitions_of(n))


def check_sum_squares(n):
    if n < 0:
        raise ValueError('Cannot partition negative number: %s' % n)
    return sum_squares(n) == math.factorial(n)


ContentRow = collections.namedtuple(
    'ContentRow', ['outer_corner', 'content', 'count', 'probability']
)


class ContentStats(object):
    """Distribution of the content r-s of the square added to lambda by
    Robinson-Schensted insertion of a uniformly chosen value.
    """

    def __init__(self, partition, table):
        self.partition = partition
        self.table = table
        self.mean = sum((row.content * row.probability for row in table),
                        Fraction(0))
        self.variance = sum(
            (row.content ** 2 * row.probability for row in table),
            Fraction(0)
        ) - self.mean ** 2

    def total(self):
        return sum((row.probability for row in self.table), Fraction(0))

    def to_dict(self):
        return {
            'partition': str(self.partition),
            'mean': str(self.mean),
            'variance': str(self.variance),
            'table': [
                {'outer_corner': list(row.outer_corner),
                 'content': row.content, 'count': row.count,
                 'probability': str(row.probability)}
                for row in self.table
            ],
        }


def content_statistics(lam):
    """Returns ContentStats of lambda. Contents are stored as r-s."""
    f = syt_count(lam)
    table = []
    for corner in lam.outer_corners():
        count = syt_count(lam.add_cell(corner))
        table.append(ContentRow(corner, corner.row - corner.col, count,
                                Fraction(count, (lam.size + 1) * f)))
    return ContentStats(lam, table)
