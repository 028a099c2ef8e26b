# -*- coding: utf-8 -*-

import random

from fractions import Fraction
from unittest import TestCase

from branchrule.core import polynomials
from branchrule.core.polynomials import (Monomial, Polynomial, ProductSum,
                                         linear_form, x, y)


X1, X2, Y1 = (Polynomial.variable(x(1)), Polynomial.variable(x(2)),
              Polynomial.variable(y(1)))


class PolynomialTestCase(TestCase):

    def test_arithmetic(self):
        """[Polynomial] Test addition, subtraction and multiplication"""
        square = (X1 + Y1) ** 2
        self.assertEqual(len(square), 3)
        self.assertEqual(square.terms[Monomial([(x(1), 1), (y(1), 1)])], 2)
        self.assertEqual(square - X1 * X1 - Y1 * Y1, 2 * X1 * Y1)
        self.assertTrue((X1 - X1).is_zero())
        self.assertEqual(polynomials.add(X1, 1) - 1, X1)
        self.assertEqual(polynomials.mul(X1, X2), X2 * X1)
        self.assertEqual(polynomials.sub(X1, X1), polynomials.ZERO)
        self.assertEqual(square.total_degree(), 2)

    def test_linear_form(self):
        """[Polynomial] Test linear forms"""
        form = linear_form(polynomials.xs(1, 2) + polynomials.ys(1, 1))
        self.assertEqual(form, X1 + X2 + Y1)
        self.assertEqual(linear_form(polynomials.xs(3, 2)),
                         polynomials.ZERO)
        self.assertEqual(str(form), 'x1 + x2 + y1')

    def test_evaluate(self):
        """[Polynomial] Test exact evaluation"""
        poly = X1 * X1 + 3 * Y1
        point = {x(1): Fraction(1, 2), y(1): 2}
        self.assertEqual(poly.evaluate(point), Fraction(25, 4))
        ones = polynomials.all_ones(poly)
        self.assertEqual(polynomials.evaluate(poly, ones), 4)
        self.assertRaises(ValueError, poly.evaluate, {x(1): 1})

    def test_substitute(self):
        """[Polynomial] Test variable renaming"""
        poly = X1 * Y1 + X2
        renamed = poly.substitute({x(1): x(2), x(2): x(1)})
        self.assertEqual(renamed, X2 * Y1 + X1)

    def test_product_sum(self):
        """[Polynomial] Test unexpanded sums of products"""
        terms = ProductSum([[X1 + Y1, X1 + Y1], [X2]])
        self.assertEqual(terms.expand(), (X1 + Y1) ** 2 + X2)
        point = {x(1): 2, x(2): 5, y(1): 3}
        self.assertEqual(terms.evaluate(point), 30)
        self.assertEqual(terms.total_degree(), 2)
        self.assertEqual(terms.variables(), set([x(1), x(2), y(1)]))
        self.assertEqual(ProductSum().expand(), polynomials.ZERO)
        self.assertEqual(ProductSum([[]]).expand(), Polynomial.constant(1))


class RandomEvaluationTestCase(TestCase):

    def test_equal(self):
        """[Polynomial] Test random evaluation of equal polynomials"""
        lhs = ProductSum([[X1 + Y1, X1 + Y1]])
        rhs = X1 * X1 + 2 * X1 * Y1 + Y1 * Y1
        result = polynomials.equal_by_random_evaluation(lhs, rhs, trials=8,
                                                        rng_seed=3)
        self.assertTrue(result)
        self.assertEqual(result.trials, 8)
        self.assertIsNone(result.failing_point)

    def test_different(self):
        """[Polynomial] Test random evaluation of different polynomials"""
        lhs = (X1 + Y1) ** 2
        rhs = X1 * X1 + Y1 * Y1
        result = polynomials.equal_by_random_evaluation(lhs, rhs, trials=4,
                                                        rng_seed=0)
        self.assertFalse(result)
        point = result.failing_point
        self.assertNotEqual(lhs.evaluate(point), rhs.evaluate(point))

    def test_reproducible(self):
        """[Polynomial] Test seeded evaluation points"""
        variables = [x(1), y(1)]
        first = list(polynomials.random_points(variables, 5, 11))
        second = list(polynomials.random_points(variables, 5, 11))
        self.assertEqual(first, second)
        for point in first:
            self.assertEqual(set(point), set(variables))

    def test_error_bound(self):
        """[Polynomial] Test error bound of random evaluation"""
        self.assertEqual(polynomials.error_bound(2, 8, low=1, high=4),
                         Fraction(1, 256))
        self.assertEqual(polynomials.error_bound(10, 2, low=1, high=4), 1)
        self.assertRaises(ValueError, polynomials.equal_by_random_evaluation,
                          X1, X1, trials=0)


POOL = [x(i) for i in range(1, 7)] + [y(j) for j in range(1, 7)]


def random_polynomial(rng, terms=3):
    result = polynomials.ZERO
    for k in range(rng.randint(1, terms)):
        term = Polynomial.constant(rng.choice([-1, 1]) * rng.randint(1, 5))
        for d in range(rng.randint(0, 4)):
            term = term * Polynomial.variable(rng.choice(POOL))
        result = result + term
    return result


class RingAxiomTestCase(TestCase):

    def test_expansion_and_evaluation_agree(self):
        """[Polynomial] Test both equality checks on ring axioms"""
        unequal = 0
        for seed in range(1000):
            rng = random.Random(seed)
            a, b, c = (random_polynomial(rng) for k in range(3))
            if seed % 3 == 0:
                lhs, rhs = (a * b) * c, a * (b * c)
            elif seed % 3 == 1:
                lhs, rhs = a * (b + c), a * b + a * c
            else:
                lhs, rhs = a * b, b * a + random_polynomial(rng, terms=1)
            expanded = lhs == rhs
            verdict = polynomials.equal_by_random_evaluation(
                lhs, rhs, trials=2, rng_seed=seed
            )
            self.assertEqual(expanded, bool(verdict), seed)
            if seed % 3 == 2:
                unequal += 1
                self.assertFalse(expanded, seed)
            else:
                self.assertTrue(expanded, seed)
        self.assertEqual(unequal, 333)
