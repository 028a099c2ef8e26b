# -*- coding: utf-8 -*-

from unittest import TestCase

from hypothesis import given, settings, strategies as st

from branchrule.core import bijection, identities, reports
from branchrule.core.bijection import (ArrangementF, ArrangementG, Label,
                                       phi, phi_inverse)
from branchrule.core.partitions import (Partition, parse_partition,
                                        partitions_of)

from .strategies import partitions


ONE = Partition([1])
LAMBDA = parse_partition('3211')


def arrangement(lam, labels, **kwargs):
    return ArrangementF(lam, dict((cell, Label.parse(label))
                                  for cell, label in labels.items()),
                        **kwargs)


class LabelTestCase(TestCase):

    def test_parse(self):
        """[Bijection] Test label parsing"""
        self.assertEqual(Label.parse('x3'), Label('x', 3))
        self.assertEqual(str(Label('y', 12)), 'y12')
        self.assertEqual(Label.parse(' y5 ').variable(),
                         identities.y(5))
        for token in ('z1', 'x', 'xa', ''):
            self.assertRaises(ValueError, Label.parse, token)


class SinglePartTestCase(TestCase):

    def test_validate(self):
        """[Bijection] Test admissibility of arrangements of a single square"""
        self.assertTrue(bijection.validate_F(arrangement(ONE, {(1, 1): 'x1'})))
        self.assertFalse(bijection.validate_F(arrangement(ONE,
                                                          {(1, 1): 'y2'})))
        self.assertFalse(bijection.validate_F(ArrangementF(ONE, {})))

    def test_walks(self):
        """[Bijection] Test hook walks of a single square"""
        trace = bijection.hook_walk_from_F(arrangement(ONE, {(1, 1): 'x1'}))
        self.assertEqual(list(trace.cells), [(1, 1), (1, 2)])
        self.assertEqual(trace.rows, (1,))
        self.assertEqual(trace.cols, (1, 2))
        trace = bijection.hook_walk_from_F(arrangement(ONE, {(1, 1): 'y1'}))
        self.assertEqual(list(trace.cells), [(1, 1), (2, 1)])

    def test_phi(self):
        """[Bijection] Test both special shifts of a single square"""
        for label, corner in (('x1', (1, 2)), ('y1', (2, 1))):
            F = arrangement(ONE, {(1, 1): label})
            G = phi(F)
            self.assertEqual(G, ArrangementG(ONE, corner,
                                             {(1, 1): Label.parse(label)}))
            self.assertEqual(phi_inverse(G), F)

    def test_counts(self):
        """[Bijection] Test sizes of domain and codomain"""
        self.assertEqual(bijection.count_F(ONE), 2)
        self.assertEqual(bijection.count_G(ONE), 2)
        self.assertEqual(len(list(bijection.enumerate_F(ONE))), 2)
        self.assertEqual(len(list(bijection.enumerate_G(ONE))), 2)
        self.assertEqual(bijection.count_F(parse_partition('22')), 72)
        self.assertEqual(bijection.count_F(LAMBDA), 3360)
        self.assertEqual(bijection.count_G(LAMBDA), 3360)

    def test_invalid(self):
        """[Bijection] Test mapping of inadmissible arrangements"""
        self.assertRaises(ValueError, phi, arrangement(ONE, {(1, 1): 'y2'}))
        G = ArrangementG(ONE, (1, 2), {(1, 1): Label('y', 1)})
        self.assertRaises(ValueError, phi_inverse, G)


class WorkedExampleTestCase(TestCase):

    def setUp(self):
        self.demo = reports.load_demo_arrangement()

    def test_walk(self):
        """[Bijection] Test hook walk of the worked example"""
        F = self.demo.arrangement
        self.assertEqual(self.demo.partition, parse_partition('988666542'))
        self.assertTrue(bijection.validate_F(F))
        trace = bijection.hook_walk_from_F(F)
        self.assertEqual(list(trace.cells),
                         [(1, 1), (4, 1), (4, 3), (4, 5), (7, 5), (7, 6)])
        self.assertEqual(list(trace.cells), self.demo.walk)
        self.assertEqual(trace.rows, (1, 4, 7))
        self.assertEqual(trace.cols, (1, 3, 5, 6))

    def test_relabeling(self):
        """[Bijection] Test intermediate state of the worked example"""
        state = bijection.relabel(self.demo.arrangement)
        self.assertEqual(state.outer_corner, (7, 6))
        self.assertEqual(state.occupants(), [Label('x', 7), Label('y', 6)])
        self.assertIsNone(state.get((7, 1)))
        self.assertIsNone(state.get((1, 6)))
        self.assertEqual(state.get((4, 6)), Label('y', 8))

    def test_phi(self):
        """[Bijection] Test image of the worked example"""
        F = self.demo.arrangement
        G = phi(F)
        self.assertTrue(bijection.validate_G(G))
        self.assertEqual(G, self.demo.image)
        self.assertEqual(G[(7, 1)], Label('y', 2))
        self.assertEqual(G[(1, 6)], Label('x', 2))
        self.assertEqual(bijection.weight(G), bijection.weight(F))

    def test_inverse(self):
        """[Bijection] Test inverse of the worked example"""
        rows, cols, row, column = bijection.read_projections(self.demo.image)
        self.assertEqual(rows, [1, 4, 7])
        self.assertEqual(cols, [1, 3, 5, 6])
        self.assertIsNone(row)
        self.assertIsNone(column)
        self.assertEqual(phi_inverse(self.demo.image), self.demo.arrangement)

    def test_text_format(self):
        """[Bijection] Test text form of arrangements"""
        text = bijection.format_arrangement(self.demo.image)
        self.assertTrue(text.startswith('corner 7 6\nx1 y2 x1'))
        self.assertEqual(bijection.parse_arrangement(text), self.demo.image)
        text = bijection.format_arrangement(self.demo.arrangement)
        self.assertEqual(bijection.parse_arrangement(text),
                         self.demo.arrangement)


class RoundTripTestCase(TestCase):

    def test_small_partitions(self):
        """[Bijection] Test exhaustive round trips up to size 4"""
        for n in range(5):
            for lam in partitions_of(n):
                result = bijection.check_round_trips(lam)
                self.assertEqual(result.passed, result.total, str(lam))
                self.assertEqual(result.images, result.codomain, str(lam))
                self.assertEqual(result.failures, [])

    def test_example_partition(self):
        """[Bijection] Test exhaustive round trips of 3211"""
        result = bijection.check_round_trips(LAMBDA)
        self.assertEqual((result.total, result.passed, result.images),
                         (3360, 3360, 3360))

    def test_weight_sums(self):
        """[Bijection] Test weight sums against both sides of the rule"""
        for lam in map(Partition, [(2, 2), (2, 1), (3,), (1, 1, 1)]):
            self.assertEqual(bijection.weight_sum(bijection.enumerate_F(lam)),
                             identities.cwbr_lhs(lam))
            self.assertEqual(bijection.weight_sum(bijection.enumerate_G(lam)),
                             identities.cwbr_rhs(lam))

    def test_round_trips_up_to_five(self):
        """[Bijection] Test exhaustive round trips of every variant up to 5"""
        for n in range(1, 6):
            for lam in partitions_of(n):
                for variant in bijection.VARIANTS:
                    result = bijection.check_round_trips(lam, variant)
                    message = '%s (%r)' % (lam, variant)
                    self.assertEqual(result.passed, result.total, message)
                    self.assertEqual(result.images, result.codomain, message)
                    self.assertEqual(result.total,
                                     bijection.count_F(lam, variant), message)

    def test_weight_sums_up_to_five(self):
        """[Bijection] Test weight sums of every partition up to 5"""
        for n in range(6):
            for lam in partitions_of(n):
                self.assertEqual(
                    bijection.weight_sum(bijection.enumerate_F(lam)),
                    identities.cwbr_lhs(lam), str(lam)
                )
                self.assertEqual(
                    bijection.weight_sum(bijection.enumerate_G(lam)),
                    identities.cwbr_rhs(lam), str(lam)
                )

    def assert_projections(self, F):
        lam = F.partition
        G = phi(F)
        trace = bijection.hook_walk_from_F(F)
        r, s = G.outer_corner
        for i in range(2, r + 1):
            label = G[(i - 1, s)]
            marked = (label.axis == 'y' and
                      label.index > lam.extended_row_length(i))
            self.assertEqual(marked, i in trace.rows, repr(F))
        for j in range(2, s + 1):
            label = G[(r, j - 1)]
            marked = (label.axis == 'x' and
                      label.index > lam.extended_col_length(j))
            self.assertEqual(marked, j in trace.cols, repr(F))
        rows, cols = bijection.read_projections(G)[:2]
        self.assertEqual(rows, list(trace.rows))
        self.assertEqual(cols, list(trace.cols))

    def test_projection_labels(self):
        """[Bijection] Test labels of the image marking visited rows and
        columns
        """
        for n in range(1, 5):
            for lam in partitions_of(n):
                for F in bijection.enumerate_F(lam):
                    self.assert_projections(F)
        for F in bijection.enumerate_F(LAMBDA):
            self.assert_projections(F)
        self.assert_projections(reports.load_demo_arrangement().arrangement)

    def test_walk_squares(self):
        """[Bijection] Test rows and columns visited by hook walks"""
        lam = parse_partition('321')
        rows = set(r for r, s in lam.outer_corners())
        cols = set(s for r, s in lam.outer_corners())
        for F in bijection.enumerate_F(lam):
            trace = bijection.hook_walk_from_F(F)
            self.assertIn(trace.cells[-1], lam.outer_corners())
            self.assertLessEqual(len(trace.cells) - 1,
                                 lam.length + lam.first)
            for i, j in trace.cells[:-1]:
                self.assertIn(i, rows)
                self.assertIn(j, cols)

    @settings(max_examples=50, deadline=None)
    @given(st.data())
    def test_random_arrangements(self, data):
        """[Bijection] Test round trips of random arrangements"""
        lam = data.draw(partitions(max_size=10))
        labels = dict(
            (cell, data.draw(st.sampled_from(bijection.f_candidates(lam,
                                                                    cell))))
            for cell in lam.cells()
        )
        F = ArrangementF(lam, labels)
        G = phi(F)
        self.assertEqual(G.outer_corner,
                         bijection.hook_walk_from_F(F).cells[-1])
        self.assertEqual(phi_inverse(G), F)
        self.assertEqual(bijection.weight(G), bijection.weight(F))


class VariantTestCase(TestCase):

    def test_zero_step_walk(self):
        """[Bijection] Test x variant starting in an outer corner"""
        F = ArrangementF(ONE, {}, 'x', row=1)
        self.assertEqual(F.start(), (1, 2))
        G = bijection.phi_variant(F, 'x')
        self.assertEqual(G, ArrangementG(ONE, (1, 2), {(1, 1): Label('x', 1)},
                                         'x'))
        self.assertEqual(bijection.phi_variant_inverse(G, 'x'), F)
        self.assertEqual(bijection.weight(G), bijection.weight(F))

    def test_variant_mismatch(self):
        """[Bijection] Test variant checks"""
        F = ArrangementF(ONE, {(1, 1): Label('x', 1)})
        self.assertRaises(ValueError, bijection.phi_variant, F)
        G = phi(F)
        self.assertRaises(ValueError, bijection.phi_variant_inverse, G)
        F = ArrangementF(ONE, {}, 'x', row=1)
        self.assertRaises(ValueError, bijection.phi_variant, F, 'y')

    def test_counts(self):
        """[Bijection] Test sizes of variant domains"""
        self.assertEqual(bijection.count_F(LAMBDA, 'y'), 180)
        self.assertEqual(bijection.count_G(LAMBDA, 'y'), 180)
        for variant, identity in (('x', identities.CWBR_X),
                                  ('xy', identities.CWBR_XY)):
            lhs, rhs = identities.specialize_all_ones(identity, LAMBDA)
            self.assertEqual(bijection.count_F(LAMBDA, variant), lhs)
            self.assertEqual(bijection.count_G(LAMBDA, variant), rhs)
        self.assertEqual(bijection.count_F(parse_partition('22'), 'xy'), 0)

    def test_variant_round_trips(self):
        """[Bijection] Test exhaustive round trips of variants"""
        cases = [(LAMBDA, 'y')] + [
            (lam, variant)
            for lam in map(Partition, [(1,), (2,), (1, 1), (2, 1), (2, 2),
                                       (3, 1)])
            for variant in ('x', 'y', 'xy')
        ]
        for lam, variant in cases:
            result = bijection.check_round_trips(lam, variant)
            message = '%s (%s)' % (lam, variant)
            self.assertEqual(result.passed, result.total, message)
            self.assertEqual(result.images, result.codomain, message)

    def test_variant_weight_sums(self):
        """[Bijection] Test variant weight sums against variant identities"""
        lam = parse_partition('21')
        for variant, identity in (('x', identities.CWBR_X),
                                  ('y', identities.CWBR_Y),
                                  ('xy', identities.CWBR_XY)):
            lhs, rhs = identities.cwbr_variant_sides(identity, lam)
            self.assertEqual(
                bijection.weight_sum(bijection.enumerate_F(lam, variant)), lhs
            )
            self.assertEqual(
                bijection.weight_sum(bijection.enumerate_G(lam, variant)), rhs
            )

