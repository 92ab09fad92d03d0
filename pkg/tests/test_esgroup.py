#!/usr/bin/env python3
"""
Unit tests for the extraspecial 2-groups E_m^nu.
"""

import os
import sys
import unittest
from pathlib import Path

from hypothesis import given, settings, strategies as st

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))
from src.core.errors import IndexOutOfRangeError, ParameterMismatchError, ParityError
from src.groups.esgroup import (
    Z4,
    Z2xZ2,
    ESElement,
    ExtraspecialGroup,
    center,
    center_structure,
    class_count_closed_form,
    conjugacy_classes,
    is_extraspecial,
    structure_report,
)


SLOW = os.environ.get("BRAIDREP_SLOW_TESTS") == "1"


def elements(m: int, nu: int):
    return st.builds(ESElement, st.just(m), st.just(nu),
                     st.integers(0, (1 << m) - 1), st.sampled_from([1, -1]))


class TestMultiplication(unittest.TestCase):
    """Normal-form products."""

    def setUp(self):
        self.group = ExtraspecialGroup(4, -1)
        self.x = {i: self.group.generator(i) for i in range(1, 5)}

    def test_squares(self):
        for i, x in self.x.items():
            self.assertEqual(x * x, self.group.minus_one())
        positive = ExtraspecialGroup(4, 1)
        self.assertEqual(positive.generator(2) * positive.generator(2), positive.identity())

    def test_neighbours_anticommute(self):
        self.assertEqual(self.x[2] * self.x[1], -(self.x[1] * self.x[2]))
        self.assertEqual(self.x[3] * self.x[1], self.x[1] * self.x[3])
        self.assertEqual(self.x[4] * self.x[1], self.x[1] * self.x[4])

    def test_normal_form_text(self):
        self.assertEqual(str(self.x[1] * self.x[3]), "x1*x3")
        self.assertEqual(str(self.x[2] * self.x[1]), "-x1*x2")
        self.assertEqual(str(self.group.identity()), "1")
        self.assertEqual(str(self.group.minus_one()), "-1")

    def test_orders(self):
        self.assertEqual(self.x[1].order(), 4)
        self.assertEqual(self.group.minus_one().order(), 2)
        self.assertEqual(ExtraspecialGroup(3, 1).generator(1).order(), 2)

    def test_mismatched_groups(self):
        with self.assertRaises(ParameterMismatchError):
            ExtraspecialGroup(3, -1).generator(1) * ExtraspecialGroup(4, -1).generator(1)
        with self.assertRaises(ParameterMismatchError):
            ExtraspecialGroup(3, -1).generator(1) * ExtraspecialGroup(3, 1).generator(1)

    def test_invalid_elements(self):
        with self.assertRaises(IndexOutOfRangeError):
            ESElement(2, -1, 4)
        with self.assertRaises(IndexOutOfRangeError):
            self.group.generator(5)
        with self.assertRaises(ValueError):
            ExtraspecialGroup(2, 0)

    @settings(max_examples=60, deadline=None)
    @given(elements(5, -1), elements(5, -1), elements(5, -1))
    def test_associative(self, a, b, c):
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertTrue((a * a.inverse()).is_identity())

    @settings(max_examples=60, deadline=None)
    @given(elements(5, 1), elements(5, 1))
    def test_commutators_are_central(self, a, b):
        commutator = a.inverse() * b.inverse() * a * b
        self.assertEqual(commutator.alpha, 0)


class TestStructure(unittest.TestCase):
    """Centers, classes and the extraspecial property."""

    def test_order(self):
        group = ExtraspecialGroup(3, -1)
        self.assertEqual(group.order, 16)
        self.assertEqual(len(set(group.elements())), 16)

    def test_center_even_rank(self):
        group = ExtraspecialGroup(2, -1)
        self.assertEqual(set(group.center()), {group.identity(), group.minus_one()})

    def test_center_odd_rank(self):
        group = ExtraspecialGroup(3, 1)
        z = group.z()
        self.assertEqual(str(z), "x1*x3")
        self.assertEqual(set(group.center()), {group.identity(), group.minus_one(), z, -z})

    def test_center_structure(self):
        self.assertEqual(center_structure(1, -1), Z4)
        self.assertEqual(center_structure(3, -1), Z2xZ2)
        self.assertEqual(center_structure(5, -1), Z4)
        for m in (1, 3, 5):
            self.assertEqual(center_structure(m, 1), Z2xZ2)
        with self.assertRaises(ParityError):
            center_structure(2, -1)

    def test_class_counts(self):
        for m in range(1, 7):
            for nu in (-1, 1):
                with self.subTest(m=m, nu=nu):
                    self.assertEqual(len(conjugacy_classes(m, nu)), class_count_closed_form(m))
        self.assertEqual(class_count_closed_form(3), 10)
        self.assertEqual(class_count_closed_form(2), 5)

    @unittest.skipUnless(SLOW, "set BRAIDREP_SLOW_TESTS=1")
    def test_class_count_rank_thirteen(self):
        self.assertEqual(len(conjugacy_classes(13, -1)), (1 << 13) + 2)

    def test_classes_partition_group(self):
        classes = conjugacy_classes(4, -1)
        members = [g for cls in classes for g in cls]
        self.assertEqual(len(members), 32)
        self.assertEqual(len(set(members)), 32)
        self.assertTrue(all(len(cls) in (1, 2) for cls in classes))

    def test_abelian_rank_one(self):
        self.assertTrue(structure_report(1, -1)["commutator_subgroup_matches"])
        self.assertEqual(len(ExtraspecialGroup(1, -1).commutator_subgroup()), 1)

    def test_extraspecial(self):
        self.assertTrue(is_extraspecial(2, -1))
        self.assertTrue(is_extraspecial(4, 1))
        # odd rank: the center has order 4
        self.assertFalse(is_extraspecial(3, -1))

    def test_noncentral_conjugate_to_negative(self):
        for m in (5, 6):
            for nu in (-1, 1):
                with self.subTest(m=m, nu=nu):
                    center_set = set(center(m, nu))
                    for cls in conjugacy_classes(m, nu):
                        if cls[0] not in center_set:
                            self.assertEqual(len(cls), 2)
                            self.assertIn(-cls[0], cls)

    @unittest.skipUnless(SLOW, "set BRAIDREP_SLOW_TESTS=1")
    def test_noncentral_conjugate_to_negative_up_to_nine(self):
        for m in (7, 8, 9):
            for nu in (-1, 1):
                with self.subTest(m=m, nu=nu):
                    self.assertTrue(structure_report(m, nu)["noncentral_conjugate_to_negative"])

    @unittest.skipUnless(SLOW, "set BRAIDREP_SLOW_TESTS=1")
    def test_order_and_center_up_to_thirteen(self):
        for m in range(1, 14):
            for nu in (-1, 1):
                with self.subTest(m=m, nu=nu):
                    group = ExtraspecialGroup(m, nu)
                    self.assertEqual(len(set(group.elements())), 1 << (m + 1))
                    expected = {group.identity(), group.minus_one()}
                    if m % 2:
                        expected |= {group.z(), -group.z()}
                    self.assertEqual(set(center(m, nu)), expected)

    def test_structure_report(self):
        for m, nu in ((3, -1), (4, 1)):
            with self.subTest(m=m, nu=nu):
                report = structure_report(m, nu)
                self.assertEqual(report["order"], report["expected_order"])
                self.assertTrue(report["center_matches"])
                self.assertEqual(report["class_count"], report["class_count_closed_form"])
                self.assertTrue(report["noncentral_conjugate_to_negative"])
                self.assertTrue(report["normal_subgroups_meet_center"])
                self.assertTrue(report["commutator_subgroup_matches"])


if __name__ == "__main__":
    unittest.main()
