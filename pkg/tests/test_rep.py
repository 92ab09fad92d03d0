#!/usr/bin/env python3
"""
Unit tests for the braid group representations.
"""

import os
import sys
import unittest
from pathlib import Path

from hypothesis import given, settings, strategies as st

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))
from src.braids.braid import BraidWord, parse
from src.braids.rep import (
    RepKind,
    basis_change_Pn,
    basis_change_Pn_inverse,
    dimension,
    evaluate,
    generator_image,
    pure_generator,
    quotient_action_checks,
    verify_braid_relations,
    verify_lemma22,
    verify_ybe,
)
from src.core import matrices as mx
from src.core.cyclo import I, ZETA, ZETA_BAR
from src.core.errors import CapExceededError, IndexOutOfRangeError, ParityError
from src.core.linalg import ExactMatrix

SLOW = os.environ.get("BRAIDREP_SLOW_TESTS") == "1"


def words(strands: int, max_len: int = 6):
    letters = st.tuples(st.integers(1, strands - 1), st.sampled_from([1, -1]))
    return st.lists(letters, max_size=max_len).map(lambda ls: BraidWord(strands, tuple(ls)))


class TestRMatrix(unittest.TestCase):
    """The 4x4 solutions of the Yang-Baxter equation."""

    def test_yang_baxter(self):
        self.assertTrue(verify_ybe(mx.R))
        self.assertTrue(verify_ybe(mx.R_PRIME))
        self.assertTrue(verify_ybe())

    def test_non_solution(self):
        self.assertFalse(verify_ybe(mx.S.kron(mx.SIGMA_X).scale(I) + mx.I4))

    def test_r_prime_is_a_phase_of_r(self):
        self.assertEqual(mx.R_PRIME, mx.R.scale(-ZETA_BAR))
        self.assertEqual(mx.R_PRIME @ mx.R_PRIME, (mx.R @ mx.R).scale(-I))


class TestGeneratorImages(unittest.TestCase):
    """Images of single generators."""

    def test_dimensions(self):
        self.assertEqual(dimension(RepKind.PI, 5), 32)
        self.assertEqual(dimension(RepKind.PI_PRIME, 3), 8)
        self.assertEqual(dimension(RepKind.RHO1_HAT, 5), 4)
        self.assertEqual(dimension(RepKind.LAMBDA_HAT, 4), 4)
        self.assertEqual(dimension(RepKind.JONES4, 3), 2)

    def test_pi_generator_is_placed_r(self):
        self.assertEqual(generator_image(RepKind.PI, 2, 1), mx.R)
        self.assertEqual(generator_image(RepKind.PI, 3, 2), mx.I2.kron(mx.R))
        self.assertEqual(generator_image(RepKind.PI, 3, 1, -1) @ generator_image(RepKind.PI, 3, 1),
                         ExactMatrix.identity(8))

    def test_sector_blocks(self):
        self.assertEqual(generator_image(RepKind.RHO1_HAT, 3, 1), mx.D2)
        self.assertEqual(generator_image(RepKind.RHO1_HAT, 3, 2), mx.M)
        self.assertEqual(generator_image(RepKind.LAMBDA_HAT, 4, 3), mx.D4)
        self.assertEqual(generator_image(RepKind.JONES4, 3, 1), mx.D2.scale(-ZETA_BAR))
        self.assertEqual(mx.D2, ExactMatrix.diag([ZETA, ZETA_BAR]))

    def test_parity_errors(self):
        with self.assertRaises(ParityError):
            generator_image(RepKind.RHO1_HAT, 4, 1)
        with self.assertRaises(ParityError):
            generator_image(RepKind.LAMBDA_HAT, 3, 1)

    def test_range_errors(self):
        with self.assertRaises(IndexOutOfRangeError):
            generator_image(RepKind.PI, 3, 3)
        with self.assertRaises(IndexOutOfRangeError):
            generator_image(RepKind.PI, 3, 0)
        with self.assertRaises(CapExceededError):
            generator_image(RepKind.PI, 11, 1)

    def test_pure_generators(self):
        g = pure_generator(2, 1)
        self.assertEqual(g, mx.S.kron(mx.SIGMA_X))
        self.assertEqual(g @ g, -mx.I4)
        self.assertEqual(pure_generator(3, 1, RepKind.PI_PRIME), pure_generator(3, 1).scale(-I))


class TestEvaluate(unittest.TestCase):
    """Images of whole words."""

    def test_empty_word(self):
        self.assertEqual(evaluate(RepKind.PI, BraidWord(3)), ExactMatrix.identity(8))
        self.assertEqual(evaluate(RepKind.LAMBDA_HAT, BraidWord(4)), ExactMatrix.identity(4))

    def test_left_to_right_product(self):
        w = parse("s1 s2^-1", 3)
        expected = generator_image(RepKind.PI, 3, 1) @ generator_image(RepKind.PI, 3, 2, -1)
        self.assertEqual(evaluate(RepKind.PI, w), expected)

    def test_order_of_sigma(self):
        self.assertEqual(evaluate(RepKind.PI, parse("s1 " * 8, 2)), mx.I4)
        self.assertEqual(evaluate(RepKind.PI, parse("s1 " * 4, 2)), -mx.I4)

    @settings(max_examples=25, deadline=None)
    @given(words(3))
    def test_inverse_word(self, w):
        for kind in (RepKind.PI, RepKind.RHO1_HAT, RepKind.JONES4):
            product = evaluate(kind, w) @ evaluate(kind, w.inverse())
            self.assertTrue(product.is_identity())

    @settings(max_examples=25, deadline=None)
    @given(words(4), words(4))
    def test_homomorphism(self, w, v):
        for kind in (RepKind.PI_PRIME, RepKind.LAMBDA_HAT):
            self.assertEqual(evaluate(kind, w * v), evaluate(kind, w) @ evaluate(kind, v))


class TestSectorTraces(unittest.TestCase):
    """pi_n is a multiple of its irreducible sector."""

    @settings(max_examples=35, deadline=None)
    @given(st.sampled_from([3, 5, 7]).flatmap(words))
    def test_odd_strands(self, w):
        k = (w.strands - 1) // 2
        self.assertEqual(
            evaluate(RepKind.PI, w).trace(),
            evaluate(RepKind.RHO1_HAT, w).trace() * (1 << (k + 1)),
        )

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from([2, 4, 6]).flatmap(words))
    def test_even_strands(self, w):
        k = w.strands // 2
        self.assertEqual(
            evaluate(RepKind.PI, w).trace(),
            evaluate(RepKind.LAMBDA_HAT, w).trace() * (1 << k),
        )


class TestBraidRelations(unittest.TestCase):
    """Far commutation, braid relation, inverses and unitarity."""

    def test_pi(self):
        for n in (2, 3, 4, 5):
            with self.subTest(n=n):
                self.assertTrue(verify_braid_relations(RepKind.PI, n)["passed"])

    def test_pi_prime(self):
        for n in (3, 4):
            with self.subTest(n=n):
                self.assertTrue(verify_braid_relations(RepKind.PI_PRIME, n)["passed"])

    def test_sector_models(self):
        cases = [
            (RepKind.RHO1_HAT, 3), (RepKind.RHO1_HAT, 5), (RepKind.RHO1_HAT, 7),
            (RepKind.LAMBDA_HAT, 2), (RepKind.LAMBDA_HAT, 4), (RepKind.LAMBDA_HAT, 6),
            (RepKind.JONES4, 3), (RepKind.JONES4, 4), (RepKind.JONES4, 6),
        ]
        for kind, n in cases:
            with self.subTest(kind=kind.value, n=n):
                report = verify_braid_relations(kind, n)
                self.assertTrue(report["passed"], report)


class TestIdentities(unittest.TestCase):
    """Matrix identities behind the pure braid image."""

    def test_small_n(self):
        for n in (2, 3, 4):
            with self.subTest(n=n):
                report = verify_lemma22(n)
                self.assertTrue(report["passed"], report)
                self.assertEqual(report["extra_checks"]["generator_from_pure"]["status"], "pass")

    def test_skipped_clauses(self):
        report = verify_lemma22(2)
        self.assertEqual(report["clauses"]["c"]["status"], "skipped")
        self.assertEqual(report["clauses"]["g"]["status"], "skipped")
        self.assertEqual(report["clauses"]["k"]["status"], "pass")

    @unittest.skipUnless(SLOW, "set BRAIDREP_SLOW_TESTS=1")
    def test_up_to_six(self):
        for n in (5, 6):
            with self.subTest(n=n):
                self.assertTrue(verify_lemma22(n)["passed"])

    def test_basis_change_inverse(self):
        for n in (2, 3, 4):
            with self.subTest(n=n):
                self.assertTrue((basis_change_Pn(n) @ basis_change_Pn_inverse(n)).is_identity())

    def test_range(self):
        with self.assertRaises(IndexOutOfRangeError):
            verify_lemma22(1)
        with self.assertRaises(CapExceededError):
            verify_lemma22(9)


class TestQuotientAction(unittest.TestCase):
    """Conjugation by lifts of 3-cycles and double transpositions."""

    def test_three_strands(self):
        report = quotient_action_checks(3)
        self.assertTrue(report["passed"])
        self.assertTrue(report["three_cycle"]["maps_g2_to_pm_g1"])
        self.assertNotIn("double_transposition", report)

    def test_four_strands(self):
        report = quotient_action_checks(4)
        self.assertTrue(report["passed"])
        self.assertFalse(report["double_transposition"]["g1g3_is_scalar"])

    def test_needs_three_strands(self):
        with self.assertRaises(IndexOutOfRangeError):
            quotient_action_checks(2)


if __name__ == "__main__":
    unittest.main()
