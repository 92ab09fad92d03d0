#!/usr/bin/env python3
"""
Unit tests for braid words, parsing and permutations.
"""

import sys
import unittest
from pathlib import Path

from hypothesis import given, settings, strategies as st

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))
from src.braids.braid import (
    BraidWord,
    Permutation,
    closure_components,
    exponent_sum,
    parse,
    permutation,
)
from src.core.errors import BraidSyntaxError, IndexOutOfRangeError


def words(strands: int, max_len: int = 8):
    letters = st.tuples(st.integers(1, strands - 1), st.sampled_from([1, -1]))
    return st.lists(letters, max_size=max_len).map(lambda ls: BraidWord(strands, tuple(ls)))


class TestParse(unittest.TestCase):
    """Braid word grammar."""

    def test_letters(self):
        w = parse("s1 s2^-1  s1", 3)
        self.assertEqual(w.letters, ((1, 1), (2, -1), (1, 1)))
        self.assertEqual(str(w), "s1 s2^-1 s1")
        self.assertEqual(w.to_ints(), [1, -2, 1])

    def test_empty_word(self):
        w = parse("   ", 4)
        self.assertEqual(len(w), 0)
        self.assertEqual(w.strands, 4)
        self.assertEqual(str(w), "")

    def test_multi_digit_index(self):
        self.assertEqual(parse("s10", 11).letters, ((10, 1),))

    def test_malformed_tokens(self):
        for text in ("s0", "x1", "s1^2", "s-1", "s1^-", "s01", "s1s2"):
            with self.subTest(text=text):
                with self.assertRaises(BraidSyntaxError):
                    parse(text, 3)

    def test_index_out_of_range(self):
        with self.assertRaises(IndexOutOfRangeError):
            parse("s3", 3)
        with self.assertRaises(IndexOutOfRangeError):
            BraidWord(1)

    def test_from_ints(self):
        self.assertEqual(BraidWord.from_ints(3, [1, -2]), parse("s1 s2^-1", 3))


class TestWordOperations(unittest.TestCase):
    """Concatenation, inverse and exponent sums."""

    def test_concatenation(self):
        w = parse("s1", 3) * parse("s2^-1", 3)
        self.assertEqual(w, parse("s1 s2^-1", 3))
        with self.assertRaises(IndexOutOfRangeError):
            parse("s1", 3) * parse("s1", 4)

    def test_inverse(self):
        self.assertEqual(parse("s1 s2^-1", 3).inverse(), parse("s2 s1^-1", 3))

    def test_exponent_sum(self):
        self.assertEqual(exponent_sum(parse("s1 s1 s2^-1", 3)), 1)
        self.assertEqual(exponent_sum(parse("", 3)), 0)

    def test_with_strands(self):
        self.assertEqual(parse("s1", 2).with_strands(4).strands, 4)


class TestPermutation(unittest.TestCase):
    """Images in S_n and closure components."""

    def test_three_cycle(self):
        p = permutation(parse("s1 s2", 3))
        self.assertEqual(p.cycles(), [(1, 2, 3)])
        self.assertEqual(str(p), "(1 2 3)")

    def test_composition_order(self):
        t1 = Permutation.transposition(3, 1)
        t2 = Permutation.transposition(3, 2)
        self.assertEqual(t1 * t2, permutation(parse("s1 s2", 3)))
        self.assertEqual((t1 * t2)(3), 1)

    def test_identity(self):
        self.assertTrue(permutation(parse("s1 s1^-1", 2)).is_identity())
        self.assertEqual(str(Permutation.identity(3)), "()")
        with self.assertRaises(ValueError):
            Permutation((1, 1, 2))

    def test_components(self):
        cases = [
            ("s1", 2, 1),
            ("s1 s1", 2, 2),
            ("s1 s1 s1", 2, 1),
            ("", 3, 3),
            ("s1 s2^-1 s1 s2^-1", 3, 1),
            ("s1 s3", 4, 2),
        ]
        for text, n, expected in cases:
            with self.subTest(word=text, strands=n):
                self.assertEqual(closure_components(parse(text, n)), expected)

    @settings(max_examples=50, deadline=None)
    @given(words(4), words(4))
    def test_permutation_is_a_homomorphism(self, w, v):
        self.assertEqual(permutation(w * v), permutation(w) * permutation(v))
        self.assertTrue(permutation(w * w.inverse()).is_identity())
        self.assertEqual(permutation(w.inverse()), permutation(w).inverse())


if __name__ == "__main__":
    unittest.main()
