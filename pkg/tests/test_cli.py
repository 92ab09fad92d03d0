#!/usr/bin/env python3
"""
Tests for the braidrep command-line interface.
"""

import io
import json
import os
import sys
import unittest
from contextlib import redirect_stdout
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))
from src.cli.braidrep_cli import main

SLOW = os.environ.get("BRAIDREP_SLOW_TESTS") == "1"


def run(*argv):
    """Run the CLI and return (exit code, parsed JSON output)."""
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = main(list(argv))
    return code, json.loads(buffer.getvalue())


class TestInvariantCommand(unittest.TestCase):
    """braidrep invariant"""

    def test_trefoil(self):
        code, out = run("invariant", "--word", "s1 s1 s1", "--strands", "2")
        self.assertEqual(code, 0)
        self.assertEqual(out["j4"], "-1")
        self.assertEqual(out["e"], 3)
        self.assertEqual(out["c"], 1)
        self.assertEqual(out["strands"], 2)
        self.assertTrue(out["j4_routes_agree"])
        self.assertEqual(out["arf"], {"defined": True, "value": 1})

    def test_hopf_link(self):
        code, out = run("invariant", "--word", "s1 s1", "--strands", "2")
        self.assertEqual(code, 0)
        self.assertEqual(out["j4"], "0")
        self.assertEqual(out["arf"], {"defined": False, "value": None})

    def test_alpha_and_oracle(self):
        code, out = run("invariant", "--word", "s1", "--strands", "2", "--alpha", "-1", "--oracle")
        self.assertEqual(code, 0)
        self.assertEqual(out["t_r"], "-z + z^3")
        self.assertEqual(out["kauffman"], {"j4": "1", "agrees": True})

    def test_approx(self):
        code, out = run("invariant", "--word", "s1 s1 s1 s1", "--strands", "2", "--approx")
        self.assertEqual(code, 0)
        self.assertEqual(out["j4"], "z - z^3")
        self.assertIn("j4", out["approx"])
        self.assertTrue(out["approx"]["j4"].startswith("1.41421356"))

    def test_coefficient_rendering(self):
        code, out = run("invariant", "--word", "s1 s1 s1 s1", "--strands", "2", "--coeffs")
        self.assertEqual(code, 0)
        self.assertEqual(out["j4"], {"c0": "0", "c1": "1", "c2": "0", "c3": "-1"})
        code, out = run("trace", "--kind", "rho1-hat", "--strands", "3", "--word", "s1", "--coeffs")
        self.assertEqual(out["trace"], {"c0": "0", "c1": "1", "c2": "0", "c3": "-1"})

    def test_deterministic_output(self):
        first = run("invariant", "--word", "s1 s2^-1 s1 s2^-1", "--strands", "3")
        second = run("invariant", "--word", "s1 s2^-1 s1 s2^-1", "--strands", "3")
        self.assertEqual(first, second)


class TestErrors(unittest.TestCase):
    """Exit codes and error documents."""

    def test_index_out_of_range(self):
        code, out = run("invariant", "--word", "s3", "--strands", "3")
        self.assertEqual(code, 2)
        self.assertEqual(out["error"]["type"], "IndexOutOfRangeError")

    def test_malformed_word(self):
        code, out = run("invariant", "--word", "s1 t2", "--strands", "3")
        self.assertEqual(code, 2)
        self.assertEqual(out["error"]["type"], "BraidSyntaxError")

    def test_parity(self):
        code, out = run("trace", "--kind", "rho1-hat", "--strands", "4")
        self.assertEqual(code, 2)
        self.assertEqual(out["error"]["type"], "ParityError")

    def test_cap_exceeded(self):
        code, out = run("invariant", "--word", "s1", "--strands", "11")
        self.assertEqual(code, 3)
        self.assertEqual(out["error"]["type"], "CapExceededError")
        code, out = run("verify", "--suite", "braid", "--max-n", "9")
        self.assertEqual(code, 3)

    def test_character_rank_cap(self):
        code, out = run("verify", "--suite", "chars", "--max-n", "14")
        self.assertEqual(code, 3)
        self.assertEqual(out["error"]["type"], "CapExceededError")

    def test_oracle_cap(self):
        code, out = run("invariant", "--word", "s1 " * 17, "--strands", "2", "--oracle")
        self.assertEqual(code, 3)


class TestVerifyCommand(unittest.TestCase):
    """braidrep verify"""

    def test_ybe(self):
        code, out = run("verify", "--suite", "ybe")
        self.assertEqual(code, 0)
        self.assertEqual(out["results"], {"R": True, "R_PRIME": True})

    def test_braid(self):
        code, out = run("verify", "--suite", "braid", "--max-n", "4")
        self.assertEqual(code, 0)
        self.assertTrue(out["passed"])

    def test_lemma22(self):
        code, out = run("verify", "--suite", "lemma22", "--max-n", "4")
        self.assertEqual(code, 0)
        self.assertEqual(len(out["identities"]), 3)
        self.assertEqual(len(out["quotient_action"]), 2)

    def test_tl(self):
        code, out = run("verify", "--suite", "tl", "--max-n", "4")
        self.assertEqual(code, 0)
        self.assertTrue(out["negative_control"]["tl1_fails"])

    def test_tl_needs_three(self):
        code, out = run("verify", "--suite", "tl", "--max-n", "2")
        self.assertEqual(code, 2)

    def test_chars(self):
        code, out = run("verify", "--suite", "chars", "--max-n", "4")
        self.assertEqual(code, 0)
        self.assertEqual(len(out["tables"]), 8)
        self.assertEqual(len(out["restrictions"]), 2)

    @unittest.skipUnless(SLOW, "set BRAIDREP_SLOW_TESTS=1")
    def test_chars_rank_nine(self):
        code, out = run("verify", "--suite", "chars", "--max-n", "9")
        self.assertEqual(code, 0)
        self.assertTrue(out["passed"])
        self.assertEqual(len(out["tables"]), 18)

class TestGroupCommands(unittest.TestCase):
    """braidrep group, decompose and trace"""

    def test_group_three_strands(self):
        code, out = run("group", "--strands", "3")
        self.assertEqual(code, 0)
        self.assertEqual(out["order_G"], 48)
        self.assertEqual(out["order_H"], 8)
        self.assertEqual(out["center_structure"], "Z2")
        self.assertEqual(out["class_count"], 5)
        self.assertTrue(out["phi"]["passed"])

    def test_group_two_strands(self):
        code, out = run("group", "--strands", "2")
        self.assertEqual(code, 0)
        self.assertEqual(out["order_G"], 8)
        self.assertEqual(out["projective_order_G"], 4)
        self.assertEqual(out["center_structure"], "Z4")

    def test_renormalized_h_only(self):
        code, out = run("group", "--strands", "5", "--kind", "pi-prime", "--h-only")
        self.assertEqual(code, 0)
        self.assertEqual(out["order_H"], 32)
        self.assertEqual(out["h_presentation"]["nu"], 1)
        self.assertEqual(out["h_presentation"]["generator_squares"], ["+I"] * 4)
        self.assertEqual(out["center_structure"], "Z2")

    def test_decompose_odd(self):
        code, out = run("decompose", "--strands", "3")
        self.assertEqual(code, 0)
        self.assertEqual(out["multiplicities"], [{"name": "V1", "dim": 2, "count": 4}])
        self.assertEqual(out["total_dimension"], 8)

    def test_decompose_even(self):
        code, out = run("decompose", "--strands", "4")
        self.assertEqual(code, 0)
        counts = {m["name"]: m["count"] for m in out["multiplicities"]}
        self.assertEqual(counts, {"W1": 4, "W2": 4})

    def test_decompose_two_strands(self):
        code, out = run("decompose", "--strands", "2")
        self.assertEqual(code, 0)
        counts = {m["name"]: m["count"] for m in out["multiplicities"]}
        self.assertEqual(counts, {"W1": 2, "W2": 2})

    @unittest.skipUnless(SLOW, "set BRAIDREP_SLOW_TESTS=1")
    def test_decompose_nine_strands(self):
        code, out = run("decompose", "--strands", "9")
        self.assertEqual(code, 0)
        self.assertEqual(out["multiplicities"], [{"name": "V1", "dim": 16, "count": 32}])

    def test_trace(self):
        code, out = run("trace", "--kind", "lambda-hat", "--strands", "2")
        self.assertEqual(code, 0)
        self.assertEqual(out["trace"], "2")
        self.assertEqual(out["dimension"], 2)
        code, out = run("trace", "--kind", "pi", "--strands", "2", "--word", "s1")
        self.assertEqual(out["trace"], "2*z - 2*z^3")


if __name__ == "__main__":
    unittest.main()
