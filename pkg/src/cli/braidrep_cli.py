#!/usr/bin/env python3
"""
Braid Representation CLI

Command-line interface to the exact braid representation engine: link
invariants of braid closures, verification suites, pure/full image
orders, decomposition of the pure braid image and traces of words.
Every command writes one JSON document to stdout.

Exit codes: 0 success, 1 a verification check failed, 2 invalid input,
3 a computation cap was exceeded, 4 internal algebraic inconsistency.
"""

import argparse
import sys
import time
from math import factorial
from pathlib import Path
from typing import Any, Dict, List, Optional

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent.parent))
from src.braids import braid as braid_words
from src.braids.invariants import link_invariants, t_r, verify_tl_relations
from src.braids.kauffman import kauffman_oracle
from src.braids.rep import (
    RepKind,
    dimension,
    evaluate,
    quotient_action_checks,
    verify_braid_relations,
    verify_lemma22,
    verify_ybe,
)
from src.core import config
from src.core import matrices as mx
from src.core.errors import BraidRepError, IndexOutOfRangeError, check_cap
from src.groups import esgroup
from src.groups.chars import character_table, decompose, restriction_check, table_report
from src.groups.image import (
    enumerate_image,
    generator_square_pattern,
    phi_report,
    pure_image_trace,
    pure_relations_hold,
    quotient_report,
)
from src.utils.serialize import dumps, invariant_json
from src.utils.structured_logger import get_logger

logger = get_logger("BraidRepCLI", component="cli")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1


def _kind(name: str) -> RepKind:
    return RepKind[config.CLI_KINDS[name]]


def _emit(payload: Any, args: argparse.Namespace) -> None:
    text = dumps(
        payload,
        approx=getattr(args, "approx", False),
        coeffs=getattr(args, "coeffs", False),
    )
    if getattr(args, "pretty", False):
        try:
            from rich.console import Console
            Console().print_json(text)
            return
        except ImportError:
            pass
    print(text)


# Commands


def cmd_invariant(args: argparse.Namespace) -> Dict[str, Any]:
    w = braid_words.parse(args.word, args.strands)
    result = link_invariants(w)
    payload: Dict[str, Any] = invariant_json(result)
    if args.alpha is not None:
        payload["alpha"] = args.alpha
        payload["t_r"] = t_r(w, args.alpha)
    if args.oracle:
        oracle = kauffman_oracle(w)
        payload["kauffman"] = {"j4": oracle, "agrees": oracle == result.j4}
    payload["passed"] = result.routes_agree and payload.get("kauffman", {}).get("agrees", True)
    return payload


def _suite_ybe(max_n: int) -> Dict[str, Any]:
    results = {"R": verify_ybe(mx.R), "R_PRIME": verify_ybe(mx.R_PRIME)}
    return {"results": results, "passed": all(results.values())}


def _suite_braid(max_n: int) -> Dict[str, Any]:
    results = []
    for n in range(2, max_n + 1):
        kinds = [RepKind.PI, RepKind.PI_PRIME, RepKind.JONES4]
        kinds.append(RepKind.LAMBDA_HAT if n % 2 == 0 else RepKind.RHO1_HAT)
        for kind in kinds:
            results.append(verify_braid_relations(kind, n))
    return {"results": results, "passed": all(r["passed"] for r in results)}


def _suite_lemma22(max_n: int) -> Dict[str, Any]:
    identities = [verify_lemma22(n) for n in range(2, max_n + 1)]
    quotient = [quotient_action_checks(n) for n in range(3, max_n + 1)]
    passed = all(r["passed"] for r in identities + quotient)
    return {"identities": identities, "quotient_action": quotient, "passed": passed}


def _suite_tl(max_n: int) -> Dict[str, Any]:
    if max_n < 3:
        raise IndexOutOfRangeError(f"the tl suite needs --max-n >= 3, got {max_n}")
    results = [verify_tl_relations(n) for n in range(3, max_n + 1)]
    # R itself must violate the quadratic relation
    control = verify_tl_relations(3, mx.R, label="R")
    control["tl1_fails"] = not control["TL1"]
    passed = all(r["passed"] for r in results) and control["tl1_fails"]
    return {"results": results, "negative_control": control, "passed": passed}


def _suite_chars(max_n: int) -> Dict[str, Any]:
    tables, structures = [], []
    for m in range(1, max_n + 1):
        for nu in (-1, 1):
            tables.append(table_report(m, nu))
            structures.append(esgroup.structure_report(m, nu))
    restrictions = [
        restriction_check(k) for k in range(1, min(max_n // 2, config.MAX_RESTRICTION_K) + 1)
    ]
    structure_ok = all(
        s["order"] == s["expected_order"]
        and s["center_matches"]
        and s["class_count"] == s["class_count_closed_form"]
        and s["noncentral_conjugate_to_negative"]
        and s["commutator_subgroup_matches"]
        and (s["extraspecial"] or s["m"] % 2 == 1)
        and s.get("normal_subgroups_meet_center", True)
        for s in structures
    )
    passed = (
        all(t["passed"] for t in tables)
        and all(r["passed"] for r in restrictions)
        and structure_ok
    )
    return {"tables": tables, "structure": structures, "restrictions": restrictions, "passed": passed}


SUITES = {
    "ybe": _suite_ybe,
    "braid": _suite_braid,
    "lemma22": _suite_lemma22,
    "tl": _suite_tl,
    "chars": _suite_chars,
}


def cmd_verify(args: argparse.Namespace) -> Dict[str, Any]:
    max_n = args.max_n if args.max_n is not None else config.VERIFY_DEFAULT_MAX_N[args.suite]
    if max_n < 1 or (args.suite != "chars" and max_n < 2):
        raise IndexOutOfRangeError(f"--max-n too small for suite {args.suite}: {max_n}")
    # for chars --max-n is the rank m
    cap = config.MAX_CHAR_RANK if args.suite == "chars" else config.MAX_VERIFY_STRANDS
    check_cap("max_n", max_n, cap)
    log = logger.with_suite(args.suite)
    start = time.time()
    report = SUITES[args.suite](max_n)
    seconds = round(time.time() - start, 3)
    log.info("suite finished", {"max_n": max_n, "passed": report["passed"], "seconds": seconds})
    return {"suite": args.suite, "max_n": max_n, **report}


def cmd_group(args: argparse.Namespace) -> Dict[str, Any]:
    n, kind = args.strands, _kind(args.kind)
    if kind not in (RepKind.PI, RepKind.PI_PRIME):
        raise IndexOutOfRangeError(f"group orders are defined for pi and pi-prime, got {args.kind}")
    if n < 2:
        raise IndexOutOfRangeError(f"need n >= 2, got {n}")
    m, nu = n - 1, (-1 if kind is RepKind.PI else 1)
    expected_h = 2 if kind is RepKind.PI_PRIME and n == 2 else 1 << n

    if args.h_only:
        pure = enumerate_image(kind, n, pure=True)
        payload: Dict[str, Any] = {"n": n, "kind": kind.value, "order_H": pure.order}
        passed = pure.order == expected_h
    else:
        payload = quotient_report(kind, n)
        passed = (
            payload["order_H"] == expected_h
            and (kind is RepKind.PI_PRIME or payload["order_G"] == factorial(n) * expected_h)
            and payload["exact_sequence"]
        )
    payload["expected_order_H"] = expected_h
    payload["h_presentation"] = {
        "generator_squares": generator_square_pattern(kind, n),
        "relations_hold": pure_relations_hold(kind, n),
        "nu": nu,
    }
    passed = passed and payload["h_presentation"]["relations_hold"]
    if m % 2:
        payload["center_structure"] = esgroup.center_structure(m, nu)
    else:
        payload["center_structure"] = "Z2"
    if m <= config.MAX_ES_RANK:
        payload["class_count"] = len(esgroup.conjugacy_classes(m, nu))
        payload["class_count_closed_form"] = esgroup.class_count_closed_form(m)
        passed = passed and payload["class_count"] == payload["class_count_closed_form"]
    if kind is RepKind.PI:
        phi = phi_report(n, homomorphism_pairs=n <= config.MAX_PHI_PAIRS_STRANDS)
        payload["phi"] = phi
        passed = passed and phi["passed"]
    payload["passed"] = passed
    return payload


def _expected_multiplicities(n: int) -> Dict[str, int]:
    if n % 2:
        return {"V1": 1 << ((n + 1) // 2)}
    return {"W1": 1 << (n // 2), "W2": 1 << (n // 2)}


def cmd_decompose(args: argparse.Namespace) -> Dict[str, Any]:
    n = args.strands
    if n < 2:
        raise IndexOutOfRangeError(f"need n >= 2, got {n}")
    check_cap("strands", n, config.MAX_DECOMPOSE_STRANDS)
    table = character_table(n - 1, -1)
    character = [pure_image_trace(n, g) for g in table.representatives]
    multiplicities = decompose(character, table)
    nonzero = [mult for mult in multiplicities if mult.count]
    total = sum(mult.count * mult.dim for mult in multiplicities)
    expected = _expected_multiplicities(n)
    matches = all(mult.count == expected.get(mult.name, 0) for mult in multiplicities)
    return {
        "n": n,
        "group": f"E_{n - 1}^-1",
        "multiplicities": nonzero,
        "total_dimension": total,
        "expected_dimension": 1 << n,
        "expected_multiplicities": expected,
        "passed": total == (1 << n) and matches,
    }


def cmd_trace(args: argparse.Namespace) -> Dict[str, Any]:
    kind = _kind(args.kind)
    w = braid_words.parse(args.word, args.strands)
    matrix = evaluate(kind, w)
    return {
        "kind": kind.value,
        "strands": w.strands,
        "word": str(w),
        "dimension": dimension(kind, w.strands),
        "trace": matrix.trace(),
    }


COMMANDS = {
    "invariant": cmd_invariant,
    "verify": cmd_verify,
    "group": cmd_group,
    "decompose": cmd_decompose,
    "trace": cmd_trace,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--approx", action="store_true",
                        help="Add floating renderings next to exact values")
    common.add_argument("--coeffs", action="store_true",
                        help="Render exact values as {c0, c1, c2, c3} rational coefficients")
    common.add_argument("--pretty", action="store_true",
                        help="Colorized JSON output")

    parser = argparse.ArgumentParser(description="Exact braid group representations and link invariants")
    subparsers = parser.add_subparsers(dest="command", help="Command to execute")

    # Invariants of a closure
    invariant_parser = subparsers.add_parser("invariant", parents=[common],
                                             help="T_R, J4 and Arf of a braid closure")
    invariant_parser.add_argument("--word", default="", help="Braid word, e.g. 's1 s2^-1 s1'")
    invariant_parser.add_argument("--strands", type=int, required=True, help="Number of strands")
    invariant_parser.add_argument("--alpha", type=int, choices=[1, -1], help="Also report T_R for this alpha")
    invariant_parser.add_argument("--oracle", action="store_true",
                                  help="Cross-check J4 against the Kauffman bracket state sum")

    # Verification suites
    verify_parser = subparsers.add_parser("verify", parents=[common], help="Run a verification suite")
    verify_parser.add_argument("--suite", choices=config.VERIFY_SUITES, required=True, help="Suite to run")
    verify_parser.add_argument("--max-n", dest="max_n", type=int,
                               help="Largest strand count (rank m for chars)")

    # Image orders
    group_parser = subparsers.add_parser("group", parents=[common], help="Orders of the full and pure images")
    group_parser.add_argument("--strands", type=int, required=True, help="Number of strands")
    group_parser.add_argument("--kind", choices=["pi", "pi-prime"], default="pi", help="Representation")
    group_parser.add_argument("--h-only", dest="h_only", action="store_true",
                              help="Enumerate the pure braid image only")

    # Decomposition of the pure braid image
    decompose_parser = subparsers.add_parser("decompose", parents=[common],
                                             help="Decompose phi into irreducibles of E_(n-1)^-1")
    decompose_parser.add_argument("--strands", type=int, required=True, help="Number of strands")

    # Traces
    trace_parser = subparsers.add_parser("trace", parents=[common], help="Trace of a word's image")
    trace_parser.add_argument("--word", default="", help="Braid word")
    trace_parser.add_argument("--strands", type=int, required=True, help="Number of strands")
    trace_parser.add_argument("--kind", choices=sorted(config.CLI_KINDS), default="pi", help="Representation")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Command-line interface for braidrep. Returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command not in COMMANDS:
        parser.print_help()
        return 2

    try:
        payload = COMMANDS[args.command](args)
    except BraidRepError as e:
        logger.error("command failed", e, {"command": args.command})
        _emit({"error": {"type": type(e).__name__, "message": str(e)}}, args)
        return e.exit_code

    _emit(payload, args)
    if isinstance(payload, dict) and payload.get("passed") is False:
        return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
