#!/usr/bin/env python3
"""
Link invariants from braid closures

    T_R(w, alpha) = alpha^(n-e) (sqrt 2)^-n trace(pi_n(w))
    J4(w)         = T_R(w, alpha) (-1)^(n-1+e) alpha^(n-e) / sqrt 2

J4 is the Jones polynomial at t = sqrt(-1) with t^(1/2) = zeta; it is
computed for both alpha and the two values must agree. A second route
evaluates the trace of the Temperley-Lieb normalized sectors directly:

    J4(w) = (-1)^(n-1) zeta^e (sqrt 2)^-(1+(-1)^n)/2 trace(rho_4(w))

For a proper link J4 = (-sqrt 2)^(c-1) (-1)^Arf, and J4 = 0 otherwise.
"""

import sys
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))
from src.braids.braid import BraidWord, closure_components, exponent_sum
from src.braids.rep import RepKind, evaluate
from src.core import config
from src.core import matrices as mx
from src.core.cyclo import I, INV_SQRT2, ONE, CycloNum, sqrt2_power
from src.core.errors import IndexOutOfRangeError, InvariantMismatchError, check_cap
from src.core.linalg import ExactMatrix, site_operator
from src.utils.structured_logger import get_logger

logger = get_logger("Invariants", component="invariants")


def _sign_power(base: int, exponent: int) -> int:
    """base^exponent for base in {+1, -1} and any integer exponent."""
    return -1 if base == -1 and exponent % 2 else 1


@lru_cache(maxsize=256)
def _pi_trace(w: BraidWord) -> CycloNum:
    check_cap("strands", w.strands, config.MAX_DENSE_STRANDS)
    return evaluate(RepKind.PI, w).trace()


def t_r(w: BraidWord, alpha: int) -> CycloNum:
    """Enhanced trace invariant of the closure of w."""
    if alpha not in (1, -1):
        raise ValueError(f"alpha must be +1 or -1, got {alpha}")
    n = w.strands
    check_cap("strands", n, config.MAX_DENSE_STRANDS)
    phase = _sign_power(alpha, n - exponent_sum(w))
    return _pi_trace(w) * sqrt2_power(-n) * phase


def jones_from_enhanced(value: CycloNum, w: BraidWord, alpha: int) -> CycloNum:
    """Invert T_R = (-1)^(n-1+e) alpha^(n-e) sqrt 2 J4 for one alpha."""
    n, e = w.strands, exponent_sum(w)
    sign = _sign_power(-1, n - 1 + e) * _sign_power(alpha, n - e)
    return value * sign * INV_SQRT2


def jones4(w: BraidWord) -> CycloNum:
    """
    Jones polynomial of the closure at t = sqrt(-1), from T_R.

    Raises:
        InvariantMismatchError: the two alpha values disagree
    """
    values = [jones_from_enhanced(t_r(w, alpha), w, alpha) for alpha in (1, -1)]
    if values[0] != values[1]:
        raise InvariantMismatchError(f"J4 depends on alpha for {w}: {values[0]} vs {values[1]}")
    return values[0]


def jones4_direct(w: BraidWord) -> CycloNum:
    """J4 from the trace of the Temperley-Lieb normalized sectors, (-1)^(1/4) := zeta."""
    n, e = w.strands, exponent_sum(w)
    trace = evaluate(RepKind.JONES4, w).trace()
    scale = INV_SQRT2 if n % 2 == 0 else ONE
    return trace * zeta_phase(e) * scale * _sign_power(-1, n - 1)


def arf(w: BraidWord) -> Dict[str, Any]:
    """
    Arf invariant of the closure read off J4.

    Returns:
        {"defined": False, "value": None} when J4 = 0, otherwise
        {"defined": True, "value": 0 or 1}

    Raises:
        InvariantMismatchError: J4 is neither 0 nor +-(-sqrt 2)^(c-1)
    """
    value = jones4(w)
    return arf_from_jones(value, closure_components(w))


def arf_from_jones(value: CycloNum, components: int) -> Dict[str, Any]:
    if not value:
        return {"defined": False, "value": None}
    target = sqrt2_power(components - 1) * _sign_power(-1, components - 1)
    if value == target:
        return {"defined": True, "value": 0}
    if value == -target:
        return {"defined": True, "value": 1}
    raise InvariantMismatchError(
        f"J4 = {value} is neither 0 nor +-(-sqrt2)^{components - 1}"
    )


@dataclass(frozen=True)
class InvariantResult:
    """All invariants of one braid closure."""

    word: str
    strands: int
    exponent_sum: int
    components: int
    t_r_plus: CycloNum
    t_r_minus: CycloNum
    j4: CycloNum
    j4_direct: CycloNum
    arf_defined: bool
    arf_value: Optional[int]

    @property
    def routes_agree(self) -> bool:
        return self.j4 == self.j4_direct

    @property
    def j4_is_real(self) -> bool:
        return self.j4.is_real()


def link_invariants(w: BraidWord) -> InvariantResult:
    """T_R for both alpha, J4 by both routes and the Arf invariant."""
    j4 = jones4(w)
    direct = jones4_direct(w)
    if j4 != direct:
        logger.warning(
            "J4 routes disagree", {"word": str(w), "strands": w.strands,
                                    "t_r_route": str(j4), "direct": str(direct)}
        )
    components = closure_components(w)
    arf_result = arf_from_jones(j4, components)
    return InvariantResult(
        word=str(w),
        strands=w.strands,
        exponent_sum=exponent_sum(w),
        components=components,
        t_r_plus=t_r(w, 1),
        t_r_minus=t_r(w, -1),
        j4=j4,
        j4_direct=direct,
        arf_defined=arf_result["defined"],
        arf_value=arf_result["value"],
    )


def verify_tl_relations(n: int, operator: Optional[ExactMatrix] = None,
                        label: str = "R_PRIME") -> Dict[str, Any]:
    """
    Temperley-Lieb relations at q = sqrt(-1) for A_i = operator on sites (i, i+1).

    TL1: (A_i + 1)(A_i - q) = 0
    TL2: A_i A_j A_i + A_i A_j + A_j A_i + A_i + A_j + 1 = 0 for j = i+1
    TL3: (A_i - A_j)^2 = q for j = i+1

    Args:
        n: number of strands, n >= 3
        operator: 4x4 block, R' by default
        label: name of the operator in the report

    Returns:
        Report with pass/fail per relation and the failing site indices
    """
    if n < 3:
        raise IndexOutOfRangeError(f"TL relations need n >= 3, got {n}")
    check_cap("max_n", n, config.MAX_VERIFY_STRANDS)
    operator = mx.R_PRIME if operator is None else operator
    identity = ExactMatrix.identity(1 << n)
    q_identity = identity.scale(I)
    A = {i: site_operator(n, i, operator) for i in range(1, n)}
    failures = {"TL1": [], "TL2": [], "TL3": []}
    for i, a in A.items():
        if not ((a + identity) @ (a - q_identity)).is_zero():
            failures["TL1"].append(i)
    for i in range(1, n - 1):
        a, b = A[i], A[i + 1]
        tl2 = a @ b @ a + a @ b + b @ a + a + b + identity
        if not tl2.is_zero():
            failures["TL2"].append(i)
        diff = a - b
        if diff @ diff != q_identity:
            failures["TL3"].append(i)
    report = {
        "n": n,
        "operator": label,
        "TL1": not failures["TL1"],
        "TL2": not failures["TL2"],
        "TL3": not failures["TL3"],
        "failures": {k: v for k, v in failures.items() if v},
    }
    report["passed"] = report["TL1"] and report["TL2"] and report["TL3"]
    log = logger.with_suite("tl")
    if not report["passed"]:
        log.info("TL relations fail", {"n": n, "operator": label, "failures": report["failures"]})
    return report


def zeta_phase(e: int) -> CycloNum:
    """(-1)^(e/4) on the branch (-1)^(1/4) = zeta."""
    return CycloNum.zeta_power(e)
