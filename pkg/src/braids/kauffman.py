#!/usr/bin/env python3
"""
Kauffman bracket state sum for braid closures.

An independent route to the Jones polynomial at t = sqrt(-1). The closure
diagram of a braid word has one crossing per letter; every one of the
2^crossings smoothings is resolved into loops with a union-find over strand
segments, and the bracket

    <L> = sum_states A^(#A - #B) d^(loops - 1),   d = -A^2 - A^-2

is normalized by (-A^3)^-writhe. The result is a Laurent polynomial in A
with integer coefficients (sympy). It is evaluated at t = A^-4 = sqrt(-1),
t^(1/2) = zeta, by substituting A = u^7 where u is a primitive 16th root of
unity, u^8 = -1, and reducing modulo u^8 + 1. Only even powers of u
survive, and u^2 = zeta gives the coordinates in Q(zeta_8).
"""

import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Tuple

import sympy as sp

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))
from src.braids.braid import BraidWord, exponent_sum
from src.core import config
from src.core.cyclo import CycloNum
from src.core.errors import AlgebraError, check_cap
from src.utils.structured_logger import get_logger

logger = get_logger("Kauffman", component="kauffman")

A = sp.Symbol("A")
U = sp.Symbol("u")
_LOOP = -A**2 - A**-2


class _Segments:
    """Union-find over the strand segments of a closed braid diagram."""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry

    def count(self) -> int:
        return sum(1 for x in range(len(self.parent)) if self.find(x) == x)


def _state_counts(w: BraidWord) -> Counter:
    """
    Counter of (#A - #B, loops) over all smoothings.

    Segment (p, t) is the piece of strand position p between levels t-1 and
    t; level indices wrap around so the closure joins the bottom to the top.
    At a positive crossing the A-smoothing keeps the strands vertical and
    the B-smoothing joins them into a cap and a cup; negative crossings swap
    the two.
    """
    n, length = w.strands, len(w)
    if length == 0:
        return Counter({(0, n): 1})

    def seg(p: int, t: int) -> int:
        return (t % length) * n + (p - 1)

    passive: List[Tuple[int, int]] = []
    for t, (i, _) in enumerate(w.letters):
        for p in range(1, n + 1):
            if p not in (i, i + 1):
                passive.append((seg(p, t), seg(p, t + 1)))

    counts: Counter = Counter()
    size = n * length
    for state in range(1 << length):
        uf = _Segments(size)
        for x, y in passive:
            uf.union(x, y)
        a_minus_b = 0
        for t, (i, sign) in enumerate(w.letters):
            a_smoothing = not (state >> t) & 1
            vertical = a_smoothing if sign == 1 else not a_smoothing
            a_minus_b += 1 if a_smoothing else -1
            if vertical:
                uf.union(seg(i, t), seg(i, t + 1))
                uf.union(seg(i + 1, t), seg(i + 1, t + 1))
            else:
                uf.union(seg(i, t), seg(i + 1, t))
                uf.union(seg(i, t + 1), seg(i + 1, t + 1))
        counts[(a_minus_b, uf.count())] += 1
    return counts


def jones_laurent(w: BraidWord) -> sp.Expr:
    """Writhe-normalized bracket f(A) of the closure of w."""
    check_cap("crossings", len(w), config.MAX_ORACLE_CROSSINGS)
    bracket = sum(
        (count * A**exp * _LOOP**(loops - 1) for (exp, loops), count in _state_counts(w).items()),
        sp.Integer(0),
    )
    return sp.expand(bracket * (-A**3) ** (-exponent_sum(w)))


def lowest_exponent(laurent: sp.Expr, variable: sp.Symbol) -> int:
    """Minimal exponent of `variable` in a Laurent polynomial."""
    exponents = [term.as_coeff_exponent(variable)[1] for term in sp.Add.make_args(laurent)]
    return int(min(exponents)) if exponents else 0


def evaluate_at_fourth_root(laurent: sp.Expr) -> CycloNum:
    """
    Substitute A = u^7 (u^8 = -1) and reduce to Q(zeta_8) with zeta = u^2.

    Raises:
        AlgebraError: an odd power of u survives the reduction
    """
    if laurent == 0:
        return CycloNum()
    low = lowest_exponent(laurent, A)
    shift = 0
    if low < 0:
        shift = 16 * ((-7 * low + 15) // 16)
    poly = sp.Poly(sp.expand(laurent.subs(A, U**7) * U**shift), U)
    reduced = poly.rem(sp.Poly(U**8 + 1, U))
    coeffs: Dict[int, Fraction] = {}
    for k in range(8):
        c = sp.Rational(reduced.coeff_monomial(U**k))
        coeffs[k] = Fraction(int(c.p), int(c.q))
    odd = {k: v for k, v in coeffs.items() if k % 2 and v}
    if odd:
        raise AlgebraError(f"odd powers of u survive the reduction: {odd}")
    return CycloNum(coeffs[0], coeffs[2], coeffs[4], coeffs[6])


def kauffman_oracle(w: BraidWord) -> CycloNum:
    """
    Jones polynomial of the closure of w at t = sqrt(-1), t^(1/2) = zeta.

    Raises:
        CapExceededError: more than config.MAX_ORACLE_CROSSINGS letters
    """
    laurent = jones_laurent(w)
    value = evaluate_at_fourth_root(laurent)
    logger.debug("state sum", {"word": str(w), "strands": w.strands, "value": str(value)})
    return value
