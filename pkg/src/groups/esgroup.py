#!/usr/bin/env python3
"""
The groups E_m^nu.

E_m^nu is generated by x_1..x_m with x_i^2 = nu, x_i x_j = x_j x_i for
|i - j| >= 2 and x_(i+1) x_i = -x_i x_(i+1), where -1 is central of order 2.
Every element has the unique normal form +-x_1^a_1 ... x_m^a_m, stored here
as a sign and a bitmask (bit i-1 holds a_i), so |E_m^nu| = 2^(m+1).

Multiplying normal forms moves each generator of the right factor leftwards
past the larger-index generators of the left factor; only neighbours
(index difference 1) anticommute, and every generator present in both
factors contributes one square nu.
"""

import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterator, List, Tuple

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))
from src.core import config
from src.core.errors import IndexOutOfRangeError, ParameterMismatchError, ParityError, check_cap
from src.utils.structured_logger import get_logger

logger = get_logger("ESGroup", component="esgroup")

Z2xZ2 = "Z2xZ2"
Z4 = "Z4"


@dataclass(frozen=True, order=True)
class ESElement:
    """Normal form sign * x^alpha in E_m^nu."""

    m: int
    nu: int
    alpha: int
    sign: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise IndexOutOfRangeError(f"rank m must be >= 1, got {self.m}")
        if self.nu not in (1, -1) or self.sign not in (1, -1):
            raise ValueError("nu and sign must be +1 or -1")
        if not 0 <= self.alpha < (1 << self.m):
            raise IndexOutOfRangeError(f"alpha {self.alpha} has bits beyond x_{self.m}")

    def exponents(self) -> Tuple[int, ...]:
        """(a_1, ..., a_m)."""
        return tuple((self.alpha >> i) & 1 for i in range(self.m))

    def __mul__(self, other: "ESElement") -> "ESElement":
        return es_mul(self, other)

    def __neg__(self) -> "ESElement":
        return ESElement(self.m, self.nu, self.alpha, -self.sign)

    def inverse(self) -> "ESElement":
        # g^2 is +-1, so g^-1 = g^2 g
        return es_mul(es_mul(self, self), self)

    def is_identity(self) -> bool:
        return self.alpha == 0 and self.sign == 1

    def order(self) -> int:
        power, k = self, 1
        while not power.is_identity():
            power = es_mul(power, self)
            k += 1
        return k

    def __str__(self) -> str:
        indices = [i + 1 for i in range(self.m) if (self.alpha >> i) & 1]
        body = "*".join(f"x{i}" for i in indices) if indices else "1"
        return body if self.sign == 1 else f"-{body}"


def es_mul(a: ESElement, b: ESElement) -> ESElement:
    """
    Normal form of a * b.

    Raises:
        ParameterMismatchError: a and b belong to groups with different (m, nu)
    """
    if a.m != b.m or a.nu != b.nu:
        raise ParameterMismatchError(
            f"cannot multiply elements of E_{a.m}^{a.nu} and E_{b.m}^{b.nu}"
        )
    flips = bin(a.alpha & (b.alpha << 1)).count("1")
    sign = a.sign * b.sign * (-1 if flips % 2 else 1)
    if a.nu == -1 and bin(a.alpha & b.alpha).count("1") % 2:
        sign = -sign
    return ESElement(a.m, a.nu, a.alpha ^ b.alpha, sign)


class ExtraspecialGroup:
    """E_m^nu with exhaustive enumeration helpers."""

    def __init__(self, m: int, nu: int):
        if m < 1:
            raise IndexOutOfRangeError(f"rank m must be >= 1, got {m}")
        if nu not in (1, -1):
            raise ValueError(f"nu must be +1 or -1, got {nu}")
        self.m = m
        self.nu = nu

    @property
    def order(self) -> int:
        return 1 << (self.m + 1)

    def element(self, alpha: int, sign: int = 1) -> ESElement:
        return ESElement(self.m, self.nu, alpha, sign)

    def identity(self) -> ESElement:
        return self.element(0)

    def minus_one(self) -> ESElement:
        return self.element(0, -1)

    def generator(self, i: int) -> ESElement:
        if not 1 <= i <= self.m:
            raise IndexOutOfRangeError(f"x_{i} does not exist in rank {self.m}")
        return self.element(1 << (i - 1))

    def generators(self) -> List[ESElement]:
        return [self.generator(i) for i in range(1, self.m + 1)]

    def z(self) -> ESElement:
        """x_1 x_3 ... x_m for odd m."""
        if self.m % 2 == 0:
            raise ParityError(f"z = x_1 x_3 ... x_m needs odd m, got {self.m}")
        alpha = sum(1 << i for i in range(0, self.m, 2))
        return self.element(alpha)

    def elements(self) -> Iterator[ESElement]:
        """All 2^(m+1) normal forms, positive sign first for each alpha."""
        check_cap("es_rank", self.m, config.MAX_ES_RANK)
        for alpha in range(1 << self.m):
            yield self.element(alpha, 1)
            yield self.element(alpha, -1)

    def is_central(self, g: ESElement) -> bool:
        return all(es_mul(g, x) == es_mul(x, g) for x in self.generators())

    def center(self) -> List[ESElement]:
        """Brute-force center: elements commuting with every generator."""
        return [g for g in self.elements() if self.is_central(g)]

    def conjugate(self, g: ESElement, by: ESElement) -> ESElement:
        """by^-1 g by."""
        return es_mul(es_mul(by.inverse(), g), by)

    def conjugacy_classes(self) -> List[Tuple[ESElement, ...]]:
        """
        Conjugacy classes by orbit closure under conjugation by the generators.

        Classes are sorted by (alpha, sign) of their representative, which is
        the first element of each sorted class tuple.
        """
        check_cap("es_rank", self.m, config.MAX_ES_RANK)
        gens = self.generators()
        seen = set()
        classes = []
        for g in self.elements():
            if g in seen:
                continue
            orbit = {g}
            frontier = [g]
            while frontier:
                h = frontier.pop()
                for x in gens:
                    c = self.conjugate(h, x)
                    if c not in orbit:
                        orbit.add(c)
                        frontier.append(c)
            seen |= orbit
            classes.append(tuple(sorted(orbit, key=_class_key)))
        classes.sort(key=lambda cls: _class_key(cls[0]))
        logger.debug("conjugacy classes", {"m": self.m, "nu": self.nu, "count": len(classes)})
        return classes

    def commutator_subgroup(self) -> List[ESElement]:
        """
        Subgroup generated by commutators of generators.

        Commutators here are central, so these generate the derived subgroup.
        """
        gens = self.generators()
        comms = {
            es_mul(es_mul(a.inverse(), b.inverse()), es_mul(a, b))
            for a in gens for b in gens
        }
        return sorted(self.closure(comms), key=_class_key)

    def closure(self, seeds) -> set:
        """Subgroup generated by `seeds`."""
        group = {self.identity()}
        frontier = list(group)
        seeds = list(seeds)
        while frontier:
            h = frontier.pop()
            for s in seeds:
                p = es_mul(h, s)
                if p not in group:
                    group.add(p)
                    frontier.append(p)
        return group

    def normal_closure(self, g: ESElement) -> set:
        """Smallest normal subgroup containing g."""
        gens = self.generators()
        seeds = {g}
        frontier = [g]
        while frontier:
            h = frontier.pop()
            for x in gens:
                c = self.conjugate(h, x)
                if c not in seeds:
                    seeds.add(c)
                    frontier.append(c)
        return self.closure(seeds)


def _class_key(g: ESElement) -> Tuple[int, int]:
    return (g.alpha, -g.sign)


def center(m: int, nu: int) -> List[ESElement]:
    return ExtraspecialGroup(m, nu).center()


def center_structure(m: int, nu: int) -> str:
    """
    Isomorphism type of the center of E_m^nu for odd m.

    Decided by the order of z = x_1 x_3 ... x_m: Z4 when z^2 = -1,
    Z2xZ2 otherwise.
    """
    group = ExtraspecialGroup(m, nu)
    if m % 2 == 0:
        raise ParityError(f"center_structure needs odd m, got {m}")
    return Z4 if group.z().order() == 4 else Z2xZ2


def conjugacy_classes(m: int, nu: int) -> List[Tuple[ESElement, ...]]:
    return ExtraspecialGroup(m, nu).conjugacy_classes()


def class_count_closed_form(m: int) -> int:
    """2^m + 1 for even m, 2^m + 2 for odd m."""
    return (1 << m) + (1 if m % 2 == 0 else 2)


def is_extraspecial(m: int, nu: int) -> bool:
    """Center equals the commutator subgroup and has order 2."""
    group = ExtraspecialGroup(m, nu)
    center_set = set(group.center())
    return len(center_set) == 2 and center_set == set(group.commutator_subgroup())


def structure_report(m: int, nu: int) -> Dict[str, object]:
    """
    Brute-force facts about E_m^nu.

    Checks the order by enumeration, the center against {+-1} (m even) or
    {+-1, +-z} (m odd), that every non-central element is conjugate to its
    negative, and that every nontrivial normal subgroup meets the center
    (normal closures of single elements, only for m <= 7).
    """
    group = ExtraspecialGroup(m, nu)
    log = logger.with_suite("esgroup")
    elements = list(group.elements())
    center_set = set(group.center())
    expected_center = {group.identity(), group.minus_one()}
    if m % 2:
        expected_center |= {group.z(), -group.z()}
    classes = group.conjugacy_classes()
    # E_1 is abelian
    expected_derived = {group.identity()} if m == 1 else {group.identity(), group.minus_one()}
    negatives_conjugate = all(
        len(cls) == 2 and -cls[0] in cls
        for cls in classes if cls[0] not in center_set
    )
    report: Dict[str, object] = {
        "m": m,
        "nu": nu,
        "order": len(set(elements)),
        "expected_order": group.order,
        "center": [str(g) for g in sorted(center_set, key=_class_key)],
        "center_matches": center_set == expected_center,
        "class_count": len(classes),
        "class_count_closed_form": class_count_closed_form(m),
        "noncentral_conjugate_to_negative": negatives_conjugate,
        "commutator_subgroup_matches": set(group.commutator_subgroup()) == expected_derived,
        "extraspecial": is_extraspecial(m, nu),
    }
    if m % 2:
        report["center_structure"] = center_structure(m, nu)
    if m <= 7:
        report["normal_subgroups_meet_center"] = all(
            len(group.normal_closure(g) & center_set) > 1
            for g in elements if not g.is_identity()
        )
    log.info("structure computed", {"m": m, "nu": nu, "classes": len(classes)})
    return report
