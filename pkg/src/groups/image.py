#!/usr/bin/env python3
"""
Matrix images of the braid and pure braid groups.

phi_to_matrices realizes E_(n-1)^-1 by the pure generators g_i. The
breadth-first enumeration closes a set of generator matrices under right
multiplication, keyed on the canonical exact entries, and tracks the image
of every element in S_n so that the kernel of G_n -> S_n can be compared
with the enumerated pure braid image.
"""

import sys
import time
from collections import deque
from dataclasses import dataclass, field
from math import factorial
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))
from src.braids.braid import Permutation
from src.braids.rep import (
    RepKind,
    basis_change_Pn,
    diagonalized_odd_generator,
    generator_image,
    pure_generator,
)
from src.core import config
from src.core import matrices as mx
from src.core.cyclo import ONE, ZERO, CycloNum
from src.core.errors import IndexOutOfRangeError, check_cap
from src.core.linalg import ExactMatrix
from src.groups.esgroup import ESElement, ExtraspecialGroup
from src.utils.structured_logger import get_logger

logger = get_logger("GroupImage", component="image")


def phi_to_matrices(n: int) -> Dict[ESElement, ExactMatrix]:
    """
    The homomorphism E_(n-1)^-1 -> GL(2^n), x_i -> g_i, on all normal forms.

    Args:
        n: number of strands, 2 <= n <= config.MAX_H_STRANDS

    Returns:
        Map from each of the 2^n normal forms to its matrix
    """
    if n < 2:
        raise IndexOutOfRangeError(f"phi needs n >= 2, got {n}")
    check_cap("strands", n, config.MAX_H_STRANDS)
    group = ExtraspecialGroup(n - 1, -1)
    g = [None] + [pure_generator(n, i) for i in range(1, n)]
    positive = {0: ExactMatrix.identity(1 << n)}
    for alpha in range(1, 1 << (n - 1)):
        top = alpha.bit_length()
        positive[alpha] = positive[alpha ^ (1 << (top - 1))] @ g[top]
    images = {}
    for alpha, matrix in positive.items():
        images[group.element(alpha, 1)] = matrix
        images[group.element(alpha, -1)] = -matrix
    return images


def pure_image_trace(n: int, element: ESElement) -> CycloNum:
    """
    trace(phi(element)) from per-site 2x2 factors.

    g_i is s on site i and sigma_x on site i+1, so the normal-form product is
    a tensor product whose site j carries sigma_x^a_(j-1) s^a_j, and the
    trace is the product of the site traces.
    """
    if element.m != n - 1 or element.nu != -1:
        raise IndexOutOfRangeError(f"{element} is not in E_{n - 1}^-1")
    a = (0,) + element.exponents() + (0,)
    total = ONE if element.sign == 1 else -ONE
    for j in range(1, n + 1):
        local = mx.I2
        if a[j - 1]:
            local = local @ mx.SIGMA_X
        if a[j]:
            local = local @ mx.S
        total = total * local.trace()
        if not total:
            return ZERO
    return total


def phi_report(n: int, homomorphism_pairs: bool = True) -> Dict[str, Any]:
    """
    Injectivity and homomorphism checks for phi at n strands.

    For even n the trace of phi(z) is also checked through the basis change
    P_n, which turns g_1 g_3 ... g_(n-1) into a diagonal matrix.
    """
    log = logger.with_suite("phi")
    start = time.time()
    images = phi_to_matrices(n)
    group = ExtraspecialGroup(n - 1, -1)
    identity = ExactMatrix.identity(1 << n)
    report: Dict[str, Any] = {
        "n": n,
        "distinct_images": len(set(images.values())),
        "expected": 1 << n,
        "minus_one_to_minus_identity": images[group.minus_one()] == -identity,
        "generators_match": all(
            images[group.generator(i)] == pure_generator(n, i) for i in range(1, n)
        ),
    }
    if homomorphism_pairs:
        report["homomorphism"] = all(
            images[a] @ images[b] == images[a * b] for a in images for b in images
        )
    if n % 2 == 0:
        z = group.z()
        report["z_trace"] = str(images[z].trace())
        report["z_trace_zero"] = not images[z].trace() and not images[-z].trace()
        report["z_not_scalar"] = images[z] not in (identity, -identity)
        if n <= config.MAX_VERIFY_STRANDS:
            P = basis_change_Pn(n)
            diagonal = ExactMatrix.identity(1 << n)
            for j in range(1, n, 2):
                diagonal = diagonal @ diagonalized_odd_generator(n, j)
            report["z_diagonalized"] = (
                images[z] @ P == P @ diagonal and diagonal.is_diagonal() and not diagonal.trace()
            )
    checks = [
        report["distinct_images"] == report["expected"],
        report["minus_one_to_minus_identity"],
        report["generators_match"],
        report.get("homomorphism", True),
        report.get("z_trace_zero", True),
        report.get("z_not_scalar", True),
        report.get("z_diagonalized", True),
    ]
    report["passed"] = all(checks)
    log.info("phi checked", {"n": n, "seconds": round(time.time() - start, 3)})
    return report


@dataclass
class ImageEnumeration:
    """Result of a breadth-first closure over generator matrices."""

    kind: RepKind
    n: int
    pure: bool
    elements: Dict[Tuple, Optional[Permutation]] = field(default_factory=dict)
    permutation_consistent: bool = True

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains_minus_identity(self) -> bool:
        dim = len(next(iter(self.elements)))
        minus = (-ExactMatrix.identity(dim)).key()
        return minus in self.elements

    @property
    def projective_order(self) -> int:
        return self.order // 2 if self.contains_minus_identity() else self.order

    def kernel(self) -> set:
        """Elements mapping to the identity permutation."""
        return {k for k, p in self.elements.items() if p is not None and p.is_identity()}

    def permutation_image(self) -> set:
        return {p for p in self.elements.values() if p is not None}


def _generators(kind: RepKind, n: int, pure: bool) -> List[Tuple[ExactMatrix, Optional[Permutation]]]:
    gens = []
    for i in range(1, n):
        if pure:
            gens.append((pure_generator(n, i, kind), None))
        else:
            gens.append((generator_image(kind, n, i, 1), Permutation.transposition(n, i)))
    return gens


def enumerate_image(kind: RepKind, n: int, pure: bool = False) -> ImageEnumeration:
    """
    Breadth-first enumeration of the group generated by the sigma_i images
    (pure=False) or by their squares (pure=True).

    Args:
        kind: PI or PI_PRIME
        n: number of strands
        pure: enumerate the pure braid image instead of the full image

    Returns:
        ImageEnumeration with every element keyed by its canonical entries
    """
    if n < 2:
        raise IndexOutOfRangeError(f"need n >= 2, got {n}")
    if pure:
        check_cap("strands", n, config.MAX_H_STRANDS)
    else:
        check_cap("strands", n, config.MAX_G_STRANDS)
    log = logger.with_suite("enumerate")
    start = time.time()
    gens = _generators(kind, n, pure)
    identity = ExactMatrix.identity(1 << n)
    result = ImageEnumeration(kind, n, pure)
    result.elements[identity.key()] = None if pure else Permutation.identity(n)
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        perm = result.elements[current.key()]
        for matrix, step in gens:
            product = current @ matrix
            key = product.key()
            image = None if pure else perm * step
            if key not in result.elements:
                result.elements[key] = image
                queue.append(product)
            elif not pure and result.elements[key] != image:
                result.permutation_consistent = False
        if len(result.elements) % 5000 == 0:
            log.debug("enumeration progress", {"elements": len(result.elements)})
    log.info(
        "enumeration finished",
        {"kind": kind.value, "n": n, "pure": pure, "order": result.order,
         "seconds": round(time.time() - start, 3)},
    )
    return result


def generator_square_pattern(kind: RepKind, n: int) -> List[str]:
    """'+I' or '-I' for the square of each pure generator image."""
    identity = ExactMatrix.identity(1 << n)
    pattern = []
    for i in range(1, n):
        g = pure_generator(n, i, kind)
        square = g @ g
        pattern.append("+I" if square == identity else "-I" if square == -identity else "other")
    return pattern


def pure_relations_hold(kind: RepKind, n: int) -> bool:
    """Pure generators anticommute with neighbours and commute with the rest."""
    g = {i: pure_generator(n, i, kind) for i in range(1, n)}
    for i in g:
        for j in g:
            if j <= i:
                continue
            if j == i + 1 and not g[i].anticommutes_with(g[j]):
                return False
            if j >= i + 2 and not g[i].commutes_with(g[j]):
                return False
    return True


def quotient_report(kind: RepKind, n: int) -> Dict[str, Any]:
    """
    Orders of the full and pure images and the exactness checks of
    1 -> H_n -> G_n -> S_n -> 1.

    For PI_PRIME with n >= 3 the kernel is larger than H'_n: it also holds
    sqrt(-1) I, so only the inclusion of H'_n in the kernel is required.
    """
    full = enumerate_image(kind, n)
    pure = enumerate_image(kind, n, pure=True)
    kernel = full.kernel()
    perm_order = len(full.permutation_image())
    report = {
        "n": n,
        "kind": kind.value,
        "order_G": full.order,
        "projective_order_G": full.projective_order,
        "order_H": pure.order,
        "quotient_order": full.order // pure.order if pure.order else 0,
        "expected_order_G": factorial(n) * pure.order if kind is RepKind.PI else None,
        "permutation_well_defined": full.permutation_consistent,
        "permutation_image_order": perm_order,
        "kernel_order": len(kernel),
        "kernel_is_H": kernel == set(pure.elements),
        "H_in_kernel": set(pure.elements) <= kernel,
    }
    report["exact_sequence"] = (
        report["permutation_well_defined"]
        and perm_order == factorial(n)
        and (report["kernel_is_H"] if kind is RepKind.PI else report["H_in_kernel"])
    )
    return report
