#!/usr/bin/env python3
"""
Exact arithmetic in the cyclotomic field Q(zeta_8).

An element is c0 + c1*z + c2*z^2 + c3*z^3 with z = zeta_8 = (1 + i)/sqrt(2)
and z^4 = -1. Internally the four rational coefficients are stored as integer
numerators over one positive common denominator, reduced so that the gcd of
all five integers is 1. That representation is canonical, so equality and
hashing are plain tuple comparisons.

Useful identities: z^2 = sqrt(-1), z - z^3 = sqrt(2), conj(z) = -z^3.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd
from typing import Tuple, Union

Rational = Union[int, Fraction]

_ZETA_APPROX = [cmath.exp(1j * cmath.pi * k / 4) for k in range(4)]


def _as_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


class CycloNum:
    """Immutable element of Q(zeta_8)."""

    __slots__ = ("_a", "_d", "_hash")

    def __init__(self, c0: Rational = 0, c1: Rational = 0, c2: Rational = 0, c3: Rational = 0):
        coeffs = [_as_fraction(c) for c in (c0, c1, c2, c3)]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = tuple(int(c * den) for c in coeffs)
        self._set(nums, den)

    def _set(self, nums: Tuple[int, int, int, int], den: int) -> None:
        if den != 1:
            g = gcd(nums[0], nums[1], nums[2], nums[3], den)
            if g != 1:
                nums = (nums[0] // g, nums[1] // g, nums[2] // g, nums[3] // g)
                den //= g
        if not (nums[0] or nums[1] or nums[2] or nums[3]):
            den = 1
        self._a = nums
        self._d = den
        self._hash = None

    @classmethod
    def _raw(cls, a0: int, a1: int, a2: int, a3: int, den: int) -> CycloNum:
        """Build from integer numerators and a positive denominator, reducing."""
        obj = object.__new__(cls)
        obj._set((a0, a1, a2, a3), den)
        return obj

    @classmethod
    def from_rational(cls, value: Rational) -> CycloNum:
        f = _as_fraction(value)
        return cls._raw(f.numerator, 0, 0, 0, f.denominator)

    @classmethod
    def zeta_power(cls, k: int) -> CycloNum:
        """z^k for any integer k (z has order 8)."""
        k %= 8
        sign = 1 if k < 4 else -1
        nums = [0, 0, 0, 0]
        nums[k % 4] = sign
        return cls._raw(nums[0], nums[1], nums[2], nums[3], 1)

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def c0(self) -> Fraction:
        return Fraction(self._a[0], self._d)

    @property
    def c1(self) -> Fraction:
        return Fraction(self._a[1], self._d)

    @property
    def c2(self) -> Fraction:
        return Fraction(self._a[2], self._d)

    @property
    def c3(self) -> Fraction:
        return Fraction(self._a[3], self._d)

    @property
    def coefficients(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2, self.c3)

    @property
    def numerators(self) -> Tuple[int, int, int, int]:
        return self._a

    @property
    def denominator(self) -> int:
        return self._d

    def is_rational(self) -> bool:
        return not (self._a[1] or self._a[2] or self._a[3])

    def is_real(self) -> bool:
        return self == self.conj()

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c0

    # ------------------------------------------------------------------
    # Field operations
    # ------------------------------------------------------------------

    def _coerce(self, other) -> CycloNum:
        if isinstance(other, CycloNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.from_rational(other)
        return NotImplemented

    def __add__(self, other) -> CycloNum:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._a, other._a
        d1, d2 = self._d, other._d
        if d1 == d2:
            return CycloNum._raw(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], d1)
        return CycloNum._raw(
            a[0] * d2 + b[0] * d1,
            a[1] * d2 + b[1] * d1,
            a[2] * d2 + b[2] * d1,
            a[3] * d2 + b[3] * d1,
            d1 * d2,
        )

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        a = self._a
        obj = object.__new__(CycloNum)
        obj._a = (-a[0], -a[1], -a[2], -a[3])
        obj._d = self._d
        obj._hash = None
        return obj

    def __sub__(self, other) -> CycloNum:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> CycloNum:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> CycloNum:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a0, a1, a2, a3 = self._a
        b0, b1, b2, b3 = other._a
        # reduction modulo z^4 = -1
        return CycloNum._raw(
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            self._d * other._d,
        )

    __rmul__ = __mul__

    def galois(self, j: int) -> CycloNum:
        """Apply the automorphism z -> z^j (j odd)."""
        if j % 2 == 0:
            raise ValueError("Galois automorphisms of Q(zeta_8) need odd j")
        nums = [0, 0, 0, 0]
        for k, coeff in enumerate(self._a):
            e = (k * j) % 8
            if e < 4:
                nums[e] += coeff
            else:
                nums[e - 4] -= coeff
        return CycloNum._raw(nums[0], nums[1], nums[2], nums[3], self._d)

    def conj(self) -> CycloNum:
        """Complex conjugate: (c0, c1, c2, c3) -> (c0, -c3, -c2, -c1)."""
        a0, a1, a2, a3 = self._a
        return CycloNum._raw(a0, -a3, -a2, -a1, self._d)

    def norm(self) -> Fraction:
        """Field norm down to Q: product of the four Galois conjugates."""
        product = self * self.galois(3) * self.galois(5) * self.galois(7)
        return product.as_rational()

    def inverse(self) -> CycloNum:
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_8)")
        others = self.galois(3) * self.galois(5) * self.galois(7)
        n = (self * others).as_rational()
        return others * CycloNum.from_rational(1 / n)

    def __truediv__(self, other) -> CycloNum:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> CycloNum:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int) -> CycloNum:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------
    # Comparison, hashing, display
    # ------------------------------------------------------------------

    def __bool__(self) -> bool:
        a = self._a
        return bool(a[0] or a[1] or a[2] or a[3])

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloNum):
            return self._d == other._d and self._a == other._a
        if isinstance(other, (int, Fraction)):
            return self == CycloNum.from_rational(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._a, self._d))
        return self._hash

    def sort_key(self) -> Tuple[int, ...]:
        return (self._d,) + self._a

    def approx(self) -> complex:
        """Floating evaluation with z = exp(i*pi/4); display and diagnostics only."""
        return sum(
            (c / self._d) * _ZETA_APPROX[k] for k, c in enumerate(self._a) if c
        ) + 0j

    def __str__(self) -> str:
        basis = ("", "z", "z^2", "z^3")
        parts = []
        for k, coeff in enumerate(self.coefficients):
            if not coeff:
                continue
            negative = coeff < 0
            mag = -coeff if negative else coeff
            if basis[k] and mag == 1:
                body = basis[k]
            elif basis[k]:
                body = f"{mag}*{basis[k]}"
            else:
                body = str(mag)
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"CycloNum('{self}')"


ZERO = CycloNum._raw(0, 0, 0, 0, 1)
ONE = CycloNum._raw(1, 0, 0, 0, 1)
MINUS_ONE = -ONE
ZETA = CycloNum.zeta_power(1)
ZETA_BAR = ZETA.conj()
I = CycloNum.zeta_power(2)
SQRT2 = CycloNum._raw(0, 1, 0, -1, 1)
INV_SQRT2 = SQRT2.inverse()


def add(a: CycloNum, b: CycloNum) -> CycloNum:
    return a + b


def mul(a: CycloNum, b: CycloNum) -> CycloNum:
    return a * b


def conj(a: CycloNum) -> CycloNum:
    return a.conj()


def approx(a: CycloNum) -> complex:
    return a.approx()


def sqrt2_power(k: int) -> CycloNum:
    """(sqrt 2)^k for any integer k, kept exact."""
    base = SQRT2 if k >= 0 else INV_SQRT2
    half, odd = divmod(abs(k), 2)
    scale = Fraction(2) ** half if k >= 0 else Fraction(1, 2) ** half
    result = CycloNum.from_rational(scale)
    return result * base if odd else result
