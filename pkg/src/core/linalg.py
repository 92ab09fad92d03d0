#!/usr/bin/env python3
"""
Dense exact matrices over Q(zeta_8).

Tensor products follow the "left into right" convention:

    X (x) A = [[a X, b X],
               [c X, d X]]      for A = [[a, b], [c, d]],

i.e. blocks are entries of the RIGHT factor scaling copies of the LEFT one.
With that convention tensor site j of an n-site product is carried by bit
j-1 of the row/column index, so site operators are built by bit-window
addressing instead of Kronecker chains.

Storage is dense (rows of CycloNum, zeros share one object); products skip
zero entries, which keeps the many monomial and two-per-row matrices of the
braid representations cheap.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))
from src.core import config
from src.core.cyclo import ONE, ZERO, CycloNum
from src.core.errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    SingularMatrixError,
    check_cap,
)

Scalar = Union[CycloNum, int, Fraction]
Row = Tuple[CycloNum, ...]


def _scalar(value: Scalar) -> CycloNum:
    if isinstance(value, CycloNum):
        return value
    return CycloNum.from_rational(value)


class ExactMatrix:
    """Immutable square matrix with CycloNum entries."""

    __slots__ = ("_rows", "_dim", "_support", "_hash")

    def __init__(self, rows: Sequence[Sequence[Scalar]]):
        dim = len(rows)
        converted = []
        for row in rows:
            if len(row) != dim:
                raise DimensionMismatchError(f"matrix is not square: row of length {len(row)} in dim {dim}")
            converted.append(tuple(_scalar(v) for v in row))
        self._rows: Tuple[Row, ...] = tuple(converted)
        self._dim = dim
        self._support = None
        self._hash = None

    @classmethod
    def _from_rows(cls, rows: Tuple[Row, ...]) -> ExactMatrix:
        obj = object.__new__(cls)
        obj._rows = rows
        obj._dim = len(rows)
        obj._support = None
        obj._hash = None
        return obj

    @classmethod
    def from_support(cls, dim: int, entries: Iterable[Tuple[int, int, CycloNum]]) -> ExactMatrix:
        """Build from (row, col, value) triples; unspecified entries are zero."""
        rows = [[ZERO] * dim for _ in range(dim)]
        for i, j, v in entries:
            rows[i][j] = v
        return cls._from_rows(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, dim: int) -> ExactMatrix:
        return cls.scalar(ONE, dim)

    @classmethod
    def zero(cls, dim: int) -> ExactMatrix:
        row = (ZERO,) * dim
        return cls._from_rows((row,) * dim)

    @classmethod
    def scalar(cls, value: Scalar, dim: int) -> ExactMatrix:
        value = _scalar(value)
        return cls.from_support(dim, ((i, i, value) for i in range(dim)))

    @classmethod
    def diag(cls, values: Sequence[Scalar]) -> ExactMatrix:
        return cls.from_support(len(values), ((i, i, _scalar(v)) for i, v in enumerate(values)))

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def rows(self) -> Tuple[Row, ...]:
        return self._rows

    def __getitem__(self, index: Tuple[int, int]) -> CycloNum:
        i, j = index
        return self._rows[i][j]

    def support(self) -> List[List[Tuple[int, CycloNum]]]:
        """Per-row list of (column, value) for the nonzero entries."""
        if self._support is None:
            self._support = [
                [(j, v) for j, v in enumerate(row) if v] for row in self._rows
            ]
        return self._support

    def nonzero_count(self) -> int:
        return sum(len(r) for r in self.support())

    def key(self) -> Tuple[Row, ...]:
        """Canonical hashable content, used for group enumeration."""
        return self._rows

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _check_same_dim(self, other: ExactMatrix, op: str) -> None:
        if not isinstance(other, ExactMatrix):
            raise TypeError(f"cannot {op} ExactMatrix and {type(other).__name__}")
        if other._dim != self._dim:
            raise DimensionMismatchError(f"{op}: dims {self._dim} and {other._dim}")

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_same_dim(other, "add")
        return ExactMatrix._from_rows(tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self._rows, other._rows)
        ))

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_same_dim(other, "subtract")
        return ExactMatrix._from_rows(tuple(
            tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self._rows, other._rows)
        ))

    def __neg__(self) -> ExactMatrix:
        return self.scale(-ONE)

    def scale(self, value: Scalar) -> ExactMatrix:
        value = _scalar(value)
        rows = []
        for row in self.support():
            new = [ZERO] * self._dim
            for j, v in row:
                new[j] = v * value
            rows.append(tuple(new))
        return ExactMatrix._from_rows(tuple(rows))

    def __rmul__(self, value: Scalar) -> ExactMatrix:
        if isinstance(value, (CycloNum, int, Fraction)):
            return self.scale(value)
        return NotImplemented

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_same_dim(other, "multiply")
        dim = self._dim
        right = other.support()
        rows = []
        for row in self.support():
            acc = {}
            for k, a in row:
                for j, b in right[k]:
                    p = a * b
                    prev = acc.get(j)
                    acc[j] = p if prev is None else prev + p
            new = [ZERO] * dim
            for j, v in acc.items():
                if v:
                    new[j] = v
            rows.append(tuple(new))
        return ExactMatrix._from_rows(tuple(rows))

    def __pow__(self, exponent: int) -> ExactMatrix:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ExactMatrix.identity(self._dim)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def transpose(self) -> ExactMatrix:
        return ExactMatrix._from_rows(tuple(zip(*self._rows)))

    def dagger(self) -> ExactMatrix:
        """Conjugate transpose."""
        return ExactMatrix._from_rows(tuple(
            tuple(v.conj() if v else ZERO for v in col) for col in zip(*self._rows)
        ))

    def trace(self) -> CycloNum:
        total = ZERO
        for i in range(self._dim):
            v = self._rows[i][i]
            if v:
                total = total + v
        return total

    def inverse(self) -> ExactMatrix:
        """Exact Gauss-Jordan elimination over Q(zeta_8)."""
        dim = self._dim
        work = [list(row) + [ONE if i == j else ZERO for j in range(dim)]
                for i, row in enumerate(self._rows)]
        for col in range(dim):
            pivot = next((r for r in range(col, dim) if work[r][col]), None)
            if pivot is None:
                raise SingularMatrixError(f"matrix of dim {dim} is singular (column {col})")
            work[col], work[pivot] = work[pivot], work[col]
            inv = work[col][col].inverse()
            work[col] = [v * inv if v else ZERO for v in work[col]]
            for r in range(dim):
                factor = work[r][col]
                if r == col or not factor:
                    continue
                pivot_row = work[col]
                work[r] = [a - factor * b if b else a for a, b in zip(work[r], pivot_row)]
        return ExactMatrix._from_rows(tuple(tuple(row[dim:]) for row in work))

    def kron(self, other: ExactMatrix) -> ExactMatrix:
        """self (x) other, blocks are entries of `other` times copies of `self`."""
        p, q = self._dim, other._dim
        left, right = self.support(), other.support()
        entries = []
        for ra in range(q):
            for ca, a in right[ra]:
                for rx in range(p):
                    for cx, x in left[rx]:
                        entries.append((ra * p + rx, ca * p + cx, a * x))
        return ExactMatrix.from_support(p * q, entries)

    # ------------------------------------------------------------------
    # Predicates
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.support())

    def is_identity(self) -> bool:
        return self == ExactMatrix.identity(self._dim)

    def is_diagonal(self) -> bool:
        return all(all(j == i for j, _ in row) for i, row in enumerate(self.support()))

    def is_unitary(self) -> bool:
        return (self @ self.dagger()).is_identity()

    def commutes_with(self, other: ExactMatrix) -> bool:
        return self @ other == other @ self

    def anticommutes_with(self, other: ExactMatrix) -> bool:
        return (self @ other + other @ self).is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._dim == other._dim and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self) -> str:
        return f"ExactMatrix(dim={self._dim}, nnz={self.nonzero_count()})"


# ----------------------------------------------------------------------
# Module-level operations
# ----------------------------------------------------------------------

def kron(X: ExactMatrix, A: ExactMatrix) -> ExactMatrix:
    return X.kron(A)


def kron_chain(*factors: ExactMatrix) -> ExactMatrix:
    """factors[0] (x) factors[1] (x) ... ; factors[0] sits on site 1."""
    if not factors:
        return ExactMatrix.identity(1)
    result = factors[0]
    for f in factors[1:]:
        result = result.kron(f)
    return result


def kron_power(X: ExactMatrix, k: int) -> ExactMatrix:
    return kron_chain(*([X] * k)) if k > 0 else ExactMatrix.identity(1)


def matmul(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    return A @ B


def trace(A: ExactMatrix) -> CycloNum:
    return A.trace()


def _site_width(B: ExactMatrix) -> int:
    width = B.dim.bit_length() - 1
    if B.dim != 1 << width:
        raise DimensionMismatchError(f"block of dim {B.dim} is not a power of 2")
    return width


def place(num_sites: int, site: int, B: ExactMatrix) -> ExactMatrix:
    """
    I_2^(site-1) (x) B (x) I_2^(rest) on num_sites tensor factors.

    B covers w = log2(dim B) consecutive sites starting at `site` (1-based).

    Args:
        num_sites: number of 2-dimensional tensor factors
        site: first site covered by B
        B: block of dimension 2^w

    Returns:
        The 2^num_sites dimensional operator
    """
    check_cap("strands", num_sites, config.MAX_DENSE_STRANDS)
    width = _site_width(B)
    if site < 1 or site + width - 1 > num_sites:
        raise IndexOutOfRangeError(
            f"block of {width} sites at site {site} does not fit in {num_sites} sites"
        )
    dim = 1 << num_sites
    shift = site - 1
    mask = (1 << width) - 1
    block = B.support()
    rows = []
    for r in range(dim):
        br = (r >> shift) & mask
        base = r & ~(mask << shift)
        new = [ZERO] * dim
        for bc, v in block[br]:
            new[base | (bc << shift)] = v
        rows.append(tuple(new))
    return ExactMatrix._from_rows(tuple(rows))


def site_operator(n: int, i: int, B: ExactMatrix) -> ExactMatrix:
    """I_2^(i-1) (x) B (x) I_2^(n-i-1) for a 4x4 block B, 1 <= i <= n-1."""
    if B.dim != 4:
        raise DimensionMismatchError(f"site_operator needs a 4x4 block, got dim {B.dim}")
    if not 1 <= i <= n - 1:
        raise IndexOutOfRangeError(f"site index {i} outside [1, {n - 1}]")
    return place(n, i, B)


def conjugate_by(P: ExactMatrix, A: ExactMatrix, P_inv: Optional[ExactMatrix] = None) -> ExactMatrix:
    """P^-1 A P, exact. A precomputed inverse may be supplied."""
    if P.dim != A.dim:
        raise DimensionMismatchError(f"conjugate_by: dims {P.dim} and {A.dim}")
    if P_inv is None:
        P_inv = P.inverse()
    return P_inv @ A @ P
