#!/usr/bin/env python3
"""
Character theory of E_m^nu

Irreducible models:
    m = 2k      one 2^k-dimensional representation V1 (RHO1):
                x_1 -> i sigma_z on site 1, x_2j -> s on site j,
                x_2j+1 -> i sigma_z (x) sigma_z on sites (j, j+1)
    m = 2k-1    two 2^(k-1)-dimensional representations W1, W2 (LAMBDA1/2):
                RHO1 of rank 2k-2 on x_1..x_(2k-2), and
                x_(2k-1) -> +i sigma_z (W1) or -i sigma_z (W2) on site k-1
    any m       2^m one-dimensional characters L<beta>, trivial on the center
For nu = +1 every faithful model image is multiplied by i.

Big characters are computed as traces on the central classes; on a
non-central class some generator anticommutes with the representative,
so the value there is 0.
"""

import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))
from src.core import config
from src.core import matrices as mx
from src.core.cyclo import I, ONE, ZERO, CycloNum
from src.core.errors import (
    IndexOutOfRangeError,
    InvariantMismatchError,
    ParityError,
    check_cap,
)
from src.core.linalg import ExactMatrix, place
from src.groups.esgroup import ESElement, ExtraspecialGroup
from src.utils.structured_logger import get_logger

logger = get_logger("Chars", component="chars")

RHO1 = "RHO1"
LAMBDA1 = "LAMBDA1"
LAMBDA2 = "LAMBDA2"

_I_SIGMA_Z = mx.SIGMA_Z.scale(I)
_I_SIGMA_ZZ = mx.SIGMA_Z.kron(mx.SIGMA_Z).scale(I)


@dataclass(frozen=True)
class IrrepModel:
    """Explicit matrices for the generators of E_m^nu and for -1."""

    name: str
    m: int
    nu: int
    generators: Tuple[ExactMatrix, ...]
    minus_one: ExactMatrix

    @property
    def dim(self) -> int:
        return self.minus_one.dim

    def image(self, g: ESElement) -> ExactMatrix:
        result = ExactMatrix.identity(self.dim)
        for i, bit in enumerate(g.exponents()):
            if bit:
                result = result @ self.generators[i]
        return result @ self.minus_one if g.sign == -1 else result

    def character(self, g: ESElement) -> CycloNum:
        return self.image(g).trace()


def _rho1_generators(k: int) -> List[ExactMatrix]:
    """RHO1 images of x_1..x_2k on k sites, nu = -1."""
    gens = []
    for j in range(1, 2 * k + 1):
        if j == 1:
            gens.append(place(k, 1, _I_SIGMA_Z))
        elif j % 2 == 0:
            gens.append(place(k, j // 2, mx.S))
        else:
            gens.append(place(k, (j - 1) // 2, _I_SIGMA_ZZ))
    return gens


def irrep_matrices(m: int, nu: int, which: Union[str, int]) -> IrrepModel:
    """
    Generator images of an irreducible representation of E_m^nu.

    Args:
        m: rank
        nu: +1 or -1
        which: RHO1 (m even), LAMBDA1 / LAMBDA2 (m odd), or an int beta
            selecting the one-dimensional character x_i -> (-1)^beta_i

    Returns:
        IrrepModel whose matrices satisfy the defining relations exactly

    Raises:
        ParityError: RHO1 with odd m or LAMBDA with even m
    """
    check_cap("char_rank", m, config.MAX_CHAR_RANK)
    if isinstance(which, int):
        if not 0 <= which < (1 << m):
            raise IndexOutOfRangeError(f"beta {which} out of range for rank {m}")
        gens = tuple(
            ExactMatrix([[-1 if (which >> i) & 1 else 1]]) for i in range(m)
        )
        return IrrepModel(_linear_name(m, which), m, nu, gens, ExactMatrix.identity(1))

    if which == RHO1:
        if m % 2:
            raise ParityError(f"RHO1 needs even m, got {m}")
        k = m // 2
        gens = _rho1_generators(k)
        name = "V1"
    elif which in (LAMBDA1, LAMBDA2):
        if m % 2 == 0:
            raise ParityError(f"{which} needs odd m, got {m}")
        k = (m + 1) // 2
        sign = ONE if which == LAMBDA1 else -ONE
        if k == 1:
            gens = [ExactMatrix([[I * sign]])]
        else:
            gens = _rho1_generators(k - 1)
            gens.append(place(k - 1, k - 1, _I_SIGMA_Z.scale(sign)))
        name = "W1" if which == LAMBDA1 else "W2"
    else:
        raise ValueError(f"unknown irreducible model {which!r}")
    if nu == 1:
        gens = [g.scale(I) for g in gens]
    dim = gens[0].dim
    return IrrepModel(name, m, nu, tuple(gens), -ExactMatrix.identity(dim))


def _linear_name(m: int, beta: int) -> str:
    return "L" + "".join(str((beta >> i) & 1) for i in range(m))


def big_models(m: int, nu: int) -> List[IrrepModel]:
    if m % 2 == 0:
        return [irrep_matrices(m, nu, RHO1)]
    return [irrep_matrices(m, nu, LAMBDA1), irrep_matrices(m, nu, LAMBDA2)]


def relations_hold(model: IrrepModel) -> bool:
    """x_i^2 = nu, far generators commute, neighbours anticommute."""
    gens = model.generators
    identity = ExactMatrix.identity(model.dim)
    nu_image = identity if model.nu == 1 else model.minus_one
    for i, a in enumerate(gens):
        if a @ a != nu_image:
            return False
        for j in range(i + 1, len(gens)):
            b = gens[j]
            if j == i + 1:
                if b @ a != model.minus_one @ a @ b:
                    return False
            elif not a.commutes_with(b):
                return False
    return True


@dataclass
class CharTable:
    """Conjugacy classes and irreducible characters of E_m^nu."""

    m: int
    nu: int
    classes: List[Tuple[ESElement, ...]]
    names: List[str]
    dims: List[int]
    rows: List[List[CycloNum]]

    @property
    def order(self) -> int:
        return 1 << (self.m + 1)

    @property
    def representatives(self) -> List[ESElement]:
        return [c[0] for c in self.classes]

    @property
    def sizes(self) -> List[int]:
        return [len(c) for c in self.classes]

    def class_index(self) -> Dict[ESElement, int]:
        return {g: idx for idx, cls in enumerate(self.classes) for g in cls}

    def row(self, name: str) -> List[CycloNum]:
        return self.rows[self.names.index(name)]


def character_table(m: int, nu: int) -> CharTable:
    """
    Character table of E_m^nu.

    Rows are the big characters (V1, or W1 then W2) followed by the 2^m
    linear characters in lexicographic order of beta written x_1 first.
    """
    check_cap("char_rank", m, config.MAX_CHAR_RANK)
    start = time.time()
    group = ExtraspecialGroup(m, nu)
    classes = group.conjugacy_classes()
    reps = [c[0] for c in classes]
    gens = group.generators()

    names, dims, rows = [], [], []
    for model in big_models(m, nu):
        row = []
        for g in reps:
            anticommuting = any(g * x != x * g for x in gens)
            row.append(ZERO if anticommuting else model.character(g))
        names.append(model.name)
        dims.append(model.dim)
        rows.append(row)

    linear = sorted(range(1 << m), key=lambda beta: _linear_name(m, beta))
    for beta in linear:
        names.append(_linear_name(m, beta))
        dims.append(1)
        rows.append([
            -ONE if bin(beta & g.alpha).count("1") % 2 else ONE for g in reps
        ])

    if len(rows) != len(classes):
        raise InvariantMismatchError(
            f"E_{m}^{nu}: {len(rows)} irreducible characters for {len(classes)} classes"
        )
    logger.info(
        "character table built",
        {"m": m, "nu": nu, "classes": len(classes), "seconds": round(time.time() - start, 3)},
    )
    return CharTable(m, nu, classes, names, dims, rows)


def _inner(u: Sequence[CycloNum], v: Sequence[CycloNum], weights: Sequence[int]) -> CycloNum:
    """sum_c weights[c] u[c] conj(v[c])."""
    total = ZERO
    for w, a, b in zip(weights, u, v):
        if a and b:
            total = total + (a * b.conj()) * w
    return total


def _as_ints(row: Sequence[CycloNum]) -> Optional[List[int]]:
    """Integer values when every entry is a rational integer."""
    out = []
    for v in row:
        if v.denominator != 1 or not v.is_rational():
            return None
        out.append(v.numerators[0])
    return out


def row_orthogonality(table: CharTable) -> bool:
    """sum over classes of size * chi_i * conj(chi_j) = |G| delta_ij."""
    sizes = table.sizes
    int_rows = [_as_ints(r) for r in table.rows]
    for i, ri in enumerate(table.rows):
        for j in range(i, len(table.rows)):
            if int_rows[i] is not None and int_rows[j] is not None:
                value = CycloNum(sum(s * a * b for s, a, b in zip(sizes, int_rows[i], int_rows[j])))
            else:
                value = _inner(ri, table.rows[j], sizes)
            if value != (table.order if i == j else 0):
                logger.warning("row orthogonality failed", {"m": table.m, "rows": [i, j]})
                return False
    return True


def column_orthogonality(table: CharTable) -> bool:
    """sum over characters of chi(g) conj(chi(h)) = |C(g)| delta for class reps g, h."""
    columns = list(zip(*table.rows))
    int_cols = [_as_ints(c) for c in columns]
    ones = [1] * len(table.rows)
    for a, ca in enumerate(columns):
        for b in range(a, len(columns)):
            if int_cols[a] is not None and int_cols[b] is not None:
                value = CycloNum(sum(x * y for x, y in zip(int_cols[a], int_cols[b])))
            else:
                value = _inner(ca, columns[b], ones)
            expected = table.order // table.sizes[a] if a == b else 0
            if value != expected:
                logger.warning("column orthogonality failed", {"m": table.m, "columns": [a, b]})
                return False
    return True


@dataclass(frozen=True)
class Multiplicity:
    name: str
    dim: int
    count: int


def decompose(character: Sequence[CycloNum], table: CharTable) -> List[Multiplicity]:
    """
    Multiplicity of every irreducible in a class function.

    Args:
        character: values aligned with table.classes
        table: character table of the group

    Returns:
        One Multiplicity per irreducible, in table order

    Raises:
        InvariantMismatchError: a multiplicity is not a non-negative integer
    """
    if len(character) != len(table.classes):
        raise IndexOutOfRangeError(
            f"character has {len(character)} values for {len(table.classes)} classes"
        )
    result = []
    for name, dim, row in zip(table.names, table.dims, table.rows):
        value = _inner(character, row, table.sizes)
        if not value.is_rational():
            raise InvariantMismatchError(f"multiplicity of {name} is not rational: {value}")
        count = value.as_rational() / table.order
        if count.denominator != 1 or count < 0:
            raise InvariantMismatchError(f"multiplicity of {name} is {count}")
        result.append(Multiplicity(name, dim, int(count)))
    return result


def class_function(table: CharTable, values: Dict[ESElement, CycloNum]) -> List[CycloNum]:
    """
    Align per-element values with the table's classes.

    Raises:
        InvariantMismatchError: the values are not constant on some class
    """
    out = []
    for cls in table.classes:
        value = values[cls[0]]
        if any(values[g] != value for g in cls[1:]):
            raise InvariantMismatchError(f"value not constant on class of {cls[0]}")
        out.append(value)
    return out


def restriction_check(k: int) -> Dict[str, Any]:
    """
    Restrict V1 of E_2k^-1 to the subgroup generated by x_1..x_(2k-1).

    The restricted character must equal psi_1 + psi_2 on every element,
    and decomposing it over the table of E_(2k-1)^-1 must give W1 + W2.
    """
    if k < 1:
        raise IndexOutOfRangeError(f"restriction check needs k >= 1, got {k}")
    check_cap("restriction_k", k, config.MAX_RESTRICTION_K)
    rho = irrep_matrices(2 * k, -1, RHO1)
    lam1 = irrep_matrices(2 * k - 1, -1, LAMBDA1)
    lam2 = irrep_matrices(2 * k - 1, -1, LAMBDA2)
    sub = ExtraspecialGroup(2 * k - 1, -1)
    restricted = {}
    matches = True
    for g in sub.elements():
        lifted = ESElement(2 * k, -1, g.alpha, g.sign)
        restricted[g] = rho.character(lifted)
        if restricted[g] != lam1.character(g) + lam2.character(g):
            matches = False
    table = character_table(2 * k - 1, -1)
    multiplicities = decompose(class_function(table, restricted), table)
    expected = {"W1": 1, "W2": 1}
    decomposition_ok = all(mult.count == expected.get(mult.name, 0) for mult in multiplicities)
    return {
        "k": k,
        "character_matches": matches,
        "decomposes_as_W1_plus_W2": decomposition_ok,
        "passed": matches and decomposition_ok,
    }


def psi_closed_form(k: int) -> CycloNum:
    """(sqrt -1)^k 2^(k-1): the expected trace of W1 on z for nu = -1."""
    return (I ** k) * CycloNum(Fraction(1 << k, 2))


def central_values(m: int, nu: int) -> Dict[str, Dict[str, CycloNum]]:
    """Big-character values on +-1 and +-z (m odd) or +-1 (m even)."""
    group = ExtraspecialGroup(m, nu)
    central = [group.identity(), group.minus_one()]
    if m % 2:
        central += [group.z(), -group.z()]
    return {
        model.name: {str(g): model.character(g) for g in central}
        for model in big_models(m, nu)
    }


def twist_is_real(m: int) -> bool:
    """For nu = +1 and odd m, W1 and W2 take real values on the central elements."""
    if m % 2 == 0:
        raise ParityError(f"twist_is_real needs odd m, got {m}")
    return all(v.is_real() for vals in central_values(m, 1).values() for v in vals.values())


def table_report(m: int, nu: int, orthogonality: bool = True) -> Dict[str, Any]:
    """Consistency checks on the character table of E_m^nu."""
    table = character_table(m, nu)
    dims_square_sum = sum(d * d for d in table.dims)
    report: Dict[str, Any] = {
        "m": m,
        "nu": nu,
        "class_count": len(table.classes),
        "irreducible_count": len(table.rows),
        "dims": {name: dim for name, dim in zip(table.names, table.dims) if not name.startswith("L")},
        "linear_count": sum(1 for name in table.names if name.startswith("L")),
        "dim_square_sum": dims_square_sum,
        "order": table.order,
        "models_satisfy_relations": all(relations_hold(model) for model in big_models(m, nu)),
    }
    if orthogonality:
        report["row_orthogonality"] = row_orthogonality(table)
        report["column_orthogonality"] = column_orthogonality(table)
    if m % 2:
        k = (m + 1) // 2
        report["central_values"] = {
            name: {g: str(v) for g, v in vals.items()}
            for name, vals in central_values(m, nu).items()
        }
        if nu == -1:
            report["psi_closed_form"] = str(psi_closed_form(k))
            report["psi_matches_closed_form"] = (
                central_values(m, nu)["W1"][str(ExtraspecialGroup(m, nu).z())] == psi_closed_form(k)
            )
        else:
            report["twist_real"] = twist_is_real(m)
    else:
        k = m // 2
        report["class_equation"] = (1 << (2 * k + 1)) == (1 << (2 * k)) + (1 << k) ** 2
    checks = [
        dims_square_sum == table.order,
        report["models_satisfy_relations"],
        report.get("row_orthogonality", True),
        report.get("column_orthogonality", True),
        report.get("psi_matches_closed_form", True),
        report.get("twist_real", True),
        report.get("class_equation", True),
    ]
    report["passed"] = all(checks)
    return report
