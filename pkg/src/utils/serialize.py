#!/usr/bin/env python3
"""
Exact JSON rendering

CycloNum values are rendered as exact text ("z - z^3") or, with coeffs=True,
as coefficient objects {"c0": "p/q", ...}; matrices as {"dim", "rows"}. Output is always
json.dumps(..., sort_keys=True, indent=2) so identical runs are
byte-identical. Floating renderings appear only when asked for.
"""

import json
import sys
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))
from src.braids.braid import BraidWord, Permutation
from src.braids.invariants import InvariantResult
from src.core import config
from src.core.cyclo import CycloNum
from src.core.linalg import ExactMatrix
from src.groups.chars import CharTable, Multiplicity
from src.groups.esgroup import ESElement


def cyclo_text(value: CycloNum) -> str:
    return str(value)


def cyclo_json(value: CycloNum) -> Dict[str, str]:
    return {f"c{k}": str(c) for k, c in enumerate(value.coefficients)}


def approx_text(value: CycloNum, digits: int = None) -> str:
    digits = config.APPROX_DIGITS if digits is None else digits
    z = value.approx()
    re_part = 0.0 if abs(z.real) < 10 ** -digits else z.real
    im_part = 0.0 if abs(z.imag) < 10 ** -digits else z.imag
    return f"{re_part:.{digits}g}{im_part:+.{digits}g}j"


def _cyclo(value: CycloNum, coeffs: bool) -> Any:
    return cyclo_json(value) if coeffs else cyclo_text(value)


def matrix_json(matrix: ExactMatrix, coeffs: bool = False) -> Dict[str, Any]:
    return {"dim": matrix.dim, "rows": [[_cyclo(v, coeffs) for v in row] for row in matrix.rows]}


def invariant_json(result: InvariantResult) -> Dict[str, Any]:
    return {
        "word": result.word,
        "strands": result.strands,
        "e": result.exponent_sum,
        "c": result.components,
        "t_r_plus": result.t_r_plus,
        "t_r_minus": result.t_r_minus,
        "j4": result.j4,
        "j4_direct": result.j4_direct,
        "j4_routes_agree": result.routes_agree,
        "arf": {"defined": result.arf_defined, "value": result.arf_value},
    }


def char_table_json(table: CharTable, coeffs: bool = False) -> Dict[str, Any]:
    return {
        "m": table.m,
        "nu": table.nu,
        "order": table.order,
        "classes": [
            {"representative": str(cls[0]), "size": len(cls)} for cls in table.classes
        ],
        "characters": [
            {"name": name, "dim": dim, "values": [_cyclo(v, coeffs) for v in row]}
            for name, dim, row in zip(table.names, table.dims, table.rows)
        ],
    }


def multiplicity_json(mult: Multiplicity) -> Dict[str, Any]:
    return {"name": mult.name, "dim": mult.dim, "count": mult.count}


def to_jsonable(obj: Any, approx: bool = False, coeffs: bool = False) -> Any:
    """
    Convert reports into plain JSON values.

    With approx=True every dict holding CycloNum values gains an "approx"
    entry mapping those keys to floating renderings. With coeffs=True exact
values become {"c0".."c3"} objects instead of text.
    """
    if isinstance(obj, CycloNum):
        return _cyclo(obj, coeffs)
    if isinstance(obj, ExactMatrix):
        return matrix_json(obj, coeffs)
    if isinstance(obj, InvariantResult):
        return to_jsonable(invariant_json(obj), approx, coeffs)
    if isinstance(obj, CharTable):
        return char_table_json(obj, coeffs)
    if isinstance(obj, Multiplicity):
        return multiplicity_json(obj)
    if isinstance(obj, (ESElement, Permutation, BraidWord)):
        return str(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        out = {str(k): to_jsonable(v, approx, coeffs) for k, v in obj.items()}
        if approx:
            approximations = {
                str(k): approx_text(v) for k, v in obj.items() if isinstance(v, CycloNum)
            }
            if approximations:
                out["approx"] = approximations
        return out
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [to_jsonable(v, approx, coeffs) for v in obj]
        return sorted(items, key=json.dumps) if isinstance(obj, (set, frozenset)) else items
    return obj


def dumps(obj: Any, approx: bool = False, coeffs: bool = False) -> str:
    return json.dumps(to_jsonable(obj, approx, coeffs), sort_keys=True, indent=2)
