"""Canonical JSON emission and model-file loading.

Emission is byte-deterministic: keys sorted, rationals as reduced "a/b"
strings, matrices as row-major integer arrays.
"""

from __future__ import annotations

import json
import sys
from typing import Any, Mapping

from .duality import CyReport, DualModel, WeightLattice, dual_superpotential
from .errors import LGDualError, ParseError
from .groups import (
    DiagonalGroup,
    KernelGroup,
    elementary_divisors,
    format_rational,
    group_from_generators,
)
from .linalg import IntMatrix
from .model import CharacterSum, ExponentMatrix, Factorization, QuotientLGModel, format_polynomial, parse_polynomial

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib


def _flat(v: Any) -> bool:
    return not isinstance(v, (list, dict))


def _encode(obj: Any, indent: int) -> str:
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k), ensure_ascii=False)}: {_encode(obj[k], indent + 1)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if all(_flat(x) for x in obj):
            return "[" + ", ".join(json.dumps(x, ensure_ascii=False) for x in obj) + "]"
        return "[\n" + ",\n".join(inner + _encode(x, indent + 1) for x in obj) + "\n" + pad + "]"
    return json.dumps(obj, ensure_ascii=False)


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, scalar arrays kept on one line."""
    return _encode(obj, 0) + "\n"


def matrix_json(m: IntMatrix) -> list[list[int]]:
    return m.tolist()


def ratvec_json(v) -> list[str]:
    return [format_rational(x) for x in v]


def group_json(g: DiagonalGroup) -> dict:
    return {
        "ambient_rank": g.ambient_rank,
        "order": g.order,
        "elementary_divisors": elementary_divisors(g),
        "lambda_basis": [ratvec_json(b) for b in g.lambda_basis],
        "generators": [ratvec_json(v) for v in g.generators],
    }


def kernel_json(k: KernelGroup) -> dict:
    out = {
        "ambient_rank": k.ambient_rank,
        "torus_rank": k.torus_rank,
        "finite_divisors": list(k.finite_divisors),
        "finite_order": k.finite_order,
        "lambda_basis": None if k.lambda_basis is None else [ratvec_json(b) for b in k.lambda_basis],
        "generators": [ratvec_json(v) for v in k.generators],
    }
    if k.is_finite:
        out["order"] = k.finite_order
    return out


def exponents_json(p: ExponentMatrix) -> dict:
    return {"variables": list(p.variables), "polynomial": format_polynomial(p), "P": matrix_json(p.P)}


def model_json(model: QuotientLGModel) -> dict:
    out = exponents_json(model.exponents)
    out["group"] = group_json(model.group)
    return out


def character_sum_json(c: CharacterSum) -> dict:
    return {"torus": c.torus, "characters": [list(v) for v in c.characters]}


def factorization_json(f: Factorization) -> dict:
    return {"A": matrix_json(f.A), "Btau": matrix_json(f.Btau), "M_basis": [list(b) for b in f.M_basis]}


def dual_json(d: DualModel) -> dict:
    return {
        "source": model_json(d.source),
        "factorization": factorization_json(d.factorization),
        "Ptau": matrix_json(d.Ptau),
        "GT": kernel_json(d.GT),
        "B": matrix_json(d.B),
        "Atau": matrix_json(d.Atau),
        "restricted_dual_superpotential": character_sum_json(dual_superpotential(d.factorization)),
    }


def weights_json(w: WeightLattice) -> dict:
    return {
        "basis": [list(q) for q in w.basis],
        "rank": w.rank,
        "generator": None if w.generator is None else list(w.generator),
    }


def cy_json(r: CyReport) -> dict:
    return {
        "square": r.square,
        "invertible": r.invertible,
        "sign_uniform": r.sign_uniform,
        "sum_matches_det": r.sum_matches_det,
        "weights_row": None if r.weights_row is None else list(r.weights_row),
        "weights_sum": None if r.weights_row is None else sum(r.weights_row),
        "det": r.det,
        "calabi_yau": r.is_calabi_yau,
        "reasons": r.reasons(),
    }


def parse_model_text(text: str) -> dict:
    """Model file contents as a dict; JSON is tried first, then TOML."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        try:
            data = tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            raise ParseError(f"model file is neither JSON nor TOML: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("model file must contain an object/table")
    return data


def model_from_dict(data: Mapping) -> QuotientLGModel:
    unknown = set(data) - {"variables", "polynomial", "group", "name"}
    if unknown:
        raise ParseError(f"unknown model fields: {sorted(unknown)}")
    variables = data.get("variables")
    poly = data.get("polynomial")
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise ParseError("'variables' must be a list of strings")
    if not isinstance(poly, str):
        raise ParseError("'polynomial' must be a string")
    gens = data.get("group", [])
    if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
        raise ParseError("'group' must be a list of generator vectors")
    p = parse_polynomial(poly, variables)
    try:
        g = group_from_generators(len(variables), gens)
    except LGDualError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad group generator: {exc}") from exc
    return QuotientLGModel(p, g)


def load_model_text(text: str) -> QuotientLGModel:
    return model_from_dict(parse_model_text(text))


def model_file_dict(model: QuotientLGModel) -> dict:
    """Model-file representation, suitable for writing back out."""
    return {
        "variables": list(model.exponents.variables),
        "polynomial": format_polynomial(model.exponents),
        "group": [ratvec_json(v) for v in model.group.generators],
    }
