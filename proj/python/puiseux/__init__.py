"""Exact Puiseux-series roots of monic polynomials over k[[x1, ..., xn]].

Rationals come back as fractions.Fraction; reports otherwise follow the CLI
JSON schema (1-based indices, precision "exact", "none" or a Fraction).
"""

import json
from fractions import Fraction

from . import _puiseux
from ._puiseux import (
    CapExceeded,
    MultipleRoot,
    ParseError,
    PrecisionFailure,
    PuiseuxError,
    Unsplittable,
    compose,
    inverse,
    is_blowdown_composition,
    is_blowup_composition,
    normalize_equation,
    normalize_series,
    schema_version,
)

__all__ = [
    "CapExceeded",
    "MultipleRoot",
    "ParseError",
    "PrecisionFailure",
    "PuiseuxError",
    "Unsplittable",
    "compose",
    "cone_check",
    "integrality",
    "inverse",
    "is_blowdown_composition",
    "is_blowup_composition",
    "minimal_polynomial",
    "normalize_equation",
    "normalize_series",
    "planted",
    "principalize",
    "schema_version",
    "solve",
]


def _fraction(pair):
    return Fraction(int(pair[0]), int(pair[1]))


def _decode(node, key=None):
    if key in ("witness", "precision", "gamma", "beta", "residual_floor"):
        return _rationals(node)
    if isinstance(node, dict):
        if set(node) == {"num", "den", "exponents"}:
            return {
                "coefficient": Fraction(int(node["num"]), int(node["den"])),
                "exponents": [_fraction(e) for e in node["exponents"]],
            }
        return {k: _decode(v, k) for k, v in node.items()}
    if isinstance(node, list):
        if key == "apexes":
            return [_rationals(a) for a in node]
        return [_decode(v) for v in node]
    return node


def _rationals(node):
    if isinstance(node, str):
        return node
    if len(node) == 2 and not isinstance(node[0], list):
        return _fraction(node)
    return [_fraction(e) for e in node]


def _coords(vector):
    return [str(Fraction(c)) for c in vector]


def solve(equation, precision=8, max_steps=64, first_vertical=True):
    """Roots of a monic equation such as "z^2 - x1 - x2" up to total degree precision."""
    return _decode(json.loads(_puiseux.solve_json(equation, str(Fraction(precision)), max_steps, first_vertical)))


def cone_check(generators):
    """S-cone test; returns the report with either a witness or a reduction map."""
    return _decode(json.loads(_puiseux.cone_check_json([_coords(g) for g in generators])))


def principalize(sets):
    """Order-preserving map principalizing each set of exponent vectors."""
    return _decode(json.loads(_puiseux.principalize_json([[_coords(v) for v in s] for s in sets])))


def minimal_polynomial(series):
    """Minimal polynomial of a finite Puiseux series given as text."""
    return _decode(json.loads(_puiseux.minpoly_json(series)))


def integrality(equation):
    """Whether a monic equation has all coefficients in k[[x]]."""
    return _decode(json.loads(_puiseux.integrality_json(equation)))


def planted(n, m, seed, precision=6):
    """Random instance with known roots, solved and checked."""
    return _decode(json.loads(_puiseux.planted_json(n, m, seed, str(Fraction(precision)))))
