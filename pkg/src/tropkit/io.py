"""Canonical JSON encodings of polynomials, complexes, cycles, fans and matrices.

Rationals are written as ``"p/q"`` strings (always with a denominator) and
integer normals as JSON integers. Complexes list their maximal cells in
canonical order; cycles add a ``weights`` array aligned with those cells.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .complexes import PolyhedralComplex
from .cycles import TropicalCycle
from .fans import AdmissibleFan
from .linalg import to_fraction
from .polyhedra import Polyhedron
from .valued import ResidueLaurentPolynomial, ValuedLaurentPolynomial, ValuedScalar


class SchemaError(ValueError):
    """Input does not match the expected JSON schema."""


def q(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def vec(v) -> str:
    return "(" + ",".join(q(x) for x in v) + ")"


def int_vec(v) -> str:
    return "(" + ",".join(str(int(x)) for x in v) + ")"


def parse_rational(s):
    if isinstance(s, bool):
        raise SchemaError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise SchemaError(f"rationals must be strings 'p/q', got {s!r}")
    try:
        return to_fraction(s)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise SchemaError(f"not a rational: {s!r}") from e


def parse_vector(s: str) -> tuple:
    """Parse ``"a/b,c/d"`` or ``"(a/b,c/d)"``."""
    s = s.strip().strip("()")
    if not s:
        return ()
    return tuple(parse_rational(p.strip()) for p in s.split(","))


def _int(x):
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(f"expected an integer, got {x!r}")
    return x


def _get(d, key, kind=None):
    if not isinstance(d, dict) or key not in d:
        raise SchemaError(f"missing key {key!r}")
    v = d[key]
    if kind is not None and not isinstance(v, kind):
        raise SchemaError(f"key {key!r} has the wrong type")
    return v


# polynomials ---------------------------------------------------------------------

def polynomial_to_json(f) -> dict:
    if isinstance(f, ResidueLaurentPolynomial):
        f = f.to_valued()
    terms = []
    for u, c in f.terms.items():
        terms.append({"exponent": list(u), "coeff": [[q(g), q(a)] for g, a in c.terms.items()]})
    return {"n": f.n, "terms": terms}


def polynomial_from_json(d) -> ValuedLaurentPolynomial:
    n = _int(_get(d, "n"))
    terms = {}
    for t in _get(d, "terms", list):
        u = tuple(_int(x) for x in _get(t, "exponent", list))
        if len(u) != n:
            raise SchemaError("exponent length does not match n")
        pairs = _get(t, "coeff", list)
        c = ValuedScalar()
        for p in pairs:
            if not isinstance(p, list) or len(p) != 2:
                raise SchemaError("coefficients are lists of [exponent, coefficient] pairs")
            c = c + ValuedScalar({parse_rational(p[0]): parse_rational(p[1])})
        if u in terms:
            raise SchemaError(f"repeated exponent {list(u)}")
        terms[u] = c
    return ValuedLaurentPolynomial(n, terms)


# polyhedra and complexes -----------------------------------------------------------

def polyhedron_to_json(P: Polyhedron) -> dict:
    return {
        "dim": P.dim,
        "ineqs": [{"u": list(u), "c": q(c)} for u, c in P.ineqs],
        "eqs": [{"u": list(u), "c": q(c)} for u, c in P.eqs],
        "generators": {
            "vertices": [vec(v) for v in P.vertices],
            "rays": [int_vec(r) for r in P.rays],
            "lines": [int_vec(l) for l in P.lines],
        },
    }


def polyhedron_from_json(d, n) -> Polyhedron:
    def constraints(key):
        out = []
        for h in d.get(key, []):
            u = [_int(x) for x in _get(h, "u", list)]
            if len(u) != n:
                raise SchemaError("constraint normal has the wrong length")
            out.append((tuple(u), parse_rational(_get(h, "c"))))
        return out

    if not isinstance(d, dict):
        raise SchemaError("cells must be objects")
    P = Polyhedron.from_halfspaces(n, constraints("ineqs"), constraints("eqs"))
    if "dim" in d and _int(d["dim"]) != P.dim:
        raise SchemaError(f"cell declares dim {d['dim']} but has dimension {P.dim}")
    return P


def complex_to_json(C: PolyhedralComplex, extra: dict | None = None) -> dict:
    out = {"n": C.n, "cells": [polyhedron_to_json(c) for c in C.maximal_cells]}
    if extra:
        out.update(extra)
    return out


def cells_from_json(d) -> tuple[int, list[Polyhedron]]:
    n = _int(_get(d, "n"))
    return n, [polyhedron_from_json(c, n) for c in _get(d, "cells", list)]


def complex_from_json(d, validate: bool = True) -> PolyhedralComplex:
    n, cells = cells_from_json(d)
    return PolyhedralComplex.from_maximal(n, cells, validate=validate)


def cycle_to_json(Z: TropicalCycle) -> dict:
    Z = Z.pruned()
    return complex_to_json(Z.complex, {"d": Z.d, "weights": Z.weight_list})


def cycle_from_json(d) -> TropicalCycle:
    n, cells = cells_from_json(d)
    dd = _int(_get(d, "d"))
    weights = [_int(w) for w in _get(d, "weights", list)]
    if len(weights) != len(cells):
        raise SchemaError("weights must align with the cells")
    return TropicalCycle(n, dd, list(zip(cells, weights)), validate=True)


def fan_to_json(F: AdmissibleFan) -> dict:
    return complex_to_json(F.complex, {"fan": True, "s_coordinate": F.n})


def fan_from_json(d) -> AdmissibleFan:
    n, cells = cells_from_json(d)
    if d.get("s_coordinate", n - 1) != n - 1:
        raise SchemaError("the s coordinate must be the last one")
    return AdmissibleFan.from_cones(cells, n - 1)


def matrix_from_json(d) -> list[list[int]]:
    rows = _get(d, "rows", list)
    out = [[x if isinstance(x, int) and not isinstance(x, bool) else parse_rational(x) for x in r] for r in rows]
    if not out or len({len(r) for r in out}) != 1:
        raise SchemaError("matrix rows must be nonempty and of equal length")
    return out


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
