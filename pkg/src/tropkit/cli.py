"""Command-line interface: ``tropkit <command> -i input.json [-o out.json] ...``.

Exit status 0 on success, 1 on domain errors (an error object is written
as the output), 2 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import io
from .polyhedra import slice_polyhedron
from .complexes import ComplexError, PolyhedralComplex, SupportMismatch
from .cycles import CycleError, TropicalCycle, balancing_check, cycle_add, pushforward
from .fans import (
    AdmissibleFan,
    CompatibilityError,
    FanError,
    fan_from_complex,
    is_complete,
    orbit_intersection_dim,
    orbit_table,
    proper_intersection_check,
    slice as fan_slice,
    tevelev_meets,
)
from .tropical import HeightData, dual_complex, tropical_cone, tropical_hypersurface, weight_subdivision

COMMANDS = (
    "tropicalize", "initial", "subdivision", "dual", "balance", "add", "pushforward",
    "fan-build", "fan-check", "orbits", "complete", "meets", "orbit-dim", "proper-check", "plot",
)


class DomainError(Exception):
    def __init__(self, kind, message, witness=None):
        super().__init__(message)
        self.kind = kind
        self.witness = witness


def _load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise io.SchemaError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise io.SchemaError(f"{path} is not valid JSON: {e}") from None


def _inputs(args, k):
    if len(args.input) < k:
        raise io.SchemaError(f"{args.command} needs {k} input file(s)")
    return [_load(p) for p in args.input[:k]]


def _is_poly(d):
    return isinstance(d, dict) and "terms" in d


def _hypersurface_or_cycle(d):
    if _is_poly(d):
        return tropical_hypersurface(io.polynomial_from_json(d)).cycle
    return io.cycle_from_json(d)


def _trop_cone(d):
    cyc = _hypersurface_or_cycle(d)
    return tropical_cone(cyc)


def _witness_cells(w):
    a, b, inter = w
    return {"a": io.polyhedron_to_json(a), "b": io.polyhedron_to_json(b), "intersection": io.polyhedron_to_json(inter)}


# commands -------------------------------------------------------------------------

def cmd_tropicalize(args):
    (d,) = _inputs(args, 1)
    T = tropical_hypersurface(io.polynomial_from_json(d))
    out = io.cycle_to_json(T.cycle)
    out["vertices"] = [io.vec(c.vertices[0]) for c in T.complex.cells_of_dim(0)]
    return out


def cmd_initial(args):
    (d,) = _inputs(args, 1)
    f = io.polynomial_from_json(d)
    w = _omega(args, f.n)
    g = f.initial_form(w)
    out = io.polynomial_to_json(g)
    out["omega_weight"] = io.q(f.omega_weight(w))
    out["is_monomial"] = g.is_monomial()
    return out


def cmd_subdivision(args):
    (d,) = _inputs(args, 1)
    f = io.polynomial_from_json(d)
    S = weight_subdivision(HeightData.from_polynomial(f))
    out = io.complex_to_json(S.cells)
    exps = list(f.terms)
    out["points"] = [[list(exps[j]) for j in S.cell_points[c]] for c in S.cells.maximal_cells]
    return out


def cmd_dual(args):
    (d,) = _inputs(args, 1)
    f = io.polynomial_from_json(d)
    D = dual_complex(HeightData.from_polynomial(f))
    cells = D.complex.cells
    pairs = []
    for Q, dual in sorted(D.pairing.items(), key=lambda kv: kv[1].sort_key()):
        pairs.append({"cell": io.polyhedron_to_json(dual), "dual": io.polyhedron_to_json(Q)})
    out = io.complex_to_json(D.complex)
    out["pairing"] = pairs
    out["all_cells"] = len(cells)
    return out


def cmd_balance(args):
    (d,) = _inputs(args, 1)
    Z = _hypersurface_or_cycle(d)
    r = balancing_check(Z)
    if r.balanced:
        return {"balanced": True}
    details = {"cell": io.polyhedron_to_json(r.cell), "witness": io.int_vec(r.witness), "quotient_sum": io.int_vec(r.quotient_sum)}
    if args.witness:
        details["failures"] = [
            {"cell": io.polyhedron_to_json(nu), "witness": io.int_vec(lift)} for nu, _, lift in r.failures
        ]
    raise DomainError("unbalanced", "cycle is not balanced", details)


def cmd_add(args):
    ds = _inputs(args, 2)
    total = _hypersurface_or_cycle(ds[0])
    for d in ds[1:] + [_load(p) for p in args.input[2:]]:
        total = cycle_add(total, _hypersurface_or_cycle(d))
    return io.cycle_to_json(total)


def cmd_pushforward(args):
    (d,) = _inputs(args, 1)
    if not args.matrix:
        raise io.SchemaError("pushforward needs -m/--matrix")
    A = io.matrix_from_json(_load(args.matrix))
    return io.cycle_to_json(pushforward(_hypersurface_or_cycle(d), A))


def cmd_fan_build(args):
    (d,) = _inputs(args, 1)
    if _is_poly(d):
        C = tropical_hypersurface(io.polynomial_from_json(d)).complex
    else:
        C = io.complex_from_json(d)
    return io.fan_to_json(fan_from_complex(C))


def cmd_fan_check(args):
    (d,) = _inputs(args, 1)
    F = io.fan_from_json(d)
    return {"valid": True, "cones": len(F.cones), "maximal": len(F.maximal_cones)}


def cmd_orbits(args):
    (d,) = _inputs(args, 1)
    F = io.fan_from_json(d)
    T = orbit_table(F)
    recs = [
        {
            "face": r.face_id,
            "fiber": r.fiber,
            "orbit_dim": r.orbit_dim,
            "face_dim": r.face_dim,
            "component": r.is_component,
            "cone": io.polyhedron_to_json(F.cones[r.face_id]),
        }
        for r in T
    ]
    order = sorted([i, j] for i, j in T.order if i != j)
    return {"n": F.n, "orbits": recs, "closure_order": order}


def cmd_complete(args):
    (d,) = _inputs(args, 1)
    return {"complete": is_complete(io.fan_from_json(d))}


def cmd_meets(args):
    d, fd = _inputs(args, 2)
    TW = _trop_cone(d)
    F = io.fan_from_json(fd)
    return {
        "cones": [
            {"cone": io.polyhedron_to_json(c), "meets": tevelev_meets(TW, F, c)} for c in F.cones
        ]
    }


def cmd_orbit_dim(args):
    d, fd = _inputs(args, 2)
    Z = _hypersurface_or_cycle(d)
    F = io.fan_from_json(fd)
    S1 = fan_slice(F, 1)
    rows = []
    for tau in S1.cells:
        k = orbit_intersection_dim(Z, None, tau)
        rows.append({"face": io.polyhedron_to_json(tau), "dim": "empty" if k is None else k})
    return {"faces": rows}


def cmd_proper_check(args):
    d, fd = _inputs(args, 2)
    return {"proper": proper_intersection_check(_trop_cone(d), io.fan_from_json(fd))}


def cmd_plot(args):
    (d,) = _inputs(args, 1)
    weights = {}
    if _is_poly(d):
        Z = tropical_hypersurface(io.polynomial_from_json(d)).cycle
        C, weights = Z.complex, Z.weights
        if args.slice is not None and not Z.is_empty:
            # slice of the tropical cone: s-dilate of the cells, same weights
            s = io.parse_rational(args.slice)
            cone = tropical_cone(Z)
            pieces = {}
            for cell, c in zip(cone.base.maximal_cells, cone.cones):
                pieces[slice_polyhedron(c, s)] = weights.get(cell)
            C = PolyhedralComplex.from_maximal(Z.n, list(pieces), validate=False)
            weights = pieces
    elif isinstance(d, dict) and d.get("fan"):
        if args.slice is None:
            raise io.SchemaError("plotting a fan needs --slice")
        C = fan_slice(io.fan_from_json(d), io.parse_rational(args.slice))
    elif isinstance(d, dict) and "weights" in d:
        Z = io.cycle_from_json(d)
        C, weights = Z.complex, Z.weights
    else:
        C = io.complex_from_json(d)
    if C.n != 2:
        raise DomainError("unsupported-dimension", f"plotting needs ambient dimension 2, got {C.n}")
    return {"items": plot_items(C, weights)}


def plot_items(C: PolyhedralComplex, weights: dict) -> list[dict]:
    items = []
    for cell in C.cells:
        label = weights.get(cell)
        if cell.dim == 1:
            if cell.lines:
                items.append({"kind": "line", "through": io.vec(cell.vertices[0]), "direction": io.int_vec(cell.lines[0]), "label": label})
            elif cell.rays:
                items.append({"kind": "ray", "from": io.vec(cell.vertices[0]), "direction": io.int_vec(cell.rays[0]), "label": label})
            else:
                a, b = cell.vertices
                items.append({"kind": "segment", "from": io.vec(a), "to": io.vec(b), "label": label})
        elif cell.dim == 0 and not C.cofaces(cell):
            items.append({"kind": "point", "at": io.vec(cell.vertices[0]), "label": label})
    return items


def _omega(args, n):
    if args.omega is None:
        raise io.SchemaError("--omega is required")
    w = io.parse_vector(args.omega)
    if len(w) != n:
        raise io.SchemaError(f"--omega needs {n} coordinates")
    return w


HANDLERS = {
    "tropicalize": cmd_tropicalize,
    "initial": cmd_initial,
    "subdivision": cmd_subdivision,
    "dual": cmd_dual,
    "balance": cmd_balance,
    "add": cmd_add,
    "pushforward": cmd_pushforward,
    "fan-build": cmd_fan_build,
    "fan-check": cmd_fan_check,
    "orbits": cmd_orbits,
    "complete": cmd_complete,
    "meets": cmd_meets,
    "orbit-dim": cmd_orbit_dim,
    "proper-check": cmd_proper_check,
    "plot": cmd_plot,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tropkit", description="Exact tropical and polyhedral computations.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("-i", "--input", action="append", default=[], help="input JSON (repeat for several)")
    p.add_argument("-o", "--output", help="output path (default: stdout)")
    p.add_argument("-m", "--matrix", help="matrix JSON for pushforward")
    p.add_argument("--omega", help='weight vector such as "1/2,3"')
    p.add_argument("--slice", help='slice value s such as "1/2"')
    p.add_argument("--witness", action="store_true", help="report every failure, not just the first")
    return p


def _emit(obj, path):
    text = io.dumps(obj)
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        result = HANDLERS[args.command](args)
    except io.SchemaError as e:
        sys.stderr.write(f"tropkit: malformed input: {e}\n")
        return 2
    except DomainError as e:
        _emit({"error": {"type": e.kind, "message": str(e), "witness": e.witness}}, args.output)
        return 1
    except (FanError, ComplexError) as e:
        w = _witness_cells(e.witness) if e.witness else None
        _emit({"error": {"type": "fan-axiom" if isinstance(e, FanError) else "complex-axiom", "message": str(e), "witness": w}}, args.output)
        return 1
    except CompatibilityError as e:
        _emit({"error": {"type": "incompatible", "message": str(e), "witness": io.polyhedron_to_json(e.witness)}}, args.output)
        return 1
    except (CycleError, SupportMismatch, ValueError) as e:
        _emit({"error": {"type": "domain", "message": str(e), "witness": None}}, args.output)
        return 1
    _emit(result, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
