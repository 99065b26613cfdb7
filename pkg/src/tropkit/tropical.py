"""Tropical hypersurfaces from coefficient valuations (min convention).

The regular subdivision of the exponents lifted by the coefficient
valuations is dual to the complex of linearity domains of
``g(w) = min_j a_j + <u_j, w>``. The tropical hypersurface is the part of
that dual complex coming from positive-dimensional cells, and each maximal
cell carries the lattice length of its dual edge.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .complexes import PolyhedralComplex
from .cycles import TropicalCycle, cycles_equal, localize
from .linalg import dot, rational_vector, to_fraction
from .polyhedra import Polyhedron, cone_over, project_graph, slice_polyhedron
from .valued import ResidueLaurentPolynomial, ValuedLaurentPolynomial


@dataclass(frozen=True)
class HeightData:
    """Integer points ``u_j`` with heights ``a_j`` (``math.inf`` allowed)."""

    points: tuple
    heights: tuple

    def __post_init__(self):
        pts = tuple(tuple(int(x) for x in p) for p in self.points)
        hs = tuple(h if h == math.inf else to_fraction(h) for h in self.heights)
        if len(pts) != len(hs) or not pts:
            raise ValueError("need equally many points and heights, at least one")
        if len({len(p) for p in pts}) != 1:
            raise ValueError("points of different dimensions")
        if all(h == math.inf for h in hs):
            raise ValueError("at least one height must be finite")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "heights", hs)

    @classmethod
    def from_polynomial(cls, f: ValuedLaurentPolynomial) -> "HeightData":
        if f.is_zero:
            raise ValueError("the zero polynomial has no height data")
        pts, hs = f.heights()
        return cls(tuple(pts), tuple(hs))

    @property
    def n(self) -> int:
        return len(self.points[0])

    @property
    def finite_support(self) -> tuple[int, ...]:
        return tuple(j for j, h in enumerate(self.heights) if h != math.inf)

    def lifted(self, j):
        return tuple(self.points[j]) + (self.heights[j],)


class WeightSubdivision:
    """Regular subdivision of the weight polytope.

    ``cells`` is the subdivision as a complex in ``M_R``; ``cell_points[Q]``
    lists the indices ``j`` whose lifted point lies on the lower face over ``Q``.
    """

    def __init__(self, data: HeightData, polytope: Polyhedron, cells: PolyhedralComplex, cell_points: dict, face_pairs=None):
        self.face_pairs = face_pairs if face_pairs is not None else [
            (cells.cells[i], cells.cells[j]) for i, j in cells.incidence
        ]
        self.data = data
        self.polytope = polytope
        self.cells = cells
        self.cell_points = cell_points

    def __repr__(self):
        return f"WeightSubdivision(cells={len(self.cells)}, maximal={len(self.cells.maximal_cells)})"


def weight_subdivision(data: HeightData) -> WeightSubdivision:
    n = data.n
    idx = data.finite_support
    lifted = [data.lifted(j) for j in idx]
    up = tuple(0 for _ in range(n)) + (1,)
    epi = Polyhedron.from_generators(n + 1, lifted, [up])
    fs, order = epi.face_lattice()
    lower = []
    for k, F in enumerate(fs):
        # the only ray of the epigraph points up, so vertical faces are those containing it
        if not F.rays:
            lower.append(k)
    lower_set = set(lower)
    cell_points = {}
    proj = {}
    for k in lower:
        F = fs[k]
        Q = project_graph(F)
        proj[k] = Q
        cell_points[Q] = tuple(j for j, p in zip(idx, lifted) if F.contains(p))
    pairs = [(proj[a], proj[b]) for a, b in order if a in lower_set and b in lower_set]
    polytope = Polyhedron.from_generators(n, [data.points[j] for j in idx])
    cells = PolyhedralComplex.with_face_pairs(n, cell_points, pairs)
    return WeightSubdivision(data, polytope, cells, cell_points, pairs)


def _dual_cell(data: HeightData, S: Sequence[int]) -> Polyhedron:
    n = data.n
    j0 = S[0]
    u0, a0 = data.points[j0], data.heights[j0]
    eqs, ineqs = [], []
    inS = set(S)
    for j in data.finite_support:
        if j == j0:
            continue
        diff = tuple(a - b for a, b in zip(data.points[j], u0))
        rhs = a0 - data.heights[j]
        if not any(diff):
            continue
        (eqs if j in inS else ineqs).append((diff, rhs))
    return Polyhedron.from_halfspaces(n, ineqs, eqs)


class DualComplex:
    """Linearity domains of ``g`` with the pairing to the weight subdivision."""

    def __init__(self, subdivision: WeightSubdivision, complex: PolyhedralComplex, pairing: dict, face_pairs=()):
        self.face_pairs = face_pairs
        self.subdivision = subdivision
        self.complex = complex
        self.pairing = pairing  # cell of the subdivision -> dual cell
        self.inverse = {v: k for k, v in pairing.items()}

    def __repr__(self):
        return f"DualComplex(cells={len(self.complex)})"


def dual_complex(data: HeightData, subdivision: WeightSubdivision | None = None) -> DualComplex:
    sub = subdivision or weight_subdivision(data)
    pairing = {Q: _dual_cell(data, S) for Q, S in sub.cell_points.items()}
    pairs = [(pairing[b], pairing[a]) for a, b in sub.face_pairs]
    C = PolyhedralComplex.with_face_pairs(data.n, pairing.values(), pairs)
    return DualComplex(sub, C, pairing, pairs)


def lattice_length(edge: Polyhedron) -> int:
    """Number of lattice points on a lattice segment minus one."""
    a, b = edge.vertices
    diff = [x - y for x, y in zip(a, b)]
    g = 0
    for x in diff:
        if x.denominator != 1:
            raise ValueError("edge endpoints are not lattice points")
        g = math.gcd(g, int(x))
    return g


class TropicalHypersurface:
    """Tropical hypersurface of ``f`` as a weighted (n-1)-cycle.

    ``dual_pairing`` sends each cell of the cycle's complex to its dual cell
    in the weight subdivision.
    """

    def __init__(self, f, cycle: TropicalCycle, dual: DualComplex | None, dual_pairing: dict):
        self.f = f
        self.cycle = cycle
        self.dual = dual
        self.dual_pairing = dual_pairing

    @property
    def n(self) -> int:
        return self.cycle.n

    @property
    def is_empty(self) -> bool:
        return self.cycle.is_empty

    @property
    def complex(self) -> PolyhedralComplex:
        return self.cycle.complex

    @property
    def weights(self) -> dict:
        return self.cycle.weights

    def contains(self, w) -> bool:
        return self.cycle.contains(w)

    def __contains__(self, w):
        return self.contains(w)

    def __repr__(self):
        return f"TropicalHypersurface(n={self.n}, cells={len(self.cycle.weights)})"


def tropical_hypersurface(f: ValuedLaurentPolynomial) -> TropicalHypersurface:
    if isinstance(f, ResidueLaurentPolynomial):
        f = f.to_valued()
    n = f.n
    if len(f) < 2:
        return TropicalHypersurface(f, TropicalCycle.zero(n, n - 1), None, {})
    data = HeightData.from_polynomial(f)
    D = dual_complex(data)
    weights = {}
    pairing = {}
    for Q, dual in D.pairing.items():
        if Q.dim >= 1:
            pairing[dual] = Q
            if Q.dim == 1:
                weights[dual] = lattice_length(Q)
    pairs = [(a, b) for a, b in D.face_pairs if a in pairing and b in pairing]
    skeleton = PolyhedralComplex.with_face_pairs(n, pairing, pairs)
    cycle = TropicalCycle.from_complex(skeleton, n - 1, weights)
    return TropicalHypersurface(f, cycle, D, pairing)


def contains(T: TropicalHypersurface, w) -> bool:
    return T.contains(w)


def corner_locus_contains(f: ValuedLaurentPolynomial, w) -> bool:
    """The minimum defining ``v_w(f)`` is attained at least twice."""
    w = rational_vector(w)
    vals = sorted(c.valuation() + dot(u, w) for u, c in f.terms.items())
    return len(vals) >= 2 and vals[0] == vals[1]


# tropical cone ------------------------------------------------------------------

class TropicalCone:
    """``Trop_W``: the closed cone over ``Trop_v x {1}`` in ``N_R x R_+``."""

    def __init__(self, n: int, base: PolyhedralComplex, cones: list[Polyhedron]):
        self.n = n
        self.base = base
        self.cones = cones

    def slice(self, s) -> list[Polyhedron]:
        """Maximal pieces of ``{w : (w, s) in Trop_W}``."""
        out = {slice_polyhedron(c, s) for c in self.cones}
        return sorted((p for p in out if not p.is_empty), key=Polyhedron.sort_key)

    def slice_complex(self, s) -> PolyhedralComplex:
        return PolyhedralComplex.from_maximal(self.n, self.slice(s), validate=False)

    def contains(self, p) -> bool:
        return any(c.contains(p) for c in self.cones)

    def __repr__(self):
        return f"TropicalCone(n={self.n}, cones={len(self.cones)})"


def tropical_cone(T, subdivision: PolyhedralComplex | None = None) -> TropicalCone:
    """Closed cones over the maximal cells of ``T`` (or of ``subdivision``).

    ``T`` may be a hypersurface, a cycle or a complex. Cones over unpointed
    cells contain lines; they describe the set correctly but are not
    admissible, so build fans from a pointed subdivision
    (:func:`complexes.pointed_refinement`).
    """
    if isinstance(T, TropicalHypersurface):
        C = T.complex
    elif isinstance(T, TropicalCycle):
        C = T.complex
    else:
        C = T
    if len(C) == 0:
        raise ValueError("tropical cone of an empty set")
    if subdivision is not None:
        C = subdivision
    return TropicalCone(C.n, C, [cone_over(c) for c in C.maximal_cells])


# locality ------------------------------------------------------------------------

def trop_trop_check(f: ValuedLaurentPolynomial, w) -> bool:
    """``Trop_0(in_w f)`` equals the local cone of ``Trop_v(f)`` at ``w``, weights included."""
    g = f.initial_form(w).to_valued()
    lhs = tropical_hypersurface(g).cycle
    rhs = localize(tropical_hypersurface(f).cycle, w)
    return cycles_equal(lhs, rhs)
