"""Proper convex piecewise-affine functions, conjugates and coherent complexes.

A function ``f: R^n -> R u {inf}`` is stored through its epigraph, a
polyhedron in ``R^n x R`` whose recession cone contains the upward vertical
direction but no vertical line.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .complexes import PolyhedralComplex
from .linalg import dot, rational_vector, rref, to_fraction
from .polyhedra import Polyhedron


class ProperPolyhedralFunction:
    def __init__(self, epigraph: Polyhedron):
        n = epigraph.n - 1
        if epigraph.is_empty:
            raise ValueError("a proper function has a nonempty epigraph")
        up = tuple(0 for _ in range(n)) + (1,)
        if not epigraph.contains_polyhedron(
            Polyhedron.from_generators(n + 1, [epigraph.vertices[0]], [up])
        ):
            raise ValueError("epigraph must be closed under adding upward vertical directions")
        if any(all(x == 0 for x in l[:n]) for l in epigraph.lines):
            raise ValueError("function takes the value -inf")
        self.n = n
        self.epigraph = epigraph

    @classmethod
    def from_max_affine(cls, n: int, pieces: Sequence, domain: Polyhedron | None = None):
        """``f(w) = max_i <u_i, w> + c_i`` on ``domain`` (all of R^n by default)."""
        ineqs = []
        for u, c in pieces:
            u = rational_vector(u)
            ineqs.append((tuple(-x for x in u) + (1,), to_fraction(c)))
        eqs = []
        if domain is not None:
            if domain.is_empty:
                raise ValueError("empty domain")
            ineqs += [(tuple(u) + (0,), c) for u, c in domain.ineqs]
            eqs += [(tuple(u) + (0,), c) for u, c in domain.eqs]
        return cls(Polyhedron.from_halfspaces(n + 1, ineqs, eqs))

    @classmethod
    def from_epigraph(cls, P: Polyhedron):
        return cls(P)

    @classmethod
    def from_pieces(cls, n: int, pieces: Sequence):
        """Convex function given by ``(cell, u, c)`` triples, value ``<u, w> + c`` on ``cell``.

        The pieces must agree on overlaps and glue to a convex function; this is
        checked at every vertex and ray of every cell.
        """
        verts, rays, lines = [], [tuple(0 for _ in range(n)) + (1,)], []
        for cell, u, c in pieces:
            u, c = rational_vector(u), to_fraction(c)
            verts += [tuple(v) + (dot(u, v) + c,) for v in cell.vertices]
            rays += [tuple(r) + (dot(u, r),) for r in cell.rays]
            lines += [tuple(l) + (dot(u, l),) for l in cell.lines]
        f = cls(Polyhedron.from_generators(n + 1, verts, rays, lines))
        for cell, u, c in pieces:
            u, c = rational_vector(u), to_fraction(c)
            w = cell.relint_point()
            if f(w) != dot(u, w) + c or any(f(v) != dot(u, v) + c for v in cell.vertices):
                raise ValueError("pieces do not glue to a convex function")
        return f

    # evaluation --------------------------------------------------------------
    def __call__(self, w):
        """Value at ``w``; ``math.inf`` outside the domain."""
        w = rational_vector(w)
        n = self.n
        E = self.epigraph
        z = None
        for u, c in E.eqs:
            if u[n]:
                z = (c - dot(u[:n], w)) / u[n]
                break
        if z is None:
            cands = [(c - dot(u[:n], w)) / u[n] for u, c in E.ineqs if u[n] > 0]
            z = max(cands)
        if E.contains(tuple(w) + (z,)):
            return z
        return math.inf

    @property
    def domain(self) -> Polyhedron:
        n = self.n
        return self.epigraph.linear_image([[int(i == j) for j in range(n + 1)] for i in range(n)])

    def _lower_faces(self):
        n = self.n
        out = []
        for F in self.epigraph.faces():
            vertical = all(u[n] == 0 for u, _ in F.eqs) and all(u[n] >= 0 for u, _ in F.ineqs)
            if not vertical:
                out.append(F)
        return out

    def coherent_complex(self) -> PolyhedralComplex:
        """Domains of linearity: projections of the faces of the epigraph inside the graph."""
        n = self.n
        proj = [[int(i == j) for j in range(n + 1)] for i in range(n)]
        return PolyhedralComplex(n, {F.linear_image(proj) for F in self._lower_faces()})

    def pieces(self) -> list[tuple[Polyhedron, tuple, Fraction]]:
        """Maximal domains of linearity with a peg ``u`` and constant ``c``."""
        n = self.n
        C = self.coherent_complex()
        out = []
        for cell in C.maximal_cells:
            u, c = _affine_fit(self, cell)
            out.append((cell, u, c))
        return out

    def __eq__(self, other):
        return isinstance(other, ProperPolyhedralFunction) and self.epigraph == other.epigraph

    def __hash__(self):
        return hash(self.epigraph)

    def __repr__(self):
        return f"ProperPolyhedralFunction(n={self.n}, epigraph={self.epigraph!r})"


def _affine_fit(f: ProperPolyhedralFunction, cell: Polyhedron):
    """``(u, c)`` with ``f = <u, .> + c`` on ``cell``."""
    n = f.n
    rows = []
    for v in cell.vertices:
        rows.append(tuple(v) + (Fraction(1), f(v)))
    base = cell.vertices[0]
    fb = f(base)
    for r in cell.rays:
        p = tuple(a + b for a, b in zip(base, r))
        rows.append(tuple(r) + (Fraction(0), f(p) - fb))
    for l in cell.lines:
        p = tuple(a + b for a, b in zip(base, l))
        rows.append(tuple(l) + (Fraction(0), f(p) - fb))
    R, piv = rref(rows, n + 2)
    sol = [Fraction(0)] * (n + 1)
    for row, p in zip(R, piv):
        if p == n + 1:
            raise ValueError("function is not affine on the cell")
        sol[p] = row[n + 1]
    return tuple(sol[:n]), sol[n]


def conjugate(f: ProperPolyhedralFunction) -> ProperPolyhedralFunction:
    """Legendre-Fenchel conjugate ``f*(u) = sup <u, w> - f(w)``."""
    n = f.n
    E = f.epigraph
    pegs = [(v[:n], -v[n]) for v in E.vertices]
    ineqs = []
    eqs = []
    for r in E.rays:
        if any(r[:n]):
            # <u, r> - rho <= 0
            ineqs.append((tuple(-x for x in r[:n]), -Fraction(r[n])))
    for l in E.lines:
        eqs.append((l[:n], Fraction(l[n])))
    if ineqs or eqs:
        dom = Polyhedron.from_halfspaces(n, ineqs, eqs)
    else:
        dom = None
    return ProperPolyhedralFunction.from_max_affine(n, pegs, dom)


def dual_cell(f: ProperPolyhedralFunction, sigma: Polyhedron) -> Polyhedron:
    """``{u : f*(u) = <u, w> - f(w) for all w in sigma}`` for a cell of the coherent complex."""
    n = f.n
    E = f.epigraph
    w0 = sigma.vertices[0]
    z0 = f(w0)
    eqs, ineqs = [], []
    for v in sigma.vertices[1:]:
        eqs.append((tuple(a - b for a, b in zip(v, w0)), f(v) - z0))
    base = tuple(w0)
    for r in sigma.rays:
        p = tuple(a + b for a, b in zip(base, r))
        eqs.append((tuple(r), f(p) - z0))
    for l in sigma.lines:
        p = tuple(a + b for a, b in zip(base, l))
        eqs.append((tuple(l), f(p) - z0))
    for v in E.vertices:
        # <u, w0> - z0 >= <u, w> - z
        ineqs.append((tuple(a - b for a, b in zip(w0, v[:n])), z0 - v[n]))
    for r in E.rays:
        if any(r[:n]):
            ineqs.append((tuple(-x for x in r[:n]), -Fraction(r[n])))
    for l in E.lines:
        eqs.append((l[:n], Fraction(l[n])))
    return Polyhedron.from_halfspaces(n, ineqs, eqs)


def dual_complex_of_function(f: ProperPolyhedralFunction):
    """Coherent complexes of ``f`` and ``f*`` with the order-reversing pairing.

    Returns ``(C, Cf, pairing)`` where ``pairing`` maps each cell of ``C`` to
    its dual cell in ``Cf``.
    """
    C = f.coherent_complex()
    Cf = conjugate(f).coherent_complex()
    pairing = {}
    for sigma in C.cells:
        d = dual_cell(f, sigma)
        if d not in Cf:
            raise AssertionError("dual cell missing from the conjugate's complex")
        pairing[sigma] = d
    return C, Cf, pairing
