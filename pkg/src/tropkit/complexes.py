"""Polyhedral complexes: face closure, validation, subdivisions, refinements."""
from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .linalg import rational_vector
from .polyhedra import (
    Polyhedron,
    local_cone_of_polyhedron,
    supports_equal,
    union_contains,
)


class ComplexError(ValueError):
    """Raised when cells violate the intersection axiom.

    ``witness`` is ``(A, B, A & B)``.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SupportMismatch(ValueError):
    pass


class PolyhedralComplex:
    """A finite face-closed set of polyhedra meeting along common faces.

    Cells are deduplicated by canonical form and sorted by (dim, canonical
    H-form), so the cell order does not depend on construction order.
    ``incidence`` holds index pairs ``(i, j)`` with ``cells[i]`` a face of
    ``cells[j]`` (reflexive).
    """

    def __init__(self, n: int, cells: Iterable[Polyhedron], incidence: set | None = None, *, generators: Iterable[Polyhedron] | None = None):
        self.n = n
        cells = sorted(set(cells), key=Polyhedron.sort_key)
        self.cells: tuple[Polyhedron, ...] = tuple(cells)
        self._index = {c: i for i, c in enumerate(self.cells)}
        # cells whose faces exhaust the complex; their face lattices give the incidence
        self._generators = list(generators) if generators is not None else None
        self._incidence = incidence
        self._above = None
        self._maximal = None

    @property
    def incidence(self) -> set:
        if self._incidence is None:
            gens = self._generators if self._generators is not None else self.cells
            self._incidence = _incidence(gens, self._index)
        return self._incidence

    def _structure(self):
        if self._above is None:
            above = {}
            for i, j in self.incidence:
                if i != j:
                    above.setdefault(i, set()).add(j)
            self._above = above
            self._maximal = tuple(i for i in range(len(self.cells)) if i not in above)

    @classmethod
    def with_face_pairs(cls, n: int, cells: Iterable[Polyhedron], pairs: Iterable[tuple]) -> "PolyhedralComplex":
        """Complex with a known face relation, given as (face, cell) pairs of polyhedra."""
        C = cls(n, cells)
        idx = C._index
        inc = {(j, j) for j in range(len(C.cells))}
        inc |= {(idx[a], idx[b]) for a, b in pairs}
        C._incidence = inc
        return C

    @classmethod
    def from_maximal(cls, n: int, cells: Iterable[Polyhedron], validate: bool = True) -> "PolyhedralComplex":
        cells = [c for c in cells if not c.is_empty]
        if validate:
            return validate_complex(cells, n)
        closure = set()
        for c in cells:
            closure.update(c.faces())
        return cls(n, closure, generators=cells)

    # structure -------------------------------------------------------------
    def index(self, cell: Polyhedron) -> int:
        return self._index[cell]

    def __contains__(self, cell) -> bool:
        return cell in self._index

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __eq__(self, other):
        return isinstance(other, PolyhedralComplex) and self.n == other.n and self.cells == other.cells

    def __hash__(self):
        return hash((self.n, self.cells))

    def __repr__(self):
        return f"PolyhedralComplex(n={self.n}, cells={len(self.cells)}, dim={self.dim})"

    @property
    def maximal_cells(self) -> list[Polyhedron]:
        self._structure()
        return [self.cells[i] for i in self._maximal]

    @property
    def dim(self) -> int:
        return max((c.dim for c in self.cells), default=-1)

    @property
    def is_pure(self) -> bool:
        d = self.dim
        return all(c.dim == d for c in self.maximal_cells)

    @property
    def is_pointed(self) -> bool:
        return all(c.is_pointed for c in self.cells)

    def cells_of_dim(self, k: int) -> list[Polyhedron]:
        return [c for c in self.cells if c.dim == k]

    def is_face(self, a: Polyhedron, b: Polyhedron) -> bool:
        return (self._index[a], self._index[b]) in self.incidence

    def cofaces(self, cell: Polyhedron, codim: int | None = None) -> list[Polyhedron]:
        """Cells having ``cell`` as a proper face (optionally of fixed codimension)."""
        self._structure()
        i = self._index[cell]
        out = [self.cells[j] for j in sorted(self._above.get(i, ()))]
        if codim is not None:
            out = [c for c in out if c.dim == cell.dim + codim]
        return out

    def faces_of(self, cell: Polyhedron) -> list[Polyhedron]:
        j = self._index[cell]
        return [self.cells[i] for i, k in sorted(self.incidence) if k == j]

    def contains(self, w) -> bool:
        return any(c.contains(w) for c in self.maximal_cells)

    def carrier(self, w) -> Polyhedron | None:
        """The cell whose relative interior contains ``w`` (None off the support)."""
        w = rational_vector(w)
        best = None
        for c in self.cells:
            if c.contains(w) and (best is None or c.dim < best.dim):
                best = c
        return best

    @property
    def support(self) -> list[Polyhedron]:
        return self.maximal_cells


def _incidence(cells, index):
    inc = {(j, j) for j in range(len(index))}
    for c in cells:
        fs, order = c.face_lattice()
        ids = [index.get(f) for f in fs]
        for a, b in order:
            if ids[a] is not None and ids[b] is not None:
                inc.add((ids[a], ids[b]))
    return inc


def validate_complex(cells: Sequence[Polyhedron], n: int | None = None) -> PolyhedralComplex:
    """Face-close ``cells`` and check the intersection axiom.

    Raises :class:`ComplexError` with the offending pair otherwise. Checking
    the input cells pairwise suffices: a face of A meets a face of B in a
    face of both as soon as A and B meet in a common face.
    """
    cells = [c for c in cells if not c.is_empty]
    if n is None:
        if not cells:
            raise ValueError("ambient dimension needed for an empty complex")
        n = cells[0].n
    for c in cells:
        if c.n != n:
            raise ValueError("cells live in different ambient spaces")
    uniq = sorted(set(cells), key=Polyhedron.sort_key)
    face_sets = [set(c.faces()) for c in uniq]
    for a in range(len(uniq)):
        A = uniq[a]
        for b in range(a + 1, len(uniq)):
            B = uniq[b]
            if B in face_sets[a] or A in face_sets[b]:
                continue
            inter = A.intersection(B)
            if inter.is_empty:
                continue
            if inter not in face_sets[a] or inter not in face_sets[b]:
                raise ComplexError(
                    "cells intersect in a set that is not a common face", (A, B, inter)
                )
    closure = set()
    for fs in face_sets:
        closure |= fs
    return PolyhedralComplex(n, closure, generators=uniq)


def is_subdivision(D: PolyhedralComplex, C: PolyhedralComplex) -> bool:
    """True iff ``|D| = |C|`` and every cell of D lies in a cell of C."""
    if D.n != C.n:
        return False
    for cell in D.maximal_cells:
        if not any(M.contains_polyhedron(cell) for M in C.maximal_cells):
            return False
    return union_contains(D.maximal_cells, C.maximal_cells)


def common_refinement(C1: PolyhedralComplex, C2: PolyhedralComplex) -> PolyhedralComplex:
    if C1.n != C2.n or not supports_equal(C1.maximal_cells, C2.maximal_cells):
        raise SupportMismatch("complexes have different supports")
    return _meet(C1, C2)


def _meet(C1: PolyhedralComplex, C2: PolyhedralComplex) -> PolyhedralComplex:
    pieces = set()
    for A in C1.maximal_cells:
        for B in C2.maximal_cells:
            I = A.intersection(B)
            if not I.is_empty:
                pieces.add(I)
    closure = set()
    for p in pieces:
        closure.update(p.faces())
    return PolyhedralComplex(C1.n, closure, generators=pieces)


def restrict(C: PolyhedralComplex, region: PolyhedralComplex) -> PolyhedralComplex:
    """Intersect every cell of ``C`` with the cells of ``region``."""
    return _meet(C, region)


def orthant_fan(n: int) -> PolyhedralComplex:
    cones = []
    for signs in product((1, -1), repeat=n):
        ineqs = [(tuple(s if j == i else 0 for j in range(n)), 0) for i, s in enumerate(signs)]
        cones.append(Polyhedron.from_halfspaces(n, ineqs))
    return PolyhedralComplex.from_maximal(n, cones, validate=False)


def pointed_refinement(C: PolyhedralComplex) -> PolyhedralComplex:
    """A pointed subdivision of ``C`` (cells cut by the coordinate hyperplanes)."""
    if C.is_pointed:
        return C
    return _meet(C, orthant_fan(C.n))


def local_cone(S, w):
    """Local cone of a polyhedron, or local fan of a complex, at ``w``."""
    if isinstance(S, Polyhedron):
        return local_cone_of_polyhedron(S, w)
    cones = [local_cone_of_polyhedron(c, w) for c in S.maximal_cells if c.contains(w)]
    return PolyhedralComplex.from_maximal(S.n, cones, validate=False)
