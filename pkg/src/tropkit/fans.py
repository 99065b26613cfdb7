"""Admissible cones and fans in ``N_R x R_+`` and their combinatorial criteria.

The last coordinate is the distinguished ``s`` coordinate. Slices
``Sigma_s = {w : (w, s) in sigma}`` recover polyhedral complexes in ``N_R``:
``Sigma_1`` indexes the orbits of the special fibre and the cones inside
``s = 0`` those of the generic fibre.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexes import ComplexError, PolyhedralComplex, validate_complex
from .polyhedra import Polyhedron, cone_over, slice_polyhedron, union_contains


class FanError(ValueError):
    """Fan axioms violated; ``witness`` is ``(cone_a, cone_b, intersection)``."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CompatibilityError(ValueError):
    """A cone is not mapped into any cone of the target fan; ``witness`` is that cone."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def _check_admissible(c: Polyhedron):
    if c.is_empty or not c.is_cone:
        raise FanError("admissible cones are nonempty cones with apex at the origin")
    if c.lines:
        raise FanError("admissible cones contain no line")
    if any(r[-1] < 0 for r in c.rays):
        raise FanError("admissible cones lie in the half-space s >= 0")


class AdmissibleCone:
    """A pointed rational cone in ``N_R x R_+``."""

    def __init__(self, cone: Polyhedron):
        _check_admissible(cone)
        self.cone = cone

    @classmethod
    def over(cls, delta: Polyhedron) -> "AdmissibleCone":
        return cls(cone_over(delta))

    @property
    def n(self) -> int:
        return self.cone.n - 1

    @property
    def in_generic_fibre(self) -> bool:
        """True iff the cone lies in ``N_R x {0}``."""
        return all(r[-1] == 0 for r in self.cone.rays)

    def slice(self, s) -> Polyhedron:
        return slice_polyhedron(self.cone, s)

    def __eq__(self, other):
        return isinstance(other, AdmissibleCone) and self.cone == other.cone

    def __hash__(self):
        return hash(self.cone)

    def __repr__(self):
        return f"AdmissibleCone({self.cone!r})"


class AdmissibleFan:
    """A fan of admissible cones; ``complex`` holds all cones, faces included."""

    def __init__(self, complex: PolyhedralComplex):
        for c in complex.cells:
            _check_admissible(c)
        self.complex = complex
        self.n = complex.n - 1

    @classmethod
    def from_cones(cls, cones: Iterable[Polyhedron], n: int | None = None) -> "AdmissibleFan":
        cones = [c.cone if isinstance(c, AdmissibleCone) else c for c in cones]
        for c in cones:
            _check_admissible(c)
        try:
            C = validate_complex(cones, None if n is None else n + 1)
        except ComplexError as e:
            raise FanError("cones do not form a fan", e.witness) from None
        return cls(C)

    @property
    def cones(self) -> tuple[Polyhedron, ...]:
        return self.complex.cells

    @property
    def maximal_cones(self) -> list[Polyhedron]:
        return self.complex.maximal_cells

    def generic_cones(self) -> list[Polyhedron]:
        """Cones inside ``N_R x {0}``."""
        return [c for c in self.cones if all(r[-1] == 0 for r in c.rays)]

    def slice(self, s) -> PolyhedralComplex:
        return slice(self, s)

    def contains(self, p) -> bool:
        return self.complex.contains(p)

    def __eq__(self, other):
        return isinstance(other, AdmissibleFan) and self.complex == other.complex

    def __hash__(self):
        return hash(self.complex)

    def __repr__(self):
        return f"AdmissibleFan(n={self.n}, cones={len(self.cones)})"


def slice(fan: AdmissibleFan, s) -> PolyhedralComplex:
    """``Sigma_s`` as a complex in ``N_R``."""
    cells = {slice_polyhedron(c, s) for c in fan.cones}
    return PolyhedralComplex(fan.n, [c for c in cells if not c.is_empty])


def fan_from_complex(C: PolyhedralComplex) -> AdmissibleFan:
    """Cones ``c(Delta)`` over the cells of a pointed complex, plus their faces.

    Raises :class:`FanError` with the offending pair when the cones fail to
    form a fan.
    """
    if not C.is_pointed:
        raise ValueError("the complex must be pointed")
    return AdmissibleFan.from_cones([cone_over(d) for d in C.maximal_cells], C.n)


# orbits -------------------------------------------------------------------------

@dataclass(frozen=True)
class OrbitRecord:
    """Orbit attached to an open face.

    ``face_id`` indexes ``fan.cones``; for special-fibre orbits ``face``
    is the cell of ``Sigma_1`` and ``face_dim`` its dimension.
    """

    face_id: int
    fiber: str
    orbit_dim: int
    face_dim: int
    face: Polyhedron
    is_component: bool = False


class OrbitTable(list):
    """List of :class:`OrbitRecord` plus ``order``: pairs ``(i, j)`` meaning
    orbit ``i`` lies in the closure of orbit ``j``."""

    order: set


def orbit_table(fan: AdmissibleFan) -> OrbitTable:
    n = fan.n
    table = OrbitTable()
    for i, c in enumerate(fan.cones):
        if all(r[-1] == 0 for r in c.rays):
            table.append(OrbitRecord(i, "generic", n - c.dim, c.dim, slice_polyhedron(c, 0)))
        else:
            tau = slice_polyhedron(c, 1)
            table.append(OrbitRecord(i, "special", n - tau.dim, tau.dim, tau, tau.dim == 0))
    # closure order reverses face containment
    table.order = {(j, i) for i, j in fan.complex.incidence}
    return table


def is_complete(fan: AdmissibleFan) -> bool:
    """``|Sigma_1| = N_R``.

    ``Sigma_1`` is complete iff it is nonempty, pure of full dimension, and
    every codimension-one cell bounds exactly two maximal cells.
    """
    S1 = slice(fan, 1)
    n = fan.n
    if len(S1) == 0:
        return False
    if any(c.dim != n for c in S1.maximal_cells):
        return False
    for nu in S1.cells_of_dim(n - 1):
        if len(S1.cofaces(nu, codim=1)) != 2:
            return False
    return True


def _product_map(A):
    k = len(A[0])
    rows = [list(r) + [0] for r in A]
    rows.append([0] * k + [1])
    return rows


def morphism_properness(source: AdmissibleFan, target: AdmissibleFan, A: Sequence[Sequence[int]]) -> bool:
    """``(f x id)^{-1}(|target|) = |source|`` for ``f: w -> A w``."""
    F = _product_map(A)
    for c in source.maximal_cones:
        img = c.linear_image(F)
        if not any(t.contains_polyhedron(img) for t in target.maximal_cones):
            raise CompatibilityError("a cone is not mapped into any cone of the target", c)
    pre = [t.preimage(F) for t in target.maximal_cones]
    return union_contains(source.maximal_cones, pre)


# tropical data against fans -----------------------------------------------------

def _cones_of(T) -> list[Polyhedron]:
    from .tropical import TropicalCone, tropical_cone

    if isinstance(T, TropicalCone):
        return list(T.cones)
    if isinstance(T, AdmissibleFan):
        return T.maximal_cones
    if isinstance(T, (list, tuple)):
        return list(T)
    return tropical_cone(T).cones


def tevelev_meets(T, fan: AdmissibleFan | None, sigma: Polyhedron) -> bool:
    """``relint(sigma)`` meets the tropical cone ``T``.

    A cone ``C`` meets ``relint(sigma)`` iff a relative-interior point of
    ``C & sigma`` lies in ``relint(sigma)``.
    """
    if isinstance(sigma, AdmissibleCone):
        sigma = sigma.cone
    if fan is not None and sigma not in fan.complex:
        raise ValueError("sigma is not a cone of the fan")
    for C in _cones_of(T):
        inter = C.intersection(sigma)
        if not inter.is_empty and sigma.in_relint(inter.relint_point()):
            return True
    return False


def _cells_of(T) -> list[Polyhedron]:
    if isinstance(T, (list, tuple)):
        return list(T)
    cyc = getattr(T, "cycle", T)
    return list(cyc.support())


def orbit_intersection_dim(T, fan: AdmissibleFan | None, tau: Polyhedron):
    """``d - min dim(Delta & tau)`` over cells meeting the open face ``tau``.

    ``T`` is a list of ``d``-dimensional polyhedra (or a cycle). Returns
    ``None`` when no cell meets ``tau`` (empty orbit intersection).
    """
    cells = _cells_of(T)
    if not cells:
        return None
    if fan is not None and tau not in slice(fan, 1):
        raise ValueError("tau is not a face of Sigma_1")
    d = max(c.dim for c in cells)
    dims = []
    for delta in cells:
        inter = delta.intersection(tau)
        if not inter.is_empty and tau.in_relint(inter.relint_point()):
            dims.append(inter.dim)
    if not dims:
        return None
    return d - min(dims)


def proper_intersection_check(T, fan: AdmissibleFan) -> bool:
    """``|Sigma|`` equals the tropical cone ``T`` as sets."""
    cones = _cones_of(T)
    mine = fan.maximal_cones
    return union_contains(mine, cones) and union_contains(cones, mine)
