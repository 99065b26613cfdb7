"""Weighted pure-dimensional complexes: balancing, equality, sums, push-forward."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import _parallel
from .complexes import PolyhedralComplex
from .linalg import (
    IntegerLattice,
    QuotientMap,
    lattice_index,
    primitive,
    saturated_lattice_of_span,
)
from .polyhedra import Polyhedron, hyperplane_side, hyperplanes_of, local_cone_of_polyhedron, scaled_point, split


class CycleError(ValueError):
    pass


class TropicalCycle:
    """A pure ``d``-dimensional rational complex with integer weights on its ``d``-cells.

    ``weights`` maps each maximal cell to its weight; ``weight_list`` gives
    them aligned with ``complex.maximal_cells``.
    """

    def __init__(self, n: int, d: int, weighted_cells: Mapping[Polyhedron, int] | Iterable, *, validate: bool = False):
        items = weighted_cells.items() if isinstance(weighted_cells, Mapping) else weighted_cells
        weights: dict[Polyhedron, int] = {}
        for cell, w in items:
            if cell.is_empty:
                continue
            if cell.n != n:
                raise CycleError("cell in the wrong ambient dimension")
            if cell.dim != d:
                raise CycleError(f"cell of dimension {cell.dim} in a cycle of dimension {d}")
            if int(w) != w:
                raise CycleError("weights must be integers")
            weights[cell] = weights.get(cell, 0) + int(w)
        self.n = n
        self.d = d
        self.complex = PolyhedralComplex.from_maximal(n, weights, validate=validate)
        self.weights = {c: weights[c] for c in self.complex.maximal_cells}
        if len(self.weights) != len(weights):
            raise CycleError("a weighted cell is a face of another weighted cell")

    @classmethod
    def from_complex(cls, complex: PolyhedralComplex, d: int, weights: Mapping[Polyhedron, int]) -> "TropicalCycle":
        """Wrap an existing pure complex whose maximal cells are the keys of ``weights``."""
        Z = cls.__new__(cls)
        Z.n = complex.n
        Z.d = d
        Z.complex = complex
        if set(complex.maximal_cells) != set(weights) or any(c.dim != d for c in weights):
            raise CycleError("weights must sit exactly on the maximal cells, all of dimension d")
        Z.weights = {c: int(weights[c]) for c in complex.maximal_cells}
        return Z

    @classmethod
    def zero(cls, n: int, d: int) -> "TropicalCycle":
        return cls(n, d, {})

    @property
    def cells(self) -> list[Polyhedron]:
        return list(self.weights)

    @property
    def weight_list(self) -> list[int]:
        return [self.weights[c] for c in self.complex.maximal_cells]

    @property
    def is_empty(self) -> bool:
        return not any(self.weights.values())

    def pruned(self) -> "TropicalCycle":
        return TropicalCycle(self.n, self.d, {c: w for c, w in self.weights.items() if w})

    def scale(self, k: int) -> "TropicalCycle":
        return TropicalCycle(self.n, self.d, {c: k * w for c, w in self.weights.items() if k * w})

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other):
        return cycle_add(self, other)

    def __sub__(self, other):
        return cycle_add(self, -other)

    def contains(self, w) -> bool:
        """Membership in the support (cells of weight zero ignored)."""
        W, D = scaled_point(w)
        return any(c.contains_scaled(W, D) for c, m in self.weights.items() if m)

    def support(self) -> list[Polyhedron]:
        return [c for c, m in self.weights.items() if m]

    def weight_at(self, w) -> int:
        """Weight of the maximal cell whose relative interior contains ``w`` (0 elsewhere)."""
        for c, m in self.weights.items():
            if c.in_relint(w):
                return m
        return 0

    def __repr__(self):
        return f"TropicalCycle(n={self.n}, d={self.d}, cells={len(self.weights)})"


def as_cycle(Z) -> TropicalCycle:
    """Accept anything carrying a ``cycle`` attribute (e.g. a tropical hypersurface)."""
    if isinstance(Z, TropicalCycle):
        return Z
    cyc = getattr(Z, "cycle", None)
    if isinstance(cyc, TropicalCycle):
        return cyc
    raise TypeError(f"expected a tropical cycle, got {type(Z).__name__}")


# refinement ----------------------------------------------------------------

def _split_all(cell: Polyhedron, hyperplanes) -> list[Polyhedron]:
    pieces = [cell]
    for u, c in hyperplanes:
        nxt = []
        for p in pieces:
            if hyperplane_side(p, u, c) == 2:
                nxt.extend(split(p, u, c))
            else:
                nxt.append(p)
        pieces = nxt
    return pieces


def _arrangement(cells: Iterable[Polyhedron]):
    hs = set()
    for c in cells:
        hs |= hyperplanes_of(c)
    return sorted(hs)


def _refined_weights(Z: TropicalCycle, hyperplanes) -> dict:
    out: dict[Polyhedron, int] = {}
    cells = [(c, w) for c, w in Z.weights.items() if w]
    results = _parallel.map_ordered(lambda cw: _split_all(cw[0], hyperplanes), cells)
    for (c, w), pieces in zip(cells, results):
        for p in pieces:
            out[p] = out.get(p, 0) + w
    return out


def refine(Z: TropicalCycle, hyperplanes: Sequence[tuple]) -> TropicalCycle:
    """Subdivide ``Z`` along the given hyperplanes ``<u, w> = c``."""
    Z = as_cycle(Z)
    return TropicalCycle(Z.n, Z.d, _refined_weights(Z, list(hyperplanes)))


subdivide = refine


def _check_dims(Z1, Z2):
    if Z1.n != Z2.n:
        raise CycleError("cycles live in different ambient spaces")
    if Z1.d != Z2.d and not (Z1.is_empty or Z2.is_empty):
        raise CycleError("cycles have different dimensions")


def _by_hull(Z: TropicalCycle) -> dict:
    groups: dict = {}
    for c, w in Z.weights.items():
        if w:
            groups.setdefault(c.eqs, []).append((c, w))
    return groups


def cycles_equal(Z1: TropicalCycle, Z2: TropicalCycle) -> bool:
    """Equal weights almost everywhere on the d-dimensional support.

    Cells with different affine hulls overlap in lower dimension only, so
    each affine hull is compared separately on the arrangement of its own
    facet hyperplanes.
    """
    Z1, Z2 = as_cycle(Z1), as_cycle(Z2)
    _check_dims(Z1, Z2)
    if Z1.is_empty or Z2.is_empty:
        return Z1.is_empty and Z2.is_empty
    g1, g2 = _by_hull(Z1), _by_hull(Z2)
    for hull in set(g1) | set(g2):
        a, b = g1.get(hull, []), g2.get(hull, [])
        H = _arrangement(c for c, _ in a + b)
        w1: dict = {}
        w2: dict = {}
        for cells, out in ((a, w1), (b, w2)):
            for c, m in cells:
                for p in _split_all(c, H):
                    out[p] = out.get(p, 0) + m
        if {c: m for c, m in w1.items() if m} != {c: m for c, m in w2.items() if m}:
            return False
    return True


def cycle_add(Z1: TropicalCycle, Z2: TropicalCycle) -> TropicalCycle:
    Z1, Z2 = as_cycle(Z1), as_cycle(Z2)
    _check_dims(Z1, Z2)
    if Z2.is_empty:
        return Z1.pruned()
    if Z1.is_empty:
        return Z2.pruned()
    H = _arrangement(list(Z1.support()) + list(Z2.support()))
    w = _refined_weights(Z1, H)
    for c, m in _refined_weights(Z2, H).items():
        w[c] = w.get(c, 0) + m
    return TropicalCycle(Z1.n, Z1.d, {c: m for c, m in w.items() if m})


# balancing -------------------------------------------------------------------

@dataclass
class BalancingResult:
    """Outcome of :func:`balancing_check`.

    On failure ``cell`` is the offending codimension-one cell, ``quotient_sum``
    the weighted sum in ``N / N_cell`` and ``witness`` its lift to ``N``.
    """

    balanced: bool
    cell: Polyhedron | None = None
    quotient_sum: tuple | None = None
    witness: tuple | None = None
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.balanced


def direction_lattice(cell: Polyhedron) -> IntegerLattice:
    """Saturated lattice of the direction space of ``cell``'s affine hull."""
    basis = [primitive(v) for v in cell.linear_space()]
    return saturated_lattice_of_span(cell.n, basis)


def balancing_sum(Z: TropicalCycle, nu: Polyhedron):
    """``sum m_sigma n_{sigma,nu}`` in quotient coordinates of ``N / N_nu``."""
    Q = QuotientMap(direction_lattice(nu))
    p = nu.relint_point()
    total = [0] * Q.rank
    for sigma in Z.complex.cofaces(nu, codim=1):
        m = Z.weights.get(sigma, 0)
        if not m:
            continue
        v = tuple(a - b for a, b in zip(sigma.relint_point(), p))
        g = primitive(Q.project(v))
        total = [t + m * x for t, x in zip(total, g)]
    return Q, tuple(total)


def balancing_check(Z: TropicalCycle) -> BalancingResult:
    """Check the balancing condition at every codimension-one cell."""
    Zp = as_cycle(Z).pruned()
    if Zp.d == 0 or Zp.is_empty:
        return BalancingResult(True)
    nus = Zp.complex.cells_of_dim(Zp.d - 1)
    sums = _parallel.map_ordered(lambda nu: balancing_sum(Zp, nu), nus)
    failures = []
    for nu, (Q, s) in zip(nus, sums):
        if any(s):
            failures.append((nu, s, Q.lift(s)))
    if failures:
        nu, s, lift = failures[0]
        return BalancingResult(False, nu, s, lift, failures)
    return BalancingResult(True)


# push-forward ----------------------------------------------------------------

def _check_matrix(A, n):
    rows = [list(r) for r in A]
    if not rows:
        raise CycleError("empty matrix")
    for r in rows:
        if len(r) != n:
            raise CycleError("matrix does not match the cycle's ambient dimension")
        for x in r:
            if isinstance(x, bool) or not isinstance(x, (int, Fraction)) or int(x) != x:
                raise CycleError("push-forward needs an integer matrix")
    return [[int(x) for x in r] for r in rows]


def _image_lattice(A, L: IntegerLattice) -> IntegerLattice:
    m = len(A)
    imgs = [tuple(sum(row[j] * b[j] for j in range(len(b))) for row in A) for b in L.basis]
    return IntegerLattice.spanned_by(m, imgs)


def pushforward(Z: TropicalCycle, A: Sequence[Sequence[int]]) -> TropicalCycle:
    """Push ``Z`` forward along the integer-linear map ``w -> A w``.

    Collapsing cells are dropped; an image cell's weight is the sum of
    ``m_nu * [N_image : A(N_nu)]`` over the cells mapping onto it.
    """
    Z = as_cycle(Z)
    A = _check_matrix(A, Z.n)
    m = len(A)
    Zp = Z.pruned()
    surviving = []
    for sigma, w in Zp.weights.items():
        img = sigma.linear_image(A)
        if img.dim == Zp.d:
            surviving.append((sigma, w, img))
    if not surviving:
        return TropicalCycle.zero(m, Zp.d)
    H = _arrangement(img for _, _, img in surviving)
    pulled = []
    for u, c in H:
        pu = tuple(sum(u[i] * A[i][j] for i in range(m)) for j in range(Z.n))
        if any(pu):
            pulled.append((pu, c))
    weights: dict[Polyhedron, int] = {}
    for sigma, w, img in surviving:
        L = direction_lattice(sigma)
        image = _image_lattice(A, L)
        index = lattice_index(image, saturated_lattice_of_span(m, image.basis))
        for piece in _split_all(sigma, pulled):
            key = piece.linear_image(A)
            weights[key] = weights.get(key, 0) + w * index
    return TropicalCycle(m, Zp.d, {c: w for c, w in weights.items() if w})


# localization ------------------------------------------------------------------

def localize(Z: TropicalCycle, w) -> TropicalCycle:
    """The weighted fan of local cones of ``Z`` at ``w`` (empty off the support)."""
    Z = as_cycle(Z)
    cones = {}
    for sigma, m in Z.weights.items():
        if m and sigma.contains(w):
            cone = local_cone_of_polyhedron(sigma, w)
            cones[cone] = cones.get(cone, 0) + m
    return TropicalCycle(Z.n, Z.d, cones)
