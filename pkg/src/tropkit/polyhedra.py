"""Rational polyhedra in H- and V-form.

A :class:`Polyhedron` is an intersection of closed half-spaces
``<u, w> >= c`` with integer normals ``u`` and rational offsets ``c``.
Both representations are computed exactly by double description on the
homogenization ``{(w, t) : <u, w> - c t >= 0, t >= 0}`` and cached.

Canonical form: equations in reduced echelon form, inequalities reduced
modulo the equations, every normal primitive, everything sorted. Two
polyhedra compare equal iff their canonical H-forms agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from . import _dd
from .linalg import (
    clear_denominators,
    dot,
    nullspace,
    primitive,
    rank,
    rational_vector,
    rref,
    to_fraction,
)


@dataclass(frozen=True, order=True)
class HalfSpace:
    """The closed half-space ``<u, w> >= c``.

    Rational normals are accepted and rescaled to a primitive integer normal.
    """

    u: tuple
    c: Fraction

    def __post_init__(self):
        u = rational_vector(self.u)
        c = to_fraction(self.c)
        if any(u):
            p = primitive(u)
            k = next(i for i, x in enumerate(u) if x)
            scale = Fraction(p[k]) / u[k]
            u, c = p, c * scale
        else:
            u = tuple(0 for _ in u)
        object.__setattr__(self, "u", tuple(int(x) for x in u))
        object.__setattr__(self, "c", c)

    @property
    def n(self) -> int:
        return len(self.u)

    def value(self, w) -> Fraction:
        return dot(self.u, w) - self.c

    def contains(self, w) -> bool:
        return self.value(w) >= 0

    def __repr__(self):
        return f"HalfSpace({self.u}, {self.c})"


def _as_pairs(items, n):
    """Normalize half-spaces / equations to (u, c) with rational entries."""
    out = []
    for h in items:
        if isinstance(h, HalfSpace):
            u, c = h.u, h.c
        else:
            u, c = h
        u = rational_vector(u)
        if len(u) != n:
            raise ValueError(f"constraint of dimension {len(u)} in ambient dimension {n}")
        out.append((u, to_fraction(c)))
    return out


def _canonical_h(n, eqs, ineqs):
    """Canonical (eqs, ineqs) from an irredundant description; None if infeasible."""
    R, pivots = rref([tuple(u) + (c,) for u, c in eqs], n + 1)
    if n in pivots:
        return None
    ceqs = []
    for row in R:
        u, c = row[:n], row[n]
        p = primitive(u)
        k = next(i for i, x in enumerate(u) if x)
        ceqs.append((p, c * Fraction(p[k]) / u[k]))
    cineqs = set()
    for u, c in ineqs:
        u = list(u)
        for row, p in zip(R, pivots):
            f = u[p]
            if f:
                u = [a - f * b for a, b in zip(u, row[:n])]
                c = c - f * row[n]
        if not any(u):
            continue
        pu = primitive(u)
        k = next(i for i, x in enumerate(u) if x)
        cineqs.add((pu, c * Fraction(pu[k]) / u[k]))
    return tuple(ceqs), tuple(sorted(cineqs))


def _canonical_v(n, vertices, rays, lines):
    L, pivots = rref(lines, n) if lines else ([], [])

    def reduce(v):
        v = list(v)
        for row, p in zip(L, pivots):
            f = v[p]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return v

    clines = tuple(primitive(row) for row in L)
    cverts = tuple(sorted({tuple(reduce(v)) for v in vertices}))
    crays = set()
    for r in rays:
        r = reduce(r)
        if any(r):
            crays.add(primitive(r))
    return cverts, tuple(sorted(crays)), clines


def scaled_point(w):
    """``w`` as ``(W, D)`` with ``W`` integral and ``w = W / D``."""
    w = rational_vector(w)
    D = 1
    for x in w:
        d = x.denominator
        if D % d:
            D = D * d // gcd(D, d)
    return tuple(int(x * D) for x in w), D


class Polyhedron:
    """A rational polyhedron in R^n (possibly empty).

    Build one with :meth:`from_halfspaces`, :meth:`from_generators`,
    :meth:`point`, :meth:`whole` or :meth:`empty`.
    """

    __slots__ = ("n", "_raw_eqs", "_raw_ineqs", "_gens", "_hc", "_hp", "_v", "_empty", "_hash", "_faces", "_rows")

    def __init__(self, n: int):
        self.n = n
        self._raw_eqs = None
        self._raw_ineqs = None
        self._gens = None
        self._hc = None
        self._hp = None
        self._v = None
        self._empty = None
        self._hash = None
        self._faces = None
        self._rows = None

    # construction ---------------------------------------------------------
    @classmethod
    def from_halfspaces(cls, n: int, ineqs: Iterable = (), eqs: Iterable = ()) -> "Polyhedron":
        P = cls(n)
        P._raw_ineqs = _as_pairs(ineqs, n)
        P._raw_eqs = _as_pairs(eqs, n)
        return P

    @classmethod
    def from_generators(cls, n: int, vertices: Iterable, rays: Iterable = (), lines: Iterable = ()) -> "Polyhedron":
        P = cls(n)
        verts = [rational_vector(v) for v in vertices]
        rs = [rational_vector(r) for r in rays]
        ls = [rational_vector(l) for l in lines]
        for v in verts + rs + ls:
            if len(v) != n:
                raise ValueError("generator dimension does not match ambient dimension")
        P._gens = (verts, [r for r in rs if any(r)], [l for l in ls if any(l)])
        if not verts:
            P._empty = True
        return P

    @classmethod
    def _trusted(cls, n, h, v, pending=None) -> "Polyhedron":
        """Known canonical V-form plus either the canonical H-form or an
        irredundant ``(eqs, ineqs)`` to be canonicalized on first use."""
        P = cls(n)
        P._hc = h
        P._hp = pending
        P._v = v
        P._empty = False
        return P

    @classmethod
    def point(cls, p) -> "Polyhedron":
        p = rational_vector(p)
        return cls.from_generators(len(p), [p])

    @classmethod
    def whole(cls, n: int) -> "Polyhedron":
        return cls.from_halfspaces(n)

    @classmethod
    def empty(cls, n: int) -> "Polyhedron":
        P = cls(n)
        P._empty = True
        return P

    # representation conversions --------------------------------------------
    @property
    def _h(self):
        if self._hc is None and self._hp is not None:
            self._hc = _canonical_h(self.n, *self._hp)
            self._hp = None
        return self._hc

    @_h.setter
    def _h(self, value):
        self._hc = value

    def _some_h(self):
        """An irredundant H-description, canonical if already available."""
        if self._hc is None and self._hp is not None:
            return self._hp
        self._need()
        return self._hc

    def _compute(self):
        if self._h is not None or self._empty:
            return
        n = self.n
        if self._gens is not None:
            verts, rs, ls = self._gens
            eqs, ineqs = _v_to_h(n, verts, rs, ls)
        else:
            eqs, ineqs = self._raw_eqs, self._raw_ineqs
            res = _h_to_v(n, eqs, ineqs)
            if res is None:
                self._empty = True
                return
            verts, rs, ls = res
            eqs, ineqs = _v_to_h(n, verts, rs, ls)
        h = _canonical_h(n, eqs, ineqs)
        if h is None:
            self._empty = True
            return
        if self._gens is not None:
            res = _h_to_v(n, h[0], h[1])
            verts, rs, ls = res
        # publish _h last: other threads treat it as the "computed" flag
        self._v = _canonical_v(n, verts, rs, ls)
        self._empty = False
        self._h = h

    @property
    def is_empty(self) -> bool:
        if self._empty is None:
            self._compute()
        return bool(self._empty)

    def _need(self):
        if self.is_empty:
            raise ValueError("operation undefined on the empty polyhedron")

    @property
    def eqs(self) -> tuple:
        """Canonical equations ``(u, c)`` meaning ``<u, w> = c``."""
        self._need()
        return self._h[0]

    @property
    def ineqs(self) -> tuple:
        """Canonical irredundant inequalities ``(u, c)`` meaning ``<u, w> >= c``."""
        self._need()
        return self._h[1]

    @property
    def halfspaces(self) -> list[HalfSpace]:
        return [HalfSpace(u, c) for u, c in self.ineqs]

    @property
    def vertices(self) -> tuple:
        self._need()
        return self._v[0]

    @property
    def rays(self) -> tuple:
        self._need()
        return self._v[1]

    @property
    def lines(self) -> tuple:
        self._need()
        return self._v[2]

    @property
    def dim(self) -> int:
        """Dimension; -1 for the empty polyhedron."""
        if self.is_empty:
            return -1
        return self.n - len(self._h[0])

    @property
    def key(self):
        if self.is_empty:
            return ("empty",)
        return self._h

    def sort_key(self):
        return (self.dim, self.key)

    def __eq__(self, other):
        if not isinstance(other, Polyhedron):
            return NotImplemented
        return self.n == other.n and self.key == other.key

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.key))
        return self._hash

    def __repr__(self):
        if self.is_empty:
            return f"Polyhedron.empty({self.n})"
        fmt = lambda v: "(" + ",".join(str(x) for x in v) + ")"
        parts = [f"dim={self.dim}", "vertices=[" + ", ".join(fmt(v) for v in self.vertices) + "]"]
        if self.rays:
            parts.append("rays=[" + ", ".join(fmt(r) for r in self.rays) + "]")
        if self.lines:
            parts.append("lines=[" + ", ".join(fmt(l) for l in self.lines) + "]")
        return f"Polyhedron(n={self.n}, " + ", ".join(parts) + ")"

    # basic queries ---------------------------------------------------------
    def _membership_constraints(self):
        if self._hc is not None:
            return self._hc
        if self._hp is not None:
            return self._hp
        if self._raw_ineqs is not None:
            return self._raw_eqs, self._raw_ineqs
        self._compute()
        return self._h

    def _int_rows(self):
        """Constraints as integer triples ``(u, num, den)`` for ``<u, w> (=, >=) num/den``."""
        if self._rows is None:
            eqs, ineqs = self._membership_constraints()
            self._rows = (
                [(tuple(u), Fraction(c).numerator, Fraction(c).denominator) for u, c in eqs],
                [(tuple(u), Fraction(c).numerator, Fraction(c).denominator) for u, c in ineqs],
            )
        return self._rows

    def contains(self, w) -> bool:
        if self._empty:
            return False
        return self.contains_scaled(*scaled_point(w))

    def contains_scaled(self, W, D) -> bool:
        """Membership of ``W / D`` (``W`` integer, ``D > 0``), all in integer arithmetic."""
        if self.is_empty:
            return False
        eqs, ineqs = self._int_rows()
        for u, num, den in eqs:
            if sum(a * b for a, b in zip(u, W)) * den != num * D:
                return False
        for u, num, den in ineqs:
            if sum(a * b for a, b in zip(u, W)) * den < num * D:
                return False
        return True

    def __contains__(self, w) -> bool:
        return self.contains(w)

    def contains_polyhedron(self, other: "Polyhedron") -> bool:
        if other.is_empty:
            return True
        if self.is_empty:
            return False
        eqs, ineqs = self._h
        for v in other.vertices:
            if not self.contains(v):
                return False
        for r in other.rays:
            if any(dot(u, r) != 0 for u, _ in eqs) or any(dot(u, r) < 0 for u, _ in ineqs):
                return False
        for l in other.lines:
            if any(dot(u, l) != 0 for u, _ in eqs + ineqs):
                return False
        return True

    def relint_point(self) -> tuple:
        """A point in the relative interior."""
        self._need()
        k = len(self.vertices)
        p = [sum((v[i] for v in self.vertices), Fraction(0)) / k for i in range(self.n)]
        for r in self.rays:
            p = [a + b for a, b in zip(p, r)]
        return tuple(p)

    def in_relint(self, w) -> bool:
        """True iff ``w`` lies in the relative interior."""
        if not self.contains(w):
            return False
        w = rational_vector(w)
        return all(dot(u, w) > c for u, c in self.ineqs)

    @property
    def is_pointed(self) -> bool:
        self._need()
        return not self.lines

    @property
    def is_bounded(self) -> bool:
        self._need()
        return not self.rays and not self.lines

    @property
    def is_cone(self) -> bool:
        """True iff the polyhedron is a cone with apex at the origin."""
        if self.is_empty:
            return False
        return all(c == 0 for _, c in self.eqs + self.ineqs)

    def linear_space(self) -> list[tuple]:
        """Basis of the direction space of the affine hull."""
        self._need()
        return nullspace([u for u, _ in self.eqs], self.n)

    def intersection(self, other: "Polyhedron") -> "Polyhedron":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        if self.is_empty or other.is_empty:
            return Polyhedron.empty(self.n)
        return Polyhedron.from_halfspaces(
            self.n, list(self.ineqs) + list(other.ineqs), list(self.eqs) + list(other.eqs)
        )

    __and__ = intersection

    def add_constraints(self, ineqs=(), eqs=()) -> "Polyhedron":
        if self.is_empty:
            return self
        return Polyhedron.from_halfspaces(
            self.n, list(self.ineqs) + _as_pairs(ineqs, self.n), list(self.eqs) + _as_pairs(eqs, self.n)
        )

    def translate(self, w) -> "Polyhedron":
        if self.is_empty:
            return self
        w = rational_vector(w)
        return Polyhedron.from_generators(
            self.n, [tuple(a + b for a, b in zip(v, w)) for v in self.vertices], self.rays, self.lines
        )

    def scale(self, s) -> "Polyhedron":
        """The dilate ``s * P`` for a rational ``s >= 0``."""
        s = to_fraction(s)
        if s < 0:
            raise ValueError("scaling factor must be nonnegative")
        if self.is_empty:
            return self
        if s == 0:
            return recession_cone(self)
        return Polyhedron.from_generators(
            self.n, [tuple(s * x for x in v) for v in self.vertices], self.rays, self.lines
        )

    def linear_image(self, A: Sequence[Sequence]) -> "Polyhedron":
        """Image under ``w -> A w`` for a rational matrix ``A`` (rows)."""
        m = len(A)
        if self.is_empty:
            return Polyhedron.empty(m)
        img = lambda v: tuple(dot(row, v) for row in A)
        return Polyhedron.from_generators(
            m, [img(v) for v in self.vertices], [img(r) for r in self.rays], [img(l) for l in self.lines]
        )

    def preimage(self, A: Sequence[Sequence]) -> "Polyhedron":
        """Preimage under ``w' -> A w'`` where ``A`` maps R^k to R^n."""
        k = len(A[0]) if A else 0
        if self.is_empty:
            return Polyhedron.empty(k)

        def pull(u):
            return tuple(sum(u[i] * A[i][j] for i in range(self.n)) for j in range(k))

        ineqs = [(pull(u), c) for u, c in self.ineqs]
        eqs = [(pull(u), c) for u, c in self.eqs]
        for u, c in ineqs + eqs:
            if not any(u) and c > 0:
                return Polyhedron.empty(k)
        ineqs = [(u, c) for u, c in ineqs if any(u)]
        bad = [(u, c) for u, c in eqs if not any(u) and c != 0]
        if bad:
            return Polyhedron.empty(k)
        eqs = [(u, c) for u, c in eqs if any(u)]
        return Polyhedron.from_halfspaces(k, ineqs, eqs)

    # faces -------------------------------------------------------------------
    def face_lattice(self):
        """All nonempty closed faces with their generator incidence.

        Returns ``(faces, order)``: a list of faces (``faces[0]`` is the
        polyhedron itself) and the set of index pairs ``(i, j)`` with
        ``faces[i]`` a face of ``faces[j]``.
        """
        if self._faces is None:
            self._faces = _face_lattice(self)
        return self._faces

    def faces(self) -> list["Polyhedron"]:
        return list(self.face_lattice()[0])

    def face_containing(self, w) -> "Polyhedron":
        """The unique face whose relative interior contains ``w``."""
        if not self.contains(w):
            raise ValueError("point is not in the polyhedron")
        w = rational_vector(w)
        tight = [(u, c) for u, c in self.ineqs if dot(u, w) == c]
        if not tight:
            return self
        return Polyhedron.from_halfspaces(self.n, self.ineqs, list(self.eqs) + tight)


def _homog_row(u, c):
    return clear_denominators(tuple(u) + (-c,))


def _h_to_v(n, eqs, ineqs):
    rows = [_homog_row(u, c) for u, c in ineqs]
    for u, c in eqs:
        r = _homog_row(u, c)
        rows.append(r)
        rows.append(tuple(-x for x in r))
    rows.append(tuple(0 for _ in range(n)) + (1,))
    rays, lines = _dd.cone_generators(rows, n + 1)
    verts = [tuple(Fraction(x, r[n]) for x in r[:n]) for r in rays if r[n] > 0]
    if not verts:
        return None
    rs = [r[:n] for r in rays if r[n] == 0]
    ls = [l[:n] for l in lines]
    return verts, rs, ls


def _v_to_h(n, verts, rays, lines):
    rows = [clear_denominators(tuple(v) + (Fraction(1),)) for v in verts]
    rows += [clear_denominators(tuple(r) + (Fraction(0),)) for r in rays]
    for l in lines:
        r = clear_denominators(tuple(l) + (Fraction(0),))
        rows.append(r)
        rows.append(tuple(-x for x in r))
    drays, dlines = _dd.cone_generators(rows, n + 1)
    ineqs = [(r[:n], Fraction(-r[n])) for r in drays if any(r[:n])]
    eqs = [(l[:n], Fraction(-l[n])) for l in dlines]
    return eqs, ineqs


def _face_lattice(P: Polyhedron):
    if P.is_empty:
        return [], set()
    n = P.n
    eqs, ineqs = P.eqs, P.ineqs
    V, R, L = P.vertices, P.rays, P.lines
    gens = [("v", i) for i in range(len(V))] + [("r", j) for j in range(len(R))]
    incid = []
    for u, c in ineqs:
        s = frozenset(
            [("v", i) for i, v in enumerate(V) if dot(u, v) == c]
            + [("r", j) for j, r in enumerate(R) if dot(u, r) == 0]
        )
        incid.append(s)
    has_vertex = lambda s: any(g[0] == "v" for g in s)
    top = frozenset(gens)
    found = {top: None}
    queue = [top]
    while queue:
        S = queue.pop()
        for I in incid:
            T = S & I
            if T != S and has_vertex(T) and T not in found:
                found[T] = None
                queue.append(T)
    sets = sorted(found, key=lambda s: (-len(s), sorted(s)))
    # the polyhedron itself must come first
    sets.remove(top)
    sets.insert(0, top)
    faces = []
    for T in sets:
        if T == top:
            faces.append(P)
            continue
        tight = [ineqs[j] for j, I in enumerate(incid) if T <= I]
        subs = {}
        for j, I in enumerate(incid):
            S = T & I
            if S != T and has_vertex(S):
                subs.setdefault(S, j)
        maximal = [S for S in subs if not any(S < S2 for S2 in subs)]
        f_ineqs = [ineqs[subs[S]] for S in maximal]
        pend = (list(eqs) + tight, f_ineqs)
        v = _canonical_v(
            n,
            [V[i] for k, i in T if k == "v"],
            [R[j] for k, j in T if k == "r"],
            L,
        )
        faces.append(Polyhedron._trusted(n, None, v, pend))
    order = set()
    for i, S in enumerate(sets):
        for j, T in enumerate(sets):
            if S <= T:
                order.add((i, j))
    return faces, order


def project_graph(F: Polyhedron) -> Polyhedron:
    """Drop the last coordinate of a polyhedron that is the graph of an affine function.

    The projection is injective on such a polyhedron, so facets correspond
    and no convex-hull computation is needed.
    """
    n = F.n - 1
    feqs, fineqs = F._some_h()
    pivot = next(((u, c) for u, c in feqs if u[n]), None)
    if pivot is None:
        raise ValueError("polyhedron is not a graph over the first coordinates")
    a, b = pivot

    def sub(u, c):
        # remove z using z = (b - <a', w>) / a_n
        f = Fraction(u[n]) / a[n]
        return tuple(x - f * y for x, y in zip(u[:n], a[:n])), c - f * b

    eqs = [sub(u, c) for u, c in feqs]
    eqs = [(u, c) for u, c in eqs if any(u)]
    ineqs = [sub(u, c) for u, c in fineqs]
    h = _canonical_h(n, eqs, ineqs)
    v = _canonical_v(n, [x[:n] for x in F.vertices], [r[:n] for r in F.rays], [l[:n] for l in F.lines])
    return Polyhedron._trusted(n, h, v)


# module-level operations ---------------------------------------------------

def polyhedron_from_halfspaces(halfspaces: Sequence, n: int | None = None, eqs: Sequence = ()) -> Polyhedron:
    """Polyhedron cut out by half-spaces ``<u, w> >= c`` (and optional equations)."""
    hs = list(halfspaces)
    if n is None:
        if not hs:
            raise ValueError("ambient dimension needed for an empty list of half-spaces")
        first = hs[0]
        n = first.n if isinstance(first, HalfSpace) else len(first[0])
    P = Polyhedron.from_halfspaces(n, hs, eqs)
    P.is_empty  # force canonicalization; raises on malformed input now
    return P


def faces(P: Polyhedron):
    """All closed faces of ``P`` (``P`` first) and the inclusion order as index pairs."""
    if P.is_empty:
        raise ValueError("the empty polyhedron has no faces")
    fs, order = P.face_lattice()
    return list(fs), set(order)


def recession_cone(P: Polyhedron) -> Polyhedron:
    if P.is_empty:
        raise ValueError("recession cone of the empty polyhedron is undefined")
    return Polyhedron.from_halfspaces(
        P.n, [(u, 0) for u, _ in P.ineqs], [(u, 0) for u, _ in P.eqs]
    )


def local_cone_of_polyhedron(P: Polyhedron, w) -> Polyhedron:
    """Directions ``d`` with ``w + [0, eps) d`` inside ``P``; empty if ``w`` is not in ``P``."""
    if not P.contains(w):
        return Polyhedron.empty(P.n)
    w = rational_vector(w)
    tight = [(u, 0) for u, c in P.ineqs if dot(u, w) == c]
    return Polyhedron.from_halfspaces(P.n, tight, [(u, 0) for u, _ in P.eqs])


def is_pointed(P: Polyhedron) -> bool:
    return P.is_pointed


def cone_over(P: Polyhedron) -> Polyhedron:
    """Closed cone in R^n x R_+ generated by ``P x {1}``."""
    if P.is_empty:
        raise ValueError("cone over the empty polyhedron is undefined")
    n = P.n
    ineqs = [(tuple(u) + (-c,), 0) for u, c in P.ineqs]
    ineqs.append((tuple(0 for _ in range(n)) + (1,), 0))
    eqs = [(tuple(u) + (-c,), 0) for u, c in P.eqs]
    return Polyhedron.from_halfspaces(n + 1, ineqs, eqs)


def slice_polyhedron(P: Polyhedron, s) -> Polyhedron:
    """``{w : (w, s) in P}`` for a polyhedron in R^n x R."""
    s = to_fraction(s)
    n = P.n - 1
    if P.is_empty:
        return Polyhedron.empty(n)
    ineqs = [(u[:n], c - u[n] * s) for u, c in P.ineqs]
    eqs = [(u[:n], c - u[n] * s) for u, c in P.eqs]
    for u, c in ineqs:
        if not any(u) and c > 0:
            return Polyhedron.empty(n)
    for u, c in eqs:
        if not any(u) and c != 0:
            return Polyhedron.empty(n)
    return Polyhedron.from_halfspaces(
        n, [(u, c) for u, c in ineqs if any(u)], [(u, c) for u, c in eqs if any(u)]
    )


def _covered(P: Polyhedron, cover: Sequence[Polyhedron]) -> bool:
    if P.is_empty:
        return True
    k = P.dim
    pieces = [P]
    for Q in cover:
        if Q.is_empty or P.intersection(Q).dim < k:
            continue
        nxt = []
        for piece in pieces:
            nxt.extend(_subtract(piece, Q, k))
        pieces = nxt
        if not pieces:
            return True
    return not pieces


def _subtract(piece: Polyhedron, Q: Polyhedron, k: int) -> list[Polyhedron]:
    if piece.intersection(Q).dim < k:
        return [piece]
    out = []
    cur = piece
    for u, c in Q.ineqs:
        rest = cur.add_constraints(ineqs=[(tuple(-x for x in u), -c)])
        if rest.dim == k and dot(u, rest.relint_point()) < c:
            out.append(rest)
        cur = cur.add_constraints(ineqs=[(u, c)])
        if cur.dim < k:
            break
    return out


def covers(cover: Sequence[Polyhedron], P: Polyhedron) -> bool:
    """True iff ``P`` is contained in the union of the polyhedra in ``cover``."""
    return _covered(P, list(cover))


def union_contains(A: Sequence[Polyhedron], B: Sequence[Polyhedron]) -> bool:
    """True iff the union of ``B`` lies inside the union of ``A``."""
    A = [P for P in A if not P.is_empty]
    return all(_covered(P, A) for P in B)


def supports_equal(A: Sequence[Polyhedron], B: Sequence[Polyhedron]) -> bool:
    return union_contains(A, B) and union_contains(B, A)


def hyperplane_side(P: Polyhedron, u, c) -> int:
    """Position of ``P`` relative to ``<u, w> = c``.

    Returns 0 if P lies in the hyperplane, 1 / -1 if it lies in the closed
    upper / lower half-space (touching allowed), 2 if the hyperplane cuts
    its relative interior.
    """
    vals = [dot(u, v) - c for v in P.vertices]
    dirs = [dot(u, r) for r in P.rays]
    if any(dot(u, l) != 0 for l in P.lines):
        return 2
    pos = any(x > 0 for x in vals) or any(x > 0 for x in dirs)
    neg = any(x < 0 for x in vals) or any(x < 0 for x in dirs)
    if pos and neg:
        return 2
    if pos:
        return 1
    if neg:
        return -1
    return 0


def split(P: Polyhedron, u, c) -> list[Polyhedron]:
    """Cut ``P`` by the hyperplane ``<u, w> = c`` into full-dimensional pieces."""
    if hyperplane_side(P, u, c) != 2:
        return [P]
    neg_u = tuple(-x for x in u)
    return [P.add_constraints(ineqs=[(u, c)]), P.add_constraints(ineqs=[(neg_u, -c)])]


def hyperplanes_of(P: Polyhedron) -> set:
    """Facet hyperplanes and affine-hull hyperplanes of ``P`` in canonical sign."""
    out = set()
    for u, c in list(P.ineqs) + list(P.eqs):
        out.add(canonical_hyperplane(u, c))
    return out


def canonical_hyperplane(u, c):
    p = primitive(u)
    k = next(i for i, x in enumerate(u) if x)
    c = to_fraction(c) * Fraction(p[k]) / to_fraction(u[k])
    if p[k] < 0:
        p, c = tuple(-x for x in p), -c
    return p, c
