"""Exact rational and integer linear algebra.

Everything here works on plain Python ints and :class:`fractions.Fraction`;
matrices are sequences of rows. Nothing in this module touches floating
point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

Vector = tuple
Matrix = Sequence[Sequence]


class LatticeContainmentError(ValueError):
    """Raised when a lattice is not a subgroup of the claimed ambient lattice."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def rational_vector(v) -> tuple[Fraction, ...]:
    return tuple(to_fraction(x) for x in v)


def dot(a, b):
    return sum((x * y for x, y in zip(a, b)), 0)


def lcm(*xs: int) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b) if a and b else a or b, xs, 1)


def clear_denominators(v) -> tuple[int, ...]:
    """Smallest positive integer multiple of a rational vector (not reduced by gcd)."""
    v = [x if isinstance(x, (int, Fraction)) else Fraction(x) for x in v]
    den = 1
    for x in v:
        d = x.denominator
        if den % d:
            den = den * d // math.gcd(den, d)
    return tuple(int(x.numerator * (den // x.denominator)) for x in v)


def primitive(v) -> tuple[int, ...]:
    """The coprime integer vector on the ray spanned by ``v``.

    >>> primitive((Fraction(1, 2), Fraction(1, 3)))
    (3, 2)
    """
    ints = clear_denominators(v)
    g = reduce(math.gcd, ints, 0)
    if g == 0:
        raise ValueError("the zero vector has no primitive representative")
    return tuple(x // g for x in ints)


def rref(rows: Matrix, ncols: int | None = None):
    """Reduced row echelon form over Q.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows.
    """
    m = [list(map(to_fraction, r)) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows: Matrix, ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Matrix, ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of ``{x : A x = 0}`` over Q."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    R, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve_left(basis: Matrix, v) -> tuple[Fraction, ...] | None:
    """Coefficients ``c`` with ``sum c_i basis_i = v``, or None if v is not in the span."""
    k = len(basis)
    n = len(v)
    if k == 0:
        return () if all(x == 0 for x in v) else None
    # columns of the augmented system are the basis vectors
    system = [[to_fraction(basis[i][j]) for i in range(k)] + [to_fraction(v[j])] for j in range(n)]
    R, pivots = rref(system, k + 1)
    if k in pivots:
        return None
    c = [Fraction(0)] * k
    for row, p in zip(R, pivots):
        c[p] = row[k]
    return tuple(c)


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A: Matrix):
    """Smith normal form ``U A V = D`` of an integer matrix.

    Returns ``(U, D, V)`` as lists of lists; ``U`` and ``V`` are unimodular
    and the diagonal of ``D`` is nonnegative with ``d_i | d_{i+1}``.
    """
    U, D, V, _ = _snf(A)
    return U, D, V


def _snf(A: Matrix):
    D = [[int(x) for x in row] for row in A]
    m = len(D)
    n = len(D[0]) if m else 0
    U = _identity(m)
    V = _identity(n)
    Vinv = _identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]
        Vinv[src] = [a - q * b for a, b in zip(Vinv[src], Vinv[dst])]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return U, D, V, Vinv
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
            if any(D[i][t] for i in range(t + 1, m)) or any(D[t][j] for j in range(t + 1, n)):
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is not None:
                add_row(t, bad, 1)
                continue
            break
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return U, D, V, Vinv


def invariant_factors(A: Matrix) -> list[int]:
    _, D, _ = smith_normal_form(A)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


def hermite_normal_form(rows: Matrix) -> list[tuple[int, ...]]:
    """Row-style Hermite normal form of an integer matrix (zero rows dropped).

    Pivots are positive and entries above a pivot are reduced into
    ``[0, pivot)``; the result is a canonical basis of the row lattice.
    """
    H = [[int(x) for x in r] for r in rows]
    if not H:
        return []
    n = len(H[0])
    r = 0
    for c in range(n):
        while True:
            nz = [i for i in range(r, len(H)) if H[i][c]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(H[i][c]))
            H[r], H[i0] = H[i0], H[r]
            done = True
            for i in range(r + 1, len(H)):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if r < len(H) and H[r][c]:
            if H[r][c] < 0:
                H[r] = [-x for x in H[r]]
            for i in range(r):
                q = H[i][c] // H[r][c]
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
            r += 1
            if r == len(H):
                break
    return [tuple(row) for row in H[:r]]


def det(A: Matrix):
    """Exact determinant (rationals allowed) by fraction-based elimination."""
    m = [list(map(to_fraction, r)) for r in A]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        result *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


@dataclass(frozen=True)
class IntegerLattice:
    """A sublattice of Z^n given by an explicit basis (rows)."""

    ambient_rank: int
    basis: tuple[tuple[int, ...], ...]
    saturated: bool = False

    def __post_init__(self):
        basis = tuple(tuple(int(x) for x in b) for b in self.basis)
        if any(len(b) != self.ambient_rank for b in basis):
            raise ValueError("basis vectors must have length ambient_rank")
        if rank(basis, self.ambient_rank) != len(basis):
            raise ValueError("lattice basis vectors must be linearly independent")
        object.__setattr__(self, "basis", basis)

    @classmethod
    def standard(cls, n: int) -> "IntegerLattice":
        return cls(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), True)

    @classmethod
    def spanned_by(cls, n: int, vectors) -> "IntegerLattice":
        """The lattice generated by arbitrary (possibly dependent) integer vectors."""
        hnf = hermite_normal_form([tuple(int(x) for x in v) for v in vectors]) if vectors else []
        return cls(n, tuple(hnf), False)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, v) -> tuple[Fraction, ...] | None:
        return solve_left(self.basis, v)

    def __contains__(self, v) -> bool:
        c = self.coordinates(v)
        return c is not None and all(x.denominator == 1 for x in c)

    def image(self, matrix: Matrix) -> "IntegerLattice":
        """Image of the lattice under ``v -> matrix @ v``."""
        m = len(matrix)
        vecs = [tuple(sum(int(matrix[i][j]) * b[j] for j in range(self.ambient_rank)) for i in range(m))
                for b in self.basis]
        return IntegerLattice.spanned_by(m, vecs)


def saturate(L: IntegerLattice) -> IntegerLattice:
    """Z^n intersected with the rational span of ``L``."""
    if L.rank == 0:
        return IntegerLattice(L.ambient_rank, (), True)
    _, D, _, Vinv = _snf(L.basis)
    r = sum(1 for i in range(min(len(D), L.ambient_rank)) if D[i][i])
    return IntegerLattice(L.ambient_rank, tuple(hermite_normal_form(Vinv[:r])), True)


def saturated_lattice_of_span(n: int, vectors) -> IntegerLattice:
    """Saturated lattice Z^n ∩ span_Q(vectors) for rational vectors."""
    ints = [clear_denominators(v) for v in vectors if any(x != 0 for x in v)]
    if not ints:
        return IntegerLattice(n, (), True)
    R, _ = rref(ints, n)
    return saturate(IntegerLattice(n, tuple(clear_denominators(r) for r in R)))


def lattice_index(sub: IntegerLattice, ambient: IntegerLattice):
    """Index ``[ambient : sub]``; ``math.inf`` when ``sub`` has smaller rank.

    Raises :class:`LatticeContainmentError` if a basis vector of ``sub`` is
    not in ``ambient``.
    """
    if sub.ambient_rank != ambient.ambient_rank:
        raise ValueError("lattices live in different ambient spaces")
    coords = []
    for b in sub.basis:
        c = ambient.coordinates(b)
        if c is None or any(x.denominator != 1 for x in c):
            raise LatticeContainmentError(f"{b} does not lie in the ambient lattice", b)
        coords.append([int(x) for x in c])
    if sub.rank < ambient.rank:
        return math.inf
    if sub.rank == 0:
        return 1
    return math.prod(invariant_factors(coords))


class QuotientMap:
    """Coordinates on Z^n / L for a saturated sublattice ``L``.

    ``project`` sends a (rational) vector to coordinates in Z^(n-k) ⊗ Q and
    ``lift`` maps quotient coordinates back to a fixed section in Z^n.
    """

    def __init__(self, L: IntegerLattice):
        if not L.saturated:
            L = saturate(L)
        self.sub = L
        n = L.ambient_rank
        self.n = n
        self.k = L.rank
        if self.k == 0:
            self._V = _identity(n)
            self._Vinv = _identity(n)
        else:
            _, _, self._V, self._Vinv = _snf(L.basis)

    @property
    def rank(self) -> int:
        return self.n - self.k

    def project(self, v) -> tuple:
        y = [sum(v[i] * self._V[i][j] for i in range(self.n)) for j in range(self.n)]
        return tuple(y[self.k:])

    def lift(self, q) -> tuple:
        full = [0] * self.k + list(q)
        return tuple(sum(full[i] * self._Vinv[i][j] for i in range(self.n)) for j in range(self.n))
