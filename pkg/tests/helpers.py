"""Shared builders for the test suite (polynomials, random families, small complexes)."""
from __future__ import annotations

import random
from fractions import Fraction as Q

from tropkit import Polyhedron, PolyhedralComplex, ValuedLaurentPolynomial, ValuedScalar

T = ValuedScalar.t


def poly(n, terms):
    """``terms`` maps exponents to coefficients: a rational, a valued scalar or a ``(gamma, c)`` pair."""
    return ValuedLaurentPolynomial(n, dict(terms))


# the running examples
X_Y_ONE = poly(2, {(1, 0): 1, (0, 1): 1, (0, 0): 1})
X_Y_T = poly(2, {(1, 0): 1, (0, 1): 1, (0, 0): T(1)})
X2_Y_ONE = poly(2, {(2, 0): 1, (0, 1): 1, (0, 0): 1})


def rq(rng, lo=-12, hi=12, dmax=4):
    return Q(rng.randint(lo, hi), rng.randint(1, dmax))


def random_polynomial(rng, n=None, max_terms=8, spread=2, trivial=False, nontrivial=False):
    n = n or rng.choice([1, 2, 3])
    k = rng.randint(2, min(max_terms, (2 * spread + 1) ** n))
    terms = {}
    while len(terms) < k:
        u = tuple(rng.randint(-spread, spread) for _ in range(n))
        c = rng.choice([1, -1, 2, 3, Q(1, 2)])
        if trivial:
            terms[u] = ValuedScalar.constant(c)
        else:
            g = rq(rng)
            if nontrivial and g == 0:
                g = Q(1, 3)
            terms[u] = T(g, c)
    return ValuedLaurentPolynomial(n, terms)


def random_family(seed, count, **kw):
    rng = random.Random(seed)
    return [random_polynomial(rng, **kw) for _ in range(count)]


def random_point(rng, n):
    return tuple(rq(rng) for _ in range(n))


def seg(a, b):
    """Closed segment in R^1."""
    return Polyhedron.from_generators(1, [(a,), (b,)])


def ray_from(p, d):
    return Polyhedron.from_generators(len(p), [p], [d])


def box(n, lo=0, hi=1):
    ineqs = []
    for i in range(n):
        e = tuple(int(i == j) for j in range(n))
        ineqs.append((e, lo))
        ineqs.append((tuple(-x for x in e), -hi))
    return Polyhedron.from_halfspaces(n, ineqs)


def tropical_line_fan():
    """Three rays (1,0), (0,1), (-1,-1) from the origin."""
    return PolyhedralComplex.from_maximal(2, [ray_from((0, 0), d) for d in [(1, 0), (0, 1), (-1, -1)]])
