import math
import random
from fractions import Fraction as Q

import pytest

from helpers import T, X2_Y_ONE, X_Y_ONE, X_Y_T, poly, random_family, ray_from, rq
from tropkit import (
    HeightData,
    Polyhedron,
    balancing_check,
    cycles_equal,
    dual_complex,
    initial_form,
    trop_trop_check,
    tropical_cone,
    tropical_hypersurface,
    weight_subdivision,
)
from tropkit.polyhedra import supports_equal
from tropkit.tropical import corner_locus_contains, lattice_length


def cells_of(T_):
    return {c: w for c, w in T_.weights.items() if w}


def rays_with_weights(T_):
    out = {}
    for c, w in cells_of(T_).items():
        assert len(c.vertices) == 1 and len(c.rays) == 1
        out[(tuple(c.vertices[0]), c.rays[0])] = w
    return out


# --- weight subdivision ------------------------------------------------------------

def test_subdivision_single_triangle():
    S = weight_subdivision(HeightData(((0, 0), (1, 0), (0, 1)), (1, 0, 0)))
    assert len(S.cells.maximal_cells) == 1
    assert S.cells.maximal_cells[0] == Polyhedron.from_generators(2, [(0, 0), (1, 0), (0, 1)])


def test_subdivision_interval_breaks():
    S = weight_subdivision(HeightData(((0,), (1,), (2,)), (0, 0, 1)))
    assert set(S.cells.maximal_cells) == {
        Polyhedron.from_generators(1, [(0,), (1,)]),
        Polyhedron.from_generators(1, [(1,), (2,)]),
    }


def test_subdivision_trivial_heights():
    S = weight_subdivision(HeightData(((0, 0), (2, 0), (0, 1)), (0, 0, 0)))
    assert len(S.cells.maximal_cells) == 1


def test_subdivision_with_infinite_height_skips_point():
    S = weight_subdivision(HeightData(((0,), (1,), (2,)), (0, math.inf, 0)))
    assert S.cells.maximal_cells == [Polyhedron.from_generators(1, [(0,), (2,)])]


# --- dual complex --------------------------------------------------------------------

def test_dual_complex_x_y_t():
    D = dual_complex(HeightData.from_polynomial(X_Y_T))
    two = [c for c in D.complex.cells if c.dim == 2]
    zero = [c for c in D.complex.cells if c.dim == 0]
    assert len(two) == 3
    assert zero == [Polyhedron.point((1, 1))]
    assert all(zero[0] in [f for f in c.faces()] for c in two)


def test_dual_complex_trivial_heights_is_normal_fan():
    D = dual_complex(HeightData(((0, 0), (1, 0), (0, 1)), (0, 0, 0)))
    # min(0, w1, w2): regions where each point wins
    expected = {
        Polyhedron.from_halfspaces(2, [((1, 0), 0), ((0, 1), 0)]),
        Polyhedron.from_halfspaces(2, [((-1, 0), 0), ((-1, 1), 0)]),
        Polyhedron.from_halfspaces(2, [((0, -1), 0), ((1, -1), 0)]),
    }
    assert set(D.complex.maximal_cells) == expected


def test_dual_complex_single_point():
    D = dual_complex(HeightData(((3, 1),), (Q(1, 2),)))
    assert D.complex.cells == (Polyhedron.whole(2),)


# --- hypersurfaces ---------------------------------------------------------------------

def test_tropical_line_trivial_valuation():
    assert rays_with_weights(tropical_hypersurface(X_Y_ONE)) == {
        ((0, 0), (1, 0)): 1,
        ((0, 0), (0, 1)): 1,
        ((0, 0), (-1, -1)): 1,
    }


def test_tropical_line_x_y_t():
    assert rays_with_weights(tropical_hypersurface(X_Y_T)) == {
        ((1, 1), (1, 0)): 1,
        ((1, 1), (0, 1)): 1,
        ((1, 1), (-1, -1)): 1,
    }


def test_x2_y_one_weights():
    assert rays_with_weights(tropical_hypersurface(X2_Y_ONE)) == {
        ((0, 0), (0, 1)): 2,
        ((0, 0), (1, 0)): 1,
        ((0, 0), (-1, -2)): 1,
    }


def test_monomial_gives_empty_cycle():
    T_ = tropical_hypersurface(poly(2, {(1, 2): T(3, 5)}))
    assert T_.is_empty
    assert not T_.contains((0, 0))


@pytest.mark.parametrize("w, expected", [((1, 1), True), ((0, 1), False), ((2, 1), True), ((0, 0), True)])
def test_contains_examples(w, expected):
    T_ = tropical_hypersurface(X_Y_T)
    assert T_.contains(w) == expected
    assert T_.contains(w) == (not initial_form(X_Y_T, w).is_monomial())


def test_lattice_length():
    assert lattice_length(Polyhedron.from_generators(2, [(2, 0), (0, 0)])) == 2
    assert lattice_length(Polyhedron.from_generators(2, [(2, 0), (0, 1)])) == 1


def test_multiplicity_matches_initial_degree():
    # in_(0,1)(x^2 + y + 1) = x^2 + 1: two roots in the torus, degree 2
    T_ = tropical_hypersurface(X2_Y_ONE)
    w = (0, 1)
    g = initial_form(X2_Y_ONE, w)
    exps = sorted(u[0] for u in g.terms)
    assert exps[-1] - exps[0] == 2 == T_.cycle.weight_at(w)


# --- random family -------------------------------------------------------------------

FAMILY = random_family(11, 30)


def _newton_dim(f):
    pts = list(f.terms)
    return Polyhedron.from_generators(f.n, pts).dim


def _oracle_weight(f, w):
    """Lattice length of the Newton polytope of in_w(f), read off the exponents."""
    g = initial_form(f, w)
    pts = list(g.terms)
    return math.gcd(*[int(x) for p in pts[1:] for x in (a - b for a, b in zip(p, pts[0]))])


@pytest.mark.parametrize("f", FAMILY, ids=lambda f: f"n{f.n}_{len(f)}")
def test_random_hypersurface_structure(f):
    T_ = tropical_hypersurface(f)
    Z = T_.cycle
    assert all(c.dim == f.n - 1 for c in Z.complex.maximal_cells)
    assert all(w > 0 for w in Z.weights.values())
    assert balancing_check(Z)
    rng = random.Random(len(f))
    for cell, m in Z.weights.items():
        p = cell.relint_point()
        assert corner_locus_contains(f, p)
        assert _oracle_weight(f, p) == m
    for _ in range(30):
        w = tuple(rq(rng) for _ in range(f.n))
        assert T_.contains(w) == corner_locus_contains(f, w)


@pytest.mark.parametrize("f", FAMILY[:15], ids=lambda f: f"n{f.n}_{len(f)}")
def test_duality_law_and_order_reversal(f):
    D = dual_complex(HeightData.from_polynomial(f))
    sub = D.subdivision.cells
    assert len(set(D.pairing.values())) == len(D.pairing) == len(D.complex)
    for Qc, dual in D.pairing.items():
        assert Qc.dim + dual.dim == f.n
    for i, j in sub.incidence:
        a, b = sub.cells[i], sub.cells[j]
        assert D.complex.is_face(D.pairing[b], D.pairing[a])


@pytest.mark.parametrize("f", [f for f in FAMILY if f.n >= 2 and _newton_dim(f) == f.n][:10], ids=lambda f: f"n{f.n}_{len(f)}")
def test_support_connected(f):
    cells = list(tropical_hypersurface(f).cycle.support())
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j, c in enumerate(cells):
            if j not in seen and not cells[i].intersection(c).is_empty:
                seen.add(j)
                stack.append(j)
    assert len(seen) == len(cells)


def test_product_formula():
    Tf = tropical_hypersurface(X_Y_ONE).cycle
    Tg = tropical_hypersurface(X_Y_T).cycle
    assert cycles_equal(Tf + Tg, tropical_hypersurface(X_Y_ONE * X_Y_T).cycle)


# --- tropical cone ---------------------------------------------------------------------

def test_tropical_cone_x_y_t():
    C = tropical_cone(tropical_hypersurface(X_Y_T))
    assert len(C.cones) == 3 and all(c.dim == 2 for c in C.cones)
    zero = C.slice(0)
    trivial = tropical_hypersurface(X_Y_ONE).cycle.support()
    assert supports_equal(zero, trivial)
    half = C.slice(Q(1, 2))
    shifted = [ray_from((Q(1, 2), Q(1, 2)), d) for d in [(1, 0), (0, 1), (-1, -1)]]
    assert supports_equal(half, shifted)


def test_trivial_valuation_cone_is_product():
    C = tropical_cone(tropical_hypersurface(X_Y_ONE))
    base = tropical_hypersurface(X_Y_ONE).cycle.support()
    for s in [0, Q(1, 3), 1, 5]:
        assert supports_equal(C.slice(s), base)


@pytest.mark.parametrize("w", [(1, 1), (2, 1), (5, 7)])
def test_trop_trop_examples(w):
    assert trop_trop_check(X_Y_T, w)


@pytest.mark.parametrize("f", FAMILY[:10], ids=lambda f: f"n{f.n}_{len(f)}")
def test_trop_trop_random(f):
    rng = random.Random(7)
    Z = tropical_hypersurface(f).cycle
    pts = [tuple(rq(rng) for _ in range(f.n)) for _ in range(3)]
    pts += [c.relint_point() for c in Z.complex.cells[:4]]
    for w in pts:
        assert trop_trop_check(f, w)


@pytest.mark.parametrize("f", random_family(23, 8, nontrivial=True), ids=lambda f: f"n{f.n}_{len(f)}")
def test_cone_property(f):
    T_ = tropical_hypersurface(f)
    if T_.is_empty:
        return
    Tcone = tropical_cone(T_)
    trivial = tropical_hypersurface(f.trivialize()).cycle.support()
    assert supports_equal(Tcone.slice(0), trivial)
    for s in [Q(1, 3), 2]:
        scaled = tropical_hypersurface(f.scale_valuation(s)).cycle.support()
        assert supports_equal(Tcone.slice(s), scaled)
