import random
from fractions import Fraction as Q

import pytest

from helpers import X_Y_ONE, X_Y_T, random_family, ray_from, rq, seg
from tropkit import (
    AdmissibleCone,
    AdmissibleFan,
    FanError,
    HeightData,
    PolyhedralComplex,
    Polyhedron,
    cone_over,
    dual_complex,
    fan_from_complex,
    is_complete,
    morphism_properness,
    orbit_intersection_dim,
    orbit_table,
    pointed_refinement,
    proper_intersection_check,
    slice,
    tevelev_meets,
    tropical_cone,
    tropical_hypersurface,
)
from tropkit.fans import CompatibilityError
from tropkit.polyhedra import recession_cone, supports_equal, union_contains


def complex1(*cells):
    return PolyhedralComplex.from_maximal(cells[0].n, list(cells))


def line_complex():
    return complex1(seg(-1, 0), seg(0, 1), Polyhedron.from_halfspaces(1, [((1,), 1)]), Polyhedron.from_halfspaces(1, [((-1,), 1)]))


def dual_fan(f):
    return fan_from_complex(dual_complex(HeightData.from_polynomial(f)).complex)


def test_admissible_cone_checks():
    with pytest.raises(FanError):
        AdmissibleCone(Polyhedron.from_generators(2, [(0, 0)], [(0, -1)]))
    with pytest.raises(FanError):
        AdmissibleCone(Polyhedron.from_generators(2, [(0, 0)], lines=[(1, 0)]))
    c = AdmissibleCone.over(seg(1, 2))
    assert not c.in_generic_fibre
    assert AdmissibleCone(Polyhedron.from_generators(2, [(0, 0)], [(1, 0)])).in_generic_fibre


def test_slices_of_fan_over_segment():
    F = fan_from_complex(complex1(seg(1, 2)))
    assert set(slice(F, 1).cells) == {seg(1, 2), Polyhedron.point((1,)), Polyhedron.point((2,))}
    assert slice(F, 2).maximal_cells == [seg(2, 4)]
    assert slice(F, 0).cells == (Polyhedron.point((0,)),)


def test_fan_over_tropical_line_complex_is_complete():
    F = dual_fan(X_Y_T)
    assert is_complete(F)
    assert len([c for c in F.cones if c.dim == 3]) == 3


def test_burgos_sombra_failure_witness():
    d1 = Polyhedron.from_generators(3, [(0, 0, 0)], [(1, 0, 0), (0, 1, 0)])
    d2 = Polyhedron.from_generators(3, [(0, 0, 1)], [(1, 1, 0), (0, 0, 1)])
    C = PolyhedralComplex.from_maximal(3, [d1, d2])
    with pytest.raises(FanError) as e:
        fan_from_complex(C)
    a, b, inter = e.value.witness
    assert {a, b} == {cone_over(d1), cone_over(d2)}
    assert inter == Polyhedron.from_generators(4, [(0, 0, 0, 0)], [(1, 1, 0, 0)])
    # oracle: the ray lies in the relative interior of the 2-face rec(d1) x {0} of c(d1)
    face = Polyhedron.from_generators(4, [(0, 0, 0, 0)], [(1, 0, 0, 0), (0, 1, 0, 0)])
    assert face in cone_over(d1).faces()
    assert face.in_relint((1, 1, 0, 0))


def test_fan_over_single_polytope():
    P = Polyhedron.from_generators(2, [(0, 0), (2, 0), (0, 1)])
    F = fan_from_complex(complex1(P))
    assert len(F.maximal_cones) == 1
    assert not is_complete(F)


def test_orbit_table_segment():
    F = fan_from_complex(complex1(seg(0, 1)))
    T = orbit_table(F)
    special = [r for r in T if r.fiber == "special"]
    generic = [r for r in T if r.fiber == "generic"]
    assert sorted((r.face_dim, r.orbit_dim, r.is_component) for r in special) == [(0, 1, True), (0, 1, True), (1, 0, False)]
    assert [(r.face_dim, r.orbit_dim) for r in generic] == [(0, 1)]
    for r in T:
        assert r.orbit_dim + r.face_dim == 1


def test_orbit_table_apex_only():
    F = AdmissibleFan.from_cones([Polyhedron.point((0, 0))], 1)
    T = orbit_table(F)
    assert len(T) == 1 and T[0].fiber == "generic" and T[0].orbit_dim == 1


def test_orbit_table_trivial_line_fan():
    F = dual_fan(X_Y_ONE)
    T = orbit_table(F)
    special = [r for r in T if r.fiber == "special"]
    assert sum(r.is_component for r in special) == 1
    by_dim = sorted(r.orbit_dim for r in special)
    assert by_dim == [0, 0, 0, 1, 1, 1, 2]
    # closure order reverses face containment
    for i, j in T.order:
        assert F.complex.is_face(F.cones[j], F.cones[i])


def test_is_complete_examples():
    assert is_complete(fan_from_complex(line_complex()))
    assert not is_complete(fan_from_complex(complex1(seg(0, 1))))
    skel = tropical_hypersurface(X_Y_T).complex
    assert not is_complete(fan_from_complex(skel))


def test_morphism_properness_examples():
    whole = fan_from_complex(line_complex())
    fine = fan_from_complex(complex1(seg(-1, 0), seg(0, Q(1, 2)), seg(Q(1, 2), 1),
                                     Polyhedron.from_halfspaces(1, [((1,), 1)]), Polyhedron.from_halfspaces(1, [((-1,), 1)])))
    assert morphism_properness(fine, whole, [[1]])
    part = fan_from_complex(complex1(seg(0, 1)))
    assert not morphism_properness(part, whole, [[1]])
    halves = fan_from_complex(complex1(Polyhedron.from_halfspaces(1, [((1,), 0)]), Polyhedron.from_halfspaces(1, [((-1,), 0)])))
    assert morphism_properness(halves, halves, [[2]])
    with pytest.raises(CompatibilityError):
        morphism_properness(whole, part, [[1]])


def test_tevelev_examples():
    Tw = tropical_cone(tropical_hypersurface(X_Y_T))
    F = dual_fan(X_Y_T)
    ray = cone_over(Polyhedron.point((1, 1)))
    off = cone_over(Polyhedron.point((0, 1)))
    apex = Polyhedron.point((0, 0, 0))
    assert tevelev_meets(Tw, None, ray)
    assert not tevelev_meets(Tw, None, off)
    assert tevelev_meets(Tw, F, apex)
    # (0,0) ties min(w1, w2, 1) at 0, so it lies on the curve
    assert tevelev_meets(Tw, None, cone_over(Polyhedron.point((0, 0))))


def test_orbit_intersection_dim_examples():
    T = tropical_hypersurface(X_Y_T)
    assert orbit_intersection_dim(T, None, Polyhedron.point((1, 1))) == 1
    inside = Polyhedron.from_generators(2, [(2, 1), (3, 1)])
    assert orbit_intersection_dim(T, None, inside) == 0
    assert orbit_intersection_dim(T, None, Polyhedron.point((5, 7))) is None


def test_proper_intersection_examples():
    Tc = tropical_hypersurface(X_Y_T)
    Tw = tropical_cone(Tc)
    assert proper_intersection_check(Tw, fan_from_complex(Tc.complex))
    assert not proper_intersection_check(Tw, dual_fan(X_Y_T))
    one = fan_from_complex(complex1(ray_from((1, 1), (1, 0))))
    assert not proper_intersection_check(Tw, one)


# --- random fans ---------------------------------------------------------------------

def random_fans(seed, count):
    rng = random.Random(seed)
    fans = []
    for f in random_family(seed, count, n=2):
        C = dual_complex(HeightData.from_polynomial(f)).complex
        if not C.is_pointed:
            C = pointed_refinement(C)
        fans.append(("complete", fan_from_complex(C)))
        pts = [tuple(rng.randint(-3, 3) for _ in range(2)) for _ in range(4)]
        fans.append(("polytope", fan_from_complex(complex1(Polyhedron.from_generators(2, pts)))))
    return fans


def completeness_oracle(F, rng):
    S1 = [slice_cell for slice_cell in slice(F, 1).maximal_cells]
    for _ in range(40):
        w = tuple(rq(rng, -30, 30) for _ in range(F.n))
        if not any(c.contains(w) for c in S1):
            return False
    return union_contains(S1, [Polyhedron.whole(F.n)])


@pytest.mark.parametrize("kind, F", random_fans(41, 6))
def test_random_fans_orbit_law_and_completeness(kind, F):
    for r in orbit_table(F):
        assert r.orbit_dim + r.face_dim == F.n
    expected = completeness_oracle(F, random.Random(1))
    assert is_complete(F) == expected
    assert expected == (kind == "complete")


@pytest.mark.parametrize("kind, F", random_fans(43, 4))
def test_slice_scaling(kind, F):
    S1 = slice(F, 1)
    for s in [Q(1, 2), 3]:
        assert set(slice(F, s).cells) == {c.scale(s) for c in S1.cells}
    zero = set(slice(F, 0).cells)
    rec = {recession_cone(c) for c in S1.cells}
    generic = {c for c in F.generic_cones()}
    assert zero == rec | {Polyhedron.from_halfspaces(F.n, [(u[:-1], 0) for u, _ in g.ineqs if any(u[:-1])], [(u[:-1], 0) for u, _ in g.eqs if any(u[:-1])]) for g in generic}


def test_completeness_invariant_under_subdivision():
    F = dual_fan(X_Y_T)
    C = dual_complex(HeightData.from_polynomial(X_Y_T)).complex
    from tropkit.complexes import _meet, orthant_fan
    fine = fan_from_complex(_meet(C, PolyhedralComplex.from_maximal(2, [c.translate((1, 1)) for c in orthant_fan(2).maximal_cells])))
    assert is_complete(F) == is_complete(fine) is True
