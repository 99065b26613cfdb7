"""Exact tropical geometry of hypersurfaces, polyhedral complexes and admissible fans.

All arithmetic is over the integers and rationals; floats are rejected.
"""
from .complexes import (
    ComplexError,
    PolyhedralComplex,
    SupportMismatch,
    common_refinement,
    is_subdivision,
    local_cone,
    pointed_refinement,
    validate_complex,
)
from .convex import ProperPolyhedralFunction, conjugate, dual_complex_of_function
from .cycles import (
    BalancingResult,
    TropicalCycle,
    balancing_check,
    cycle_add,
    cycles_equal,
    localize,
    pushforward,
    refine,
)
from .fans import (
    AdmissibleCone,
    AdmissibleFan,
    FanError,
    OrbitRecord,
    fan_from_complex,
    is_complete,
    morphism_properness,
    orbit_intersection_dim,
    orbit_table,
    proper_intersection_check,
    slice,
    tevelev_meets,
)
from .linalg import (
    IntegerLattice,
    LatticeContainmentError,
    QuotientMap,
    lattice_index,
    primitive,
    saturate,
    smith_normal_form,
)
from .polyhedra import (
    HalfSpace,
    Polyhedron,
    cone_over,
    covers,
    faces,
    is_pointed,
    polyhedron_from_halfspaces,
    recession_cone,
)
from .tropical import (
    HeightData,
    TropicalCone,
    TropicalHypersurface,
    dual_complex,
    trop_trop_check,
    tropical_cone,
    tropical_hypersurface,
    weight_subdivision,
)
from .valued import (
    ResidueLaurentPolynomial,
    ValuedLaurentPolynomial,
    ValuedScalar,
    initial_form,
    is_monomial,
    omega_weight,
    residue,
    valuation,
)

__version__ = "0.1.0"
