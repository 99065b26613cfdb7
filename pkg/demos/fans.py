"""Admissible fans: a failure of the fan axiom in R^3 and an orbit table."""
from tropkit import (
    FanError,
    HeightData,
    PolyhedralComplex,
    Polyhedron,
    ValuedLaurentPolynomial,
    ValuedScalar,
    dual_complex,
    fan_from_complex,
    is_complete,
    orbit_table,
)

d1 = Polyhedron.from_generators(3, [(0, 0, 0)], [(1, 0, 0), (0, 1, 0)])
d2 = Polyhedron.from_generators(3, [(0, 0, 1)], [(1, 1, 0), (0, 0, 1)])
try:
    fan_from_complex(PolyhedralComplex.from_maximal(3, [d1, d2]))
except FanError as e:
    a, b, inter = e.witness
    print("cones meet outside a common face along", inter.rays)

f = ValuedLaurentPolynomial(2, {(1, 0): 1, (0, 1): 1, (0, 0): ValuedScalar.t(1)})
F = fan_from_complex(dual_complex(HeightData.from_polynomial(f)).complex)
print("\ncomplete:", is_complete(F))
for r in orbit_table(F):
    tag = "  (component)" if r.is_component else ""
    print(f"  face dim {r.face_dim}  orbit dim {r.orbit_dim}  fibre: {r.fiber}{tag}")
