"""Walk through the tropical line of x + y + t.

Prints the weight subdivision, the dual complex with its pairing, the
weighted rays, initial forms at a few weights and the cone slices.
"""
from fractions import Fraction as Q

from tropkit import (
    HeightData,
    ValuedLaurentPolynomial,
    ValuedScalar,
    dual_complex,
    initial_form,
    tropical_cone,
    tropical_hypersurface,
)

f = ValuedLaurentPolynomial(2, {(1, 0): 1, (0, 1): 1, (0, 0): ValuedScalar.t(1)})
print("f =", f)

D = dual_complex(HeightData.from_polynomial(f))
print("\nsubdivision cell -> dual cell")
for cell, dual in sorted(D.pairing.items(), key=lambda kv: kv[0].dim):
    print(f"  {cell}  ->  {dual}")

T = tropical_hypersurface(f)
print("\nmaximal cells with weights")
for cell, m in T.weights.items():
    print(f"  {cell}  weight {m}")

for w in [(1, 1), (2, 1), (0, 0), (5, 7)]:
    g = initial_form(f, w)
    print(f"\nin_{w} f = {g}   on the curve: {w in T}")

C = tropical_cone(T)
for s in [0, Q(1, 2), 1]:
    print(f"\nslice at s={s}:")
    for p in C.slice(s):
        print("  ", p)
