"""Push the tropical line forward along (w1, w2) -> (2 w1, w2).

The image is compared with the tropicalization of the eliminated
curve x' = (y + 1)^2, whose horizontal ray carries weight 2.
"""
from tropkit import ValuedLaurentPolynomial, cycles_equal, pushforward, tropical_hypersurface

line = tropical_hypersurface(ValuedLaurentPolynomial(2, {(1, 0): 1, (0, 1): 1, (0, 0): 1})).cycle
image = pushforward(line, [[2, 0], [0, 1]])
for cell, m in image.weights.items():
    print(f"{cell}  weight {m}")

target = tropical_hypersurface(ValuedLaurentPolynomial(2, {(1, 0): 1, (0, 2): -1, (0, 1): -2, (0, 0): -1})).cycle
print("matches Trop(x' - y^2 - 2y - 1):", cycles_equal(image, target))
