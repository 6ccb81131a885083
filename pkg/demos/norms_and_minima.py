"""
Diagonalizable norms and successive minima
==========================================

Two norms on Q_2^3, a joint orthogonal basis, and the identity
vol(n1, n2) = sum of the successive minima.
"""

from fractions import Fraction

import numpy as np

from ultranorm import PAdicQ, DiagonalNorm, codiagonalize, dGI, relative_volume, successive_minima
from ultranorm.metrics import Chi, chi_distance

F = PAdicQ(2)

# n1 is the standard norm with weights (0, 1, 1/2).  n2 lives on a skew basis.
n1 = DiagonalNorm.standard(F, [0, 1, Fraction(1, 2)])
n2 = DiagonalNorm.make(F, [[1, 2, 0], [0, 1, 4], [3, 0, 1]], [Fraction(-1, 3), 2, 0])
print(n1)
print(n2)

# evaluate both norms on a few vectors; weights are -log|.|/log 2
for v in ([1, 0, 0], [1, 1, 1], [2, 4, 8], [F.coerce(Fraction(1, 4)), 3, 0]):
    print([str(x) for x in v], n1(v), n2(v))

# a basis orthogonal for both norms at once
c = codiagonalize(n1, n2)
for vec, w1, w2 in zip(c.vectors, c.weights1, c.weights2):
    print([str(x) for x in vec], w1, w2)

# the differences w1 - w2 are the successive minima, up to order
lam = successive_minima(n1, n2)
print("minima:", [str(x) for x in lam])
print("vol:   ", relative_volume(n1, n2), "=", sum(lam, Fraction(0)))
print("dGI:   ", dGI(n1, n2), "= max |lambda_i|")

# the chi-distances are the usual vector norms of the minima
arr = np.array([float(x) for x in lam])
for chi in Chi:
    print(chi.value, float(chi_distance(n1, n2, chi)), np.linalg.norm(arr, {"l1": 1, "l2": 2, "linf": np.inf}[chi.value]))
