"""
Fekete points and the Monge-Ampere measure
==========================================

A Fekete configuration maximizes the (valuation of the) Vandermonde
determinant.  For PL data it lives on the dual vertices of the cell
decomposition, and the fraction of points at each vertex approaches the
normalized cell volume.
"""

from fractions import Fraction

import matplotlib

matplotlib.use("Agg")
import numpy as np
from matplotlib import pyplot as plt

from ultranorm.toric import fekete_search, ma_measure
from ultranorm.toric.instances import named

phi = named("p2-two-atom")
target = ma_measure(phi)
print("MA atoms:", [(tuple(str(c) for c in x), str(w)) for x, w in target.atoms])

ms = np.arange(1, 21)
errs = []
for m in ms:
    _, emp = fekete_search(phi, int(m))
    worst = max(abs(emp.mass_at(x) - w) for x, w in target.atoms)
    errs.append(float(worst))
    if m in (1, 2, 5, 10, 20):
        print(m, [(tuple(str(c) for c in x), str(w)) for x, w in emp.atoms])

# the tent on [0, 1] has two cells of length 1/2
tent = named("p1-breakpoint-half")
_, emp = fekete_search(tent, 40)
print("tent, m=40:", [(str(x[0]), str(w)) for x, w in emp.atoms], "target", Fraction(1, 2))

plt.semilogy(ms, errs, "o-")
plt.xlabel("m")
plt.ylabel("max |empirical - MA|")
plt.title("p2-two-atom")
plt.savefig("fekete_points.png", dpi=120, bbox_inches="tight")
print("wrote fekete_points.png")
