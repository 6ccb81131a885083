"""
Scaled volumes of toric sup-norms
=================================

For a PL function theta on a polytope, the sup-norms of m*phi are diagonal
in the monomial basis with weights m*theta_hat(u/m).  Their volume against the
trivial metric, divided by m*N_m, tends to the energy: the mean of theta_hat.
The gap decays like 1/m.
"""

import matplotlib

matplotlib.use("Agg")
import numpy as np
from matplotlib import pyplot as plt

from ultranorm import scaled_volume
from ultranorm.toric import energy, toric_pair
from ultranorm.toric.instances import named, trivial

names = ["p1-breakpoint-half", "p1-asymmetric", "p2-two-atom", "p2-pyramid"]
m_max = {"p1-breakpoint-half": 120, "p1-asymmetric": 120, "p2-two-atom": 30, "p2-pyramid": 30}

fig, axes = plt.subplots(1, 2, figsize=(10, 4))
for name in names:
    phi = named(name)
    psi = trivial(phi.polytope)
    E = energy(phi, psi)
    pair = toric_pair(phi, psi)
    ms = np.arange(1, m_max[name] + 1)
    vals = np.array([float(scaled_volume(pair, int(m))) for m in ms])
    gap = np.abs(vals - float(E))
    print(f"{name:20s} energy {E} ({float(E):.6f})   m={ms[-1]}: {vals[-1]:.6f}   m*gap={ms[-1] * gap[-1]:.4f}")
    axes[0].plot(ms, vals, label=name)
    axes[0].axhline(float(E), color="grey", lw=0.5)
    # drop exact hits before taking logs
    keep = gap > 0
    axes[1].loglog(ms[keep], gap[keep], ".", ms=3, label=name)

axes[0].set_xlabel("m")
axes[0].set_ylabel("scaled volume")
axes[0].legend(fontsize="small")
axes[1].loglog(ms, 1 / ms, "k--", lw=0.8, label="1/m")
axes[1].set_xlabel("m")
axes[1].set_ylabel("|scaled volume - energy|")
axes[1].legend(fontsize="small")
fig.tight_layout()
fig.savefig("theorem_a_convergence.png", dpi=120)
print("wrote theorem_a_convergence.png")
