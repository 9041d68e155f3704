"""The Bloch-sphere view: channels are affine maps, measurements are angles.

The extracted channel acts on Bloch vectors as r -> eta r + c.  Measuring
qubit b along (theta, phi) collapses qubit a to a pure state whose
direction depends on the angles and the entanglement angle gamma; the
channel then shrinks that direction to a vector whose length (the "purity")
sets the conditional entropy.  The outcome-swap symmetry

    (theta, phi) -> (pi - theta, phi + pi)

exchanges the two conditional purities and leaves the objective unchanged.
"""

import numpy as np

from qdiscord import affine_from_kraus, conditional_purities, decompose, lu_state
from qdiscord.correlations import objective_channel

rho = lu_state()
d = decompose(rho)
ch = affine_from_kraus(d.kraus)

print("affine matrix eta:")
for row in ch.eta:
    print("   " + "  ".join(f"{v:+.6f}" for v in row))
print("shift c:", np.round(ch.c, 6))
print()

print(f"{'theta/pi':>9} {'phi/pi':>7} {'s_prime':>9} {'t_prime':>9} {'objective':>11}")
for th in (0.0, 0.155 * np.pi, 0.3 * np.pi, 0.5 * np.pi):
    sp, tp, p1, p2 = conditional_purities(ch, d.gamma, th, 0.0)
    obj = objective_channel(ch, d.gamma, th, 0.0)
    print(f"{th / np.pi:>9.4f} {0.0:>7.2f} {sp:>9.6f} {tp:>9.6f} {obj:>11.9f}")

print()
print("outcome-swap symmetry check at a random angle pair:")
rng = np.random.default_rng(0)
th, ph = rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi)
sp, tp, _, _ = conditional_purities(ch, d.gamma, th, ph)
sp2, tp2, _, _ = conditional_purities(ch, d.gamma, np.pi - th, ph + np.pi)
print(f"   s'({th:.3f}, {ph:.3f}) = {sp:.12f}   t'(swapped) = {tp2:.12f}")
print(f"   t'({th:.3f}, {ph:.3f}) = {tp:.12f}   s'(swapped) = {sp2:.12f}")
print(f"   objective difference = {abs(objective_channel(ch, d.gamma, th, ph) - objective_channel(ch, d.gamma, np.pi - th, ph + np.pi)):.2e}")
