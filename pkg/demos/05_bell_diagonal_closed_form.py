"""Closed-form classical correlation for Bell-diagonal states.

For a Bell-diagonal state with correlation triple (ex, ey, ez) the optimal
measurement aligns with the strongest correlation axis and

    C = 1 - H2((1 + max(|ex|, |ey|, |ez|)) / 2).

We draw random triples from the Bell tetrahedron and compare the analytic
value against the brute-force grid oracle.
"""

import numpy as np

from qdiscord import analytic_discord_x, bell_diagonal, binary_entropy
from qdiscord.correlations import grid_oracle

rng = np.random.default_rng(1)

print(f"{'ex':>7} {'ey':>7} {'ez':>7} {'C closed form':>14} {'C oracle':>14} {'diff':>9}")
worst = 0.0
for _ in range(8):
    w = rng.dirichlet(np.ones(4))
    ex = w[0] - w[1] + w[2] - w[3]
    ey = -w[0] + w[1] + w[2] - w[3]
    ez = w[0] + w[1] - w[2] - w[3]
    rho = bell_diagonal(ex, ey, ez)
    closed = 1 - binary_entropy((1 + max(abs(ex), abs(ey), abs(ez))) / 2)
    rep = analytic_discord_x(rho)
    oracle, _ = grid_oracle(rho)
    diff = abs(rep.classical_corr - oracle)
    worst = max(worst, diff, abs(rep.classical_corr - closed))
    print(f"{ex:>7.3f} {ey:>7.3f} {ez:>7.3f} {rep.classical_corr:>14.9f} {oracle:>14.9f} {diff:>9.1e}")

print(f"\nworst deviation across the table: {worst:.2e}")
print("The polar setting wins when |ez| dominates, the equatorial one")
print("otherwise; both are covered by the single max(...) formula.")
