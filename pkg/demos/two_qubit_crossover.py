"""Where does entanglement stop helping at two channel uses?

Sweeps the Markov memory mu with the branch parameters fixed at a = 1/3,
d = -1 and prints both two-use capacity branches next to the threshold
f = |a^2 + mu d^2| - 2|a|.  The winner flips exactly where f changes sign
(mu = 5/9 on this slice).
"""

import numpy as np

from qmemchan import ChannelParams, numeric_theta_scan, two_use_capacity

A, D = 1 / 3, -1.0

print(f"two-use capacity branches at a = {A:.4f}, d = {D:.1f}")
print(f"{'mu':>7} {'f':>10} {'C2 product':>12} {'C2 entangled':>13} {'winner':>14}")
for mu in np.linspace(0.30, 0.80, 11):
    r = two_use_capacity(ChannelParams(mu=float(mu), a=A, d=D))
    print(f"{mu:7.3f} {r.f:10.5f} {r.c2_product:12.6f} {r.c2_entangled:13.6f} "
          f"{r.optimal_family.value:>14}")

# pin the crossover by bisecting the scan's preferred input angle
lo, hi = 0.4, 0.7
for _ in range(40):
    mid = (lo + hi) / 2
    if numeric_theta_scan(ChannelParams(mu=mid, a=A, d=D)) > np.pi / 8:
        hi = mid
    else:
        lo = mid
print(f"\nnumeric crossover at mu = {(lo + hi) / 2:.9f}  (exact: 5/9 = {5 / 9:.9f})")
