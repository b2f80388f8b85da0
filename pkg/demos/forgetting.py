"""How fast does the channel forget its initial memory state?

Feeds the same state through the channel prepared in the two extreme
initial memory configurations and measures the trace distance between the
outputs.  For a single-qubit state padded with maximally mixed qubits the
gap is exactly |mu|**n * |d| * D(rho, I/2), so each extra use multiplies it
by |mu|.
"""

import numpy as np

from qmemchan import ChannelParams, forgetfulness_gap, ket_to_dm

rho = ket_to_dm(np.array([0.8, 0.6], dtype=complex))

for mu in (0.3, 0.6, 0.9):
    params = ChannelParams(mu=mu, a=0.9, d=0.7)
    gaps = [forgetfulness_gap(params, n, rho) for n in range(1, 9)]
    ratios = [g2 / g1 for g1, g2 in zip(gaps, gaps[1:])]
    print(f"mu = {mu}")
    print("  gap(n): " + " ".join(f"{g:.3e}" for g in gaps))
    print("  ratios: " + " ".join(f"{r:.6f}" for r in ratios) + f"   (|mu| = {abs(mu)})\n")

print("memoryless chain forgets immediately:",
      forgetfulness_gap(ChannelParams(mu=0.0, a=0.9, d=0.7), 3, rho))
