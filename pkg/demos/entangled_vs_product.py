"""Does entanglement keep its edge as blocks grow?  (Evidence: no.)

Per-use mutual information of the Pauli-orbit ensembles of four input
families, at the strongly correlated point mu = 0.9, a = 2/3, d = -4/3
(branch 0 maximally noisy, branch 1 noiseless).  Entangled inputs win at
n = 2 and n = 4, but the basis product states overtake them at n = 6 and
n = 8 - the numerical core of the capacity-equals-product-capacity
conjecture.
"""

from qmemchan import ChannelParams, default_families, orbit_mutual_information, threshold_f

params = ChannelParams(mu=0.9, a=2 / 3, d=-4 / 3)
print(f"mu = {params.mu}, a = {params.a:.4f}, d = {params.d:.4f} "
      f"(x0 = {params.x0:.4f}, x1 = {params.x1:.4f}), f = {threshold_f(params):.4f}\n")

kinds = ["product", "ghz", "w", "max_entangled"]
print(f"{'n':>3} " + " ".join(f"{k:>14}" for k in kinds) + "   best")
for n in (2, 4, 6, 8):
    per_use = {
        mi.family.kind: mi.per_use
        for mi in (orbit_mutual_information(f, params) for f in default_families(n))
    }
    best = max(per_use, key=per_use.get)
    print(f"{n:3d} " + " ".join(f"{per_use[k]:14.6f}" for k in kinds) + f"   {best}")

print("\nper-use values are I_n / n in bits; each row's ensemble is the")
print("equiprobable Pauli orbit of the named state.")
