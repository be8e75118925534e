"""
Gauged adj(sl2, 5) and C(so5, 4)
================================

Both fusion rings have rank 15; the isomorphism search finds an explicit
relabeling.
"""
from permgauge import LieSpec, adjoint_subcategory, kac_peterson, ring_isomorphism, verlinde
from permgauge.gauge import PermutationGauging

adj5 = adjoint_subcategory(kac_peterson(LieSpec("A", 1, 5)))
gauged = PermutationGauging(adj5).fusion()
so5 = verlinde(kac_peterson(LieSpec("B", 2, 4)))

f = ring_isomorphism(gauged, so5)
print("isomorphic:", f is not None)
for i, j in enumerate(f):
    print(f"  {gauged.labels[i]:14s} -> {so5.labels[j]}")
