"""
Modular data of C(sl2, k)
=========================

Build S and T for the quantum-group category at a few levels and compare with
the familiar sine formula.
"""
import numpy as np

from permgauge import LieSpec, derived_scalars, kac_peterson, validate_modular, verlinde

k = 4
md = kac_peterson(LieSpec("A", 1, k))
print("labels:", md.labels)

# The sine formula: S_ab = sqrt(2/(k+2)) sin(pi (a+1)(b+1) / (k+2))
j = np.arange(k + 1)
closed = np.sqrt(2 / (k + 2)) * np.sin(np.pi * np.outer(j + 1, j + 1) / (k + 2))
print("max |S - closed form|:", np.max(np.abs(md.s - closed)))

print(validate_modular(md))

sc = derived_scalars(md)
print("quantum dimensions:", np.round(sc.dims, 6))
print("global dimension D:", round(sc.global_dim, 6))
print("central charge mod 24 from zeta:", round(24 * np.angle(sc.zeta) / (2 * np.pi), 6))

ring = verlinde(md)
for x in md.labels:
    print(f"L1 x {x} =", ring.product("L1", x))
