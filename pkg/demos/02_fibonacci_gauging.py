"""
Gauging the swap on Fib x Fib
=============================

The adjoint subcategory of C(sl2, 3) is the Fibonacci category. Its permutation
gauging has 9 simple objects.
"""
import numpy as np

from permgauge import Diag, Hat, LieSpec, adjoint_subcategory, export_ring, fp_dims, kac_peterson
from permgauge.gauge import PermutationGauging

fib = adjoint_subcategory(kac_peterson(LieSpec("A", 1, 3)))
g = PermutationGauging(fib)
ring = g.fusion()
print("simple objects:", ", ".join(ring.labels))

# Three families: [X;Y] pairs, [X;X]+- diagonals and X^+- twisted objects
for name, d in zip(ring.labels, fp_dims(ring)):
    print(f"  {name:12s} FPdim {d:.6f}")

big_d = np.sum(np.abs(fib.s[0] / fib.s[0, 0]) ** 2)
print("sum of squares", np.sum(fp_dims(ring) ** 2), "= 4 D^2 =", 4 * big_d**2)

# The hat-sector coefficients can be computed two ways
print("case 3 and P-matrix routes agree:", ring == g.fusion(p_matrix=True))

print("[0;0]- acts on twisted objects by flipping the sign:")
minus = g.index(Diag(0, -1))
print(" ", ring.product(minus, g.index(Hat(1, 1))))

print()
print(export_ring(ring, "text"))
