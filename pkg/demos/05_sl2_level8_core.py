"""
A rank-4 core and its gauging
=============================

The even part of C(sl2, 8) modulo its simple current has four simple objects
with twists 1, e^{2 pi i/5} and e^{6 pi i/5} (twice). The reversed Fibonacci
category squared has the same data.
"""
import numpy as np

from permgauge import LieSpec, adjoint_subcategory, deligne_product, kac_peterson, reverse, validate_ring
from permgauge.gauge import PermutationGauging

sl2_8 = kac_peterson(LieSpec("A", 1, 8))
even = sl2_8.theta[::2]
print("twists of 0, 2L1, 4L1, 6L1, 8L1 in units of 2 pi i:", np.round(np.angle(even) / (2 * np.pi) % 1, 4))

fib = adjoint_subcategory(kac_peterson(LieSpec("A", 1, 3)))
core = deligne_product(reverse(fib), reverse(fib))
print("core labels:", core.labels)
print("core twists in units of 2 pi i:", np.round(np.angle(core.theta) / (2 * np.pi) % 1, 4))

ring = PermutationGauging(core).fusion()
print(f"gauged core: rank {ring.rank}")
print(validate_ring(ring))
