"""
The 39 simple objects of the gauged C(g2, 3)
============================================
"""
import time
from collections import Counter

import numpy as np

from permgauge import Hat, LieSpec, fp_dims, fusion_graph, kac_peterson
from permgauge.gauge import PermutationGauging

md = kac_peterson(LieSpec("G2", 2, 3))
print("C(g2, 3) labels:", md.labels)

start = time.perf_counter()
g = PermutationGauging(md)
ring = g.fusion()
print(f"gauged ring of rank {ring.rank} assembled in {time.perf_counter() - start:.2f} s")

dims = fp_dims(ring)
for value, count in sorted(Counter(np.round(dims, 6)).items()):
    print(f"  {value:12.6f}  x{count}")

graph = fusion_graph(ring, g.names[g.index(Hat(0, 1))])
print("fusion graph of 0^+:", len(graph.vertices), "vertices,", len(graph.edges), "edges, connected:", graph.is_connected())
