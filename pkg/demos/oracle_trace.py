"""Step through the oracle on a small graph and watch candidates leave L.

At each query we print the returned vertex, the packings of the vertices
left in L and how much work the update took.
"""

from admissibility import Oracle
from admissibility.generators import gnp_random_graph
from admissibility.invariants import check_oracle

# dense enough that some packings shrink to p and need the flow step
g = gnp_random_graph(10, 0.6, seed=8)
p = 5
orc = Oracle(g, p, instrument=True)
print(f"G(10, 0.6) seed 8 with {g.m} edges, p={p}, initial candidates: {orc.cand()}")

while True:
    v = orc.query()
    if v is None:
        break
    check_oracle(orc)  # exhaustive; fine at this size
    rec = orc.trace[-1]
    print(f"\nreturned {v}; candidates now {orc.cand()}")
    print(f"  work: simple={rec.simple} stage1={rec.stage1} stage2={rec.stage2} augmentations={rec.augmentations}")
    for u in orc.part.left():
        if not orc.cand_flag[u]:
            paths = ["-".join(map(str, path)) for path in orc.pack(u)]
            print(f"  Pack({u}) = {paths}  potential={orc.potential(u)}")

if len(orc.emitted) == g.n:
    print(f"\nall vertices returned; ordering (first to last) = {orc.emitted[::-1]}")
else:
    print(f"\nstuck with {g.n - len(orc.emitted)} vertices in L: adm3 > {p}")
