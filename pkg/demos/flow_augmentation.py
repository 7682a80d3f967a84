"""A packing that is maximal but not maximum, and the augmenting path that fixes it.

Vertex 0 reaches the L-vertices 3 and 4 through R = {1, 2}. The path
0-1-3 blocks 4, yet rerouting it as 0-2-3 frees 1 for 0-1-4.
"""

from admissibility import Graph, Packing, Partition, augment_packing, build_full_network, find_augmenting_path
from admissibility.reference import exact_pp

g = Graph(5, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4)])
part = Partition(g, [0, 3, 4])
pk = Packing(0, [(0, 1, 3)])
print("packing before:", [list(path) for path in pk])

net = build_full_network(g, part, 0)
print("\nflow network:")
print(net.dump())

path = find_augmenting_path(net, pk.arcs())
print("\naugmenting path:", path)
pk = augment_packing(pk, path)
print("packing after:", [list(path) for path in pk])
print("largest possible:", exact_pp(g, part, 0, 3))
