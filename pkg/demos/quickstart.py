"""Compute 3-admissibility for a few familiar graphs and check each answer
against the slow exact reference."""

from admissibility import compute_value, decide, exact_adm, verify_ordering
from admissibility.generators import complete_graph, cycle_graph, gnm_random_graph, path_graph, petersen_graph

graphs = {
    "path on 5 vertices": path_graph(5),
    "6-cycle": cycle_graph(6),
    "K5": complete_graph(5),
    "Petersen": petersen_graph(),
    "random, n=40, m=80": gnm_random_graph(40, 80, seed=3),
}

for name, g in graphs.items():
    value, order = compute_value(g)
    ref = exact_adm(g, 3).value
    print(f"{name:22s} adm3={value}  reference={ref}  ordering checks out at {verify_ordering(g, order, 3)}")

# a single decision, with the counters the oracle keeps
g = petersen_graph()
for p in (2, 3):
    d = decide(g, p)
    print(f"\nPetersen, p={p}: {'YES' if d else 'NO'}")
    for key in ("queries", "simple", "stage1", "stage2", "augmentations"):
        print(f"  {key:14s} {d.stats.get(key, 0)}")
