"""Write a small corpus of edge lists and run the batch command over it.

Usage: python3 demos/corpus_batch.py [workdir]
"""

import csv
import sys
import tempfile
from pathlib import Path

from admissibility import write_edge_list
from admissibility.cli import main
from admissibility.generators import gnm_random_graph, petersen_graph

work = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="adm3-"))
src = work / "graphs"
src.mkdir(parents=True, exist_ok=True)

with open(src / "petersen.txt", "w") as fh:
    write_edge_list(petersen_graph(), fh)
for n in (200, 1000, 5000):
    with open(src / f"gnm_{n}.txt", "w") as fh:
        write_edge_list(gnm_random_graph(n, 3 * n, seed=n), fh)

out = work / "results.csv"
main(["batch", str(src), str(out), "--overwrite", "--counters", "--timeout", "60"])

print(f"results in {out}\n")
for row in csv.DictReader(open(out)):
    print(
        f"{row['network']:16s} n={row['n']:>5s} m={row['m']:>6s} "
        f"degeneracy={row['degeneracy']:>2s} adm3={row['adm3']:>2s} {row['time_ms']:>9s} ms  {row['status']}"
    )
