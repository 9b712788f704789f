"""Search small connected simple graphs for an edge whose deletion lowers some lambda_k(L).

For simple graphs the Butler-type bound only guarantees lambda_{k-1}(L(G)) <= lambda_k(L(G\\e));
a witness shows that the unshifted inequality lambda_k(L(G)) <= lambda_k(L(G\\e)) can fail.
The script prints every witness found, smallest graphs first, and rechecks each one with numpy.
"""

import argparse

import numpy as np

from hyperinterlace.document import serialize_hypergraph
from hyperinterlace.hypergraph import delete_edges
from hyperinterlace.operators import normalized_laplacian
from hyperinterlace.tightness import random_connected_simple_graphs, tightness_search


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-vertices", type=int, default=7)
    parser.add_argument("--budget", type=int, default=100_000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-witnesses", type=int, default=20)
    args = parser.parse_args()

    space = random_connected_simple_graphs(args.max_vertices, args.seed)
    witnesses = tightness_search(space, "butler_strictness", args.budget, max_witnesses=args.max_witnesses)
    witnesses.sort(key=lambda w: (w.hypergraph.n, w.hypergraph.m))
    for w in witnesses:
        G = w.hypergraph
        H = delete_edges(G, set(w.edges))
        gap = np.linalg.eigvalsh(normalized_laplacian(G))[w.k - 1] - np.linalg.eigvalsh(normalized_laplacian(H))[w.k - 1]
        print(f"n={G.n} m={G.m}  {w.describe()}  (numpy gap {gap:.3g})")
        print("  " + serialize_hypergraph(G, indent=None))
    print(f"{len(witnesses)} witnesses")


if __name__ == "__main__":
    main()
