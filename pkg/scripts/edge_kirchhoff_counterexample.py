"""Show how the chain lambda_k(K(G)) <= lambda_k(K(G\\e)) <= lambda_{k+1}(K(G)) behaves.

Deleting e subtracts the rank-one matrix c c^T from K, so every eigenvalue can
only decrease. The script prints, for small instances and for a random batch,
how often the chain fails and checks the downdate chain
lambda_{k-1}(K(G)) <= lambda_k(K(G\\e)) <= lambda_k(K(G)) alongside.
"""

import argparse
from pathlib import Path

from hyperinterlace.campaign import instances
from hyperinterlace.document import load
from hyperinterlace.eigen import spectrum
from hyperinterlace.hypergraph import delete_edges
from hyperinterlace.interlacing import verify_edge_deletions_kirchhoff
from hyperinterlace.operators import kirchhoff_laplacian

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def show(name, G, eid):
    before = spectrum(kirchhoff_laplacian(G)).values
    after = spectrum(kirchhoff_laplacian(delete_edges(G, {eid}))).values
    (report,) = verify_edge_deletions_kirchhoff(G, [eid])
    print(f"{name}, delete {eid}")
    print(f"  spec K(G)   = {[round(float(x), 10) + 0.0 for x in before]}")
    print(f"  spec K(G\\e) = {[round(float(x), 10) + 0.0 for x in after]}")
    for c in report.failures:
        print(f"  stated chain fails at k={c.k}: lambda_k(K(G)) = {c.lower_bound:.6g} > {c.value:.6g}")
    for comp in report.companions:
        print(f"  {comp.label}: {'holds' if comp.verdict else 'FAILS'}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=20240601)
    args = parser.parse_args()

    show("3-edge plus loop", load(FIXTURES / "hyperedge_loop.json"), "l")
    show("3-edge plus loop", load(FIXTURES / "hyperedge_loop.json"), "e1")
    show("triangle", load(FIXTURES / "triangle.json"), "e12")

    total = stated = companions = 0
    for _, G in instances(args.seed, args.count):
        for r in verify_edge_deletions_kirchhoff(G):
            total += 1
            stated += not r.verdict
            companions += not all(c.verdict for c in r.companions)
    print(f"\nrandom batch: {total} edge deletions, stated chain fails on {stated}, companions fail on {companions}")


if __name__ == "__main__":
    main()
