#!/usr/bin/env python3
"""Seeded random geometric prize-collecting instance in STP format."""
import argparse
import math
import random


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nodes", type=int, default=500)
    ap.add_argument("--radius", type=float, default=0.075)
    ap.add_argument("--terminal-share", type=float, default=0.2)
    ap.add_argument("--max-prize", type=int, default=10)
    ap.add_argument("--large-share", type=float, default=0.25)
    ap.add_argument("--large-prize", type=int, nargs=2, default=[100, 300])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    n = args.nodes
    pts = [(rng.random(), rng.random()) for _ in range(n)]

    def cost(a, b):
        return max(1, round(100 * math.dist(pts[a], pts[b])))

    edges = {}
    for a in range(n):
        for b in range(a + 1, n):
            if math.dist(pts[a], pts[b]) <= args.radius:
                edges[(a, b)] = cost(a, b)

    # Join components through their closest pairs until connected.
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    while len({find(v) for v in range(n)}) > 1:
        root0 = find(0)
        inside = [v for v in range(n) if find(v) == root0]
        outside = [v for v in range(n) if find(v) != root0]
        a, b = min(((a, b) for a in inside for b in outside), key=lambda p: math.dist(pts[p[0]], pts[p[1]]))
        edges[(min(a, b), max(a, b))] = cost(a, b)
        parent[find(a)] = find(b)

    prizes = {}
    for v in range(n):
        if rng.random() < args.terminal_share:
            if rng.random() < args.large_share:
                prizes[v] = rng.randint(*args.large_prize)
            else:
                prizes[v] = rng.randint(1, args.max_prize)

    with open(args.out, "w") as f:
        f.write("33D32945 STP File, STP Format Version 1.0\n\n")
        f.write("SECTION Comment\nName \"geo%d\"\nRemark \"make_geo.py seed %d radius %g\"\nEND\n\n"
                % (n, args.seed, args.radius))
        f.write("SECTION Graph\nNodes %d\nEdges %d\n" % (n, len(edges)))
        for (a, b), c in sorted(edges.items()):
            f.write("E %d %d %d\n" % (a + 1, b + 1, c))
        f.write("END\n\nSECTION Terminals\nTerminals %d\n" % len(prizes))
        for v in sorted(prizes):
            f.write("TP %d %d\n" % (v + 1, prizes[v]))
        f.write("END\n\nEOF\n")


if __name__ == "__main__":
    main()
