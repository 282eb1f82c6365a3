"""Shared test utilities."""

import random

from splitroot import Graph


def gnp(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def connected_gnp(rng: random.Random, n: int, p: float) -> Graph:
    for _ in range(200):
        g = gnp(rng, n, p)
        if g.is_connected():
            return g
    raise AssertionError(f"no connected draw at n={n}, p={p}")


def random_relabel(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabelled({v: perm[v] for v in range(g.n)})
