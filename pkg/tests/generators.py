"""Seeded generators of members of the eight root classes.

Each generator returns a connected split graph that belongs to its class
by construction; where an added wrinkle could spoil membership, the
graph is re-checked and regenerated, falling back to a family that is
always safe (threshold graphs are P4-free, and every catalog pattern
contains an induced P4).
"""

import random

from splitroot import (
    COMPARABILITY_SPLIT,
    Graph,
    INTERVAL_SPLIT,
    ODD_SUN_FREE_SPLIT,
    PERMUTATION_SPLIT,
    PROBE_THRESHOLD_SPLIT,
    STRONGLY_CHORDAL_SPLIT,
    SUN3FREE_SPLIT,
    SUN3_NET_FREE_SPLIT,
    catalog,
    has_induced,
    recognize,
    split_partition,
)


def _assemble(k: int, hoods: list[list[int]]) -> Graph:
    """Split graph: clique 0..k-1, one extra vertex per neighborhood."""
    n = k + len(hoods)
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for idx, hood in enumerate(hoods):
        edges.extend((c, k + idx) for c in hood)
    return Graph.from_edges(n, edges)


def threshold(rng: random.Random, n: int) -> Graph:
    """Nested-prefix neighborhoods; member of all eight classes."""
    if n == 1:
        return Graph(1, (0,))
    k = rng.randint(1, n - 1)
    hoods = [list(range(rng.randint(1, k))) for _ in range(n - k)]
    return _assemble(k, hoods)


def two_sided(rng: random.Random, n: int, suffix_prob: float = 0.5) -> Graph:
    """Prefix-or-suffix neighborhoods of the clique order.

    Realizable by intervals: clique vertex i as [-i, k+1-i], a prefix
    vertex of length t as a point just above k+1-t, a suffix vertex as a
    point just below t-k.  Hence interval, hence in every class whose
    patterns interval graphs avoid.
    """
    if n <= 2:
        return threshold(rng, n)
    k = rng.randint(2, n - 1)
    hoods = []
    for _ in range(n - k):
        t = rng.randint(1, k)
        if rng.random() < suffix_prob:
            hoods.append(list(range(k - t, k)))
        else:
            hoods.append(list(range(t)))
    return _assemble(k, hoods)


def co_two_sided(rng: random.Random, n: int) -> Graph:
    """Complement of a two-sided member; complementation swaps the 3-sun
    with the net and S4- with co-S4-, so these land in the
    comparability class.  Two length-1 hoods at the opposite ends keep
    the complement connected."""
    if n < 6:
        return threshold(rng, n)
    k = rng.randint(2, n - 2)
    hoods = [[0], [k - 1]]
    for _ in range(n - k - 2):
        t = rng.randint(1, k)
        if rng.random() < 0.5:
            hoods.append(list(range(k - t, k)))
        else:
            hoods.append(list(range(t)))
    return _assemble(k, hoods).complement()


def permutation_member(rng: random.Random, n: int) -> Graph:
    """Mostly-prefix two-sided draws re-checked against co-S4-."""
    if n < 7:
        return two_sided(rng, n)
    cos4 = catalog("COS4MINUS")
    for _ in range(8):
        g = two_sided(rng, n, suffix_prob=0.25)
        if has_induced(g, cos4) is None:
            return g
    return threshold(rng, n)


def laminar(rng: random.Random, n: int, k: int = None) -> Graph:
    """Neighborhoods from a laminar interval family over the clique.

    Any sun needs two hood members overlapping without nesting, so
    laminar split graphs are sun-free and therefore strongly chordal.
    """
    if n == 1:
        return Graph(1, (0,))
    if k is None:
        k = rng.randint(1, max(1, min(n - 1, 2 + n // 3)))
    pool: list[list[int]] = []

    def carve(lo: int, hi: int) -> None:
        pool.append(list(range(lo, hi)))
        if hi - lo <= 1:
            return
        if rng.random() < 0.7:
            mid = rng.randint(lo + 1, hi - 1)
            carve(lo, mid)
            carve(mid, hi)

    carve(0, k)
    hoods = [pool[rng.randrange(len(pool))] for _ in range(n - k)]
    return _assemble(k, hoods)


def _wrapped_hoods(rng: random.Random, k: int, quota: int) -> list[list[int]]:
    """Two-sided hoods plus a few planted 4-sun wraps over the clique."""
    hoods: list[list[int]] = []
    wraps = rng.randint(0, min(2, quota // 4)) if k >= 4 else 0
    for _ in range(wraps):
        a, b, c, d = sorted(rng.sample(range(k), 4))
        hoods.extend([[a, b], [b, c], [c, d], [a, d]])
        quota -= 4
    for _ in range(quota):
        t = rng.randint(1, k)
        if rng.random() < 0.5:
            hoods.append(list(range(k - t, k)))
        else:
            hoods.append(list(range(t)))
    return hoods


def sun3_free(rng: random.Random, n: int) -> Graph:
    """Two-sided base with planted 4-sun wraps, re-checked for 3-suns.
    The complete 4-sun itself is 3-sun-free; wraps interacting with the
    base occasionally are not, hence the retry."""
    if n < 8:
        return two_sided(rng, n)
    s3 = catalog("S3")
    for _ in range(8):
        k = rng.randint(4, n - 4)
        g = _assemble(k, _wrapped_hoods(rng, k, n - k))
        if has_induced(g, s3) is None:
            return g
    return two_sided(rng, n)


def sun3_net_free(rng: random.Random, n: int) -> Graph:
    roll = rng.random()
    if roll < 0.4 or n < 8:
        return two_sided(rng, n)
    if roll < 0.65 and n >= 6:
        return co_two_sided(rng, n)
    s3, net = catalog("S3"), catalog("NET")
    for _ in range(6):
        k = rng.randint(4, n - 4)
        g = _assemble(k, _wrapped_hoods(rng, k, n - k))
        if has_induced(g, s3) is None and has_induced(g, net) is None:
            return g
    return two_sided(rng, n)


def odd_sun_free(rng: random.Random, n: int) -> Graph:
    """Laminar base with planted (even) 4-sun wraps, re-checked through
    the recognizer."""
    if n < 8:
        return laminar(rng, n)
    for _ in range(8):
        k = rng.randint(4, n - 4)
        g = _assemble(k, _wrapped_hoods(rng, k, n - k))
        part = split_partition(g)
        ok, _ = recognize(g, part, ODD_SUN_FREE_SPLIT)
        if ok:
            return g
    return laminar(rng, n)


def probe_threshold(rng: random.Random, n: int) -> Graph:
    """Threshold graph with all edges inside a chosen non-probe set
    removed; definitionally probe threshold, and still split because the
    non-probe set becomes independent."""
    if n <= 2:
        return threshold(rng, n)
    k = rng.randint(2, n - 1)
    nonprobe = {c for c in range(1, k) if rng.random() < 0.35}
    edges = [
        (i, j)
        for i in range(k)
        for j in range(i + 1, k)
        if i not in nonprobe or j not in nonprobe
    ]
    for j in range(n - k):
        t = rng.randint(1, k)
        edges.extend((c, k + j) for c in range(t) if c not in nonprobe)
    return Graph.from_edges(n, edges)


_GENERATORS = {
    SUN3FREE_SPLIT: sun3_free,
    SUN3_NET_FREE_SPLIT: sun3_net_free,
    STRONGLY_CHORDAL_SPLIT: laminar,
    ODD_SUN_FREE_SPLIT: odd_sun_free,
    INTERVAL_SPLIT: two_sided,
    PERMUTATION_SPLIT: permutation_member,
    COMPARABILITY_SPLIT: co_two_sided,
    PROBE_THRESHOLD_SPLIT: probe_threshold,
}


def random_member(cls: str, rng: random.Random, n: int) -> Graph:
    return _GENERATORS[cls](rng, n)
