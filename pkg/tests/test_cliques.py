import random
from itertools import combinations

import pytest

from bruteforce import bf_maximal_cliques
from helpers import connected_gnp, gnp
from splitroot import (
    Graph,
    PreconditionError,
    bits,
    gate,
    mask_of,
    maximal_cliques,
)
from splitroot.graphs import cycle_graph, path_graph, star_graph


def family_tuples(fam):
    return [tuple(c) for c in fam.vertex_lists()]


def test_cap_must_be_positive():
    with pytest.raises(PreconditionError):
        maximal_cliques(path_graph(2), 0)


def test_empty_graph():
    fam = maximal_cliques(Graph(0, ()), 1)
    assert fam.cliques == ()
    assert fam.complete and fam.intersection == 0


def test_complete_graph_single_clique():
    fam = maximal_cliques(Graph.complete(6), 6)
    assert family_tuples(fam) == [(0, 1, 2, 3, 4, 5)]
    assert fam.intersection == 0b111111


def test_c4_cap_semantics():
    c4 = cycle_graph(4)
    fam = maximal_cliques(c4, 3)
    assert not fam.complete
    assert len(fam.cliques) == 4
    assert fam.intersection is None
    full = maximal_cliques(c4, 4)
    assert full.complete
    assert family_tuples(full) == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_truncated_output_is_genuine():
    # under a tight cap the enumerator must still return cap+1 real
    # maximal cliques of the whole graph
    rng = random.Random(31)
    for _ in range(20):
        g = gnp(rng, 11, 0.55)
        truth = set(bf_maximal_cliques(g))
        if len(truth) <= 5:
            continue
        fam = maximal_cliques(g, 5)
        assert not fam.complete
        assert len(fam.cliques) == 6
        assert all(tuple(c) in truth for c in fam.vertex_lists())


def test_matches_bruteforce_exhaustive_small():
    for n in range(6):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[k] for k in bits(mask)]
            g = Graph.from_edges(n, edges)
            fam = maximal_cliques(g, 1 << max(n, 1))
            assert fam.complete
            assert family_tuples(fam) == bf_maximal_cliques(g)


def test_matches_bruteforce_random():
    rng = random.Random(32)
    for _ in range(60):
        n = rng.randint(1, 12)
        g = gnp(rng, n, rng.choice([0.2, 0.4, 0.6, 0.8]))
        fam = maximal_cliques(g, 2 ** n)
        assert fam.complete
        truth = bf_maximal_cliques(g)
        assert family_tuples(fam) == truth
        inter = set(range(n))
        for c in truth:
            inter &= set(c)
        assert fam.intersection == mask_of(inter)


def test_gate_examples():
    res = gate(Graph.complete(6))
    assert (res.holds, res.q, res.p) == (True, 1, 6)
    res = gate(star_graph(3))
    assert (res.holds, res.q, res.p) == (False, 3, 1)


def test_gate_line_graph_of_k4_joined_with_k4():
    non = {(0, 5), (1, 4), (2, 3)}
    oct_edges = [
        (u, v) for u, v in combinations(range(6), 2) if (u, v) not in non
    ]
    g = Graph.from_edges(6, oct_edges).join(Graph.complete(4))
    res = gate(g)
    assert (res.holds, res.q, res.p) == (False, 8, 4)


def test_gate_requires_connected():
    with pytest.raises(PreconditionError):
        gate(Graph(2, (0, 0)))


def test_gate_counts_match_bruteforce():
    rng = random.Random(33)
    for _ in range(50):
        g = connected_gnp(rng, rng.randint(1, 9), 0.35)
        res = gate(g)
        truth = bf_maximal_cliques(g)
        if res.family.complete:
            assert res.q == len(truth)
            inter = set(range(g.n))
            for c in truth:
                inter &= set(c)
            assert res.p == len(inter)
            assert res.holds == (res.p >= res.q)
        else:
            assert len(truth) > g.n
            assert res.q == g.n + 1
            assert not res.holds


def test_gate_intersection_is_universal_set():
    # a vertex lies in every maximal clique exactly when it is universal
    rng = random.Random(34)
    for _ in range(40):
        g = connected_gnp(rng, rng.randint(1, 8), 0.4)
        res = gate(g)
        if res.family.complete:
            assert res.p == g.universal_vertices().bit_count()


def test_split_square_clique_family_is_closed_neighborhoods():
    # the square of a split graph has at most n maximal cliques, each a
    # closed neighborhood of a clique-side vertex
    import sys
    sys.path.insert(0, "tests")
    from generators import random_member
    from splitroot import CLASS_IDS, split_partition

    rng = random.Random(35)
    for _ in range(40):
        cls = rng.choice(CLASS_IDS)
        h = random_member(cls, rng, rng.randint(1, 10))
        part = split_partition(h)
        g = h.square()
        fam = maximal_cliques(g, g.n)
        assert fam.complete
        assert len(fam.cliques) <= g.n
        hoods = {h.adj[v] | (1 << v) for v in bits(part.clique_side)}
        assert all(c in hoods for c in fam.cliques)
        assert family_tuples(fam) == bf_maximal_cliques(g)
