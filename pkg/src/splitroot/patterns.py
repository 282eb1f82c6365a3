"""Forbidden-pattern catalog and induced-subgraph search.

The catalog covers the handful of small graphs whose absence
characterizes the eight root classes: suns and their relatives (net,
S4 minus a degree-2 vertex, and complements), the four hereditary
clique-Helly obstructions (a 3-sun with 0..3 extra edges among its
degree-2 vertices), and the four extra obstructions for probe threshold
split graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import PreconditionError, SizeGuardError
from .graphs import Graph, bits, cycle_graph, mask_of


@dataclass(frozen=True)
class Pattern:
    id: str
    graph: Graph


def sun(ell: int) -> Graph:
    """The ell-sun: clique v_0..v_{ell-1} plus independent u_0..u_{ell-1}
    where u_i sees exactly v_i and v_{i+1} (indices mod ell)."""
    if ell < 3:
        raise PreconditionError("suns need at least 3 clique vertices")
    edges = [(i, j) for i in range(ell) for j in range(i + 1, ell)]
    for i in range(ell):
        edges.append((ell + i, i))
        edges.append((ell + i, (i + 1) % ell))
    return Graph.from_edges(2 * ell, edges)


def _sun3_plus(extra: int) -> Graph:
    # extra = 0..3 edges among the degree-2 vertices 3,4,5
    base = sun(3)
    added = [(3, 4), (4, 5), (3, 5)][:extra]
    return Graph.from_edges(6, base.edges() + added)


_PT_EDGES = {
    "PT1": [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
            (3, 5), (4, 5)],
    "PT2": [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (2, 5),
            (3, 6)],
    "PT3": [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4),
            (1, 5), (2, 5), (3, 5), (5, 6)],
    "PT4": [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 7), (1, 2), (2, 3),
            (3, 4), (1, 5), (2, 5), (3, 5), (4, 5), (5, 6)],
}
_PT_SIZES = {"PT1": (6, 10), "PT2": (7, 9), "PT3": (7, 12), "PT4": (8, 14)}


def catalog(pid: str, size: Optional[int] = None) -> Pattern:
    """Fixed pattern by id: S3, NET, S4MINUS, COS4MINUS, G1..G4, PT1..PT4,
    SUN (with size = ell) or C (with size = cycle length)."""
    if pid == "SUN":
        if size is None or size < 3:
            raise PreconditionError("SUN needs size >= 3")
        return Pattern(f"SUN({size})", sun(size))
    if pid == "C":
        if size is None or size < 3:
            raise PreconditionError("C needs size >= 3")
        return Pattern(f"C({size})", cycle_graph(size))
    if size is not None:
        raise PreconditionError(f"pattern {pid} takes no size")
    if pid == "S3":
        return Pattern("S3", sun(3))
    if pid == "NET":
        return Pattern("NET", sun(3).complement())
    if pid == "S4MINUS":
        g, _ = sun(4).induced(range(7))
        return Pattern("S4MINUS", g)
    if pid == "COS4MINUS":
        g, _ = sun(4).induced(range(7))
        return Pattern("COS4MINUS", g.complement())
    if pid in ("G1", "G2", "G3", "G4"):
        return Pattern(pid, _sun3_plus(int(pid[1]) - 1))
    if pid in _PT_EDGES:
        n, m = _PT_SIZES[pid]
        g = Graph.from_edges(n, _PT_EDGES[pid])
        assert g.m == m
        return Pattern(pid, g)
    raise PreconditionError(f"unknown pattern id {pid!r}")


def has_induced(g: Graph, p: Pattern) -> Optional[tuple[int, ...]]:
    """First embedding of the pattern as an induced subgraph, or None.

    Returns phi with phi[i] = host vertex for pattern vertex i; phi
    preserves edges and non-edges.  Backtracking with forward checking:
    every unplaced pattern vertex keeps a candidate-host domain, each
    placement narrows all of them, and an emptied domain cuts the branch.
    Deterministic: the smallest domain (lowest index on ties) is filled
    next and host candidates ascend, so the embedding replays exactly.
    """
    pg = p.graph
    k = pg.n
    if k == 0:
        return ()
    if k > g.n:
        return None
    # initial domains: host candidates must have enough degree
    doms = []
    for v in range(k):
        need = pg.degree(v)
        dom = mask_of(u for u in range(g.n) if g.degree(u) >= need)
        if not dom:
            return None
        doms.append(dom)

    phi = [-1] * k
    gadj = g.adj
    padj = pg.adj

    def place(doms: list[int], remaining: tuple[int, ...]) -> bool:
        if not remaining:
            return True
        v = min(remaining, key=lambda x: doms[x].bit_count())
        rest = tuple(x for x in remaining if x != v)
        row = padj[v]
        for u in bits(doms[v]):
            gu = gadj[u]
            not_gu = ~gu & ~(1 << u)
            nd = doms.copy()
            for w in rest:
                nw = nd[w] & (gu if row >> w & 1 else not_gu)
                if not nw:
                    break
                nd[w] = nw
            else:
                phi[v] = u
                if place(nd, rest):
                    return True
        phi[v] = -1
        return False

    if place(doms, tuple(range(k))):
        return tuple(phi)
    return None


def find_induced_cycle_2mod4(
    b: Graph,
    sides: tuple[int, int],
    force: bool = False,
) -> Optional[list[int]]:
    """Chordless cycle of length 6, 10, 14, ... in a bipartite graph.

    sides are the two color-class bitmasks; they must partition the
    vertices with no edge inside either side.  The search enumerates
    chordless paths from each least-vertex root, which is exponential in
    the worst case, so hosts above 64 vertices are refused unless force
    is set.
    """
    left, right = sides
    full = (1 << b.n) - 1
    if left & right or (left | right) != full:
        raise PreconditionError("sides do not bipartition the vertex set")
    for v in range(b.n):
        side = left if (left >> v & 1) else right
        if b.adj[v] & side:
            raise PreconditionError(f"edge inside one side at vertex {v}")
    if b.n > 64 and not force:
        raise SizeGuardError(
            f"induced-cycle search refused on {b.n} > 64 vertices (use force)"
        )

    adj = b.adj
    for s in range(b.n):
        above = full >> (s + 1) << (s + 1)
        ns = adj[s]
        for a in bits(ns & above):
            found = _chordless_cycle_from(adj, s, a, above, ns)
            if found is not None:
                return found
    return None


def _chordless_cycle_from(
    adj: tuple[int, ...],
    s: int,
    a: int,
    above: int,
    ns: int,
) -> Optional[list[int]]:
    """Grow chordless paths s, a, ... with all internal vertices above s.

    Extensions may touch only the current endpoint (vertices adjacent to
    an interior vertex are blocked) and never a neighbor of s; a
    neighbor of s instead closes a cycle, reported when its length is
    2 mod 4.  Each cycle arises for exactly one direction via the
    path[1] < closer rule.
    """
    path = [s, a]

    def extend(end: int, blocked: int, pathmask: int) -> bool:
        cand = adj[end] & above & ~blocked & ~pathmask
        for x in bits(cand):
            if ns >> x & 1:
                if (len(path) + 1) % 4 == 2 and path[1] < x:
                    path.append(x)
                    return True
                continue
            path.append(x)
            if extend(x, blocked | adj[end], pathmask | (1 << x)):
                return True
            path.pop()
        return False

    if extend(a, 0, (1 << s) | (1 << a)):
        return path
    return None
