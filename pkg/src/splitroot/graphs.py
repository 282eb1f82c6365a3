"""Small undirected graphs over vertex set {0, ..., n-1}.

Adjacency is stored as one int bitmask per vertex, which keeps the
neighbourhood algebra (intersection, containment, popcount) in single
machine-word operations for the sizes this package targets.  Graphs are
immutable; every operation returns a fresh instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency table length differs from n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbours outside range")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted pairs, lexicographically ordered."""
        out = []
        for v in range(self.n):
            higher = self.adj[v] >> (v + 1) << (v + 1)
            for u in bits(higher):
                out.append((v, u))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def square(self) -> "Graph":
        """Graph on the same vertices joining pairs at distance one or two."""
        adj = [0] * self.n
        for v in range(self.n):
            row = self.adj[v]
            for u in bits(row):
                row |= self.adj[u]
            adj[v] = row & ~(1 << v)
        return Graph(self.n, tuple(adj))

    def join(self, other: "Graph") -> "Graph":
        """Disjoint union plus all edges between the two sides.

        Vertices of other are shifted by self.n.
        """
        n = self.n + other.n
        left_all = (1 << self.n) - 1
        right_all = ((1 << other.n) - 1) << self.n
        adj = [self.adj[v] | right_all for v in range(self.n)]
        adj += [(other.adj[v] << self.n) | left_all for v in range(other.n)]
        return Graph(n, tuple(adj))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on the given vertices.

        Returns the subgraph (relabelled to 0..k-1 in increasing original
        order) together with the old -> new label map.
        """
        keep = sorted(set(vertices))
        relabel = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for u in bits(self.adj[v]):
                if u in relabel:
                    row |= 1 << relabel[u]
            adj.append(row)
        return Graph(len(keep), tuple(adj)), relabel

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full ^ self.adj[v] ^ (1 << v) for v in range(self.n)))

    def universal_vertices(self) -> int:
        """Bitmask of vertices adjacent to every other vertex."""
        full = (1 << self.n) - 1
        out = 0
        for v in range(self.n):
            if self.adj[v] == full ^ (1 << v):
                out |= 1 << v
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= self.adj[v]
            frontier = grow & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if mask & ~(self.adj[v] | (1 << v)):
                return False
        return True

    def is_independent(self, mask: int) -> bool:
        for v in bits(mask):
            if mask & self.adj[v]:
                return False
        return True

    def relabelled(self, perm: dict[int, int]) -> "Graph":
        """Apply a vertex permutation old -> new."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.n, tuple(adj))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i + 1) for i in range(leaves)])


def is_subgraph_square(h: Graph, g: Graph) -> bool:
    """True when every h-square edge is a g edge (vertex sets must match)."""
    if h.n != g.n:
        return False
    sq = h.square()
    return all(sq.adj[v] & ~g.adj[v] == 0 for v in range(h.n))


def all_pairs(n: int) -> Iterator[tuple[int, int]]:
    return combinations(range(n), 2)
