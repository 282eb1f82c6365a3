"""Brute-force ground truth at desk scale.

Everything here is exhaustive and guarded by small size caps: canonical
forms by minimum adjacency encoding, enumeration of small connected
graphs, exhaustive square-root search over edge subsets, and the miner
for minimal gate-passing graphs without a root in a class.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional

from .classes import CLASS_IDS, SplitPartition, recognize, split_partition
from .cliques import gate
from .errors import InternalVerificationError, PreconditionError, SizeGuardError
from .formats import format_graph6
from .graphs import Graph, bits
from .roots import find_root


@lru_cache(maxsize=None)
def canonical_form(g: Graph) -> bytes:
    """Minimum adjacency encoding over all vertex orders; equal exactly
    for isomorphic graphs.

    Vertex k's adjacency to positions 0..k-1 is read as a k-bit level
    (first position most significant); the level sequence is minimized
    lexicographically by branch and bound, with positions past the
    current prefix reset to a sentinel whenever the prefix improves.
    """
    n = g.n
    if n > 10:
        raise SizeGuardError(f"canonical form guarded to 10 vertices, got {n}")
    if n == 0:
        return b"\x00"
    adj = g.adj
    sentinel = 1 << n
    best = [sentinel] * n
    chosen: list[int] = []

    def dfs(used: int) -> None:
        depth = len(chosen)
        if depth == n:
            return
        ranked = []
        for v in range(n):
            if used >> v & 1:
                continue
            lev = 0
            row = adj[v]
            for u in chosen:
                lev = (lev << 1) | (row >> u & 1)
            ranked.append((lev, v))
        ranked.sort()
        for lev, v in ranked:
            if lev > best[depth]:
                break
            if lev < best[depth]:
                best[depth] = lev
                for k in range(depth + 1, n):
                    best[k] = sentinel
            chosen.append(v)
            dfs(used | (1 << v))
            chosen.pop()

    dfs(0)
    out = bytes([n])
    for lev in best:
        out += lev.to_bytes(2, "big")
    return out


def enumerate_connected(n: int, dedup: bool = False) -> Iterator[Graph]:
    """All labeled connected graphs on n vertices in ascending edge-mask
    order; with dedup, one representative per isomorphism class."""
    if n > 8:
        raise SizeGuardError(f"enumeration guarded to 8 vertices, got {n}")
    if n == 0:
        yield Graph(0, ())
        return
    pairs = list(combinations(range(n), 2))
    seen: set[bytes] = set()
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        rest = mask
        while rest:
            low = rest & -rest
            u, v = pairs[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            rest ^= low
        g = Graph(n, tuple(adj))
        if not g.is_connected():
            continue
        if dedup:
            key = canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
        yield g


def _iter_split_roots(g: Graph) -> Iterator[tuple[Graph, SplitPartition]]:
    """Connected split graphs h on V(g) with square(h) = g, in ascending
    lexicographic order of their sorted edge-index sets.

    Roots only ever use g's own edges (an edge of h is an edge of its
    square), and the square grows monotonically with h, so any partial
    edge set whose square leaves g is pruned with its whole subtree.
    """
    n = g.n
    edges = g.edges()
    m = len(edges)
    adj = [0] * n

    def square_equals_g() -> bool:
        for v in range(n):
            row = adj[v]
            for u in bits(row):
                row |= adj[u]
            if row & ~(1 << v) != g.adj[v]:
                return False
        return True

    def connected() -> bool:
        if n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= adj[v]
            frontier = grow & ~seen
            seen |= frontier
        return seen == (1 << n) - 1

    def walk(start: int) -> Iterator[tuple[Graph, SplitPartition]]:
        if square_equals_g() and connected():
            h = Graph(n, tuple(adj))
            part = split_partition(h)
            if part is not None:
                yield h, part
        for k in range(start, m):
            u, v = edges[k]
            if adj[u] & ~g.adj[v] or adj[v] & ~g.adj[u]:
                continue
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            yield from walk(k + 1)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)

    yield from walk(0)


def split_square_roots(g: Graph) -> list[tuple[Graph, SplitPartition]]:
    """Materialized list of every connected split square root of g."""
    if g.n > 7:
        raise SizeGuardError(f"exhaustive root search guarded to 7 vertices, got {g.n}")
    return list(_iter_split_roots(g))


def oracle_find_root(g: Graph, cls: str) -> Optional[Graph]:
    """First (in lexicographic edge-set order) connected split square
    root of g lying in the class, or None.  Exhaustive; n <= 7."""
    if cls not in CLASS_IDS:
        raise PreconditionError(f"unknown class id {cls!r}")
    if g.n > 7:
        raise SizeGuardError(f"exhaustive root search guarded to 7 vertices, got {g.n}")
    for h, part in _iter_split_roots(g):
        ok, _ = recognize(h, part, cls)
        if ok:
            return h
    return None


@dataclass(frozen=True)
class ObstructionReport:
    class_id: str
    max_n: int
    obstructions: tuple[Graph, ...]

    def to_json_dict(self) -> dict:
        return {
            "class": self.class_id,
            "max_n": self.max_n,
            "obstructions": [
                {
                    "n": g.n,
                    "edges": [[u, v] for u, v in g.edges()],
                    "graph6": format_graph6(g),
                }
                for g in self.obstructions
            ],
        }


def _proper_connected_gated(g: Graph) -> Iterator[Graph]:
    full = (1 << g.n) - 1
    for smask in range(1, full):
        sub, _ = g.induced(bits(smask))
        if not sub.is_connected():
            continue
        if not gate(sub).holds:
            continue
        yield sub


def is_obstruction(g: Graph, cls: str) -> bool:
    """Gate holds, no root in the class, and every proper induced
    connected subgraph passing the gate does have one."""
    if not gate(g).holds:
        return False
    if find_root(g, cls).decision:
        return False
    for sub in _proper_connected_gated(g):
        if not find_root(sub, cls).decision:
            return False
    return True


def _audit_obstruction(g: Graph, cls: str) -> None:
    # independent confirmation by exhaustive search; a mismatch is a bug
    if oracle_find_root(g, cls) is not None:
        raise InternalVerificationError(
            f"miner emitted {g!r} but exhaustive search found a root"
        )
    for sub in _proper_connected_gated(g):
        if oracle_find_root(sub, cls) is None:
            raise InternalVerificationError(
                f"miner confirmed {g!r} minimal but a subgraph has no root"
            )


def _candidate_worker(args: tuple[Graph, str]) -> bool:
    return is_obstruction(*args)


def mine_obstructions(cls: str, max_n: int, jobs: int = 1) -> ObstructionReport:
    """Minimal connected gate-passing graphs without a root in the class,
    up to isomorphism, on at most max_n vertices.

    Candidates are screened with the pipeline decision and each emitted
    graph is re-confirmed with the exhaustive oracle; any disagreement
    raises instead of emitting."""
    if cls not in CLASS_IDS:
        raise PreconditionError(f"unknown class id {cls!r}")
    if max_n > 7:
        raise SizeGuardError(f"miner guarded to 7 vertices, got {max_n}")
    found = []
    for n in range(1, max_n + 1):
        graphs = list(enumerate_connected(n, dedup=True))
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                flags = list(pool.map(
                    _candidate_worker,
                    [(g, cls) for g in graphs],
                    chunksize=32,
                ))
        else:
            flags = [is_obstruction(g, cls) for g in graphs]
        for g, flag in zip(graphs, flags):
            if not flag:
                continue
            _audit_obstruction(g, cls)
            found.append(g)
    return ObstructionReport(cls, max_n, tuple(found))
