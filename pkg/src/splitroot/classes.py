"""Split partitions and recognizers for the eight root classes.

Seven classes are characterized by finite forbidden induced subgraphs
(on split inputs) or by simple-vertex elimination; the odd-sun-free
class is decided through the bipartite clique-side/independent-side
incidence graph, whose induced cycle lengths must avoid 2 mod 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import PreconditionError
from .graphs import Graph, bits
from .patterns import catalog, find_induced_cycle_2mod4, has_induced

SUN3FREE_SPLIT = "3-sun-free-split"
SUN3_NET_FREE_SPLIT = "3-sun-net-free-split"
STRONGLY_CHORDAL_SPLIT = "strongly-chordal-split"
ODD_SUN_FREE_SPLIT = "odd-sun-free-split"
INTERVAL_SPLIT = "interval-split"
PERMUTATION_SPLIT = "permutation-split"
COMPARABILITY_SPLIT = "comparability-split"
PROBE_THRESHOLD_SPLIT = "probe-threshold-split"

CLASS_IDS = (
    SUN3FREE_SPLIT,
    SUN3_NET_FREE_SPLIT,
    STRONGLY_CHORDAL_SPLIT,
    ODD_SUN_FREE_SPLIT,
    INTERVAL_SPLIT,
    PERMUTATION_SPLIT,
    COMPARABILITY_SPLIT,
    PROBE_THRESHOLD_SPLIT,
)

_PATTERN_CLASSES = {
    SUN3FREE_SPLIT: ("S3",),
    SUN3_NET_FREE_SPLIT: ("S3", "NET"),
    INTERVAL_SPLIT: ("S3", "NET", "S4MINUS"),
    COMPARABILITY_SPLIT: ("S3", "NET", "COS4MINUS"),
    PERMUTATION_SPLIT: ("S3", "NET", "S4MINUS", "COS4MINUS"),
    PROBE_THRESHOLD_SPLIT: ("S3", "NET", "PT1", "PT2", "PT3", "PT4"),
}


@dataclass(frozen=True)
class SplitPartition:
    clique_side: int
    independent_side: int


def _validate_partition(g: Graph, part: SplitPartition) -> None:
    full = (1 << g.n) - 1
    c, i = part.clique_side, part.independent_side
    if c & i or (c | i) != full:
        raise PreconditionError("sides do not partition the vertex set")
    if not g.is_clique(c):
        raise PreconditionError("clique side is not a clique")
    if not g.is_independent(i):
        raise PreconditionError("independent side is not independent")


def split_partition(g: Graph) -> Optional[SplitPartition]:
    """Canonical split partition, or None when g is not split.

    The clique side is grown greedily along the (degree desc, label asc)
    order; on split inputs this yields a maximum clique, and when the
    remainder is not independent the partition (if one exists at all)
    is a single swap away: some leftover vertex adjacent to all of C but
    one takes that one's place.
    """
    n = g.n
    if n == 0:
        return SplitPartition(0, 0)
    full = (1 << n) - 1
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    cmask = 0
    for v in order:
        if cmask & ~g.adj[v] == 0:
            cmask |= 1 << v
    imask = full & ~cmask
    if g.is_independent(imask):
        return SplitPartition(cmask, imask)
    for x in bits(imask):
        outside = cmask & ~g.adj[x]
        if outside.bit_count() != 1:
            continue
        c2 = (cmask & ~outside) | (1 << x)
        i2 = full & ~c2
        if g.is_independent(i2):
            return SplitPartition(c2, i2)
    return None


def all_split_partitions(g: Graph) -> list[SplitPartition]:
    """Every valid split partition of g, canonical one first.

    Any valid clique side differs from the canonical one by at most one
    vertex in each direction (the symmetric difference on each side sits
    inside both a clique and an independent set), so single moves and
    single swaps exhaust the possibilities.
    """
    base = split_partition(g)
    if base is None:
        return []
    full = (1 << g.n) - 1
    c0 = base.clique_side
    candidates = [c0]
    for x in bits(full & ~c0):
        candidates.append(c0 | (1 << x))
    for c in bits(c0):
        candidates.append(c0 & ~(1 << c))
    for c in bits(c0):
        for x in bits(full & ~c0):
            candidates.append((c0 & ~(1 << c)) | (1 << x))
    out = []
    seen = set()
    for cm in candidates:
        if cm in seen:
            continue
        seen.add(cm)
        im = full & ~cm
        if g.is_clique(cm) and g.is_independent(im):
            out.append(SplitPartition(cm, im))
    return out


def lexbfs_order(g: Graph) -> list[int]:
    cells = [list(range(g.n))] if g.n else []
    order = []
    while cells:
        cell = cells[0]
        v = cell.pop(0)
        if not cell:
            cells.pop(0)
        order.append(v)
        nv = g.adj[v]
        refined = []
        for c in cells:
            hit = [u for u in c if nv >> u & 1]
            miss = [u for u in c if not nv >> u & 1]
            if hit:
                refined.append(hit)
            if miss:
                refined.append(miss)
        cells = refined
    return order


def is_chordal(g: Graph) -> bool:
    """Lex-BFS visit order reversed is a perfect elimination ordering
    exactly on chordal graphs; check it."""
    order = lexbfs_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    placed = 0
    for v in order:
        earlier = g.adj[v] & placed
        if earlier:
            p = max(bits(earlier), key=lambda u: pos[u])
            rest = earlier & ~(1 << p)
            if rest & ~g.adj[p]:
                return False
        placed |= 1 << v
    return True


def _is_simple(g: Graph, v: int, alive: int) -> bool:
    closed = (g.adj[v] | (1 << v)) & alive
    hoods = sorted(
        ((g.adj[u] | (1 << u)) & alive for u in bits(closed)),
        key=int.bit_count,
    )
    for a, b in zip(hoods, hoods[1:]):
        if a & ~b:
            return False
    return True


def _simple_elimination(g: Graph) -> int:
    """Delete simple vertices until none remain; 0 when the graph empties,
    else the stuck vertex set.

    Deleting vertices preserves simplicity of the others (set difference
    preserves inclusions), so each sweep may remove every currently
    simple vertex at once.
    """
    alive = (1 << g.n) - 1
    while alive:
        batch = 0
        for v in bits(alive):
            if _is_simple(g, v, alive):
                batch |= 1 << v
        if not batch:
            return alive
        alive &= ~batch
    return 0


def is_strongly_chordal(g: Graph) -> bool:
    """Chordal without any induced ell-sun; decided by repeated deletion
    of simple vertices (vertices whose closed neighbors have chained
    closed neighborhoods)."""
    return _simple_elimination(g) == 0


def _incidence_cycle(h: Graph, part: SplitPartition) -> Optional[list[int]]:
    c, i = part.clique_side, part.independent_side
    adj = tuple(
        h.adj[v] & (i if (c >> v & 1) else c) for v in range(h.n)
    )
    b = Graph(h.n, adj)
    return find_induced_cycle_2mod4(b, (c, i))


def recognize(
    h: Graph, part: SplitPartition, cls: str
) -> tuple[bool, Optional[dict]]:
    """Membership of the split graph h in one of the eight root classes.

    Returns (True, None) or (False, witness).  Pattern witnesses list
    the host vertices in pattern-vertex order.  The partition matters
    only for the odd-sun-free class; since odd-sun-freeness is a
    property of h alone, a failing incidence test retries the other
    valid partitions before answering False.
    """
    _validate_partition(h, part)
    if cls == STRONGLY_CHORDAL_SPLIT:
        stuck = _simple_elimination(h)
        if stuck:
            return False, {
                "kind": "no-simple-vertex",
                "stuck": sorted(bits(stuck)),
            }
        return True, None
    if cls == ODD_SUN_FREE_SPLIT:
        emb = has_induced(h, catalog("S3"))
        if emb is not None:
            return False, {"kind": "pattern", "pattern": "S3", "embedding": list(emb)}
        cyc = _incidence_cycle(h, part)
        if cyc is None:
            return True, None
        for alt in all_split_partitions(h):
            if alt.clique_side == part.clique_side:
                continue
            if _incidence_cycle(h, alt) is None:
                return True, None
        return False, {"kind": "cycle", "vertices": cyc}
    pats = _PATTERN_CLASSES.get(cls)
    if pats is None:
        raise PreconditionError(f"unknown class id {cls!r}")
    for pid in pats:
        emb = has_induced(h, catalog(pid))
        if emb is not None:
            return False, {"kind": "pattern", "pattern": pid, "embedding": list(emb)}
    return True, None
