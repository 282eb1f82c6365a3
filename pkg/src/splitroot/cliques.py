"""Maximal-clique enumeration with an early-abort cap, plus the two
clique-family numbers that gate square-root existence.

The enumerator extends cliques vertex by vertex: after processing vertex
b, the working level holds exactly the maximal cliques of the induced
prefix graph on {0..b}.  Each clique of the next prefix descends from a
unique parent (its greedy min-label completion after removing b), which
keeps the levels duplicate-free, and level sizes never decrease.  That
monotonicity is what makes the cap sound: the moment a level exceeds
cap+1 entries the final count must exceed cap, and the surviving
truncated level still finishes the run as genuine maximal cliques of the
whole graph.

Universal vertices are stripped first: they belong to every maximal
clique, so the family of g is the family of g minus its universal set,
with the universal set added back into each clique.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .graphs import Graph, bits


@dataclass(frozen=True)
class CliqueFamily:
    """The maximal cliques of a host graph, as vertex bitmasks.

    cliques are sorted by their ascending member lists; intersection is
    None when the enumeration was truncated (complete = False), in which
    case cliques holds cap+1 genuine maximal cliques.
    """

    cliques: tuple[int, ...]
    intersection: int | None
    complete: bool

    @property
    def q(self) -> int:
        return len(self.cliques)

    def vertex_lists(self) -> list[list[int]]:
        return [list(bits(c)) for c in self.cliques]


def _member_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def maximal_cliques(g: Graph, cap: int) -> CliqueFamily:
    if cap < 1:
        raise PreconditionError("clique cap must be at least 1")
    if g.n == 0:
        return CliqueFamily((), 0, True)
    full = (1 << g.n) - 1
    universal = g.universal_vertices()
    if universal == full:
        return CliqueFamily((full,), full, True)

    rest = sorted(bits(full & ~universal))
    sub, _ = g.induced(rest)
    adj = sub.adj
    width = cap + 1

    level = [1]
    truncated = False
    for b in range(1, sub.n):
        bitb = 1 << b
        nb = adj[b]
        prev_mask = bitb - 1
        cur_mask = (bitb << 1) - 1
        nxt = []
        for clique in level:
            if clique & ~nb == 0:
                nxt.append(clique | bitb)
                continue
            nxt.append(clique)
            seed = clique & nb
            cand = seed | bitb
            # cand must be maximal in the current prefix
            common = nb & cur_mask
            for v in bits(seed):
                common &= adj[v]
                if not common:
                    break
            if common:
                continue
            # and this clique must be the greedy completion of the seed
            # in the previous prefix, so cand is emitted exactly once
            grown = seed
            reach = prev_mask
            for v in bits(seed):
                reach &= adj[v]
                if not reach:
                    break
            while reach:
                low = reach & -reach
                grown |= low
                reach &= adj[low.bit_length() - 1]
            if grown == clique:
                nxt.append(cand)
        if len(nxt) > width:
            del nxt[width:]
            truncated = True
        level = nxt

    complete = not truncated and len(level) <= cap
    back = [1 << v for v in rest]
    lifted = []
    for clique in level:
        mask = universal
        for i in bits(clique):
            mask |= back[i]
        lifted.append(mask)
    cliques = tuple(sorted(lifted, key=_member_key))
    if not complete:
        return CliqueFamily(cliques, None, False)
    meet = full
    for mask in cliques:
        meet &= mask
    return CliqueFamily(cliques, meet, True)


@dataclass(frozen=True)
class GateResult:
    """Outcome of the clique-count test that every root decision starts with.

    holds means p >= q where q = |maximal cliques| and p = |their common
    intersection|; when the enumeration aborted at the vertex-count cap,
    q is reported as cap+1 (a lower bound) and p falls back to the
    universal-vertex count.
    """

    holds: bool
    q: int
    p: int
    family: CliqueFamily


def gate(g: Graph) -> GateResult:
    """Necessary condition for g to be the square of a split graph without
    induced 3-suns: at most |V| maximal cliques, meeting in at least as
    many common vertices as there are cliques."""
    if not g.is_connected():
        raise PreconditionError("gate needs a connected graph")
    cap = max(g.n, 1)
    fam = maximal_cliques(g, cap)
    if not fam.complete:
        return GateResult(False, cap + 1, g.universal_vertices().bit_count(), fam)
    q = len(fam.cliques)
    p = fam.intersection.bit_count() if q else 0
    return GateResult(p >= q, q, p, fam)
