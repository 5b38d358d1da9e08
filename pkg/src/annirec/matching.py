"""Maximum-cardinality matching in general graphs (Edmonds' blossom method).

The search contracts odd cycles implicitly by tracking a ``base`` vertex for
every vertex, as in the classic O(n^3) formulation.  Vertices and neighbours
are scanned in ascending order so the result depends only on the graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph_core import Edge, Graph

UNMATCHED = -1


@dataclass(frozen=True)
class Matching:
    """A matching stored as its mate array (``-1`` for exposed vertices)."""

    mate: tuple[int, ...]

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((u, w) for u, w in enumerate(self.mate) if w > u)

    @property
    def size(self) -> int:
        return sum(1 for u, w in enumerate(self.mate) if w > u)

    def __len__(self) -> int:
        return self.size

    def mate_of(self, v: int) -> int | None:
        w = self.mate[v]
        return None if w == UNMATCHED else w

    def is_saturated(self, v: int) -> bool:
        return self.mate[v] != UNMATCHED

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[Edge]) -> Matching:
        mate = [UNMATCHED] * n
        for u, v in edges:
            if mate[u] != UNMATCHED or mate[v] != UNMATCHED or u == v:
                raise ValueError(f"edge ({u}, {v}) shares an endpoint with another matching edge")
            mate[u], mate[v] = v, u
        return cls(tuple(mate))


def is_matching_of(g: Graph, m: Matching) -> bool:
    if len(m.mate) != g.n:
        return False
    for u, w in enumerate(m.mate):
        if w == UNMATCHED:
            continue
        if not (0 <= w < g.n) or m.mate[w] != u or not g.has_edge(u, w):
            return False
    return True


def _augment_from(
    adjacency: Sequence[Sequence[int]], mate: list[int], root: int, removed: int = -1
) -> bool:
    """Search for an augmenting path starting at exposed ``root``.

    On success the path is flipped in ``mate`` and True is returned.  The
    vertex ``removed`` (if any) is treated as absent from the graph.
    """
    n = len(adjacency)
    parent = [-1] * n
    base = list(range(n))
    outer = [False] * n
    outer[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if mate[a] == UNMATCHED:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: set[int]) -> None:
        while base[v] != b:
            in_blossom.add(base[v])
            in_blossom.add(base[mate[v]])
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adjacency[v]:
            if to == removed or base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != UNMATCHED and parent[mate[to]] != -1):
                # both ends outer: an odd cycle closes, contract it
                cur = lca(v, to)
                in_blossom: set[int] = set()
                mark_path(v, cur, to, in_blossom)
                mark_path(to, cur, v, in_blossom)
                for i in range(n):
                    if base[i] in in_blossom:
                        base[i] = cur
                        if not outer[i]:
                            outer[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == UNMATCHED:
                    w = to
                    while w != -1:
                        pv = parent[w]
                        nxt = mate[pv]
                        mate[w] = pv
                        mate[pv] = w
                        w = nxt
                    return True
                outer[mate[to]] = True
                queue.append(mate[to])
    return False


def maximum_matching(g: Graph) -> Matching:
    """Return a maximum-cardinality matching of ``g``.

    A greedy pass seeds the matching, then one augmenting search is run per
    exposed vertex.  A vertex with no augmenting path never gains one later,
    so a single pass suffices.
    """
    mate = [UNMATCHED] * g.n
    for u, v in g.edges:
        if mate[u] == UNMATCHED and mate[v] == UNMATCHED:
            mate[u], mate[v] = v, u
    for v in range(g.n):
        if mate[v] == UNMATCHED and g.adjacency[v]:
            _augment_from(g.adjacency, mate, v)
    return Matching(tuple(mate))


def maximum_matching_after_deletion(g: Graph, full: Matching, r: int) -> Matching:
    """Maximum matching of ``G - r`` (in the labels of ``g``) from one of ``G``.

    ``full`` must be a maximum matching of ``g``.  Removing ``r`` exposes at
    most its mate ``s``; any augmenting path of the reduced matching must end
    at ``s``, so one search from ``s`` restores maximality.  The returned
    mate array has ``mate[r] == -1`` and never uses ``r``.
    """
    mate = list(full.mate)
    s = mate[r]
    if s != UNMATCHED:
        mate[r] = mate[s] = UNMATCHED
        _augment_from(g.adjacency, mate, s, removed=r)
    return Matching(tuple(mate))


def matching_number(g: Graph) -> int:
    return maximum_matching(g).size


def unsaturated_vertices(g: Graph, m: Matching) -> frozenset[int]:
    """Vertices of ``g`` left exposed by ``m``."""
    if not is_matching_of(g, m):
        raise ValueError("not a matching of the given graph")
    return frozenset(v for v in range(g.n) if m.mate[v] == UNMATCHED)
