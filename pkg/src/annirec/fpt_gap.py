"""Decide ``alpha(G) >= a(G) - ell`` as vertex cover above the matching bound.

``alpha >= a - ell`` iff ``tau <= n - a + ell``.  Writing that budget as
``mu + p`` with ``p = n - a + ell - mu``, any yes-instance has
``0 <= p <= 3 ell + 1``; outside that window the answer is no without
searching.  Inside it an exact bounded search tree decides the cover.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError, ResourceExhausted
from .graph_core import Graph, annihilation_number
from .matching import matching_number


@dataclass(frozen=True)
class GapDecision:
    answer: bool
    ell: int
    a: int
    mu: int
    p: int
    cutoff_applied: bool


def vertex_cover_at_most(g: Graph, t: int, node_limit: int | None = None) -> bool:
    """True iff ``g`` has a vertex cover with at most ``t`` vertices.

    Bounded search tree with degree-0/1 and high-degree reductions and a
    maximal-matching lower bound.  ``node_limit`` caps the number of search
    nodes; exceeding it raises :class:`ResourceExhausted`.
    """
    if t < 0:
        raise ValueError("budget must be non-negative")
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    nodes = 0

    def live_vertices(alive: int):
        while alive:
            low = alive & -alive
            yield low.bit_length() - 1
            alive ^= low

    def search(alive: int, budget: int) -> bool:
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise ResourceExhausted(f"vertex cover search exceeded {node_limit} nodes")
        while True:
            changed = False
            top, top_deg = -1, 0
            edges2 = 0
            for v in live_vertices(alive):
                if not alive >> v & 1:
                    continue
                nb = adj[v] & alive
                d = nb.bit_count()
                if d == 0:
                    alive &= ~(1 << v)
                    changed = True
                elif d == 1:
                    # taking the lone neighbour is never worse
                    w = nb.bit_length() - 1
                    alive &= ~(1 << v) & ~(1 << w)
                    budget -= 1
                    changed = True
                elif d > budget:
                    # leaving v out would force all d > budget neighbours in
                    alive &= ~(1 << v)
                    budget -= 1
                    changed = True
                else:
                    edges2 += d
                    if d > top_deg:
                        top, top_deg = v, d
                if budget < 0:
                    return False
            if not changed:
                break
        if top_deg == 0:
            return True
        if budget == 0:
            return False
        if edges2 // 2 > budget * top_deg:
            return False
        if _greedy_matching_size(adj, alive) > budget:
            return False
        bit = 1 << top
        if search(alive & ~bit, budget - 1):
            return True
        nb = adj[top] & alive
        return search(alive & ~bit & ~nb, budget - top_deg)

    return search((1 << g.n) - 1, t)


def _greedy_matching_size(adj: list[int], alive: int) -> int:
    size = 0
    free = alive
    while free:
        low = free & -free
        v = low.bit_length() - 1
        free ^= low
        nb = adj[v] & free
        if nb:
            w = (nb & -nb).bit_length() - 1
            free &= ~(1 << w)
            size += 1
    return size


def decide_gap(g: Graph, ell: int, node_limit: int | None = None) -> GapDecision:
    if ell < 0:
        raise ValueError("ell must be non-negative")
    summary = annihilation_number(g)
    a, n = summary.a, summary.n
    mu = matching_number(g)
    p = n - a + ell - mu
    budget = n - a + ell
    if mu + p != budget:
        raise InvariantError("cover budget and mu + p disagree")
    if p < 0 or p > 3 * ell + 1:
        return GapDecision(False, ell, a, mu, p, cutoff_applied=True)
    answer = vertex_cover_at_most(g, budget, node_limit=node_limit)
    return GapDecision(answer, ell, a, mu, p, cutoff_applied=False)
