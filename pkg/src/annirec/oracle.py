"""Exhaustive ground truth for alpha, tau and mu on small graphs.

Test infrastructure only: everything here is exponential in ``n``.  Size
gates are checked before any search starts.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import OracleLimitError
from .graph_core import Graph


@dataclass(frozen=True)
class OracleLimits:
    max_vertices_alpha: int = 24
    max_vertices_mu: int = 14


DEFAULT_LIMITS = OracleLimits()


def _check(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise OracleLimitError(f"{what} oracle limited to n <= {limit}, got n = {g.n}")


def _bit_adjacency(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def maximum_independent_set(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> frozenset[int]:
    """Exact maximum independent set by branch and bound over bitmasks.

    Vertices of degree <= 1 in the remaining graph are taken greedily;
    otherwise a maximum-degree vertex is branched on (take it and drop its
    neighbours, or drop it).
    """
    _check(g, limits.max_vertices_alpha, "alpha")
    adj = _bit_adjacency(g)
    best = [0, 0]  # size, mask

    def search(cand: int, chosen: int, size: int) -> None:
        while cand:
            if size + cand.bit_count() <= best[0]:
                return
            pick = -1
            top, top_deg = -1, -1
            for v in _bits(cand):
                d = (adj[v] & cand).bit_count()
                if d <= 1:
                    pick = v
                    break
                if d > top_deg:
                    top, top_deg = v, d
            if pick < 0:
                bit = 1 << top
                search(cand & ~bit & ~adj[top], chosen | bit, size + 1)
                cand &= ~bit
                continue
            bit = 1 << pick
            chosen |= bit
            size += 1
            cand &= ~bit & ~adj[pick]
        if size > best[0]:
            best[0], best[1] = size, chosen

    search((1 << g.n) - 1, 0, 0)
    return frozenset(_bits(best[1]))


def brute_alpha(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    return len(maximum_independent_set(g, limits))


def brute_tau(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    return g.n - brute_alpha(g, limits)


def minimum_vertex_cover_enumerated(g: Graph, max_vertices: int = 12) -> int:
    """Smallest vertex cover found by trying subsets in order of size."""
    _check(g, max_vertices, "enumerated tau")
    for size in range(g.n + 1):
        for cover in combinations(range(g.n), size):
            chosen = set(cover)
            if all(u in chosen or v in chosen for u, v in g.edges):
                return size
    return g.n


def all_maximum_independent_sets(g: Graph, max_vertices: int = 12) -> list[frozenset[int]]:
    _check(g, max_vertices, "independent-set enumeration")
    adj = _bit_adjacency(g)
    found: list[int] = []
    best = 0
    for mask in range(1 << g.n):
        if any(adj[v] & mask for v in _bits(mask)):
            continue
        size = mask.bit_count()
        if size > best:
            best, found = size, [mask]
        elif size == best:
            found.append(mask)
    return [frozenset(_bits(m)) for m in found]


def brute_mu(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Matching number by exhaustive search with a size bound."""
    _check(g, limits.max_vertices_mu, "mu")
    adj = _bit_adjacency(g)
    best = [0]

    def search(alive: int, size: int) -> None:
        if size + alive.bit_count() // 2 <= best[0]:
            return
        # drop vertices with no live neighbour
        while alive:
            v = (alive & -alive).bit_length() - 1
            if adj[v] & alive:
                break
            alive &= ~(1 << v)
        if not alive:
            best[0] = max(best[0], size)
            return
        if size + alive.bit_count() // 2 <= best[0]:
            return
        rest = alive & ~(1 << v)
        for w in _bits(adj[v] & rest):
            search(rest & ~(1 << w), size + 1)
        search(rest, size)

    search((1 << g.n) - 1, 0)
    return best[0]
