"""Simple undirected graphs, their degree sequences and annihilation number.

Vertices are always the integers ``0 .. n-1``.  Graph values are immutable;
operations such as :func:`delete_vertex` return new graphs.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate, combinations
from typing import Iterable, Literal

from .errors import GraphFormatError

Edge = tuple[int, int]
GraphFormat = Literal["dimacs", "edge_list"]


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices ``0 .. n-1``.

    ``edges`` holds each edge once as ``(u, v)`` with ``u < v``, sorted.
    ``adjacency[v]`` is the ascending tuple of neighbours of ``v``.
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    _neighbor_sets: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            normalized.add((u, v) if u < v else (v, u))
        ordered = tuple(sorted(normalized))
        neighbors: list[list[int]] = [[] for _ in range(n)]
        for u, v in ordered:
            neighbors[u].append(v)
            neighbors[v].append(u)
        adjacency = tuple(tuple(sorted(nb)) for nb in neighbors)
        return cls(n, ordered, adjacency, tuple(frozenset(nb) for nb in adjacency))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adjacency]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._neighbor_sets[v]

    def neighborhood(self, vertices: Iterable[int]) -> set[int]:
        """Open neighbourhood N(X): every vertex adjacent to some vertex of X."""
        out: set[int] = set()
        for v in vertices:
            out.update(self._neighbor_sets[v])
        return out

    def degree_sum(self, vertices: Iterable[int]) -> int:
        return sum(len(self.adjacency[v]) for v in vertices)

    def digest(self) -> str:
        """SHA-256 of the normalized edge-list serialization."""
        return hashlib.sha256(serialize_graph(self).encode()).hexdigest()


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]
    # prefix_sums[i] = degrees[0] + ... + degrees[i-1]
    prefix_sums: tuple[int, ...]


@dataclass(frozen=True)
class AnnihilationSummary:
    n: int
    m: int
    a: int
    two_k: int
    degrees: tuple[int, ...]


# --------------------------------------------------------------------------
# parsing


def parse_graph(text: str | bytes, format: GraphFormat | str = "edge_list") -> Graph:
    """Parse a graph from DIMACS (``p edge``/``e``) or plain edge-list text.

    Duplicate edges are collapsed.  Self-loops, out-of-range vertices and
    graphs with zero vertices raise :class:`GraphFormatError`.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"input is not valid UTF-8: {exc}") from None
    fmt = format.replace("-", "_")
    if fmt in ("dimacs", "col"):
        n, edges = _parse_dimacs(text)
    elif fmt in ("edge_list", "edgelist"):
        n, edges = _parse_edge_list(text)
    else:
        raise ValueError(f"unknown graph format {format!r}")
    if n == 0:
        raise GraphFormatError("graph has no vertices")
    return Graph.from_edges(n, edges)


def _int_field(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {token!r}", lineno) from None


def _parse_dimacs(text: str) -> tuple[int, list[Edge]]:
    n: int | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        kind = parts[0]
        if kind == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError("problem line must be 'p edge <n> <m>'", lineno)
            n = _int_field(parts[2], lineno)
            _int_field(parts[3], lineno)
            if n < 0:
                raise GraphFormatError("negative vertex count", lineno)
        elif kind == "e":
            if n is None:
                raise GraphFormatError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise GraphFormatError("edge line must be 'e <u> <v>'", lineno)
            u, v = _int_field(parts[1], lineno), _int_field(parts[2], lineno)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphFormatError(f"vertex {x} outside 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge' problem line")
    return n, edges


def _parse_edge_list(text: str) -> tuple[int, list[Edge]]:
    declared: int | None = None
    edges: list[Edge] = []
    highest = -1
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if seen_content:
                raise GraphFormatError("'n <count>' must be the first line", lineno)
            if len(parts) != 2:
                raise GraphFormatError("header must be 'n <count>'", lineno)
            declared = _int_field(parts[1], lineno)
            if declared < 0:
                raise GraphFormatError("negative vertex count", lineno)
            seen_content = True
            continue
        seen_content = True
        if len(parts) != 2:
            raise GraphFormatError("expected 'u v'", lineno)
        u, v = _int_field(parts[0], lineno), _int_field(parts[1], lineno)
        if u < 0 or v < 0:
            raise GraphFormatError("negative vertex id", lineno)
        if declared is not None and (u >= declared or v >= declared):
            raise GraphFormatError(f"vertex outside 0..{declared - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        highest = max(highest, u, v)
        edges.append((u, v))
    n = declared if declared is not None else highest + 1
    return n, edges


def serialize_graph(g: Graph, format: GraphFormat | str = "edge_list") -> str:
    """Inverse of :func:`parse_graph` on normalized graphs."""
    fmt = format.replace("-", "_")
    if fmt in ("edge_list", "edgelist"):
        lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    elif fmt == "dimacs":
        lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges]
    else:
        raise ValueError(f"unknown graph format {format!r}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# degree sequence and annihilation number


def degree_sequence(g: Graph) -> DegreeSequence:
    degrees = tuple(sorted(g.degrees()))
    return DegreeSequence(degrees, tuple(accumulate(degrees, initial=0)))


def annihilation_number(g: Graph) -> AnnihilationSummary:
    """Largest ``a`` such that the ``a`` smallest degrees sum to at most ``m``."""
    if g.n == 0:
        raise ValueError("annihilation number is undefined for the null graph")
    seq = degree_sequence(g)
    m = g.m
    a = 0
    # prefix sums are non-decreasing, so the feasible a form an initial run
    while a < g.n and seq.prefix_sums[a + 1] <= m:
        a += 1
    return AnnihilationSummary(n=g.n, m=m, a=a, two_k=2 * a - g.n + 1, degrees=seq.degrees)


# --------------------------------------------------------------------------
# derived graphs and checks


def delete_vertex(g: Graph, r: int) -> tuple[Graph, dict[int, int]]:
    """Return ``G - r`` and the order-preserving map from old to new labels."""
    if not 0 <= r < g.n:
        raise ValueError(f"vertex {r} out of range for n={g.n}")
    relabel = {v: (v if v < r else v - 1) for v in range(g.n) if v != r}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u != r and v != r]
    return Graph.from_edges(g.n - 1, edges), relabel


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    order = sorted(set(keep))
    relabel = {v: i for i, v in enumerate(order)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel]
    return Graph.from_edges(len(order), edges), relabel


def verify_independent_set(g: Graph, s: Iterable[int]) -> bool:
    """True iff no edge of ``g`` has both endpoints in ``s``."""
    members = set(s)
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return all(not (u in members and v in members) for u, v in g.edges)


# --------------------------------------------------------------------------
# constructors


def generate_random_graph(n: int, edge_probability: float | Fraction, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) sample, reproducible from ``(n, p, seed)``.

    Pairs ``u < v`` are visited in lexicographic order and each is kept when
    a uniform draw falls below ``p``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    p = float(edge_probability)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {edge_probability} outside [0, 1]")
    rng = random.Random(seed)
    edges = [pair for pair in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
