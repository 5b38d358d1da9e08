"""2-SAT via strongly connected components of the implication graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple


class Lit(NamedTuple):
    """Literal ``x_var`` (``positive=True``) or its negation."""

    var: int
    positive: bool = True

    def __invert__(self) -> Lit:
        return Lit(self.var, not self.positive)

    def __str__(self) -> str:
        return f"x{self.var}" if self.positive else f"~x{self.var}"


def _node(lit: Lit) -> int:
    return 2 * lit.var + (0 if lit.positive else 1)


@dataclass
class TwoSatFormula:
    """Conjunction of clauses with at most two literals each.

    A unit clause ``x`` is stored as ``(x, x)``.  Clause order is kept as
    inserted.
    """

    variable_count: int
    clauses: list[tuple[Lit, Lit]] = field(default_factory=list)

    def add_clause(self, a: Lit, b: Lit | None = None) -> TwoSatFormula:
        if b is None:
            b = a
        for lit in (a, b):
            if not 0 <= lit.var < self.variable_count:
                raise ValueError(
                    f"variable {lit.var} out of range 0..{self.variable_count - 1}"
                )
        self.clauses.append((a, b))
        return self

    def __len__(self) -> int:
        return len(self.clauses)

    def evaluate(self, values: list[bool] | tuple[bool, ...]) -> bool:
        return all(
            values[a.var] == a.positive or values[b.var] == b.positive
            for a, b in self.clauses
        )

    def to_dimacs_cnf(self) -> str:
        lines = [f"p cnf {self.variable_count} {len(self.clauses)}"]
        for a, b in self.clauses:
            lits = [a] if a == b else [a, b]
            lines.append(
                " ".join(str(l.var + 1 if l.positive else -(l.var + 1)) for l in lits)
                + " 0"
            )
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Assignment:
    values: tuple[bool, ...]

    def __getitem__(self, var: int) -> bool:
        return self.values[var]

    def __len__(self) -> int:
        return len(self.values)


def implication_graph(f: TwoSatFormula) -> list[list[int]]:
    """Arcs ``~a -> b`` and ``~b -> a`` per clause, on nodes ``2v`` / ``2v+1``."""
    succ: list[list[int]] = [[] for _ in range(2 * f.variable_count)]
    for a, b in f.clauses:
        succ[_node(~a)].append(_node(b))
        if a != b:
            succ[_node(~b)].append(_node(a))
    return succ


def strongly_connected_components(succ: list[list[int]]) -> list[int]:
    """Iterative Tarjan.  Returns the component id of each node.

    Components are numbered in the order Tarjan completes them, which is a
    reverse topological order of the condensation.
    """
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for start in range(n):
        if index[start] != -1:
            continue
        work = [(start, 0)]
        index[start] = low[start] = counter
        counter += 1
        stack.append(start)
        on_stack[start] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def solve(f: TwoSatFormula) -> Assignment | None:
    """Return a satisfying assignment, or None if ``f`` is unsatisfiable.

    ``x`` is set true iff its positive literal's component comes later in
    topological order than the negative one (smaller Tarjan id).
    """
    comp = strongly_connected_components(implication_graph(f))
    values = []
    for v in range(f.variable_count):
        pos, neg = comp[2 * v], comp[2 * v + 1]
        if pos == neg:
            return None
        values.append(pos < neg)
    return Assignment(tuple(values))
