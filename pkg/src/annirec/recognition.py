"""Polynomial-time recognition of graphs whose independence number equals
their annihilation number.

For a candidate vertex ``r`` take a maximum matching ``N`` of ``G - r``.  If
``|N| = n - 1 - a``, the exposed vertices ``I0`` plus one endpoint from each
matched pair must form an independent set of size ``a``; choosing the
endpoints is a 2-SAT problem.  The graph has ``alpha = a`` exactly when some
``r`` admits a satisfiable formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError
from .graph_core import (
    AnnihilationSummary,
    Graph,
    annihilation_number,
    delete_vertex,
    verify_independent_set,
)
from .matching import Matching, maximum_matching, maximum_matching_after_deletion
from .twosat import Assignment, Lit, TwoSatFormula, solve


@dataclass(frozen=True)
class RecognitionContext:
    """State for one candidate ``r``, in the labels of ``G - r``.

    ``pairs[i] = (u_i, v_i)`` with ``u_i < v_i``; variable ``i`` true means
    ``u_i`` joins the independent set, false means ``v_i`` does.
    """

    r: int
    n_matching: Matching
    pairs: tuple[tuple[int, int], ...]
    i0: frozenset[int]

    @property
    def variable_map(self) -> dict[tuple[int, int], int]:
        return {pair: i for i, pair in enumerate(self.pairs)}


@dataclass(frozen=True)
class Certificate:
    independent_set: tuple[int, ...]
    target_size: int
    r: int


def required_matching_size(summary: AnnihilationSummary) -> int:
    """Size ``n - 1 - a`` that a maximum matching of ``G - r`` must have."""
    if summary.m == 0:
        raise ValueError("required matching size is only defined for m > 0")
    return summary.n - 1 - summary.a


def make_context(g_minus_r: Graph, matching: Matching, r: int) -> RecognitionContext:
    pairs = matching.edges
    i0 = frozenset(v for v in range(g_minus_r.n) if not matching.is_saturated(v))
    return RecognitionContext(r=r, n_matching=matching, pairs=pairs, i0=i0)


def build_recognition_formula(g_minus_r: Graph, ctx: RecognitionContext) -> TwoSatFormula:
    # which pair each saturated vertex belongs to, and whether it is the u side
    slot: dict[int, tuple[int, bool]] = {}
    for i, (u, v) in enumerate(ctx.pairs):
        slot[u] = (i, True)
        slot[v] = (i, False)
    for x in ctx.i0:
        if x in slot:
            raise InvariantError(f"vertex {x} is both exposed and matched")
        if any(y in ctx.i0 for y in g_minus_r.neighbors(x)):
            raise InvariantError("exposed vertices are not independent; matching is not maximum")

    f = TwoSatFormula(len(ctx.pairs))
    for i, (u, v) in enumerate(ctx.pairs):
        # picking a vertex with a neighbour in I0 is forbidden
        if any(y in ctx.i0 for y in g_minus_r.neighbors(v)):
            f.add_clause(Lit(i, True))
        if any(y in ctx.i0 for y in g_minus_r.neighbors(u)):
            f.add_clause(Lit(i, False))
    for x, y in g_minus_r.edges:
        if x not in slot or y not in slot:
            continue
        (i, x_is_u), (j, y_is_u) = slot[x], slot[y]
        if i == j:
            continue
        # "x not picked or y not picked"; x picked iff literal (i, x_is_u)
        f.add_clause(Lit(i, not x_is_u), Lit(j, not y_is_u))
    return f


def extract_certificate(
    ctx: RecognitionContext,
    asg: Assignment,
    relabel: dict[int, int],
    g: Graph | None = None,
) -> Certificate:
    """Assemble ``I0`` plus the chosen pair endpoints, in original labels.

    ``relabel`` maps original labels to labels of ``G - r``.  When ``g`` is
    given the set is verified against it.
    """
    back = {new: old for old, new in relabel.items()}
    chosen = set(ctx.i0)
    for i, (u, v) in enumerate(ctx.pairs):
        chosen.add(u if asg[i] else v)
    lifted = tuple(sorted(back[x] for x in chosen))
    target = len(ctx.i0) + len(ctx.pairs)
    if len(lifted) != target:
        raise InvariantError("certificate size mismatch")
    if g is not None and not verify_independent_set(g, lifted):
        raise InvariantError("reconstructed set is not independent")
    return Certificate(independent_set=lifted, target_size=target, r=ctx.r)


def recognize_equal(g: Graph) -> Certificate | None:
    """Decide ``alpha(G) == a(G)``.

    Returns a verified independent set of size ``a(G)`` if equality holds,
    otherwise None.  Candidates ``r`` are tried in ascending order and the
    first success is reported.
    """
    summary = annihilation_number(g)
    if summary.m == 0:
        return Certificate(tuple(range(g.n)), summary.a, r=-1)
    need = required_matching_size(summary)
    full = maximum_matching(g)
    # mu(G - r) is mu(G) or mu(G) - 1
    if full.size < need or full.size - 1 > need:
        return None
    for r in range(g.n):
        reduced = maximum_matching_after_deletion(g, full, r)
        if reduced.size != need:
            continue
        g_minus_r, relabel = delete_vertex(g, r)
        moved = [-1] * g_minus_r.n
        for old, new in relabel.items():
            w = reduced.mate[old]
            moved[new] = -1 if w == -1 else relabel[w]
        ctx = make_context(g_minus_r, Matching(tuple(moved)), r)
        asg = solve(build_recognition_formula(g_minus_r, ctx))
        if asg is None:
            continue
        cert = extract_certificate(ctx, asg, relabel, g)
        if cert.target_size != summary.a:
            raise InvariantError("certificate size differs from the annihilation number")
        return cert
    return None


def recognize_equal_reference(g: Graph) -> Certificate | None:
    """Same decision, recomputing a fresh matching of every ``G - r``.

    Slower; kept as an independent path for cross-checking.
    """
    summary = annihilation_number(g)
    if summary.m == 0:
        return Certificate(tuple(range(g.n)), summary.a, r=-1)
    need = required_matching_size(summary)
    for r in range(g.n):
        g_minus_r, relabel = delete_vertex(g, r)
        matching = maximum_matching(g_minus_r)
        if matching.size != need:
            continue
        ctx = make_context(g_minus_r, matching, r)
        asg = solve(build_recognition_formula(g_minus_r, ctx))
        if asg is not None:
            return extract_certificate(ctx, asg, relabel, g)
    return None
