"""Acceptance sweep: every decision procedure against exhaustive oracles.

One summary line per criterion is printed in the pytest terminal summary.
"""

import json
import random
import time
from dataclasses import dataclass
from itertools import combinations

import pytest

from annirec.cli import main
from annirec.fpt_gap import decide_gap
from annirec.graph_core import (
    Graph,
    annihilation_number,
    generate_random_graph,
    serialize_graph,
    verify_independent_set,
)
from annirec.matching import is_matching_of, maximum_matching, unsaturated_vertices
from annirec.oracle import all_maximum_independent_sets, brute_alpha, brute_mu
from annirec.recognition import recognize_equal
from annirec.twosat import Lit, TwoSatFormula, solve

from .conftest import ACCEPTANCE_LINES
from .corpus import connected_graphs, erdos_renyi_corpus

ELLS = (0, 1, 2, 3)
SWEEP_BUDGET_S = 300.0


def report(number: int, label: str, failures: int, detail: str) -> None:
    status = "PASS" if failures == 0 else "FAIL"
    ACCEPTANCE_LINES.append(f"{status} [{number}] {label}: {detail}")


@dataclass
class Record:
    g: Graph
    alpha: int
    a: int
    two_k: int
    certificate: tuple[int, ...] | None
    gaps: dict
    mu: int
    mu_oracle: int
    exposed_independent: bool
    matching_valid: bool


def examine(g: Graph) -> Record:
    s = annihilation_number(g)
    cert = recognize_equal(g)
    m = maximum_matching(g)
    return Record(
        g=g,
        alpha=brute_alpha(g),
        a=s.a,
        two_k=s.two_k,
        certificate=None if cert is None else cert.independent_set,
        gaps={ell: decide_gap(g, ell) for ell in ELLS},
        mu=m.size,
        mu_oracle=brute_mu(g),
        exposed_independent=verify_independent_set(g, unsaturated_vertices(g, m)),
        matching_valid=is_matching_of(g, m),
    )


@pytest.fixture(scope="module")
def sweep():
    start = time.perf_counter()
    graphs = connected_graphs(8) + erdos_renyi_corpus()
    records = [examine(g) for g in graphs]
    return records, time.perf_counter() - start


def test_corpus_shape(sweep):
    records, _ = sweep
    exhaustive = [r for r in records[: len(connected_graphs(8))]]
    assert sum(1 for r in exhaustive if r.g.n == 8) == 11117
    assert len(records) - len(exhaustive) >= 10_000


def test_recognition_matches_oracle(sweep):
    records, elapsed = sweep
    bad = [r for r in records if (r.certificate is not None) != (r.alpha == r.a)]
    yes = sum(1 for r in records if r.certificate is not None)
    report(
        1,
        "alpha == a recognition vs oracle",
        len(bad) + (elapsed > SWEEP_BUDGET_S),
        f"{len(bad)} disagreements over {len(records)} graphs ({yes} yes), sweep {elapsed:.1f}s "
        f"(budget {SWEEP_BUDGET_S:.0f}s)",
    )
    assert not bad
    assert elapsed <= SWEEP_BUDGET_S


def test_certificates_are_sound(sweep):
    records, _ = sweep
    certified = [r for r in records if r.certificate is not None]
    bad = [
        r
        for r in certified
        if len(set(r.certificate)) != r.a
        or len(r.certificate) != r.a
        # edge scan, independent of verify_independent_set
        or any(u in r.certificate and v in r.certificate for u, v in r.g.edges)
    ]
    report(2, "certificate soundness", len(bad), f"{len(bad)} failures over {len(certified)} certificates")
    assert not bad


def test_gap_matches_oracle(sweep):
    records, _ = sweep
    bad = [
        (r, ell)
        for r in records
        for ell in ELLS
        if r.gaps[ell].answer != (r.alpha >= r.a - ell)
    ]
    inconsistent = [r for r in records if r.gaps[0].answer != (r.certificate is not None)]
    report(
        3,
        "alpha >= a - ell decision vs oracle, ell in 0..3",
        len(bad) + len(inconsistent),
        f"{len(bad)} disagreements over {len(records) * len(ELLS)} (graph, ell) pairs; "
        f"{len(inconsistent)} mismatches between ell=0 and recognition",
    )
    assert not bad and not inconsistent


def test_cutoff_is_valid(sweep):
    records, _ = sweep
    fired = [(r, ell) for r in records for ell in ELLS if r.gaps[ell].p > 3 * ell + 1]
    bad = [(r, ell) for r, ell in fired if not r.alpha < r.a - ell]
    # the p < 0 short-circuit is checked alongside; it is reached in practice
    below = [(r, ell) for r in records for ell in ELLS if r.gaps[ell].p < 0]
    bad_below = [(r, ell) for r, ell in below if not r.alpha < r.a - ell]
    report(
        4,
        "p > 3*ell + 1 cutoff validity",
        len(bad) + len(bad_below),
        f"{len(bad)} violations over {len(fired)} upper cutoffs; "
        f"{len(bad_below)} violations over {len(below)} p < 0 short-circuits",
    )
    assert not bad and not bad_below


def test_matching_is_exact(sweep):
    records, _ = sweep
    small = [r for r in records if r.g.n <= 14]
    bad = [r for r in small if r.mu != r.mu_oracle or not r.matching_valid or not r.exposed_independent]
    report(5, "maximum matching exactness", len(bad), f"{len(bad)} failures over {len(small)} graphs")
    assert not bad


def _variable_columns(v: int) -> tuple[list[int], int]:
    """Truth table as bitsets: bit j of column i is bit i of assignment j."""
    size = 1 << v
    cols = []
    for i in range(v):
        half = 1 << i
        pattern = ((1 << half) - 1) << half
        length = 2 * half
        while length < size:
            pattern |= pattern << length
            length *= 2
        cols.append(pattern)
    return cols, (1 << size) - 1


def truth_table_satisfiable(f: TwoSatFormula) -> bool:
    cols, full = _variable_columns(f.variable_count)
    sat = full
    for a, b in f.clauses:
        ca = cols[a.var] if a.positive else full ^ cols[a.var]
        cb = cols[b.var] if b.positive else full ^ cols[b.var]
        sat &= ca | cb
        if not sat:
            return False
    return bool(sat)


def test_twosat_engine():
    rng = random.Random(20261014)
    disagreements = unsound = sat_count = 0
    for _ in range(1000):
        v = rng.randint(1, 20)
        f = TwoSatFormula(v)
        for _ in range(rng.randint(0, 60)):
            a = Lit(rng.randrange(v), rng.random() < 0.5)
            b = a if rng.random() < 0.1 else Lit(rng.randrange(v), rng.random() < 0.5)
            f.add_clause(a, b)
        asg = solve(f)
        if (asg is not None) != truth_table_satisfiable(f):
            disagreements += 1
        if asg is not None:
            sat_count += 1
            if not f.evaluate(asg.values):
                unsound += 1
    report(
        6,
        "2-SAT vs exhaustive truth tables",
        disagreements + unsound,
        f"{disagreements} disagreements, {unsound} bad models over 1000 formulas ({sat_count} sat)",
    )
    assert 0 < sat_count < 1000
    assert disagreements == 0 and unsound == 0


def test_structural_invariants(sweep):
    records, _ = sweep
    violations = 0
    lemma_graphs = 0
    for r in records:
        g = r.g
        if r.alpha > r.a:
            violations += 1
        if g.m == 0:
            continue
        if 2 * r.a < g.n - 1:
            violations += 1
        top = sorted(g.degrees(), reverse=True)[: g.n - r.a - 1]
        if sum(top) >= g.m:
            violations += 1
        if g.n <= 10 and r.alpha == r.a:
            lemma_graphs += 1
            for mis in all_maximum_independent_sets(g, max_vertices=10):
                members = sorted(mis)
                for size in range(1, len(members) + 1):
                    for subset in combinations(members, size):
                        if len(subset) - len(g.neighborhood(subset)) > r.two_k:
                            violations += 1
    report(
        7,
        "structural invariants",
        violations,
        f"{violations} violations; subset bound checked on {lemma_graphs} graphs",
    )
    assert violations == 0


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_polynomial_scale(seed):
    g = generate_random_graph(1000, 0.01, seed)
    start = time.perf_counter()
    recognize_equal(g)
    elapsed = time.perf_counter() - start
    report(8, f"n=1000 p=0.01 seed={seed} runtime", elapsed >= 60, f"{elapsed:.2f}s (limit 60s)")
    assert elapsed < 60


def _strip_timing(text: str, as_json: bool) -> str:
    if as_json:
        data = json.loads(text)
        data.pop("ms")
        return json.dumps(data)
    return "\n".join(line for line in text.splitlines() if not line.startswith("ms="))


def test_cli_determinism(tmp_path, capsys):
    graph_file = tmp_path / "g.txt"
    graph_file.write_text(serialize_graph(generate_random_graph(12, 0.4, seed=9)))
    commands = [
        ["anni", graph_file],
        ["recognize", graph_file, "--emit-certificate"],
        ["gap", graph_file, "--ell", "1"],
        ["oracle", graph_file, "alpha"],
        ["oracle", graph_file, "mu"],
        ["gen", "30", "0.3", "--seed", "4", "-o", tmp_path / "gen.txt"],
    ]
    mismatches = 0
    for cmd in commands:
        for as_json in (False, True):
            argv = (["--json"] if as_json else []) + [str(c) for c in cmd]
            outputs = []
            for _ in range(2):
                main(argv)
                outputs.append(_strip_timing(capsys.readouterr().out, as_json))
            mismatches += outputs[0] != outputs[1]
    first = (tmp_path / "gen.txt").read_bytes()
    main(["gen", "30", "0.3", "--seed", "4", "-o", str(tmp_path / "gen.txt")])
    capsys.readouterr()
    mismatches += first != (tmp_path / "gen.txt").read_bytes()
    report(9, "CLI output determinism", mismatches, f"{mismatches} mismatches over {len(commands) * 2} runs pairs")
    assert mismatches == 0
