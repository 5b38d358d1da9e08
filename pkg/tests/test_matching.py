import pytest
from hypothesis import given, settings

from annirec.graph_core import (
    Graph,
    complete_graph,
    cycle_graph,
    delete_vertex,
    empty_graph,
    generate_random_graph,
    path_graph,
    verify_independent_set,
)
from annirec.matching import (
    Matching,
    is_matching_of,
    matching_number,
    maximum_matching,
    maximum_matching_after_deletion,
    unsaturated_vertices,
)
from annirec.oracle import brute_mu

from .strategies import graphs


def has_augmenting_path(g: Graph, m: Matching) -> bool:
    """DFS over simple alternating paths between exposed vertices."""
    exposed = [v for v in range(g.n) if not m.is_saturated(v)]

    def walk(v, visited, need_matched):
        for w in g.neighbors(v):
            if w in visited:
                continue
            if (m.mate[v] == w) != need_matched:
                continue
            if not need_matched and not m.is_saturated(w):
                return True
            if walk(w, visited | {w}, not need_matched):
                return True
        return False

    return any(walk(s, {s}, False) for s in exposed)


def test_single_edge():
    g = Graph.from_edges(2, [(0, 1)])
    m = maximum_matching(g)
    assert m.edges == ((0, 1),)
    assert unsaturated_vertices(g, m) == frozenset()


@pytest.mark.parametrize(
    "g, expected",
    [
        (cycle_graph(5), 2),
        (complete_graph(4), 2),
        (path_graph(4), 2),
        (empty_graph(4), 0),
    ],
)
def test_small_matching_numbers(g, expected):
    assert brute_mu(g) == expected
    assert matching_number(g) == expected


def test_petersen_has_perfect_matching(petersen):
    m = maximum_matching(petersen)
    assert m.size == 5 == brute_mu(petersen)
    assert is_matching_of(petersen, m)


def test_unsaturated_examples(c5):
    p3 = path_graph(3)
    assert unsaturated_vertices(p3, Matching.from_edges(3, [(0, 1)])) == {2}
    assert len(unsaturated_vertices(c5, maximum_matching(c5))) == 1


def test_unsaturated_rejects_foreign_matching():
    p3 = path_graph(3)
    with pytest.raises(ValueError):
        unsaturated_vertices(p3, Matching.from_edges(3, [(0, 2)]))


def test_matching_from_edges_rejects_overlap():
    with pytest.raises(ValueError):
        Matching.from_edges(3, [(0, 1), (1, 2)])


def test_blossom_needs_contraction():
    # odd cycle 0-1-2 with tails; a greedy start of (0,1),(2,3) needs an
    # augmenting path through the contracted triangle
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (0, 4), (1, 5)])
    assert maximum_matching(g).size == 3 == brute_mu(g)


@settings(max_examples=300)
@given(graphs(min_n=1, max_n=12))
def test_matches_brute_force(g):
    m = maximum_matching(g)
    assert is_matching_of(g, m)
    assert m.size == brute_mu(g)
    assert verify_independent_set(g, unsaturated_vertices(g, m))
    assert len(unsaturated_vertices(g, m)) == g.n - 2 * m.size


@settings(max_examples=150)
@given(graphs(min_n=1, max_n=8))
def test_no_augmenting_path_remains(g):
    assert not has_augmenting_path(g, maximum_matching(g))


@given(graphs(min_n=1, max_n=12))
def test_matching_after_deletion_is_maximum(g):
    full = maximum_matching(g)
    for r in range(g.n):
        reduced = maximum_matching_after_deletion(g, full, r)
        assert reduced.mate[r] == -1
        assert is_matching_of(g, reduced)
        h, _ = delete_vertex(g, r)
        assert reduced.size == maximum_matching(h).size


def test_deterministic():
    g = generate_random_graph(40, 0.15, seed=11)
    assert maximum_matching(g) == maximum_matching(g)


@pytest.mark.parametrize("n, p, seed", [(300, 0.02, 5), (200, 0.1, 2), (500, 0.005, 9)])
def test_larger_graphs_against_networkx(n, p, seed):
    nx = pytest.importorskip("networkx")
    g = generate_random_graph(n, p, seed)
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(g.edges)
    m = maximum_matching(g)
    assert is_matching_of(g, m)
    assert m.size == len(nx.max_weight_matching(h, maxcardinality=True))
