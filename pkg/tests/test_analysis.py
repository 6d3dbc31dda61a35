# ----------------------------------------------------------
# Domination Lab
# File: tests/test_analysis.py
# ----------------------------------------------------------
# Description:
# Tests structural predicates in domlab/analysis.py:
#   • cubicity and bridges (checked against a remove-and-test oracle)
#   • vertex connectivity (checked against a separating-set search)
#   • cyclic 4-edge-connectivity with witness revalidation
#   • Hamiltonian search, budget exhaustion and witness validation
#   • the analyze() report
# ----------------------------------------------------------

from itertools import combinations

import pytest

from domlab.analysis import (
    HamiltonStatus,
    analyze,
    bridges,
    hamiltonian_cycle,
    is_connected,
    is_cubic,
    is_cyclically_4_edge_connected,
    validate_cyclic_cut,
    validate_hamiltonian_cycle,
    vertex_connectivity,
)
from domlab.exceptions import GraphError, ValidationError
from domlab.graph_core import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    delete_vertices,
    k2_triple,
    path_graph,
    prism_graph,
)
from tests.conftest import random_connected_graph


# ----------------------------------------------------------
# Naive Oracles
# ----------------------------------------------------------
def _components(g: Graph, skip=()) -> int:
    parent = list(range(g.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for index, (a, b) in enumerate(g.edges):
        if index not in skip:
            parent[find(a)] = find(b)
    return len({find(v) for v in range(g.n)})


def naive_bridges(g: Graph):
    base = _components(g)
    return sorted({g.edges[i] for i in range(g.m) if _components(g, {i}) > base})


def naive_connectivity(g: Graph) -> int:
    if g.n <= 1 or _components(g) > 1:
        return 0
    for k in range(g.n - 1):
        for s in combinations(range(g.n), k):
            rest = delete_vertices(g, s).graph
            if rest.n >= 2 and _components(rest) > 1:
                return k
    return g.n - 1


# ----------------------------------------------------------
# Cubicity and Bridges
# ----------------------------------------------------------
@pytest.mark.parametrize("g, expected", [
    (complete_graph(4), True),
    (cycle_graph(5), False),
    (k2_triple(), True),
    (prism_graph(), True),
])
def test_is_cubic(g, expected):
    assert is_cubic(g) is expected


def test_bridges_of_a_path():
    assert bridges(path_graph(4)) == [(0, 1), (1, 2), (2, 3)]


def test_parallel_pair_is_never_a_bridge():
    assert bridges(k2_triple()) == []
    assert bridges(Graph(3, ((0, 1), (0, 1), (1, 2)))) == [(1, 2)]


def test_bridges_match_naive_oracle(rng):
    for _ in range(60):
        n = int(rng.integers(4, 13))
        g = random_connected_graph(rng, n, p=0.25, min_degree=1)
        assert bridges(g) == naive_bridges(g)


def test_is_connected():
    assert is_connected(Graph(1))
    assert not is_connected(Graph(3, ((0, 1),)))


# ----------------------------------------------------------
# Vertex Connectivity
# ----------------------------------------------------------
@pytest.mark.parametrize("g, expected", [
    (complete_graph(4), 3),
    (path_graph(4), 1),
    (cycle_graph(6), 2),
    (complete_bipartite(3, 3), 3),
    (Graph(3, ((0, 1),)), 0),
    (Graph(1), 0),
])
def test_vertex_connectivity_small_graphs(g, expected):
    assert vertex_connectivity(g) == expected


def test_petersen_connectivity(petersen):
    assert vertex_connectivity(petersen) == 3


def test_vertex_connectivity_matches_naive_oracle(rng):
    for _ in range(40):
        n = int(rng.integers(4, 10))
        g = random_connected_graph(rng, n, p=0.45, min_degree=1)
        assert vertex_connectivity(g) == naive_connectivity(g)


# ----------------------------------------------------------
# Cyclic 4-edge-connectivity
# ----------------------------------------------------------
def test_petersen_is_cyclically_4_connected(petersen):
    result = is_cyclically_4_edge_connected(petersen)
    assert result.cyclically_4_connected
    assert result.witness is None


def test_prism_has_a_cyclic_three_cut():
    g = prism_graph()
    result = is_cyclically_4_edge_connected(g)
    assert not result.cyclically_4_connected
    assert len(result.witness) == 3
    assert validate_cyclic_cut(g, result.witness)
    assert sorted(result.witness_edges(g)) == [(0, 3), (1, 4), (2, 5)]
    assert result.side in (frozenset({0, 1, 2}), frozenset({3, 4, 5}))


def test_trivial_cut_is_not_cyclic():
    # the three edges at one vertex isolate a vertex, not a cycle
    g = complete_graph(4)
    assert not validate_cyclic_cut(g, [0, 1, 2])
    assert is_cyclically_4_edge_connected(g).cyclically_4_connected


def test_cyclic_check_needs_cubic_graph():
    with pytest.raises(GraphError, match="cubic"):
        is_cyclically_4_edge_connected(cycle_graph(5))


# ----------------------------------------------------------
# Hamiltonicity
# ----------------------------------------------------------
def test_cycle_is_hamiltonian():
    result = hamiltonian_cycle(cycle_graph(6))
    assert result.status is HamiltonStatus.FOUND
    assert result.hamiltonian is True
    assert validate_hamiltonian_cycle(cycle_graph(6), result.cycle)


def test_petersen_is_not_hamiltonian(petersen):
    result = hamiltonian_cycle(petersen)
    assert result.status is HamiltonStatus.NOT_FOUND
    assert result.hamiltonian is False


@pytest.mark.parametrize("g", [path_graph(5), Graph(2, ((0, 1),)),
                               Graph(4, ((0, 1), (1, 2), (2, 0), (2, 3)))])
def test_quick_rejections(g):
    assert hamiltonian_cycle(g).status is HamiltonStatus.NOT_FOUND


def test_budget_exhaustion_is_a_status(petersen):
    result = hamiltonian_cycle(petersen, budget=1)
    assert result.status is HamiltonStatus.BUDGET_EXHAUSTED
    assert result.hamiltonian is None


def test_invalid_budget_raises():
    with pytest.raises(ValidationError):
        hamiltonian_cycle(cycle_graph(4), budget=0)


@pytest.mark.parametrize("cycle", [[0, 1, 2], [0, 2, 1, 3], [0, 1, 2, 2], [0, 1, 2, 7]])
def test_validate_hamiltonian_cycle_rejects(cycle):
    assert not validate_hamiltonian_cycle(cycle_graph(4), cycle)


# ----------------------------------------------------------
# analyze()
# ----------------------------------------------------------
def test_analyze_selected_checks():
    g = prism_graph()
    report = analyze(g, ["cubic", "cyc4"])
    assert report.cubic is True
    assert report.kappa is None
    data = report.to_dict(g)
    assert data["cyc4"] is False
    assert len(data["cyc4_witness"]) == 3
    assert "hamilton" not in data


def test_analyze_all_checks_on_k4():
    data = analyze(complete_graph(4)).to_dict()
    assert data == {"n": 4, "m": 6, "cubic": True, "bridges": [], "kappa": 3,
                    "cyc4": True, "hamilton": "found",
                    "hamilton_cycle": data["hamilton_cycle"]}


def test_analyze_notes_non_cubic_graph():
    report = analyze(cycle_graph(5), ["cyc4"])
    assert report.cyc4 is None
    assert report.notes == ["cyc4 skipped: graph is not cubic"]


def test_analyze_unknown_check():
    with pytest.raises(ValidationError, match="Unknown check"):
        analyze(cycle_graph(5), ["girth"])
