# ----------------------------------------------------------
# Domination Lab
# File: tests/test_certification.py
# ----------------------------------------------------------
# Description:
# Tests domlab/certification.py:
#   • stability tables (exact and brute force agree)
#   • compositional lower bounds and their refusals
#   • certified gamma with and without a gap
#   • the occurrence sidecar
# ----------------------------------------------------------

import json

import pytest

from domlab.certification import (
    attachment_set,
    certified_gamma,
    check_stability,
    compositional_lower_bound,
    load_occurrences,
    residual_packing,
    save_occurrences,
)
from domlab.domination import Certificate, is_dominating
from domlab.exceptions import CertificationError, SolverError, ValidationError
from domlab.families import build_L, build_R
from domlab.gadgets import GadgetOccurrence, gadget_catalog, gadget_P_i, replace_edge
from domlab.graph_core import cycle_graph


# ----------------------------------------------------------
# Stability
# ----------------------------------------------------------
def test_a_is_not_stable():
    a = gadget_catalog("A")
    report = check_stability(a)
    assert report.gamma == 3
    assert report.stable is False
    assert report.labelled_table(a.labels) == {"{}": 3, "{a1}": 3, "{a2}": 3, "{a1,a2}": 2}


@pytest.mark.parametrize("name, gamma", [("B", 3), ("S", 6), ("P", 7)])
def test_catalog_gadgets_are_stable(name, gamma):
    report = check_stability(gadget_catalog(name))
    assert report.stable is True
    assert report.complete
    assert set(report.table.values()) == {gamma}


def test_exact_and_bruteforce_tables_agree():
    t = gadget_catalog("T")
    assert check_stability(t).table == check_stability(t, solver="bruteforce").table


def test_composite_gadget_is_solved_from_its_parts():
    report = check_stability(gadget_P_i(2))
    assert report.gamma == 15
    assert report.stable is True


def test_stability_reports_are_cached():
    p = gadget_catalog("P")
    assert check_stability(p) is check_stability(p)


def test_stability_witness_dominates():
    b = gadget_catalog("B")
    assert is_dominating(b.graph, check_stability(b).witness)


def test_bruteforce_stability_respects_cap():
    with pytest.raises(SolverError, match="capped at 10"):
        check_stability(gadget_catalog("S"), solver="bruteforce", cap=10)
    assert check_stability(gadget_catalog("A"), solver="bruteforce", cap=8).table[()] == 3


def test_stability_argument_checks():
    with pytest.raises(ValidationError, match="Unknown solver"):
        check_stability(gadget_catalog("A"), solver="lp")
    with pytest.raises(ValidationError, match="not a vertex"):
        check_stability(gadget_catalog("A"), attachment=[99])


# ----------------------------------------------------------
# Compositional Lower Bound
# ----------------------------------------------------------
def test_attachment_set_is_the_spliced_terminals():
    built = build_R(3)
    occurrence = built.occurrences[0]
    assert attachment_set(built.graph, occurrence) == tuple(sorted(occurrence.gadget.terminals))


def test_bound_on_r3():
    built = build_R(3)
    bound = compositional_lower_bound(built.graph, built.atoms())
    assert bound.lower_bound == bound.gadget_sum == 21
    assert bound.residual == ()


def test_bound_on_l1_uses_all_three_gadgets():
    built = build_L(1)
    bound = compositional_lower_bound(built.graph, built.atoms())
    assert bound.gadget_sum == 7 + 6 + 6


def test_residual_packing_on_cycle():
    g = cycle_graph(6)
    assert residual_packing(g, range(6)) == [0, 3]
    assert compositional_lower_bound(g, []).lower_bound == 2


def test_overlap_is_refused():
    built = build_R(3)
    occurrence = built.occurrences[0]
    with pytest.raises(CertificationError) as info:
        compositional_lower_bound(built.graph, [occurrence, occurrence])
    assert info.value.reason == "overlap"
    assert info.value.occurrence_index == 1


def test_non_induced_copy_is_refused():
    a = gadget_catalog("A")
    host = a.graph.add_edges([a.graph.edges[0]])
    occurrence = GadgetOccurrence(a, tuple(range(a.n)))
    with pytest.raises(CertificationError) as info:
        compositional_lower_bound(host, [occurrence])
    assert info.value.reason == "not-induced"
    assert info.value.occurrence_index == 0


def test_unstable_gadget_is_refused():
    a = gadget_catalog("A")
    spliced = replace_edge(cycle_graph(4), 0, a)
    occurrence = GadgetOccurrence(a, spliced.gadget_map)
    with pytest.raises(CertificationError, match="not stable") as info:
        compositional_lower_bound(spliced.graph, [occurrence])
    assert info.value.reason == "unstable"


def test_out_of_range_occurrence():
    a = gadget_catalog("A")
    occurrence = GadgetOccurrence(a, tuple(range(100, 100 + a.n)))
    with pytest.raises(CertificationError) as info:
        compositional_lower_bound(cycle_graph(4), [occurrence])
    assert info.value.reason == "out-of-range"


# ----------------------------------------------------------
# Certified Gamma
# ----------------------------------------------------------
def test_certified_gamma_r3_is_compositional():
    built = build_R(3)
    result = certified_gamma(built.graph, built.atoms())
    assert result.gamma == 21
    assert result.optimal
    assert result.certificate is Certificate.COMPOSITIONAL
    assert is_dominating(built.graph, result.witness)


def test_certified_gamma_falls_back_when_bound_is_short():
    g = cycle_graph(7)
    result = certified_gamma(g, [])
    assert result.gamma == 3
    assert result.lower_bound == 3
    assert result.certificate is Certificate.BRANCH_AND_BOUND
    assert result.notes == ("gadget sum 0, residual packing 2",)


def test_witness_builder_is_used():
    g = cycle_graph(6)
    calls = []

    def builder(graph, occs):
        calls.append(len(occs))
        return [0, 3]

    result = certified_gamma(g, [], witness_builder=builder)
    assert calls == [0]
    assert result.witness == (0, 3)
    assert result.certificate is Certificate.COMPOSITIONAL


def test_non_dominating_builder_output_is_ignored():
    g = cycle_graph(6)
    result = certified_gamma(g, [], witness_builder=lambda graph, occs: [0])
    assert result.gamma == 2
    assert is_dominating(g, result.witness)


# ----------------------------------------------------------
# Occurrence Sidecar
# ----------------------------------------------------------
def test_sidecar_save_and_load(tmp_path):
    built = build_R(3, [gadget_P_i(2), gadget_P_i(1), gadget_P_i(1)])
    path = save_occurrences(built.occurrences, tmp_path / "r3.json")
    loaded = load_occurrences(path)
    assert [occ.gadget.key for occ in loaded] == ["P(i=2)", "P(i=1)", "P(i=1)"]
    assert [occ.embedding for occ in loaded] == [occ.embedding for occ in built.occurrences]


@pytest.mark.parametrize("payload, fragment", [
    ("not json", "Cannot read"),
    ('{"other": []}', "occurrences"),
    ('{"occurrences": [{"gadget": "A"}]}', "Malformed"),
    ('{"occurrences": [{"gadget": "Z", "embedding": [0]}]}', "Unknown gadget"),
])
def test_sidecar_errors(tmp_path, payload, fragment):
    path = tmp_path / "bad.json"
    path.write_text(payload, encoding="utf-8")
    with pytest.raises(ValidationError, match=fragment):
        load_occurrences(path)


def test_missing_sidecar(tmp_path):
    with pytest.raises(ValidationError, match="Cannot read"):
        load_occurrences(tmp_path / "absent.json")


def test_sidecar_file_layout(tmp_path):
    path = save_occurrences(build_R(3).occurrences[:1], tmp_path / "one.json")
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["occurrences"][0]["gadget"] == "P"
    assert data["occurrences"][0]["params"] == {"i": 1}
