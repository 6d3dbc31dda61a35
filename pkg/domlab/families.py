# ----------------------------------------------------------
# Domination Lab
# File: domlab/families.py
# ----------------------------------------------------------
# Description:
# Builders for every named graph family: R_k, L_r, G(P), G(P,B),
# G[B], M^r_k, N^r_k(i) and generalized Petersen graphs, plus the
# named base graphs and the build_family dispatcher used by the CLI.
#
# Every builder returns a Construction: the graph, the atomic gadget
# occurrences it contains (for compositional certification), a label
# side table and free-form metadata. Cubicity of each output is
# asserted before it is returned.
# ----------------------------------------------------------

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from domlab.analysis import is_cubic
from domlab.exceptions import ConstructionError, Graph6ParseError
from domlab.gadgets import (
    GadgetOccurrence,
    RootedGadget,
    gadget_catalog,
    gadget_P_i,
    gadget_Q_i,
    list_gadgets,
    replace_edge,
    replace_vertex,
)
from domlab.graph6 import parse_graph6
from domlab.graph_core import (
    Graph,
    complete_graph,
    cycle_graph,
    delete_vertices,
    disjoint_union,
    from_networkx,
    k2_triple,
    path_graph,
    prism_graph,
)

MIN_R_K = 3


# ==========================================================
# Construction Result
# ==========================================================
@dataclass
class Construction:
    """A built graph with its gadget occurrences and named vertices."""
    name: str
    graph: Graph
    params: Dict[str, Any] = field(default_factory=dict)
    occurrences: Tuple[GadgetOccurrence, ...] = ()
    labels: Dict[str, int] = field(default_factory=dict)
    meta: Dict[str, Any] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.graph.n

    def atoms(self) -> List[GadgetOccurrence]:
        """Occurrences split into their stable atomic gadgets."""
        result: List[GadgetOccurrence] = []
        for occurrence in self.occurrences:
            result.extend(occurrence.atoms())
        return result

    def dot_labels(self) -> Dict[int, str]:
        return {v: name for name, v in self.labels.items()}


class _Assembly:
    """Mutable splice log: keeps gadget occurrences valid across replacements."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.occurrences: List[GadgetOccurrence] = []

    def splice_edge(self, e: int, gadget: RootedGadget) -> GadgetOccurrence:
        result = replace_edge(self.graph, e, gadget)
        self.graph = result.graph
        occurrence = GadgetOccurrence(gadget, result.gadget_map)
        self.occurrences.append(occurrence)
        return occurrence

    def splice_vertex(self, v: int, gadget: RootedGadget) -> GadgetOccurrence:
        result = replace_vertex(self.graph, v, gadget)
        self.graph = result.graph
        self.occurrences = [occ.remap(result.host_map) for occ in self.occurrences]
        occurrence = GadgetOccurrence(gadget, result.gadget_map)
        self.occurrences.append(occurrence)
        return occurrence

    def attach(self, gadget: RootedGadget) -> GadgetOccurrence:
        """Add a disjoint copy of the gadget graph."""
        union, offsets = disjoint_union(self.graph, gadget.graph)
        self.graph = union
        occurrence = GadgetOccurrence(gadget, tuple(x + offsets[1] for x in range(gadget.n)))
        self.occurrences.append(occurrence)
        return occurrence

    def finish(self, name: str, params: Dict[str, Any], labels: Optional[Dict[str, int]] = None,
               meta: Optional[Dict[str, Any]] = None) -> Construction:
        _ensure_cubic(self.graph, name)
        return Construction(name, self.graph, params, tuple(self.occurrences),
                            labels or {}, meta or {})


def _ensure_cubic(g: Graph, name: str) -> None:
    if not is_cubic(g):
        bad = [v for v, d in enumerate(g.degrees()) if d != 3][:5]
        raise ConstructionError(f"{name} is not cubic (first offending vertices: {bad})")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ConstructionError(message)


def _check_edge_slots(slots: Sequence[RootedGadget], count: int, family: str) -> List[RootedGadget]:
    slots = list(slots)
    _require(len(slots) == count, f"{family} needs {count} slot gadgets, got {len(slots)}")
    for gadget in slots:
        _require(len(gadget.terminals) == 2,
                 f"{family} slot gadget {gadget.key} must have 2 terminals")
    return slots


# ==========================================================
# R_k and L_r
# ==========================================================
def build_R(k: int, slot_gadgets: Optional[Sequence[RootedGadget]] = None) -> Construction:
    """
    The 2k-cycle v_0..v_(2k-1) with every edge v_2i v_2i+1 replaced by a
    copy of P (or the i-th slot gadget).
    """
    _require(isinstance(k, int) and k >= MIN_R_K, f"build_R needs k >= {MIN_R_K}, got {k}")
    slots = _check_edge_slots(slot_gadgets or [gadget_P_i(1)] * k, k, "R_k")
    assembly = _Assembly(cycle_graph(2 * k))
    # descending edge index keeps the lower indices stable
    for i in reversed(range(k)):
        assembly.splice_edge(2 * i, slots[i])
    assembly.occurrences.reverse()
    labels = {f"v{j}": j for j in range(2 * k)}
    params = {"k": k, "slots": [g.key for g in slots]}
    logging.info(f"Built R_{k} with slots {params['slots']}")
    return assembly.finish(f"R_{k}", params, labels)


def build_L(r: int, slot_gadgets: Optional[Sequence[RootedGadget]] = None) -> Construction:
    """
    The 2r-vertex path v_1..v_2r with each edge v_(2i-1) v_2i replaced
    by P, plus two copies of S joined by bridges s1-v_1 and s2-v_2r.
    """
    _require(isinstance(r, int) and r >= 1, f"build_L needs r >= 1, got {r}")
    slots = _check_edge_slots(slot_gadgets or [gadget_P_i(1)] * r, r, "L_r")
    assembly = _Assembly(path_graph(2 * r))
    for i in reversed(range(r)):
        assembly.splice_edge(2 * i, slots[i])
    assembly.occurrences.reverse()

    s = gadget_catalog("S")
    first = assembly.attach(s)
    second = assembly.attach(s)
    s1 = first.embedding[s.terminals[0]]
    s2 = second.embedding[s.terminals[0]]
    assembly.graph = assembly.graph.add_edges([(s1, 0), (s2, 2 * r - 1)])

    labels = {f"v{j + 1}": j for j in range(2 * r)}
    labels.update({"s1": s1, "s2": s2})
    return assembly.finish(f"L_{r}", {"r": r, "slots": [g.key for g in slots]}, labels)


# ==========================================================
# G(P), G(P,B), G[B]
# ==========================================================
def _require_cubic_base(g: Graph, family: str) -> None:
    if not is_cubic(g):
        raise ConstructionError(f"{family} needs a cubic base graph")


def build_GP(g: Graph) -> Construction:
    """Replace every edge of a cubic graph by a copy of P'."""
    _require_cubic_base(g, "G(P)")
    p_prime = gadget_catalog("P'")
    assembly = _Assembly(g)
    for e in reversed(range(g.m)):
        assembly.splice_edge(e, p_prime)
    return assembly.finish("G(P)", {"base_n": g.n, "base_m": g.m})


def _replace_all_vertices(assembly: _Assembly, g: Graph,
                          vertex_slots: Mapping[int, RootedGadget]) -> None:
    for v in reversed(range(g.n)):
        gadget = vertex_slots.get(v) or gadget_catalog("B")
        _require(len(gadget.terminals) == 3,
                 f"vertex slot gadget {gadget.key} must have 3 terminals")
        assembly.splice_vertex(v, gadget)


def build_GPB(g: Graph, vertex_slots: Optional[Mapping[int, RootedGadget]] = None) -> Construction:
    """
    Replace every vertex of a cubic graph by B (or its slot gadget) and
    then every original edge by P'.
    """
    _require_cubic_base(g, "G(P,B)")
    slots = dict(vertex_slots or {})
    for v in slots:
        _require(0 <= v < g.n, f"vertex slot {v} is not a vertex of the base graph")
    assembly = _Assembly(g)
    _replace_all_vertices(assembly, g, slots)

    owner: Dict[int, int] = {}
    for index, occurrence in enumerate(assembly.occurrences):
        for v in occurrence.embedding:
            owner[v] = index
    between = [e for e, (a, b) in enumerate(assembly.graph.edges) if owner[a] != owner[b]]
    p_prime = gadget_catalog("P'")
    for e in reversed(between):
        assembly.splice_edge(e, p_prime)
    params = {"base_n": g.n, "base_m": g.m,
              "vertex_slots": {str(v): gadget.key for v, gadget in sorted(slots.items())}}
    return assembly.finish("G(P,B)", params)


def build_GB(g: Graph) -> Construction:
    """Replace every vertex of a cubic graph by a copy of B."""
    _require_cubic_base(g, "G[B]")
    assembly = _Assembly(g)
    _replace_all_vertices(assembly, g, {})
    return assembly.finish("G[B]", {"base_n": g.n, "base_m": g.m})


# ==========================================================
# M^r_k and N^r_k(i)
# ==========================================================
def _ladder_m2(k: int) -> Tuple[List[Tuple[int, int]], Dict[str, int]]:
    """Edges and labels of M^2_k: cycles x_0..x_3k, y_0..y_3k, rungs and crossings."""
    size = 3 * k + 1
    labels = {f"x{i}": i for i in range(size)}
    labels.update({f"y{i}": size + i for i in range(size)})
    edges = [(i, (i + 1) % size) for i in range(size)]
    edges += [(size + i, size + (i + 1) % size) for i in range(size)]
    edges.append((0, size))
    edges += [(i, size + i) for i in range(1, 3 * k - 1) if i % 3 == 1]
    # crossing pairs use i = 2 mod 3; i = 1 mod 3 would leave degree-2 vertices
    for i in range(2, 3 * k):
        if i % 3 == 2:
            edges += [(i, size + i + 1), (i + 1, size + i)]
    return edges, labels


def _build_m_graph(r: int, k: int) -> Tuple[Graph, Dict[str, int]]:
    edges, labels = _ladder_m2(k)
    graph = Graph(2 * (3 * k + 1), tuple(edges))
    if r == 2:
        return graph, labels
    removed_names = ["x0", "y0"] if r == 0 else ["x0", "y0", "x1", "y1"]
    relabeled = delete_vertices(graph, [labels[name] for name in removed_names])
    kept = {name: relabeled.mapping[v] for name, v in labels.items() if v in relabeled.mapping}
    start = 1 if r == 0 else 2
    extra = [(kept[f"x{start}"], kept[f"x{3 * k}"]), (kept[f"y{start}"], kept[f"y{3 * k}"])]
    return relabeled.graph.add_edges(extra), kept


def build_M(r: int, k: int) -> Construction:
    """M^r_k with v = 6k, 6k - 2, 6k + 2 for r = 0, 1, 2."""
    _require(r in (0, 1, 2), f"build_M needs r in {{0, 1, 2}}, got {r}")
    _require(isinstance(k, int) and k >= 1, f"build_M needs k >= 1, got {k}")
    _require(not (r == 1 and k < 2), "M^1_k needs k >= 2")
    graph, labels = _build_m_graph(r, k)
    _ensure_cubic(graph, f"M^{r}_{k}")
    if not graph.is_simple():
        raise ConstructionError(f"M^{r}_{k} has parallel edges")
    return Construction(f"M^{r}_{k}", graph, {"r": r, "k": k}, (), labels,
                        {"notes": ["crossing edges use i = 2 mod 3"]})


def build_N(r: int, k: int, i: int) -> Construction:
    """
    M^r_k with x_(3i+1) x_(3i+2) and y_(3i+1) y_(3i) swapped for
    x_(3i+1) y_(3i) and y_(3i+1) x_(3i+2); needs 1 < i < k.

    `meta["cut_side"]` lists a vertex set separated by a cyclic 3-cut.
    """
    _require(r in (0, 1, 2), f"build_N needs r in {{0, 1, 2}}, got {r}")
    _require(isinstance(k, int) and k >= 3, f"build_N needs k >= 3, got {k}")
    _require(isinstance(i, int) and 1 < i < k, f"build_N needs 1 < i < k, got i={i}, k={k}")
    graph, labels = _build_m_graph(r, k)
    def x(j: int) -> int:
        return labels[f"x{j}"]

    def y(j: int) -> int:
        return labels[f"y{j}"]

    drop = sorted(
        [graph.edge_index(x(3 * i + 1), x(3 * i + 2)), graph.edge_index(y(3 * i + 1), y(3 * i))],
        reverse=True,
    )
    edges = list(graph.edges)
    for index in drop:
        del edges[index]
    edges += [(x(3 * i + 1), y(3 * i)), (y(3 * i + 1), x(3 * i + 2))]
    swapped = Graph(graph.n, tuple(edges))
    _ensure_cubic(swapped, f"N^{r}_{k}({i})")

    side = sorted([x(j) for j in range(3 * i - 2, 3 * i + 2)]
                  + [y(j) for j in range(3 * i - 2, 3 * i + 1)])
    return Construction(f"N^{r}_{k}({i})", swapped, {"r": r, "k": k, "i": i}, (), labels,
                        {"cut_side": side})


def generalized_petersen(n: int, j: int) -> Construction:
    """Outer n-cycle u_0..u_(n-1), inner j-step cycle w_0..w_(n-1), spokes u_t w_t."""
    _require(isinstance(n, int) and n >= 3, f"generalized_petersen needs n >= 3, got {n}")
    _require(isinstance(j, int) and 1 <= j and 2 * j < n,
             f"generalized_petersen needs 1 <= j < n/2, got j={j}")
    edges = [(t, (t + 1) % n) for t in range(n)]
    edges += [(t, n + t) for t in range(n)]
    edges += [(n + t, n + (t + j) % n) for t in range(n)]
    graph = Graph(2 * n, tuple(edges))
    _ensure_cubic(graph, f"GP({n},{j})")
    labels = {f"u{t}": t for t in range(n)}
    labels.update({f"w{t}": n + t for t in range(n)})
    return Construction(f"GP({n},{j})", graph, {"n": n, "j": j}, (), labels)


# ==========================================================
# Named Base Graphs
# ==========================================================
_BASE_GRAPHS: Dict[str, Callable[[], Graph]] = {
    "K23": k2_triple,
    "K4": lambda: complete_graph(4),
    "prism": prism_graph,
    "petersen": lambda: from_networkx(nx.petersen_graph()),
}


def list_base_graphs() -> List[str]:
    return list(_BASE_GRAPHS)


def base_graph(name: Union[str, Graph]) -> Graph:
    """Resolve a named base graph (K23, K4, prism, petersen) or graph6 text."""
    if isinstance(name, Graph):
        return name
    if name in _BASE_GRAPHS:
        return _BASE_GRAPHS[name]()
    try:
        return parse_graph6(name)
    except Graph6ParseError as error:
        raise ConstructionError(
            f"Unknown base graph {name!r}: not one of {', '.join(_BASE_GRAPHS)} "
            f"and not graph6 ({error})"
        )


# ==========================================================
# Dispatcher
# ==========================================================
def _gadget_construction(gadget: RootedGadget) -> Construction:
    occurrence = GadgetOccurrence(gadget, tuple(range(gadget.n)))
    return Construction(gadget.key, gadget.graph, dict(gadget.params), (occurrence,),
                        dict(gadget.labels), {"terminals": list(gadget.terminals)})


def _need(params: Mapping[str, Any], name: str, family: str) -> int:
    value = params.get(name)
    if value is None:
        raise ConstructionError(f"family {family} needs --{name}")
    return int(value)


_FAMILY_BUILDERS: Dict[str, Callable[[Mapping[str, Any]], Construction]] = {
    "Pi": lambda p: _gadget_construction(gadget_P_i(_need(p, "i", "Pi"))),
    "Qi": lambda p: _gadget_construction(gadget_Q_i(_need(p, "i", "Qi"))),
    "R": lambda p: build_R(_need(p, "k", "R")),
    "L": lambda p: build_L(_need(p, "r", "L")),
    "GP": lambda p: build_GP(base_graph(p.get("base") or "K23")),
    "GPB": lambda p: build_GPB(base_graph(p.get("base") or "K23")),
    "GB": lambda p: build_GB(base_graph(p.get("base") or "K23")),
    "M": lambda p: build_M(_need(p, "r", "M"), _need(p, "k", "M")),
    "N": lambda p: build_N(_need(p, "r", "N"), _need(p, "k", "N"), _need(p, "i", "N")),
    "petersen": lambda p: generalized_petersen(int(p.get("n") or 7), int(p.get("j") or 2)),
}


def list_families() -> List[str]:
    return list_gadgets() + list(_FAMILY_BUILDERS)


def build_family(name: str, **params: Any) -> Construction:
    """
    Build a catalog gadget or family by name.

    Unused parameters are ignored; missing required ones raise
    ConstructionError.
    """
    if name in _FAMILY_BUILDERS:
        return _FAMILY_BUILDERS[name](params)
    if name in list_gadgets():
        return _gadget_construction(gadget_catalog(name))
    raise ConstructionError(f"Unknown family: {name}. Available: {', '.join(list_families())}")
