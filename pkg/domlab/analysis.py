# ----------------------------------------------------------
# Domination Lab
# File: domlab/analysis.py
# ----------------------------------------------------------
# Description:
# Structural predicates for cubic graphs:
#   • is_cubic
#   • bridges (iterative lowpoint DFS over edge occurrences)
#   • vertex_connectivity (networkx vertex-split max-flow)
#   • is_cyclically_4_edge_connected (exhaustive cuts of size <= 3)
#   • hamiltonian_cycle (budgeted backtracking with pruning)
#   • analyze, which bundles the requested checks into a report
# ----------------------------------------------------------

import logging
import sys
import time
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from domlab.exceptions import GraphError, ValidationError
from domlab.graph_core import Edge, Graph, to_networkx

CHECKS = ("cubic", "bridges", "kappa", "cyc4", "hamilton")
DEFAULT_HAMILTON_BUDGET = 100_000_000


# ----------------------------------------------------------
# Cubicity
# ----------------------------------------------------------
def is_cubic(g: Graph) -> bool:
    """True iff every vertex has degree three, parallel edges counted."""
    return all(d == 3 for d in g.degrees())


# ----------------------------------------------------------
# Components
# ----------------------------------------------------------
def _component_labels(g: Graph, removed: Iterable[int] = ()) -> Tuple[List[int], int]:
    """Label connected components of g minus the given edge indices."""
    skip = set(removed)
    label = [-1] * g.n
    count = 0
    for start in range(g.n):
        if label[start] >= 0:
            continue
        label[start] = count
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for index in g.incidence[v]:
                if index in skip:
                    continue
                a, b = g.edges[index]
                w = b if a == v else a
                if label[w] < 0:
                    label[w] = count
                    queue.append(w)
        count += 1
    return label, count


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or _component_labels(g)[1] == 1


# ----------------------------------------------------------
# Bridges
# ----------------------------------------------------------
def bridges(g: Graph) -> List[Edge]:
    """
    Return the cut-edges of g as sorted (u, v) pairs.

    Lowpoint DFS that skips only the edge occurrence it arrived by, so
    a parallel copy back to the parent counts as a back edge and a
    parallel pair is never reported.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    found: List[Edge] = []
    clock = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # stack frames: (vertex, edge index used to enter, iterator position)
        stack: List[List[int]] = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, parent_edge, position = frame
            incident = g.incidence[v]
            if position < len(incident):
                frame[2] += 1
                index = incident[position]
                if index == parent_edge:
                    continue
                a, b = g.edges[index]
                w = b if a == v else a
                if disc[w] < 0:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append([w, index, 0])
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        found.append(g.edges[parent_edge])
    return sorted(found)


# ----------------------------------------------------------
# Vertex Connectivity
# ----------------------------------------------------------
def vertex_connectivity(g: Graph) -> int:
    """
    Standard vertex connectivity of the underlying simple graph.

    Disconnected graphs and graphs with at most one vertex give 0;
    complete graphs K_n give n - 1.
    """
    if g.n <= 1 or not is_connected(g):
        return 0
    return int(nx.node_connectivity(to_networkx(g, simple=True)))


# ----------------------------------------------------------
# Cyclic 4-edge-connectivity
# ----------------------------------------------------------
@dataclass(frozen=True)
class CyclicCutResult:
    """Outcome of the cyclic cut search; witness and side set only when a cut exists."""
    cyclically_4_connected: bool
    witness: Optional[Tuple[int, ...]] = None
    side: Optional[frozenset] = None

    def witness_edges(self, g: Graph) -> List[Edge]:
        return [g.edges[i] for i in self.witness or ()]


def _cyclic_sides(g: Graph, removed: Sequence[int]) -> Optional[frozenset]:
    """If removing the edges leaves exactly two components and both contain a cycle, return one side."""
    label, count = _component_labels(g, removed)
    if count != 2:
        return None
    vertices = [0, 0]
    edges = [0, 0]
    skip = set(removed)
    for v in range(g.n):
        vertices[label[v]] += 1
    for index, (a, _) in enumerate(g.edges):
        if index not in skip:
            edges[label[a]] += 1
    if edges[0] >= vertices[0] and edges[1] >= vertices[1]:
        return frozenset(v for v in range(g.n) if label[v] == 0)
    return None


def validate_cyclic_cut(g: Graph, witness: Sequence[int]) -> bool:
    """Independent recheck: the cut disconnects g into two cyclic sides."""
    return _cyclic_sides(g, witness) is not None


def is_cyclically_4_edge_connected(g: Graph) -> CyclicCutResult:
    """
    Exhaustively search edge subsets of size <= 3 for a cyclic cut.

    Raises GraphError for a non-cubic input. A disconnected graph with
    two cyclic components is reported with an empty witness cut.
    """
    if not is_cubic(g):
        raise GraphError("cyclic connectivity check needs a cubic graph")
    for size in range(0, 4):
        for removed in combinations(range(g.m), size):
            side = _cyclic_sides(g, removed)
            if side is not None:
                logging.info(f"Cyclic {size}-edge cut found: {[g.edges[i] for i in removed]}")
                return CyclicCutResult(False, tuple(removed), side)
    return CyclicCutResult(True)


# ----------------------------------------------------------
# Hamiltonicity
# ----------------------------------------------------------
class HamiltonStatus(str, Enum):
    FOUND = "found"
    NOT_FOUND = "not-found"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class HamiltonResult:
    status: HamiltonStatus
    cycle: Optional[Tuple[int, ...]] = None
    nodes: int = 0

    @property
    def hamiltonian(self) -> Optional[bool]:
        """True / False when decided, None when the budget ran out."""
        if self.status is HamiltonStatus.BUDGET_EXHAUSTED:
            return None
        return self.status is HamiltonStatus.FOUND


def validate_hamiltonian_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """n distinct vertices, consecutive pairs adjacent, wraparound edge present."""
    if len(cycle) != g.n or len(set(cycle)) != g.n or g.n < 3:
        return False
    if not all(0 <= v < g.n for v in cycle):
        return False
    present = set(g.edges)
    for position, v in enumerate(cycle):
        w = cycle[(position + 1) % g.n]
        if (min(v, w), max(v, w)) not in present:
            return False
    return True


class _BudgetExhausted(Exception):
    pass


class _HamiltonSearch:
    """Backtracking over paths from vertex 0 with degree and connectivity pruning."""

    def __init__(self, g: Graph, budget: int, deadline: Optional[float]):
        self.g = g
        self.neighbors = [g.neighbors(v) for v in range(g.n)]
        self.budget = budget
        self.deadline = deadline
        self.nodes = 0
        self.path: List[int] = [0]
        self.on_path = [False] * g.n
        self.on_path[0] = True

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        if self.deadline is not None and self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise _BudgetExhausted

    def _feasible(self, end: int) -> bool:
        """Every free vertex keeps two usable neighbors and the free part stays reachable from end."""
        start = self.path[0]
        free = [v for v in range(self.g.n) if not self.on_path[v]]
        if not free:
            return True
        for v in free:
            usable = sum(1 for w in self.neighbors[v] if not self.on_path[w] or w in (start, end))
            if usable < 2:
                return False
        seen = {end}
        queue = deque([end])
        while queue:
            v = queue.popleft()
            for w in self.neighbors[v]:
                if not self.on_path[w] and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) - 1 == len(free)

    def search(self) -> Optional[List[int]]:
        end = self.path[-1]
        if len(self.path) == self.g.n:
            return list(self.path) if self.path[0] in self.neighbors[end] else None
        for w in self.neighbors[end]:
            if self.on_path[w]:
                continue
            self._tick()
            self.path.append(w)
            self.on_path[w] = True
            if self._feasible(w):
                result = self.search()
                if result is not None:
                    return result
            self.path.pop()
            self.on_path[w] = False
        return None


def hamiltonian_cycle(g: Graph, budget: int = DEFAULT_HAMILTON_BUDGET,
                      time_limit: Optional[float] = None) -> HamiltonResult:
    """
    Search for a Hamiltonian cycle.

    `budget` caps node expansions and `time_limit` (seconds) caps wall
    time; running out of either is reported as budget-exhausted.
    """
    if budget <= 0:
        raise ValidationError("Hamiltonicity budget must be positive")
    if g.n < 3 or not is_connected(g) or bridges(g) or min(len(g.neighbors(v)) for v in range(g.n)) < 2:
        return HamiltonResult(HamiltonStatus.NOT_FOUND)

    deadline = time.monotonic() + time_limit if time_limit else None
    search = _HamiltonSearch(g, budget, deadline)
    if g.n + 50 > sys.getrecursionlimit():
        sys.setrecursionlimit(g.n + 100)
    try:
        cycle = search.search()
    except _BudgetExhausted:
        logging.warning(f"Hamiltonicity search stopped after {search.nodes} nodes on {g!r}")
        return HamiltonResult(HamiltonStatus.BUDGET_EXHAUSTED, nodes=search.nodes)

    if cycle is None:
        return HamiltonResult(HamiltonStatus.NOT_FOUND, nodes=search.nodes)
    if not validate_hamiltonian_cycle(g, cycle):
        raise GraphError("Hamiltonian search produced an invalid cycle")
    return HamiltonResult(HamiltonStatus.FOUND, tuple(cycle), search.nodes)


# ----------------------------------------------------------
# Structure Report
# ----------------------------------------------------------
@dataclass
class StructureReport:
    """Results of the requested checks; unrequested checks stay None."""
    n: int
    m: int
    cubic: Optional[bool] = None
    bridge_list: Optional[List[Edge]] = None
    kappa: Optional[int] = None
    cyc4: Optional[CyclicCutResult] = None
    hamiltonian: Optional[HamiltonResult] = None
    notes: List[str] = field(default_factory=list)

    def to_dict(self, g: Optional[Graph] = None) -> Dict[str, Any]:
        data: Dict[str, Any] = {"n": self.n, "m": self.m}
        if self.cubic is not None:
            data["cubic"] = self.cubic
        if self.bridge_list is not None:
            data["bridges"] = [list(e) for e in self.bridge_list]
        if self.kappa is not None:
            data["kappa"] = self.kappa
        if self.cyc4 is not None:
            data["cyc4"] = self.cyc4.cyclically_4_connected
            if self.cyc4.witness is not None and g is not None:
                data["cyc4_witness"] = [list(e) for e in self.cyc4.witness_edges(g)]
        if self.hamiltonian is not None:
            data["hamilton"] = self.hamiltonian.status.value
            if self.hamiltonian.cycle is not None:
                data["hamilton_cycle"] = list(self.hamiltonian.cycle)
        if self.notes:
            data["notes"] = list(self.notes)
        return data


def analyze(g: Graph, checks: Iterable[str] = CHECKS,
            budget: int = DEFAULT_HAMILTON_BUDGET,
            time_limit: Optional[float] = None) -> StructureReport:
    """Run the named checks (cubic, bridges, kappa, cyc4, hamilton)."""
    wanted = list(checks)
    unknown = [c for c in wanted if c not in CHECKS]
    if unknown:
        raise ValidationError(f"Unknown check(s): {', '.join(unknown)}")

    report = StructureReport(g.n, g.m)
    if "cubic" in wanted:
        report.cubic = is_cubic(g)
    if "bridges" in wanted:
        report.bridge_list = bridges(g)
    if "kappa" in wanted:
        report.kappa = vertex_connectivity(g)
    if "cyc4" in wanted:
        if is_cubic(g):
            report.cyc4 = is_cyclically_4_edge_connected(g)
        else:
            report.notes.append("cyc4 skipped: graph is not cubic")
    if "hamilton" in wanted:
        report.hamiltonian = hamiltonian_cycle(g, budget, time_limit)
    logging.info(f"Analyzed {g!r}: {', '.join(wanted)}")
    return report
