# ----------------------------------------------------------
# Domination Lab
# File: domlab/graph_core.py
# ----------------------------------------------------------
# Description:
# The undirected multigraph carrier used by every construction and
# algorithm in the lab, plus its editing primitives and DOT output.
#
# Graph values are immutable: every editing operation returns a new
# Graph. Vertices are the dense ids 0..n-1; edges are a tuple of
# normalized (u, v) pairs with u < v, parallel copies allowed, and an
# edge occurrence is addressed by its index in that tuple.
#
# Responsibilities:
#   Validate the multigraph invariants (ids in range, no loops)
#   Adjacency, degrees and closed-neighborhood bitmasks
#   subdivide_edge, delete_vertices, disjoint_union
#   to_dot rendering and networkx conversion
# ----------------------------------------------------------

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from domlab.exceptions import GraphError

Edge = Tuple[int, int]
VertexSet = FrozenSet[int]


def _normalize(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# ==========================================================
# Dataclass: Graph
# ==========================================================
@dataclass(frozen=True)
class Graph:
    """Undirected multigraph on vertices 0..n-1 without self-loops."""

    n: int
    edges: Tuple[Edge, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"Vertex count must be non-negative, got {self.n}")
        normalized = []
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"Edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise GraphError(f"Self-loop at vertex {u} is not allowed")
            normalized.append(_normalize(int(u), int(v)))
        object.__setattr__(self, "edges", tuple(normalized))

    # ------------------------------------------------------
    # Construction Helpers
    # ------------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from any iterable of vertex pairs."""
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    def add_vertices(self, count: int) -> Tuple["Graph", List[int]]:
        """Return a copy with `count` fresh vertices and their ids."""
        fresh = list(range(self.n, self.n + count))
        return Graph(self.n + count, self.edges), fresh

    def add_edges(self, pairs: Iterable[Sequence[int]]) -> "Graph":
        """Return a copy with the given edges appended."""
        return Graph(self.n, self.edges + tuple((int(u), int(v)) for u, v in pairs))

    # ------------------------------------------------------
    # Queries
    # ------------------------------------------------------
    @property
    def m(self) -> int:
        """Number of edge occurrences, parallel copies counted."""
        return len(self.edges)

    def edge(self, index: int) -> Edge:
        """Return the endpoints of an edge occurrence."""
        if not 0 <= index < len(self.edges):
            raise GraphError("no such edge")
        return self.edges[index]

    def edge_index(self, u: int, v: int) -> int:
        """Return the lowest index of an edge occurrence joining u and v."""
        target = _normalize(u, v)
        for index, pair in enumerate(self.edges):
            if pair == target:
                return index
        raise GraphError("no such edge")

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Neighbors of every vertex, sorted, listed with multiplicity."""
        adj: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(row)) for row in adj)

    @cached_property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        """Edge indices incident to every vertex."""
        inc: List[List[int]] = [[] for _ in range(self.n)]
        for index, (u, v) in enumerate(self.edges):
            inc[u].append(index)
            inc[v].append(index)
        return tuple(tuple(row) for row in inc)

    @cached_property
    def closed_masks(self) -> Tuple[int, ...]:
        """Closed neighborhood N[v] of every vertex as an integer bitmask."""
        masks = [1 << v for v in range(self.n)]
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Distinct neighbors of v in increasing order."""
        self._check_vertex(v)
        return tuple(sorted(set(self.adjacency[v])))

    def degree(self, v: int) -> int:
        """Number of edge endpoints at v, counting multiplicity."""
        self._check_vertex(v)
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [len(row) for row in self.adjacency]

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def edge_multiset(self) -> Counter:
        """Edges as a multiset, independent of edge order."""
        return Counter(self.edges)

    def same_graph(self, other: "Graph") -> bool:
        """True when both graphs have the same n and the same edge multiset."""
        return self.n == other.n and self.edge_multiset() == other.edge_multiset()

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"Vertex {v} is outside 0..{self.n - 1}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


class Relabeled(NamedTuple):
    """A derived graph plus the map from old vertex ids to new ones."""
    graph: Graph
    mapping: Dict[int, int]


# ----------------------------------------------------------
# Vertex Sets
# ----------------------------------------------------------
def as_vertex_set(g: Graph, vertices: Iterable[int]) -> VertexSet:
    """Validate an explicit vertex list against g and freeze it."""
    items = [int(v) for v in vertices]
    for v in items:
        if not 0 <= v < g.n:
            raise GraphError(f"Vertex {v} is outside 0..{g.n - 1}")
    if len(set(items)) != len(items):
        raise GraphError("Vertex set contains duplicates")
    return frozenset(items)


# ----------------------------------------------------------
# Editing Primitives
# ----------------------------------------------------------
def subdivide_edge(g: Graph, e: int) -> Tuple[Graph, int]:
    """
    Replace edge occurrence e by a path of length two through a new vertex.

    The new vertex gets id g.n. Index e now holds the half at the lower
    endpoint and the other half is appended, so every other edge keeps
    its index.
    """
    u, v = g.edge(e)
    w = g.n
    edges = list(g.edges)
    edges[e] = (u, w)
    edges.append((v, w))
    return Graph(g.n + 1, tuple(edges)), w


def delete_vertices(g: Graph, s: Iterable[int]) -> Relabeled:
    """
    Return the subgraph induced on the complement of s.

    Survivors are relabeled 0..n-|s|-1 in increasing original order.
    """
    removed = set()
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"Vertex {v} is outside 0..{g.n - 1}")
        removed.add(v)
    mapping: Dict[int, int] = {}
    for v in range(g.n):
        if v not in removed:
            mapping[v] = len(mapping)
    edges = tuple(
        (mapping[u], mapping[v]) for u, v in g.edges
        if u in mapping and v in mapping
    )
    return Relabeled(Graph(len(mapping), edges), mapping)


def disjoint_union(*graphs: Graph) -> Tuple[Graph, List[int]]:
    """Place graphs side by side; returns the union and each graph's id offset."""
    offsets: List[int] = []
    edges: List[Edge] = []
    total = 0
    for g in graphs:
        offsets.append(total)
        edges.extend((u + total, v + total) for u, v in g.edges)
        total += g.n
    return Graph(total, tuple(edges)), offsets


def induced_edges(g: Graph, vertices: Iterable[int]) -> Counter:
    """Multiset of edges of g with both endpoints inside `vertices`."""
    inside = set(vertices)
    return Counter(pair for pair in g.edges if pair[0] in inside and pair[1] in inside)


# ----------------------------------------------------------
# Common Small Graphs
# ----------------------------------------------------------
def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("A cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts {0..a-1} and {a..a+b-1}."""
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def k2_triple() -> Graph:
    """Two vertices joined by three parallel edges."""
    return Graph(2, ((0, 1), (0, 1), (0, 1)))


def prism_graph() -> Graph:
    """Triangular prism: triangles 0-1-2 and 3-4-5 with rungs i -- i+3."""
    return Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)))


# ----------------------------------------------------------
# Output and Interop
# ----------------------------------------------------------
def to_dot(g: Graph, labels: Optional[Mapping[int, str]] = None) -> str:
    """Render g as a DOT `graph` document with deterministic edge order."""
    labels = labels or {}
    lines = ["graph {"]
    for v in range(g.n):
        if v in labels:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in sorted(g.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_networkx(g: Graph, simple: bool = False) -> nx.Graph:
    """Convert to networkx; parallel edges collapse when simple=True."""
    result = nx.Graph() if simple else nx.MultiGraph()
    result.add_nodes_from(range(g.n))
    result.add_edges_from(g.edges)
    return result


def from_networkx(graph: nx.Graph) -> Graph:
    """Convert a networkx graph, relabeling nodes 0..n-1 in sorted order."""
    nodes = sorted(graph.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return Graph(len(nodes), tuple((index[u], index[v]) for u, v in graph.edges()))
