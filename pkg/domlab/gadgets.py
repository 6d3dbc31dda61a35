# ----------------------------------------------------------
# Domination Lab
# File: domlab/gadgets.py
# ----------------------------------------------------------
# Description:
# Rooted gadgets and the operations that build and splice them:
#   • RootedGadget / GadgetPart / GadgetOccurrence value types
#   • replace_edge and replace_vertex splicing into a host graph
#   • the four doubling operators op_T1, op_T2, op_F2, op_F3
#   • the gadget catalog (A, B, S, T, P, Q, P', W) built through a
#     registry decorator, plus the recursive P^i / Q^i families
#
# Named vertices (a1, p1, z1, ...) live in each gadget's `labels`
# side table; the Graph itself stays label-free.
# ----------------------------------------------------------

from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Dict, List, Mapping, NamedTuple, Optional, Tuple

from domlab.exceptions import ConstructionError, GraphError
from domlab.graph_core import Graph, complete_bipartite, subdivide_edge

MAX_RECURSION_LEVEL = 6


# ==========================================================
# Value Types
# ==========================================================
@dataclass(frozen=True, eq=False)
class RootedGadget:
    """
    A graph with an ordered list of terminal vertices.

    `parts` optionally decomposes the gadget into stable atomic gadgets
    (each with an embedding into this gadget's vertex ids); an empty
    tuple means the gadget is its own atom.
    """

    name: str
    graph: Graph
    terminals: Tuple[int, ...]
    labels: Mapping[str, int] = field(default_factory=dict)
    parts: Tuple["GadgetPart", ...] = ()
    params: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        terminals = tuple(int(t) for t in self.terminals)
        if not 1 <= len(terminals) <= 4:
            raise ConstructionError(
                f"Gadget {self.name} needs 1 to 4 terminals, got {len(terminals)}"
            )
        if len(set(terminals)) != len(terminals):
            raise ConstructionError(f"Gadget {self.name} has repeated terminals")
        for t in terminals:
            if not 0 <= t < self.graph.n:
                raise ConstructionError(f"Terminal {t} is not a vertex of {self.name}")
        object.__setattr__(self, "terminals", terminals)
        object.__setattr__(self, "labels", dict(self.labels))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def key(self) -> str:
        """Stable identifier used for caching and reports, e.g. 'P(i=2)'."""
        if not self.params:
            return self.name
        args = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.name}({args})"

    def atoms(self) -> Tuple["GadgetPart", ...]:
        """Atomic parts with embeddings into this gadget."""
        if self.parts:
            return self.parts
        return (GadgetPart(self, tuple(range(self.graph.n))),)

    def renamed(self, name: str, labels: Optional[Mapping[str, int]] = None,
                atomic: bool = False, params: Tuple[Tuple[str, int], ...] = ()) -> "RootedGadget":
        merged = dict(self.labels)
        merged.update(labels or {})
        return replace(self, name=name, labels=merged,
                       parts=() if atomic else self.parts, params=params)

    def __repr__(self) -> str:
        return f"RootedGadget({self.key}, n={self.graph.n}, terminals={self.terminals})"


class GadgetPart(NamedTuple):
    """An atomic gadget placed inside a larger gadget."""
    gadget: RootedGadget
    embedding: Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class GadgetOccurrence:
    """A gadget embedded into a host graph: embedding[x] is the host id of gadget vertex x."""

    gadget: RootedGadget
    embedding: Tuple[int, ...]

    def __post_init__(self):
        embedding = tuple(int(v) for v in self.embedding)
        if len(embedding) != self.gadget.graph.n:
            raise ConstructionError(
                f"Embedding of {self.gadget.key} lists {len(embedding)} vertices, "
                f"expected {self.gadget.graph.n}"
            )
        if len(set(embedding)) != len(embedding):
            raise ConstructionError(f"Embedding of {self.gadget.key} is not injective")
        object.__setattr__(self, "embedding", embedding)

    @property
    def image(self) -> frozenset:
        return frozenset(self.embedding)

    def remap(self, mapping: Mapping[int, int]) -> "GadgetOccurrence":
        """Follow a host relabeling (e.g. after a vertex replacement)."""
        return GadgetOccurrence(self.gadget, tuple(mapping[v] for v in self.embedding))

    def atoms(self) -> List["GadgetOccurrence"]:
        """Split into occurrences of the gadget's atomic parts."""
        return [
            GadgetOccurrence(part.gadget, tuple(self.embedding[x] for x in part.embedding))
            for part in self.gadget.atoms()
        ]


class Replacement(NamedTuple):
    """Result of a splice: new graph, gadget vertex -> host id, old host id -> new id."""
    graph: Graph
    gadget_map: Tuple[int, ...]
    host_map: Dict[int, int]


# ==========================================================
# Splicing
# ==========================================================
def _require_terminals(h: RootedGadget, count: int, purpose: str) -> None:
    if len(h.terminals) != count:
        raise ConstructionError(
            f"{purpose} needs a gadget with {count} terminals, "
            f"{h.key} has {len(h.terminals)}"
        )


def replace_edge(g: Graph, e: int, h: RootedGadget) -> Replacement:
    """
    Replace edge occurrence e = {v1, v2} by a copy of h.

    h1 is identified with the lower endpoint and h2 with the higher one.
    Host vertex ids are unchanged; the other gadget vertices are appended
    from g.n in increasing gadget order. Edge e is removed (later edge
    indices shift down by one) and the gadget's edges are appended.
    """
    _require_terminals(h, 2, "Edge replacement")
    v1, v2 = g.edge(e)
    h1, h2 = h.terminals
    gadget_map: List[int] = [0] * h.graph.n
    next_id = g.n
    for x in range(h.graph.n):
        if x == h1:
            gadget_map[x] = v1
        elif x == h2:
            gadget_map[x] = v2
        else:
            gadget_map[x] = next_id
            next_id += 1
    edges = list(g.edges[:e]) + list(g.edges[e + 1:])
    edges.extend((gadget_map[a], gadget_map[b]) for a, b in h.graph.edges)
    host_map = {v: v for v in range(g.n)}
    return Replacement(Graph(next_id, tuple(edges)), tuple(gadget_map), host_map)


def replace_vertex(g: Graph, v: int, u: RootedGadget) -> Replacement:
    """
    Replace a degree-3 vertex v by a copy of u.

    The neighbor slots of v are listed in increasing order (with
    multiplicity) and terminal u_i is joined to the i-th slot. Vertex v
    disappears, host ids above v shift down by one, and the gadget is
    appended at ids g.n - 1 + x.
    """
    _require_terminals(u, 3, "Vertex replacement")
    if not 0 <= v < g.n:
        raise GraphError(f"Vertex {v} is outside 0..{g.n - 1}")
    slots = g.adjacency[v]
    if len(slots) != 3:
        raise ConstructionError(f"Vertex replacement needs degree 3, vertex {v} has {len(slots)}")

    host_map = {w: (w if w < v else w - 1) for w in range(g.n) if w != v}
    base = g.n - 1
    gadget_map = tuple(base + x for x in range(u.graph.n))
    edges = [(host_map[a], host_map[b]) for a, b in g.edges if v not in (a, b)]
    edges.extend((gadget_map[a], gadget_map[b]) for a, b in u.graph.edges)
    for terminal, neighbor in zip(u.terminals, slots):
        edges.append((gadget_map[terminal], host_map[neighbor]))
    return Replacement(Graph(base + u.graph.n, tuple(edges)), gadget_map, host_map)


# ==========================================================
# Doubling Operators
# ==========================================================
class _Doubled(NamedTuple):
    edges: List[Tuple[int, int]]
    x: Tuple[int, int]
    y: Tuple[int, int]
    n: int
    parts: Tuple[GadgetPart, ...]


def _double(h: RootedGadget, purpose: str) -> _Doubled:
    """Two disjoint copies X (ids 0..v-1) and Y (ids v..2v-1) of h."""
    _require_terminals(h, 2, purpose)
    n = h.graph.n
    edges = list(h.graph.edges) + [(a + n, b + n) for a, b in h.graph.edges]
    h1, h2 = h.terminals
    parts = []
    for offset in (0, n):
        for part in h.atoms():
            parts.append(GadgetPart(part.gadget, tuple(x + offset for x in part.embedding)))
    return _Doubled(edges, (h1, h2), (h1 + n, h2 + n), 2 * n, tuple(parts))


def op_T1(h: RootedGadget) -> RootedGadget:
    """X ∪ Y plus x1-z1-y1 and x2-y2; terminal z1."""
    d = _double(h, "op_T1")
    z1 = d.n
    edges = d.edges + [(d.x[0], z1), (z1, d.y[0]), (d.x[1], d.y[1])]
    return RootedGadget(f"T1({h.key})", Graph(d.n + 1, tuple(edges)), (z1,),
                        {"z1": z1}, d.parts)


def op_T2(h: RootedGadget) -> RootedGadget:
    """X ∪ Y plus x1-z1-y1 and x2-z2-y2; terminals z1, z2."""
    d = _double(h, "op_T2")
    z1, z2 = d.n, d.n + 1
    edges = d.edges + [(d.x[0], z1), (z1, d.y[0]), (d.x[1], z2), (z2, d.y[1])]
    return RootedGadget(f"T2({h.key})", Graph(d.n + 2, tuple(edges)), (z1, z2),
                        {"z1": z1, "z2": z2}, d.parts)


def _f2_edges(d: _Doubled) -> Tuple[List[Tuple[int, int]], Dict[str, int]]:
    z1, z2, x, y = d.n, d.n + 1, d.n + 2, d.n + 3
    edges = d.edges + [
        (d.x[0], x), (x, z1),
        (d.y[0], y), (y, z1),
        (d.x[1], z2), (z2, d.y[1]),
        (z1, z2),
    ]
    return edges, {"z1": z1, "z2": z2, "x": x, "y": y}


def op_F2(h: RootedGadget) -> RootedGadget:
    """T2's frame plus z1-z2, with x1-z1 and y1-z1 subdivided by x and y; terminals x, y."""
    d = _double(h, "op_F2")
    edges, labels = _f2_edges(d)
    return RootedGadget(f"F2({h.key})", Graph(d.n + 4, tuple(edges)),
                        (labels["x"], labels["y"]), labels, d.parts)


def op_F3(h: RootedGadget) -> RootedGadget:
    """F2 with z1-z2 subdivided by z; terminals x, y, z."""
    d = _double(h, "op_F3")
    edges, labels = _f2_edges(d)
    g, z = subdivide_edge(Graph(d.n + 4, tuple(edges)), len(edges) - 1)
    labels["z"] = z
    return RootedGadget(f"F3({h.key})", g, (labels["x"], labels["y"], z), labels, d.parts)


# ==========================================================
# Gadget Catalog (registry)
# ==========================================================
_gadget_registry: Dict[str, Callable[[], RootedGadget]] = {}


def register_gadget(name: str) -> Callable:
    """
    Decorator registering a catalog gadget builder.
    Example:
        @register_gadget("A")
        def _gadget_a() -> RootedGadget: ...
    """
    def decorator(builder: Callable[[], RootedGadget]) -> Callable[[], RootedGadget]:
        _gadget_registry[name] = lru_cache(maxsize=None)(builder)
        return builder
    return decorator


def list_gadgets() -> List[str]:
    return list(_gadget_registry)


def gadget_catalog(name: str) -> RootedGadget:
    """Return the named catalog gadget (A, B, S, T, P, Q, P', W)."""
    aliases = {"P'": "P'", "Pp": "P'", "P_prime": "P'", "p'": "P'"}
    key = aliases.get(name, name)
    builder = _gadget_registry.get(key) or _gadget_registry.get(key.upper())
    if builder is None:
        raise ConstructionError(
            f"Unknown gadget: {name}. Available: {', '.join(list_gadgets())}"
        )
    return builder()


def _subdivided_k33(count: int) -> Tuple[Graph, List[int]]:
    """K3,3 (parts {0,1,2}, {3,4,5}) with edges 0-3, 0-4, 0-5 subdivided in order."""
    g = complete_bipartite(3, 3)
    new = []
    for index in range(count):
        g, w = subdivide_edge(g, index)
        new.append(w)
    return g, new


@register_gadget("A")
def _gadget_a() -> RootedGadget:
    g, (a1, a2) = _subdivided_k33(2)
    return RootedGadget("A", g, (a1, a2), {"a1": a1, "a2": a2})


@register_gadget("B")
def _gadget_b() -> RootedGadget:
    g, (b1, b2, b3) = _subdivided_k33(3)
    return RootedGadget("B", g, (b1, b2, b3), {"b1": b1, "b2": b2, "b3": b3})


@register_gadget("S")
def _gadget_s() -> RootedGadget:
    t1 = op_T1(gadget_catalog("A"))
    return t1.renamed("S", {"s": t1.terminals[0]}, atomic=True)


@register_gadget("T")
def _gadget_t() -> RootedGadget:
    t2 = op_T2(gadget_catalog("A"))
    return t2.renamed("T", {"t1": t2.terminals[0], "t2": t2.terminals[1]}, atomic=True)


@register_gadget("P")
def _gadget_p() -> RootedGadget:
    f2 = op_F2(gadget_catalog("A"))
    return f2.renamed("P", {"p1": f2.terminals[0], "p2": f2.terminals[1]}, atomic=True)


@register_gadget("Q")
def _gadget_q() -> RootedGadget:
    f3 = op_F3(gadget_catalog("A"))
    q1, q2, q3 = f3.terminals
    return f3.renamed("Q", {"q1": q1, "q2": q2, "q3": q3}, atomic=True)


@register_gadget("P'")
def _gadget_p_prime() -> RootedGadget:
    p = gadget_catalog("P")
    p1, p2 = p.terminals
    pp1, pp2 = p.n, p.n + 1
    g = Graph(p.n + 2, p.graph.edges + ((p1, pp1), (p2, pp2)))
    labels = dict(p.labels)
    labels.update({"p'1": pp1, "p'2": pp2})
    core = GadgetPart(p, tuple(range(p.n)))
    return RootedGadget("P'", g, (pp1, pp2), labels, (core,))


@register_gadget("W")
def _gadget_w() -> RootedGadget:
    # square t1 s1 t2 s2 plus the path s1 p1 p2 s2
    t1, s1, t2, s2, p1, p2 = range(6)
    g = Graph(6, ((t1, s1), (s1, t2), (t2, s2), (s2, t1), (s1, p1), (p1, p2), (p2, s2)))
    labels = {"t1": t1, "s1": s1, "t2": t2, "s2": s2, "p1": p1, "p2": p2}
    return RootedGadget("W", g, (t1, t2, p1, p2), labels)


# ==========================================================
# Recursive Families P^i and Q^i
# ==========================================================
def _check_level(i: int, name: str) -> int:
    if not isinstance(i, int) or isinstance(i, bool) or i < 1:
        raise ConstructionError(f"{name} needs i >= 1, got {i}")
    if i > MAX_RECURSION_LEVEL:
        raise ConstructionError(f"{name} is capped at i <= {MAX_RECURSION_LEVEL}")
    return i


@lru_cache(maxsize=None)
def gadget_P_i(i: int) -> RootedGadget:
    """P^1 = P and P^(i+1) = F2(P^i); v(P^i) = 3 * 2^(i+2) - 4."""
    _check_level(i, "gadget_P_i")
    if i == 1:
        return gadget_catalog("P").renamed("P", params=(("i", 1),))
    built = op_F2(gadget_P_i(i - 1))
    return built.renamed("P", {"p1": built.terminals[0], "p2": built.terminals[1]},
                         params=(("i", i),))


@lru_cache(maxsize=None)
def gadget_Q_i(i: int) -> RootedGadget:
    """Q^1 = Q and Q^i = F3(P^(i-1)) for i >= 2; v(Q^i) = v(P^i) + 1."""
    _check_level(i, "gadget_Q_i")
    if i == 1:
        return gadget_catalog("Q").renamed("Q", params=(("i", 1),))
    built = op_F3(gadget_P_i(i - 1))
    q1, q2, q3 = built.terminals
    return built.renamed("Q", {"q1": q1, "q2": q2, "q3": q3}, params=(("i", i),))


def resolve_gadget(name: str, params: Optional[Mapping[str, int]] = None) -> RootedGadget:
    """Look a gadget up by catalog name, or by P/Q plus an `i` parameter."""
    params = dict(params or {})
    if "i" in params and name in ("P", "Pi", "Q", "Qi"):
        level = int(params["i"])
        return gadget_P_i(level) if name.startswith("P") else gadget_Q_i(level)
    if params:
        raise ConstructionError(f"Gadget {name} takes no parameters, got {params}")
    return gadget_catalog(name)


def gadget_vertex_count(kind: str, i: int) -> int:
    """Closed-form vertex count of P^i or Q^i."""
    base = 3 * 2 ** (i + 2) - 4
    return base if kind == "P" else base + 1
