# ----------------------------------------------------------
# Domination Lab
# File: domlab/domination.py
# ----------------------------------------------------------
# Description:
# Exact minimum dominating sets.
#
# Responsibilities:
#   • DominationResult: value, witness, bounds, certificate, status
#   • is_dominating
#   • gamma_bruteforce: subset enumeration oracle (n <= 26)
#   • gamma_exact: budgeted branch-and-bound over closed neighborhoods
#   • gamma_deleted: gamma of H - V
#
# Vertex sets are handled as integer bitmasks internally; closed
# neighborhoods come from Graph.closed_masks.
# ----------------------------------------------------------

import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from domlab.exceptions import SolverError, ValidationError
from domlab.graph_core import Graph, as_vertex_set, delete_vertices
from domlab.lab_config import MAX_BRUTEFORCE_CAP

CHECK_INTERVAL = 1024


class Certificate(str, Enum):
    BRUTE_FORCE = "brute-force"
    BRANCH_AND_BOUND = "branch-and-bound"
    COMPOSITIONAL = "compositional"
    BOUNDS_ONLY = "bounds-only"


class SolveStatus(str, Enum):
    OPTIMAL = "optimal"
    BOUNDED = "bounded"
    TIMEOUT = "timeout"


def format_fraction(value: Fraction) -> str:
    """Exact rational as 'p/q' (integers stay 'p')."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ==========================================================
# Dataclass: DominationResult
# ==========================================================
@dataclass(frozen=True)
class DominationResult:
    """
    Outcome of a domination solve.

    `gamma` is the best value found; for non-optimal results it equals
    upper_bound. `ratio` is gamma / n as an exact Fraction.
    """

    gamma: int
    witness: Tuple[int, ...]
    lower_bound: int
    upper_bound: int
    certificate: Certificate
    status: SolveStatus
    n: int
    nodes: int = 0
    runtime: float = 0.0
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not self.lower_bound <= self.gamma <= self.upper_bound:
            raise SolverError(
                f"Inconsistent bounds: {self.lower_bound} <= {self.gamma} <= {self.upper_bound}"
            )
        if self.status is SolveStatus.OPTIMAL and not (
            self.lower_bound == self.upper_bound == self.gamma == len(self.witness)
        ):
            raise SolverError("An optimal result needs matching bounds and witness size")

    @property
    def optimal(self) -> bool:
        return self.status is SolveStatus.OPTIMAL

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.gamma, self.n) if self.n else Fraction(0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "gamma": self.gamma,
            "witness": list(self.witness),
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "certificate": self.certificate.value,
            "status": self.status.value,
            "ratio": format_fraction(self.ratio),
            "nodes": self.nodes,
            "runtime_s": round(self.runtime, 6),
            "notes": list(self.notes),
        }


# ----------------------------------------------------------
# Bitmask Helpers
# ----------------------------------------------------------
def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def dominated_mask(g: Graph, d: Iterable[int]) -> int:
    """Bitmask of the vertices dominated by d."""
    masks = g.closed_masks
    covered = 0
    for v in d:
        covered |= masks[v]
    return covered


def undominated(g: Graph, d: Iterable[int]) -> List[int]:
    full = (1 << g.n) - 1
    return list(_bits(full & ~dominated_mask(g, d)))


def is_dominating(g: Graph, d: Iterable[int]) -> bool:
    """True iff every vertex outside d has a neighbor in d."""
    members = as_vertex_set(g, d)
    return dominated_mask(g, members) == (1 << g.n) - 1


# ==========================================================
# Brute-force Oracle
# ==========================================================
def gamma_bruteforce(g: Graph, cap: int = MAX_BRUTEFORCE_CAP) -> DominationResult:
    """
    Exact gamma by enumerating subsets in increasing size.

    Only subsets containing a vertex of N[0] are tried, since vertex 0
    must be dominated. Raises SolverError above the vertex cap.
    """
    if g.n > cap:
        raise SolverError(f"Brute force is capped at {cap} vertices, graph has {g.n}")
    started = time.perf_counter()
    full = (1 << g.n) - 1
    masks = g.closed_masks
    tried = 0
    if g.n == 0:
        return DominationResult(0, (), 0, 0, Certificate.BRUTE_FORCE, SolveStatus.OPTIMAL, 0)
    first = set(_bits(masks[0]))
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            if first.isdisjoint(combo):
                continue
            tried += 1
            covered = 0
            for v in combo:
                covered |= masks[v]
            if covered == full:
                runtime = time.perf_counter() - started
                return DominationResult(size, combo, size, size, Certificate.BRUTE_FORCE,
                                        SolveStatus.OPTIMAL, g.n, tried, runtime)
    raise SolverError("unreachable: the full vertex set always dominates")  # pragma: no cover


# ==========================================================
# Branch and Bound
# ==========================================================
class _BudgetExhausted(Exception):
    pass


def greedy_dominating_set(g: Graph, start: Iterable[int] = ()) -> List[int]:
    """Extend `start` by repeatedly adding the vertex covering most undominated vertices."""
    chosen = list(dict.fromkeys(start))
    masks = g.closed_masks
    full = (1 << g.n) - 1
    covered = dominated_mask(g, chosen)
    while covered != full:
        best, gain = -1, -1
        for v in range(g.n):
            count = (masks[v] & ~covered).bit_count()
            if count > gain:
                best, gain = v, count
        chosen.append(best)
        covered |= masks[best]
    return chosen


class _BranchAndBound:
    """
    Search state for gamma_exact.

    Branching picks the undominated vertex u with the fewest allowed
    candidates in N[u] (ties by lowest id) and tries candidates in
    increasing id; a candidate tried in one branch is excluded from the
    later sibling branches.
    """

    def __init__(self, g: Graph, deadline: Optional[float], node_limit: Optional[int]):
        self.g = g
        self.masks = g.closed_masks
        self.full = (1 << g.n) - 1
        self.deadline = deadline
        self.node_limit = node_limit
        self.nodes = 0
        self.best: List[int] = []
        self.best_size = g.n + 1

    def _tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _BudgetExhausted
        if self.deadline is not None and self.nodes % CHECK_INTERVAL == 0:
            if time.monotonic() > self.deadline:
                raise _BudgetExhausted

    def lower_bound(self, open_mask: int, allowed: int) -> int:
        """Bound on extra vertices needed to dominate open_mask using allowed vertices."""
        if not open_mask:
            return 0
        masks = self.masks
        cover = 0
        for w in _bits(allowed):
            c = (masks[w] & open_mask).bit_count()
            if c > cover:
                cover = c
        if cover == 0:
            return self.g.n + 1
        size = open_mask.bit_count()
        by_cover = -(-size // cover)
        # undominated vertices with pairwise disjoint candidate sets each need their own vertex
        used = 0
        packing = 0
        for u in _bits(open_mask):
            candidates = masks[u] & allowed
            if not candidates & used:
                used |= candidates
                packing += 1
        return max(by_cover, packing)

    def search(self, chosen: List[int], covered: int, allowed: int) -> None:
        self._tick()
        open_mask = self.full & ~covered
        if not open_mask:
            if len(chosen) < self.best_size:
                self.best = list(chosen)
                self.best_size = len(chosen)
            return
        if len(chosen) + self.lower_bound(open_mask, allowed) >= self.best_size:
            return

        masks = self.masks
        branch_u, branch_candidates, fewest = -1, 0, self.g.n + 2
        for u in _bits(open_mask):
            candidates = masks[u] & allowed
            count = candidates.bit_count()
            if count < fewest:
                branch_u, branch_candidates, fewest = u, candidates, count
                if count <= 1:
                    break
        if fewest == 0:
            return

        remaining = allowed
        for w in _bits(branch_candidates):
            chosen.append(w)
            self.search(chosen, covered | masks[w], remaining & ~(1 << w))
            chosen.pop()
            remaining &= ~(1 << w)
            if len(chosen) + 1 >= self.best_size:
                break


def gamma_exact(g: Graph, budget: Optional[float] = None, node_limit: Optional[int] = None,
                upper_hint: Optional[Sequence[int]] = None,
                forced: Iterable[int] = ()) -> DominationResult:
    """
    Minimum dominating set by branch and bound.

    `budget` is wall-clock seconds, `node_limit` caps search nodes.
    `upper_hint` is a known dominating set used as the initial incumbent.
    With `forced` vertices the search is restricted to dominating sets
    that contain them. Budget exhaustion returns status TIMEOUT with the
    best bounds found; it is never raised.
    """
    if budget is not None and budget <= 0:
        raise ValidationError("Solver budget must be positive")
    started = time.perf_counter()
    forced_set = sorted(as_vertex_set(g, forced))
    if g.n == 0:
        return DominationResult(0, (), 0, 0, Certificate.BRANCH_AND_BOUND, SolveStatus.OPTIMAL, 0)

    deadline = time.monotonic() + budget if budget is not None else None
    solver = _BranchAndBound(g, deadline, node_limit)

    incumbent = greedy_dominating_set(g, forced_set)
    if upper_hint is not None:
        hint = list(dict.fromkeys(list(forced_set) + list(upper_hint)))
        if is_dominating(g, hint) and len(hint) < len(incumbent):
            incumbent = hint
    solver.best = sorted(incumbent)
    solver.best_size = len(incumbent)

    covered = dominated_mask(g, forced_set)
    allowed = solver.full & ~_mask_of(forced_set)
    root_bound = len(forced_set) + solver.lower_bound(solver.full & ~covered, allowed)
    root_bound = min(root_bound, solver.best_size)

    logging.info(f"gamma_exact start on {g!r}: incumbent {solver.best_size}, root bound {root_bound}")
    try:
        solver.search(list(forced_set), covered, allowed)
    except _BudgetExhausted:
        runtime = time.perf_counter() - started
        logging.warning(
            f"gamma_exact budget exhausted on {g!r} after {solver.nodes} nodes: "
            f"{root_bound} <= gamma <= {solver.best_size}"
        )
        return DominationResult(solver.best_size, tuple(sorted(solver.best)), root_bound,
                                solver.best_size, Certificate.BOUNDS_ONLY, SolveStatus.TIMEOUT,
                                g.n, solver.nodes, runtime)

    runtime = time.perf_counter() - started
    witness = tuple(sorted(solver.best))
    if not is_dominating(g, witness):
        raise SolverError("branch and bound produced a non-dominating witness")
    logging.info(f"gamma_exact done on {g!r}: gamma={len(witness)} nodes={solver.nodes}")
    return DominationResult(len(witness), witness, len(witness), len(witness),
                            Certificate.BRANCH_AND_BOUND, SolveStatus.OPTIMAL, g.n,
                            solver.nodes, runtime)


def gamma_deleted(g: Graph, v: Iterable[int], budget: Optional[float] = None,
                  method: str = "exact", cap: int = MAX_BRUTEFORCE_CAP) -> DominationResult:
    """gamma(g - v); the witness uses the relabeled ids of the smaller graph."""
    reduced = delete_vertices(g, as_vertex_set(g, v)).graph
    if method == "bruteforce":
        return gamma_bruteforce(reduced, cap)
    if method != "exact":
        raise ValidationError(f"Unknown solver method: {method}")
    return gamma_exact(reduced, budget)


def solve(g: Graph, budget: Optional[float] = None, method: str = "exact",
          cap: int = MAX_BRUTEFORCE_CAP) -> DominationResult:
    """Dispatch to gamma_exact or gamma_bruteforce by name; `cap` bounds brute force."""
    if method == "exact":
        return gamma_exact(g, budget)
    if method == "bruteforce":
        return gamma_bruteforce(g, cap)
    raise ValidationError(f"Unknown solver method: {method}")
