# ----------------------------------------------------------
# Domination Lab
# File: domlab/certification.py
# ----------------------------------------------------------
# Description:
# Compositional certificates for domination numbers.
#
# If H is an induced subgraph of G, X is the set of vertices of H
# with neighbors outside H, and gamma(H - V) = gamma(H) for every
# V within X, then every dominating set D of G has |D ∩ V(H)| >= gamma(H).
# Summing over disjoint stable occurrences (plus a packing bound on
# the uncovered residual vertices) gives a certified lower bound;
# a matching explicit dominating set closes the value.
#
# Responsibilities:
#   • check_stability: gamma(H - V) table over V within the attachment set
#   • compositional_lower_bound
#   • certified_gamma
#   • load_occurrences: the JSON occurrence sidecar used by `solve --certify`
# ----------------------------------------------------------

import json
import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from domlab.domination import (
    Certificate,
    DominationResult,
    SolveStatus,
    dominated_mask,
    gamma_bruteforce,
    gamma_exact,
    is_dominating,
)
from domlab.exceptions import CertificationError, ConstructionError, ValidationError
from domlab.gadgets import GadgetOccurrence, RootedGadget, resolve_gadget
from domlab.graph_core import Graph, delete_vertices, induced_edges
from domlab.lab_config import MAX_BRUTEFORCE_CAP

WitnessBuilder = Callable[[Graph, Sequence[GadgetOccurrence]], Sequence[int]]


# ==========================================================
# Stability
# ==========================================================
@dataclass
class StabilityReport:
    """gamma(H - V) for every V within the attachment set, keyed by sorted gadget ids."""
    gadget: str
    attachment: Tuple[int, ...]
    table: Dict[Tuple[int, ...], Optional[int]] = field(default_factory=dict)
    witness: Tuple[int, ...] = ()

    @property
    def gamma(self) -> Optional[int]:
        return self.table.get(())

    @property
    def complete(self) -> bool:
        return all(value is not None for value in self.table.values())

    @property
    def stable(self) -> Optional[bool]:
        """True / False when every entry is known, None when a solve ran out of budget."""
        known = [value for value in self.table.values() if value is not None]
        if known and any(value != self.gamma for value in known):
            return False
        return True if self.complete else None

    def labelled_table(self, labels: Dict[str, int]) -> Dict[str, Optional[int]]:
        """Table keyed by label names, e.g. '{p1,p2}'."""
        names = {v: name for name, v in labels.items()}
        result = {}
        for subset, value in self.table.items():
            text = ",".join(names.get(v, str(v)) for v in subset)
            result["{" + text + "}"] = value
        return result


_stability_cache: Dict[Tuple[str, int, int, Tuple[int, ...], str], StabilityReport] = {}


def clear_stability_cache() -> None:
    _stability_cache.clear()


def _subsets(items: Sequence[int]):
    for size in range(len(items) + 1):
        yield from combinations(items, size)


def _solve_deleted(h: RootedGadget, removed: Sequence[int], budget: Optional[float],
                   solver: str, cap: int) -> DominationResult:
    relabeled = delete_vertices(h.graph, removed)
    reduced = relabeled.graph
    if solver == "bruteforce":
        return gamma_bruteforce(reduced, cap)
    if h.parts:
        atoms = []
        for part in h.parts:
            if any(x in removed for x in part.embedding):
                continue
            atoms.append(GadgetOccurrence(part.gadget,
                                          tuple(relabeled.mapping[x] for x in part.embedding)))
        try:
            return certified_gamma(reduced, atoms, budget)
        except CertificationError as error:
            logging.warning(f"Composite stability solve for {h.key} fell back to search: {error}")
    return gamma_exact(reduced, budget)


def check_stability(h: RootedGadget, budget: Optional[float] = None,
                    attachment: Optional[Sequence[int]] = None,
                    solver: str = "exact", cap: int = MAX_BRUTEFORCE_CAP) -> StabilityReport:
    """
    Compute gamma(H - V) for every V within the attachment set
    (the gadget terminals by default).

    Gadgets with atomic parts are solved compositionally; a solve that
    runs out of budget leaves its entry as None.
    """
    if solver not in ("exact", "bruteforce"):
        raise ValidationError(f"Unknown solver method: {solver}")
    attach = tuple(sorted(set(h.terminals if attachment is None else attachment)))
    for x in attach:
        if not 0 <= x < h.n:
            raise ValidationError(f"Attachment vertex {x} is not a vertex of {h.key}")

    key = (h.key, h.graph.n, h.graph.m, attach, solver)
    cached = _stability_cache.get(key)
    if cached is not None:
        return cached

    report = StabilityReport(h.key, attach)
    for subset in _subsets(attach):
        result = _solve_deleted(h, subset, budget, solver, cap)
        report.table[subset] = result.gamma if result.optimal else None
        if not subset and result.optimal:
            report.witness = result.witness
    logging.info(f"Stability of {h.key} over {attach}: stable={report.stable}")
    if report.complete:
        _stability_cache[key] = report
    return report


# ==========================================================
# Compositional Lower Bound
# ==========================================================
@dataclass
class OccurrenceCheck:
    gadget: str
    gamma: int
    attachment: Tuple[int, ...]
    witness: Tuple[int, ...]


@dataclass
class CompositionalBound:
    """Certified lower bound with its parts: gadget sum plus residual packing."""
    lower_bound: int
    gadget_sum: int
    residual_bonus: int
    checks: List[OccurrenceCheck] = field(default_factory=list)
    residual: Tuple[int, ...] = ()


def attachment_set(g: Graph, occurrence: GadgetOccurrence) -> Tuple[int, ...]:
    """Gadget ids whose host image has a neighbor outside the image."""
    image = occurrence.image
    return tuple(
        x for x, v in enumerate(occurrence.embedding)
        if any(w not in image for w in g.adjacency[v])
    )


def _check_induced(g: Graph, occurrence: GadgetOccurrence, index: int) -> None:
    for v in occurrence.embedding:
        if not 0 <= v < g.n:
            raise CertificationError(f"Occurrence {index} maps to vertex {v} outside the host",
                                     index, "out-of-range")
    mapped = [
        tuple(sorted((occurrence.embedding[a], occurrence.embedding[b])))
        for a, b in occurrence.gadget.graph.edges
    ]
    if induced_edges(g, occurrence.embedding) != Counter(mapped):
        raise CertificationError(
            f"Occurrence {index} ({occurrence.gadget.key}) is not an induced copy of its gadget",
            index, "not-induced",
        )


def residual_packing(g: Graph, residual: Sequence[int]) -> List[int]:
    """Residual vertices whose closed neighborhoods lie in the residual and are pairwise disjoint."""
    inside = set(residual)
    used: set = set()
    picked = []
    for v in sorted(residual):
        closed = {v, *g.adjacency[v]}
        if closed <= inside and not closed & used:
            picked.append(v)
            used |= closed
    return picked


def compositional_lower_bound(g: Graph, occs: Sequence[GadgetOccurrence],
                              budget: Optional[float] = None) -> CompositionalBound:
    """
    Certified lower bound on gamma(g) from disjoint stable induced occurrences.

    Raises CertificationError naming the failing occurrence on overlap,
    a non-induced image, or an unstable (or undecided) gadget.
    """
    seen: Dict[int, int] = {}
    for index, occurrence in enumerate(occs):
        for v in occurrence.embedding:
            if v in seen:
                raise CertificationError(
                    f"Occurrences {seen[v]} and {index} overlap at vertex {v}", index, "overlap"
                )
            seen[v] = index

    checks: List[OccurrenceCheck] = []
    for index, occurrence in enumerate(occs):
        _check_induced(g, occurrence, index)
        attach = attachment_set(g, occurrence)
        report = check_stability(occurrence.gadget, budget, attachment=attach)
        if report.stable is None:
            raise CertificationError(
                f"Stability of occurrence {index} ({occurrence.gadget.key}) is undecided",
                index, "inconclusive",
            )
        if not report.stable:
            raise CertificationError(
                f"Occurrence {index} ({occurrence.gadget.key}) is not stable over {attach}",
                index, "unstable",
            )
        checks.append(OccurrenceCheck(occurrence.gadget.key, report.gamma, attach, report.witness))

    residual = tuple(v for v in range(g.n) if v not in seen)
    bonus = len(residual_packing(g, residual))
    total = sum(check.gamma for check in checks)
    return CompositionalBound(total + bonus, total, bonus, checks, residual)


# ==========================================================
# Certified Gamma
# ==========================================================
def _repair_with_forced(g: Graph, occs: Sequence[GadgetOccurrence],
                        parts: List[List[int]], checks: List[OccurrenceCheck],
                        budget: Optional[float]) -> None:
    """Re-solve occurrences with attachment vertices forced in, keeping same-size solutions."""
    owner = {}
    for index, occurrence in enumerate(occs):
        for x, v in enumerate(occurrence.embedding):
            owner[v] = (index, x)
    forced: Dict[int, List[int]] = {}
    covered = dominated_mask(g, [v for part in parts for v in part])
    for u in range(g.n):
        if covered >> u & 1:
            continue
        for w in g.adjacency[u]:
            if w not in owner or w == u:
                continue
            index, x = owner[w]
            if u in occs[index].image:
                continue
            attempt = sorted(set(forced.get(index, []) + [x]))
            result = gamma_exact(occs[index].gadget.graph, budget, forced=attempt)
            if result.optimal and result.gamma == checks[index].gamma:
                forced[index] = attempt
                parts[index] = [occs[index].embedding[y] for y in result.witness]
                covered = dominated_mask(g, [v for part in parts for v in part])
                break


def _greedy_complete(g: Graph, chosen: List[int]) -> List[int]:
    masks = g.closed_masks
    full = (1 << g.n) - 1
    covered = dominated_mask(g, chosen)
    result = list(chosen)
    while covered != full:
        best = max(range(g.n), key=lambda v: ((masks[v] & ~covered).bit_count(), -v))
        result.append(best)
        covered |= masks[best]
    return result


def build_witness(g: Graph, occs: Sequence[GadgetOccurrence], bound: CompositionalBound,
                  budget: Optional[float] = None) -> List[int]:
    """Union of per-occurrence minimum sets, repaired with forced terminals, then greedily completed."""
    parts = [
        [occurrence.embedding[x] for x in check.witness]
        for occurrence, check in zip(occs, bound.checks)
    ]
    union = sorted({v for part in parts for v in part})
    if is_dominating(g, union):
        return union
    _repair_with_forced(g, occs, parts, bound.checks, budget)
    union = sorted({v for part in parts for v in part})
    return sorted(set(_greedy_complete(g, union)))


def certified_gamma(g: Graph, occs: Sequence[GadgetOccurrence], budget: Optional[float] = None,
                    witness_builder: Optional[WitnessBuilder] = None) -> DominationResult:
    """
    gamma(g) from a compositional lower bound and an explicit witness.

    When the witness is larger than the bound the search falls back to
    gamma_exact, warm-started with the witness.
    """
    started = time.perf_counter()
    bound = compositional_lower_bound(g, occs, budget)

    witness: Optional[List[int]] = None
    if witness_builder is not None:
        candidate = sorted(set(witness_builder(g, occs)))
        if is_dominating(g, candidate):
            witness = candidate
    if witness is None or len(witness) > bound.lower_bound:
        built = build_witness(g, occs, bound, budget)
        if witness is None or len(built) < len(witness):
            witness = built

    notes = (f"gadget sum {bound.gadget_sum}, residual packing {bound.residual_bonus}",)
    if len(witness) == bound.lower_bound:
        runtime = time.perf_counter() - started
        logging.info(f"Certified gamma={len(witness)} on {g!r} compositionally")
        return DominationResult(len(witness), tuple(witness), bound.lower_bound, len(witness),
                                Certificate.COMPOSITIONAL, SolveStatus.OPTIMAL, g.n,
                                runtime=runtime, notes=notes)

    logging.info(
        f"Compositional gap on {g!r}: {bound.lower_bound} < {len(witness)}; running branch and bound"
    )
    exact = gamma_exact(g, budget, upper_hint=witness)
    runtime = time.perf_counter() - started
    if exact.optimal:
        return DominationResult(exact.gamma, exact.witness, exact.gamma, exact.gamma,
                                Certificate.BRANCH_AND_BOUND, SolveStatus.OPTIMAL, g.n,
                                exact.nodes, runtime, notes)
    lower = max(bound.lower_bound, exact.lower_bound)
    status = SolveStatus.TIMEOUT
    return DominationResult(exact.upper_bound, exact.witness, lower, exact.upper_bound,
                            Certificate.BOUNDS_ONLY, status, g.n, exact.nodes, runtime, notes)


# ==========================================================
# Occurrence Sidecar
# ==========================================================
def occurrence_from_dict(data: Dict[str, Any]) -> GadgetOccurrence:
    try:
        gadget = resolve_gadget(str(data["gadget"]), data.get("params"))
        embedding = tuple(int(v) for v in data["embedding"])
    except (KeyError, TypeError, ValueError) as error:
        raise ValidationError(f"Malformed occurrence entry {data!r}: {error}")
    return GadgetOccurrence(gadget, embedding)


def occurrence_to_dict(occurrence: GadgetOccurrence) -> Dict[str, Any]:
    return {
        "gadget": occurrence.gadget.name,
        "params": dict(occurrence.gadget.params),
        "embedding": list(occurrence.embedding),
    }


def load_occurrences(path: Union[str, Path], encoding: str = "utf-8") -> List[GadgetOccurrence]:
    """Read {"occurrences": [{"gadget", "params", "embedding"}, ...]}."""
    try:
        data = json.loads(Path(path).read_text(encoding=encoding))
    except (OSError, json.JSONDecodeError) as error:
        raise ValidationError(f"Cannot read occurrence file {path}: {error}")
    entries = data.get("occurrences") if isinstance(data, dict) else None
    if not isinstance(entries, list):
        raise ValidationError(f"Occurrence file {path} needs an 'occurrences' list")
    try:
        return [occurrence_from_dict(entry) for entry in entries]
    except ConstructionError as error:
        raise ValidationError(f"Occurrence file {path}: {error}")


def save_occurrences(occs: Sequence[GadgetOccurrence], path: Union[str, Path],
                     encoding: str = "utf-8") -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(
        json.dumps({"occurrences": [occurrence_to_dict(o) for o in occs]}, indent=2),
        encoding=encoding,
    )
    return target
