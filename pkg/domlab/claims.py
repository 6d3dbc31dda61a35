# ----------------------------------------------------------
# Domination Lab
# File: domlab/claims.py
# ----------------------------------------------------------
# Description:
# Claim registry. Each claim is a frozen id, the statement it checks,
# an expected-values block and a check function that computes the
# same keys from freshly built graphs.
#
# Claims are registered with the @register_claim decorator (or by
# calling it in a loop for parameterised families), so new claims
# show up in `verify`, in the help epilog and in reports without
# touching the runner.
#
# Status rules:
#   • any computed value that differs from the expected one → fail
#   • otherwise any value left undecided (None)              → inconclusive
#   • otherwise                                              → pass
# Only integers, booleans, strings and exact "p/q" rationals are compared.
# ----------------------------------------------------------

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor, TimeoutError as FutureTimeout
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from itertools import combinations
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from domlab.analysis import (
    DEFAULT_HAMILTON_BUDGET,
    bridges,
    hamiltonian_cycle,
    is_cubic,
    is_cyclically_4_edge_connected,
    validate_cyclic_cut,
    vertex_connectivity,
)
from domlab.certification import certified_gamma, check_stability
from domlab.domination import (
    DominationResult,
    format_fraction,
    gamma_exact,
)
from domlab.exceptions import CertificationError, ClaimError, DomlabError
from domlab.families import (
    Construction,
    base_graph,
    build_GB,
    build_GP,
    build_GPB,
    build_L,
    build_M,
    build_N,
    build_R,
    generalized_petersen,
)
from domlab.gadgets import (
    GadgetOccurrence,
    RootedGadget,
    gadget_catalog,
    gadget_P_i,
    gadget_Q_i,
)
from domlab.graph6 import write_graph6
from domlab.graph_core import Graph
from domlab.lab_config import MAX_BRUTEFORCE_CAP, LabConfig
from domlab.records import ClaimReport, ClaimStatus

CheckFn = Callable[["ClaimContext"], Dict[str, Any]]

# Smallest time slice handed to a solver once a claim's budget is spent.
MIN_SLICE = 0.001

# Connectivity-one counterexample from earlier work, kept as constants
# for ratio comparisons only: 60 vertices, domination number 21.
LITERATURE_C_VERTICES = 60
LITERATURE_C_GAMMA = 21
RATIO_C = Fraction(LITERATURE_C_GAMMA, LITERATURE_C_VERTICES)


# ==========================================================
# Registry Types
# ==========================================================
@dataclass
class ClaimContext:
    """Per-claim budget and the instances a failing report should embed."""
    budget: float
    hamilton_budget: int = DEFAULT_HAMILTON_BUDGET
    bruteforce_cap: int = MAX_BRUTEFORCE_CAP
    started: float = field(default_factory=time.monotonic)
    instances: Dict[str, str] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def left(self) -> float:
        """Seconds left in this claim's budget."""
        return max(self.budget - (time.monotonic() - self.started), MIN_SLICE)

    def record(self, name: str, g: Graph) -> None:
        """Keep a reproducible encoding of an instance."""
        if g.is_simple():
            self.instances[name] = write_graph6(g)
        else:
            self.instances[name] = "edges:" + ",".join(f"{u}-{v}" for u, v in g.edges)


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    citation: str
    quote: str
    expected: Dict[str, Any]
    check: CheckFn
    stretch: bool = False
    notes: Tuple[str, ...] = ()


_claim_registry: Dict[str, ClaimSpec] = {}


def register_claim(claim_id: str, citation: str, quote: str, expected: Dict[str, Any],
                   stretch: bool = False, notes: Sequence[str] = ()) -> Callable[[CheckFn], CheckFn]:
    """
    Decorator registering a claim check.
    Example:
        @register_claim("GP72", "generalized Petersen (7,2)", "...", {"v": 14})
        def _check_gp72(ctx): ...
    """
    def decorator(check: CheckFn) -> CheckFn:
        if claim_id in _claim_registry:
            raise ClaimError(f"Claim {claim_id} is registered twice")
        _claim_registry[claim_id] = ClaimSpec(claim_id, citation, quote, dict(expected),
                                              check, stretch, tuple(notes))
        return check
    return decorator


def list_claims(include_stretch: bool = False) -> List[str]:
    return [cid for cid, spec in _claim_registry.items() if include_stretch or not spec.stretch]


def get_claim(claim_id: str) -> ClaimSpec:
    spec = _claim_registry.get(claim_id)
    if spec is None:
        raise ClaimError(f"Unknown claim id: {claim_id}")
    return spec


def select_claims(selection: Union[str, Iterable[str], None] = "all") -> List[ClaimSpec]:
    """
    Resolve 'all' (every non-stretch claim), 'stretch' (only stretch
    claims), or a comma list / iterable of ids.
    """
    if selection is None or selection == "all":
        return [_claim_registry[cid] for cid in list_claims()]
    if selection == "stretch":
        return [spec for spec in _claim_registry.values() if spec.stretch]
    if isinstance(selection, str):
        ids = [part.strip() for part in selection.split(",") if part.strip()]
    else:
        ids = list(selection)
    if not ids:
        raise ClaimError("Empty claim selection")
    return [get_claim(cid) for cid in dict.fromkeys(ids)]


# ==========================================================
# Evaluation
# ==========================================================
def evaluate(expected: Dict[str, Any], computed: Dict[str, Any]) -> Tuple[ClaimStatus, List[str]]:
    """Compare expected keys exactly; None in computed means undecided."""
    mismatches, undecided = [], []
    for key, value in expected.items():
        actual = computed.get(key)
        if actual is None or (isinstance(actual, dict) and any(v is None for v in actual.values())):
            undecided.append(key)
        elif actual != value:
            mismatches.append(f"{key}: expected {value!r}, computed {actual!r}")
    if mismatches:
        return ClaimStatus.FAIL, mismatches
    if undecided:
        return ClaimStatus.INCONCLUSIVE, [f"undecided within budget: {', '.join(undecided)}"]
    return ClaimStatus.PASS, []


def run_claim(spec: ClaimSpec, budget: float,
              hamilton_budget: int = DEFAULT_HAMILTON_BUDGET,
              bruteforce_cap: int = MAX_BRUTEFORCE_CAP) -> ClaimReport:
    """Run one claim and turn its computed block into a report."""
    ctx = ClaimContext(budget, hamilton_budget, bruteforce_cap)
    started = time.perf_counter()
    notes = list(spec.notes)
    try:
        computed = spec.check(ctx)
        status, details = evaluate(spec.expected, computed)
    except CertificationError as e:
        computed = {}
        status = ClaimStatus.INCONCLUSIVE if e.reason == "inconclusive" else ClaimStatus.FAIL
        details = [f"certification refused: {e}"]
    except DomlabError as e:
        computed = {}
        status, details = ClaimStatus.FAIL, [f"error: {e}"]
    runtime = time.perf_counter() - started

    notes += ctx.notes + details
    if status is not ClaimStatus.PASS:
        notes += [f"instance {name}: {text}" for name, text in ctx.instances.items()]
    report = ClaimReport(spec.claim_id, spec.citation, spec.quote, dict(spec.expected),
                         computed, status, runtime, notes)
    log = logging.info if status is ClaimStatus.PASS else logging.warning
    log(f"Claim {spec.claim_id}: {status.value} in {runtime:.2f}s")
    return report


def _run_claim_by_id(claim_id: str, budget: float, hamilton_budget: int,
                     bruteforce_cap: int) -> ClaimReport:
    # worker entry point: the child process rebuilds the registry on import
    return run_claim(get_claim(claim_id), budget, hamilton_budget, bruteforce_cap)


def _skipped(spec: ClaimSpec, reason: str) -> ClaimReport:
    return ClaimReport(spec.claim_id, spec.citation, spec.quote, dict(spec.expected), {},
                       ClaimStatus.INCONCLUSIVE, 0.0, list(spec.notes) + [reason])


def verify_claims(selection: Union[str, Iterable[str], None] = "all",
                  budget: Optional[float] = None,
                  config: Optional[LabConfig] = None,
                  on_report: Optional[Callable[[ClaimReport], None]] = None) -> List[ClaimReport]:
    """
    Run the selected claims and return their reports in selection order.

    `budget` is the per-claim solver budget in seconds (the configured
    claim budget by default). Claims that would start after the global
    budget is spent are reported inconclusive without running.
    """
    config = config or LabConfig()
    specs = select_claims(selection)
    per_claim = float(budget if budget is not None else config.claim_budget)
    deadline = time.monotonic() + config.global_budget
    reports: Dict[str, ClaimReport] = {}

    def finish(report: ClaimReport) -> None:
        reports[report.claim_id] = report
        if on_report is not None:
            on_report(report)

    if config.workers <= 1 or len(specs) <= 1:
        for spec in specs:
            if time.monotonic() >= deadline:
                finish(_skipped(spec, "global budget exhausted before start"))
                continue
            finish(run_claim(spec, per_claim, config.hamilton_budget, config.bruteforce_cap))
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            futures = [
                (spec, pool.submit(_run_claim_by_id, spec.claim_id, per_claim,
                                   config.hamilton_budget, config.bruteforce_cap))
                for spec in specs
            ]
            for spec, future in futures:
                try:
                    finish(future.result(timeout=max(deadline - time.monotonic(), 0)))
                except FutureTimeout:
                    future.cancel()
                    finish(_skipped(spec, "global budget exhausted"))
    return [reports[spec.claim_id] for spec in specs]


# ==========================================================
# Shared Computations
# ==========================================================
def _gamma(ctx: ClaimContext, construction: Construction) -> DominationResult:
    """Compositional certificate when atoms exist, branch and bound otherwise."""
    ctx.record(construction.name, construction.graph)
    atoms = construction.atoms()
    if atoms:
        try:
            return certified_gamma(construction.graph, atoms, ctx.left())
        except CertificationError as e:
            ctx.notes.append(f"compositional certificate refused: {e}")
    return gamma_exact(construction.graph, ctx.left())


def _value(result: DominationResult) -> Optional[int]:
    return result.gamma if result.optimal else None


def _kappa(g: Graph) -> int:
    # K2^3 counts as 3-connected by convention
    if g.n == 2 and g.m == 3:
        return 3
    return vertex_connectivity(g)


def _reed_bound(n: int) -> int:
    return math.ceil(n / 3)


def _exceeds_reed(gamma: Optional[int], n: int) -> Optional[bool]:
    return None if gamma is None else gamma > _reed_bound(n)


def _ratio(gamma: Optional[int], n: int) -> Optional[str]:
    return None if gamma is None else format_fraction(Fraction(gamma, n))


def _hamiltonian(ctx: ClaimContext, g: Graph) -> Optional[bool]:
    return hamiltonian_cycle(g, ctx.hamilton_budget, time_limit=ctx.left()).hamiltonian


def _cyc4(g: Graph) -> bool:
    result = is_cyclically_4_edge_connected(g)
    if result.witness is not None and not validate_cyclic_cut(g, result.witness):
        raise ClaimError("cyclic cut witness failed revalidation")
    return result.cyclically_4_connected


def _family_block(ctx: ClaimContext, construction: Construction) -> Dict[str, Any]:
    g = construction.graph
    result = _gamma(ctx, construction)
    gamma = _value(result)
    return {
        "v": g.n,
        "gamma": gamma,
        "certificate": result.certificate.value,
        "cubic": is_cubic(g),
        "kappa": _kappa(g),
        "bridges": len(bridges(g)),
        "ratio": _ratio(gamma, g.n),
        "exceeds_reed": _exceeds_reed(gamma, g.n),
    }


# ==========================================================
# Gadget Tables
# ==========================================================
def _table(values: Dict[Tuple[str, ...], int]) -> Dict[str, int]:
    return {"{" + ",".join(names) + "}": value for names, value in values.items()}


def _uniform_table(names: Sequence[str], value: int) -> Dict[str, int]:
    subsets = [c for size in range(len(names) + 1) for c in combinations(names, size)]
    return _table({subset: value for subset in subsets})


def _w_table() -> Dict[str, int]:
    names = ("t1", "t2", "p1", "p2")
    values = {}
    for size in range(len(names) + 1):
        for subset in combinations(names, size):
            chosen = set(subset)
            single = chosen in ({"p1", "p2", "t1"}, {"p1", "p2", "t2"})
            values[subset] = 1 if single else 2
    return _table(values)


def _check_gadget_table(ctx: ClaimContext, name: str) -> Dict[str, Any]:
    gadget = gadget_catalog(name)
    ctx.record(name, gadget.graph)
    exact = check_stability(gadget, ctx.left(), solver="exact")
    if gadget.n > ctx.bruteforce_cap:
        ctx.notes.append(f"brute-force oracle skipped: {gadget.n} vertices "
                         f"above cap {ctx.bruteforce_cap}")
        agree = None
    else:
        oracle = check_stability(gadget, solver="bruteforce", cap=ctx.bruteforce_cap)
        agree = exact.table == oracle.table
    return {
        "v": gadget.n,
        "table": exact.labelled_table(gadget.labels),
        "stable": exact.stable,
        "oracle_agree": agree,
    }


_GADGET_TABLES = [
    ("A", "gadget A", "gamma(A) = gamma(A - a_i) = 3 and gamma(A - {a1, a2}) = 2",
     {"v": 8, "table": {"{}": 3, "{a1}": 3, "{a2}": 3, "{a1,a2}": 2}, "stable": False}),
    ("B", "gadget B", "gamma(B - V) = 3 for every V within {b1, b2, b3}",
     {"v": 9, "table": _uniform_table(("b1", "b2", "b3"), 3), "stable": True}),
    ("S", "gadget S", "gamma(S) = gamma(S - s) = 6",
     {"v": 17, "table": _uniform_table(("s",), 6), "stable": True}),
    ("T", "gadget T", "gamma(T - V) = 6 for every V within {t1, t2}",
     {"v": 18, "table": _uniform_table(("t1", "t2"), 6), "stable": True}),
    ("P", "gadget P", "gamma(P - V) = 7 for every V within {p1, p2}",
     {"v": 20, "table": _uniform_table(("p1", "p2"), 7), "stable": True}),
    ("Q", "gadget Q", "gamma(Q - V) = 7 for every V within {q1, q2, q3}",
     {"v": 21, "table": _uniform_table(("q1", "q2", "q3"), 7), "stable": True}),
    ("W", "gadget W", "gamma(W - V) = 1 if V = {p1, p2, t_i}, otherwise 2",
     {"v": 6, "table": _w_table(), "stable": False}),
]

for _name, _citation, _quote, _expected in _GADGET_TABLES:
    register_claim(f"{_name}.table", _citation, _quote,
                   dict(_expected, oracle_agree=True))(partial(_check_gadget_table, name=_name))


# ==========================================================
# R_k and L_r
# ==========================================================
def _check_R(ctx: ClaimContext, k: int) -> Dict[str, Any]:
    block = _family_block(ctx, build_R(k))
    gamma = block["gamma"]
    block["excess"] = None if gamma is None else format_fraction(gamma - Fraction(block["v"], 3))
    return block


for _k in (3, 4, 5):
    register_claim(
        f"R.k{_k}", "R_k family",
        "R_k is cubic with kappa = 2, v = 20k, gamma = 7k and rho = 7/20",
        {"v": 20 * _k, "gamma": 7 * _k, "cubic": True, "kappa": 2, "bridges": 0,
         "ratio": "7/20", "excess": format_fraction(Fraction(_k, 3)), "exceeds_reed": True},
        notes=("verified for tested parameters",),
    )(partial(_check_R, k=_k))


def _check_L(ctx: ClaimContext, r: int) -> Dict[str, Any]:
    block = _family_block(ctx, build_L(r))
    gamma = block["gamma"]
    if gamma is None:
        block["ratio_excess"] = block["above_c"] = None
    else:
        ratio = Fraction(gamma, block["v"])
        block["ratio_excess"] = format_fraction(ratio - RATIO_C)
        block["above_c"] = ratio > RATIO_C
    return block


for _r in (1, 2, 3):
    register_claim(
        f"L.r{_r}", "L_r family",
        "L_r is cubic with exactly r + 1 bridges, v = 20r + 34 and gamma = 7r + 12",
        {"v": 20 * _r + 34, "gamma": 7 * _r + 12, "cubic": True, "kappa": 1,
         "bridges": _r + 1, "ratio": format_fraction(Fraction(7 * _r + 12, 20 * _r + 34)),
         "ratio_excess": format_fraction(Fraction(1, 200 * _r + 340)), "above_c": True,
         "exceeds_reed": True},
        notes=(f"C constants: v = {LITERATURE_C_VERTICES}, gamma = {LITERATURE_C_GAMMA}",),
    )(partial(_check_L, r=_r))


# ==========================================================
# G(P), G(P,B) and G[B]
# ==========================================================
_BASES = {"K23": 1, "K4": 2, "prism": 3}


def _check_GP(ctx: ClaimContext, base: str) -> Dict[str, Any]:
    return _family_block(ctx, build_GP(base_graph(base)))


def _check_GPB(ctx: ClaimContext, base: str) -> Dict[str, Any]:
    return _family_block(ctx, build_GPB(base_graph(base)))


for _base, _half in _BASES.items():
    register_claim(
        f"GP.{_base}", "G(P) over a cubic base",
        "for a 2-connected cubic base on 2k vertices, v(G(P)) = 62k and gamma(G(P)) = 21k",
        {"v": 62 * _half, "gamma": 21 * _half, "cubic": True, "kappa": 2,
         "ratio": "21/62", "exceeds_reed": True},
    )(partial(_check_GP, base=_base))
    register_claim(
        f"GPB.{_base}", "G(P,B) over a cubic base",
        "for a 2-connected cubic base on 2k vertices, v(G(P,B)) = 78k and gamma = 27k",
        {"v": 78 * _half, "gamma": 27 * _half, "cubic": True, "kappa": 2,
         "ratio": "9/26", "exceeds_reed": True},
    )(partial(_check_GPB, base=_base))


def _check_GB(ctx: ClaimContext, base: str) -> Dict[str, Any]:
    g = base_graph(base)
    construction = build_GB(g)
    h = construction.graph
    gamma = _value(_gamma(ctx, construction))
    kappa = _kappa(h)
    return {
        "v": h.n,
        "gamma": gamma,
        "gamma_is_3v": None if gamma is None else gamma == 3 * g.n,
        "cubic": is_cubic(h),
        "kappa": kappa,
        "kappa_preserved": kappa == _kappa(g),
        "cyc4": _cyc4(h),
    }


for _base, _v in (("K23", 2), ("K4", 4)):
    register_claim(
        f"GB.{_base}", "G[B] over a 3-connected cubic base",
        "v(G') = 9v(G), gamma(G') = 3v(G), kappa(G') = kappa(G), not cyclically 4-connected",
        {"v": 9 * _v, "gamma": 3 * _v, "gamma_is_3v": True, "cubic": True, "kappa": 3,
         "kappa_preserved": True, "cyc4": False},
    )(partial(_check_GB, base=_base))


# ==========================================================
# P^i and Q^i
# ==========================================================
def _p_ratio(i: int) -> str:
    return format_fraction(Fraction(1, 3) + Fraction(1, 12 * (3 * 2 ** i - 1)))


def _gadget_gamma(ctx: ClaimContext, gadget: RootedGadget) -> DominationResult:
    ctx.record(gadget.key, gadget.graph)
    occs = [GadgetOccurrence(part.gadget, part.embedding) for part in gadget.atoms()]
    try:
        return certified_gamma(gadget.graph, occs, ctx.left())
    except CertificationError as e:
        ctx.notes.append(f"compositional certificate refused: {e}")
        return gamma_exact(gadget.graph, ctx.left())


def _check_Pi(ctx: ClaimContext, i: int, with_stability: bool) -> Dict[str, Any]:
    gadget = gadget_P_i(i)
    gamma = _value(_gadget_gamma(ctx, gadget))
    block: Dict[str, Any] = {"v": gadget.n, "gamma": gamma, "ratio": _ratio(gamma, gadget.n)}
    if with_stability:
        block["stable"] = check_stability(gadget, ctx.left()).stable
    if i >= 2:
        previous = _value(_gadget_gamma(ctx, gadget_P_i(i - 1)))
        block["recursion"] = (None if gamma is None or previous is None
                              else gamma == 2 * previous + 1)
    return block


for _i, _stable in ((1, True), (2, True), (3, False)):
    _expected: Dict[str, Any] = {"v": 3 * 2 ** (_i + 2) - 4, "gamma": 2 ** (_i + 2) - 1,
                                 "ratio": _p_ratio(_i)}
    if _stable:
        _expected["stable"] = True
    if _i >= 2:
        _expected["recursion"] = True
    register_claim(
        f"Pi.i{_i}", "recursive gadget P^i",
        "gamma(P^(i+1)) = 2 gamma(P^i) + 1, gamma(P^i) = 2^(i+2) - 1, stable over p1, p2",
        _expected,
    )(partial(_check_Pi, i=_i, with_stability=_stable))


def _check_Qi(ctx: ClaimContext, i: int, with_stability: bool) -> Dict[str, Any]:
    gadget = gadget_Q_i(i)
    gamma = _value(_gadget_gamma(ctx, gadget))
    block: Dict[str, Any] = {
        "v": gadget.n,
        "gamma": gamma,
        "v_is_3gamma": None if gamma is None else gadget.n == 3 * gamma,
    }
    if with_stability:
        block["stable"] = check_stability(gadget, ctx.left()).stable
    return block


for _i, _stable in ((1, True), (2, False)):
    _expected = {"v": 3 * 2 ** (_i + 2) - 3, "gamma": 2 ** (_i + 2) - 1, "v_is_3gamma": True}
    if _stable:
        _expected["stable"] = True
    register_claim(
        f"Qi.i{_i}", "recursive gadget Q^i",
        "v(Q^i) = 3 gamma(Q^i)",
        _expected,
    )(partial(_check_Qi, i=_i, with_stability=_stable))


# ==========================================================
# Swapped Counterexamples
# ==========================================================
@register_claim(
    "eRplPi.R3", "edge slots swapped for P family members",
    "replacing P copies by members of the P family keeps gamma(G') > ceil(v(G')/3)",
    {"v": 84, "gamma": 29, "cubic": True, "exceeds_reed": True},
)
def _check_swap_R3(ctx: ClaimContext) -> Dict[str, Any]:
    construction = build_R(3, [gadget_P_i(2), gadget_P_i(1), gadget_P_i(1)])
    block = _family_block(ctx, construction)
    return {key: block[key] for key in ("v", "gamma", "cubic", "exceeds_reed", "certificate")}


@register_claim(
    "eRplPi.GPB", "vertex slot swapped for a Q family member",
    "replacing B copies by members of the Q family keeps gamma(G') > ceil(v(G')/3)",
    {"v": 90, "gamma": 31, "cubic": True, "exceeds_reed": True},
)
def _check_swap_GPB(ctx: ClaimContext) -> Dict[str, Any]:
    construction = build_GPB(base_graph("K23"), {0: gadget_Q_i(1)})
    block = _family_block(ctx, construction)
    return {key: block[key] for key in ("v", "gamma", "cubic", "exceeds_reed", "certificate")}


# ==========================================================
# 3-connected Extremal Families
# ==========================================================
def _structure_block(ctx: ClaimContext, construction: Construction) -> Dict[str, Any]:
    g = construction.graph
    gamma = _value(_gamma(ctx, construction))
    return {
        "v": g.n,
        "gamma": gamma,
        "cubic": is_cubic(g),
        "kappa": _kappa(g),
        "cyc4": _cyc4(g),
        "hamiltonian": _hamiltonian(ctx, g),
    }


@register_claim(
    "GP72", "generalized Petersen graph (7,2)",
    "cubic, cyclically 4-connected, Hamiltonian, 14 vertices, gamma = 5 = ceil(v/3)",
    {"v": 14, "gamma": 5, "cubic": True, "cyc4": True, "hamiltonian": True,
     "gamma_is_reed": True},
)
def _check_gp72(ctx: ClaimContext) -> Dict[str, Any]:
    block = _structure_block(ctx, generalized_petersen(7, 2))
    gamma = block["gamma"]
    block["gamma_is_reed"] = None if gamma is None else gamma == _reed_bound(block["v"])
    return block


_M_FORMULAS = {0: (6, 0, 2, 0), 1: (6, -2, 2, -1), 2: (6, 2, 2, 1)}


def _m_expected(r: int, k: int) -> Dict[str, Any]:
    a, b, c, d = _M_FORMULAS[r]
    return {"v": a * k + b, "gamma": c * k + d, "cubic": True, "kappa": 3}


def _check_M(ctx: ClaimContext, r: int, k: int) -> Dict[str, Any]:
    block = _structure_block(ctx, build_M(r, k))
    if block["v"] < 8:
        block.pop("cyc4")
    return block


for _k in range(1, 5):
    for _r in (0, 1, 2):
        if _r == 1 and _k < 2:
            continue
        _expected = _m_expected(_r, _k)
        _expected["hamiltonian"] = True
        if _expected["v"] >= 8:
            _expected["cyc4"] = True
        register_claim(
            f"Mk.r{_r}.k{_k}", "M^r_k family",
            "M^r_k is a cubic cyclically 4-connected Hamiltonian graph with "
            "v = 6k, 6k - 2, 6k + 2 and gamma = 2k, 2k - 1, 2k + 1 for r = 0, 1, 2",
            _expected,
            notes=("crossing edges use i = 2 mod 3",),
        )(partial(_check_M, r=_r, k=_k))


def _check_N(ctx: ClaimContext, r: int, k: int, i: int) -> Dict[str, Any]:
    construction = build_N(r, k, i)
    return _structure_block(ctx, construction)


for _k in (3, 4):
    for _r in (0, 1, 2):
        _expected = _m_expected(_r, _k)
        _expected.update({"cyc4": False, "hamiltonian": True})
        register_claim(
            f"Nk.r{_r}.k{_k}.i2", "N^r_k(i) family",
            "N^r_k(i) is cubic, 3-connected but not cyclically 4-connected, Hamiltonian, "
            "with the vertex count and gamma of M^r_k",
            _expected,
            notes=("edge swap applied to M^r_k",),
        )(partial(_check_N, r=_r, k=_k, i=2))


# ==========================================================
# Stretch Claims (whole-graph exact solves)
# ==========================================================
def _check_exact(ctx: ClaimContext, build: Callable[[], Construction]) -> Dict[str, Any]:
    construction = build()
    ctx.record(construction.name, construction.graph)
    result = gamma_exact(construction.graph, ctx.left())
    return {"v": construction.n, "gamma": _value(result)}


for _cid, _builder, _v, _gamma_value in (
    ("R.k3.exact", partial(build_R, 3), 60, 21),
    ("L.r1.exact", partial(build_L, 1), 54, 19),
    ("Pi.i2.exact", lambda: Construction("P^2", gadget_P_i(2).graph), 44, 15),
):
    register_claim(
        _cid, "whole-graph branch and bound",
        "the certified value is reproduced by an exact search without certificates",
        {"v": _v, "gamma": _gamma_value},
        stretch=True,
    )(partial(_check_exact, build=_builder))
