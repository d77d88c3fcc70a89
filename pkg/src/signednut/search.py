"""Exhaustive signed-nut search over switching-class representatives.

For every catalogue graph the search fixes the deterministic spanning tree
and runs through all sign patterns on the non-tree edges, i.e. one
tree-positive representative per switching class (2^(m-n+1) of them), and
classifies each with exact arithmetic.  A determinant-mod-p pre-filter
discards certified-nonsingular signings cheaply; anything surviving the
filter goes through the exact rank path, so verdicts never depend on the
filter.  Work is partitioned per underlying graph across workers; the
per-graph signing loop stays sequential to keep the binary-counter order
deterministic.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Iterable, Sequence

from . import linalg
from .classify import NutReport, classify
from .graphs import (
    DisconnectedGraphError,
    GraphError,
    SignedGraph,
    is_traditional,
    spanning_tree,
)

__all__ = [
    "SearchConfig",
    "SearchOutcome",
    "search_class",
    "existence_verdict",
    "count_signings",
    "SYMBOL_TRADITIONAL",
    "SYMBOL_PROPER_ONLY",
    "SYMBOL_NONE",
    "SYMBOL_IMPOSSIBLE",
    "SYMBOL_NOT_ATTEMPTED",
]

MODE_FIRST_WITNESS = "first-witness"
MODE_COUNT_ALL = "count-all"
MODE_FULL_VERDICT = "full-verdict"

WANT_UNSIGNED = "unsigned-nut"
WANT_TRADITIONAL = "traditional-signed-nut"
WANT_PROPER = "proper-signed-nut"
ALL_WANTS = frozenset({WANT_UNSIGNED, WANT_TRADITIONAL, WANT_PROPER})

SYMBOL_TRADITIONAL = "✓"     # traditional signed nut exists
SYMBOL_PROPER_ONLY = "✠"     # proper exists, no traditional
SYMBOL_NONE = "✗"            # exhausted, none
SYMBOL_IMPOSSIBLE = "∄"      # ruled out (complete graph, n % 4 != 1)
SYMBOL_NOT_ATTEMPTED = "·"


@dataclass(frozen=True)
class SearchConfig:
    """Search harness configuration."""

    mode: str = MODE_FULL_VERDICT
    want: frozenset[str] = ALL_WANTS
    worker_count: int = 1
    graph_limit: int | None = None
    signing_limit: int | None = None
    prepass: bool = False
    hamiltonian_budget: int = 20000

    def __post_init__(self):
        if self.mode not in (MODE_FIRST_WITNESS, MODE_COUNT_ALL, MODE_FULL_VERDICT):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not self.want or not self.want <= ALL_WANTS:
            raise ValueError(f"bad want set {set(self.want)!r}")
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")
        for cap in (self.graph_limit, self.signing_limit):
            if cap is not None and cap < 0:
                raise ValueError("caps must be nonnegative")


@dataclass
class SearchOutcome:
    """Per-(n, rho) existence summary with witness certificates."""

    parameters: tuple[int, int] | None
    graphs_scanned: int = 0
    signings_tested: int = 0
    verdict: str = "none-found"
    witnesses: list[tuple[SignedGraph, NutReport]] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    exhaustive: bool = True
    nut_count: int = 0


def count_signings(g: SignedGraph) -> tuple[int, int, int]:
    """(total signings, switching classes, class size) for a connected
    underlying graph: (2^m, 2^(m-n+1), 2^(n-1))."""
    if not g.is_connected():
        raise DisconnectedGraphError("switching-class counts need connectivity")
    m, n = len(g.edges), g.order
    return 1 << m, 1 << (m - n + 1), 1 << (n - 1)


def _nut_check(matrix: Sequence[Sequence[int]]):
    """Canonical full kernel vector if the matrix is a nut matrix, else None."""
    if linalg.det_filter_nonsingular(matrix):
        return None
    nullity, vec = linalg.nullity_and_unit_kernel(matrix)
    if nullity == 1 and all(x != 0 for x in vec):
        return vec
    return None


def _category(counter_is_zero: bool) -> str:
    # a tree-positive representative is traditional iff it is all-positive
    return WANT_TRADITIONAL if counter_is_zero else WANT_PROPER


def _wanted(category: str, want: frozenset[str]) -> bool:
    if category == WANT_TRADITIONAL:
        return WANT_TRADITIONAL in want or WANT_UNSIGNED in want
    return category in want


def _find_hamiltonian_cycle(g: SignedGraph, budget: int):
    """Backtracking Hamiltonian cycle search with a node budget; returns
    the cycle edge list or None."""
    n = g.order
    if n < 3:
        return None
    adj = g.adjacency_lists()
    path = [0]
    used = [False] * n
    used[0] = True
    nodes = 0

    def extend() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            return False
        v = path[-1]
        if len(path) == n:
            return 0 in adj[v]
        for u in adj[v]:
            if not used[u]:
                used[u] = True
                path.append(u)
                if extend():
                    return True
                path.pop()
                used[u] = False
        return False

    if not extend():
        return None
    return [
        (min(a, b), max(a, b))
        for a, b in zip(path, path[1:] + [path[0]])
    ]


def _scan_graph(g: SignedGraph, cfg: SearchConfig) -> dict:
    """Scan all switching-class representatives of one underlying graph.

    Returns counters and raw witnesses; certificates are re-classified by
    the caller.
    """
    base = g.underlying()
    tree = spanning_tree(base)
    tree_set = set(tree.edges)
    non_tree = [e for e in base.edges if e not in tree_set]
    t = len(non_tree)
    total = 1 << t
    limit = total if cfg.signing_limit is None else min(total, cfg.signing_limit)
    result = {
        "signings": 0,
        "witnesses": [],  # (category, SignedGraph)
        "unsigned_nut": False,
        "nut_count": 0,
        "capped": limit < total,
    }

    def record(category: str, witness: SignedGraph) -> bool:
        """Record a nut; returns True when the scan may stop."""
        result["nut_count"] += 1
        if category == WANT_TRADITIONAL:
            result["unsigned_nut"] = True
        seen = {(w.edges, w.signs) for _, w in result["witnesses"]}
        if (witness.edges, witness.signs) not in seen:
            if cfg.mode == MODE_COUNT_ALL or not any(
                c == category for c, _ in result["witnesses"]
            ):
                result["witnesses"].append((category, witness))
        return cfg.mode == MODE_FIRST_WITNESS and _wanted(category, cfg.want)

    if cfg.prepass and cfg.mode == MODE_FIRST_WITNESS:
        if _prepass(base, non_tree, cfg, result, record):
            return result

    a = base.adjacency_matrix()
    for counter in range(limit):
        if counter:
            flips = (counter - 1) ^ counter
            s = 0
            while flips:
                if flips & 1:
                    u, v = non_tree[t - 1 - s]
                    a[u][v] = -a[u][v]
                    a[v][u] = a[u][v]
                flips >>= 1
                s += 1
        result["signings"] += 1
        vec = _nut_check(a)
        if vec is not None:
            neg = [non_tree[i] for i in range(t) if (counter >> (t - 1 - i)) & 1]
            witness = SignedGraph.from_edges(base.order, base.edges, neg)
            if record(_category(counter == 0), witness):
                return result
    return result


def _prepass(base, non_tree, cfg, result, record) -> bool:
    """Best-effort accelerators for first-witness mode: few negative
    edges first, then a negated Hamiltonian cycle.  Purely additive; the
    exhaustive loop still runs if nothing is found."""
    for k in (1, 2):
        for idxs in combinations(range(len(non_tree)), k):
            neg = [non_tree[i] for i in idxs]
            candidate = SignedGraph.from_edges(base.order, base.edges, neg)
            result["signings"] += 1
            vec = _nut_check(candidate.adjacency_matrix())
            if vec is not None and record(WANT_PROPER, candidate):
                return True
    cycle = _find_hamiltonian_cycle(base, cfg.hamiltonian_budget)
    if cycle:
        candidate = SignedGraph.from_edges(base.order, base.edges, cycle)
        result["signings"] += 1
        vec = _nut_check(candidate.adjacency_matrix())
        if vec is not None:
            category = (
                WANT_TRADITIONAL if is_traditional(candidate) else WANT_PROPER
            )
            if record(category, candidate):
                return True
    return False


def _validate_graph(
    g: SignedGraph, parameters: tuple[int, int] | None
) -> tuple[int, int]:
    degs = set(g.degrees())
    if len(degs) != 1:
        raise GraphError("graph is not regular")
    if not g.is_connected():
        raise DisconnectedGraphError("graph is not connected")
    params = (g.order, degs.pop())
    if parameters is not None and params != parameters:
        raise GraphError(
            f"graph has (n, rho) = {params}, expected {parameters}"
        )
    return params


def _scan_job(args):
    idx, g, cfg, parameters = args
    try:
        params = _validate_graph(g, parameters)
    except GraphError as exc:
        return idx, None, str(exc), None
    return idx, _scan_graph(g, cfg), None, params


def search_class(
    graphs: Iterable[SignedGraph],
    cfg: SearchConfig,
    parameters: tuple[int, int] | None = None,
) -> SearchOutcome:
    """Run the representative search over a catalogue of underlying graphs.

    In the exhaustive modes the verdict certifies nonexistence; in
    first-witness mode it reports the category of the witness found and
    the scan stops at the lowest-index graph containing one.
    """
    graph_list = list(graphs)
    capped_graphs = False
    if cfg.graph_limit is not None and len(graph_list) > cfg.graph_limit:
        graph_list = graph_list[: cfg.graph_limit]
        capped_graphs = True

    outcome = SearchOutcome(parameters=parameters)
    outcome.exhaustive = not capped_graphs

    jobs = [(i, g, cfg, parameters) for i, g in enumerate(graph_list)]
    if cfg.worker_count > 1 and len(jobs) > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(cfg.worker_count) as pool:
            results = _reduce(outcome, pool.imap(_scan_job, jobs), cfg)
    else:
        results = _reduce(outcome, map(_scan_job, jobs), cfg)

    unsigned, proper = results
    if unsigned:
        outcome.verdict = "unsigned-nut-exists"
    elif proper:
        outcome.verdict = "proper-only"
    elif outcome.exhaustive:
        outcome.verdict = "none-found"
    else:
        outcome.verdict = "capped"
    return outcome


def _reduce(outcome: SearchOutcome, results, cfg: SearchConfig):
    """Ordered deterministic reduction of per-graph scan results."""
    unsigned_found = False
    proper_found = False
    seen_witnesses = set()
    for idx, res, error, params in results:
        if error is not None:
            outcome.errors.append(f"graph {idx}: {error}")
            outcome.exhaustive = False
            continue
        if outcome.parameters is None:
            outcome.parameters = params
        elif params != outcome.parameters:
            outcome.errors.append(
                f"graph {idx}: parameters {params} conflict with {outcome.parameters}"
            )
            outcome.exhaustive = False
            continue
        outcome.graphs_scanned += 1
        outcome.signings_tested += res["signings"]
        outcome.nut_count += res["nut_count"]
        if res["capped"]:
            outcome.exhaustive = False
        if res["unsigned_nut"]:
            unsigned_found = True
        stop = False
        for category, witness in res["witnesses"]:
            if category == WANT_PROPER:
                proper_found = True
            report = classify(witness)
            if not report.is_nut:
                raise AssertionError("witness failed re-classification")
            key = (witness.edges, witness.signs)
            if key not in seen_witnesses:
                seen_witnesses.add(key)
                outcome.witnesses.append((witness, report))
            if cfg.mode == MODE_FIRST_WITNESS and _wanted(category, cfg.want):
                stop = True
        if stop:
            outcome.exhaustive = False
            break
    return unsigned_found, proper_found


def existence_verdict(
    n: int,
    rho: int,
    catalogue: Iterable[SignedGraph],
    complete: bool = True,
    worker_count: int = 1,
) -> str:
    """Map a catalogue search to an existence-table symbol.

    Two passes keep every claim sound: the all-positive signing of every
    graph decides whether a traditional (equivalently unsigned) nut
    exists; only then is the exhaustive representative search consulted
    for proper nuts.  Complete graphs that come up empty render as
    "impossible" rather than merely "searched".
    """
    graph_list = list(catalogue)
    base = SearchConfig(worker_count=worker_count)

    unsigned_pass = search_class(
        graph_list,
        replace(base, mode=MODE_FIRST_WITNESS, want=frozenset({WANT_UNSIGNED}),
                signing_limit=1),
        parameters=(n, rho),
    )
    if unsigned_pass.verdict == "unsigned-nut-exists":
        return SYMBOL_TRADITIONAL
    if not complete:
        return SYMBOL_NOT_ATTEMPTED

    any_pass = search_class(
        graph_list,
        replace(base, mode=MODE_FIRST_WITNESS, want=ALL_WANTS),
        parameters=(n, rho),
    )
    if any_pass.witnesses:
        return SYMBOL_PROPER_ONLY
    if any_pass.exhaustive:
        return SYMBOL_IMPOSSIBLE if n == rho + 1 else SYMBOL_NONE
    return SYMBOL_NOT_ATTEMPTED
