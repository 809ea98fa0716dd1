"""Benchmark scenarios emitting one CSV row per measured point.

All randomness comes from :class:`random.Random` seeded with a string built
from the run seed and the point's coordinates, so rows do not depend on
sweep order and reruns are byte-identical.  Wall-clock time is recorded
only when ``timing=True``; otherwise the column is 0.
"""

from __future__ import annotations

import csv
import io
import math
import random
import time
from dataclasses import astuple, dataclass, fields
from typing import Iterable, Sequence

from .dsat import ComparisonStats, CsatAborted, cnf_satisfiable_via_dnf, dnf_satisfiable
from .expr import canonicalize
from .network import DEFAULT_NODE_BUDGET, build
from .normal_forms import (
    DEFAULT_CLAUSE_CAP,
    CnfExpr,
    ConjClause,
    DisjClause,
    DnfExpr,
    Literal,
    embed,
    normalize_clause,
)
from .oracle import classify

__all__ = [
    "BenchRecord",
    "SCENARIOS",
    "random_clauses",
    "random_dnf",
    "pair_family",
    "net_growth",
    "dsat_scaling",
    "cnf_blowup",
    "query_path",
    "fit_sort_constant",
    "write_csv",
    "run_scenario",
]


@dataclass
class BenchRecord:
    scenario: str
    k: int
    n_or_L: int
    cells: int = 0
    trie_nodes: int = 0
    build_ops: int = 0
    fast_path_fraction: float = 0.0
    query_steps_mean: float = 0.0
    wall_time_ms: float = 0.0
    peak_cell_count: int = 0
    growth_ratio: float = 0.0
    comparisons: int = 0
    sort_ops: int = 0
    output_clauses: int = 0
    violations: int = 0
    aborted: int = 0

    @classmethod
    def header(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def row(self) -> list[str]:
        return [f"{v:.6f}" if isinstance(v, float) else str(v) for v in astuple(self)]


def write_csv(records: Iterable[BenchRecord], out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(BenchRecord.header())
    for r in records:
        w.writerow(r.row())


def _rng(seed: int, *coords) -> random.Random:
    return random.Random(":".join(map(str, (seed,) + coords)))


class _Clock:
    def __init__(self, enabled: bool):
        self.enabled = enabled

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = (time.perf_counter() - self.t0) * 1e3 if self.enabled else 0.0


# -- instance generators -----------------------------------------------------


def random_clauses(
    rng: random.Random, total_literals: int, n_vars: int, max_width: int
) -> list[list[Literal]]:
    """Raw clauses (unsorted, duplicates allowed) with exactly
    ``total_literals`` literals between them."""
    clauses, left = [], total_literals
    while left > 0:
        width = min(rng.randint(1, max_width), left)
        clauses.append([Literal(rng.randint(1, n_vars), rng.random() < 0.5) for _ in range(width)])
        left -= width
    return clauses


def random_dnf(rng: random.Random, n_clauses: int, n_vars: int, max_width: int) -> DnfExpr:
    clauses = []
    for _ in range(n_clauses):
        width = rng.randint(1, max_width)
        lits = [Literal(rng.randint(1, n_vars), rng.random() < 0.5) for _ in range(width)]
        clauses.append(normalize_clause(lits, ConjClause))
    return DnfExpr(tuple(clauses))


def pair_family(k: int) -> CnfExpr:
    """``(x1∨x2)∧(x3∨x4)∧...`` with ``k`` clauses; its DNF has ``2**k`` terms."""
    return CnfExpr(
        tuple(DisjClause((Literal(2 * i - 1), Literal(2 * i))) for i in range(1, k + 1))
    )


# -- scenarios ---------------------------------------------------------------


def net_growth(
    k: int = 2,
    n_min: int = 4,
    n_max: int = 9,
    policy: str = "oracle",
    budget: int = DEFAULT_NODE_BUDGET,
    timing: bool = False,
) -> list[BenchRecord]:
    records: list[BenchRecord] = []
    prev = 0
    for n in range(n_min, n_max + 1):
        with _Clock(timing) as clock:
            net = build(k, n, policy=policy, budget=budget)
        m = net.metrics
        records.append(
            BenchRecord(
                "net-growth",
                k,
                n,
                cells=m.cells,
                trie_nodes=m.trie_nodes,
                build_ops=m.build_ops,
                fast_path_fraction=m.fast_path_cells / m.cells if m.cells else 0.0,
                wall_time_ms=clock.ms,
                peak_cell_count=m.cells,
                growth_ratio=m.cells / prev if prev and not net.aborted else 0.0,
                aborted=int(net.aborted),
            )
        )
        if net.aborted:
            break
        prev = m.cells
    return records


def dsat_scaling(
    sizes: Sequence[int] = (100, 1000, 10000),
    repeats: int = 5,
    seed: int = 0,
    n_vars: int = 50,
    max_width: int = 10,
    timing: bool = False,
) -> list[BenchRecord]:
    """Random DNFs of total literal count L: sort each clause (counted),
    then check every clause (full scan, counted)."""
    records = []
    for L in sizes:
        for rep in range(repeats):
            rng = _rng(seed, "dsat", L, rep)
            raw = random_clauses(rng, L, n_vars, max_width)
            stats = ComparisonStats()
            with _Clock(timing) as clock:
                dnf = DnfExpr(tuple(normalize_clause(c, ConjClause, stats) for c in raw))
                dnf_satisfiable(dnf, early_exit=False, stats=stats)
            bad = stats.comparisons + stats.scan_ops > 4 * L or stats.sort_ops > L * math.log2(L)
            records.append(
                BenchRecord(
                    "dsat-scaling",
                    n_vars,
                    L,
                    wall_time_ms=clock.ms,
                    comparisons=stats.comparisons,
                    sort_ops=stats.sort_ops,
                    output_clauses=len(dnf),
                    violations=int(bad),
                )
            )
    return records


def cnf_blowup(
    k_min: int = 1,
    k_max: int = 10,
    cap: int = DEFAULT_CLAUSE_CAP,
    oracle_limit: int = 6,
    timing: bool = False,
) -> list[BenchRecord]:
    """Distribute ``pair_family(k)``; ``violations`` flags a csat answer that
    disagrees with the truth table (checked for ``k <= oracle_limit``)."""
    records = []
    for k in range(k_min, k_max + 1):
        cnf = pair_family(k)
        record = BenchRecord("cnf-blowup", k, len(cnf))
        with _Clock(timing) as clock:
            try:
                result = cnf_satisfiable_via_dnf(cnf, cap=cap)
            except CsatAborted as exc:
                record.aborted = 1
                record.output_clauses = exc.clauses_reached
                result = None
        record.wall_time_ms = clock.ms
        if result is not None:
            record.output_clauses = len(result.dnf)
            record.comparisons = result.stats.comparisons
            if k <= oracle_limit:
                truth = classify(embed(cnf)).satisfiable
                record.violations = int(truth != result.satisfiable)
        records.append(record)
    return records


def query_path(
    k: int = 2,
    n: int = 8,
    samples: int = 0,
    seed: int = 0,
    expressions: Sequence[str] = (),
    cost_model: str = "unit",
    budget: int = DEFAULT_NODE_BUDGET,
    timing: bool = False,
) -> list[BenchRecord]:
    """Query hosted expressions and check steps equal symbols (times m).

    With explicit ``expressions`` there is one row per expression; otherwise
    one summary row over ``samples`` random hosted expressions (all of them
    when ``samples`` is 0).
    """
    net = build(k, n, budget=budget)
    m = net.metrics
    per_symbol = net.alphabet.m if cost_model == "m" else 1

    def row(texts, tag_n):
        with _Clock(timing) as clock:
            steps = [net.query(t, cost_model).steps for t in texts]
        bad = sum(s != per_symbol * len(t) for s, t in zip(steps, texts))
        return BenchRecord(
            "query-path",
            k,
            tag_n,
            cells=m.cells,
            trie_nodes=m.trie_nodes,
            build_ops=m.build_ops,
            fast_path_fraction=m.fast_path_cells / m.cells if m.cells else 0.0,
            query_steps_mean=sum(steps) / len(steps) if steps else 0.0,
            wall_time_ms=clock.ms,
            peak_cell_count=m.cells,
            violations=bad,
            aborted=int(net.aborted),
        )

    if expressions:
        texts = [canonicalize(e) for e in expressions]
        return [row([t], len(t)) for t in texts]
    hosted = [t for t, _ in net.items() if len(t) <= net.frontier]
    if samples and samples < len(hosted):
        hosted = _rng(seed, "query", k, n).sample(hosted, samples)
    return [row(hosted, net.frontier)]


def fit_sort_constant(records: Iterable[BenchRecord]) -> tuple[float, float]:
    """Least-squares ``c`` in ``sort_ops ≈ c·L·log2 L`` and the largest
    per-run ratio."""
    xs, ys = [], []
    for r in records:
        if r.scenario == "dsat-scaling" and r.n_or_L > 1:
            xs.append(r.n_or_L * math.log2(r.n_or_L))
            ys.append(r.sort_ops)
    if not xs:
        return 0.0, 0.0
    c = sum(x * y for x, y in zip(xs, ys)) / sum(x * x for x in xs)
    return c, max(y / x for x, y in zip(xs, ys))


SCENARIOS = {
    "net-growth": net_growth,
    "dsat-scaling": dsat_scaling,
    "cnf-blowup": cnf_blowup,
    "query-path": query_path,
}


def run_scenario(name: str, **params) -> str:
    """Run one scenario and return its CSV text."""
    records = SCENARIOS[name](**params)
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()
