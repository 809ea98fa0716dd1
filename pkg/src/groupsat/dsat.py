"""Satisfiability of normal forms by complementary-pair detection.

A conjunctive clause is satisfiable exactly when no variable occurs in it
both plain and negated.  With the clause in canonical order the plain
indices and the negated indices are two sorted lists, and a two-pointer
scan finds a common index with fewer than ``d(L) + d(M)`` comparisons,
inside the ``2(d(L) + d(M))`` budget.  A DNF is satisfiable iff one of its
clauses is.  CNF input is first distributed into DNF.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import NamedTuple, Sequence

from .normal_forms import (
    DEFAULT_CLAUSE_CAP,
    ClauseCapError,
    CnfExpr,
    ConjClause,
    DnfExpr,
    embed,
    to_dnf,
)

__all__ = [
    "ComparisonStats",
    "PreconditionError",
    "CsatAborted",
    "SatResult",
    "CsatResult",
    "find_equal",
    "clause_satisfiable",
    "dnf_satisfiable",
    "cnf_satisfiable_via_dnf",
]


@dataclass
class ComparisonStats:
    comparisons: int = 0      # index comparisons in the pair search
    sort_ops: int = 0         # comparisons spent putting clauses in order
    scan_ops: int = 0         # literals visited while splitting by polarity
    clauses_checked: int = 0
    aborted_early: bool = False

    def __iadd__(self, other: ComparisonStats) -> ComparisonStats:
        self.comparisons += other.comparisons
        self.sort_ops += other.sort_ops
        self.scan_ops += other.scan_ops
        self.clauses_checked += other.clauses_checked
        self.aborted_early = self.aborted_early or other.aborted_early
        return self

    @classmethod
    def csv_header(cls) -> str:
        return ",".join(f.name for f in fields(cls))

    def csv_row(self) -> str:
        return ",".join(str(int(v)) for v in asdict(self).values())


class PreconditionError(ValueError):
    pass


class SatResult(NamedTuple):
    satisfiable: bool
    witness: dict[int, int] | None
    stats: ComparisonStats


class CsatResult(NamedTuple):
    satisfiable: bool
    witness: dict[int, int] | None
    blowup: Fraction
    stats: ComparisonStats
    dnf: DnfExpr


class CsatAborted(RuntimeError):
    def __init__(self, clauses_reached: int, input_clauses: int, cap: int):
        self.blowup = Fraction(clauses_reached, input_clauses)
        self.clauses_reached = clauses_reached
        self.cap = cap
        super().__init__(
            f"CNF to DNF conversion aborted at {clauses_reached} clauses "
            f"(cap {cap}, blowup so far {float(self.blowup):g}x)"
        )


def _check_strictly_increasing(name: str, xs: Sequence[int]) -> None:
    for a, b in zip(xs, xs[1:]):
        if not a < b:
            raise PreconditionError(f"list {name} is not strictly increasing: {a} then {b}")


def find_equal(
    L: Sequence[int], M: Sequence[int], stats: ComparisonStats | None = None
) -> tuple[int | None, ComparisonStats]:
    """Return an index present in both sorted lists, or None.

    Each step compares the two current heads once: equal heads end the
    search, otherwise the smaller head is skipped.
    """
    _check_strictly_increasing("L", L)
    _check_strictly_increasing("M", M)
    if stats is None:
        stats = ComparisonStats()
    i = j = 0
    while i < len(L) and j < len(M):
        stats.comparisons += 1
        a, b = L[i], M[j]
        if a == b:
            return a, stats
        if a < b:
            i += 1
        else:
            j += 1
    return None, stats


def _split(clause: ConjClause, stats: ComparisonStats) -> tuple[list[int], list[int]]:
    positives, negatives = [], []
    for lit in clause.literals:
        stats.scan_ops += 1
        (negatives if lit.negated else positives).append(lit.index)
    return positives, negatives


def clause_satisfiable(clause: ConjClause, stats: ComparisonStats | None = None) -> SatResult:
    """Decide a conjunctive clause; the witness sets plain variables to 1
    and negated ones to 0."""
    if not isinstance(clause, ConjClause):
        raise PreconditionError(f"expected a normalized ConjClause, got {type(clause).__name__}")
    if stats is None:
        stats = ComparisonStats()
    stats.clauses_checked += 1
    positives, negatives = _split(clause, stats)
    match, _ = find_equal(positives, negatives, stats)
    if match is not None:
        return SatResult(False, None, stats)
    witness = {i: 1 for i in positives}
    witness.update((i, 0) for i in negatives)
    return SatResult(True, dict(sorted(witness.items())), stats)


def dnf_satisfiable(
    dnf: DnfExpr, early_exit: bool = True, stats: ComparisonStats | None = None
) -> SatResult:
    """Check clauses in order; satisfiable iff some clause is.

    Variables of the DNF outside the satisfied clause are set to 0 in the
    witness.  With ``early_exit=False`` every clause is checked, which keeps
    cost measurements independent of where the first satisfiable clause is.
    """
    if stats is None:
        stats = ComparisonStats()
    found = None
    for pos, clause in enumerate(dnf.clauses):
        result = clause_satisfiable(clause, stats)
        if result.satisfiable and found is None:
            found = result.witness
            if early_exit:
                stats.aborted_early = pos < len(dnf.clauses) - 1
                break
    if found is None:
        return SatResult(False, None, stats)
    witness = {i: 0 for i in dnf.variables()}
    witness.update(found)
    return SatResult(True, witness, stats)


def cnf_satisfiable_via_dnf(
    cnf: CnfExpr, cap: int = DEFAULT_CLAUSE_CAP, early_exit: bool = True
) -> CsatResult:
    """Distribute the CNF into an equivalent DNF, then run the DNF check.

    ``blowup`` is output clauses over input clauses.  Distribution is
    exponential in the worst case; past ``cap`` clauses :class:`CsatAborted`
    is raised with the blowup reached so far.
    """
    try:
        dnf = to_dnf(embed(cnf), cap=cap)
    except ClauseCapError as exc:
        raise CsatAborted(exc.count, len(cnf.clauses), cap) from exc
    sat, witness, stats = dnf_satisfiable(dnf, early_exit=early_exit)
    return CsatResult(sat, witness, Fraction(len(dnf.clauses), len(cnf.clauses)), stats, dnf)
