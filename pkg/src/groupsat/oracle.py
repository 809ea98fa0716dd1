"""Exhaustive truth-table classification.

Deliberately naive: every assignment of the expression's variables is
evaluated.  All other solvers in the package are checked against it.
"""

from __future__ import annotations

import enum

import numpy as np

from .expr import Expr, fold, variables

__all__ = [
    "Status",
    "OracleCapError",
    "DEFAULT_VARIABLE_CAP",
    "truth_table",
    "classify",
    "count_satisfying",
    "find_witness",
]

DEFAULT_VARIABLE_CAP = 20


class Status(enum.Enum):
    """Satisfiability class; the value is the cell symbol."""

    UNSAT = "0"
    SAT_STRICT = "1"
    TAUT = "t"

    @property
    def symbol(self) -> str:
        return self.value

    @property
    def satisfiable(self) -> bool:
        return self is not Status.UNSAT

    @property
    def tautology(self) -> bool:
        return self is Status.TAUT

    @classmethod
    def from_bits(cls, satisfiable: bool, tautology: bool) -> Status:
        if tautology:
            if not satisfiable:
                raise ValueError("a tautology is satisfiable")
            return cls.TAUT
        return cls.SAT_STRICT if satisfiable else cls.UNSAT


class OracleCapError(ValueError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"expression has {count} distinct variables; oracle cap is {cap}")
        self.count = count
        self.cap = cap


def truth_table(e: Expr, cap: int = DEFAULT_VARIABLE_CAP) -> tuple[list[int], np.ndarray]:
    """Return ``(vars, values)`` where ``values[r]`` is ``e`` under row ``r``.

    Row ``r`` assigns to ``vars[j]`` bit ``v - 1 - j`` of ``r``, so rows run
    lexicographically from all-zeros with the lowest index most significant.
    """
    vs = variables(e)
    if len(vs) > cap:
        raise OracleCapError(len(vs), cap)
    v = len(vs)
    rows = np.arange(1 << v, dtype=np.uint32)
    column = {i: ((rows >> (v - 1 - j)) & 1).astype(bool) for j, i in enumerate(vs)}
    values = fold(e, column.__getitem__, np.logical_not, np.logical_or, np.logical_and)
    return vs, values


def count_satisfying(e: Expr, cap: int = DEFAULT_VARIABLE_CAP) -> int:
    return int(np.count_nonzero(truth_table(e, cap)[1]))


def classify(e: Expr, cap: int = DEFAULT_VARIABLE_CAP) -> Status:
    _, values = truth_table(e, cap)
    if values.all():
        return Status.TAUT
    return Status.SAT_STRICT if values.any() else Status.UNSAT


def find_witness(e: Expr, cap: int = DEFAULT_VARIABLE_CAP) -> dict[int, int] | None:
    """Lexicographically first satisfying assignment, or None."""
    vs, values = truth_table(e, cap)
    hits = np.flatnonzero(values)
    if hits.size == 0:
        return None
    row = int(hits[0])
    v = len(vs)
    return {i: (row >> (v - 1 - j)) & 1 for j, i in enumerate(vs)}
