"""Literals, clauses and disjunctive/conjunctive normal forms.

Clauses are kept in one canonical order: un-negated literals first, then
negated ones, each block sorted by variable index.  Conversion pushes
negations down to the variables and then distributes, so the output is
equivalent to the input (not merely equisatisfiable) and may be
exponentially larger.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .expr import And, Expr, Not, Or, Var, coded, fold

__all__ = [
    "Literal",
    "ConjClause",
    "DisjClause",
    "DnfExpr",
    "CnfExpr",
    "ClauseCapError",
    "DimacsError",
    "DEFAULT_CLAUSE_CAP",
    "sort_literals",
    "normalize_clause",
    "to_nnf",
    "to_dnf",
    "to_cnf",
    "embed",
    "dnf_from_expr",
    "cnf_from_expr",
    "dumps_dimacs",
    "loads_dimacs",
]

DEFAULT_CLAUSE_CAP = 10**6


@dataclass(frozen=True, slots=True)
class Literal:
    index: int
    negated: bool = False

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"literal index must be >= 1, got {self.index}")

    @property
    def key(self) -> tuple[bool, int]:
        return (self.negated, self.index)

    def __neg__(self) -> Literal:
        return Literal(self.index, not self.negated)

    def to_expr(self) -> Expr:
        return Not(Var(self.index)) if self.negated else Var(self.index)

    def to_int(self) -> int:
        return -self.index if self.negated else self.index

    @classmethod
    def from_int(cls, value: int) -> Literal:
        if value == 0:
            raise ValueError("0 is not a literal")
        return cls(abs(value), value < 0)

    def __str__(self):
        return ("¬" if self.negated else "") + coded(self.index)


class ClauseCapError(RuntimeError):
    """Normal-form conversion produced more clauses than allowed."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"normal form exceeds {cap} clauses ({count} reached)")
        self.count = count
        self.cap = cap


@dataclass(frozen=True)
class _Clause:
    literals: tuple[Literal, ...]

    def __post_init__(self):
        lits = tuple(self.literals)
        object.__setattr__(self, "literals", lits)
        if not lits:
            raise ValueError(f"{type(self).__name__} must be nonempty")
        for a, b in zip(lits, lits[1:]):
            if not a.key < b.key:
                raise ValueError(
                    f"{type(self).__name__} is not normalized: {a} does not precede {b}"
                )

    def __len__(self):
        return len(self.literals)

    def __iter__(self):
        return iter(self.literals)

    @property
    def positives(self) -> list[int]:
        return [l.index for l in self.literals if not l.negated]

    @property
    def negatives(self) -> list[int]:
        return [l.index for l in self.literals if l.negated]


class ConjClause(_Clause):
    """Conjunction of literals (a DNF term)."""

    connective = "∧"

    def __str__(self):
        return "∧".join(map(str, self.literals))


class DisjClause(_Clause):
    """Disjunction of literals (a CNF clause)."""

    connective = "∨"

    def __str__(self):
        return "∨".join(map(str, self.literals))


@dataclass(frozen=True)
class DnfExpr:
    clauses: tuple[ConjClause, ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))
        if not self.clauses:
            raise ValueError("DNF needs at least one clause")
        if not all(isinstance(c, ConjClause) for c in self.clauses):
            raise TypeError("DNF clauses must be ConjClause")

    def __len__(self):
        return len(self.clauses)

    def variables(self) -> list[int]:
        return sorted({l.index for c in self.clauses for l in c})

    def __str__(self):
        if len(self.clauses) == 1:
            return str(self.clauses[0])
        return "∨".join(f"({c})" if len(c) > 1 else str(c) for c in self.clauses)


@dataclass(frozen=True)
class CnfExpr:
    clauses: tuple[DisjClause, ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))
        if not self.clauses:
            raise ValueError("CNF needs at least one clause")
        if not all(isinstance(c, DisjClause) for c in self.clauses):
            raise TypeError("CNF clauses must be DisjClause")

    def __len__(self):
        return len(self.clauses)

    def variables(self) -> list[int]:
        return sorted({l.index for c in self.clauses for l in c})

    def __str__(self):
        if len(self.clauses) == 1:
            return str(self.clauses[0])
        return "∧".join(f"({c})" if len(c) > 1 else str(c) for c in self.clauses)


NormalForm = Union[DnfExpr, CnfExpr]


# -- ordering ----------------------------------------------------------------


def sort_literals(literals: Sequence[Literal]) -> tuple[list[Literal], int]:
    """Merge sort into clause order, dropping duplicates while merging.

    Returns the sorted list and the number of key comparisons made.
    """
    comparisons = 0

    def merge_sort(items):
        nonlocal comparisons
        if len(items) <= 1:
            return list(items)
        mid = len(items) // 2
        left = merge_sort(items[:mid])
        right = merge_sort(items[mid:])
        out = []
        i = j = 0
        while i < len(left) and j < len(right):
            comparisons += 1
            a, b = left[i].key, right[j].key
            if a < b:
                out.append(left[i])
                i += 1
            elif b < a:
                out.append(right[j])
                j += 1
            else:
                out.append(left[i])
                i += 1
                j += 1
        out.extend(left[i:])
        out.extend(right[j:])
        return out

    return merge_sort(list(literals)), comparisons


def normalize_clause(literals: Iterable[Literal], kind=ConjClause, stats=None):
    """Put ``literals`` in clause order without duplicates.

    ``stats``, if given, has its ``sort_ops`` counter increased by the
    comparisons spent sorting.
    """
    lits = list(literals)
    if not lits:
        raise ValueError("cannot normalize an empty clause")
    ordered, comparisons = sort_literals(lits)
    if stats is not None:
        stats.sort_ops += comparisons
    return kind(tuple(ordered))


# -- conversion --------------------------------------------------------------


def to_nnf(e: Expr) -> Expr:
    """Equivalent expression with negation applied only to variables."""
    # each subtree yields the pair (nnf of it, nnf of its negation)
    return fold(
        e,
        lambda i: (Var(i), Not(Var(i))),
        lambda c: (c[1], c[0]),
        lambda l, r: (Or(l[0], r[0]), And(l[1], r[1])),
        lambda l, r: (And(l[0], r[0]), Or(l[1], r[1])),
    )[0]


def _distribute(e: Expr, product_on_and: bool, cap: int) -> list[frozenset[Literal]]:
    def concat(a, b):
        out = dict.fromkeys(a)
        out.update(dict.fromkeys(b))
        if len(out) > cap:
            raise ClauseCapError(len(out), cap)
        return list(out)

    def product(a, b):
        out: dict[frozenset, None] = {}
        for x in a:
            for y in b:
                out[x | y] = None
                if len(out) > cap:
                    raise ClauseCapError(len(out), cap)
        return list(out)

    # fold sees Not only directly above a Var after to_nnf
    return fold(
        to_nnf(e),
        lambda i: [frozenset([Literal(i)])],
        lambda c: [frozenset(-l for l in next(iter(c)))],
        product if not product_on_and else concat,
        product if product_on_and else concat,
    )


def _drop_complementary(clauses):
    return [c for c in clauses if not any(-l in c for l in c)]


def to_dnf(e: Expr, cap: int = DEFAULT_CLAUSE_CAP, drop_contradictions: bool = False) -> DnfExpr:
    """Equivalent disjunction of conjunctive clauses.

    Clauses containing both a variable and its negation are kept unless
    ``drop_contradictions`` is set.  Raises :class:`ClauseCapError` once
    more than ``cap`` distinct clauses are reached.
    """
    clauses = _distribute(e, product_on_and=True, cap=cap)
    if drop_contradictions:
        clauses = _drop_complementary(clauses)
        if not clauses:
            # every term contradicts itself; keep one to stay a valid DNF
            return DnfExpr((ConjClause((Literal(1), Literal(1, True))),))
    return DnfExpr(tuple(normalize_clause(c, ConjClause) for c in clauses))


def to_cnf(e: Expr, cap: int = DEFAULT_CLAUSE_CAP, drop_tautologies: bool = False) -> CnfExpr:
    """Equivalent conjunction of disjunctive clauses; dual of :func:`to_dnf`."""
    clauses = _distribute(e, product_on_and=False, cap=cap)
    if drop_tautologies:
        clauses = _drop_complementary(clauses)
        if not clauses:
            return CnfExpr((DisjClause((Literal(1), Literal(1, True))),))
    return CnfExpr(tuple(normalize_clause(c, DisjClause) for c in clauses))


def _chain(items: list[Expr], node) -> Expr:
    acc = items[0]
    for item in items[1:]:
        acc = node(acc, item)
    return acc


def embed(nf: NormalForm | ConjClause | DisjClause) -> Expr:
    """Expression tree with the same semantics as a normal form."""
    if isinstance(nf, ConjClause):
        return _chain([l.to_expr() for l in nf], And)
    if isinstance(nf, DisjClause):
        return _chain([l.to_expr() for l in nf], Or)
    if isinstance(nf, DnfExpr):
        return _chain([embed(c) for c in nf.clauses], Or)
    if isinstance(nf, CnfExpr):
        return _chain([embed(c) for c in nf.clauses], And)
    raise TypeError(f"cannot embed {type(nf).__name__}")


def _flatten(e: Expr, node) -> list[Expr]:
    out, stack = [], [e]
    while stack:
        cur = stack.pop()
        if isinstance(cur, node):
            stack.append(cur.right)
            stack.append(cur.left)
        else:
            out.append(cur)
    return out


def _as_literal(e: Expr) -> Literal | None:
    if isinstance(e, Var):
        return Literal(e.index)
    if isinstance(e, Not) and isinstance(e.child, Var):
        return Literal(e.child.index, True)
    return None


def _read_normal_form(e: Expr, outer, inner, clause_kind, form_kind, name):
    clauses = []
    for term in _flatten(e, outer):
        lits = [_as_literal(x) for x in _flatten(term, inner)]
        if any(l is None for l in lits):
            raise ValueError(f"expression is not in {name}: {term}")
        clauses.append(normalize_clause(lits, clause_kind))
    return form_kind(tuple(clauses))


def dnf_from_expr(e: Expr) -> DnfExpr:
    """Read an expression that is already syntactically a DNF."""
    return _read_normal_form(e, Or, And, ConjClause, DnfExpr, "DNF")


def cnf_from_expr(e: Expr) -> CnfExpr:
    """Read an expression that is already syntactically a CNF."""
    return _read_normal_form(e, And, Or, DisjClause, CnfExpr, "CNF")


# -- DIMACS-style text -------------------------------------------------------


class DimacsError(ValueError):
    pass


def dumps_dimacs(nf: NormalForm) -> str:
    """``p cnf``/``p dnf`` header, then one 0-terminated clause per line."""
    tag = "cnf" if isinstance(nf, CnfExpr) else "dnf"
    nvars = max(nf.variables())
    lines = [f"p {tag} {nvars} {len(nf.clauses)}"]
    lines.extend(" ".join(str(l.to_int()) for l in c) + " 0" for c in nf.clauses)
    return "\n".join(lines) + "\n"


def loads_dimacs(text: str) -> NormalForm:
    header = None
    tokens: list[int] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] not in ("cnf", "dnf"):
                raise DimacsError(f"line {lineno}: bad problem line {line!r}")
            try:
                header = (parts[1], int(parts[2]), int(parts[3]))
            except ValueError:
                raise DimacsError(f"line {lineno}: bad problem line {line!r}") from None
            continue
        if header is None:
            raise DimacsError(f"line {lineno}: clause before problem line")
        try:
            tokens.extend(int(tok) for tok in line.split())
        except ValueError:
            raise DimacsError(f"line {lineno}: non-integer literal") from None
    if header is None:
        raise DimacsError("missing problem line")
    tag, nvars, nclauses = header
    kind, form = (DisjClause, CnfExpr) if tag == "cnf" else (ConjClause, DnfExpr)

    clauses, current = [], []
    for tok in tokens:
        if tok == 0:
            if not current:
                raise DimacsError("empty clause")
            clauses.append(normalize_clause(current, kind))
            current = []
        else:
            if abs(tok) > nvars:
                raise DimacsError(f"literal {tok} exceeds declared {nvars} variables")
            current.append(Literal.from_int(tok))
    if current:
        raise DimacsError("last clause is not 0-terminated")
    if len(clauses) != nclauses:
        raise DimacsError(f"header declares {nclauses} clauses, found {len(clauses)}")
    return form(tuple(clauses))
