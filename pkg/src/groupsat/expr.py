"""Boolean expressions over a finite coded alphabet.

Variables are written in unary: ``x1`` is variable 1, ``x11111`` is
variable 5.  With that coding every expression is a word over the seven
symbols ``x 1 ¬ ∨ ∧ ( )``.

Operator precedence is ``¬`` over ``∧`` over ``∨``; binary chains associate
to the left.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Callable, Iterator, Mapping, TypeVar

__all__ = [
    "Alphabet",
    "ALPHABET",
    "Expr",
    "Var",
    "Not",
    "Or",
    "And",
    "ParseError",
    "EvaluationError",
    "DecomposeError",
    "EnumerationBudgetError",
    "LengthMeasure",
    "Atom",
    "Negation",
    "Binary",
    "canonicalize",
    "coded",
    "parse",
    "render",
    "evaluate",
    "variables",
    "length",
    "decompose",
    "is_well_formed",
    "enumerate_expressions",
    "fold",
]

VAR_MARK = "x"
DIGIT_MARK = "1"
NOT = "¬"
OR = "∨"
AND = "∧"
LPAREN = "("
RPAREN = ")"

ASCII_ALIASES = {"!": NOT, "~": NOT, "|": OR, "&": AND}


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...] = (VAR_MARK, DIGIT_MARK, NOT, OR, AND, LPAREN, RPAREN)

    def __post_init__(self):
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be distinct")
        if len(self.symbols) < 7:
            raise ValueError("alphabet needs at least 7 symbols")

    @property
    def m(self) -> int:
        return len(self.symbols)

    def __contains__(self, ch: str) -> bool:
        return ch in self.symbols


ALPHABET = Alphabet()


class ParseError(ValueError):
    """Malformed expression text.  ``position`` is 1-based."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class EvaluationError(KeyError):
    def __init__(self, index: int):
        super().__init__(f"no truth value for variable {index} ({coded(index)})")
        self.index = index

    def __str__(self):
        return self.args[0]


class DecomposeError(ValueError):
    pass


class EnumerationBudgetError(RuntimeError):
    def __init__(self, produced: int, budget: int, length: int):
        super().__init__(
            f"enumeration budget of {budget} expressions exceeded while "
            f"generating length {length} ({produced} produced so far)"
        )
        self.produced = produced
        self.budget = budget
        self.length = length


# -- syntax tree -------------------------------------------------------------


class Expr:
    __slots__ = ()

    def __str__(self):
        return render(self)

    def __invert__(self) -> Expr:
        return Not(self)

    def __or__(self, other: Expr) -> Expr:
        return Or(self, other)

    def __and__(self, other: Expr) -> Expr:
        return And(self, other)


@dataclass(frozen=True, slots=True)
class Var(Expr):
    index: int

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 1:
            raise ValueError(f"variable index must be a positive integer, got {self.index!r}")


@dataclass(frozen=True, slots=True)
class Not(Expr):
    child: Expr


@dataclass(frozen=True, slots=True)
class Or(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class And(Expr):
    left: Expr
    right: Expr


T = TypeVar("T")


def fold(
    e: Expr,
    var: Callable[[int], T],
    neg: Callable[[T], T],
    disj: Callable[[T, T], T],
    conj: Callable[[T, T], T],
) -> T:
    """Bottom-up reduction of ``e`` without recursion.

    Long clause chains produce trees thousands of nodes deep, so every
    traversal in the package goes through this explicit-stack fold.
    """
    stack: list[tuple[Expr, bool]] = [(e, False)]
    out: list[T] = []
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, Var):
            out.append(var(node.index))
        elif isinstance(node, Not):
            if expanded:
                out.append(neg(out.pop()))
            else:
                stack.append((node, True))
                stack.append((node.child, False))
        elif isinstance(node, (Or, And)):
            if expanded:
                right = out.pop()
                left = out.pop()
                out.append(disj(left, right) if isinstance(node, Or) else conj(left, right))
            else:
                stack.append((node, True))
                stack.append((node.right, False))
                stack.append((node.left, False))
        else:
            raise TypeError(f"not an expression node: {node!r}")
    return out[0]


# -- text --------------------------------------------------------------------


def coded(index: int) -> str:
    """``coded(5) == "x11111"``."""
    return VAR_MARK + DIGIT_MARK * index


def canonicalize(text: str) -> str:
    """Map ASCII aliases to canonical symbols and drop whitespace."""
    return "".join(ASCII_ALIASES.get(ch, ch) for ch in text if not ch.isspace())


def _tokens(text: str) -> list[tuple[str, int, int]]:
    # (kind, value, 1-based position); kind is a canonical symbol, "var" or "end"
    toks = []
    i = 0
    while i < len(text):
        ch = ASCII_ALIASES.get(text[i], text[i])
        if ch.isspace():
            i += 1
        elif ch == VAR_MARK:
            j = i + 1
            while j < len(text) and text[j] == DIGIT_MARK:
                j += 1
            if j == i + 1:
                raise ParseError("variable mark without index digits", i + 1)
            toks.append(("var", j - i - 1, i + 1))
            i = j
        elif ch in (NOT, OR, AND, LPAREN, RPAREN):
            toks.append((ch, 0, i + 1))
            i += 1
        else:
            raise ParseError(f"unexpected character {text[i]!r}", i + 1)
    toks.append(("end", 0, len(text) + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def disjunction(self) -> Expr:
        e = self.conjunction()
        while self.peek()[0] == OR:
            self.take()
            e = Or(e, self.conjunction())
        return e

    def conjunction(self) -> Expr:
        e = self.unary()
        while self.peek()[0] == AND:
            self.take()
            e = And(e, self.unary())
        return e

    def unary(self) -> Expr:
        negations = 0
        while self.peek()[0] == NOT:
            self.take()
            negations += 1
        e = self.primary()
        for _ in range(negations):
            e = Not(e)
        return e

    def primary(self) -> Expr:
        kind, value, position = self.take()
        if kind == "var":
            return Var(value)
        if kind == LPAREN:
            e = self.disjunction()
            kind, _, close = self.take()
            if kind != RPAREN:
                raise ParseError("expected ')'", close)
            return e
        if kind == "end":
            raise ParseError("expected operand, found end of input", position)
        raise ParseError(f"expected operand, found {kind!r}", position)


def parse(text: str) -> Expr:
    """Parse expression text into a syntax tree.

    >>> parse("x1∨¬x1")
    Or(left=Var(index=1), right=Not(child=Var(index=1)))
    """
    if not text or text.isspace():
        raise ParseError("empty expression", 1)
    p = _Parser(text)
    e = p.disjunction()
    kind, _, position = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {kind!r}", position)
    return e


_ATOM, _CONJ, _DISJ = 3, 2, 1


def render(e: Expr) -> str:
    """Canonical text for ``e`` with the minimum parentheses."""

    def wrap(item, tighter_than):
        s, prec = item
        return f"({s})" if prec < tighter_than else s

    return fold(
        e,
        lambda i: (coded(i), _ATOM),
        lambda c: (NOT + wrap(c, _ATOM), _ATOM),
        lambda l, r: (wrap(l, _DISJ) + OR + wrap(r, _CONJ), _DISJ),
        lambda l, r: (wrap(l, _CONJ) + AND + wrap(r, _ATOM), _CONJ),
    )[0]


# -- semantics ---------------------------------------------------------------


def evaluate(e: Expr, assignment: Mapping[int, int]) -> int:
    """Truth value of ``e`` (0 or 1) under ``assignment``."""

    def lookup(i):
        try:
            return 1 if assignment[i] else 0
        except KeyError:
            raise EvaluationError(i) from None

    return fold(e, lookup, lambda a: 1 - a, lambda a, b: a | b, lambda a, b: a & b)


def variables(e: Expr) -> list[int]:
    return sorted(fold(e, lambda i: {i}, lambda s: s, set.union, set.union))


class LengthMeasure(enum.Enum):
    SYMBOL_COUNT = "a"          # variables count as one symbol each
    VARIABLE_OCCURRENCES = "b"
    DISTINCT_VARIABLES = "c"
    CODED_SYMBOL_COUNT = "d"    # characters of the unary-coded text


def length(e: Expr, measure: LengthMeasure = LengthMeasure.CODED_SYMBOL_COUNT) -> int:
    measure = LengthMeasure(measure)
    if measure is LengthMeasure.CODED_SYMBOL_COUNT:
        return len(render(e))
    if measure is LengthMeasure.DISTINCT_VARIABLES:
        return len(variables(e))
    if measure is LengthMeasure.VARIABLE_OCCURRENCES:
        return fold(e, lambda i: 1, lambda c: c, int.__add__, int.__add__)
    text = render(e)
    return len(text) - text.count(DIGIT_MARK)


# -- top-level separation ----------------------------------------------------


@dataclass(frozen=True)
class Atom:
    """A bare variable: the base case, nothing to separate."""

    index: int


@dataclass(frozen=True)
class Negation:
    body: str
    wrapped: bool


@dataclass(frozen=True)
class Binary:
    op: str
    left: str
    right: str
    wrapped: tuple[bool, bool]


def _is_wrapped(s: str) -> bool:
    if len(s) < 2 or s[0] != LPAREN or s[-1] != RPAREN:
        return False
    depth = 0
    for i, ch in enumerate(s):
        if ch == LPAREN:
            depth += 1
        elif ch == RPAREN:
            depth -= 1
            if depth == 0:
                return i == len(s) - 1
    return False


def _strip(s: str) -> tuple[str, bool]:
    return (s[1:-1], True) if _is_wrapped(s) else (s, False)


def decompose(text: str) -> Atom | Negation | Binary:
    """Separate ``text`` at its top-level connective.

    The split point is the last top-level ``∨`` if there is one, else the
    last top-level ``∧``, else a leading ``¬``.  One layer of parentheses
    enclosing a whole component is removed and reported in ``wrapped``.

    >>> decompose("x1∨x11∧x111")
    Binary(op='∨', left='x1', right='x11∧x111', wrapped=(False, False))
    >>> decompose("¬(x1∨x11)")
    Negation(body='x1∨x11', wrapped=True)
    """
    text = canonicalize(text)
    if not text:
        raise DecomposeError("empty expression")
    depth = 0
    last_or = last_and = -1
    for i, ch in enumerate(text):
        if ch == LPAREN:
            depth += 1
        elif ch == RPAREN:
            depth -= 1
            if depth < 0:
                raise DecomposeError(f"unbalanced ')' at position {i + 1}")
        elif depth == 0:
            if ch == OR:
                last_or = i
            elif ch == AND:
                last_and = i
    if depth != 0:
        raise DecomposeError("unbalanced '('")
    split = last_or if last_or >= 0 else last_and
    if split >= 0:
        left, wl = _strip(text[:split])
        right, wr = _strip(text[split + 1:])
        if not left or not right:
            raise DecomposeError(f"missing operand for {text[split]!r} at position {split + 1}")
        return Binary(text[split], left, right, (wl, wr))
    if text[0] == NOT:
        body, wrapped = _strip(text[1:])
        if not body:
            raise DecomposeError("negation without operand")
        return Negation(body, wrapped)
    if text[0] == VAR_MARK and len(text) > 1 and text.count(DIGIT_MARK) == len(text) - 1:
        return Atom(len(text) - 1)
    if _is_wrapped(text):
        raise DecomposeError(f"{text!r} is a bare parenthesized expression")
    raise DecomposeError(f"{text!r} is not an expression")


@functools.lru_cache(maxsize=1 << 16)
def is_well_formed(text: str, extra_parens: bool = False) -> bool:
    """True if ``text`` is produced by the expression-building rules.

    Those rules are: a variable; ``¬A`` and ``¬(A)``; ``A∨B``, ``A∧B``,
    ``(A)∨(B)`` and ``(A)∧(B)``, where the top-level separation of the
    result must agree with operator precedence.  ``extra_parens`` also
    admits one-sided forms such as ``(A)∨B``.
    """
    try:
        d = decompose(text)
    except DecomposeError:
        return False
    if isinstance(d, Atom):
        return True
    if isinstance(d, Negation):
        return is_well_formed(d.body, extra_parens)
    if not extra_parens and d.wrapped[0] != d.wrapped[1]:
        return False
    return is_well_formed(d.left, extra_parens) and is_well_formed(d.right, extra_parens)


def enumerate_expressions(
    variable_count: int,
    max_len: int,
    *,
    extra_parens: bool = False,
    budget: int | None = 5_000_000,
) -> Iterator[str]:
    """Yield every well-formed expression over ``x1..xk`` up to ``max_len``
    coded symbols, shortest first, each exactly once.

    Strings are grouped by the precedence class of their top-level
    connective so each one is built from the unique decomposition that
    :func:`decompose` later recovers.  ``budget`` caps the total number of
    strings; exceeding it raises :class:`EnumerationBudgetError` after the
    already-yielded strings.
    """
    if variable_count < 1:
        raise ValueError("variable_count must be >= 1")
    if max_len < 2:
        raise ValueError("max_len must be >= 2")

    unary: dict[int, list[str]] = {}
    conj: dict[int, list[str]] = {}
    disj: dict[int, list[str]] = {}

    def every(n):
        return unary.get(n, []) + conj.get(n, []) + disj.get(n, [])

    def no_or(n):
        return unary.get(n, []) + conj.get(n, [])

    produced = 0
    for n in range(2, max_len + 1):
        u: list[str] = []
        if n - 1 <= variable_count:
            u.append(coded(n - 1))
        u.extend(NOT + a for a in unary.get(n - 1, ()))
        u.extend(NOT + LPAREN + a + RPAREN for a in every(n - 3))

        c: list[str] = []
        d: list[str] = []
        for a in range(2, n - 2):
            b = n - 1 - a
            c.extend(x + AND + y for x in no_or(a) for y in unary.get(b, ()))
            d.extend(x + OR + y for x in every(a) for y in no_or(b))
        for a in range(2, n - 6):
            b = n - 5 - a
            for x in every(a):
                for y in every(b):
                    c.append(f"({x}){AND}({y})")
                    d.append(f"({x}){OR}({y})")
        if extra_parens:
            # one-sided wrapping: (A)∧B, A∧(B), (A)∨B, A∨(B)
            for a in range(2, n - 4):
                b = n - 3 - a
                c.extend(f"({x}){AND}{y}" for x in every(a) for y in unary.get(b, ()))
                d.extend(f"({x}){OR}{y}" for x in every(a) for y in no_or(b))
                a2, b2 = b, a
                c.extend(f"{x}{AND}({y})" for x in no_or(a2) for y in every(b2))
                d.extend(f"{x}{OR}({y})" for x in every(a2) for y in every(b2))

        unary[n], conj[n], disj[n] = u, c, d
        for s in u + c + d:
            produced += 1
            if budget is not None and produced > budget:
                raise EnumerationBudgetError(produced - 1, budget, n)
            yield s
