"""Precomputed satisfiability network.

Every well-formed expression up to a length bound gets a status cell at
the end of its symbol path through a trie of switching nodes, one outlet
per alphabet symbol.  Cells are filled shortest first: an expression is
separated at its top-level connective and its status is composed from the
already-filled cells of its parts.  Afterwards a query costs one switch per
input symbol.

Composition uses only these facts about an expression ``D`` and ``H``:

* ``¬D`` is satisfiable iff ``D`` is not a tautology
* ``¬D`` is a tautology iff ``D`` is not satisfiable
* ``D∨H`` is satisfiable iff ``D`` or ``H`` is
* ``D∧H`` is a tautology iff both are

They decide every negation, but leave some disjunctions (is it a
tautology?) and conjunctions (is it satisfiable?) open.  Those cells are
settled by the truth-table oracle (policy ``"oracle"``) or left marked
unresolved (policy ``"audit"``).
"""

from __future__ import annotations

import enum
import hashlib
import io
import os
from dataclasses import dataclass, field
from typing import BinaryIO, Iterator, NamedTuple, TextIO, Union

from .expr import (
    ALPHABET,
    AND,
    NOT,
    OR,
    Alphabet,
    Atom,
    Negation,
    canonicalize,
    decompose,
    enumerate_expressions,
    parse,
    variables,
)
from .oracle import Status, classify

__all__ = [
    "Resolution",
    "Cell",
    "SwitchNode",
    "NetworkMetrics",
    "Network",
    "QueryResult",
    "NotInNetworkError",
    "UnresolvedCellError",
    "NetworkFileError",
    "ChecksumError",
    "VersionError",
    "DEFAULT_NODE_BUDGET",
    "POLICIES",
    "COST_MODELS",
    "compose_status",
    "build",
    "query",
    "metrics",
    "save",
    "load",
    "dumps",
    "loads",
]

DEFAULT_NODE_BUDGET = 10**7
POLICIES = ("oracle", "audit")
COST_MODELS = ("unit", "m")
FORMAT_VERSION = "v1"
BASE_CASE_OPS = 2


class Resolution(enum.Enum):
    BASE_CASE = "base"
    NEG_SAT_RULE = "neg-sat"
    OR_SAT_RULE = "or-sat"
    AND_TAUT_RULE = "and-taut"
    NEG_TAUT_RULE = "neg-taut"
    ORACLE_FALLBACK = "oracle"
    UNRESOLVED = "unresolved"

    @property
    def fast_path(self) -> bool:
        return self in _FAST_PATH


_FAST_PATH = {
    Resolution.NEG_SAT_RULE,
    Resolution.OR_SAT_RULE,
    Resolution.AND_TAUT_RULE,
    Resolution.NEG_TAUT_RULE,
}


@dataclass(frozen=True, slots=True)
class Cell:
    status: Status | None        # None only for UNRESOLVED cells
    resolved_by: Resolution

    @property
    def symbol(self) -> str:
        return "?" if self.status is None else self.status.symbol


class SwitchNode:
    __slots__ = ("children", "cell")

    def __init__(self):
        self.children: dict[str, SwitchNode] = {}
        self.cell: Cell | None = None


@dataclass
class NetworkMetrics:
    cells: int = 0
    trie_nodes: int = 1
    build_ops: int = 0
    base_cells: int = 0
    fast_path_cells: int = 0
    fallback_cells: int = 0   # oracle fallbacks plus unresolved cells
    cells_by_length: dict[int, int] = field(default_factory=dict)
    unresolved_by_length: dict[int, int] = field(default_factory=dict)

    def unresolved_fraction(self, length: int) -> float:
        total = self.cells_by_length.get(length, 0)
        return self.unresolved_by_length.get(length, 0) / total if total else 0.0

    def cumulative_cells(self) -> dict[int, int]:
        out, running = {}, 0
        for n in sorted(self.cells_by_length):
            running += self.cells_by_length[n]
            out[n] = running
        return out


class QueryResult(NamedTuple):
    status: Status
    steps: int


class NotInNetworkError(LookupError):
    pass


class UnresolvedCellError(LookupError):
    pass


class NetworkFileError(ValueError):
    pass


class ChecksumError(NetworkFileError):
    pass


class VersionError(NetworkFileError):
    pass


def compose_status(connective: str, left: Status, right: Status | None = None) -> Status | None:
    """Status of a compound from its parts' statuses, or None when the four
    composition facts do not fix it."""
    connective = canonicalize(connective)
    if connective == NOT:
        if right is not None:
            raise ValueError("negation takes one operand")
        return Status.from_bits(not left.tautology, not left.satisfiable)
    if right is None:
        raise ValueError(f"{connective!r} takes two operands")
    if connective == OR:
        sat = left.satisfiable or right.satisfiable
        if left.tautology or right.tautology:
            return Status.TAUT
        if not sat:
            return Status.UNSAT
        return None
    if connective == AND:
        taut = left.tautology and right.tautology
        if taut:
            return Status.TAUT
        if not left.satisfiable or not right.satisfiable:
            return Status.UNSAT
        return None
    raise ValueError(f"unknown connective {connective!r}")


class Network:
    def __init__(
        self,
        variable_count: int,
        policy: str = "oracle",
        cost_model: str = "unit",
        alphabet: Alphabet = ALPHABET,
        extra_parens: bool = False,
    ):
        if policy not in POLICIES:
            raise ValueError(f"policy must be one of {POLICIES}")
        if cost_model not in COST_MODELS:
            raise ValueError(f"cost model must be one of {COST_MODELS}")
        self.root = SwitchNode()
        self.frontier = 0
        self.variable_count = variable_count
        self.policy = policy
        self.cost_model = cost_model
        self.alphabet = alphabet
        self.extra_parens = extra_parens
        self.metrics = NetworkMetrics()
        self.aborted = False
        self._hosted: list[str] = []

    def __repr__(self):
        return (
            f"<Network k={self.variable_count} n={self.frontier} policy={self.policy} "
            f"cells={self.metrics.cells}{' aborted' if self.aborted else ''}>"
        )

    def __len__(self):
        return self.metrics.cells

    def _node(self, text: str) -> SwitchNode | None:
        node = self.root
        for ch in text:
            node = node.children.get(ch)
            if node is None:
                return None
        return node

    def _insert(self, text: str, budget: int) -> SwitchNode | None:
        node = self.root
        for ch in text:
            nxt = node.children.get(ch)
            if nxt is None:
                if self.metrics.trie_nodes >= budget:
                    return None
                nxt = node.children[ch] = SwitchNode()
                self.metrics.trie_nodes += 1
            node = nxt
        return node

    def _store(self, text: str, node: SwitchNode, cell: Cell) -> None:
        node.cell = cell
        self._hosted.append(text)
        m = self.metrics
        m.cells += 1
        n = len(text)
        m.cells_by_length[n] = m.cells_by_length.get(n, 0) + 1
        if cell.resolved_by is Resolution.BASE_CASE:
            m.base_cells += 1
        elif cell.resolved_by.fast_path:
            m.fast_path_cells += 1
        else:
            m.fallback_cells += 1
            if cell.resolved_by is Resolution.UNRESOLVED:
                m.unresolved_by_length[n] = m.unresolved_by_length.get(n, 0) + 1

    def cell(self, text: str) -> Cell:
        text = canonicalize(text)
        node = self._node(text) if len(text) <= self.frontier else None
        if node is None or node.cell is None:
            raise NotInNetworkError(f"{text!r} has no cell in {self!r}")
        return node.cell

    def query(self, text: str, cost_model: str | None = None) -> QueryResult:
        """Walk one switch per symbol to the expression's cell."""
        text = canonicalize(text)
        if len(text) > self.frontier:
            raise NotInNetworkError(f"{text!r} is longer than the frontier {self.frontier}")
        cost_model = cost_model or self.cost_model
        per_switch = self.alphabet.m if cost_model == "m" else 1
        node, steps = self.root, 0
        for ch in text:
            node = node.children.get(ch)
            if node is None:
                raise NotInNetworkError(f"{text!r} is not a hosted expression")
            steps += per_switch
        if node.cell is None:
            raise NotInNetworkError(f"{text!r} is not a hosted expression")
        if node.cell.status is None:
            raise UnresolvedCellError(f"{text!r} was left unresolved by the audit build")
        return QueryResult(node.cell.status, steps)

    def items(self) -> Iterator[tuple[str, Cell]]:
        """Hosted expressions with their cells, in build order."""
        for text in self._hosted:
            yield text, self._node(text).cell


def build(
    variable_count: int,
    max_len: int,
    policy: str = "oracle",
    cost_model: str = "unit",
    budget: int = DEFAULT_NODE_BUDGET,
    extra_parens: bool = False,
    alphabet: Alphabet = ALPHABET,
) -> Network:
    """Fill cells for every expression over ``variable_count`` variables of
    coded length up to ``max_len``, shortest first.

    If the trie would need more than ``budget`` nodes the build stops, sets
    ``aborted`` and leaves ``frontier`` at the last fully built length.
    """
    if variable_count < 1 or max_len < 2:
        raise ValueError("need variable_count >= 1 and max_len >= 2")
    net = Network(variable_count, policy, cost_model, alphabet, extra_parens)
    m = net.metrics
    # statuses of unresolved audit cells, used only to keep the induction going
    hidden: dict[str, Status] = {}

    def component(text: str) -> Status:
        node = net._node(text)
        if node is None or node.cell is None:
            raise AssertionError(f"component {text!r} has no cell; build order violated")
        m.build_ops += len(text)
        cell = node.cell
        return cell.status if cell.status is not None else hidden[text]

    current = 0
    for text in enumerate_expressions(variable_count, max_len, extra_parens=extra_parens, budget=None):
        if len(text) > current:
            net.frontier = current
            current = len(text)
        node = net._insert(text, budget)
        if node is None:
            net.aborted = True
            break
        d = decompose(text)
        if isinstance(d, Atom):
            m.build_ops += BASE_CASE_OPS
            net._store(text, node, Cell(Status.SAT_STRICT, Resolution.BASE_CASE))
            continue
        m.build_ops += len(text) + 1  # separation pass plus one automaton step
        if isinstance(d, Negation):
            status = compose_status(NOT, component(d.body))
            rule = Resolution.NEG_TAUT_RULE if status is Status.TAUT else Resolution.NEG_SAT_RULE
        else:
            status = compose_status(d.op, component(d.left), component(d.right))
            rule = Resolution.OR_SAT_RULE if d.op == OR else Resolution.AND_TAUT_RULE
        if status is None:
            e = parse(text)
            m.build_ops += 1 << len(variables(e))  # one evaluation per assignment
            truth = classify(e)
            if policy == "oracle":
                status, rule = truth, Resolution.ORACLE_FALLBACK
            else:
                hidden[text] = truth
                rule = Resolution.UNRESOLVED
        net._store(text, node, Cell(status, rule))
    if not net.aborted:
        net.frontier = max_len
    return net


def query(net: Network, text: str, cost_model: str | None = None) -> QueryResult:
    return net.query(text, cost_model)


def metrics(net: Network) -> NetworkMetrics:
    return net.metrics


# -- persistence -------------------------------------------------------------


def _pairs(d: dict[int, int]) -> str:
    return ",".join(f"{k}:{v}" for k, v in sorted(d.items())) or "-"


def _unpairs(s: str) -> dict[int, int]:
    if s == "-":
        return {}
    out = {}
    for item in s.split(","):
        k, v = item.split(":")
        out[int(k)] = int(v)
    return out


def dumps(net: Network) -> bytes:
    """Serialize a completed network to the line-oriented ``BOOLNET`` format."""
    if net.aborted:
        raise ValueError("cannot save an aborted build")
    m = net.metrics
    lines = [f"BOOLNET {FORMAT_VERSION} k={net.variable_count} n={net.frontier} policy={net.policy}"]
    lines.extend(f"{text} {cell.symbol} {cell.resolved_by.value}" for text, cell in net.items())
    lines.append(
        f"METRICS cost_model={net.cost_model} extra_parens={int(net.extra_parens)} "
        f"cells={m.cells} trie_nodes={m.trie_nodes} build_ops={m.build_ops} "
        f"base_cells={m.base_cells} fast_path_cells={m.fast_path_cells} "
        f"fallback_cells={m.fallback_cells} by_length={_pairs(m.cells_by_length)} "
        f"unresolved={_pairs(m.unresolved_by_length)}"
    )
    body = ("\n".join(lines) + "\n").encode("utf-8")
    digest = hashlib.sha256(body).hexdigest()
    return body + f"CHECKSUM sha256 {digest}\n".encode("ascii")


def _fields(line: str, prefix: str) -> dict[str, str]:
    parts = line.split(" ")
    if parts[0] != prefix:
        raise NetworkFileError(f"expected {prefix} line, got {line[:40]!r}")
    try:
        return dict(p.split("=", 1) for p in parts[1:])
    except ValueError:
        raise NetworkFileError(f"malformed {prefix} line") from None


def loads(data: bytes) -> Network:
    if isinstance(data, str):
        data = data.encode("utf-8")
    cut = data.rfind(b"\nCHECKSUM ")
    if cut < 0:
        raise ChecksumError("checksum line missing (truncated file?)")
    body, tail = data[: cut + 1], data[cut + 1:]
    parts = tail.split(b" ")
    if len(parts) != 3 or parts[1] != b"sha256" or not parts[2].endswith(b"\n"):
        raise ChecksumError("malformed checksum line")
    if hashlib.sha256(body).hexdigest().encode("ascii") != parts[2][:-1]:
        raise ChecksumError("checksum mismatch")

    try:
        lines = body.decode("utf-8").splitlines()
    except UnicodeDecodeError as exc:
        raise NetworkFileError(f"not UTF-8: {exc}") from None
    if len(lines) < 2:
        raise NetworkFileError("file has no metrics line")
    head = lines[0].split(" ")
    if len(head) < 2 or head[0] != "BOOLNET":
        raise NetworkFileError("not a BOOLNET file")
    if head[1] != FORMAT_VERSION:
        raise VersionError(f"unsupported format version {head[1]!r}")
    header = _fields(" ".join([head[0]] + head[2:]), "BOOLNET")
    info = _fields(lines[-1], "METRICS")
    try:
        net = Network(
            int(header["k"]),
            header["policy"],
            info["cost_model"],
            extra_parens=bool(int(info["extra_parens"])),
        )
        net.frontier = int(header["n"])
        stored = NetworkMetrics(
            cells=int(info["cells"]),
            trie_nodes=int(info["trie_nodes"]),
            build_ops=int(info["build_ops"]),
            base_cells=int(info["base_cells"]),
            fast_path_cells=int(info["fast_path_cells"]),
            fallback_cells=int(info["fallback_cells"]),
            cells_by_length=_unpairs(info["by_length"]),
            unresolved_by_length=_unpairs(info["unresolved"]),
        )
    except (KeyError, ValueError) as exc:
        raise NetworkFileError(f"bad header or metrics: {exc}") from None

    symbols = {s.symbol: s for s in Status}
    for lineno, line in enumerate(lines[1:-1], 2):
        try:
            text, symbol, tag = line.split(" ")
            resolution = Resolution(tag)
            status = None if symbol == "?" else symbols[symbol]
        except (ValueError, KeyError):
            raise NetworkFileError(f"line {lineno}: bad cell record {line!r}") from None
        if (status is None) != (resolution is Resolution.UNRESOLVED):
            raise NetworkFileError(f"line {lineno}: status {symbol!r} inconsistent with {tag!r}")
        node = net._insert(text, budget=1 << 62)
        if node.cell is not None:
            raise NetworkFileError(f"line {lineno}: duplicate cell {text!r}")
        net._store(text, node, Cell(status, resolution))
    # build_ops is history, not derivable from the records
    net.metrics.build_ops = stored.build_ops
    if net.metrics != stored:
        raise NetworkFileError("cell records disagree with stored metrics")
    return net


def save(net: Network, sink: Union[str, os.PathLike, BinaryIO, TextIO]) -> None:
    data = dumps(net)
    if hasattr(sink, "write"):
        if isinstance(sink, io.TextIOBase):
            sink.write(data.decode("utf-8"))
        else:
            sink.write(data)
        return
    with open(sink, "wb") as fh:
        fh.write(data)


def load(source: Union[str, os.PathLike, BinaryIO, TextIO]) -> Network:
    if hasattr(source, "read"):
        return loads(source.read())
    with open(source, "rb") as fh:
        return loads(fh.read())
