import io
import itertools
import random

import pytest

from groupsat.expr import decompose, Atom, Negation, enumerate_expressions, parse
from groupsat.network import (
    ChecksumError,
    NetworkFileError,
    NotInNetworkError,
    Resolution,
    UnresolvedCellError,
    VersionError,
    build,
    compose_status,
    dumps,
    load,
    loads,
    metrics,
    query,
    save,
)
from groupsat.oracle import Status, classify

from conftest import production_closure

U_, S_, T_ = Status.UNSAT, Status.SAT_STRICT, Status.TAUT


@pytest.fixture(scope="module")
def net28():
    return build(2, 8)


@pytest.fixture(scope="module")
def audit29():
    return build(2, 9, policy="audit")


# -- composition rules ------------------------------------------------------


def test_compose_examples():
    assert compose_status("¬", S_) is S_
    assert compose_status("∧", T_, T_) is T_
    assert compose_status("∧", S_, S_) is None
    assert compose_status("¬", T_) is U_
    assert compose_status("¬", U_) is T_
    assert compose_status("!", U_) is T_


def test_and_underdetermined_witnessed():
    # x∧x and x∧¬x have parts with identical statuses but differ
    assert classify(parse("x1∧x1")) is S_
    assert classify(parse("x1∧¬x1")) is U_
    assert compose_status("∧", classify(parse("x1")), classify(parse("¬x1"))) is None


def test_compose_argument_errors():
    with pytest.raises(ValueError):
        compose_status("∨", S_)
    with pytest.raises(ValueError):
        compose_status("¬", S_, S_)
    with pytest.raises(ValueError):
        compose_status("→", S_, S_)


def _examples(status):
    # small expressions realizing each status, over two variables
    return {
        U_: ["x1∧¬x1", "x11∧¬x11"],
        S_: ["x1", "¬x11", "x1∧x11", "x1∨x11"],
        T_: ["x1∨¬x1", "x11∨¬x11"],
    }[status]


@pytest.mark.parametrize("op", ["∨", "∧"])
def test_compose_is_sound(op):
    # whenever the rule table answers, the answer holds for every pair of
    # concrete parts with those statuses
    for a, b in itertools.product(Status, repeat=2):
        got = compose_status(op, a, b)
        outcomes = {
            classify(parse(f"({d}){op}({h})"))
            for d in _examples(a)
            for h in _examples(b)
        }
        if got is not None:
            assert outcomes == {got}
        else:
            # underdetermined pairs are exactly the ones the four facts cannot settle
            expected_open = (
                {(S_, S_), (S_, U_), (U_, S_)} if op == "∨" else {(S_, S_), (S_, T_), (T_, S_)}
            )
            assert (a, b) in expected_open


def test_negation_always_resolves():
    for s in Status:
        assert compose_status("¬", s) is classify(parse(f"¬({_examples(s)[0]})"))


# -- build ------------------------------------------------------------------


def test_build_k1_n3():
    net = build(1, 3)
    assert [(t, c.status, c.resolved_by) for t, c in net.items()] == [
        ("x1", S_, Resolution.BASE_CASE),
        ("¬x1", S_, Resolution.NEG_SAT_RULE),
    ]
    assert metrics(net).cells == 2


def test_tautology_cell():
    net = build(1, 6)
    # both parts are strictly satisfiable, so the rules leave it open
    assert net.cell("x1∨¬x1").status is T_
    assert net.cell("x1∨¬x1").resolved_by is Resolution.ORACLE_FALLBACK
    audit = build(1, 6, policy="audit")
    assert audit.cell("x1∨¬x1").resolved_by is Resolution.UNRESOLVED
    assert build(1, 10).cell("x1∨¬x1∨x1").resolved_by is Resolution.OR_SAT_RULE


def test_contradiction_needs_fallback():
    net = build(1, 6)
    cell = net.cell("x1∧¬x1")
    assert cell.status is U_ and cell.resolved_by is Resolution.ORACLE_FALLBACK


def test_oracle_policy_matches_oracle(net28):
    for text, cell in net28.items():
        assert cell.status is classify(parse(text)), text


def test_every_enumerated_expression_hosted(net28):
    hosted = [t for t, _ in net28.items()]
    assert hosted == list(enumerate_expressions(2, 8))


def test_components_exist(net28):
    for text, _ in net28.items():
        d = decompose(text)
        if isinstance(d, Atom):
            continue
        parts = [d.body] if isinstance(d, Negation) else [d.left, d.right]
        for p in parts:
            net28.cell(p)


def test_fast_path_soundness_exhaustive():
    for k in (1, 2):
        for policy in ("oracle", "audit"):
            net = build(k, 9, policy=policy)
            for text, cell in net.items():
                if cell.resolved_by.fast_path or cell.resolved_by is Resolution.BASE_CASE:
                    assert cell.status is classify(parse(text)), text


def test_audit_accounting(audit29):
    m = audit29.metrics
    assert m.base_cells + m.fast_path_cells + m.fallback_cells == m.cells
    unresolved = 0
    for text, cell in audit29.items():
        d = decompose(text)
        truth = classify(parse(text))
        if isinstance(d, Atom) or isinstance(d, Negation):
            assert cell.resolved_by is not Resolution.UNRESOLVED
            continue
        left, right = classify(parse(d.left)), classify(parse(d.right))
        if d.op == "∧":
            open_ = U_ not in (left, right) and not (left is T_ and right is T_)
        else:
            open_ = T_ not in (left, right) and not (left is U_ and right is U_)
        assert (cell.resolved_by is Resolution.UNRESOLVED) == open_, text
        if open_:
            unresolved += 1
            assert cell.status is None
            with pytest.raises(UnresolvedCellError):
                audit29.query(text)
        else:
            assert cell.status is truth
    assert unresolved == sum(m.unresolved_by_length.values())
    for n in m.cells_by_length:
        assert 0.0 <= m.unresolved_fraction(n) <= 1.0


def test_metrics_small():
    assert build(1, 2).metrics.cells == 1
    assert build(1, 3).metrics.cells == 2
    assert build(1, 2).metrics.trie_nodes == 3


def test_growth_counts():
    # frozen from the build; up to n=9 they match the raw production closure
    cells = {n: build(2, n).metrics.cells for n in range(4, 12)}
    assert cells == {4: 5, 5: 10, 6: 23, 7: 46, 8: 90, 9: 193, 10: 413, 11: 855}
    assert [len(production_closure(2, n)) for n in range(4, 10)] == [cells[n] for n in range(4, 10)]
    hist = build(2, 11).metrics.cells_by_length
    assert [hist[n] for n in range(5, 12)] == sorted(hist[n] for n in range(5, 12))


def test_budget_abort():
    net = build(2, 10, budget=300)
    assert net.aborted
    assert net.metrics.trie_nodes <= 300
    assert net.frontier < 10
    full = build(2, net.frontier)
    for text, _ in full.items():
        assert net.cell(text) == full.cell(text)
    with pytest.raises(ValueError):
        dumps(net)


def test_build_preconditions():
    with pytest.raises(ValueError):
        build(0, 5)
    with pytest.raises(ValueError):
        build(1, 1)
    with pytest.raises(ValueError):
        build(1, 4, policy="guess")


def test_extra_parens_build():
    net = build(1, 10, extra_parens=True)
    assert net.cell("(x1)∨x1").status is S_
    for text, cell in net.items():
        assert cell.status is classify(parse(text))


# -- query ------------------------------------------------------------------


def test_query_examples(net28):
    assert query(net28, "x1") == (S_, 2)
    assert query(net28, "¬x1") == (S_, 3)
    assert query(net28, "x1∧¬x1") == (U_, 6)
    assert query(net28, "x1&!x1") == (U_, 6)
    assert query(net28, "x1", cost_model="m") == (S_, 14)


def test_query_steps_equal_symbols(net28):
    for text, _ in net28.items():
        assert net28.query(text).steps == len(text)
        assert net28.query(text, "m").steps == 7 * len(text)


@pytest.mark.parametrize("text", ["x1∨x11∨x1∨x11", "(x1)", "x111", "x1∨"])
def test_query_missing(net28, text):
    with pytest.raises(NotInNetworkError):
        net28.query(text)


# -- persistence ------------------------------------------------------------


def test_roundtrip_small(tmp_path):
    net = build(1, 3)
    path = tmp_path / "n.bn"
    save(net, path)
    back = load(path)
    assert back.query("x1") == net.query("x1")
    assert back.query("¬x1") == net.query("¬x1")
    assert back.metrics == net.metrics


def test_roundtrip_file_objects(net28):
    buf = io.BytesIO()
    save(net28, buf)
    buf.seek(0)
    back = load(buf)
    assert back.metrics == net28.metrics
    sbuf = io.StringIO()
    save(net28, sbuf)
    assert loads(sbuf.getvalue()).metrics == net28.metrics


def test_roundtrip_audit(audit29):
    back = loads(dumps(audit29))
    assert back.policy == "audit"
    assert [(t, c) for t, c in back.items()] == [(t, c) for t, c in audit29.items()]
    assert back.metrics == audit29.metrics


def test_file_header(net28):
    text = dumps(net28).decode()
    lines = text.splitlines()
    assert lines[0] == "BOOLNET v1 k=2 n=8 policy=oracle"
    assert lines[1] == "x1 1 base"
    assert lines[-1].startswith("CHECKSUM sha256 ")
    assert lines[-2].startswith("METRICS ")


def test_truncated(net28):
    data = dumps(net28)
    with pytest.raises(ChecksumError):
        loads(data[: len(data) // 2])
    with pytest.raises(ChecksumError):
        loads(data[:-3])


def test_single_byte_corruption(net28):
    data = dumps(net28)
    rng = random.Random(0)
    for _ in range(100):
        pos = rng.randrange(len(data))
        bad = bytearray(data)
        bad[pos] = (bad[pos] + rng.randrange(1, 256)) % 256
        with pytest.raises(NetworkFileError):
            loads(bytes(bad))


def _resign(body: bytes) -> bytes:
    import hashlib

    return body + f"CHECKSUM sha256 {hashlib.sha256(body).hexdigest()}\n".encode()


def test_version_mismatch(net28):
    body = dumps(net28).rsplit(b"CHECKSUM", 1)[0].replace(b"BOOLNET v1", b"BOOLNET v2", 1)
    with pytest.raises(VersionError):
        loads(_resign(body))


def test_inconsistent_records(net28):
    body = dumps(net28).rsplit(b"CHECKSUM", 1)[0]
    lines = body.split(b"\n")
    del lines[3]
    with pytest.raises(NetworkFileError):
        loads(_resign(b"\n".join(lines)))
    bad_status = body.replace(b"x1 1 base", b"x1 ? base", 1)
    with pytest.raises(NetworkFileError):
        loads(_resign(bad_status))
