import itertools
import sys
from collections import defaultdict

import pytest
from hypothesis import strategies as st

from groupsat.expr import And, Not, Or, Var, evaluate, variables


def brute_force_values(e):
    """Truth values of ``e`` over all assignments, by plain Python loops."""
    vs = variables(e)
    return [evaluate(e, dict(zip(vs, bits))) for bits in itertools.product((0, 1), repeat=len(vs))]


def brute_force_status(e):
    vals = brute_force_values(e)
    if all(vals):
        return "t"
    return "1" if any(vals) else "0"


def equivalent(a, b):
    vs = sorted(set(variables(a)) | set(variables(b)))
    return all(
        evaluate(a, dict(zip(vs, bits))) == evaluate(b, dict(zip(vs, bits)))
        for bits in itertools.product((0, 1), repeat=len(vs))
    )


def production_closure(k, n):
    """Every string the six building rules produce, deduplicated, with no
    regard to operator precedence.  Independent of the package enumerator."""
    by_len = defaultdict(set)
    for length in range(2, n + 1):
        cur = by_len[length]
        if length - 1 <= k:
            cur.add("x" + "1" * (length - 1))
        cur.update("¬" + a for a in by_len[length - 1])
        cur.update("¬(" + a + ")" for a in by_len[length - 3])
        for a in range(2, length):
            b = length - 1 - a
            for op in "∨∧":
                cur.update(x + op + y for x in by_len[a] for y in by_len[b])
            b = length - 5 - a
            if b >= 2:
                for op in "∨∧":
                    cur.update(f"({x}){op}({y})" for x in by_len[a] for y in by_len[b])
    return set().union(*by_len.values())


def expr_strategy(max_var=4, max_leaves=10):
    return st.recursive(
        st.integers(1, max_var).map(Var),
        lambda ch: st.one_of(
            ch.map(Not),
            st.tuples(ch, ch).map(lambda t: Or(*t)),
            st.tuples(ch, ch).map(lambda t: And(*t)),
        ),
        max_leaves=max_leaves,
    )


# fixed variable numbering for the worked examples: u, v, w, x, y, z
U, V, W, X, Y, Z = (Var(i) for i in range(1, 7))


@pytest.fixture
def two_term_example():
    # (x∧¬x∧z∧¬y∧y) ∨ (u∧¬x∧z∧¬y∧w)
    return (X & ~X & Z & ~Y & Y) | (U & ~X & Z & ~Y & W)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, detail = results[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
