import csv
import io
import math

import pytest

from groupsat.bench import (
    BenchRecord,
    cnf_blowup,
    dsat_scaling,
    fit_sort_constant,
    net_growth,
    pair_family,
    query_path,
    random_clauses,
    run_scenario,
    _rng,
)
from groupsat.oracle import classify
from groupsat.normal_forms import embed


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_header_columns():
    text = run_scenario("net-growth", k=1, n_min=2, n_max=2)
    assert text.splitlines()[0] == ",".join(BenchRecord.header())
    for name in ("scenario", "k", "n_or_L", "cells", "trie_nodes", "build_ops",
                 "fast_path_fraction", "query_steps_mean", "wall_time_ms", "peak_cell_count"):
        assert name in BenchRecord.header()


@pytest.mark.parametrize(
    "name, params",
    [
        ("net-growth", dict(k=2, n_min=4, n_max=8)),
        ("dsat-scaling", dict(sizes=(100, 500), repeats=2, seed=3)),
        ("cnf-blowup", dict(k_min=1, k_max=6)),
        ("query-path", dict(k=2, n=7, samples=20, seed=1)),
    ],
)
def test_deterministic_without_timing(name, params):
    assert run_scenario(name, **params) == run_scenario(name, **params)


def test_seed_changes_instances():
    a = run_scenario("dsat-scaling", sizes=(200,), repeats=1, seed=0)
    b = run_scenario("dsat-scaling", sizes=(200,), repeats=1, seed=1)
    assert a != b


def test_timing_is_opt_in():
    r = net_growth(k=1, n_min=2, n_max=4)
    assert all(x.wall_time_ms == 0.0 for x in r)
    r = net_growth(k=1, n_min=2, n_max=4, timing=True)
    assert all(x.wall_time_ms >= 0.0 for x in r)


def test_net_growth_small():
    r = net_growth(k=1, n_min=2, n_max=3)
    assert [x.cells for x in r] == [1, 2]
    assert r[0].growth_ratio == 0.0 and r[1].growth_ratio == 2.0


def test_net_growth_abort_stops():
    r = net_growth(k=2, n_min=4, n_max=12, budget=500)
    assert r[-1].aborted == 1
    assert all(x.aborted == 0 for x in r[:-1])


def test_random_clauses_total():
    rng = _rng(0, "t")
    raw = random_clauses(rng, 1000, 50, 10)
    assert sum(len(c) for c in raw) == 1000
    assert all(1 <= len(c) <= 10 for c in raw)


def test_dsat_scaling_bounds():
    records = dsat_scaling(sizes=(100, 1000), repeats=3)
    assert len(records) == 6
    for r in records:
        assert r.violations == 0
        assert r.comparisons <= 4 * r.n_or_L
        assert r.sort_ops <= r.n_or_L * math.log2(r.n_or_L)
    c, worst = fit_sort_constant(records)
    assert 0 < c <= worst <= 1


def test_fit_sort_constant_exact():
    recs = [BenchRecord("dsat-scaling", 1, L, sort_ops=int(0.5 * L * math.log2(L))) for L in (256, 1024)]
    c, worst = fit_sort_constant(recs)
    assert c == pytest.approx(0.5) and worst == pytest.approx(0.5)
    assert fit_sort_constant([]) == (0.0, 0.0)


def test_pair_family_shape():
    cnf = pair_family(3)
    assert len(cnf) == 3
    assert all(len(c) == 2 for c in cnf.clauses)
    assert cnf.variables() == list(range(1, 7))
    assert classify(embed(cnf)).satisfiable


def test_cnf_blowup_doubles():
    r = cnf_blowup(1, 4)
    assert [x.output_clauses for x in r] == [2, 4, 8, 16]
    assert all(x.violations == 0 and x.aborted == 0 for x in r)


def test_cnf_blowup_cap():
    r = cnf_blowup(8, 12, cap=1000)
    assert [x.aborted for x in r] == [0, 0, 1, 1, 1]
    assert r[0].output_clauses == 256


def test_query_path_explicit():
    r = query_path(k=2, n=8, expressions=["x1", "x1∧¬x1", "x1&!x11"])
    assert [(x.n_or_L, x.query_steps_mean) for x in r] == [(2, 2.0), (6, 6.0), (7, 7.0)]
    r = query_path(k=1, n=4, expressions=["x1"], cost_model="m")
    assert r[0].query_steps_mean == 14.0


def test_query_path_all_hosted():
    (r,) = query_path(k=2, n=7)
    assert r.violations == 0
    assert r.cells == 46


def test_unknown_scenario():
    with pytest.raises(KeyError):
        run_scenario("nope")
