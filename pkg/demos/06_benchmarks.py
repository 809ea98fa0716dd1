"""Benchmark scenarios as CSV; no timing by default, so reruns match byte for byte."""

# %%
from groupsat.bench import dsat_scaling, fit_sort_constant, run_scenario

print(run_scenario("net-growth", k=2, n_min=4, n_max=9))

# %%
records = dsat_scaling(sizes=(100, 1000, 10000), repeats=3)
for r in records:
    print(r.n_or_L, r.comparisons, r.sort_ops, r.violations)
print("sort constant c ≈ %.3f (worst run %.3f)" % fit_sort_constant(records))

# %%
print(run_scenario("cnf-blowup", k_min=1, k_max=12, cap=1000))
