"""Brute-force classification: every row of the truth table, held in numpy."""

# %%
from groupsat.expr import parse
from groupsat.oracle import classify, count_satisfying, find_witness, truth_table

for text in ["x1∨¬x1", "x1∧¬x1", "x1∧¬x11"]:
    e = parse(text)
    print(f"{text:10} status={classify(e).symbol} rows={count_satisfying(e)} witness={find_witness(e)}")

# %%
# rows run lexicographically, lowest variable index as the high bit
vs, values = truth_table(parse("x1∧¬x111"))
print(vs, values.astype(int))

# %%
# the cost is 2^k rows; past the cap the oracle refuses
wide = parse("∨".join("x" + "1" * i for i in range(1, 23)))
try:
    classify(wide)
except Exception as exc:
    print(type(exc).__name__, exc)
