"""DNF and CNF by distribution, and how fast distribution blows up."""

# %%
from groupsat.bench import pair_family
from groupsat.expr import parse
from groupsat.normal_forms import dumps_dimacs, embed, to_cnf, to_dnf, to_nnf
from groupsat.oracle import classify

e = parse("¬(x1∧¬(x11∨x111))")
print("nnf", to_nnf(e))
print("dnf", to_dnf(e))
print("cnf", to_cnf(e))
# conversions keep the status
print(classify(e).symbol, classify(embed(to_dnf(e))).symbol, classify(embed(to_cnf(e))).symbol)

# %%
print(dumps_dimacs(to_cnf(e)), end="")

# %%
# k two-literal clauses multiply out to 2^k terms
for k in range(1, 11):
    print(k, len(to_dnf(embed(pair_family(k)))))
