"""Deciding a DNF by looking for a complementary pair inside each term."""

# %%
from groupsat.dsat import cnf_satisfiable_via_dnf, dnf_satisfiable, find_equal
from groupsat.expr import parse
from groupsat.normal_forms import dnf_from_expr, loads_dimacs

# two sorted lists, walked together; one comparison per step
print(find_equal([1, 4, 6, 9], [2, 5, 6]))

# %%
# u=x1 v=x11 w=x111 x=x1111 y=x11111 z=x111111
d = dnf_from_expr(parse(
    "x1111∧¬x1111∧x111111∧¬x11111∧x11111"
    "∨x1∧¬x1111∧¬x111111∧¬x11111∧x111"
    "∨x1111∧x1∧x111∧x11∧x11111"
))
result = dnf_satisfiable(d)
print(result.satisfiable, result.witness)
print(result.stats)                     # the first term fails fast, the second holds

print(dnf_satisfiable(d, early_exit=False).stats)

# %%
# a CNF goes through distribution first; blowup = output terms / input clauses
cnf = loads_dimacs("p cnf 4 2\n1 2 0\n3 -4 0\n")
r = cnf_satisfiable_via_dnf(cnf)
print(r.satisfiable, r.witness, r.blowup)
