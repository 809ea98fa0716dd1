"""Expressions over a seven-symbol alphabet: parse, render, evaluate, decompose."""

# %%
from groupsat.expr import (
    ALPHABET, Var, decompose, enumerate_expressions, evaluate, length, parse, render,
)

print(ALPHABET.symbols, "m =", ALPHABET.m)

# variables are written in unary: x1, x11, x111, ...
e = parse("x1 | !x11 & x111")        # ASCII aliases are accepted
print(render(e))                      # x1∨¬x11∧x111  (¬ binds tighter than ∧, ∧ than ∨)
print(repr(e))

# %%
# operator overloads build the same trees
u, v = Var(1), Var(2)
f = (u | v) & ~u
print(f, evaluate(f, {1: 0, 2: 1}))

# four ways to measure size
for measure in "abcd":
    print(measure, length(f, measure))

# %%
# split at the top-level connective, as the network does
print(decompose("x1∨x11∧x111"))
print(decompose("¬(x1∨x11)"))

# %%
# every well-formed string up to a coded length, shortest first
small = list(enumerate_expressions(1, 7))
print(len(small), small[:8])
