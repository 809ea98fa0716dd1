"""Precompute the status of every short expression in a trie, then look it up."""

# %%
import io

from groupsat.network import build, dumps, load, save

net = build(2, 8)                       # two variables, coded length up to 8
m = net.metrics
print(net, m.cells, m.trie_nodes, m.base_cells, m.fast_path_cells, m.fallback_cells)

# %%
# a lookup walks one trie node per symbol
for text in ["x1", "¬x11", "x1∧¬x1", "x1∨¬x1"]:
    print(text, net.query(text), net.query(text, "m").steps)

# %%
# which cells needed the truth table?
for text, cell in list(net.items())[:12]:
    print(f"{text:10} {cell.symbol} {cell.resolved_by.value}")

# %%
# with the audit policy the rules alone decide, and the rest stay open
audit = build(2, 8, policy="audit")
for n in sorted(audit.metrics.cells_by_length):
    print(n, audit.metrics.cells_by_length[n], round(audit.metrics.unresolved_fraction(n), 3))

# %%
buf = io.BytesIO()
save(net, buf)
print(dumps(net)[:120].decode())
buf.seek(0)
print(load(buf).query("x1∧¬x1"))

# %%
# the table roughly doubles with every extra symbol
print({n: build(2, n).metrics.cells for n in range(4, 12)})
