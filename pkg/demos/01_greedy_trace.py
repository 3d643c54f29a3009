"""
Min-degree greedy and its trace
===============================

The greedy repeatedly takes a vertex of minimum residual degree and keeps it
unless that would grow a component past order k. The trace records each
chosen degree, so the counting inequalities behind the size guarantee can be
checked on the run itself.
"""

from kobcs import cycle_graph, gen_gnp, greedy_dissociation, greedy_k, is_k_component_set

# A 5-cycle: the best dissociation set has three vertices.
g = cycle_graph(5)
s, trace = greedy_dissociation(g)
print("dissociation set (0-indexed):", sorted(s))
print(trace.report())

# The general greedy works for any k >= 1. With k = 1 it is the classic
# min-degree independent set greedy.
g = gen_gnp(30, 0.2, seed=7)
for k in (1, 2, 3):
    s, trace = greedy_k(g, k)
    assert is_k_component_set(g, s, k)
    lower = g.n * g.n / ((2 * k - 1) * 2 * g.m + k * g.n)
    print(f"k={k}: |S|={len(s):2d}  guaranteed >= {lower:.2f}")
    trace.check()
