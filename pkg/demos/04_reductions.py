"""
Reductions between order bounds
===============================

Doubling a connected graph turns a k-component set into a 2k-component set of
exactly twice the size, and recovery maps back with at most a factor two loss.
Truncation and rounding move a solution to a smaller order bound.
"""

from kobcs import (
    double_graph,
    exact_comp_k,
    greedy_k,
    lift_solution,
    path_graph,
    recover_solution,
    round_to_independent_set,
    truncate_components,
)

g = path_graph(4)
rmap = double_graph(g)
print(f"doubled: n={rmap.target.n}, m={rmap.target.m}")

opt1 = exact_comp_k(g, 1)
opt2 = exact_comp_k(rmap.target, 2)
print(f"comp_1(G) = {opt1.value:g}, comp_2(G x 2) = {opt2.value:g}")

lifted = lift_solution(rmap, opt1.best_set, 1)
print("lifted:", sorted(lifted))
print("recovered:", sorted(recover_solution(rmap, opt2.best_set, 1)))

s, _ = greedy_k(path_graph(9), 3)
print("greedy k=3:", sorted(s))
print("truncated to order 2:", sorted(truncate_components(path_graph(9), s, 3, 2)))
print("rounded to independent:", sorted(round_to_independent_set(path_graph(9), s, 3)))
