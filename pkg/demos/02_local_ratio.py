"""
Weighted instances with the local ratio method
==============================================

Each round picks the heaviest edge, subtracts the smaller endpoint weight from
both ends and drops vertices whose weight falls to zero. The final solution
weighs at least OPT / max_degree.
"""

from kobcs import exact_weighted, gen_gnp, local_ratio, metrics, random_weights

g = random_weights(gen_gnp(12, 0.3, seed=3), seed=3)
delta = metrics(g).max_degree

for k in (2, 3):
    res = local_ratio(g, k)
    got = g.total_weight(res.solution)
    opt = exact_weighted(g, k).value
    print(f"k={k}: local ratio {got:g}, optimum {opt:g}, ratio {opt / got:.3f} (max degree {delta})")
    print(f"       {len(res.pairs)} edge rounds, recursion depth {res.depth}")
