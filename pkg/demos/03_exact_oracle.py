"""
Exact optimum by branch and bound
=================================

The oracle is exponential, so it refuses graphs above a size guard unless the
caller raises the limit on purpose.
"""

from kobcs import SizeGuardError, exact_comp_k, gen_gnp

g = gen_gnp(16, 0.25, seed=11)
for k in (1, 2, 3, 4):
    res = exact_comp_k(g, k)
    print(f"comp_{k} = {res.value:g}  set {sorted(res.best_set)}  nodes explored {res.explored}")

try:
    exact_comp_k(gen_gnp(24, 0.2, seed=0), 2)
except SizeGuardError as exc:
    print("refused:", exc)
