"""Exhaustive include/exclude search for comp_k(G) and its weighted variant.

Exponential by design; it exists to certify the approximation algorithms on
small instances, so a size guard refuses anything above ``limit`` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, SizeGuardError
from .graph import Graph

DEFAULT_LIMIT = 20


@dataclass(frozen=True)
class ExactResult:
    best_set: frozenset[int]
    value: float
    explored: int

    def sorted_set(self) -> list[int]:
        return sorted(self.best_set)


def _search(g: Graph, k: int, weights: list[float], limit: int) -> ExactResult:
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    n = g.n
    if n > limit:
        raise SizeGuardError(
            f"exact search refused: n={n} exceeds the limit of {limit} vertices"
        )

    # suffix[i] = total weight of vertices i..n-1, the optimistic bound.
    suffix = [0.0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] + weights[v]
    earlier = [[w for w in g.adj[v] if w < v] for v in range(n)]

    # Union-find without path compression so that unions can be undone.
    parent = list(range(n))
    size = [1] * n
    chosen = [False] * n
    best_value = -1.0
    best_mask: list[bool] = []
    explored = 0

    def find(v: int) -> int:
        while parent[v] != v:
            v = parent[v]
        return v

    def visit(i: int, value: float) -> None:
        nonlocal best_value, best_mask, explored
        explored += 1
        if value + suffix[i] <= best_value:
            return
        if i == n:
            best_value = value
            best_mask = chosen.copy()
            return

        roots = {find(w) for w in earlier[i] if chosen[w]}
        if 1 + sum(size[r] for r in roots) <= k:
            undo = []
            root = i
            for r in roots:
                if size[r] > size[root]:
                    root, r = r, root
                parent[r] = root
                size[root] += size[r]
                undo.append((r, root))
            chosen[i] = True
            visit(i + 1, value + weights[i])
            chosen[i] = False
            for r, rt in reversed(undo):
                size[rt] -= size[r]
                parent[r] = r
        visit(i + 1, value)

    visit(0, 0.0)
    best = frozenset(v for v in range(n) if best_mask[v]) if best_mask else frozenset()
    return ExactResult(best, max(best_value, 0.0), explored)


def exact_comp_k(g: Graph, k: int, limit: int = DEFAULT_LIMIT) -> ExactResult:
    """Maximum cardinality k-component set.

    Among optimal sets the one found first is kept, i.e. the lexicographically
    smallest sorted vertex list (inclusion is tried before exclusion).
    """
    result = _search(g, k, [1.0] * g.n, limit)
    return ExactResult(result.best_set, float(len(result.best_set)), result.explored)


def exact_weighted(g: Graph, k: int, limit: int = DEFAULT_LIMIT) -> ExactResult:
    """Maximum weight k-component set; unweighted graphs count every vertex as 1."""
    return _search(g, k, [g.weight(v) for v in range(g.n)], limit)
