"""Graph transformations between k-component set instances and their solution maps.

* :func:`double_graph` turns a k-component instance into a 2k-component one
  on two copies of the graph; :func:`lift_solution` and
  :func:`recover_solution` move solutions across it in either direction.
* :func:`compose_to_power` chains the doubling i times.
* :func:`truncate_components` shrinks a k-component set to a k'-component set.
* :func:`round_to_independent_set` extracts an independent set from a
  k-component set.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import BoundViolation, DomainError, PreconditionError, SizeGuardError
from .feasibility import components, is_independent_set
from .graph import Graph

DEFAULT_BUDGET = 1 << 16


@dataclass(frozen=True)
class ReductionMap:
    """Correspondence between a source graph and its doubled graph.

    Copy 1 of source vertex v is target vertex v, copy 2 is v + n.
    """

    source: Graph
    target: Graph

    @property
    def n(self) -> int:
        return self.source.n

    def forward(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.n:
            raise DomainError(f"vertex {v} is not in the source graph")
        return v, v + self.n

    def inverse(self, u: int) -> tuple[int, int]:
        """Target vertex -> (source vertex, copy index 1 or 2)."""
        if not 0 <= u < 2 * self.n:
            raise DomainError(f"vertex {u} is not in the target graph")
        return (u, 1) if u < self.n else (u - self.n, 2)


def double_graph(g: Graph) -> ReductionMap:
    n = g.n
    edges = []
    for u, v in g.edges:
        edges += [(u, v), (u + n, v + n), (u, v + n), (u + n, v)]
    edges += [(v, v + n) for v in range(n)]
    weights = None if g.weights is None else g.weights * 2
    target = Graph(2 * n, edges, weights)
    if target.m != 4 * g.m + n:
        raise BoundViolation(f"doubled graph has {target.m} edges, expected {4 * g.m + n}")
    return ReductionMap(g, target)


def _require_feasible(g: Graph, s: Iterable[int], k: int, what: str):
    part = components(g, s)
    if part.largest > k:
        raise PreconditionError(f"{what} has a component of order {part.largest} > k={k}")
    return part


def lift_solution(rmap: ReductionMap, s: Iterable[int], k: int) -> frozenset[int]:
    """Both copies of every vertex of a k-component set of the source."""
    s = rmap.source.check_vertices(s)
    _require_feasible(rmap.source, s, k, "source set")
    return frozenset(u for v in s for u in rmap.forward(v))


def recover_solution(rmap: ReductionMap, s_prime: Iterable[int], k: int) -> frozenset[int]:
    """Map a 2k-component set of the doubled graph back to a k-component set of
    the source with at least half as many vertices.

    From each component T of G'[S'] take the copy side holding more of T
    (copy 1 on ties), at most k of its vertices, smallest ids first.
    """
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    part = _require_feasible(rmap.target, s_prime, 2 * k, "target set")
    result: set[int] = set()
    claimed: set[int] = set()
    for comp in part:
        side1 = sorted(u for u in comp if u < rmap.n)
        side2 = sorted(u - rmap.n for u in comp if u >= rmap.n)
        projection = set(side1) | set(side2)
        # u1 and u2 are adjacent, so two components never share a source vertex.
        if projection & claimed:
            raise BoundViolation(f"component {comp} shares a source vertex with another component")
        claimed |= projection
        side = side1 if len(side1) >= len(side2) else side2
        result.update(side[:k])
    if 2 * len(result) < len(part.vertices()):
        raise BoundViolation("recovered set is smaller than half the input")
    return frozenset(result)


def compose_to_power(g: Graph, i: int, budget: int = DEFAULT_BUDGET) -> list[ReductionMap]:
    """Apply :func:`double_graph` i times; the last target has 2^i · n vertices."""
    if i < 0:
        raise DomainError(f"power must be non-negative, got {i}")
    if (g.n << i) > budget:
        raise SizeGuardError(f"2^{i} * {g.n} vertices exceeds the budget of {budget}")
    chain = []
    current = g
    for _ in range(i):
        rmap = double_graph(current)
        chain.append(rmap)
        current = rmap.target
    return chain


def lift_through(chain: list[ReductionMap], s: Iterable[int], k: int) -> frozenset[int]:
    """Lift a k-component set of ``chain[0].source`` to a (2^i k)-component set of the last target."""
    s = frozenset(s)
    for rmap in chain:
        s = lift_solution(rmap, s, k)
        k *= 2
    return s


def recover_through(chain: list[ReductionMap], s: Iterable[int], k: int) -> frozenset[int]:
    """Inverse direction of :func:`lift_through`; ``k`` is the order bound at the source."""
    s = frozenset(s)
    for level in range(len(chain) - 1, -1, -1):
        s = recover_solution(chain[level], s, k << level)
    return s


def truncate_components(g: Graph, s: Iterable[int], k: int, target: int) -> frozenset[int]:
    """Cut every component of G[s] down to ``target`` vertices by dropping its highest ids.

    Removing vertices can split a component but never merge two, so the
    result is a ``target``-component set. When ``target`` is a power of two
    2^i with 2^i < k < 2^(i+1), the result keeps at least
    |s| (2^(i+1) - k) / 2^i vertices; that floor is checked.
    """
    if not 1 <= target < k:
        raise DomainError(f"need 1 <= target < k, got target={target}, k={k}")
    part = _require_feasible(g, s, k, "input set")
    kept: set[int] = set()
    for comp in part:
        kept.update(comp[:target])
    if target & (target - 1) == 0 and target < k < 2 * target:
        total = len(part.vertices())
        if len(kept) * target < total * (2 * target - k):
            raise BoundViolation(f"truncation kept {len(kept)} of {total} vertices, below the floor")
    return frozenset(kept)


def round_to_independent_set(g: Graph, s: Iterable[int], k: int) -> frozenset[int]:
    """Independent set inside a k-component set with at least ceil(|s| / k) vertices.

    Each component contributes a greedy maximal independent set of itself,
    scanning by increasing id. For k = 2 this keeps every isolated vertex of
    G[s] and the smaller endpoint of every induced edge.
    """
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    part = _require_feasible(g, s, k, "input set")
    chosen: set[int] = set()
    for comp in part:
        for v in comp:
            if not any(w in chosen for w in g.adj[v]):
                chosen.add(v)
    floor = math.ceil(len(part.vertices()) / k)
    if len(chosen) < floor or not is_independent_set(g, chosen):
        raise BoundViolation("rounding produced a set that is too small or not independent")
    return frozenset(chosen)
