"""Local-ratio Δ-approximation for the maximum weight k-component set, k >= 2.

Each round takes the edge (s, t) of largest w(s) + w(t) among the surviving
vertices, keeps {s, t}, and subtracts the weight function that equals w on
the closed neighbourhood N[{s, t}] and 0 elsewhere. That zeroes N[{s, t}]
exactly, so those vertices are deleted before the next round. The recursion
of the textbook formulation is unrolled into a loop.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundViolation, DomainError, UnsupportedParameterError
from .graph import Graph


@dataclass(frozen=True)
class WeightDecomposition:
    """One round's split w = w1 + w2 around the chosen edge (s, t)."""

    edge: tuple[int, int]
    w1: dict[int, float]
    w2: dict[int, float]

    def support(self) -> frozenset[int]:
        return frozenset(v for v, w in self.w1.items() if w != 0)


@dataclass
class LocalRatioResult:
    solution: frozenset[int]
    pairs: list[tuple[int, int]]
    residue: frozenset[int]
    rounds: list[WeightDecomposition]
    # recursion levels the loop stands for: one per round, one per deleted vertex
    depth: int


def decompose(g: Graph, w: dict[int, float], s: int, t: int) -> WeightDecomposition:
    closed = {s, t}
    closed.update(u for u in g.adj[s] if u in w)
    closed.update(u for u in g.adj[t] if u in w)
    w1 = {v: (w[v] if v in closed else 0.0) for v in w}
    w2 = {v: w[v] - w1[v] for v in w}
    return WeightDecomposition((s, t), w1, w2)


def local_ratio(g: Graph, k: int = 2, keep_rounds: bool = False) -> LocalRatioResult:
    """Run the local-ratio rounds and return the solution with its bookkeeping.

    Ties on w(s) + w(t) go to the lexicographically smallest (s, t), s < t.
    Once no edge survives, the remaining positive-weight vertices are all
    isolated and are added to the solution.
    """
    if k < 2:
        raise UnsupportedParameterError(
            f"local ratio needs k >= 2 (a chosen edge is already a 2-vertex component), got k={k}"
        )
    weights = [g.weight(v) for v in range(g.n)]
    for v, wv in enumerate(weights):
        if not wv > 0:
            raise DomainError(f"weight of vertex {v} must be positive, got {wv}")

    # Working weights over surviving vertices only.
    w: dict[int, float] = dict(enumerate(weights))
    pairs: list[tuple[int, int]] = []
    rounds: list[WeightDecomposition] = []
    depth = 0

    while True:
        for v in sorted(u for u, wu in w.items() if wu <= 0):
            del w[v]
            depth += 1
        best: tuple[int, int] | None = None
        best_value = 0.0
        for s, t in g.edges:
            if s in w and t in w:
                value = w[s] + w[t]
                if best is None or value > best_value:
                    best, best_value = (s, t), value
        if best is None:
            break
        rd = decompose(g, w, *best)
        for v in rd.support():
            if rd.w2[v] != 0:
                raise BoundViolation(f"residual weight of {v} is {rd.w2[v]}, expected 0")
        pairs.append(best)
        if keep_rounds:
            rounds.append(rd)
        w = rd.w2
        depth += 1
        if depth > g.n + g.m:
            raise BoundViolation("local ratio exceeded n + m recursion levels")

    residue = frozenset(w)
    solution = frozenset(v for pair in pairs for v in pair) | residue
    return LocalRatioResult(solution, pairs, residue, rounds, depth)


def local_ratio_k_obcs(g: Graph, k: int = 2) -> frozenset[int]:
    """Vertex set whose induced components have order <= 2 <= k and whose weight
    is at least OPT / Δ."""
    return local_ratio(g, k).solution
