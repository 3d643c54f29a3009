"""Minimum-degree greedy algorithms for dissociation sets and k-component sets.

Both solvers repeatedly pick a vertex of minimum degree in the graph induced
by the still-undecided vertices V' (smallest id on ties), put it in S, and
discard (move to X) every undecided vertex that can no longer join S. The
degree sequence d_1..d_q of the picks is recorded in a :class:`GreedyTrace`,
on which the token-counting inequalities can be checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BoundViolation, DomainError
from .feasibility import IncrementalComponents, components
from .graph import Graph


@dataclass(frozen=True)
class GreedyStep:
    vertex: int
    degree: int
    paired_with: int | None = None
    discarded: tuple[int, ...] = ()


@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    def __str__(self) -> str:
        verdict = "ok" if self.holds else "VIOLATED"
        return f"{self.name}: {self.lhs} <= {self.rhs} [{verdict}]"


@dataclass
class GreedyTrace:
    n: int
    m: int
    k: int
    steps: list[GreedyStep] = field(default_factory=list)
    solution: frozenset[int] = frozenset()
    discarded: frozenset[int] = frozenset()

    @property
    def d_sequence(self) -> list[int]:
        return [s.degree for s in self.steps]

    @property
    def q(self) -> int:
        return len(self.steps)

    def inequalities(self) -> list[Inequality]:
        """The trace inequalities in integer form.

        With d̄ = 2m/n every bound becomes integral: n·d̄ = 2m, and the size
        floor q >= n / ((2k-1)d̄ + k) is q·((2k-1)·2m + k·n) >= n².
        """
        n, m, k = self.n, self.m, self.k
        d = self.d_sequence
        s1 = sum(x + 1 for x in d)
        s2 = sum(x * (x + 1) for x in d)
        return [
            Inequality("n <= sum(d_i+1)", n, s1),
            Inequality("sum(d_i+1) <= k*n", s1, k * n),
            Inequality("sum d_i(d_i+1) <= (2k-1)*2m", s2, (2 * k - 1) * 2 * m),
            Inequality("n^2 <= q*((2k-1)*2m + k*n)", n * n, self.q * ((2 * k - 1) * 2 * m + k * n)),
        ]

    def check(self) -> None:
        bad = [str(i) for i in self.inequalities() if not i.holds]
        if bad:
            raise BoundViolation("; ".join(bad))

    def report(self) -> str:
        lines = [
            f"n={self.n} m={self.m} k={self.k} q={self.q}",
            "d = " + " ".join(map(str, self.d_sequence)),
        ]
        lines += [str(i) for i in self.inequalities()]
        return "\n".join(lines)


class _ResidualDegrees:
    """Degrees in G[V'] under vertex removal, with min-degree/min-id selection."""

    def __init__(self, g: Graph):
        self.g = g
        self.alive = [True] * g.n
        self.deg = [len(a) for a in g.adj]
        self.count = g.n

    def remove(self, v: int) -> None:
        if not self.alive[v]:
            return
        self.alive[v] = False
        self.count -= 1
        for w in self.g.adj[v]:
            if self.alive[w]:
                self.deg[w] -= 1

    def pick(self) -> int:
        best = -1
        for v in range(self.g.n):
            if self.alive[v] and (best < 0 or self.deg[v] < self.deg[best]):
                best = v
        return best

    def live_neighbors(self, v: int) -> list[int]:
        return [w for w in self.g.adj[v] if self.alive[w]]

    def verify(self) -> None:
        for v in range(self.g.n):
            if self.alive[v]:
                actual = len(self.live_neighbors(v))
                if actual != self.deg[v]:
                    raise AssertionError(f"residual degree of {v}: cached {self.deg[v]}, actual {actual}")


def greedy_dissociation(g: Graph, check: bool = False) -> tuple[frozenset[int], GreedyTrace]:
    """Greedy dissociation set (every component of G[S] has at most 2 vertices).

    A chosen vertex with a neighbour p in the singleton part S1 (smallest such
    p) forms a pair with it, and all undecided neighbours of both are
    discarded. Otherwise it joins S1, and every undecided vertex adjacent to
    it and to another S1 vertex is discarded.

    Args:
        check: re-derive residual degrees and the partition/pairing invariants
            at every iteration (quadratic; meant for tests).
    """
    res = _ResidualDegrees(g)
    s1: set[int] = set()
    s2: set[int] = set()
    x: set[int] = set()
    trace = GreedyTrace(g.n, g.m, 2)

    while res.count:
        if check:
            _check_dissociation_state(g, res, s1, s2, x)
        v = res.pick()
        d = res.deg[v]
        nv = res.live_neighbors(v)
        partners = [p for p in g.adj[v] if p in s1]
        res.remove(v)
        if partners:
            p = min(partners)
            s1.discard(p)
            s2.update((v, p))
            # p is not in V', so its live neighbours are read after removing v.
            drop = set(nv) | set(res.live_neighbors(p))
        else:
            s1.add(v)
            drop = {u for u in nv if any(t in s1 and t != v for t in g.adj[u])}
            p = None
        drop -= x
        for u in sorted(drop):
            res.remove(u)
        x |= drop
        trace.steps.append(GreedyStep(v, d, p, tuple(sorted(drop))))

    if check:
        _check_dissociation_state(g, res, s1, s2, x)
    trace.solution = frozenset(s1 | s2)
    trace.discarded = frozenset(x)
    return trace.solution, trace


def _check_dissociation_state(g, res, s1, s2, x) -> None:
    res.verify()
    live = {v for v in range(g.n) if res.alive[v]}
    s = s1 | s2
    if s1 & s2 or s & x or s & live or x & live or len(s) + len(x) + len(live) != g.n:
        raise AssertionError("S, X, V' do not partition V")
    for v in s2:
        if any(w in live for w in g.adj[v]):
            raise AssertionError(f"paired vertex {v} still has an undecided neighbour")
    for c in components(g, s):
        if len(c) > 2:
            raise AssertionError(f"component {c} has more than 2 vertices")
        if len(c) == 2 and not set(c) <= s2:
            raise AssertionError(f"component {c} is an edge outside S2")
        if len(c) == 1 and c[0] not in s1:
            raise AssertionError(f"isolated vertex {c[0]} is not in S1")


def greedy_k(g: Graph, k: int, check: bool = False) -> tuple[frozenset[int], GreedyTrace]:
    """Greedy k-component set: after each pick, discard every undecided p for which
    G[S ∪ {p}] would contain a component with more than k vertices.

    Only undecided vertices adjacent to the picked vertex's component can
    change status, so only those are re-examined.
    """
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    res = _ResidualDegrees(g)
    state = IncrementalComponents(g)
    x: set[int] = set()
    trace = GreedyTrace(g.n, g.m, k)

    while res.count:
        if check:
            res.verify()
            live = sum(res.alive)
            if len(state) + len(x) + live != g.n:
                raise AssertionError("S, X, V' do not partition V")
        v = res.pick()
        d = res.deg[v]
        res.remove(v)
        state.add(v)
        root = state.find(v)
        frontier = {
            p
            for u in state.members
            if state.find(u) == root
            for p in g.adj[u]
            if res.alive[p]
        }
        drop = sorted(p for p in frontier if state.would_exceed(p, k))
        for p in drop:
            res.remove(p)
        x.update(drop)
        trace.steps.append(GreedyStep(v, d, None, tuple(drop)))
        if check:
            for p in range(g.n):
                if res.alive[p] and state.would_exceed(p, k):
                    raise AssertionError(f"undecided vertex {p} would exceed k={k}")

    trace.solution = state.members
    trace.discarded = frozenset(x)
    return trace.solution, trace
