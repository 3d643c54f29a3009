"""Connected components of induced subgraphs and the k-component predicate."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import DomainError
from .graph import Graph


@dataclass(frozen=True)
class ComponentPartition:
    """Components of G[S], each a sorted tuple, ordered by smallest member."""

    components: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.components]

    @property
    def largest(self) -> int:
        return max(self.sizes, default=0)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def vertices(self) -> frozenset[int]:
        return frozenset(v for c in self.components for v in c)


def _check_k(k: int) -> None:
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")


def components(g: Graph, s: Iterable[int]) -> ComponentPartition:
    members = g.check_vertices(s)
    seen: set[int] = set()
    comps = []
    for root in sorted(members):
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in members and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return ComponentPartition(tuple(comps))


def is_k_component_set(g: Graph, s: Iterable[int], k: int) -> bool:
    """True iff every connected component of G[s] has at most ``k`` vertices."""
    _check_k(k)
    return components(g, s).largest <= k


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    members = g.check_vertices(s)
    return not any(w in members for v in members for w in g.adj[v])


class IncrementalComponents:
    """Union-find over a growing vertex set S ⊆ V(g), tracking component orders.

    Vertices are only ever added, never removed, which is all the greedy
    solvers need. ``would_exceed`` is a pure query; ``add`` commits.
    """

    def __init__(self, g: Graph, initial: Iterable[int] = ()):
        self.g = g
        self._parent: dict[int, int] = {}
        self._size: dict[int, int] = {}
        for v in initial:
            self.add(v)

    def __contains__(self, v: int) -> bool:
        return v in self._parent

    def __len__(self) -> int:
        return len(self._parent)

    @property
    def members(self) -> frozenset[int]:
        return frozenset(self._parent)

    def find(self, v: int) -> int:
        root = v
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[v] != root:
            self._parent[v], v = root, self._parent[v]
        return root

    def component_size(self, v: int) -> int:
        return self._size[self.find(v)]

    def merged_size(self, p: int) -> int:
        """Order of p's component if p were added: 1 + sizes of the distinct neighbouring components."""
        if p in self._parent:
            raise DomainError(f"vertex {p} is already in S")
        roots = {self.find(w) for w in self.g.adj[p] if w in self._parent}
        return 1 + sum(self._size[r] for r in roots)

    def would_exceed(self, p: int, k: int) -> bool:
        """Would adding p create a component with at least k+1 vertices?"""
        _check_k(k)
        return self.merged_size(p) > k

    def add(self, p: int) -> int:
        """Insert p into S and return the order of its component."""
        if p in self._parent:
            raise DomainError(f"vertex {p} is already in S")
        if not 0 <= p < self.g.n:
            raise DomainError(f"vertex {p} is not in the graph")
        self._parent[p] = p
        self._size[p] = 1
        root = p
        for w in self.g.adj[p]:
            if w not in self._parent:
                continue
            r = self.find(w)
            if r == root:
                continue
            if self._size[r] > self._size[root]:
                root, r = r, root
            self._parent[r] = root
            self._size[root] += self._size.pop(r)
        return self._size[root]

    def root_sizes(self) -> dict[int, int]:
        return dict(self._size)
