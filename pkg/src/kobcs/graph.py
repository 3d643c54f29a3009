"""Simple undirected vertex-weighted graphs, file formats and random instances.

Vertices are the integers ``0 .. n-1`` inside Python. Files and the command
line speak 1-indexed ids; the conversion happens only in the readers and
writers of this module (and in the CLI for solution lists).
"""

from __future__ import annotations

import io
import os
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from typing import IO

import numpy as np

from .errors import DomainError, ParseError, ValidationError

Edge = tuple[int, int]

FORMATS = ("dimacs", "edgelist")


class Graph:
    """Immutable simple undirected graph with optional positive vertex weights.

    Args:
        n: number of vertices, labelled ``0 .. n-1``.
        edges: unordered vertex pairs. Self-loops and repeated pairs are rejected.
        weights: one strictly positive weight per vertex, or ``None`` for an
            unweighted graph (every vertex then counts as weight 1).
        origin: for subgraphs, the id each vertex had in the graph it was cut
            from. ``None`` means the identity.
    """

    __slots__ = ("n", "edges", "adj", "weights", "origin")

    def __init__(
        self,
        n: int,
        edges: Iterable[Edge] = (),
        weights: Iterable[float] | None = None,
        origin: Iterable[int] | None = None,
    ):
        if n < 0:
            raise DomainError(f"vertex count must be non-negative, got {n}")
        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValidationError(f"duplicate edge {e}")
            seen.add(e)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)

        if weights is not None:
            weights = tuple(float(w) for w in weights)
            if len(weights) != n:
                raise DomainError(f"expected {n} weights, got {len(weights)}")
            for v, w in enumerate(weights):
                if not w > 0:
                    raise ValidationError(f"weight of vertex {v} must be positive, got {w}")
            if n == 0:
                weights = None
        if origin is not None:
            origin = tuple(origin)
            if len(origin) != n:
                raise DomainError(f"origin map must have {n} entries")
            if tuple(range(n)) == origin:
                origin = None

        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.weights: tuple[float, ...] | None = weights
        self.origin: tuple[int, ...] | None = origin

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def is_weighted(self) -> bool:
        return self.weights is not None

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and self.weights == other.weights
            and self.origin == other.origin
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.weights, self.origin))

    def __repr__(self) -> str:
        tag = ", weighted" if self.is_weighted else ""
        return f"Graph(n={self.n}, m={self.m}{tag})"

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        a, b = (u, v) if len(self.adj[u]) <= len(self.adj[v]) else (v, u)
        return b in self.adj[a]

    def weight(self, v: int) -> float:
        return 1.0 if self.weights is None else self.weights[v]

    def total_weight(self, vertices: Iterable[int]) -> float:
        if self.weights is None:
            return float(sum(1 for _ in vertices))
        return sum(self.weights[v] for v in vertices)

    def with_weights(self, weights: Iterable[float] | None) -> Graph:
        return Graph(self.n, self.edges, weights, self.origin)

    def unit_weighted(self) -> Graph:
        """Same graph with every vertex carrying weight 1."""
        return self.with_weights([1.0] * self.n)

    def check_vertices(self, vertices: Iterable[int]) -> frozenset[int]:
        """Return ``vertices`` as a frozenset, raising DomainError on foreign ids."""
        s = frozenset(vertices)
        for v in s:
            if not (isinstance(v, (int, np.integer)) and 0 <= v < self.n):
                raise DomainError(f"vertex {v!r} is not in the graph (n={self.n})")
        return s


@dataclass(frozen=True)
class GraphMetrics:
    """Vertex/edge counts, maximum degree and the exact average degree 2m/n."""

    n: int
    m: int
    max_degree: int

    @property
    def degree_sum(self) -> int:
        return 2 * self.m

    @property
    def avg_degree(self) -> Fraction:
        if self.n == 0:
            return Fraction(0)
        return Fraction(2 * self.m, self.n)

    def avg_degree_str(self) -> str:
        return f"{2 * self.m}/{self.n}"


def metrics(g: Graph) -> GraphMetrics:
    max_degree = max((len(a) for a in g.adj), default=0)
    return GraphMetrics(n=g.n, m=g.m, max_degree=max_degree)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """G[s], relabelled to ``0 .. |s|-1`` in increasing id order.

    The returned graph's ``origin`` records each new vertex's id in ``g``
    (composed with ``g.origin`` if ``g`` is itself a subgraph).
    """
    keep = sorted(g.check_vertices(s))
    local = {v: i for i, v in enumerate(keep)}
    edges = [(local[u], local[v]) for u, v in g.edges if u in local and v in local]
    weights = None if g.weights is None else [g.weights[v] for v in keep]
    origin = keep if g.origin is None else [g.origin[v] for v in keep]
    return Graph(len(keep), edges, weights, origin)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("a simple cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p): each of the C(n, 2) pairs kept independently with probability p.

    Pairs are visited in lexicographic order and compared against one draw
    each from ``numpy.random.default_rng(seed)``, so the graph depends only
    on ``(n, p, seed)``.
    """
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return Graph(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def random_weights(g: Graph, seed: int, low: int = 1, high: int = 10) -> Graph:
    """Attach integer weights drawn uniformly from ``low..high`` (inclusive)."""
    if low < 1 or high < low:
        raise DomainError(f"need 1 <= low <= high, got {low}, {high}")
    rng = np.random.default_rng(seed)
    return g.with_weights(rng.integers(low, high + 1, size=g.n).astype(float).tolist())


# -- file formats ------------------------------------------------------------


def _format_weight(w: float) -> str:
    return str(int(w)) if float(w).is_integer() else repr(float(w))


def _int_token(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def _check_pair(u: int, v: int, n: int, seen: set[Edge], lineno: int) -> Edge:
    if not (1 <= u <= n and 1 <= v <= n):
        raise ValidationError(f"edge ({u}, {v}) has an endpoint outside 1..{n}", lineno)
    if u == v:
        raise ValidationError(f"self-loop at vertex {u}", lineno)
    e = (min(u, v) - 1, max(u, v) - 1)
    if e in seen:
        raise ValidationError(f"duplicate edge ({u}, {v})", lineno)
    seen.add(e)
    return e


def _parse_dimacs(lines: Iterable[str]) -> Graph:
    n: int | None = None
    declared_m = 0
    header_line = 0
    edges: list[Edge] = []
    seen: set[Edge] = set()
    weights: dict[int, float] = {}
    for lineno, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise ParseError("second problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ParseError("problem line must read 'p edge <n> <m>'", lineno)
            n, declared_m = _int_token(tokens[2], lineno), _int_token(tokens[3], lineno)
            if n < 0 or declared_m < 0:
                raise ParseError("negative count in problem line", lineno)
            header_line = lineno
        elif n is None:
            raise ParseError(f"{kind!r} line before the problem line", lineno)
        elif kind == "e":
            if len(tokens) != 3:
                raise ParseError("edge line must read 'e <u> <v>'", lineno)
            u, v = _int_token(tokens[1], lineno), _int_token(tokens[2], lineno)
            edges.append(_check_pair(u, v, n, seen, lineno))
        elif kind == "n":
            if len(tokens) != 3:
                raise ParseError("weight line must read 'n <v> <w>'", lineno)
            v = _int_token(tokens[1], lineno)
            if not 1 <= v <= n:
                raise ValidationError(f"weight for unknown vertex {v}", lineno)
            try:
                w = float(tokens[2])
            except ValueError:
                raise ParseError(f"bad weight {tokens[2]!r}", lineno) from None
            if not w > 0:
                raise ValidationError(f"weight of vertex {v} must be positive, got {tokens[2]}", lineno)
            if v - 1 in weights:
                raise ValidationError(f"vertex {v} weighted twice", lineno)
            weights[v - 1] = w
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing problem line 'p edge <n> <m>'")
    if declared_m != len(edges):
        raise ParseError(f"header declares {declared_m} edges but {len(edges)} were given", header_line)
    w = [weights.get(v, 1.0) for v in range(n)] if weights else None
    return Graph(n, edges, w)


def _parse_edgelist(lines: Iterable[str]) -> Graph:
    n: int | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(lines, start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if n is None:
            if len(tokens) != 1:
                raise ParseError("first line must hold the vertex count", lineno)
            n = _int_token(tokens[0], lineno)
            if n < 0:
                raise ParseError("negative vertex count", lineno)
            continue
        if len(tokens) != 2:
            raise ParseError("expected 'u v'", lineno)
        u, v = _int_token(tokens[0], lineno), _int_token(tokens[1], lineno)
        edges.append(_check_pair(u, v, n, seen, lineno))
    if n is None:
        raise ParseError("empty edge list: missing vertex count")
    return Graph(n, edges)


def loads_graph(text: str | bytes, fmt: str = "dimacs") -> Graph:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = text.splitlines()
    if fmt == "dimacs":
        return _parse_dimacs(lines)
    if fmt == "edgelist":
        return _parse_edgelist(lines)
    raise DomainError(f"unknown graph format {fmt!r}; choose from {FORMATS}")


def load_graph(fp: IO, fmt: str = "dimacs") -> Graph:
    """Parse a graph from an open text or binary stream."""
    return loads_graph(fp.read(), fmt)


def read_graph(path: str | os.PathLike, fmt: str = "dimacs") -> Graph:
    with open(path, "rb") as fp:
        return load_graph(fp, fmt)


def dumps_graph(g: Graph, fmt: str = "dimacs") -> str:
    """Serialize with edges in lexicographic order, so equal graphs give equal text."""
    buf = io.StringIO()
    if fmt == "dimacs":
        buf.write(f"p edge {g.n} {g.m}\n")
        for u, v in g.edges:
            buf.write(f"e {u + 1} {v + 1}\n")
        if g.weights is not None:
            for v, w in enumerate(g.weights):
                buf.write(f"n {v + 1} {_format_weight(w)}\n")
    elif fmt == "edgelist":
        if g.weights is not None:
            raise DomainError("the edge-list format cannot carry vertex weights")
        buf.write(f"{g.n}\n")
        for u, v in g.edges:
            buf.write(f"{u + 1} {v + 1}\n")
    else:
        raise DomainError(f"unknown graph format {fmt!r}; choose from {FORMATS}")
    return buf.getvalue()


def dump_graph(g: Graph, fp: IO[str], fmt: str = "dimacs") -> None:
    fp.write(dumps_graph(g, fmt))


def write_graph(g: Graph, path: str | os.PathLike, fmt: str = "dimacs") -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fp:
        dump_graph(g, fp, fmt)


def parse_vertex_list(text: str) -> list[int]:
    """Whitespace-separated 1-indexed ids -> 0-indexed list. ``c``/``#`` lines are comments."""
    out: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped[0] in "c#":
            continue
        for tok in stripped.split():
            v = _int_token(tok, lineno)
            if v < 1:
                raise ParseError(f"vertex ids are 1-indexed, got {v}", lineno)
            out.append(v - 1)
    return out


def format_vertex_list(s: Iterable[int]) -> str:
    return " ".join(str(v + 1) for v in sorted(s))
