"""Simple undirected graphs on dense integer vertices, squares and groupings."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph with vertices ``0 .. n-1``.

    Duplicate edges given to the constructor are merged; self-loops and
    out-of-range endpoints raise ``ValueError``.
    """

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        es: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            es.add(_norm(u, v))
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._edges = frozenset(es)
        self._adj = tuple(frozenset(a) for a in adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def vertices(self) -> range:
        return range(self._n)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={len(self._edges)})"


@dataclass
class VerificationReport:
    """Outcome of a structural check: ``ok`` plus ``(condition, witness)`` pairs."""

    violations: list[tuple[str, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, condition: str, witness: object) -> None:
        self.violations.append((condition, witness))

    def conditions(self) -> set[str]:
        return {c for c, _ in self.violations}

    def __bool__(self) -> bool:
        return self.ok


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in g.vertices()), default=0)


def square(g: Graph) -> Graph:
    """Return G^2: distinct vertices at distance at most two become adjacent."""
    edges: set[Edge] = set(g.edges)
    for w in g.vertices():
        nb = sorted(g.neighbors(w))
        for a in range(len(nb)):
            for b in range(a + 1, len(nb)):
                edges.add((nb[a], nb[b]))
    return Graph(g.n, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


class Partition:
    """Disjoint non-empty blocks covering ``range(n)``."""

    __slots__ = ("_blocks", "_block_of")

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        bl = tuple(tuple(sorted(int(v) for v in b)) for b in blocks)
        block_of = [-1] * n
        for i, b in enumerate(bl):
            if not b:
                raise ValueError(f"block {i} is empty")
            for v in b:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} out of range for n={n}")
                if block_of[v] != -1:
                    raise ValueError(f"vertex {v} appears in blocks {block_of[v]} and {i}")
                block_of[v] = i
        missing = [v for v in range(n) if block_of[v] == -1]
        if missing:
            raise ValueError(f"partition does not cover vertices {missing}")
        self._blocks = bl
        self._block_of = tuple(block_of)

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(n, ([v] for v in range(n)))

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return self._blocks

    @property
    def n(self) -> int:
        return len(self._block_of)

    def block_of(self, v: int) -> int:
        return self._block_of[v]

    def __len__(self) -> int:
        return len(self._blocks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._blocks == other._blocks

    def __hash__(self) -> int:
        return hash(self._blocks)

    def __repr__(self) -> str:
        return f"Partition({list(map(list, self._blocks))})"


def quotient(g: Graph, p: Partition) -> Graph:
    """Grouping of ``g``: one vertex per block, adjacent iff some edge crosses."""
    if p.n != g.n:
        raise ValueError(f"partition covers {p.n} vertices, graph has {g.n}")
    edges = set()
    for u, v in g.edges:
        bu, bv = p.block_of(u), p.block_of(v)
        if bu != bv:
            edges.add(_norm(bu, bv))
    return Graph(len(p), edges)


def is_proper_coloring(g: Graph, color: Sequence[int]) -> bool:
    return all(color[u] != color[v] for u, v in g.edges)
