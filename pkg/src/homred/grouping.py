"""Groupings of bounded-degree graphs built from a balanced coloring."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .coloring import BalancedColoring, ColoringParams, ParameterError, balanced_color
from .graph import Graph, Partition, VerificationReport, max_degree, quotient, square


class GroupingError(RuntimeError):
    pass


class DegreeBoundViolated(GroupingError):
    pass


@dataclass(frozen=True)
class Grouping:
    base: Graph
    partition: Partition
    quotient: Graph
    label: tuple[int, ...]
    L: int
    coloring: Optional[BalancedColoring] = None

    @property
    def buckets(self) -> tuple[tuple[int, ...], ...]:
        return self.partition.blocks

    def __len__(self) -> int:
        return len(self.partition)


@dataclass(frozen=True)
class ConstraintGraph:
    color_class: int
    vertices: tuple[int, ...]  # base-graph ids, ascending; local index = position
    graph: Graph


def constraint_graph(g: Graph, coloring: BalancedColoring, i: int) -> ConstraintGraph:
    """Graph on class ``i``: two members clash when their neighborhoods share a color."""
    c = coloring.color
    members = tuple(coloring.members(i))
    nb_colors = [frozenset(c[w] for w in g.neighbors(v)) for v in members]
    edges = [
        (a, b)
        for a in range(len(members))
        for b in range(a + 1, len(members))
        if nb_colors[a] & nb_colors[b]
    ]
    return ConstraintGraph(i, members, Graph(len(members), edges))


def first_fit(g: Graph) -> list[int]:
    """Greedy proper coloring, ascending vertices, smallest color (0-based)."""
    col = [-1] * g.n
    for v in g.vertices():
        used = {col[u] for u in g.neighbors(v)}
        col[v] = next(k for k in range(len(used) + 1) if k not in used)
    return col


def lambda_for(params: ColoringParams) -> Fraction:
    return 2 * params.d * params.beta


def _make(g: Graph, blocks: Sequence[Sequence[int]], label: Sequence[int], L: int, coloring=None) -> Grouping:
    p = Partition(g.n, blocks)
    if len(label) != len(p):
        raise ValueError(f"{len(label)} labels for {len(p)} buckets")
    if any(not 1 <= x <= L for x in label):
        raise ValueError(f"labels must lie in 1..{L}")
    return Grouping(g, p, quotient(g, p), tuple(label), L, coloring)


def from_partition(g: Graph, blocks: Sequence[Sequence[int]], label: Sequence[int], L: Optional[int] = None) -> Grouping:
    """Testing-mode grouping from an injected partition and bucket labels."""
    return _make(g, blocks, label, L if L is not None else max(label, default=1))


def singleton_grouping(g: Graph, label: Optional[Sequence[int]] = None) -> Grouping:
    """Every vertex its own bucket; injective labels ``v + 1`` unless given."""
    if label is None:
        label = [v + 1 for v in g.vertices()]
    return _make(g, [[v] for v in g.vertices()], label, max(label, default=1))


def random_grouping(g: Graph, rng: random.Random, merge_prob: float = 0.7) -> Grouping:
    """Random grouping satisfying the independence and single-edge properties.

    Vertices are visited in random order and placed into a random compatible
    bucket with probability ``merge_prob``. Buckets stay independent in G^2 so
    that no later vertex can see two members of one bucket. Labels come from
    first-fit on the square of the quotient under a random bucket order.
    """
    g2 = square(g)
    order = list(g.vertices())
    rng.shuffle(order)
    buckets: list[list[int]] = []
    where = [-1] * g.n

    def compatible(v: int, b: int) -> bool:
        if any(g2.has_edge(v, x) for x in buckets[b]):
            return False
        for u in g.neighbors(v):
            ub = where[u]
            if ub >= 0 and any(where[y] == ub for x in buckets[b] for y in g.neighbors(x)):
                return False
        return True

    for v in order:
        options = [b for b in range(len(buckets)) if compatible(v, b)]
        if options and rng.random() < merge_prob:
            b = rng.choice(options)
        else:
            buckets.append([])
            b = len(buckets) - 1
        buckets[b].append(v)
        where[v] = b
    p = Partition(g.n, buckets)
    q = quotient(g, p)
    perm = list(range(len(p)))
    rng.shuffle(perm)
    relabeled = Graph(len(p), ((perm[a], perm[b]) for a, b in square(q).edges))
    col = first_fit(relabeled)
    label = [col[perm[b]] + 1 for b in range(len(p))]
    return Grouping(g, p, q, tuple(label), max(label, default=1))


def build_grouping(g: Graph, r: int, params: ColoringParams) -> Grouping:
    """Group ``g`` into at most n/r independent buckets, labels from a balanced coloring.

    Each color class is split by a first-fit coloring of its constraint graph;
    the resulting classes become buckets, emitted in (color, split) order.
    """
    n, d = g.n, params.d
    if r < 1:
        raise ParameterError(f"r must be positive, got {r}")
    if max_degree(g) > d:
        raise ParameterError(f"graph has max degree {max_degree(g)} > d={d}")
    if params.paper:
        lam = lambda_for(params)
        if params.L != lam * r:
            raise ParameterError(f"paper mode needs L = lambda*r = {lam * r}, got {params.L}")
        if 2 * lam * r * r > n:
            raise ParameterError(f"no admissible r: 2*lambda*r^2 = {2 * lam * r * r} > n = {n}")
    coloring = balanced_color(g, params)
    c = coloring.color
    sizes = coloring.class_sizes

    blocks: list[list[int]] = []
    label: list[int] = []
    for i in range(1, params.L + 1):
        F = constraint_graph(g, coloring, i)
        size = len(F.vertices)
        for a, v in enumerate(F.vertices):
            allowed = sum(params.pair_cap(sizes[c[v]], sizes[c[w]]) - 1 for w in g.neighbors(v))
            if F.graph.degree(a) > allowed:
                raise DegreeBoundViolated(f"vertex {v} has degree {F.graph.degree(a)} in F_{i}, bound {allowed}")
            if params.paper:
                assert 2 * r * F.graph.degree(a) <= size, (i, v)
        split = first_fit(F.graph)
        k = max(split, default=-1) + 1
        if k > size // (2 * r) + 1:
            raise DegreeBoundViolated(f"F_{i} needs {k} classes, bound {size // (2 * r) + 1}")
        for s in range(k):
            blocks.append([F.vertices[a] for a in range(size) if split[a] == s])
            label.append(i)
    if len(blocks) * r > n:
        raise GroupingError(f"{len(blocks)} buckets exceed n/r = {Fraction(n, r)}")
    return _make(g, blocks, label, params.L, coloring)


def verify_grouping(grp: Grouping, r: Optional[int] = None) -> VerificationReport:
    """Check bucket count (when ``r`` is given), label properness on the squared
    quotient, bucket independence, and at most one base edge per bucket pair."""
    rep = VerificationReport()
    g, p, q = grp.base, grp.partition, grp.quotient
    if r is not None and len(p) * r > g.n:
        rep.add("bucket_count", (len(p), Fraction(g.n, r)))
    if len(grp.label) != len(p):
        rep.add("label_total", (len(grp.label), len(p)))
        return rep
    for a, b in square(q).sorted_edges():
        if grp.label[a] == grp.label[b]:
            rep.add("label_proper_square", (a, b))
    crossings: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for u, v in g.sorted_edges():
        bu, bv = p.block_of(u), p.block_of(v)
        if bu == bv:
            rep.add("bucket_independent", (bu, (u, v)))
        else:
            crossings.setdefault((min(bu, bv), max(bu, bv)), []).append((u, v))
    for pair, es in sorted(crossings.items()):
        if len(es) > 1:
            rep.add("single_edge", (pair, es))
    return rep
