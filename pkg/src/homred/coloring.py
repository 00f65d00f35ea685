"""Balanced colorings: proper on the square, small classes, few edges per color pair.

Colors are ``1..L``; ``0`` marks an uncolored vertex in partial colorings.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence

from .graph import Graph, VerificationReport, max_degree, square


class ParameterError(ValueError):
    """Inputs fall outside the admissible parameter range."""


class ColorExhausted(RuntimeError):
    def __init__(self, vertex: int):
        super().__init__(f"every color is forbidden for vertex {vertex}")
        self.vertex = vertex


@dataclass(frozen=True)
class ColoringParams:
    d: int
    L: int
    alpha: Fraction
    beta: Fraction
    tau: Fraction
    paper: bool = False

    def __post_init__(self):
        for name in ("alpha", "beta", "tau"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
            if getattr(self, name) <= 1:
                raise ParameterError(f"{name} must exceed 1, got {getattr(self, name)}")
        if self.d < 0:
            raise ParameterError(f"degree bound must be non-negative, got {self.d}")
        if self.L < 1:
            raise ParameterError(f"color count must be positive, got {self.L}")

    @classmethod
    def for_paper(cls, d: int, L: int) -> "ColoringParams":
        alpha = 4
        return cls(d, L, Fraction(alpha), Fraction(16 * alpha**2 * d**4), Fraction(2 * d * d + 1), paper=True)

    @classmethod
    def relaxed(cls, d: int, L: int, alpha=4, beta=16, tau=3) -> "ColoringParams":
        return cls(d, L, Fraction(alpha), Fraction(beta), Fraction(tau), paper=False)

    def with_L(self, L: int) -> "ColoringParams":
        if self.paper:
            return ColoringParams.for_paper(self.d, L)
        return ColoringParams(self.d, L, self.alpha, self.beta, self.tau, paper=False)

    def class_cap(self, n: int) -> int:
        return math.ceil(self.alpha * n / self.L)

    def pair_cap(self, size_i: int, size_j: int) -> int:
        return math.ceil(self.beta * min(size_i, size_j) / self.L)

    def forbidden_bound(self) -> Fraction:
        """Counting bound on forbidden colors: d^2 + L/alpha + 4*alpha*L*d^4/beta."""
        d, L = self.d, self.L
        return d * d + L / self.alpha + 4 * self.alpha * L * d**4 / self.beta


class PairEdgeCounts:
    """Symmetric counts of edges between color classes ``i != j``."""

    def __init__(self):
        self._k: dict[tuple[int, int], int] = {}

    @staticmethod
    def _key(i: int, j: int) -> tuple[int, int]:
        return (i, j) if i < j else (j, i)

    def get(self, i: int, j: int) -> int:
        return self._k.get(self._key(i, j), 0)

    def increment(self, i: int, j: int) -> None:
        if i == j:
            raise ValueError("same-color edge cannot be counted")
        key = self._key(i, j)
        self._k[key] = self._k.get(key, 0) + 1

    def items(self):
        return self._k.items()

    def row_sum(self, i: int) -> int:
        return sum(c for (a, b), c in self._k.items() if i in (a, b))

    @classmethod
    def from_coloring(cls, g: Graph, color: Sequence[int]) -> "PairEdgeCounts":
        counts = cls()
        for u, v in g.edges:
            if color[u] and color[v] and color[u] != color[v]:
                counts.increment(color[u], color[v])
        return counts


@dataclass(frozen=True)
class BalancedColoring:
    color: tuple[int, ...]
    params: ColoringParams

    @cached_property
    def class_sizes(self) -> dict[int, int]:
        sizes = {i: 0 for i in range(1, self.params.L + 1)}
        for c in self.color:
            sizes[c] += 1
        return sizes

    def members(self, i: int) -> list[int]:
        return [v for v, c in enumerate(self.color) if c == i]


def greedy_independent_set(g2: Graph, target: int) -> list[int]:
    """First ``target`` vertices of an ascending-index greedy independent set of ``g2``."""
    if target < 1:
        raise ValueError(f"target must be positive, got {target}")
    chosen: list[int] = []
    blocked = [False] * g2.n
    for v in g2.vertices():
        if blocked[v]:
            continue
        chosen.append(v)
        if len(chosen) == target:
            return chosen
        for w in g2.neighbors(v):
            blocked[w] = True
    raise ParameterError(f"greedy scan found only {len(chosen)} independent vertices, need {target}")


def equitable_precolor(independent_set: Iterable[int], L: int, allow_empty: bool = False) -> dict[int, int]:
    """Round-robin colors ``1..L`` over the set in ascending vertex order.

    With fewer vertices than colors the result is still equitable (sizes 0 and
    1) but leaves classes empty; that is refused unless ``allow_empty``.
    """
    vs = sorted(independent_set)
    if len(vs) < L and not allow_empty:
        raise ParameterError(f"cannot precolor {len(vs)} vertices with all {L} colors non-empty")
    return {v: 1 + idx % L for idx, v in enumerate(vs)}


def _forbidden(
    g: Graph,
    g2: Graph,
    color: Sequence[int],
    sizes: Sequence[int],
    counts: PairEdgeCounts,
    v: int,
    params: ColoringParams,
) -> set[int]:
    L = params.L
    out = {color[w] for w in g2.neighbors(v) if color[w]}
    cap = params.class_cap(g.n)
    out.update(i for i in range(1, L + 1) if sizes[i] >= cap)
    # pair caps use class sizes after tentatively placing v in class i
    for u in g.neighbors(v):
        j = color[u]
        if not j:
            continue
        for i in range(1, L + 1):
            if i == j or i in out:
                continue
            if counts.get(i, j) + 1 > params.pair_cap(sizes[i] + 1, sizes[j]):
                out.add(i)
    return out


def forbidden_colors(
    g: Graph,
    partial: Sequence[int],
    counts: PairEdgeCounts,
    v: int,
    params: ColoringParams,
    g2: Optional[Graph] = None,
) -> set[int]:
    """Colors whose assignment to ``v`` would break one of the three balance conditions."""
    if partial[v]:
        raise ValueError(f"vertex {v} is already colored")
    sizes = [0] * (params.L + 1)
    for c in partial:
        if c:
            sizes[c] += 1
    return _forbidden(g, g2 if g2 is not None else square(g), partial, sizes, counts, v, params)


def check_paper_range(n: int, params: ColoringParams) -> None:
    d, L = params.d, params.L
    if L < params.tau:
        raise ParameterError(f"L={L} is below tau={params.tau}")
    if L * 2 * d * d * (d * d + 1) > n * (d * d - 1):
        raise ParameterError(f"L={L} exceeds n(d^2-1)/(2d^2(d^2+1)) for n={n}, d={d}")


StepHook = Callable[[int, int, Sequence[int], PairEdgeCounts, set], None]


def balanced_color(g: Graph, params: ColoringParams, on_step: Optional[StepHook] = None) -> BalancedColoring:
    """Greedy balanced coloring in ``params.L`` colors.

    Precolors a greedy independent set of G^2 equitably, then extends over the
    remaining vertices in ascending order with the smallest admissible color.
    ``on_step(v, color, partial, counts, forbidden)`` is called after each
    extension step.
    """
    n, d, L = g.n, params.d, params.L
    if max_degree(g) > d:
        raise ParameterError(f"graph has max degree {max_degree(g)} > d={d}")
    if params.paper:
        check_paper_range(n, params)
    g2 = square(g)
    target = -(-n // (d * d + 1))
    pre = equitable_precolor(greedy_independent_set(g2, target), L, allow_empty=not params.paper) if n else {}

    color = [0] * n
    sizes = [0] * (L + 1)
    for v, c in pre.items():
        color[v] = c
        sizes[c] += 1
    counts = PairEdgeCounts.from_coloring(g, color)
    bound = params.forbidden_bound() if params.paper else None

    for v in g.vertices():
        if color[v]:
            continue
        forb = _forbidden(g, g2, color, sizes, counts, v, params)
        if bound is not None:
            assert len(forb) <= bound < L - 1, (v, len(forb), bound)
        free = next((i for i in range(1, L + 1) if i not in forb), None)
        if free is None:
            raise ColorExhausted(v)
        nb_colors = [color[u] for u in g.neighbors(v) if color[u]]
        assert len(nb_colors) == len(set(nb_colors)), "colored neighbors must be g2-distinct"
        color[v] = free
        sizes[free] += 1
        for j in nb_colors:
            counts.increment(free, j)
        if on_step is not None:
            on_step(v, free, tuple(color), counts, forb)
    return BalancedColoring(tuple(color), params)


def verify_balanced(g: Graph, coloring: BalancedColoring) -> VerificationReport:
    """Check the three balance conditions against final class sizes."""
    rep = VerificationReport()
    params, c = coloring.params, coloring.color
    if len(c) != g.n:
        rep.add("total", f"coloring has {len(c)} entries for {g.n} vertices")
        return rep
    bad = [v for v in g.vertices() if not 1 <= c[v] <= params.L]
    if bad:
        rep.add("total", bad)
        return rep
    for u, v in square(g).sorted_edges():
        if c[u] == c[v]:
            rep.add("proper_square", (u, v))
    sizes = coloring.class_sizes
    cap = params.class_cap(g.n)
    for i, s in sizes.items():
        if s > cap:
            rep.add("class_size", (i, s, cap))
    for (i, j), k in sorted(PairEdgeCounts.from_coloring(g, c).items()):
        K = params.pair_cap(sizes[i], sizes[j])
        if k > K:
            rep.add("pair_edges", (i, j, k, K))
    return rep
