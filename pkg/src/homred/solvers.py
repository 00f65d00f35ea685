"""Exact backtracking solvers for 3-Coloring, HOM and LIST-HOM."""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .graph import Graph, VerificationReport, complete_graph


class BudgetExceeded(RuntimeError):
    def __init__(self, budget: int):
        super().__init__(f"search exceeded {budget} nodes")
        self.budget = budget


class _Counter:
    def __init__(self, budget: Optional[int]):
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(self.budget)


def degeneracy_order(g: Graph) -> list[int]:
    """Reverse smallest-last order (ties by lowest index)."""
    deg = [g.degree(v) for v in g.vertices()]
    removed = [False] * g.n
    out = []
    for _ in range(g.n):
        v = min((v for v in g.vertices() if not removed[v]), key=lambda x: (deg[x], x))
        removed[v] = True
        out.append(v)
        for w in g.neighbors(v):
            if not removed[w]:
                deg[w] -= 1
    out.reverse()
    return out


def solve_3coloring(g: Graph, budget: Optional[int] = None) -> Optional[list[int]]:
    """A proper coloring with colors 1..3, or None."""
    order = degeneracy_order(g)
    color = [0] * g.n
    domains = [{1, 2, 3} for _ in g.vertices()]
    counter = _Counter(budget)

    def search(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for c in sorted(domains[v]):
            counter.tick()
            pruned = []
            dead = False
            for w in g.neighbors(v):
                if not color[w] and c in domains[w]:
                    domains[w].discard(c)
                    pruned.append(w)
                    if not domains[w]:
                        dead = True
            color[v] = c
            if not dead and search(k + 1):
                return True
            color[v] = 0
            for w in pruned:
                domains[w].add(c)
        return False

    return color if search(0) else None


def _normalize_lists(g: Graph, h: Graph, lists) -> list[set[int]]:
    if lists is None:
        return [set(h.vertices()) for _ in g.vertices()]
    out = [set(lists[v]) for v in g.vertices()]
    for v, lst in enumerate(out):
        bad = [x for x in lst if not 0 <= x < h.n]
        if bad:
            raise ValueError(f"list of vertex {v} names invalid targets {bad}")
    return out


def solve_list_hom(
    g: Graph,
    h: Graph,
    lists: Optional[Sequence[Iterable[int]]],
    budget: Optional[int] = None,
) -> Optional[list[int]]:
    """A list homomorphism g -> h as a vertex map, or None.

    Variables go by descending degree (ties by index), values ascending; an
    assignment filters each unassigned neighbor's domain to the image's
    neighborhood in ``h``.
    """
    domains = _normalize_lists(g, h, lists)
    if any(not d for d in domains):
        return None
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    image = [-1] * g.n
    counter = _Counter(budget)

    def search(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for x in sorted(domains[v]):
            counter.tick()
            saved = []
            dead = False
            hx = h.neighbors(x)
            for w in g.neighbors(v):
                if image[w] < 0:
                    keep = domains[w] & hx
                    if len(keep) != len(domains[w]):
                        saved.append((w, domains[w]))
                        domains[w] = keep
                        if not keep:
                            dead = True
                            break
            image[v] = x
            if not dead and search(k + 1):
                return True
            image[v] = -1
            for w, dom in reversed(saved):
                domains[w] = dom
        return False

    return image if search(0) else None


def solve_hom(g: Graph, h: Graph, budget: Optional[int] = None) -> Optional[list[int]]:
    return solve_list_hom(g, h, None, budget)


def check_list_hom(
    g: Graph,
    h: Graph,
    lists: Optional[Sequence[Iterable[int]]],
    m: Sequence[int],
) -> VerificationReport:
    rep = VerificationReport()
    if len(m) != g.n:
        rep.add("total", (len(m), g.n))
        return rep
    for v in g.vertices():
        if not 0 <= m[v] < h.n:
            rep.add("range", v)
        elif lists is not None and m[v] not in set(lists[v]):
            rep.add("list", v)
    if rep.violations:
        return rep
    for u, v in g.sorted_edges():
        if not h.has_edge(m[u], m[v]):
            rep.add("edge", (u, v))
    return rep


def check_3coloring(g: Graph, color: Sequence[int]) -> VerificationReport:
    """A homomorphism check into K3 with colors shifted to 1..3."""
    if len(color) != g.n or any(c not in (1, 2, 3) for c in color):
        rep = VerificationReport()
        rep.add("total", list(color))
        return rep
    return check_list_hom(g, complete_graph(3), None, [c - 1 for c in color])
