"""Brute-force enumeration oracles, vectorized with numpy.

These never share code with the backtracking solvers; they exist to check them
and to decide both sides of the reduction on tiny instances.
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

from .graph import Graph

CHUNK = 1 << 18


def _mixed_radix(start: int, stop: int, radices: Sequence[int]) -> np.ndarray:
    codes = np.arange(start, stop, dtype=np.int64)
    out = np.empty((len(codes), len(radices)), dtype=np.int64)
    for i, r in enumerate(radices):
        out[:, i] = codes % r
        codes //= r
    return out


def brute_force_list_hom(
    g: Graph,
    h: Graph,
    lists: Optional[Sequence[Iterable[int]]] = None,
) -> Optional[list[int]]:
    """First list homomorphism in mixed-radix order over the lists, or None."""
    if lists is None:
        cand = [np.arange(h.n) for _ in g.vertices()]
    else:
        cand = [np.array(sorted(set(lists[v])), dtype=np.int64) for v in g.vertices()]
    if any(len(c) == 0 for c in cand):
        return None
    if g.n == 0:
        return []
    adj = np.zeros((h.n, h.n), dtype=bool)
    for a, b in h.edges:
        adj[a, b] = adj[b, a] = True
    radices = [len(c) for c in cand]
    total = int(np.prod(radices, dtype=object))
    edges = g.sorted_edges()
    for start in range(0, total, CHUNK):
        idx = _mixed_radix(start, min(total, start + CHUNK), radices)
        img = np.column_stack([cand[v][idx[:, v]] for v in g.vertices()])
        ok = np.ones(len(img), dtype=bool)
        for u, v in edges:
            ok &= adj[img[:, u], img[:, v]]
        hits = np.flatnonzero(ok)
        if len(hits):
            return [int(x) for x in img[hits[0]]]
    return None


def brute_force_3coloring(g: Graph) -> Optional[list[int]]:
    """First proper coloring in colors 1..3 in base-3 order, or None."""
    if g.n == 0:
        return []
    total = 3**g.n
    edges = g.sorted_edges()
    for start in range(0, total, CHUNK):
        col = _mixed_radix(start, min(total, start + CHUNK), [3] * g.n)
        ok = np.ones(len(col), dtype=bool)
        for u, v in edges:
            ok &= col[:, u] != col[:, v]
        hits = np.flatnonzero(ok)
        if len(hits):
            return [int(c) + 1 for c in col[hits[0]]]
    return None
