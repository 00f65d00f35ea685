"""Compile 3-Coloring on a grouped graph into a LIST-HOM instance, and translate
solutions in both directions."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Mapping, Optional, Sequence

from .graph import Graph, is_proper_coloring
from .grouping import Grouping, GroupingError, verify_grouping


class AmbiguousPort(GroupingError):
    pass


class InconsistentImage(ValueError):
    pass


class InstanceTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class PortMap:
    bucket: int
    ports: Mapping[int, int]  # label -> vertex of the bucket; absent labels map to none

    def __getitem__(self, label: int) -> Optional[int]:
        return self.ports.get(label)

    def port_vertices(self) -> list[int]:
        return sorted(set(self.ports.values()))


@dataclass(frozen=True, order=True)
class Code:
    """Sparse label -> color vector; labels not present read as 0."""

    items: tuple[tuple[int, int], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[int, int]) -> "Code":
        return cls(tuple(sorted((int(k), int(v)) for k, v in mapping.items() if v)))

    @cached_property
    def _dict(self) -> dict[int, int]:
        return dict(self.items)

    def __getitem__(self, label: int) -> int:
        return self._dict.get(label, 0)

    def support(self) -> set[int]:
        return set(self._dict)

    def dense(self, L: int) -> tuple[int, ...]:
        return tuple(self[i] for i in range(1, L + 1))


HVertex = tuple[Code, int]
EdgeRule = Callable[[Code, int, Code, int], bool]


def edge_rule(r1: Code, l1: int, r2: Code, l2: int) -> bool:
    """(R1, l1) ~ (R2, l2) iff R1[l2] != R2[l1]."""
    return r1[l2] != r2[l1]


@dataclass
class ListHomInstance:
    g_prime: Graph
    h_vertices: list[HVertex]
    h_edges: set[tuple[int, int]]
    lists: list[list[int]]
    grouping: Grouping
    ports: list[PortMap]
    meta: dict = field(default_factory=dict)

    @cached_property
    def h(self) -> Graph:
        return Graph(len(self.h_vertices), self.h_edges)

    @cached_property
    def index(self) -> dict[HVertex, int]:
        return {hv: k for k, hv in enumerate(self.h_vertices)}

    def size_report(self, r: int = 1) -> dict:
        """Sizes of G' and the materialized H' against their bounds."""
        grp = self.grouping
        L = grp.L
        port_bound = sum(3 ** len(pm.port_vertices()) for pm in self.ports)
        full_space = 4**L * L
        return {
            "n": grp.base.n,
            "r": r,
            "L": L,
            "g_prime_vertices": self.g_prime.n,
            "h_vertices": len(self.h_vertices),
            "h_edges": len(self.h_edges),
            "port_bound": port_bound,
            "log2_full_space": 2 * L + math.log2(L),
            "g_prime_within_n_over_r": self.g_prime.n * r <= grp.base.n,
            "h_within_bound": len(self.h_vertices) <= min(port_bound, full_space),
        }


def port_map(grp: Grouping, b: int) -> PortMap:
    """For each label, the unique vertex of bucket ``b`` with an edge into the
    neighbor bucket carrying that label."""
    g, p = grp.base, grp.partition
    ports: dict[int, int] = {}
    by_bucket: dict[int, list[tuple[int, int]]] = {}
    for u in p.blocks[b]:
        for w in g.neighbors(u):
            bw = p.block_of(w)
            if bw != b:
                by_bucket.setdefault(bw, []).append((u, w))
    for nb, es in sorted(by_bucket.items()):
        if len(es) > 1:
            raise AmbiguousPort(f"buckets {b} and {nb} span {len(es)} edges: {es}")
        lab = grp.label[nb]
        if lab in ports:
            raise AmbiguousPort(f"bucket {b} has two neighbor buckets labeled {lab}")
        ports[lab] = es[0][0]
    return PortMap(b, ports)


def encode_coloring(pm: PortMap, f: Mapping[int, int] | Sequence[int]) -> Code:
    return Code.of({lab: f[u] for lab, u in pm.ports.items()})


def compile_instance(
    g: Graph,
    grp: Grouping,
    *,
    rule: EdgeRule = edge_rule,
    exhaustive: bool = False,
    max_h_vertices: Optional[int] = 5000,
) -> ListHomInstance:
    """Build (G', H', lists) with G' the quotient and H' materialized from the
    codes realizable in some bucket. ``exhaustive`` instead uses every
    (R, l) in {0..3}^L x [L] as an H' vertex (only for tiny L)."""
    if grp.base != g:
        raise ValueError("grouping is not a grouping of this graph")
    rep = verify_grouping(grp)
    if not rep.ok:
        raise GroupingError(f"grouping violates required properties: {rep.violations[:3]}")
    L = grp.L
    ports = [port_map(grp, b) for b in range(len(grp))]
    budget = sum(3 ** len(pm.port_vertices()) for pm in ports)
    if max_h_vertices is not None and budget > max_h_vertices:
        raise InstanceTooLarge(f"port enumeration needs {budget} H' vertices")

    h_vertices: list[HVertex] = []
    index: dict[HVertex, int] = {}
    if exhaustive:
        if L > 6:
            raise InstanceTooLarge(f"exhaustive H' requires L <= 6, got {L}")
        for lab in range(1, L + 1):
            for dense in itertools.product(range(4), repeat=L):
                hv = (Code.of(dict(zip(range(1, L + 1), dense))), lab)
                index[hv] = len(h_vertices)
                h_vertices.append(hv)

    lists: list[list[int]] = []
    for pm in ports:
        pv = pm.port_vertices()
        lab = grp.label[pm.bucket]
        lst = []
        for assignment in itertools.product((1, 2, 3), repeat=len(pv)):
            hv = (encode_coloring(pm, dict(zip(pv, assignment))), lab)
            k = index.get(hv)
            if k is None:
                k = index[hv] = len(h_vertices)
                h_vertices.append(hv)
            lst.append(k)
        lists.append(lst)

    h_edges = _materialize_edges(h_vertices, rule)
    return ListHomInstance(grp.quotient, h_vertices, h_edges, lists, grp, ports,
                           {"exhaustive": exhaustive})


def _materialize_edges(h_vertices: Sequence[HVertex], rule: EdgeRule) -> set[tuple[int, int]]:
    h_edges = set()
    if rule is edge_rule:
        # a pair can only differ at a position that is non-zero on one side
        by_label: dict[int, list[int]] = {}
        for k, (_, lab) in enumerate(h_vertices):
            by_label.setdefault(lab, []).append(k)
        for a, (r1, l1) in enumerate(h_vertices):
            for x in r1.support():
                for b in by_label.get(x, ()):
                    if a != b and edge_rule(r1, l1, *h_vertices[b]):
                        h_edges.add((min(a, b), max(a, b)))
        return h_edges
    for a in range(len(h_vertices)):
        r1, l1 = h_vertices[a]
        for b in range(a + 1, len(h_vertices)):
            if rule(r1, l1, *h_vertices[b]):
                h_edges.add((a, b))
    return h_edges


def lift_coloring(coloring: Sequence[int], inst: ListHomInstance) -> list[int]:
    """Map each bucket to the H' vertex encoding the coloring restricted to it."""
    g = inst.grouping.base
    if len(coloring) != g.n or any(c not in (1, 2, 3) for c in coloring):
        raise ValueError("expected a total coloring with colors 1..3")
    if not is_proper_coloring(g, coloring):
        raise ValueError("coloring is not proper")
    return [inst.index[(encode_coloring(pm, coloring), inst.grouping.label[pm.bucket])] for pm in inst.ports]


def project_hom(hom: Sequence[int], inst: ListHomInstance) -> list[int]:
    """Read a 3-coloring of the base graph back from a list homomorphism.

    Port vertices take the color stored at their labels; vertices without
    ports get color 1.
    """
    g = inst.grouping.base
    color = [1] * g.n
    for pm in inst.ports:
        code, lab = inst.h_vertices[hom[pm.bucket]]
        if code.support() != set(pm.ports):
            raise InconsistentImage(f"bucket {pm.bucket}: code support {sorted(code.support())} "
                                    f"differs from port labels {sorted(pm.ports)}")
        seen: dict[int, int] = {}
        for i, u in pm.ports.items():
            if seen.setdefault(u, code[i]) != code[i]:
                raise InconsistentImage(f"bucket {pm.bucket}: vertex {u} gets two colors")
            color[u] = code[i]
    return color
