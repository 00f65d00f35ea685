"""DIMACS graph files, JSON instances, and seeded random graphs."""
from __future__ import annotations

import json
import random
from pathlib import Path
from typing import Any, TextIO, Union

from .graph import Graph, Partition, quotient
from .grouping import Grouping
from .reduction import Code, ListHomInstance, PortMap

PathLike = Union[str, Path]


class FormatError(ValueError):
    pass


def random_graph(n: int, max_degree: int, rng: random.Random, density: float | None = None) -> Graph:
    """Random graph with degrees capped at ``max_degree``.

    Candidate pairs are visited in shuffled order and inserted with
    probability ``density`` (drawn uniformly per graph when not given) if both
    endpoints are below the cap.
    """
    if n < 0 or max_degree < 0:
        raise ValueError("n and max_degree must be non-negative")
    if density is None:
        density = rng.random()
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        if deg[u] < max_degree and deg[v] < max_degree and rng.random() < density:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, edges)


def dumps_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = [f"c {line}" for line in comment.splitlines()] if comment else []
    lines.append(f"p edge {g.n} {len(g.edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def loads_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise FormatError(f"line {lineno}: bad problem line {raw!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: bad edge line {raw!r}")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if u == v:
                raise FormatError(f"line {lineno}: self-loop")
            edges.append((u, v))
        else:
            raise FormatError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise FormatError("missing problem line")
    try:
        return Graph(n, edges)
    except ValueError as e:
        raise FormatError(str(e)) from e


def read_graph(path: PathLike) -> Graph:
    return loads_dimacs(Path(path).read_text())


def write_graph(g: Graph, path: PathLike, comment: str | None = None) -> None:
    Path(path).write_text(dumps_dimacs(g, comment))


def _graph_json(g: Graph) -> dict:
    return {"vertex_count": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def _graph_from_json(obj: dict) -> Graph:
    return Graph(int(obj["vertex_count"]), [tuple(e) for e in obj["edges"]])


def grouping_to_json(grp: Grouping) -> dict:
    return {
        "base": _graph_json(grp.base),
        "buckets": [list(b) for b in grp.buckets],
        "labels": list(grp.label),
        "L": grp.L,
    }


def grouping_from_json(obj: dict) -> Grouping:
    base = _graph_from_json(obj["base"])
    p = Partition(base.n, obj["buckets"])
    return Grouping(base, p, quotient(base, p), tuple(obj["labels"]), int(obj["L"]))


def instance_to_json(inst: ListHomInstance) -> dict:
    return {
        "g_prime": _graph_json(inst.g_prime),
        "h_vertices": [
            {"label": lab, "code": {str(k): v for k, v in code.items}} for code, lab in inst.h_vertices
        ],
        "h_edges": [list(e) for e in sorted(inst.h_edges)],
        "lists": {str(b): lst for b, lst in enumerate(inst.lists)},
        "grouping": grouping_to_json(inst.grouping),
        "ports": [{str(k): v for k, v in sorted(pm.ports.items())} for pm in inst.ports],
        "meta": inst.meta,
    }


def instance_from_json(obj: dict[str, Any]) -> ListHomInstance:
    try:
        g_prime = _graph_from_json(obj["g_prime"])
        h_vertices = [
            (Code.of({int(k): int(v) for k, v in hv["code"].items()}), int(hv["label"])) for hv in obj["h_vertices"]
        ]
        h_edges = {(int(a), int(b)) for a, b in obj["h_edges"]}
        lists = [list(map(int, obj["lists"][str(b)])) for b in range(g_prime.n)]
        grp = grouping_from_json(obj["grouping"])
        ports = [PortMap(b, {int(k): int(v) for k, v in pm.items()}) for b, pm in enumerate(obj["ports"])]
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"malformed instance: {e}") from e
    if grp.quotient != g_prime:
        raise FormatError("g_prime does not match the grouping's quotient")
    return ListHomInstance(g_prime, h_vertices, h_edges, lists, grp, ports, dict(obj.get("meta", {})))


def dump_json(obj: Any, fp: TextIO) -> None:
    json.dump(obj, fp, indent=1, sort_keys=True)
    fp.write("\n")


def write_instance(inst: ListHomInstance, path: PathLike) -> None:
    with open(path, "w") as fp:
        dump_json(instance_to_json(inst), fp)


def read_instance(path: PathLike) -> ListHomInstance:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: {e}") from e
    return instance_from_json(obj)
