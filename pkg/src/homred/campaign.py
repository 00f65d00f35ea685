"""Seeded campaigns checking that compiled instances answer like 3-Coloring."""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from typing import Optional

from .coloring import ColorExhausted, ColoringParams, ParameterError
from .graph import Graph, max_degree, square
from .grouping import Grouping, GroupingError, build_grouping, random_grouping, singleton_grouping
from .io import random_graph
from .oracles import brute_force_3coloring, brute_force_list_hom
from .reduction import compile_instance, edge_rule, lift_coloring, project_hom
from .solvers import check_3coloring, check_list_hom, solve_3coloring, solve_list_hom

DEFAULT_ORACLE_CEILING = 10


def _always_adjacent(r1, l1, r2, l2) -> bool:
    return True


def relaxed_groupings(g: Graph, d: int, beta=4) -> list[tuple[str, Grouping]]:
    """Color-based groupings in relaxed mode for a few (L, r) choices; failures are skipped."""
    out = []
    lo = max_degree(square(g)) + 1
    for L in sorted({max(lo, (g.n + 1) // 2), max(lo, g.n)}):
        for r in (1, 2):
            try:
                grp = build_grouping(g, r, ColoringParams.relaxed(d, L, beta=beta))
            except (ColorExhausted, GroupingError, ParameterError):
                continue
            out.append((f"relaxed(L={L},r={r})", grp))
    return out


@dataclass
class TrialResult:
    trial: int
    n: int
    edges: list
    grouping: str
    colorable: bool
    satisfiable: bool
    agree: bool
    sizes_ok: bool
    roundtrip_ok: Optional[bool]


@dataclass
class CampaignReport:
    trials: int
    seed: int
    n_max: int
    d: int
    checks: int = 0
    passed: int = 0
    failed: int = 0
    by_grouping: dict = field(default_factory=dict)
    first_counterexample: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def as_dict(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        return out


def run_trial(t: int, g: Graph, name: str, grp: Grouping, corrupt: bool = False) -> TrialResult:
    inst = compile_instance(g, grp, rule=_always_adjacent if corrupt else edge_rule)
    col = brute_force_3coloring(g)
    hom = brute_force_list_hom(inst.g_prime, inst.h, inst.lists)
    # backtracking solvers must agree with enumeration on both sides
    fast_col = solve_3coloring(g)
    fast_hom = solve_list_hom(inst.g_prime, inst.h, inst.lists)
    consistent = (fast_col is None) == (col is None) and (fast_hom is None) == (hom is None)
    if fast_col is not None:
        consistent &= check_3coloring(g, fast_col).ok
    if fast_hom is not None:
        consistent &= check_list_hom(inst.g_prime, inst.h, inst.lists, fast_hom).ok
    rep = inst.size_report()
    roundtrip = None
    if col is not None and not corrupt:
        lifted = lift_coloring(col, inst)
        back = project_hom(lifted, inst)
        ports = {u for pm in inst.ports for u in pm.ports.values()}
        roundtrip = (
            check_list_hom(inst.g_prime, inst.h, inst.lists, lifted).ok
            and all(back[u] == col[u] for u in ports)
            and check_3coloring(g, back).ok
        )
    if hom is not None and not corrupt:
        roundtrip = (roundtrip is not False) and check_3coloring(g, project_hom(hom, inst)).ok
    return TrialResult(
        t, g.n, [list(e) for e in g.sorted_edges()], name,
        col is not None, hom is not None,
        agree=(col is not None) == (hom is not None) and consistent,
        sizes_ok=rep["g_prime_within_n_over_r"] and rep["h_within_bound"],
        roundtrip_ok=roundtrip,
    )


def run_campaign(
    n_max: int,
    d: int,
    trials: int,
    seed: int,
    *,
    corrupt: bool = False,
    relaxed: bool = True,
    random_groups: bool = True,
) -> CampaignReport:
    rng = random.Random(seed)
    report = CampaignReport(trials, seed, n_max, d)
    for t in range(trials):
        n = rng.randint(1, n_max)
        g = random_graph(n, d, rng)
        groupings = [("singleton", singleton_grouping(g))]
        if random_groups:
            groupings.append(("random", random_grouping(g, rng)))
        if relaxed:
            groupings.extend(relaxed_groupings(g, d))
        for name, grp in groupings:
            res = run_trial(t, g, name, grp, corrupt)
            good = res.agree and res.sizes_ok and res.roundtrip_ok is not False
            kind = name.split("(")[0]
            stats = report.by_grouping.setdefault(kind, {"passed": 0, "failed": 0})
            report.checks += 1
            if good:
                report.passed += 1
                stats["passed"] += 1
            else:
                report.failed += 1
                stats["failed"] += 1
                if report.first_counterexample is None:
                    report.first_counterexample = asdict(res)
    return report
