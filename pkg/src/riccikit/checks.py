"""Verification suite: runs the quantitative invariants on a concrete graph.

Each check returns pass/fail/skip with a diagnostic. Checks verify
implications, so they pass vacuously when their hypotheses fail (a cycle is
not positively curved, hence the positivity floor has nothing to say).
Sampling is driven entirely by the caller's seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .curvature import (
    CurvatureReport,
    combinatorial_curvature,
    curvature_report,
    kappa_alpha,
    kappa_lly,
    kappa_lly_slope,
)
from .graphs import Graph, RotationSystem, trace_faces, validate_embedding
from .structure import degree_audit, instance_to_json_dict, lemma4_sweep
from .transport import lazy_measure, optimal_transport, verify_duality

ALL_CHECKS = (
    "positivity",
    "duality",
    "integrality",
    "concavity",
    "slope-monotonicity",
    "diameter",
    "lemma3",
    "lemma4",
    "gauss-bonnet",
    "degree-audit",
)

_EDGE_SAMPLE = 12
_PAIR_LIMIT = 10  # vertices; all-pairs curvature beyond this is out of desk range
_ALPHAS = (Fraction(0), Fraction(1, 3), Fraction(1, 2))
_GRID = tuple(Fraction(i, 10) for i in range(11))


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skip"
    details: str

    @property
    def failed(self) -> bool:
        return self.status == "fail"


def _sample_edges(g: Graph, rng: random.Random) -> list[tuple[int, int]]:
    edges = list(g.edges())
    if len(edges) <= _EDGE_SAMPLE:
        return edges
    return sorted(rng.sample(edges, _EDGE_SAMPLE))


def _check_positivity(g: Graph, report: CurvatureReport, **_) -> CheckResult:
    if not report.positively_curved:
        return CheckResult(
            "positivity", "pass", "not positively curved; curvature floor is vacuous"
        )
    delta = report.max_degree
    floor = Fraction(1, delta * (delta - 1)) if delta >= 2 else Fraction(1)
    for rec in report.edges:
        per_edge = Fraction(1, g.degree(rec.u) * g.degree(rec.v))
        if rec.kappa < per_edge:
            return CheckResult(
                "positivity",
                "fail",
                f"edge ({rec.u}, {rec.v}) has kappa {rec.kappa} < 1/(deg deg) = {per_edge}",
            )
    if report.min_kappa < floor:
        return CheckResult(
            "positivity", "fail", f"min kappa {report.min_kappa} below floor {floor}"
        )
    return CheckResult(
        "positivity", "pass", f"min kappa {report.min_kappa} >= floor {floor}"
    )


def _check_duality(g: Graph, rng: random.Random, **_) -> CheckResult:
    count = 0
    for x, y in _sample_edges(g, rng):
        for alpha in _ALPHAS:
            result = optimal_transport(g, lazy_measure(g, x, alpha), lazy_measure(g, y, alpha))
            check = verify_duality(result.plan, result.potential, g)
            if not check:
                return CheckResult(
                    "duality",
                    "fail",
                    f"edge ({x}, {y}), alpha {alpha}: {'; '.join(check.violations)}",
                )
            count += 1
    return CheckResult("duality", "pass", f"{count} primal/dual pairs agree exactly")


def _check_integrality(g: Graph, rng: random.Random, **_) -> CheckResult:
    count = 0
    for x, y in _sample_edges(g, rng):
        for alpha in _ALPHAS:
            result = optimal_transport(g, lazy_measure(g, x, alpha), lazy_measure(g, y, alpha))
            bad = [v for v, f in result.potential.items() if not isinstance(f, int)]
            if bad:
                return CheckResult(
                    "integrality",
                    "fail",
                    f"edge ({x}, {y}), alpha {alpha}: non-integer potential at {bad[0]}",
                )
            count += 1
    return CheckResult("integrality", "pass", f"{count} potentials integer-valued")


def _check_concavity(g: Graph, rng: random.Random, **_) -> CheckResult:
    for x, y in _sample_edges(g, rng):
        d = 1
        values = [kappa_alpha(g, x, y, a) for a in _GRID]
        for i in range(len(_GRID) - 2):
            if values[i] - 2 * values[i + 1] + values[i + 2] > 0:
                return CheckResult(
                    "concavity",
                    "fail",
                    f"edge ({x}, {y}): second difference positive at alpha {_GRID[i + 1]}",
                )
        for a, val in zip(_GRID, values):
            if val > 2 * (1 - a) / d:
                return CheckResult(
                    "concavity",
                    "fail",
                    f"edge ({x}, {y}): kappa_alpha({a}) = {val} exceeds 2(1-alpha)/d",
                )
    return CheckResult("concavity", "pass", "midpoint concavity and upper bound hold")


def _check_slope_monotonicity(g: Graph, report: CurvatureReport, rng: random.Random, **_) -> CheckResult:
    kappa_by_edge = {(rec.u, rec.v): rec.kappa for rec in report.edges}
    for x, y in _sample_edges(g, rng):
        limit = kappa_by_edge[(x, y)]
        slopes = [kappa_alpha(g, x, y, a) / (1 - a) for a in _GRID if a != 1]
        for s1, s2 in zip(slopes, slopes[1:]):
            if s1 > s2:
                return CheckResult(
                    "slope-monotonicity", "fail",
                    f"edge ({x}, {y}): slope decreases along the alpha grid",
                )
        if any(s > limit for s in slopes):
            return CheckResult(
                "slope-monotonicity", "fail",
                f"edge ({x}, {y}): slope exceeds the limit value {limit}",
            )
        if kappa_lly_slope(g, x, y) != limit:
            return CheckResult(
                "slope-monotonicity", "fail",
                f"edge ({x}, {y}): transport slope engine disagrees with the LP value",
            )
    return CheckResult(
        "slope-monotonicity", "pass", "slopes nondecreasing and bounded by the limit"
    )


def _check_diameter(g: Graph, report: CurvatureReport, **_) -> CheckResult:
    kmin = report.min_kappa
    if kmin is None or kmin <= 0:
        return CheckResult(
            "diameter", "pass", "no positive curvature floor; bound is vacuous"
        )
    if kmin * report.diameter <= 2:
        return CheckResult(
            "diameter", "pass",
            f"diameter {report.diameter} <= 2 / {kmin}",
        )
    return CheckResult(
        "diameter", "fail",
        f"diameter {report.diameter} exceeds 2 / {kmin}",
    )


def _check_lemma3(g: Graph, report: CurvatureReport, **_) -> CheckResult:
    if g.vertex_count > _PAIR_LIMIT:
        return CheckResult(
            "lemma3", "skip", f"graph has {g.vertex_count} > {_PAIR_LIMIT} vertices"
        )
    edge_min = report.min_kappa
    pair_min = min(kappa_lly(g, u, v) for u, v in combinations(g.vertices, 2))
    if pair_min >= edge_min:
        return CheckResult(
            "lemma3", "pass",
            f"min over pairs {pair_min} >= min over edges {edge_min}",
        )
    return CheckResult(
        "lemma3", "fail",
        f"min over pairs {pair_min} < min over edges {edge_min}",
    )


def _check_lemma4(g: Graph, seed: int, **_) -> CheckResult:
    failing = lemma4_sweep(g, seed=seed)
    if not failing:
        return CheckResult("lemma4", "pass", "no failing instance found")
    shown = instance_to_json_dict(failing[0])
    return CheckResult(
        "lemma4", "fail",
        f"{len(failing)} failing instance(s), e.g. {shown}",
    )


def _check_gauss_bonnet(g: Graph, rot: Optional[RotationSystem], **_) -> CheckResult:
    if rot is None:
        return CheckResult("gauss-bonnet", "skip", "no rotation system given")
    faces = trace_faces(g, rot)
    check = validate_embedding(g, faces)
    if not check.is_sphere:
        return CheckResult(
            "gauss-bonnet", "skip",
            f"embedding has Euler characteristic {check.euler_characteristic}, not a sphere",
        )
    total = sum(
        (combinatorial_curvature(g, faces, v) for v in g.vertices), start=Fraction(0)
    )
    if total == 2:
        return CheckResult("gauss-bonnet", "pass", "sum of phi equals 2 exactly")
    return CheckResult("gauss-bonnet", "fail", f"sum of phi is {total}, expected 2")


def _check_degree_audit(g: Graph, report: CurvatureReport, **_) -> CheckResult:
    audit = degree_audit(g, report)
    if audit.passed:
        return CheckResult("degree-audit", "pass", audit.note)
    return CheckResult("degree-audit", "fail", audit.note)


_CHECK_FUNCS = {
    "positivity": _check_positivity,
    "duality": _check_duality,
    "integrality": _check_integrality,
    "concavity": _check_concavity,
    "slope-monotonicity": _check_slope_monotonicity,
    "diameter": _check_diameter,
    "lemma3": _check_lemma3,
    "lemma4": _check_lemma4,
    "gauss-bonnet": _check_gauss_bonnet,
    "degree-audit": _check_degree_audit,
}


def run_checks(
    g: Graph,
    rot: Optional[RotationSystem] = None,
    checks: Optional[Sequence[str]] = None,
    seed: int = 0,
) -> list[CheckResult]:
    """Run the selected checks (all by default) in canonical order."""
    selected = list(checks) if checks is not None else list(ALL_CHECKS)
    unknown = [c for c in selected if c not in _CHECK_FUNCS]
    if unknown:
        raise ValueError(f"unknown check {unknown[0]!r}")
    report = curvature_report(g, rot=rot, mode="lly")
    results = []
    for name in ALL_CHECKS:
        if name not in selected:
            continue
        rng = random.Random(f"{seed}:{name}")  # str seeding is process stable
        results.append(
            _CHECK_FUNCS[name](
                g=g, rot=rot, report=report, rng=rng, seed=seed
            )
        )
    return results
