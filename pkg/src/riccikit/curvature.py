"""Curvature engines: lazy-walk curvature, the limit-free LP engine, and phi.

kappa_lly solves the Lipschitz program

    minimize (Lf(x) - Lf(y)) / d(x, y)
    subject to f(y) - f(x) = d(x, y) and |f(u) - f(v)| <= d(u, v)

over U = {x, y} union Gamma(x) union Gamma(y), where Lf(w) is the degree-
averaged Laplacian. Any 1-Lipschitz f on U extends to the whole graph
without changing the objective, so restricting to U is exact; the
independent lazy-walk slope engine and the enumeration oracle in the test
suite cross-check this.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Mapping, Optional, Sequence

from .graphs import (
    Face,
    Graph,
    RotationSystem,
    bfs_distances,
    diameter,
    trace_faces,
    validate_embedding,
)
from .lp import simplex_min
from .transport import lazy_measure, wasserstein


class EmbeddingError(ValueError):
    """Combinatorial curvature requested without a validated sphere embedding."""


def _frac(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class LipschitzProgram:
    """Exact LP data for one vertex pair: domain, metric, and objective."""

    x: int
    y: int
    d_xy: int
    domain: tuple[int, ...]
    dist: Mapping[tuple[int, int], int]
    objective: Mapping[int, Fraction]

    def solve(self) -> tuple[Fraction, dict[int, Fraction]]:
        """Optimal value and one optimal f (with f(x) = 0)."""
        x, y, d_xy, dist = self.x, self.y, self.d_xy, self.dist
        fixed = {x: Fraction(0), y: Fraction(d_xy)}
        free = [u for u in self.domain if u not in fixed]

        lo = {}
        hi = {}
        for u in free:
            lo[u] = Fraction(max(-dist[u, x], d_xy - dist[u, y]))
            hi[u] = Fraction(min(dist[u, x], d_xy + dist[u, y]))

        # A pair constraint is implied whenever some third domain vertex lies
        # on a geodesic between the two endpoints; only irreducible pairs
        # become rows (pairs involving x or y are the box bounds above).
        pairs = []
        for i, u in enumerate(free):
            for v in free[i + 1:]:
                duv = dist[u, v]
                if any(
                    w not in (u, v) and dist[u, w] + dist[w, v] == duv
                    for w in self.domain
                ):
                    continue
                pairs.append((u, v))

        col = {u: i for i, u in enumerate(free)}
        costs = [self.objective.get(u, Fraction(0)) / d_xy for u in free]
        # objective constant: fixed endpoints plus the lo-shift of every free var
        constant = sum(
            (self.objective.get(u, Fraction(0)) * fu for u, fu in fixed.items()),
            start=Fraction(0),
        )
        constant += sum(
            (self.objective.get(u, Fraction(0)) * lo[u] for u in free), start=Fraction(0)
        )
        constant /= d_xy

        rows = []
        bounds = []
        for u in free:
            rows.append({col[u]: 1})
            bounds.append(hi[u] - lo[u])
        for u, v in pairs:
            duv = dist[u, v]
            rows.append({col[u]: 1, col[v]: -1})
            bounds.append(duv - lo[u] + lo[v])
            rows.append({col[u]: -1, col[v]: 1})
            bounds.append(duv - lo[v] + lo[u])

        if free:
            value, assignment = simplex_min(costs, rows, bounds)
        else:
            value, assignment = Fraction(0), []
        f = dict(fixed)
        for u in free:
            f[u] = lo[u] + assignment[col[u]]
        return constant + value, f


def build_lipschitz_program(g: Graph, x: int, y: int) -> LipschitzProgram:
    if x == y:
        raise ValueError("curvature requires two distinct vertices")
    domain = sorted({x, y} | set(g.neighbors(x)) | set(g.neighbors(y)))
    maps = {u: bfs_distances(g, u) for u in domain}
    dist = {(u, v): maps[u][v] for u in domain for v in domain}
    objective: dict[int, Fraction] = {}
    deg_x, deg_y = g.degree(x), g.degree(y)
    for z in g.neighbors(x):
        objective[z] = objective.get(z, Fraction(0)) + Fraction(1, deg_x)
    objective[x] = objective.get(x, Fraction(0)) - 1
    for z in g.neighbors(y):
        objective[z] = objective.get(z, Fraction(0)) - Fraction(1, deg_y)
    objective[y] = objective.get(y, Fraction(0)) + 1
    return LipschitzProgram(
        x=x, y=y, d_xy=dist[x, y], domain=tuple(domain), dist=dist, objective=objective
    )


def kappa_lly(g: Graph, x: int, y: int) -> Fraction:
    """Exact limit-free curvature of an arbitrary vertex pair via the LP."""
    value, _ = build_lipschitz_program(g, x, y).solve()
    return value


def kappa_alpha(g: Graph, x: int, y: int, alpha) -> Fraction:
    """Lazy-walk curvature 1 - W(m_x^a, m_y^a) / d(x, y)."""
    if x == y:
        raise ValueError("curvature requires two distinct vertices")
    alpha = _frac(alpha)
    d = bfs_distances(g, x)[y]
    w, _ = wasserstein(g, lazy_measure(g, x, alpha), lazy_measure(g, y, alpha))
    return 1 - w / d


def _require_edge(g: Graph, x: int, y: int) -> None:
    if x == y or not g.has_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge")


def kappa_lly_slope(g: Graph, x: int, y: int) -> Fraction:
    """Transport-based cross-check: kappa_alpha / (1 - alpha) deep in the lazy regime.

    Evaluated at alpha = L / (L + 1) with L = lcm(deg x, deg y), which lies in
    the final linear piece of alpha -> kappa_alpha, where the slope equals the
    limit-free value. Tests assert exact agreement with kappa_lly.
    """
    _require_edge(g, x, y)
    big = lcm(g.degree(x), g.degree(y))
    alpha = Fraction(big, big + 1)
    return kappa_alpha(g, x, y, alpha) / (1 - alpha)


def kappa_zero(g: Graph, x: int, y: int) -> Fraction:
    """Certified lower bound 1 - W(m_x^0, m_y^0) for an edge."""
    _require_edge(g, x, y)
    w, _ = wasserstein(g, lazy_measure(g, x, 0), lazy_measure(g, y, 0))
    return 1 - w


def combinatorial_curvature(g: Graph, faces: Sequence[Face], v: int) -> Fraction:
    """phi(v) = 1 - deg(v)/2 + sum of 1/|face| per incidence of v.

    Requires a sphere embedding; a face touching v several times contributes
    once per incidence, which keeps the total over all vertices equal to 2.
    """
    check = validate_embedding(g, faces)
    if not check.is_sphere:
        raise EmbeddingError(
            f"embedding has Euler characteristic {check.euler_characteristic}, not a sphere"
        )
    if v not in g:
        raise EmbeddingError(f"unknown vertex {v}")
    total = Fraction(1) - Fraction(g.degree(v), 2)
    for face in faces:
        count = face.incidences(v)
        if count:
            total += Fraction(count, face.size)
    return total


def moore_bound(max_degree: int, diam: int) -> int:
    """Ball-volume bound 1 + D * sum_{i<diam} (D-1)^i on the vertex count."""
    if max_degree < 2:
        raise ValueError("bound needs maximum degree >= 2")
    if diam < 1:
        raise ValueError("bound needs diameter >= 1")
    q = max_degree - 1
    return 1 + max_degree * sum(q**i for i in range(diam))


@dataclass(frozen=True)
class EdgeCurvature:
    u: int
    v: int
    kappa: Fraction
    kappa_zero: Optional[Fraction] = None


@dataclass(frozen=True)
class VertexCurvature:
    v: int
    phi: Fraction


@dataclass(frozen=True)
class CurvatureReport:
    """Per-edge and per-vertex curvatures with graph-level aggregates."""

    mode: str
    alpha: Optional[Fraction]
    edges: tuple[EdgeCurvature, ...]
    vertices: Optional[tuple[VertexCurvature, ...]]
    vertex_count: int
    edge_count: int
    max_degree: int
    min_degree: int
    diameter: int
    sphere: Optional[bool]
    euler_characteristic: Optional[int]

    @property
    def min_kappa(self) -> Optional[Fraction]:
        return min((e.kappa for e in self.edges), default=None)

    @property
    def min_phi(self) -> Optional[Fraction]:
        if not self.vertices:
            return None
        return min(r.phi for r in self.vertices)

    @property
    def positively_curved(self) -> bool:
        if self.mode == "comb":
            return bool(self.vertices) and all(r.phi > 0 for r in self.vertices)
        return bool(self.edges) and all(e.kappa > 0 for e in self.edges)


_EDGE_MODES = ("lly", "alpha", "zero")
_MODES = _EDGE_MODES + ("comb",)


def _edge_value(g: Graph, edge: tuple[int, int], mode: str, alpha) -> EdgeCurvature:
    u, v = edge
    if mode == "lly":
        return EdgeCurvature(u, v, kappa_lly(g, u, v))
    if mode == "alpha":
        return EdgeCurvature(u, v, kappa_alpha(g, u, v, alpha))
    kz = kappa_zero(g, u, v)
    return EdgeCurvature(u, v, kz, kz)


def _edge_task(args) -> EdgeCurvature:
    g, edge, mode, alpha, include_zero = args
    rec = _edge_value(g, edge, mode, alpha)
    if include_zero and rec.kappa_zero is None:
        rec = EdgeCurvature(rec.u, rec.v, rec.kappa, kappa_zero(g, rec.u, rec.v))
    return rec


def curvature_report(
    g: Graph,
    rot: Optional[RotationSystem] = None,
    mode: str = "lly",
    alpha=None,
    include_zero: bool = False,
    jobs: int = 1,
) -> CurvatureReport:
    """Batch curvature over all edges (and vertices when an embedding is given).

    Edge work may fan out to `jobs` worker processes; results are merged in
    sorted edge order so the report is identical at any parallelism width.
    """
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "alpha":
        if alpha is None:
            raise ValueError("mode 'alpha' needs an alpha value")
        alpha = _frac(alpha)
    elif alpha is not None:
        raise ValueError("alpha is only meaningful in mode 'alpha'")

    sphere = None
    chi = None
    vertices = None
    faces = None
    if rot is not None:
        faces = trace_faces(g, rot)
        check = validate_embedding(g, faces)
        sphere = check.is_sphere
        chi = check.euler_characteristic
    if mode == "comb" and rot is None:
        raise EmbeddingError("mode 'comb' needs a rotation system")
    if sphere:
        vertices = tuple(
            VertexCurvature(v, combinatorial_curvature(g, faces, v)) for v in g.vertices
        )
    elif mode == "comb":
        raise EmbeddingError(
            f"embedding has Euler characteristic {chi}, not a sphere"
        )

    edge_records: tuple[EdgeCurvature, ...] = ()
    if mode in _EDGE_MODES:
        tasks = [(g, e, mode, alpha, include_zero) for e in g.edges()]
        if jobs > 1 and len(tasks) > 1:
            chunk = max(1, len(tasks) // (jobs * 4))
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                records = list(pool.map(_edge_task, tasks, chunksize=chunk))
        else:
            records = [_edge_task(t) for t in tasks]
        edge_records = tuple(sorted(records, key=lambda r: (r.u, r.v)))

    return CurvatureReport(
        mode=mode,
        alpha=alpha,
        edges=edge_records,
        vertices=vertices,
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        max_degree=g.max_degree,
        min_degree=g.min_degree,
        diameter=diameter(g),
        sphere=sphere,
        euler_characteristic=chi,
    )


def _rat(value: Fraction) -> str:
    return str(value)


def report_to_json_dict(report: CurvatureReport) -> dict:
    """Stable-schema JSON payload for a report."""
    out: dict = {
        "graph": {
            "vertex_count": report.vertex_count,
            "edge_count": report.edge_count,
            "max_degree": report.max_degree,
            "min_degree": report.min_degree,
            "diameter": report.diameter,
        },
        "mode": report.mode,
    }
    if report.alpha is not None:
        out["alpha"] = _rat(report.alpha)
    if report.mode != "comb":
        edges = []
        for rec in report.edges:
            item = {"u": rec.u, "v": rec.v, "kappa": _rat(rec.kappa)}
            if rec.kappa_zero is not None:
                item["kappa_zero"] = _rat(rec.kappa_zero)
            edges.append(item)
        out["edges"] = edges
    if report.vertices is not None:
        out["vertices"] = [{"v": r.v, "phi": _rat(r.phi)} for r in report.vertices]
    if report.euler_characteristic is not None:
        out["embedding"] = {
            "euler_characteristic": report.euler_characteristic,
            "sphere": report.sphere,
        }
    summary: dict = {
        "min_kappa": _rat(report.min_kappa) if report.min_kappa is not None else None,
        "positively_curved": report.positively_curved,
    }
    if report.min_phi is not None:
        summary["min_phi"] = _rat(report.min_phi)
    out["summary"] = summary
    return out


def report_to_csv(report: CurvatureReport) -> str:
    """One row per edge (or per vertex in comb mode)."""
    lines = []
    if report.mode == "comb":
        lines.append("v,phi")
        for rec in report.vertices or ():
            lines.append(f"{rec.v},{_rat(rec.phi)}")
    else:
        with_zero = any(rec.kappa_zero is not None for rec in report.edges)
        lines.append("u,v,kappa,kappa_zero" if with_zero else "u,v,kappa")
        for rec in report.edges:
            row = f"{rec.u},{rec.v},{_rat(rec.kappa)}"
            if with_zero:
                row += f",{_rat(rec.kappa_zero) if rec.kappa_zero is not None else ''}"
            lines.append(row)
    return "\n".join(lines) + "\n"
