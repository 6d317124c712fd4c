"""Probability measures on graph vertices and exact Wasserstein transport.

All masses, costs and distances are exact rationals. The transportation
problem is scaled to integers by the common denominator of the two measures
and solved by successive shortest paths; the node potentials of the optimal
flow yield an integer Kantorovich potential.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Mapping

from .graphs import Graph, bfs_distances


class TransportError(ValueError):
    """Invalid measure or transport input."""


class InternalConsistencyError(RuntimeError):
    """An exactness self-check failed; indicates a solver bug."""


def _frac(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


class Measure:
    """Sparse probability distribution with exact rational masses."""

    __slots__ = ("_mass",)

    def __init__(self, masses: Mapping[int, Fraction]):
        clean: dict[int, Fraction] = {}
        total = Fraction(0)
        for v, m in masses.items():
            m = _frac(m)
            if m < 0:
                raise TransportError(f"negative mass {m} at vertex {v}")
            if m > 0:
                clean[int(v)] = m
                total += m
        if total != 1:
            raise TransportError(f"masses sum to {total}, expected 1")
        self._mass = dict(sorted(clean.items()))

    def support(self) -> tuple[int, ...]:
        return tuple(self._mass)

    def items(self):
        return self._mass.items()

    def __getitem__(self, v: int) -> Fraction:
        return self._mass.get(v, Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, Measure) and self._mass == other._mass

    def __repr__(self) -> str:
        inner = ", ".join(f"{v}: {m}" for v, m in self._mass.items())
        return f"Measure({{{inner}}})"


def lazy_measure(g: Graph, x: int, alpha) -> Measure:
    """Alpha-lazy random walk step measure: alpha at x, (1-alpha)/deg on neighbors."""
    alpha = _frac(alpha)
    if not 0 <= alpha <= 1:
        raise TransportError(f"alpha must lie in [0, 1], got {alpha}")
    if x not in g:
        raise TransportError(f"unknown vertex {x}")
    if alpha == 1:
        return Measure({x: Fraction(1)})
    deg = g.degree(x)
    if deg == 0:
        raise TransportError(f"vertex {x} has no neighbors; lazy walk undefined for alpha < 1")
    share = (1 - alpha) / deg
    masses = {v: share for v in g.neighbors(x)}
    if alpha > 0:
        masses[x] = alpha
    return Measure(masses)


@dataclass(frozen=True)
class TransportPlan:
    """Coupling between two measures; entries are strictly positive masses."""

    entries: Mapping[tuple[int, int], Fraction]
    source: Measure
    target: Measure

    def cost(self, g: Graph) -> Fraction:
        total = Fraction(0)
        dist_cache: dict[int, object] = {}
        for (u, v), mass in self.entries.items():
            if u not in dist_cache:
                dist_cache[u] = bfs_distances(g, u)
            total += mass * dist_cache[u][v]
        return total

    def row_sums(self) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for (u, _), mass in self.entries.items():
            out[u] = out.get(u, Fraction(0)) + mass
        return out

    def column_sums(self) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for (_, v), mass in self.entries.items():
            out[v] = out.get(v, Fraction(0)) + mass
        return out


@dataclass(frozen=True)
class DualPotential:
    """Integer 1-Lipschitz Kantorovich potential over the supports' union."""

    values: Mapping[int, int]
    anchor: int

    def __getitem__(self, v: int) -> int:
        try:
            return self.values[v]
        except KeyError:
            raise TransportError(f"potential not defined at vertex {v}") from None

    def items(self):
        return self.values.items()

    def pairing(self, m1: Measure, m2: Measure) -> Fraction:
        """Dual value sum f (m1 - m2)."""
        total = Fraction(0)
        for v, f in self.values.items():
            total += f * (m1[v] - m2[v])
        return total


@dataclass(frozen=True)
class TransportResult:
    distance: Fraction
    plan: TransportPlan
    potential: DualPotential


class _MinCostFlow:
    """Successive shortest paths with Dijkstra over reduced costs (all integer)."""

    def __init__(self, n: int):
        self.n = n
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []

    def add_edge(self, u: int, v: int, cap: int, cost: int) -> int:
        arc = len(self.to)
        self.adj[u].append(arc)
        self.to.append(v)
        self.cap.append(cap)
        self.cost.append(cost)
        self.adj[v].append(arc + 1)
        self.to.append(u)
        self.cap.append(0)
        self.cost.append(-cost)
        return arc

    def solve(self, s: int, t: int, amount: int) -> int:
        """Push `amount` units s -> t at minimum total cost."""
        n, adj, to, cap, cost = self.n, self.adj, self.to, self.cap, self.cost
        potential = [0] * n
        total = 0
        sent = 0
        INF = float("inf")
        while sent < amount:
            dist: list = [INF] * n
            prev_arc = [-1] * n
            dist[s] = 0
            heap = [(0, s)]
            while heap:
                d, u = heapq.heappop(heap)
                if d > dist[u]:
                    continue
                for arc in adj[u]:
                    if cap[arc] <= 0:
                        continue
                    v = to[arc]
                    nd = d + cost[arc] + potential[u] - potential[v]
                    if nd < dist[v]:
                        dist[v] = nd
                        prev_arc[v] = arc
                        heapq.heappush(heap, (nd, v))
            if dist[t] is INF:
                raise InternalConsistencyError("transport network is infeasible")
            dt = dist[t]
            for v in range(n):
                potential[v] += dist[v] if dist[v] < dt else dt
            delta = amount - sent
            v = t
            while v != s:
                arc = prev_arc[v]
                delta = min(delta, cap[arc])
                v = to[arc ^ 1]
            v = t
            while v != s:
                arc = prev_arc[v]
                cap[arc] -= delta
                cap[arc ^ 1] += delta
                v = to[arc ^ 1]
            sent += delta
            total += delta * potential[t]
        return total

    def feasible_potentials(self) -> list[int]:
        """Bellman-Ford potentials of the final residual graph.

        Starting every node at 0 is valid because the residual of an optimal
        flow has no negative cycle; the result satisfies p[v] <= p[u] + cost
        on every residual arc.
        """
        p = [0] * self.n
        arcs = [
            (self.to[a ^ 1], self.to[a], self.cost[a])
            for a in range(len(self.to))
            if self.cap[a] > 0
        ]
        for _ in range(self.n):
            changed = False
            for u, v, c in arcs:
                if p[u] + c < p[v]:
                    p[v] = p[u] + c
                    changed = True
            if not changed:
                return p
        raise InternalConsistencyError("negative cycle in optimal residual graph")


def _check_supported(g: Graph, m: Measure, name: str) -> None:
    for v in m.support():
        if v not in g:
            raise TransportError(f"{name} puts mass on vertex {v} not in the graph")


def optimal_transport(
    g: Graph, m1: Measure, m2: Measure, scale_multiplier: int = 1
) -> TransportResult:
    """Exact Wasserstein distance, an optimal coupling, and an integer potential.

    Masses are scaled by the lcm of their denominators (times the optional
    extra multiplier, which must not change the result) to an integer
    transportation problem over the two supports with BFS distances as costs.
    """
    if scale_multiplier < 1:
        raise TransportError("scale_multiplier must be a positive integer")
    _check_supported(g, m1, "m1")
    _check_supported(g, m2, "m2")
    sources = m1.support()
    sinks = m2.support()
    scale = lcm(*(m.denominator for _, m in m1.items()),
                *(m.denominator for _, m in m2.items())) * scale_multiplier
    supplies = [int(m1[u] * scale) for u in sources]
    demands = [int(m2[v] * scale) for v in sinks]

    sink_dist = {v: bfs_distances(g, v) for v in sinks}

    ns, nt = len(sources), len(sinks)
    net = _MinCostFlow(2 + ns + nt)
    s_node, t_node = 0, 1
    for i, u in enumerate(sources):
        net.add_edge(s_node, 2 + i, supplies[i], 0)
    sink_arcs = []
    for j, v in enumerate(sinks):
        sink_arcs.append(net.add_edge(2 + ns + j, t_node, demands[j], 0))
    # Interior capacities exceed the total supply so no source-sink arc ever
    # saturates; reduced-cost feasibility then holds on every such arc, which
    # the dual extraction below relies on.
    pair_arcs = {}
    for i, u in enumerate(sources):
        for j, v in enumerate(sinks):
            pair_arcs[i, j] = net.add_edge(2 + i, 2 + ns + j, scale + 1, sink_dist[v][u])

    total_cost = net.solve(s_node, t_node, scale)
    distance = Fraction(total_cost, scale)

    entries = {}
    for (i, j), arc in pair_arcs.items():
        flow = (scale + 1) - net.cap[arc]
        if flow > 0:
            entries[(sources[i], sinks[j])] = Fraction(flow, scale)
    plan = TransportPlan(entries, m1, m2)

    p = net.feasible_potentials()
    beta = {v: p[2 + ns + j] for j, v in enumerate(sinks)}
    domain = sorted(set(sources) | set(sinks))
    values = {}
    for w in domain:
        values[w] = min(sink_dist[v][w] - beta[v] for v in sinks)
    anchor = min(sources)
    base = values[anchor]
    values = {w: f - base for w, f in values.items()}
    potential = DualPotential(values, anchor)

    _self_check(g, m1, m2, distance, plan, potential)
    return TransportResult(distance, plan, potential)


def _self_check(g, m1, m2, distance, plan, potential) -> None:
    if plan.row_sums() != dict(m1.items()) or plan.column_sums() != dict(m2.items()):
        raise InternalConsistencyError("optimal plan marginals do not match the measures")
    if plan.cost(g) != distance:
        raise InternalConsistencyError("plan cost disagrees with reported distance")
    for v, f in potential.items():
        if not isinstance(f, int):
            raise InternalConsistencyError(f"potential value {f} at {v} is not an integer")
    domain = sorted(potential.values)
    for u in domain:
        du = bfs_distances(g, u)
        for v in domain:
            if abs(potential[u] - potential[v]) > du[v]:
                raise InternalConsistencyError(
                    f"potential violates 1-Lipschitz on pair ({u}, {v})"
                )
    if potential.pairing(m1, m2) != distance:
        raise InternalConsistencyError("nonzero duality gap between plan and potential")


def wasserstein(g: Graph, m1: Measure, m2: Measure) -> tuple[Fraction, TransportPlan]:
    """Exact transportation distance and an optimal coupling."""
    result = optimal_transport(g, m1, m2)
    return result.distance, result.plan


def kantorovich_potential(g: Graph, m1: Measure, m2: Measure) -> DualPotential:
    """Integer 1-Lipschitz potential attaining the transportation distance.

    Normalized to 0 at the smallest vertex of support(m1); integrality,
    Lipschitz feasibility and the zero duality gap are verified before
    returning.
    """
    return optimal_transport(g, m1, m2).potential


@dataclass(frozen=True)
class DualityCheck:
    """Outcome of a primal/dual cross-verification."""

    ok: bool
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_duality(plan: TransportPlan, potential: DualPotential, g: Graph) -> DualityCheck:
    """True iff plan and potential are feasible and their values agree exactly."""
    problems = []
    m1, m2 = plan.source, plan.target
    for (u, v), mass in plan.entries.items():
        if mass < 0:
            problems.append(f"negative plan entry at ({u}, {v})")
    if plan.row_sums() != dict(m1.items()):
        problems.append("plan row sums do not equal the source measure")
    if plan.column_sums() != dict(m2.items()):
        problems.append("plan column sums do not equal the target measure")
    domain = set(potential.values)
    needed = set(m1.support()) | set(m2.support())
    missing = needed - domain
    if missing:
        problems.append(f"potential undefined on support vertices {sorted(missing)}")
    else:
        for v, f in potential.items():
            if not isinstance(f, int):
                problems.append(f"potential value at {v} is not an integer")
                break
        lipschitz_ok = True
        for u in sorted(domain):
            du = bfs_distances(g, u)
            for v in sorted(domain):
                if abs(potential[u] - potential[v]) > du[v]:
                    problems.append(
                        f"potential violates 1-Lipschitz on ({u}, {v}): "
                        f"|{potential[u]} - {potential[v]}| > {du[v]}"
                    )
                    lipschitz_ok = False
                    break
            if not lipschitz_ok:
                break
        primal = plan.cost(g)
        dual = potential.pairing(m1, m2)
        if primal != dual:
            problems.append(f"duality gap: primal cost {primal} != dual value {dual}")
    return DualityCheck(not problems, tuple(problems))
