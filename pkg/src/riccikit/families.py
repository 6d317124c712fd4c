"""Deterministic generators for named graphs, with canonical embeddings.

Every generator returns (Graph, RotationSystem or None). Rotation lists are
clockwise and realize the usual plane drawing of each family, so tracing
them yields Euler characteristic 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional

from .graphs import Graph, RotationSystem


def figure1() -> tuple[Graph, RotationSystem]:
    """Positively curved 17-vertex planar graph with maximum degree 16.

    Center 16 joined to a 16-cycle 0..15; chords j to j+2 for even j and
    j to j+4 for j divisible by 4. Spokes sit inside the rim; chords nest
    outside it by span.
    """
    z = 16
    rim = list(range(16))
    edges = [(z, j) for j in rim]
    edges += [(j, (j + 1) % 16) for j in rim]
    edges += [(j, (j + 2) % 16) for j in rim if j % 2 == 0]
    edges += [(j, (j + 4) % 16) for j in rim if j % 4 == 0]
    g = Graph(edges)

    order: dict[int, list[int]] = {z: [0] + list(range(15, 0, -1))}
    for j in rim:
        cw = []
        if j % 4 == 0:
            cw.append((j - 4) % 16)
        if j % 2 == 0:
            cw.append((j - 2) % 16)
        cw += [(j - 1) % 16, z, (j + 1) % 16]
        if j % 2 == 0:
            cw.append((j + 2) % 16)
        if j % 4 == 0:
            cw.append((j + 4) % 16)
        order[j] = cw
    return g, RotationSystem(g, order)


def cycle(n: int) -> tuple[Graph, RotationSystem]:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    g = Graph([(i, (i + 1) % n) for i in range(n)])
    order = {i: [(i - 1) % n, (i + 1) % n] for i in range(n)}
    return g, RotationSystem(g, order)


def complete(n: int) -> tuple[Graph, Optional[RotationSystem]]:
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    g = Graph(combinations(range(n), 2))
    if n > 4:
        return g, None
    if n == 2:
        order = {0: [1], 1: [0]}
    elif n == 3:
        order = {0: [2, 1], 1: [0, 2], 2: [1, 0]}
    else:
        # triangle 0 1 2 with 3 in the middle
        order = {0: [2, 3, 1], 1: [0, 3, 2], 2: [1, 3, 0], 3: [2, 1, 0]}
    return g, RotationSystem(g, order)


def wheel(n: int) -> tuple[Graph, RotationSystem]:
    """Hub n joined to an n-cycle 0..n-1."""
    if n < 3:
        raise ValueError("wheel needs rim size n >= 3")
    hub = n
    edges = [(i, (i + 1) % n) for i in range(n)] + [(hub, i) for i in range(n)]
    g = Graph(edges)
    order: dict[int, list[int]] = {hub: [0] + list(range(n - 1, 0, -1))}
    for i in range(n):
        order[i] = [(i - 1) % n, hub, (i + 1) % n]
    return g, RotationSystem(g, order)


def prism(n: int) -> tuple[Graph, RotationSystem]:
    """Two concentric n-cycles 0..n-1 (outer) and n..2n-1 (inner), matched up."""
    if n < 3:
        raise ValueError("prism needs n >= 3")
    outer = list(range(n))
    inner = [n + i for i in range(n)]
    edges = [(outer[i], outer[(i + 1) % n]) for i in range(n)]
    edges += [(inner[i], inner[(i + 1) % n]) for i in range(n)]
    edges += [(outer[i], inner[i]) for i in range(n)]
    g = Graph(edges)
    order = {}
    for i in range(n):
        order[outer[i]] = [outer[(i - 1) % n], inner[i], outer[(i + 1) % n]]
        order[inner[i]] = [outer[i], inner[(i - 1) % n], inner[(i + 1) % n]]
    return g, RotationSystem(g, order)


def antiprism(n: int) -> tuple[Graph, RotationSystem]:
    """Outer n-cycle 0..n-1 and inner n-cycle n..2n-1 joined by a triangle band."""
    if n < 3:
        raise ValueError("antiprism needs n >= 3")
    outer = list(range(n))
    inner = [n + i for i in range(n)]
    edges = [(outer[i], outer[(i + 1) % n]) for i in range(n)]
    edges += [(inner[i], inner[(i + 1) % n]) for i in range(n)]
    edges += [(outer[i], inner[i]) for i in range(n)]
    edges += [(outer[(i + 1) % n], inner[i]) for i in range(n)]
    g = Graph(edges)
    order = {}
    for i in range(n):
        order[outer[i]] = [
            outer[(i - 1) % n],
            inner[(i - 1) % n],
            inner[i],
            outer[(i + 1) % n],
        ]
        order[inner[i]] = [
            inner[(i + 1) % n],
            outer[(i + 1) % n],
            outer[i],
            inner[(i - 1) % n],
        ]
    return g, RotationSystem(g, order)


def hypercube(d: int) -> tuple[Graph, Optional[RotationSystem]]:
    """d-dimensional cube on bitstring vertices 0..2^d - 1."""
    if d < 1:
        raise ValueError("hypercube needs d >= 1")
    n = 1 << d
    edges = [(v, v | (1 << b)) for v in range(n) for b in range(d) if not v & (1 << b)]
    g = Graph(edges)
    if d == 1:
        return g, RotationSystem(g, {0: [1], 1: [0]})
    if d == 2:
        ring = [0, 1, 3, 2]
        order = {
            ring[i]: [ring[(i - 1) % 4], ring[(i + 1) % 4]] for i in range(4)
        }
        return g, RotationSystem(g, order)
    if d == 3:
        # outer square 0 1 3 2, inner square 4 5 7 6, spokes v to v+4
        outer = [0, 1, 3, 2]
        inner = [4, 5, 7, 6]
        order = {}
        for i in range(4):
            order[outer[i]] = [outer[(i - 1) % 4], inner[i], outer[(i + 1) % 4]]
            order[inner[i]] = [outer[i], inner[(i - 1) % 4], inner[(i + 1) % 4]]
        return g, RotationSystem(g, order)
    return g, None


def icosahedron() -> tuple[Graph, RotationSystem]:
    """Apex 0, outer pentagon 1..5, inner pentagon 6..10, apex 11."""
    up = [1, 2, 3, 4, 5]
    low = [6, 7, 8, 9, 10]
    edges = [(0, u) for u in up]
    edges += [(up[i], up[(i + 1) % 5]) for i in range(5)]
    edges += [(low[i], low[(i + 1) % 5]) for i in range(5)]
    edges += [(up[i], low[i]) for i in range(5)]
    edges += [(up[(i + 1) % 5], low[i]) for i in range(5)]
    edges += [(11, w) for w in low]
    g = Graph(edges)
    order: dict[int, list[int]] = {
        0: up[:],
        11: [low[0]] + low[:0:-1],
    }
    for i in range(5):
        order[up[i]] = [
            0,
            up[(i - 1) % 5],
            low[(i - 1) % 5],
            low[i],
            up[(i + 1) % 5],
        ]
        order[low[i]] = [
            low[(i + 1) % 5],
            up[(i + 1) % 5],
            up[i],
            low[(i - 1) % 5],
            11,
        ]
    return g, RotationSystem(g, order)


@dataclass(frozen=True)
class FamilySpec:
    """A named generator plus its integer parameter, if any."""

    name: str
    param: Optional[int] = None

    def build(self) -> tuple[Graph, Optional[RotationSystem]]:
        entry = FAMILIES.get(self.name)
        if entry is None:
            raise ValueError(f"unknown family {self.name!r}")
        takes_param, factory = entry
        if takes_param:
            if self.param is None:
                raise ValueError(f"family {self.name!r} needs a parameter")
            return factory(self.param)
        if self.param is not None:
            raise ValueError(f"family {self.name!r} takes no parameter")
        return factory()

    def label(self) -> str:
        return self.name if self.param is None else f"{self.name}_{self.param}"


FAMILIES: dict[str, tuple[bool, Callable]] = {
    "figure1": (False, figure1),
    "icosahedron": (False, icosahedron),
    "cycle": (True, cycle),
    "complete": (True, complete),
    "wheel": (True, wheel),
    "prism": (True, prism),
    "antiprism": (True, antiprism),
    "hypercube": (True, hypercube),
}
