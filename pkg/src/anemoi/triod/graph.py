# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

"""The oriented graph of a pattern, its loops and their rotation numbers.

Vertices are the time indices of the pattern. There is an arrow ``x -> y`` when
some point ``z <= x`` has ``f(z) >= y``. Arrows carry a displacement in thirds
of a turn, ``k = branch(y) - branch(x) mod 3``, and a color.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator
from typing import List
from typing import Set
from typing import Tuple

import networkx as nx

from .errors import NotTransitive
from .pattern import Pattern
from .pattern import ensure_valid

LOG = logging.getLogger(__name__)

COLORS = ("green", "black", "red")


def color_of(thirds: int) -> str:
    return COLORS[thirds % 3]


@dataclass(frozen=True)
class PointLoop:
    vertices: Tuple[int, ...]
    thirds: int

    def __post_init__(self) -> None:
        assert self.thirds % 3 == 0, self

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def displacement(self) -> int:
        return self.thirds // 3

    @property
    def rotation_pair(self) -> Tuple[int, int]:
        return (self.displacement, self.length)

    @property
    def rotation_number(self) -> Fraction:
        return Fraction(self.displacement, self.length)


class OrientedGraph:

    def __init__(self, pattern: Pattern, graph: nx.DiGraph) -> None:
        self.pattern = pattern
        self.graph = graph

    def __repr__(self) -> str:
        return f"OrientedGraph({self.pattern}, arrows={self.graph.number_of_edges()})"

    @property
    def vertices(self) -> List[int]:
        return sorted(self.graph.nodes)

    def arrows(self) -> List[Tuple[int, int, int, str]]:
        return sorted((x, y, d["thirds"], d["color"]) for x, y, d in self.graph.edges(data=True))

    def has_arrow(self, x: int, y: int) -> bool:
        return self.graph.has_edge(x, y)

    def thirds(self, x: int, y: int) -> int:
        return self.graph.edges[x, y]["thirds"]

    def loop(self, vertices) -> PointLoop:
        vertices = tuple(vertices)
        n = len(vertices)
        total = 0
        for i in range(n):
            total += self.thirds(vertices[i], vertices[(i + 1) % n])
        return PointLoop(vertices, total)

    def dump(self) -> List[str]:
        return [f"x{x} -> x{y} d={k}/3 {c}" for x, y, k, c in self.arrows()]


def reaches(p: Pattern, x: int, y: int) -> bool:
    """The marked-point reach rule for the arrow x -> y."""
    b, r = p.points[x]
    target = p.points[y]
    for s in p.on_branch(b):
        if p.rank(s) > r:
            break
        fb, fr = p.points[p.image(s)]
        if fb == target[0] and fr >= target[1]:
            return True
    return False


def build_graph(p: Pattern) -> OrientedGraph:
    ensure_valid(p)
    g = nx.DiGraph()
    g.add_nodes_from(range(p.period))
    for x in range(p.period):
        for y in range(p.period):
            if reaches(p, x, y):
                k = (p.branch(y) - p.branch(x)) % 3
                g.add_edge(x, y, thirds=k, color=color_of(k))
    return OrientedGraph(p, g)


def geometric_arrows(p: Pattern) -> Set[Tuple[int, int]]:
    """Arrows found by evaluating the P-linear map on marked points and piece midpoints."""
    from .plinear import Piece
    from .plinear import build_plinear
    from .triod import geq

    f = build_plinear(p)
    arrows = set()
    for x in range(p.period):
        b, r = p.points[x]
        samples = [p.location(s) for s in p.on_branch(b) if p.rank(s) <= r]
        samples += [Piece(b, j).midpoint for j in range(r)]
        images = [f.evaluate(z) for z in samples]
        for y in range(p.period):
            if any(geq(w, p.location(y)) for w in images):
                arrows.add((x, y))
    return arrows


def fundamental_loop(p: Pattern) -> PointLoop:
    ensure_valid(p)
    return PointLoop(tuple(range(p.period)), sum(p.shift(t) for t in range(p.period)))


def _rotated(cycle: List[int]) -> Tuple[int, ...]:
    i = cycle.index(min(cycle))
    return tuple(cycle[i:] + cycle[:i])


def elementary_loops(g: OrientedGraph) -> List[PointLoop]:
    loops = [g.loop(_rotated(list(c))) for c in nx.simple_cycles(g.graph)]
    return sorted(loops, key=lambda loop: loop.vertices)


def point_loops(g: OrientedGraph, max_length: int) -> Iterator[PointLoop]:
    """Every closed walk of length at most `max_length`, once per cyclic rotation class."""
    seen = set()

    def smallest_rotation(walk):
        return min(tuple(walk[i:] + walk[:i]) for i in range(len(walk)))

    def extend(walk):
        start = walk[0]
        if g.has_arrow(walk[-1], start):
            key = smallest_rotation(walk)
            if key not in seen:
                seen.add(key)
                yield g.loop(key)
        if len(walk) == max_length:
            return
        for y in sorted(g.graph.successors(walk[-1])):
            if y < start:
                continue
            walk.append(y)
            yield from extend(walk)
            walk.pop()

    for v in g.vertices:
        yield from extend([v])


def is_transitive(g: OrientedGraph) -> bool:
    return nx.is_strongly_connected(g.graph)


def rotation_set(g: OrientedGraph) -> Tuple[Fraction, Fraction]:
    """Smallest interval holding the rotation numbers of all elementary loops."""
    if not is_transitive(g):
        raise NotTransitive(f"The oriented graph of {g.pattern} is not strongly connected")
    numbers = [loop.rotation_number for loop in elementary_loops(g)]
    return min(numbers), max(numbers)


def mrp_of(rp: Tuple[int, int]) -> Tuple[Fraction, int]:
    """Modified rotation pair (t, m) of a rotation pair (d, q); d = 0 gives (0, q)."""
    d, q = rp
    if q < 1:
        raise ValueError(f"Invalid rotation pair {rp}")
    if d == 0:
        return Fraction(0), q
    m = gcd(d, q)
    return Fraction(d // m, q // m), m


def has_mixed_two_loop(g: OrientedGraph) -> bool:
    for x, y in g.graph.edges:
        if x < y and g.has_arrow(y, x) and {g.thirds(x, y), g.thirds(y, x)} == {1, 2}:
            return True
    return False


def has_zero_loop(g: OrientedGraph) -> bool:
    """True when some loop has displacement 0, that is when the green arrows close up."""
    green = nx.DiGraph([(x, y) for x, y, d in g.graph.edges(data=True) if d["thirds"] == 0])
    return not nx.is_directed_acyclic_graph(green)
