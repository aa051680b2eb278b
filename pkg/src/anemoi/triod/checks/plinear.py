# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

import logging
from fractions import Fraction

from ..plinear import forces
from ..plinear import periodic_orbits
from ..triod import BRANCHES
from ..triod import point
from . import Check
from . import CheckResult
from . import PatternAnalysis
from . import check_registry

LOG = logging.getLogger(__name__)


@check_registry.register("markov_soundness")
class MarkovSoundness(Check):
    """Every Markov edge is a true covering with the stated affine law."""

    def check(self, analysis: PatternAnalysis) -> CheckResult:
        f = analysis.plinear
        graph = f.markov_graph
        for piece in graph.pieces:
            arc = f.piece_arc(piece)
            edges = graph.successors(piece)
            if len(edges) != arc.length:
                return CheckResult.failed(
                    f"{piece} covers {len(edges)} pieces but its image has length {arc.length}",
                    covered=len(edges),
                    length=arc.length,
                )
            for e in edges:
                if abs(e.slope) < 1:
                    return CheckResult.failed(f"{piece} -> {e.target} contracts", slope=e.slope)
                for end in (e.target.index, e.target.index + 1):
                    c = (end - e.offset) / e.slope
                    if not piece.index <= c <= piece.index + 1:
                        return CheckResult.failed(f"{piece} -> {e.target}: preimage of {end} outside the piece", c=c)
                    if f.evaluate(point(piece.branch, c)) != point(e.target.branch, end):
                        return CheckResult.failed(f"{piece} -> {e.target}: affine law disagrees with the map", c=c)
        return CheckResult.passed()


@check_registry.register("orbit_grid_oracle")
class OrbitGridOracle(Check):
    """Sign changes of f^k(x) - x on a fine grid are all explained by enumerated orbits."""

    max_pattern_period = 4

    def __init__(self, max_period: int = 3, step: Fraction = Fraction(1, 64), **kwargs) -> None:
        super().__init__(**kwargs)
        self.max_period = max_period
        self.step = Fraction(step)

    def check(self, analysis: PatternAnalysis) -> CheckResult:
        f = analysis.plinear
        orbits = periodic_orbits(f, self.max_period)

        for o in orbits:
            if f.iterate(o.points[0], o.period) != o.points[0]:
                return CheckResult.failed(f"Enumerated point {o.points[0]} is not periodic", period=o.period)

        for k in range(1, self.max_period + 1):
            dividing = [o for o in orbits if k % o.period == 0]
            for b in BRANCHES:
                top = f.counts[b]
                if top == 0:
                    continue
                exact = {x.coord for o in dividing for x in o.points if x.branch == b}
                family = any(o.degenerate and any(x.branch == b for x in o.points) for o in dividing)

                def h(c):
                    y = f.iterate(point(b, c), k)
                    return (y.coord if y.branch == b else -y.coord) - c

                steps = int(top / self.step)
                grid = [self.step * i for i in range(1, steps + 1)]
                values = [h(c) for c in grid]

                for c, v in zip(grid, values):
                    if v == 0 and c not in exact and not family:
                        return CheckResult.failed(f"f^{k} fixes b{b} at {c}, no orbit was enumerated there", c=c, k=k)

                for (c1, v1), (c2, v2) in zip(zip(grid, values), zip(grid[1:], values[1:])):
                    if v1 * v2 < 0 and not family and not any(c1 < c < c2 for c in exact):
                        return CheckResult.failed(
                            f"f^{k} - id changes sign on b{b} between {c1} and {c2} with no enumerated orbit",
                            lo=c1,
                            hi=c2,
                            k=k,
                        )
        return CheckResult.passed()


@check_registry.register("loop_orbit_correspondence")
class LoopOrbitCorrespondence(Check):
    """Point loops and periodic orbits of the P-linear map match by branch itinerary."""

    max_pattern_period = 5

    def __init__(self, max_length: int = 4, **kwargs) -> None:
        super().__init__(**kwargs)
        self.max_length = max_length

    def check(self, analysis: PatternAnalysis) -> CheckResult:
        from ..graph import point_loops

        p = analysis.pattern
        g = analysis.graph
        f = analysis.plinear
        orbits = periodic_orbits(f, self.max_length)

        def itinerary(o, start, m):
            return tuple(o.points[(start + i) % o.period].branch for i in range(m))

        for loop in point_loops(g, self.max_length):
            m = loop.length
            wanted = tuple(p.branch(x) for x in loop.vertices)
            if not any(
                m % o.period == 0 and itinerary(o, s, m) == wanted for o in orbits for s in range(o.period)
            ):
                return CheckResult.failed(f"No periodic orbit follows the loop {loop.vertices}", length=m)

        for o in orbits:
            if not self._has_loop(p, g, o):
                return CheckResult.failed(f"No point loop dominates the orbit {[str(x) for x in o.points]}")

        return CheckResult.passed()

    @staticmethod
    def _has_loop(p, g, o) -> bool:
        candidates = [[t for t in p.on_branch(y.branch) if p.rank(t) >= y.coord] for y in o.points]

        def extend(walk):
            if len(walk) == o.period:
                return g.has_arrow(walk[-1], walk[0])
            for t in candidates[len(walk)]:
                if not walk or g.has_arrow(walk[-1], t):
                    walk.append(t)
                    if extend(walk):
                        return True
                    walk.pop()
            return False

        return extend([])


@check_registry.register("self_forcing")
class SelfForcing(Check):
    """A pattern is among the cycles of its own P-linear map."""

    def check(self, analysis: PatternAnalysis) -> CheckResult:
        p = analysis.pattern
        if not forces(p, p, p.period):
            return CheckResult.failed(f"{p} is not found among the cycles of its P-linear map")
        return CheckResult.passed()
