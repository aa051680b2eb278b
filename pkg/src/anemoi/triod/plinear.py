# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

"""The P-linear map of a pattern and the periodic orbits it carries.

The point of rank ``r`` on a branch sits at coordinate ``r``, so the pieces of
``[P]`` are the unit segments ``[j, j+1]`` of each branch, ``j = 0`` touching
the hub. The map sends each piece onto the arc joining the images of its two
endpoints at constant speed, hence onto a union of whole pieces. Every Markov
edge records the affine law ``c' = slope * c + offset`` of that covering.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from functools import lru_cache
from math import floor
from typing import Dict
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Optional
from typing import Set
from typing import Tuple

import networkx as nx

from .errors import CrossCheckMismatch
from .errors import SearchBudgetExceeded
from .pattern import Pattern
from .pattern import canonicalize
from .pattern import ensure_valid
from .triod import HUB
from .triod import Arc
from .triod import TriodPoint
from .triod import point

LOG = logging.getLogger(__name__)

# Fractions of an interval of periodic points tried, in order, for its representative
REPRESENTATIVES = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4), Fraction(3, 4), Fraction(1, 5))


@dataclass(frozen=True, order=True)
class Piece:
    """The segment [index, index + 1] of a branch."""

    branch: int
    index: int

    @property
    def inner(self) -> TriodPoint:
        return point(self.branch, self.index)

    @property
    def outer(self) -> TriodPoint:
        return point(self.branch, self.index + 1)

    @property
    def midpoint(self) -> TriodPoint:
        return point(self.branch, Fraction(2 * self.index + 1, 2))

    def __str__(self) -> str:
        return f"b{self.branch}[{self.index},{self.index + 1}]"


@dataclass(frozen=True)
class MarkovEdge:
    source: Piece
    target: Piece
    slope: Fraction
    offset: Fraction

    def __call__(self, c: Fraction) -> Fraction:
        return self.slope * c + self.offset


@dataclass
class MarkovGraph:
    pieces: Tuple[Piece, ...]
    edges: Dict[Piece, List[MarkovEdge]]

    def successors(self, piece: Piece) -> List[MarkovEdge]:
        return self.edges[piece]

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.pieces)
        for piece in self.pieces:
            for e in self.edges[piece]:
                g.add_edge(e.source, e.target, slope=e.slope, offset=e.offset)
        return g


@dataclass(frozen=True)
class OrbitRecord:
    period: int
    points: Tuple[TriodPoint, ...]
    pattern: Pattern
    degenerate: bool = False
    walk: Tuple[Piece, ...] = ()

    @property
    def rotation_pair(self) -> Tuple[int, int]:
        return self.pattern.rotation_pair


class PLinearMap:

    def __init__(self, pattern: Pattern) -> None:
        self.pattern = ensure_valid(pattern)
        self.counts = pattern.counts
        self._time = {pattern.points[t]: t for t in range(pattern.period)}

    def __repr__(self) -> str:
        return f"PLinearMap({self.pattern})"

    @property
    def marked(self) -> List[TriodPoint]:
        return [HUB] + [self.pattern.location(t) for t in range(self.pattern.period)]

    @cached_property
    def pieces(self) -> Tuple[Piece, ...]:
        return tuple(Piece(b, j) for b in sorted(self.counts) for j in range(self.counts[b]))

    def image(self, x: TriodPoint) -> TriodPoint:
        """Image of a marked point."""
        if x.is_hub:
            return HUB
        t = self._time[(x.branch, int(x.coord))]
        return self.pattern.location(self.pattern.image(t))

    def piece_arc(self, piece: Piece) -> Arc:
        return Arc(self.image(piece.inner), self.image(piece.outer))

    def evaluate(self, x: TriodPoint) -> TriodPoint:
        if x.is_hub:
            return HUB

        k = self.counts[x.branch]
        if k == 0:
            # The component of Y - [P] holding x is collapsed onto f(a) = a
            return HUB
        if x.coord >= k:
            return self.image(point(x.branch, k))

        j = floor(x.coord)
        arc = self.piece_arc(Piece(x.branch, j))
        return arc.point_at((x.coord - j) * arc.length)

    def iterate(self, x: TriodPoint, k: int) -> TriodPoint:
        for _ in range(k):
            x = self.evaluate(x)
        return x

    @cached_property
    def modality(self) -> int:
        return modality(self)

    @cached_property
    def markov_graph(self) -> MarkovGraph:
        return markov_graph(self)


def build_plinear(p: Pattern) -> PLinearMap:
    return PLinearMap(p)


def evaluate(f: PLinearMap, x: TriodPoint) -> TriodPoint:
    return f.evaluate(x)


def _direction(origin: TriodPoint, target: TriodPoint) -> str:
    """Initial direction of the arc from `origin` to `target`: 'out' along the branch or 'in'."""
    if target.branch == origin.branch and target.coord > origin.coord:
        return "out"
    return "in"


def fold_points(f: PLinearMap) -> List[TriodPoint]:
    """Marked points, hub included, around which the map is not locally injective."""
    folds = []

    # Germs at the hub: each nonempty arm leaves along the branch of its innermost image
    arms = [f.image(point(b, 1)).branch for b in sorted(f.counts) if f.counts[b] > 0]
    if len(set(arms)) < len(arms):
        folds.append(HUB)

    for b in sorted(f.counts):
        for r in range(1, f.counts[b]):
            q = point(b, r)
            w = f.image(q)
            before = f.image(point(b, r - 1))
            after = f.image(point(b, r + 1))
            if _direction(w, before) == _direction(w, after):
                folds.append(q)

    return folds


def modality(f: PLinearMap) -> int:
    """Number of laps of the map on [P], one more than the number of folds.

    Constant tails are merged into their neighbours. The hub counts as one fold
    for every arm leaving along a branch already taken by another arm.
    """
    interior = [x for x in fold_points(f) if not x.is_hub]
    arms = [f.image(point(b, 1)).branch for b in sorted(f.counts) if f.counts[b] > 0]
    return len(interior) + 1 + len(arms) - len(set(arms))


def _covering_edges(source: Piece, u: TriodPoint, v: TriodPoint, length: Fraction) -> List[MarkovEdge]:
    """Edges of `source` whose image arc runs from `u` to `v`."""
    j = source.index
    edges = []

    def cover(branch, top, slope, offset):
        for i in range(int(top)):
            edges.append(MarkovEdge(source, Piece(branch, i), slope, offset))

    def cover_between(branch, lo, hi, slope, offset):
        for i in range(int(lo), int(hi)):
            edges.append(MarkovEdge(source, Piece(branch, i), slope, offset))

    if u.is_hub:
        cover(v.branch, v.coord, length, -j * length)
    elif v.is_hub:
        cover(u.branch, u.coord, -length, u.coord + j * length)
    elif u.branch == v.branch:
        sign = 1 if v.coord > u.coord else -1
        lo, hi = sorted((u.coord, v.coord))
        cover_between(u.branch, lo, hi, sign * length, u.coord - sign * j * length)
    else:
        cover(u.branch, u.coord, -length, u.coord + j * length)
        cover(v.branch, v.coord, length, -j * length - u.coord)

    return edges


def markov_graph(f: PLinearMap) -> MarkovGraph:
    edges = {}
    for piece in f.pieces:
        arc = f.piece_arc(piece)
        edges[piece] = sorted(
            _covering_edges(piece, arc.start, arc.end, arc.length),
            key=lambda e: e.target,
        )
    return MarkovGraph(f.pieces, edges)


def orbit_of(f: PLinearMap, y: TriodPoint, bound: int) -> Optional[Tuple[TriodPoint, ...]]:
    """The cycle through `y` if it closes within `bound` steps."""
    orbit = [y]
    x = f.evaluate(y)
    while x != y:
        if len(orbit) >= bound:
            return None
        orbit.append(x)
        x = f.evaluate(x)
    return tuple(orbit)


def orbit_pattern(points: Tuple[TriodPoint, ...]) -> Pattern:
    ranks = {}
    for b in {x.branch for x in points}:
        coords = sorted(x.coord for x in points if x.branch == b)
        ranks.update({(b, c): r for r, c in enumerate(coords, start=1)})
    return canonicalize(Pattern(tuple((x.branch, ranks[(x.branch, x.coord)]) for x in points)))


def _solutions(A, B, lo, hi, length, f, start) -> Iterator[Tuple[Fraction, bool]]:
    if A != 1:
        c = B / (1 - A)
        if lo <= c <= hi:
            yield c, False
        return

    if B != 0:
        return

    # f^length is the identity on [lo, hi]: keep both ends and one interior point
    yield lo, True
    if hi != lo:
        yield hi, True
        chosen = lo + (hi - lo) / 2
        for fraction in REPRESENTATIVES:
            c = lo + fraction * (hi - lo)
            y = point(start.branch, c)
            if not y.is_hub and len(orbit_of(f, y, length) or ()) == length:
                chosen = c
                break
        yield chosen, True


def _targets(
    max_period: int,
    rotation_number: Optional[Fraction],
    periods: Optional[Iterable[int]] = None,
) -> Dict[int, Optional[int]]:
    """Allowed walk lengths and the branch shift (in thirds) each must accumulate."""
    lengths = range(1, max_period + 1) if periods is None else sorted({n for n in periods if 1 <= n <= max_period})
    if rotation_number is None:
        return {n: None for n in lengths}
    result = {}
    for n in lengths:
        turns = rotation_number * n
        if turns.denominator == 1:
            result[n] = 3 * int(turns)
    return result


def iter_periodic_orbits(
    f: PLinearMap,
    max_period: int,
    rotation_number: Optional[Fraction] = None,
    periods: Optional[Iterable[int]] = None,
    budget: Optional[int] = None,
) -> Iterator[OrbitRecord]:
    """Cycles of `f` other than the hub, yielded as they are found.

    Closed walks of the Markov graph are explored from each start piece, only
    through pieces that do not precede the start. The composed affine law and
    the interval of admissible start coordinates are carried along; an empty
    interval prunes the walk. With `rotation_number` set, only walks that can
    still close with that rotation number are expanded; with `periods` set,
    only walks of those lengths are closed. Expanding more than `budget` walks
    raises `SearchBudgetExceeded`.
    """
    if max_period < 1:
        raise ValueError(f"max_period must be at least 1, got {max_period}")

    graph = f.markov_graph
    targets = _targets(max_period, rotation_number, periods)
    if not targets:
        return
    longest = max(targets)

    seen: Set[frozenset] = set()
    expanded = 0

    def reachable(depth, shifted):
        for n, target in targets.items():
            if n < depth:
                continue
            if target is None or 0 <= target - shifted <= 2 * (n - depth + 1):
                return True
        return False

    def close(walk, A, B, lo, hi, shifted):
        n = len(walk)
        if n not in targets:
            return
        start = walk[0]
        for e in graph.successors(walk[-1]):
            if e.target != start:
                continue
            total = shifted + (start.branch - walk[-1].branch) % 3
            if targets[n] is not None and total != targets[n]:
                continue
            A2, B2 = e.slope * A, e.slope * B + e.offset
            bounds = _restrict(A2, B2, start, lo, hi)
            if bounds is None:
                continue
            for c, degenerate in _solutions(A2, B2, bounds[0], bounds[1], n, f, start):
                record = _record(c, degenerate, walk)
                if record is not None:
                    yield record

    def _record(c, degenerate, walk):
        y = point(walk[0].branch, c)
        if y.is_hub:
            return None
        orbit = orbit_of(f, y, len(walk))
        assert orbit is not None, (f, y, walk)
        key = frozenset(orbit)
        if key in seen:
            return None
        seen.add(key)
        first = min(range(len(orbit)), key=lambda i: orbit[i].sort_key())
        orbit = orbit[first:] + orbit[:first]
        if degenerate:
            LOG.debug("Degenerate family of period %s in %s, recorded %s", len(walk), f, orbit)
        return OrbitRecord(len(orbit), orbit, orbit_pattern(orbit), degenerate, tuple(walk))

    def explore(walk, A, B, lo, hi, shifted):
        nonlocal expanded
        expanded += 1
        if budget is not None and expanded > budget:
            raise SearchBudgetExceeded(f"Orbit search in {f} expanded more than {budget} walks")

        yield from close(walk, A, B, lo, hi, shifted)
        if len(walk) >= longest:
            return
        start = walk[0]
        for e in graph.successors(walk[-1]):
            if e.target < start:
                continue
            total = shifted + (e.target.branch - walk[-1].branch) % 3
            if not reachable(len(walk) + 1, total):
                continue
            A2, B2 = e.slope * A, e.slope * B + e.offset
            bounds = _restrict(A2, B2, e.target, lo, hi)
            if bounds is None:
                continue
            walk.append(e.target)
            yield from explore(walk, A2, B2, bounds[0], bounds[1], total)
            walk.pop()

    for piece in graph.pieces:
        yield from explore([piece], Fraction(1), Fraction(0), Fraction(piece.index), Fraction(piece.index + 1), 0)


def periodic_orbits(
    f: PLinearMap,
    max_period: int,
    rotation_number: Optional[Fraction] = None,
) -> List[OrbitRecord]:
    """All cycles of `f` other than the hub with period at most `max_period`, sorted."""
    orbits = iter_periodic_orbits(f, max_period, rotation_number)
    return sorted(orbits, key=lambda o: (o.period, o.pattern.points, [x.sort_key() for x in o.points]))


def _restrict(A, B, piece, lo, hi) -> Optional[Tuple[Fraction, Fraction]]:
    """Narrow [lo, hi] to the start coordinates whose image A*c + B lies in `piece`."""
    a = (piece.index - B) / A
    b = (piece.index + 1 - B) / A
    lo, hi = max(lo, min(a, b)), min(hi, max(a, b))
    if lo > hi:
        return None
    return lo, hi


@lru_cache(maxsize=4096)
def _forced(p: Pattern, max_period: int) -> Tuple[Pattern, ...]:
    f = build_plinear(p)
    return tuple(sorted({o.pattern for o in iter_periodic_orbits(f, max_period)}, key=lambda q: (q.period, q.points)))


def forced_patterns(p: Pattern, max_period: int) -> List[Pattern]:
    """Patterns of the cycles of the P-linear map of `p`, up to `max_period`."""
    return list(_forced(p, max_period))


def mrp_set(p: Pattern, max_period: int, include_zero: bool = False) -> Set[Tuple[Fraction, int]]:
    from .graph import mrp_of

    result = set()
    for q in _forced(p, max_period):
        d, n = q.rotation_pair
        if d == 0 and not include_zero:
            continue
        result.add(mrp_of((d, n)))
    return result


def forces(a: Pattern, b: Pattern, max_period: int) -> bool:
    if b.period > max_period:
        raise ValueError(f"Cannot decide forcing of a period {b.period} pattern with max_period={max_period}")
    target = canonicalize(b)
    f = build_plinear(a)
    orbits = iter_periodic_orbits(f, b.period, rotation_number=b.rotation_number, periods=(b.period,))
    return any(o.pattern == target for o in orbits)


def has_mixed_two_cycle(p: Pattern) -> bool:
    orbits = periodic_orbits(build_plinear(p), 2)
    return any(o.period == 2 and o.points[0].branch != o.points[1].branch for o in orbits)


@lru_cache(maxsize=8192)
def is_regular(p: Pattern) -> bool:
    """True unless the pattern forces a primitive cycle of period 2.

    The orbit search is cross-checked against the two-loop criterion of the
    oriented graph.
    """
    from .graph import build_graph
    from .graph import has_mixed_two_loop

    by_orbits = has_mixed_two_cycle(p)
    by_loops = has_mixed_two_loop(build_graph(p))
    if by_orbits != by_loops:
        raise CrossCheckMismatch(
            f"{p}: period-2 orbit search says {by_orbits}, mixed two-loop criterion says {by_loops}"
        )
    return not by_orbits


@lru_cache(maxsize=8192)
def fixes_only_hub(p: Pattern) -> bool:
    """True when the hub is the only fixed point of the P-linear map.

    Cross-checked against the oriented graph, which has a loop of zero
    displacement exactly when some other point is fixed.
    """
    from .graph import build_graph
    from .graph import has_zero_loop

    by_orbits = any(True for _ in iter_periodic_orbits(build_plinear(p), 1))
    by_loops = has_zero_loop(build_graph(p))
    if by_orbits != by_loops:
        raise CrossCheckMismatch(f"{p}: fixed point search says {by_orbits}, zero-loop criterion says {by_loops}")
    return not by_orbits
