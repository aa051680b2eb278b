# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

"""Cycle patterns on the triod.

A pattern of period ``n`` lists, for every time index ``t``, the branch of the
point and its rank on that branch (rank 1 is nearest to the hub). The point at
time ``t`` maps to the point at time ``t + 1 mod n``.
"""

import itertools
import json
import logging
import math
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from typing import Dict
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Optional
from typing import Tuple

from .errors import DuplicateRank
from .errors import EmptyPattern
from .errors import InvalidBranch
from .errors import NoCanonicalOrdering
from .errors import NotRegular
from .errors import PatternError
from .errors import PatternSyntaxError
from .errors import RankGap
from .triod import BRANCHES
from .triod import TriodPoint

LOG = logging.getLogger(__name__)

Point = Tuple[int, int]


@dataclass(frozen=True)
class Pattern:
    points: Tuple[Point, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(tuple(p) for p in self.points))

    def __repr__(self) -> str:
        return f"Pattern({list(self.points)})"

    def __len__(self) -> int:
        return len(self.points)

    @property
    def period(self) -> int:
        return len(self.points)

    def branch(self, t: int) -> int:
        return self.points[t][0]

    def rank(self, t: int) -> int:
        return self.points[t][1]

    def image(self, t: int) -> int:
        return (t + 1) % self.period

    def shift(self, t: int) -> int:
        """Branch displacement of the step t -> t+1, in thirds."""
        return (self.branch(self.image(t)) - self.branch(t)) % 3

    @property
    def displacement(self) -> int:
        """Total displacement of the fundamental loop (an integer)."""
        thirds = sum(self.shift(t) for t in range(self.period))
        assert thirds % 3 == 0, self
        return thirds // 3

    @property
    def rotation_pair(self) -> Tuple[int, int]:
        return (self.displacement, self.period)

    @property
    def rotation_number(self) -> Fraction:
        return Fraction(self.displacement, self.period)

    def location(self, t: int) -> TriodPoint:
        """Position of the point at time `t`, rank r sitting at distance r from the hub."""
        return TriodPoint(self.branch(t), Fraction(self.rank(t)))

    @property
    def counts(self) -> Dict[int, int]:
        result = {b: 0 for b in BRANCHES}
        for b, _ in self.points:
            result[b] += 1
        return result

    @property
    def branches(self) -> Tuple[int, ...]:
        return tuple(b for b, k in self.counts.items() if k > 0)

    def on_branch(self, b: int) -> List[int]:
        """Time indices of the points on branch `b`, from the hub outwards."""
        return sorted((t for t in range(self.period) if self.branch(t) == b), key=self.rank)

    def time_of(self, b: int, r: int) -> int:
        return self.points.index((b, r))

    def above(self, t: int) -> List[int]:
        """Points on the same branch at or beyond the point at time `t`."""
        b, r = self.points[t]
        return [s for s in self.on_branch(b) if self.rank(s) >= r]


@dataclass
class PatternClassification:
    """Everything the classifier reports about one pattern."""

    pattern: Pattern
    oriented: Pattern
    rotation_number: Fraction
    rotation_pair: Tuple[int, int]
    mrp: Tuple[Fraction, int]
    is_regular: bool
    is_order_preserving: bool
    is_triod_twist: bool
    modality: int
    color_census: Dict[str, int]
    chi: Optional[Fraction] = None
    state_census: Dict[str, int] = field(default_factory=dict)
    countries: int = 0
    laps: Optional[int] = None
    bound: Optional[int] = None

    def __post_init__(self) -> None:
        assert self.rotation_number == Fraction(*self.rotation_pair), (self.rotation_number, self.rotation_pair)


def validate(p: Pattern) -> List[PatternError]:
    """Return the list of violated invariants, empty when `p` is a valid pattern."""
    errors = []

    if p.period == 0:
        errors.append(EmptyPattern("A pattern needs at least one point"))
        return errors

    for t, (b, r) in enumerate(p.points):
        if b not in BRANCHES:
            errors.append(InvalidBranch(f"Time {t}: branch {b} is not one of {BRANCHES}"))
        if not isinstance(r, int) or r < 1:
            errors.append(InvalidBranch(f"Time {t}: rank {r} is not a positive integer"))
    if errors:
        return errors

    seen = {}
    for t, point in enumerate(p.points):
        if point in seen:
            errors.append(DuplicateRank(f"Times {seen[point]} and {t} both sit at rank {point[1]} of branch {point[0]}"))
        else:
            seen[point] = t

    for b in BRANCHES:
        ranks = {r for (c, r) in p.points if c == b}
        missing = sorted(set(range(1, max(ranks, default=0) + 1)) - ranks)
        if missing:
            errors.append(RankGap(f"Branch {b}: ranks {missing} are missing"))

    return errors


def ensure_valid(p: Pattern) -> Pattern:
    errors = validate(p)
    if errors:
        raise errors[0]
    return p


def canonicalize(p: Pattern) -> Pattern:
    """The time rotation of `p` with the lexicographically smallest point sequence."""
    ensure_valid(p)
    n = p.period
    best = min(range(n), key=lambda s: p.points[s:] + p.points[:s])
    return Pattern(p.points[best:] + p.points[:best])


def enumerate_patterns(n: int) -> Iterator[Pattern]:
    """Every pattern of period `n`, once per time rotation class, in lexicographic order."""
    if n < 1:
        raise ValueError(f"Period must be at least 1, got {n}")

    for first in BRANCHES:
        counts = {b: 0 for b in BRANCHES}
        highest = {b: 0 for b in BRANCHES}
        counts[first] = highest[first] = 1
        yield from _extend([(first, 1)], {(first, 1)}, counts, highest, first, n)


def _extend(points, used, counts, highest, first, n):
    remaining = n - len(points)
    if remaining == 0:
        yield Pattern(tuple(points))
        return

    for b in range(first, 3):
        for r in range(1, counts[b] + remaining + 1):
            if (b, r) in used:
                continue

            old = highest[b]
            counts[b] += 1
            highest[b] = max(old, r)

            # Ranks below the highest one must still fit in the slots left
            missing = sum(highest[c] - counts[c] for c in BRANCHES)
            if missing <= remaining - 1:
                points.append((b, r))
                used.add((b, r))
                yield from _extend(points, used, counts, highest, first, n)
                used.discard((b, r))
                points.pop()

            counts[b] -= 1
            highest[b] = old


def raw_patterns(n: int) -> List[Pattern]:
    """Independent brute force: all branch words and rank permutations, deduplicated."""
    found = set()
    for word in itertools.product(BRANCHES, repeat=n):
        slots = {b: [t for t, c in enumerate(word) if c == b] for b in BRANCHES}
        per_branch = [list(itertools.permutations(range(1, len(slots[b]) + 1))) for b in BRANCHES]
        for choice in itertools.product(*per_branch):
            points = [None] * n
            for b, ranks in zip(BRANCHES, choice):
                for t, r in zip(slots[b], ranks):
                    points[t] = (b, r)
            found.add(canonicalize(Pattern(tuple(points))))
    return sorted(found, key=lambda p: p.points)


def pattern_count(n: int) -> int:
    """Closed form of the number of patterns of period `n`."""
    return math.factorial(n - 1) * math.comb(n + 2, 2)


def serialize(p: Pattern) -> str:
    return json.dumps({"period": p.period, "points": [list(x) for x in p.points]}, separators=(",", ":"))


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def pattern_from_dict(data, line: int = None) -> Pattern:
    if not isinstance(data, dict) or "points" not in data or "period" not in data:
        raise PatternSyntaxError("expected an object with 'period' and 'points'", line)

    period, points = data["period"], data["points"]
    if not _is_int(period) or not isinstance(points, list):
        raise PatternSyntaxError("'period' must be an integer and 'points' an array", line)

    for x in points:
        if not (isinstance(x, list) and len(x) == 2 and all(_is_int(v) for v in x)):
            raise PatternSyntaxError(f"invalid point {x!r}, expected [branch, rank]", line)

    if period != len(points):
        raise PatternSyntaxError(f"'period' is {period} but {len(points)} points are given", line)

    return ensure_valid(Pattern(tuple(tuple(x) for x in points)))


def parse(text: str, line: int = None) -> Pattern:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise PatternSyntaxError(str(e), line) from e
    return pattern_from_dict(data, line)


def _rank_one_points_black(p: Pattern) -> bool:
    return all(p.shift(p.time_of(b, 1)) == 1 for b in BRANCHES)


def canonical_branch_ordering(p: Pattern) -> Pattern:
    """Relabel the branches so that the innermost point of every branch is black.

    Time indices are kept. Cyclic relabellings are tried first, reflected ones
    next; among the admissible ones the smallest point sequence is returned.
    """
    from .plinear import is_regular
    from .relabels import relabel_registry

    ensure_valid(p)
    if not is_regular(p):
        raise NotRegular(f"{p} forces a primitive pattern of period 2")

    if len(p.branches) < 3:
        raise NoCanonicalOrdering(f"{p} does not meet every branch")

    for reflect in (False, True):
        found = []
        for k in BRANCHES:
            relabel = relabel_registry.create("rotate_branches", k=k)
            if reflect:
                relabel = relabel_registry.create("reflect_branches") | relabel
            q = relabel(p)
            if _rank_one_points_black(q):
                found.append(q)
        if found:
            return min(found, key=lambda q: q.points)

    raise NoCanonicalOrdering(f"No labelling of the branches makes the innermost points of {p} black")


def branch_classes(patterns: Iterable[Pattern]) -> Iterator[Pattern]:
    """One representative per class of patterns equal up to a cyclic branch rotation."""
    from .relabels import relabel_registry

    rotations = [relabel_registry.create("rotate_branches", k=k) for k in BRANCHES]
    seen = set()
    for p in patterns:
        key = min((canonicalize(r(p)) for r in rotations), key=lambda q: q.points)
        if key in seen:
            continue
        seen.add(key)
        yield key
