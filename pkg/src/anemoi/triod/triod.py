# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

"""Exact geometry of the triod: three branches glued at the branching point ``a``.

A point is either the hub ``a`` or a pair (branch, coord) with a positive
rational distance from ``a``. All coordinates are `fractions.Fraction`.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict
from typing import Optional
from typing import Union

BRANCHES = (0, 1, 2)

Rational = Union[int, Fraction]


def branch_shift(i: int, k: int) -> int:
    return (i + k) % 3


@dataclass(frozen=True)
class TriodPoint:
    """The hub when `branch` is None, otherwise a point at distance `coord` on `branch`."""

    branch: Optional[int]
    coord: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coord", Fraction(self.coord))
        if self.branch is None:
            if self.coord != 0:
                raise ValueError(f"The branching point carries no coordinate, got {self.coord}")
            return
        if self.branch not in BRANCHES:
            raise ValueError(f"Invalid branch {self.branch}")
        if self.coord <= 0:
            raise ValueError(f"Points off the hub need a positive coordinate, got {self.coord}")

    @property
    def is_hub(self) -> bool:
        return self.branch is None

    def sort_key(self):
        if self.branch is None:
            return (-1, Fraction(0))
        return (self.branch, self.coord)

    def __str__(self) -> str:
        if self.branch is None:
            return "a"
        return f"(b{self.branch}, {self.coord})"


HUB = TriodPoint(None)


def point(branch: int, coord: Rational) -> TriodPoint:
    """Build a point, mapping a zero coordinate to the hub."""
    coord = Fraction(coord)
    if coord == 0:
        return HUB
    return TriodPoint(branch, coord)


class Comparison(Enum):
    GREATER = "Greater"
    LESS = "Less"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


def tree_compare(x: TriodPoint, y: TriodPoint) -> Comparison:
    if x == y:
        return Comparison.EQUAL
    if x.is_hub:
        return Comparison.LESS
    if y.is_hub:
        return Comparison.GREATER
    if x.branch != y.branch:
        return Comparison.INCOMPARABLE
    return Comparison.GREATER if x.coord > y.coord else Comparison.LESS


def geq(x: TriodPoint, y: TriodPoint) -> bool:
    """``x >= y`` in the partial order of the triod."""
    return tree_compare(x, y) in (Comparison.GREATER, Comparison.EQUAL)


@dataclass(frozen=True)
class Arc:
    """The unique arc of the triod joining `start` to `end`."""

    start: TriodPoint
    end: TriodPoint

    @property
    def through_hub(self) -> bool:
        """True when the hub lies strictly inside the arc."""
        return tree_compare(self.start, self.end) is Comparison.INCOMPARABLE

    @property
    def degenerate(self) -> bool:
        return self.start == self.end

    @property
    def _on_one_branch(self) -> bool:
        return not (self.start.is_hub or self.end.is_hub or self.through_hub)

    @property
    def length(self) -> Fraction:
        if self._on_one_branch:
            return abs(self.start.coord - self.end.coord)
        return self.start.coord + self.end.coord

    @property
    def extents(self) -> Dict[int, Fraction]:
        """Farthest coordinate reached on each branch the arc enters."""
        result = {}
        for p in (self.start, self.end):
            if p.is_hub:
                continue
            result[p.branch] = max(result.get(p.branch, Fraction(0)), p.coord)
        return result

    def contains(self, z: TriodPoint) -> bool:
        if self._on_one_branch:
            lo, hi = sorted((self.start.coord, self.end.coord))
            return z.branch == self.start.branch and lo <= z.coord <= hi
        if z.is_hub:
            return True
        return z.coord <= self.extents.get(z.branch, Fraction(0))

    def point_at(self, delta: Rational) -> TriodPoint:
        """The point at arc length `delta` from `start` towards `end`."""
        delta = Fraction(delta)
        assert 0 <= delta <= self.length, (delta, self)

        u, v = self.start, self.end
        if self._on_one_branch:
            sign = 1 if v.coord > u.coord else -1
            return point(u.branch, u.coord + sign * delta)
        if u.is_hub:
            return point(v.branch, delta)
        if delta <= u.coord:
            return point(u.branch, u.coord - delta)
        return point(v.branch, delta - u.coord)

    def __str__(self) -> str:
        return f"[{self.start}, {self.end}]"


def arc_between(x: TriodPoint, y: TriodPoint) -> Arc:
    return Arc(x, y)
