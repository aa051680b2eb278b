# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

"""The Sharkovsky ordering and hulls of modified rotation pairs.

The order reads 3 > 5 > 7 > ... > 2*3 > 2*5 > ... > 4*3 > ... > 2^inf > ... > 8 > 4 > 2 > 1.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable
from typing import Set
from typing import Tuple
from typing import Union


class _TwoInfinity(Enum):
    TWO_INFINITY = "2^inf"

    def __str__(self) -> str:
        return self.value


TWO_INFINITY = _TwoInfinity.TWO_INFINITY

SharkovskyKey = Union[int, _TwoInfinity]


def sharkovsky_key(m: SharkovskyKey) -> Tuple[int, int, int]:
    """Sort key: a larger key comes first in the Sharkovsky order."""
    if m is TWO_INFINITY:
        return (1, 0, 0)
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"Not a Sharkovsky key: {m!r}")
    if m == 0:
        return (-1, 0, 0)

    a = 0
    while m % 2 == 0:
        m //= 2
        a += 1
    if m == 1:
        return (0, a, 0)
    return (2, -a, -m)


def sharkovsky_compare(m: SharkovskyKey, n: SharkovskyKey) -> int:
    """1 if m comes before n, -1 if after, 0 if equal."""
    a, b = sharkovsky_key(m), sharkovsky_key(n)
    return (a > b) - (a < b)


def sh_set(k: SharkovskyKey, limit: int) -> Set[int]:
    if limit < 1:
        raise ValueError(f"limit must be at least 1, got {limit}")
    if k == 0:
        return set()
    return {m for m in range(1, limit + 1) if sharkovsky_compare(k, m) >= 0}


def _in_sh(k: SharkovskyKey, m: SharkovskyKey) -> bool:
    if k == 0 or m == 0:
        return False
    return sharkovsky_compare(k, m) >= 0


@dataclass(frozen=True)
class MrpPoint:
    t: Fraction
    m: SharkovskyKey

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", Fraction(self.t))
        sharkovsky_key(self.m)

    @property
    def is_marker(self) -> bool:
        return self.m == 0 or self.m is TWO_INFINITY


@dataclass(frozen=True)
class MrpHull:
    lo: MrpPoint
    hi: MrpPoint

    def __post_init__(self) -> None:
        if self.lo.t > self.hi.t:
            raise ValueError(f"Hull endpoints out of order: {self.lo.t} > {self.hi.t}")

    def __contains__(self, point: MrpPoint) -> bool:
        return mrp_hull_contains(self, point)


def mrp_hull_contains(hull: MrpHull, point: MrpPoint) -> bool:
    t = point.t
    if hull.lo.t < t < hull.hi.t:
        return True
    if t == hull.lo.t and _in_sh(hull.lo.m, point.m):
        return True
    return t == hull.hi.t and _in_sh(hull.hi.m, point.m)


def _as_point(x) -> MrpPoint:
    if isinstance(x, MrpPoint):
        return x
    t, m = x
    return MrpPoint(Fraction(t), m)


def hull_of(points: Iterable) -> MrpHull:
    """Hull spanned by the extreme rotation numbers of `points`, with the Sharkovsky-largest m at each."""
    points = [_as_point(x) for x in points]
    if not points:
        raise ValueError("The hull of an empty set of modified rotation pairs is undefined")

    def extreme(t):
        best = max((x.m for x in points if x.t == t), key=sharkovsky_key)
        return MrpPoint(t, best)

    return MrpHull(extreme(min(x.t for x in points)), extreme(max(x.t for x in points)))
