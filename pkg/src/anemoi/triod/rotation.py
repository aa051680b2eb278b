# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

"""Rotation theory of triod cycles: colors, code functions, states, countries and trains.

The statements about states, countries and trains are made for regular
patterns whose P-linear map fixes no point but the hub, with the branches
canonically ordered; `oriented` relabels a pattern accordingly when it can.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import floor
from math import gcd
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Optional
from typing import Tuple

from .errors import EmptySubset
from .errors import NoCanonicalOrdering
from .errors import NotRegular
from .errors import PhiUndefined
from .errors import RotationOneThird
from .errors import WrongRegime
from .graph import COLORS
from .graph import color_of
from .graph import mrp_of
from .pattern import Pattern
from .pattern import PatternClassification
from .pattern import canonical_branch_ordering
from .pattern import ensure_valid
from .plinear import build_plinear
from .plinear import fixes_only_hub
from .plinear import is_regular

LOG = logging.getLogger(__name__)

ONE_THIRD = Fraction(1, 3)


@lru_cache(maxsize=8192)
def oriented(p: Pattern) -> Pattern:
    """`p` with canonically ordered branches, or `p` itself when no such ordering exists.

    Use `has_canonical_ordering` to tell the two cases apart.
    """
    try:
        return canonical_branch_ordering(p)
    except (NotRegular, NoCanonicalOrdering):
        return p


def has_canonical_ordering(p: Pattern) -> bool:
    try:
        canonical_branch_ordering(p)
    except (NotRegular, NoCanonicalOrdering):
        return False
    return True


def point_colors(p: Pattern) -> Tuple[str, ...]:
    ensure_valid(p)
    return tuple(color_of(p.shift(t)) for t in range(p.period))


def color_census(p: Pattern) -> dict:
    colors = point_colors(p)
    return {c: colors.count(c) for c in COLORS}


@dataclass(frozen=True)
class CodeTable:
    """Code values of every point, indexed by time.

    `values` follows the recursion L(f^k x0) = k*rho - [t_k]; `lift` drops the
    integer part, L(f^k x0) = k*rho - t_k. The two differ by a constant on each
    branch.
    """

    pattern: Pattern
    base: int
    rho: Fraction
    values: Tuple[Fraction, ...]
    lift: Tuple[Fraction, ...]
    partial_sums: Tuple[Fraction, ...]

    def __getitem__(self, t: int) -> Fraction:
        return self.values[t]


def code_table(p: Pattern, x0: int = 0) -> CodeTable:
    ensure_valid(p)
    rho = p.rotation_number
    if rho == ONE_THIRD:
        raise RotationOneThird(f"{p} has rotation number 1/3, the code function is not defined")

    n = p.period
    values = [None] * n
    lift = [None] * n
    sums = []
    t_k = Fraction(0)
    x = x0
    for k in range(n):
        sums.append(t_k)
        values[x] = k * rho - floor(t_k)
        lift[x] = k * rho - t_k
        t_k += Fraction(p.shift(x), 3)
        x = p.image(x)

    assert x == x0 and n * rho - floor(t_k) == 0, (p, x0)
    return CodeTable(p, x0, rho, tuple(values), tuple(lift), tuple(sums))


def code_differences_consistent(p: Pattern) -> bool:
    """Differences of codes are independent of the base point (across branches, modulo 1)."""
    tables = [code_table(p, x0) for x0 in range(p.period)]
    first = tables[0]
    for table in tables[1:]:
        for x in range(p.period):
            for y in range(p.period):
                a = first[x] - first[y]
                b = table[x] - table[y]
                if p.branch(x) == p.branch(y):
                    if a != b:
                        return False
                elif (a - b).denominator != 1:
                    return False
    return True


class Monotonicity(Enum):
    DECREASING = "Decreasing"
    NON_DECREASING = "NonDecreasing"
    STRICTLY_INCREASING = "StrictlyIncreasing"


def code_monotonicity(p: Pattern, table: CodeTable) -> Monotonicity:
    """Classify the code function.

    For rho <= 1/3 points farther from the hub must not have larger codes, for
    rho > 1/3 they must not have smaller ones. Strictness forbids equal codes on
    consecutive points of a branch.
    """
    strict = True
    for b in p.branches:
        line = p.on_branch(b)
        for inner, outer in zip(line, line[1:]):
            lo, hi = table[inner], table[outer]
            if table.rho <= ONE_THIRD and hi > lo:
                return Monotonicity.DECREASING
            if table.rho > ONE_THIRD and hi < lo:
                return Monotonicity.DECREASING
            if hi == lo:
                strict = False
    return Monotonicity.STRICTLY_INCREASING if strict else Monotonicity.NON_DECREASING


def is_order_preserving(p: Pattern) -> bool:
    ensure_valid(p)
    for b in p.branches:
        line = p.on_branch(b)
        for i, y in enumerate(line):
            for x in line[i + 1 :]:
                fx, fy = p.points[p.image(x)], p.points[p.image(y)]
                if fx[0] == fy[0] and fx[1] < fy[1]:
                    return False
    return True


def is_primitive_three_cycle(p: Pattern) -> bool:
    return p.period == 3 and len(p.branches) == 3


def is_triod_twist(p: Pattern) -> bool:
    """Regular, fixing only the hub, canonically ordered, with a coprime
    rotation pair and a strictly increasing code function.

    Rotation pairs depend on the labelling of the branches; the canonical one is used.
    """
    ensure_valid(p)
    if not is_regular(p) or not fixes_only_hub(p):
        return False
    if not has_canonical_ordering(p):
        LOG.warning("%s is regular and fixes only the hub but has no canonical ordering", p)
        return False

    o = oriented(p)
    if gcd(*o.rotation_pair) != 1:
        return False
    if o.rotation_number == ONE_THIRD:
        return is_primitive_three_cycle(p)
    return code_monotonicity(o, code_table(o)) is Monotonicity.STRICTLY_INCREASING


def chi(table: CodeTable, subset: Optional[Iterable[int]] = None, lift: bool = False) -> Fraction:
    """Oscillation max L - min L of the code over `subset` (all points by default)."""
    values = table.lift if lift else table.values
    subset = range(len(values)) if subset is None else list(subset)
    codes = [values[t] for t in subset]
    if not codes:
        raise EmptySubset("The oscillation of an empty set of points is undefined")
    return max(codes) - min(codes)


@dataclass(frozen=True)
class State:
    color: str
    branch: int
    points: Tuple[int, ...]

    @property
    def inner(self) -> int:
        return self.points[0]

    @property
    def outer(self) -> int:
        return self.points[-1]


@dataclass(frozen=True)
class Country:
    branch: int
    states: Tuple[State, ...]

    @property
    def points(self) -> Tuple[int, ...]:
        return tuple(t for s in self.states for t in s.points)


def states(p: Pattern) -> List[State]:
    """Maximal runs of one color along each branch, ordered from the hub outwards."""
    colors = point_colors(p)
    result = []
    for b in p.branches:
        run = []
        for t in p.on_branch(b):
            if run and colors[run[-1]] != colors[t]:
                result.append(State(colors[run[-1]], b, tuple(run)))
                run = []
            run.append(t)
        result.append(State(colors[run[-1]], b, tuple(run)))
    return result


def _linked(p: Pattern, outer: State, inner: State) -> bool:
    """Some a in `outer` and b in `inner` with b >= f(a)."""
    for a in outer.points:
        fa = p.points[p.image(a)]
        for b in inner.points:
            if p.branch(b) == fa[0] and p.rank(b) >= fa[1]:
                return True
    return False


def countries(p: Pattern) -> List[Country]:
    result = []
    for b in p.branches:
        greens = [s for s in states(p) if s.branch == b and s.color == "green"]
        group = []
        for s in greens:
            if group and not _linked(p, s, group[-1]):
                result.append(Country(b, tuple(group)))
                group = []
            group.append(s)
        if group:
            result.append(Country(b, tuple(group)))
    return result


def _country_beyond(p: Pattern, y: int, colors, all_countries: List[Country]) -> Optional[Country]:
    for c in all_countries:
        if y in c.points:
            return c
    if colors[y] != "black":
        return None
    beyond = [c for c in all_countries if c.branch == p.branch(y) and all(p.rank(z) > p.rank(y) for z in c.points)]
    if not beyond:
        return None
    return min(beyond, key=lambda c: p.rank(c.points[0]))


def phi(p: Pattern, country: Country, which: int, all_countries: Optional[List[Country]] = None) -> Optional[Country]:
    """The country reached from `country` through the next (1) or second next (2) branch.

    Returns None when the map does not exist; raises `PhiUndefined` when the
    inner images it follows are not black.
    """
    if which not in (1, 2):
        raise ValueError(f"which must be 1 or 2, got {which}")
    if p.rotation_number >= ONE_THIRD:
        raise WrongRegime(f"Country maps need rotation number below 1/3, {p} has {p.rotation_number}")

    colors = point_colors(p)
    if all_countries is None:
        all_countries = countries(p)

    c = p.image(country.states[0].inner)
    if colors[c] != "black":
        raise PhiUndefined(f"c(A) = x{c} is {colors[c]}")

    y = p.image(c)
    if which == 2:
        if colors[y] != "black":
            raise PhiUndefined(f"f(c(A)) = x{y} is {colors[y]}")
        y = p.image(y)

    return _country_beyond(p, y, colors, all_countries)


@dataclass(frozen=True)
class Train:
    points: Tuple[int, ...]
    kind: str

    @property
    def length(self) -> int:
        return len(self.points) - 1


def trains(p: Pattern, kind: str, max_len: int) -> Iterator[Train]:
    """Sequences x_0 .. x_n with x_{i+1} >= f(x_i), 1 <= n <= max_len, of the given kind."""
    if kind not in ("green", "black", "red", "mixed"):
        raise ValueError(f"Unknown train kind {kind!r}")
    if max_len < 1:
        raise ValueError(f"max_len must be at least 1, got {max_len}")

    colors = point_colors(p)
    allowed = [t for t in range(p.period) if kind == "mixed" or colors[t] == kind]

    def extend(train):
        if len(train) > 1 and (kind != "mixed" or len({colors[t] for t in train}) > 1):
            yield Train(tuple(train), kind)
        if len(train) > max_len:
            return
        for t in p.above(p.image(train[-1])):
            if t in allowed:
                train.append(t)
                yield from extend(train)
                train.pop()

    for t in allowed:
        yield from extend([t])


def classify(p: Pattern) -> PatternClassification:
    from .conjugacy import build_conjugacy

    ensure_valid(p)
    o = oriented(p)
    regular = is_regular(p)
    twist = is_triod_twist(p)
    f = build_plinear(p)

    table = None if o.rotation_number == ONE_THIRD else code_table(o)
    census = {c: 0 for c in COLORS}
    for s in states(o):
        census[s.color] += 1

    laps = bound = None
    if twist:
        report = build_conjugacy(p)
        laps, bound = report.laps, report.bound

    LOG.debug("Classified %s: rho=%s regular=%s twist=%s", p, o.rotation_number, regular, twist)

    return PatternClassification(
        pattern=p,
        oriented=o,
        rotation_number=o.rotation_number,
        rotation_pair=o.rotation_pair,
        mrp=mrp_of(o.rotation_pair),
        is_regular=regular,
        is_order_preserving=is_order_preserving(p),
        is_triod_twist=twist,
        modality=f.modality,
        color_census=color_census(o),
        chi=None if table is None else chi(table),
        state_census=census,
        countries=len(countries(o)),
        laps=laps,
        bound=bound,
    )
