# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

"""Checks on colors, code functions, states, countries and trains.

Premises are stated on the canonically oriented pattern. Checks relating
points on different branches use the unrounded code lift.
"""

import logging
from abc import abstractmethod
from fractions import Fraction
from typing import Optional

from ..errors import NoCanonicalOrdering
from ..errors import PhiUndefined
from ..errors import SearchBudgetExceeded
from ..pattern import canonical_branch_ordering
from ..pattern import canonicalize
from ..plinear import build_plinear
from ..plinear import iter_periodic_orbits
from ..rotation import ONE_THIRD
from ..rotation import chi
from ..rotation import is_order_preserving
from ..rotation import is_primitive_three_cycle
from ..rotation import phi
from ..rotation import trains
from . import Check
from . import CheckResult
from . import PatternAnalysis
from . import check_registry

LOG = logging.getLogger(__name__)

HALF = Fraction(1, 2)


class RegularCheck(Check):
    """Premise: a regular pattern fixing only the hub and meeting all three branches."""

    def check(self, analysis: PatternAnalysis) -> CheckResult:
        if not analysis.regular:
            return CheckResult.vacuous("not regular")
        if not analysis.fixes_only_hub:
            return CheckResult.vacuous("the P-linear map fixes a point other than the hub")
        if not analysis.all_branches:
            return CheckResult.vacuous("confined to fewer than three branches")
        return self.check_regular(analysis)

    @abstractmethod
    def check_regular(self, analysis: PatternAnalysis) -> CheckResult:
        pass


class TwistCheck(Check):
    """Premise: a triod-twist pattern with rotation number in (low, high)."""

    low: Fraction = Fraction(0)
    high: Fraction = Fraction(1)
    high_inclusive = False

    def check(self, analysis: PatternAnalysis) -> CheckResult:
        if not analysis.twist:
            return CheckResult.vacuous("not triod-twist")
        rho = analysis.rho
        above = rho <= self.high if self.high_inclusive else rho < self.high
        if not (self.low < rho and above):
            return CheckResult.vacuous(f"rotation number {rho} outside the regime")
        return self.check_twist(analysis)

    @abstractmethod
    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        pass


class GreenRegime(TwistCheck):
    high = ONE_THIRD


class RedRegime(TwistCheck):
    low = ONE_THIRD


@check_registry.register("canonical_ordering")
class CanonicalOrdering(RegularCheck):

    def check_regular(self, analysis: PatternAnalysis) -> CheckResult:
        try:
            canonical_branch_ordering(analysis.pattern)
        except NoCanonicalOrdering as e:
            return CheckResult.failed(str(e))
        return CheckResult.passed()


@check_registry.register("black_three_loops")
class BlackThreeLoops(RegularCheck):
    """Every point lies on a black loop of length 3."""

    def check_regular(self, analysis: PatternAnalysis) -> CheckResult:
        g = analysis.oriented_graph

        def black(x, y):
            return g.has_arrow(x, y) and g.thirds(x, y) == 1

        for x in g.vertices:
            found = any(black(x, y) and black(y, z) and black(z, x) for y in g.vertices for z in g.vertices)
            if not found:
                return CheckResult.failed(f"x{x} lies on no black loop of length 3", point=x)
        return CheckResult.passed()


@check_registry.register("green_points_inward")
class GreenPointsInward(RegularCheck):
    """Green points move towards the hub."""

    def check_regular(self, analysis: PatternAnalysis) -> CheckResult:
        o = analysis.oriented
        for t, color in enumerate(analysis.colors):
            if color == "green" and o.rank(o.image(t)) >= o.rank(t):
                return CheckResult.failed(f"Green x{t} does not move inward", point=t)
        return CheckResult.passed()


@check_registry.register("all_branches_visited")
class AllBranchesVisited(TwistCheck):
    """A triod-twist cycle with positive rotation number meets every branch."""

    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        if not analysis.all_branches:
            return CheckResult.failed(f"{analysis.pattern} misses a branch", branches=len(analysis.pattern.branches))
        return CheckResult.passed()


@check_registry.register("color_bifurcation")
class ColorBifurcation(TwistCheck):
    """No red points below 1/3, only the primitive 3-cycle at 1/3, no green points above."""

    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        rho = analysis.rho
        colors = set(analysis.colors)
        if rho < ONE_THIRD and "red" in colors:
            return CheckResult.failed("Red point below one third", rho=rho)
        if rho == ONE_THIRD and not is_primitive_three_cycle(analysis.pattern):
            return CheckResult.failed("Rotation number 1/3 without the primitive 3-cycle", rho=rho)
        if rho > ONE_THIRD and "green" in colors:
            return CheckResult.failed("Green point above one third", rho=rho)
        return CheckResult.passed()


@check_registry.register("twist_order_preserving")
class TwistOrderPreserving(TwistCheck):
    low = Fraction(-1)

    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        if not is_order_preserving(analysis.pattern):
            return CheckResult.failed(f"{analysis.pattern} is twist but not order-preserving")
        return CheckResult.passed()


@check_registry.register("twist_rho_below_half")
class TwistRhoBelowHalf(TwistCheck):
    low = Fraction(-1)
    high = Fraction(2)

    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        if analysis.rho >= HALF:
            return CheckResult.failed("Twist pattern with rotation number at least 1/2", rho=analysis.rho)
        return CheckResult.passed()


@check_registry.register("state_count")
class StateCount(TwistCheck):
    """Fewer than m/2 + 2 green states and fewer than m/2 + 2 red states."""

    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        m = analysis.modality
        for color in ("green", "red"):
            count = sum(1 for s in analysis.states if s.color == color)
            if 2 * count >= m + 4:
                return CheckResult.failed(f"Too many {color} states", count=count, modality=m)
        return CheckResult.passed()


@check_registry.register("green_state_oscillation")
class GreenStateOscillation(GreenRegime):

    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        bound = 1 - 3 * analysis.rho
        for s in analysis.states:
            if s.color == "green":
                value = chi(analysis.table, s.points)
                if value > bound:
                    return CheckResult.failed(f"Green state {s.points} oscillates too much", chi=value, bound=bound)
        return CheckResult.passed()


@check_registry.register("red_state_oscillation")
class RedStateOscillation(RedRegime):

    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        bound = 3 * analysis.rho - 1
        for s in analysis.states:
            if s.color == "red":
                value = chi(analysis.table, s.points)
                if value > bound:
                    return CheckResult.failed(f"Red state {s.points} oscillates too much", chi=value, bound=bound)
        return CheckResult.passed()


@check_registry.register("country_oscillation")
class CountryOscillation(GreenRegime):

    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        rho = analysis.rho
        for c in analysis.countries:
            bound = len(c.states) * (1 - 2 * rho) - rho
            value = chi(analysis.table, c.points)
            if value > bound:
                return CheckResult.failed(f"Country {c.points} oscillates too much", chi=value, bound=bound)
        return CheckResult.passed()


@check_registry.register("black_green_movement")
class BlackGreenMovement(GreenRegime):
    """Every black point has green points within rho of its code on both sides."""

    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        L = analysis.table.lift
        rho = analysis.rho
        greens = [t for t, c in enumerate(analysis.colors) if c == "green"]
        for x, c in enumerate(analysis.colors):
            if c != "black":
                continue
            if not any(L[x] - L[z] <= rho for z in greens):
                return CheckResult.failed(f"No green point with L(x{x}) - L(z) <= rho", point=x, rho=rho)
            if not any(L[z] - L[x] <= rho for z in greens):
                return CheckResult.failed(f"No green point with L(z) - L(x{x}) <= rho", point=x, rho=rho)
        return CheckResult.passed()


@check_registry.register("black_red_movement")
class BlackRedMovement(RedRegime):
    """Every black point has red points within 4rho - 5/3 below and 5rho - 5/3 above."""

    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        L = analysis.table.lift
        rho = analysis.rho
        below, above = 4 * rho - Fraction(5, 3), 5 * rho - Fraction(5, 3)
        reds = [t for t, c in enumerate(analysis.colors) if c == "red"]
        for b, c in enumerate(analysis.colors):
            if c != "black":
                continue
            if not any(L[b] - L[r] <= below for r in reds):
                return CheckResult.failed(f"No red point with L(x{b}) - L(r) <= 4rho - 5/3", point=b, bound=below)
            if not any(L[r] - L[b] <= above for r in reds):
                return CheckResult.failed(f"No red point with L(r) - L(x{b}) <= 5rho - 5/3", point=b, bound=above)
        return CheckResult.passed()


@check_registry.register("chi_bound")
class ChiBound(TwistCheck):
    """The code of a twist cycle oscillates by less than modality + 3."""

    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        if analysis.table is None:
            return CheckResult.vacuous("no code function at rotation number 1/3")
        value = chi(analysis.table)
        if value >= analysis.modality + 3:
            return CheckResult.failed("chi(P) >= m + 3", chi=value, modality=analysis.modality)
        return CheckResult.passed()


def _phi(o, country, which, countries) -> Optional[object]:
    try:
        return phi(o, country, which, countries)
    except PhiUndefined:
        return None


@check_registry.register("phi_cube_closer")
class PhiCubeCloser(GreenRegime):
    """Three steps of the first country map move a country towards the hub, unless it is innermost."""

    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        o = analysis.oriented
        countries = analysis.countries
        exercised = False
        for c in countries:
            image = c
            for _ in range(3):
                image = _phi(o, image, 1, countries)
                if image is None:
                    break
            if image is None:
                continue

            inner = min(o.rank(t) for t in c.points)
            if not any(d.branch == c.branch and max(o.rank(t) for t in d.points) < inner for d in countries):
                continue

            exercised = True
            if image.branch != c.branch or max(o.rank(t) for t in image.points) >= inner:
                return CheckResult.failed(f"Country {c.points} is not beyond its third image {image.points}")

        return CheckResult.passed() if exercised else CheckResult.vacuous("no country with three images")


@check_registry.register("phi_absent_single_country")
class PhiAbsentSingleCountry(GreenRegime):
    """Without either country map the greens form one country on one branch."""

    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        o = analysis.oriented
        countries = analysis.countries
        exercised = False
        for c in countries:
            try:
                if phi(o, c, 1, countries) is not None or phi(o, c, 2, countries) is not None:
                    continue
            except PhiUndefined:
                continue

            exercised = True
            greens = [t for t, color in enumerate(analysis.colors) if color == "green"]
            if any(o.branch(t) != c.branch for t in greens):
                return CheckResult.failed(f"Country {c.points} has no images but other branches hold green points")
            if sum(1 for d in countries if d.branch == c.branch) != 1:
                return CheckResult.failed(f"Country {c.points} has no images but its branch holds several countries")

        return CheckResult.passed() if exercised else CheckResult.vacuous("every country has an image")


@check_registry.register("black_train_return")
class BlackTrainReturn(TwistCheck):
    """A black train returning to its branch ends at or beyond its start."""

    low = Fraction(-1)
    high = ONE_THIRD
    high_inclusive = True

    def __init__(self, max_len: int = 9, **kwargs) -> None:
        super().__init__(**kwargs)
        self.max_len = max_len

    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        o = analysis.oriented
        for train in trains(o, "black", self.max_len):
            first, last = train.points[0], train.points[-1]
            if o.branch(first) == o.branch(last) and o.rank(last) < o.rank(first):
                return CheckResult.failed(f"Black train {train.points} returns inside its start", length=train.length)
        return CheckResult.passed()


def _innermost(states, color, branch):
    found = [s for s in states if s.color == color and s.branch == branch]
    return found[0] if found else None


@check_registry.register("red_innermost_states")
class RedInnermostStates(RedRegime):
    """Innermost red states two branches apart have close codes."""

    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        L = analysis.table.lift
        bound = 2 * analysis.rho - Fraction(2, 3)
        exercised = False
        for j in range(3):
            r0 = _innermost(analysis.states, "red", j)
            r2 = _innermost(analysis.states, "red", (j + 2) % 3)
            if r0 is None or r2 is None:
                continue
            exercised = True
            if not any(L[x] - L[y] < bound for x in r0.points for y in r2.points):
                return CheckResult.failed(f"Innermost red states of b{j} and b{(j + 2) % 3} too far apart", bound=bound)
        return CheckResult.passed() if exercised else CheckResult.vacuous("no pair of red branches")


@check_registry.register("adjacent_red_states")
class AdjacentRedStates(RedRegime):

    def check_twist(self, analysis: PatternAnalysis) -> CheckResult:
        L = analysis.table.values
        bound = 3 * analysis.rho - 1
        exercised = False
        for j in range(3):
            reds = [s for s in analysis.states if s.color == "red" and s.branch == j]
            for inner, outer in zip(reds, reds[1:]):
                exercised = True
                for r in outer.points:
                    for s in inner.points:
                        if L[r] - L[s] > bound:
                            return CheckResult.failed(
                                f"Adjacent red states on b{j} differ too much", value=L[r] - L[s], bound=bound
                            )
        return CheckResult.passed() if exercised else CheckResult.vacuous("no adjacent red states")


@check_registry.register("twist_oracle")
class TwistOracle(Check):
    """The code criterion agrees with a bounded search for forced cycles of the same rotation number.

    Periods q, 2q, ... up to `multiplier` * q are searched in turn on the map of
    the oriented pattern, stopping at the first witness. A search expanding more
    than `budget` walks is inconclusive.
    """

    max_pattern_period = 6

    def __init__(self, multiplier: int = 3, budget: Optional[int] = 20000, **kwargs) -> None:
        super().__init__(**kwargs)
        self.multiplier = multiplier
        self.budget = budget

    def witness(self, o) -> Optional[object]:
        rho = o.rotation_number
        own = canonicalize(o)
        f = build_plinear(o)
        for k in range(1, self.multiplier + 1):
            n = k * rho.denominator
            for orbit in iter_periodic_orbits(f, n, rotation_number=rho, periods=(n,), budget=self.budget):
                if orbit.pattern != own:
                    return orbit.pattern
        return None

    def check(self, analysis: PatternAnalysis) -> CheckResult:
        if not analysis.rotational:
            return CheckResult.vacuous("not regular or fixing a point other than the hub")

        o = analysis.oriented
        bound = self.multiplier * o.rotation_number.denominator
        try:
            witness = self.witness(o)
        except SearchBudgetExceeded as e:
            LOG.warning("Twist oracle inconclusive for %s: %s", o, e)
            return CheckResult.inconclusive(str(e))

        if analysis.twist and witness is not None:
            return CheckResult.failed(
                f"{o} passes the code criterion but forces {witness} of the same rotation number",
                rho=o.rotation_number,
            )
        if not analysis.twist and witness is None:
            LOG.warning("Twist oracle inconclusive for %s up to period %s", o, bound)
            return CheckResult.inconclusive(f"No witness up to period {bound}")
        return CheckResult.passed()
