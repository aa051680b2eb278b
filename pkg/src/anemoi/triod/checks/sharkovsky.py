# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

from ..graph import rotation_set
from ..plinear import mrp_set
from ..sharkovsky import MrpHull
from ..sharkovsky import MrpPoint
from ..sharkovsky import sharkovsky_key
from . import Check
from . import CheckResult
from . import PatternAnalysis
from . import check_registry


@check_registry.register("mrp_hull_containment")
class MrpHullContainment(Check):
    """Modified rotation pairs of forced cycles lie in the hull spanned by the rotation set.

    The hull ends are the extremes of the rotation set of the oriented graph;
    at each end m is the Sharkovsky-largest value observed there, or the
    empty marker 0 when no forced cycle sits at that end.
    """

    max_pattern_period = 5

    def __init__(self, max_period: int = 6, **kwargs) -> None:
        super().__init__(**kwargs)
        self.max_period = max_period

    def check(self, analysis: PatternAnalysis) -> CheckResult:
        if not analysis.rotational:
            return CheckResult.vacuous("not regular or fixing a point other than the hub")

        points = [MrpPoint(t, m) for t, m in mrp_set(analysis.pattern, self.max_period)]
        if not points:
            return CheckResult.vacuous("no forced cycle with nonzero rotation")

        lo, hi = rotation_set(analysis.graph)

        def end(t):
            found = [x.m for x in points if x.t == t]
            return MrpPoint(t, max(found, key=sharkovsky_key) if found else 0)

        hull = MrpHull(end(lo), end(hi))
        for x in points:
            if x not in hull:
                return CheckResult.failed(f"Forced pair ({x.t}, {x.m}) outside the hull", t=x.t, m=x.m, lo=lo, hi=hi)
        return CheckResult.passed()
