# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

import logging

import networkx as nx

from ..errors import CrossCheckMismatch
from ..graph import fundamental_loop
from ..graph import geometric_arrows
from ..graph import is_transitive
from ..graph import rotation_set
from . import Check
from . import CheckResult
from . import PatternAnalysis
from . import check_registry

LOG = logging.getLogger(__name__)


@check_registry.register("reach_rule_oracle")
class ReachRuleOracle(Check):
    """Arrows from the marked-point reach rule equal arrows found by evaluating the map."""

    max_pattern_period = 4

    def check(self, analysis: PatternAnalysis) -> CheckResult:
        rule = {(x, y) for x, y, _, _ in analysis.graph.arrows()}
        sampled = geometric_arrows(analysis.pattern)
        if rule != sampled:
            return CheckResult.failed(
                "Reach rule and sampling disagree",
                only_rule=sorted(rule - sampled),
                only_sampled=sorted(sampled - rule),
            )
        return CheckResult.passed()


@check_registry.register("loop_displacement_integral")
class LoopDisplacementIntegral(Check):
    """Every elementary loop turns a whole number of times around the hub."""

    def check(self, analysis: PatternAnalysis) -> CheckResult:
        g = analysis.graph
        for cycle in nx.simple_cycles(g.graph):
            thirds = sum(g.thirds(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))
            if thirds % 3:
                return CheckResult.failed(f"Loop {cycle} has displacement {thirds}/3", thirds=thirds)
        return CheckResult.passed()


@check_registry.register("graph_transitive")
class GraphTransitive(Check):
    """The oriented graph of a cycle is strongly connected."""

    def check(self, analysis: PatternAnalysis) -> CheckResult:
        if not is_transitive(analysis.graph):
            return CheckResult.failed(f"The oriented graph of {analysis.pattern} is not transitive")
        return CheckResult.passed()


@check_registry.register("fundamental_rotation_census")
class FundamentalRotationCensus(Check):
    """The fundamental loop carries the rotation pair of the cycle, inside the rotation set."""

    def check(self, analysis: PatternAnalysis) -> CheckResult:
        p = analysis.pattern
        loop = fundamental_loop(p)
        if loop.rotation_pair != p.rotation_pair:
            return CheckResult.failed(
                "Fundamental loop and pattern disagree",
                loop=loop.displacement,
                pattern=p.displacement,
            )
        lo, hi = rotation_set(analysis.graph)
        if not lo <= loop.rotation_number <= hi:
            return CheckResult.failed("Rotation number outside the rotation set", rho=loop.rotation_number, lo=lo, hi=hi)
        return CheckResult.passed()


@check_registry.register("regularity_cross_check")
class RegularityCrossCheck(Check):
    """Orbit search and the mixed two-loop criterion agree on regularity."""

    def check(self, analysis: PatternAnalysis) -> CheckResult:
        p = analysis.pattern
        try:
            regular = analysis.regular
        except CrossCheckMismatch as e:
            return CheckResult.failed(str(e))

        # A pattern of period 2 on two branches is itself a primitive 2-cycle
        if p.period == 2 and len(p.branches) == 2 and regular:
            return CheckResult.failed(f"{p} is a primitive 2-cycle but was found regular")
        return CheckResult.passed()
