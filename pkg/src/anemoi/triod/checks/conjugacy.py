# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

from math import ceil

from ..conjugacy import psi_laps
from ..errors import BoundViolated
from ..errors import EquivarianceFailure
from ..rotation import chi
from . import Check
from . import CheckResult
from . import PatternAnalysis
from . import check_registry


class ConjugacyCheck(Check):
    max_pattern_period = 7

    def check(self, analysis: PatternAnalysis) -> CheckResult:
        if not analysis.twist:
            return CheckResult.vacuous("not triod-twist")
        try:
            report = analysis.conjugacy
        except EquivarianceFailure as e:
            return CheckResult.failed(str(e))
        return self.check_report(analysis, report)

    def check_report(self, analysis, report) -> CheckResult:
        return CheckResult.passed()


@check_registry.register("conjugacy_equivariance")
class ConjugacyEquivariance(ConjugacyCheck):
    """psi(f(x)) = psi(x) + p/q mod 1 and psi is onto the rotation orbit."""


@check_registry.register("conjugacy_laps")
class ConjugacyLaps(ConjugacyCheck):
    """psi has at most modality + 3 laps."""

    def check_report(self, analysis, report) -> CheckResult:
        try:
            psi_laps(report, analysis.pattern)
        except BoundViolated as e:
            return CheckResult.failed(str(e), laps=report.laps, bound=report.bound)
        return CheckResult.passed()


@check_registry.register("conjugacy_chi_consistency")
class ConjugacyChiConsistency(ConjugacyCheck):
    """The normalised code takes at most ceil(chi) + 1 integer parts."""

    def check_report(self, analysis, report) -> CheckResult:
        limit = ceil(chi(analysis.table)) + 1 if analysis.table is not None else 1
        if report.integer_parts > limit:
            return CheckResult.failed("Too many integer parts", parts=report.integer_parts, limit=limit)
        return CheckResult.passed()
