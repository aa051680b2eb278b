# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

"""Run the named checks over every pattern up to a period and collect the evidence."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from dataclasses import field
from dataclasses import fields
from functools import partial
from typing import Dict
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import tqdm

from .checks import DEFAULT_CHECKS
from .checks import Check
from .checks import CheckResult
from .checks import Outcome
from .checks import PatternAnalysis
from .checks import create_check
from .checks import normalise_name
from .errors import TriodError
from .errors import UnknownCheck
from .pattern import Pattern
from .pattern import pattern_count
from .records import pattern_record
from .sources import source_registry

LOG = logging.getLogger(__name__)


@dataclass
class SuiteConfig:
    max_period: int
    checks: Tuple[str, ...] = DEFAULT_CHECKS
    twist_oracle_bound_multiplier: int = 3
    twist_oracle_budget: Optional[int] = 20000
    jobs: int = 1
    deterministic: bool = False
    progress: bool = True
    period_caps: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.max_period < 1:
            raise ValueError(f"max_period must be at least 1, got {self.max_period}")
        if self.twist_oracle_bound_multiplier < 1:
            raise ValueError(f"twist_oracle_bound_multiplier must be at least 1, got {self.twist_oracle_bound_multiplier}")
        if self.twist_oracle_budget is not None and self.twist_oracle_budget < 1:
            raise ValueError(f"twist_oracle_budget must be at least 1, got {self.twist_oracle_budget}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {self.jobs}")

        self.checks = tuple(dict.fromkeys(normalise_name(c) for c in self.checks))
        self.period_caps = {normalise_name(k): v for k, v in self.period_caps.items()}
        for name in list(self.checks) + list(self.period_caps):
            if name not in DEFAULT_CHECKS:
                raise UnknownCheck(f"Unknown check {name!r}")

    @classmethod
    def from_dict(cls, data: dict) -> "SuiteConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"Unknown configuration keys: {unknown}")
        return cls(**data)

    def create_checks(self) -> List[Check]:
        result = []
        for name in self.checks:
            kwargs = {}
            if name == "twist_oracle":
                kwargs["multiplier"] = self.twist_oracle_bound_multiplier
                kwargs["budget"] = self.twist_oracle_budget
            if name in self.period_caps:
                kwargs["max_pattern_period"] = self.period_caps[name]
            result.append(create_check(name, **kwargs))
        return result


@dataclass
class CheckSummary:
    name: str
    examined: int = 0
    passed: int = 0
    vacuous: int = 0
    failed: int = 0
    inconclusive: int = 0
    failures: List[dict] = field(default_factory=list)

    def add(self, pattern: Pattern, result: CheckResult) -> None:
        self.examined += 1
        if result.outcome is Outcome.PASS:
            self.passed += 1
        elif result.outcome is Outcome.VACUOUS:
            self.vacuous += 1
        elif result.outcome is Outcome.INCONCLUSIVE:
            self.inconclusive += 1
        else:
            self.failed += 1
            self.failures.append(
                {
                    "check": self.name,
                    "pattern": pattern_record(pattern),
                    "message": result.message,
                    "values": dict(result.values),
                }
            )

    def merge(self, other: "CheckSummary") -> "CheckSummary":
        assert self.name == other.name, (self.name, other.name)
        return CheckSummary(
            self.name,
            self.examined + other.examined,
            self.passed + other.passed,
            self.vacuous + other.vacuous,
            self.failed + other.failed,
            self.inconclusive + other.inconclusive,
            self.failures + other.failures,
        )

    def to_dict(self) -> dict:
        assert self.examined == self.passed + self.vacuous + self.failed + self.inconclusive, self
        return {
            "examined": self.examined,
            "pass": self.passed,
            "vacuous": self.vacuous,
            "fail": self.failed,
            "inconclusive": self.inconclusive,
            "failures": self.failures,
        }


@dataclass
class SuiteReport:
    max_period: int
    patterns: int
    checks: Dict[str, CheckSummary]
    wall_time: Optional[float] = None

    @property
    def failures(self) -> int:
        return sum(s.failed for s in self.checks.values())

    @property
    def inconclusive(self) -> int:
        return sum(s.inconclusive for s in self.checks.values())

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        result = {
            "max_period": self.max_period,
            "patterns": self.patterns,
            "failures": self.failures,
            "inconclusive": self.inconclusive,
            "checks": {name: s.to_dict() for name, s in self.checks.items()},
        }
        if self.wall_time is not None:
            result["wall_time"] = round(self.wall_time, 3)
        return result


def verify_pattern(pattern: Pattern, checks: Sequence[Check]) -> List[Tuple[str, CheckResult]]:
    """Run every applicable check on one pattern."""
    analysis = PatternAnalysis(pattern)
    results = []
    for check in checks:
        if not check.applies(pattern):
            continue
        try:
            result = check(analysis)
        except TriodError as e:
            result = CheckResult.failed(f"{type(e).__name__}: {e}")
        results.append((check.name, result))
    return results


def _reduce(checks: Sequence[Check], outcomes: Iterable[Tuple[Pattern, List[Tuple[str, CheckResult]]]]):
    summaries = {c.name: CheckSummary(c.name) for c in checks}
    for pattern, results in outcomes:
        for name, result in results:
            summaries[name].add(pattern, result)
    return summaries


def run_suite(cfg: SuiteConfig, checks: Optional[Sequence[Check]] = None) -> SuiteReport:
    start = time.monotonic()
    if checks is None:
        checks = cfg.create_checks()

    patterns = list(source_registry.create("enumerate", max_period=cfg.max_period)(None))
    assert len(patterns) == sum(pattern_count(n) for n in range(1, cfg.max_period + 1))
    LOG.info("Verifying %s checks on %s patterns of period <= %s", len(checks), len(patterns), cfg.max_period)

    work = partial(verify_pattern, checks=checks)
    show = cfg.progress and not cfg.deterministic

    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as executor:
            results = executor.map(work, patterns, chunksize=max(1, len(patterns) // (8 * cfg.jobs)))
            outcomes = list(tqdm.tqdm(results, total=len(patterns), desc="Verifying", disable=not show))
    else:
        outcomes = [work(p) for p in tqdm.tqdm(patterns, desc="Verifying", disable=not show)]

    summaries = _reduce(checks, zip(patterns, outcomes))
    report = SuiteReport(cfg.max_period, len(patterns), summaries)

    if not cfg.deterministic:
        report.wall_time = time.monotonic() - start

    for name, s in summaries.items():
        if s.failed:
            LOG.warning("%s: %s failures out of %s", name, s.failed, s.examined)
        elif s.passed == 0:
            LOG.info("%s: no pattern satisfied the premise", name)

    return report
