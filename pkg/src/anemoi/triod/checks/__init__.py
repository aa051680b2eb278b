# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

"""Named checks run by the verification suite, one pattern at a time."""

import logging
from abc import ABC
from abc import abstractmethod
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Optional
from typing import Tuple

from anemoi.utils.registry import Registry

from ..errors import NotTriodTwist
from ..errors import UnknownCheck
from ..pattern import Pattern

LOG = logging.getLogger(__name__)

check_registry = Registry(__name__)

DEFAULT_CHECKS = (
    "markov_soundness",
    "orbit_grid_oracle",
    "loop_orbit_correspondence",
    "self_forcing",
    "reach_rule_oracle",
    "loop_displacement_integral",
    "graph_transitive",
    "fundamental_rotation_census",
    "regularity_cross_check",
    "canonical_ordering",
    "black_three_loops",
    "green_points_inward",
    "all_branches_visited",
    "color_bifurcation",
    "twist_order_preserving",
    "twist_rho_below_half",
    "state_count",
    "green_state_oscillation",
    "red_state_oscillation",
    "country_oscillation",
    "black_green_movement",
    "black_red_movement",
    "chi_bound",
    "phi_cube_closer",
    "phi_absent_single_country",
    "black_train_return",
    "red_innermost_states",
    "adjacent_red_states",
    "twist_oracle",
    "conjugacy_equivariance",
    "conjugacy_laps",
    "conjugacy_chi_consistency",
    "mrp_hull_containment",
)


class Outcome(Enum):
    PASS = "pass"
    VACUOUS = "vacuous"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


def _text(value) -> str:
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        x = Fraction(value)
        return f"{x.numerator}/{x.denominator}"
    return str(value)


@dataclass(frozen=True)
class CheckResult:
    outcome: Outcome
    message: str = ""
    values: Tuple[Tuple[str, str], ...] = ()

    @classmethod
    def passed(cls) -> "CheckResult":
        return cls(Outcome.PASS)

    @classmethod
    def vacuous(cls, reason: str = "") -> "CheckResult":
        return cls(Outcome.VACUOUS, reason)

    @classmethod
    def failed(cls, message: str, **values) -> "CheckResult":
        return cls(Outcome.FAIL, message, tuple((k, _text(v)) for k, v in values.items()))

    @classmethod
    def inconclusive(cls, message: str) -> "CheckResult":
        return cls(Outcome.INCONCLUSIVE, message)


class PatternAnalysis:
    """Lazily computed facts about one pattern, shared by all checks."""

    def __init__(self, pattern: Pattern) -> None:
        self.pattern = pattern

    def __repr__(self) -> str:
        return f"PatternAnalysis({self.pattern})"

    @cached_property
    def oriented(self) -> Pattern:
        from ..rotation import oriented

        return oriented(self.pattern)

    @property
    def rho(self) -> Fraction:
        return self.oriented.rotation_number

    @cached_property
    def regular(self) -> bool:
        from ..plinear import is_regular

        return is_regular(self.pattern)

    @cached_property
    def fixes_only_hub(self) -> bool:
        from ..plinear import fixes_only_hub

        return fixes_only_hub(self.pattern)

    @property
    def rotational(self) -> bool:
        """Regular and fixing no point but the hub, the setting of the color statements."""
        return self.regular and self.fixes_only_hub

    @property
    def all_branches(self) -> bool:
        return len(self.pattern.branches) == 3

    @cached_property
    def twist(self) -> bool:
        from ..rotation import is_triod_twist

        return is_triod_twist(self.pattern)

    @cached_property
    def plinear(self):
        from ..plinear import build_plinear

        return build_plinear(self.pattern)

    @property
    def modality(self) -> int:
        return self.plinear.modality

    @cached_property
    def graph(self):
        from ..graph import build_graph

        return build_graph(self.pattern)

    @cached_property
    def oriented_graph(self):
        from ..graph import build_graph

        return build_graph(self.oriented)

    @cached_property
    def colors(self):
        from ..rotation import point_colors

        return point_colors(self.oriented)

    @cached_property
    def table(self):
        """Code table of the oriented pattern based at time 0, None at rotation number 1/3."""
        from ..rotation import ONE_THIRD
        from ..rotation import code_table

        if self.rho == ONE_THIRD:
            return None
        return code_table(self.oriented)

    @cached_property
    def states(self):
        from ..rotation import states

        return states(self.oriented)

    @cached_property
    def countries(self):
        from ..rotation import countries

        return countries(self.oriented)

    @cached_property
    def conjugacy(self):
        from ..conjugacy import build_conjugacy

        try:
            return build_conjugacy(self.pattern)
        except NotTriodTwist:
            return None


class Check(ABC):
    """A named statement tested on one pattern.

    `max_pattern_period` is the largest period the check runs on, None for no limit.
    """

    name: Optional[str] = None
    max_pattern_period: Optional[int] = None

    def __init__(self, max_pattern_period: Optional[int] = None) -> None:
        if max_pattern_period is not None:
            self.max_pattern_period = max_pattern_period

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.name})"

    def applies(self, pattern: Pattern) -> bool:
        return self.max_pattern_period is None or pattern.period <= self.max_pattern_period

    def __call__(self, analysis: PatternAnalysis) -> CheckResult:
        return self.check(analysis)

    @abstractmethod
    def check(self, analysis: PatternAnalysis) -> CheckResult:
        pass


def normalise_name(name: str) -> str:
    return name.strip().lower().replace("-", "_")


def create_check(name: str, **kwargs) -> Check:
    key = normalise_name(name)
    if key not in DEFAULT_CHECKS:
        raise UnknownCheck(f"Unknown check {name!r}, expected one of: {', '.join(DEFAULT_CHECKS)}")
    check = check_registry.create(key, **kwargs)
    check.name = key
    return check


# Register the checks
from . import conjugacy  # noqa: E402,F401
from . import graph  # noqa: E402,F401
from . import plinear  # noqa: E402,F401
from . import rotation  # noqa: E402,F401
from . import sharkovsky  # noqa: E402,F401
