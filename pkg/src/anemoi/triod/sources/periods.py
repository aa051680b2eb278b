# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

import logging
from typing import Iterator

from ..pattern import Pattern
from ..pattern import enumerate_patterns
from . import Source
from . import source_registry

LOG = logging.getLogger(__name__)


@source_registry.register("enumerate")
class EnumeratedPatterns(Source):
    """Every pattern of the given periods, shortest periods first."""

    def __init__(self, period: int = None, max_period: int = None, min_period: int = 1) -> None:
        if (period is None) == (max_period is None):
            raise ValueError("Give exactly one of `period` and `max_period`")

        if period is not None:
            min_period = max_period = period

        if min_period < 1 or max_period < min_period:
            raise ValueError(f"Invalid period range {min_period}..{max_period}")

        self.periods = range(min_period, max_period + 1)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.periods.start}..{self.periods.stop - 1})"

    def patterns(self) -> Iterator[Pattern]:
        for n in self.periods:
            LOG.debug("Enumerating patterns of period %s", n)
            yield from enumerate_patterns(n)
