# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.


from ..pattern import Pattern
from . import Relabel
from . import relabel_registry


@relabel_registry.register("shift_time")
class ShiftTime(Relabel):
    """Start the cycle `k` steps later."""

    def __init__(self, k: int = 1) -> None:
        self.k = k

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(k={self.k})"

    def _rotate(self, p: Pattern, k: int) -> Pattern:
        k %= p.period
        return Pattern(p.points[k:] + p.points[:k])

    def forward_pattern(self, p: Pattern) -> Pattern:
        return self._rotate(p, self.k)

    def backward_pattern(self, p: Pattern) -> Pattern:
        return self._rotate(p, -self.k)
