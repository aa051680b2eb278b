# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.


from ..pattern import Pattern
from ..triod import branch_shift
from . import Relabel
from . import relabel_registry


@relabel_registry.register("rotate_branches")
class RotateBranches(Relabel):
    """Rename branch b to b + k. Colors and rotation numbers are unchanged."""

    def __init__(self, k: int = 1) -> None:
        self.k = k % 3

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(k={self.k})"

    def forward_pattern(self, p: Pattern) -> Pattern:
        return Pattern(tuple((branch_shift(b, self.k), r) for b, r in p.points))

    def backward_pattern(self, p: Pattern) -> Pattern:
        return Pattern(tuple((branch_shift(b, -self.k), r) for b, r in p.points))


@relabel_registry.register("reflect_branches")
class ReflectBranches(Relabel):
    """Reverse the cyclic order of the branches (b -> -b).

    Black and red points swap colors, green points stay green.
    """

    def forward_pattern(self, p: Pattern) -> Pattern:
        return Pattern(tuple(((-b) % 3, r) for b, r in p.points))

    backward_pattern = forward_pattern
