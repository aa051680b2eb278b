# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

from abc import abstractmethod

from anemoi.utils.registry import Registry

from ..pattern import Pattern
from ..transform import PatternStream
from ..transform import Transform

relabel_registry = Registry(__name__)


class Relabel(Transform):
    """A reversible change of labels applied to a pattern or to a stream of patterns."""

    def forward(self, data: PatternStream) -> PatternStream:
        if isinstance(data, Pattern):
            return self.forward_pattern(data)
        return (self.forward_pattern(p) for p in data)

    def backward(self, data: PatternStream) -> PatternStream:
        if isinstance(data, Pattern):
            return self.backward_pattern(data)
        return (self.backward_pattern(p) for p in data)

    @abstractmethod
    def forward_pattern(self, p: Pattern) -> Pattern:
        pass

    @abstractmethod
    def backward_pattern(self, p: Pattern) -> Pattern:
        pass


# Register the relabellings
from . import branches  # noqa: E402,F401
from . import shift  # noqa: E402,F401
