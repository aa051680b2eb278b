# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

"""Composable steps over patterns: relabellings, sources and pipelines of them."""

from abc import ABC
from abc import abstractmethod
from typing import Iterable
from typing import Optional
from typing import Union

from .pattern import Pattern

PatternStream = Union[Pattern, Iterable[Pattern]]


class Transform(ABC):
    """A step taking one pattern, or a stream of them, to the same shape of data.

    `a | b` chains two steps into a pipeline; `reverse` swaps the directions.
    """

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}()"

    def __call__(self, data: Optional[PatternStream] = None) -> PatternStream:
        return self.forward(data)

    @abstractmethod
    def forward(self, data: Optional[PatternStream]) -> PatternStream:
        pass

    @abstractmethod
    def backward(self, data: PatternStream) -> PatternStream:
        pass

    def reverse(self) -> "Transform":
        return Reversed(self)

    def __or__(self, other: "Transform") -> "Transform":
        from .workflows import workflow_registry

        return workflow_registry.create("pipeline", transforms=[self, other])


class Reversed(Transform):
    """Undo a relabelling by running it backwards."""

    def __init__(self, transform: Transform) -> None:
        self.transform = transform

    def __repr__(self) -> str:
        return f"Reversed({self.transform})"

    def forward(self, data: PatternStream) -> PatternStream:
        return self.transform.backward(data)

    def backward(self, data: PatternStream) -> PatternStream:
        return self.transform.forward(data)
