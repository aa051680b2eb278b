# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

from typing import Iterable
from typing import List
from typing import Optional

from ..transform import PatternStream
from ..transform import Transform
from . import workflow_registry


@workflow_registry.register("pipeline")
class Pipeline(Transform):
    """Steps applied left to right going forward, right to left going backward."""

    def __init__(self, transforms: Iterable[Transform]) -> None:
        self.transforms: List[Transform] = []
        for t in transforms:
            # `a | b | c` is one flat chain
            if isinstance(t, Pipeline):
                self.transforms.extend(t.transforms)
            else:
                self.transforms.append(t)

    def __repr__(self) -> str:
        return " | ".join(repr(t) for t in self.transforms)

    def forward(self, data: Optional[PatternStream] = None) -> PatternStream:
        for transform in self.transforms:
            data = transform.forward(data)
        return data

    def backward(self, data: PatternStream) -> PatternStream:
        for transform in reversed(self.transforms):
            data = transform.backward(data)
        return data
