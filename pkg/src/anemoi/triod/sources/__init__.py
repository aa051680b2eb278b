# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

from abc import abstractmethod
from typing import Iterator
from typing import NoReturn
from typing import Optional

from anemoi.utils.registry import Registry

from ..pattern import Pattern
from ..transform import PatternStream
from ..transform import Transform

source_registry = Registry(__name__)


class Source(Transform):
    """The head of a pipeline: yields patterns and ignores its input."""

    def forward(self, data: Optional[PatternStream] = None) -> Iterator[Pattern]:
        return self.patterns()

    def backward(self, data: PatternStream) -> NoReturn:
        raise NotImplementedError(f"{self} cannot be run backwards")

    @abstractmethod
    def patterns(self) -> Iterator[Pattern]:
        pass


# Register the sources
from . import file  # noqa: E402,F401
from . import periods  # noqa: E402,F401
