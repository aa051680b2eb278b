# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

import logging
import sys
from typing import Iterable
from typing import Iterator

from ..errors import PatternError
from ..errors import PatternSyntaxError
from ..pattern import Pattern
from ..pattern import parse
from . import Source
from . import source_registry

LOG = logging.getLogger(__name__)


@source_registry.register("file")
class PatternFile(Source):
    """Patterns read from a corpus file, one JSON object per line.

    Blank lines are skipped; ``-`` reads standard input. Parse errors carry
    the line number.
    """

    def __init__(self, path: str) -> None:
        self.path = path

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.path!r})"

    def _lines(self):
        if self.path == "-":
            yield from sys.stdin
            return
        with open(self.path) as f:
            yield from f

    def patterns(self) -> Iterator[Pattern]:
        count = 0
        for number, line in enumerate(self._lines(), start=1):
            if not line.strip():
                continue
            count += 1
            try:
                p = parse(line, line=number)
            except PatternSyntaxError:
                raise
            except PatternError as e:
                raise PatternSyntaxError(str(e), number) from e
            yield p
        LOG.debug("Read %s patterns from %s", count, self.path)


@source_registry.register("patterns")
class PatternList(Source):
    """Patterns given in memory."""

    def __init__(self, patterns: Iterable[Pattern]) -> None:
        self.items = list(patterns)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({len(self.items)} patterns)"

    def patterns(self) -> Iterator[Pattern]:
        return iter(self.items)
