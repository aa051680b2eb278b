# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

"""Exceptions raised by anemoi-triod.

All errors derive from `ValueError` so that the command line reports them
as user errors rather than crashes.
"""


class TriodError(ValueError):
    """Base class of every error raised by this package."""


class PatternError(TriodError):
    """A pattern violates one of its structural invariants."""


class EmptyPattern(PatternError):
    pass


class DuplicateRank(PatternError):
    pass


class RankGap(PatternError):
    pass


class InvalidBranch(PatternError):
    pass


class PatternSyntaxError(PatternError):
    """A pattern document could not be parsed."""

    def __init__(self, message: str, line: int = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotRegular(TriodError):
    pass


class NoCanonicalOrdering(TriodError):
    pass


class CrossCheckMismatch(TriodError):
    """Two independent computations of the same property disagree."""


class RotationOneThird(TriodError):
    pass


class EmptySubset(TriodError):
    pass


class WrongRegime(TriodError):
    pass


class PhiUndefined(TriodError):
    """The country map is not defined because the inner image is not black."""


class NotTransitive(TriodError):
    pass


class NotTriodTwist(TriodError):
    pass


class EquivarianceFailure(TriodError):
    pass


class BoundViolated(TriodError):
    pass


class UnknownCheck(TriodError):
    pass


class SearchBudgetExceeded(TriodError):
    """An orbit search expanded more walks than it was allowed to."""
