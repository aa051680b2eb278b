# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

from fractions import Fraction

import pytest

from anemoi.triod.triod import HUB
from anemoi.triod.triod import Arc
from anemoi.triod.triod import Comparison
from anemoi.triod.triod import TriodPoint
from anemoi.triod.triod import branch_shift
from anemoi.triod.triod import geq
from anemoi.triod.triod import point
from anemoi.triod.triod import tree_compare


def test_points():
    x = point(1, Fraction(1, 2))
    assert x == TriodPoint(1, Fraction(1, 2))
    assert point(2, 0) is HUB
    assert HUB.is_hub
    assert str(x) == "(b1, 1/2)"
    assert str(HUB) == "a"

    with pytest.raises(ValueError):
        TriodPoint(3, 1)
    with pytest.raises(ValueError):
        TriodPoint(0, -1)
    with pytest.raises(ValueError):
        TriodPoint(None, 1)


def test_branch_shift():
    assert branch_shift(2, 1) == 0
    assert branch_shift(0, -1) == 2


def test_compare():
    assert tree_compare(point(0, 2), point(0, 1)) is Comparison.GREATER
    assert tree_compare(point(0, 1), point(0, 2)) is Comparison.LESS
    assert tree_compare(point(0, 1), point(1, 1)) is Comparison.INCOMPARABLE
    assert tree_compare(HUB, point(2, 1)) is Comparison.LESS
    assert tree_compare(point(2, 1), HUB) is Comparison.GREATER
    assert tree_compare(HUB, HUB) is Comparison.EQUAL
    assert geq(point(1, 3), point(1, 3))
    assert not geq(point(1, 3), point(2, 1))


def test_arc_through_hub():
    arc = Arc(point(1, 1), point(0, 1))
    assert arc.through_hub
    assert arc.length == 2
    assert arc.point_at(1) == HUB
    assert arc.point_at(Fraction(1, 2)) == point(1, Fraction(1, 2))
    assert arc.point_at(Fraction(3, 2)) == point(0, Fraction(1, 2))
    assert arc.contains(HUB)
    assert arc.contains(point(0, 1))
    assert not arc.contains(point(0, 2))
    assert not arc.contains(point(2, Fraction(1, 2)))


def test_arc_on_one_branch():
    arc = Arc(point(0, 3), point(0, 1))
    assert not arc.through_hub
    assert arc.length == 2
    assert arc.point_at(Fraction(1, 2)) == point(0, Fraction(5, 2))
    assert arc.contains(point(0, 2))
    assert not arc.contains(HUB)
    assert arc.extents == {0: 3}


def test_arc_from_hub():
    arc = Arc(HUB, point(2, 2))
    assert arc.length == 2
    assert arc.point_at(0) == HUB
    assert arc.point_at(2) == point(2, 2)
    assert not arc.contains(point(1, Fraction(1, 2)))
    assert Arc(HUB, HUB).degenerate


if __name__ == "__main__":
    test_points()
    test_branch_shift()
    test_compare()
    test_arc_through_hub()
    test_arc_on_one_branch()
    test_arc_from_hub()
