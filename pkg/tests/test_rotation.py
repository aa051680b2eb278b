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

from anemoi.triod.errors import EmptySubset
from anemoi.triod.errors import RotationOneThird
from anemoi.triod.errors import WrongRegime
from anemoi.triod.pattern import Pattern
from anemoi.triod.rotation import Country
from anemoi.triod.rotation import Monotonicity
from anemoi.triod.rotation import State
from anemoi.triod.rotation import Train
from anemoi.triod.rotation import chi
from anemoi.triod.rotation import classify
from anemoi.triod.rotation import code_differences_consistent
from anemoi.triod.rotation import code_monotonicity
from anemoi.triod.rotation import code_table
from anemoi.triod.rotation import color_census
from anemoi.triod.rotation import countries
from anemoi.triod.rotation import has_canonical_ordering
from anemoi.triod.rotation import is_order_preserving
from anemoi.triod.rotation import is_triod_twist
from anemoi.triod.rotation import oriented
from anemoi.triod.rotation import phi
from anemoi.triod.rotation import point_colors
from anemoi.triod.rotation import states
from anemoi.triod.rotation import trains

E2 = Pattern(((0, 1), (1, 1)))
E3 = Pattern(((0, 1), (1, 1), (2, 1)))
E4 = Pattern(((0, 1), (1, 1), (2, 1), (0, 2)))
# E4 with branches 1 and 2 swapped
E4_REFLECTED = Pattern(((0, 1), (2, 1), (1, 1), (0, 2)))
# Regular patterns whose map fixes a point besides the hub
FIXED = Pattern(((0, 1), (0, 2), (2, 1), (1, 1)))
FIXED_FIVE = Pattern(((0, 1), (1, 1), (2, 1), (0, 2), (0, 3)))


def F(n, d=1):
    return Fraction(n, d)


def test_colors():
    assert point_colors(E3) == ("black", "black", "black")
    assert point_colors(E2) == ("black", "red")
    assert point_colors(E4) == ("black", "black", "black", "green")
    assert color_census(E4) == {"green": 1, "black": 3, "red": 0}


def test_oriented():
    assert oriented(E4) == E4
    assert oriented(Pattern(((1, 1), (2, 1), (0, 1)))) == E3
    assert oriented(E2) == E2


def test_code_table():
    table = code_table(E4)
    assert table.values == (F(0), F(1, 4), F(1, 2), F(-1, 4))
    assert table.lift == (F(0), F(-1, 12), F(-1, 6), F(-1, 4))
    assert table[3] == F(-1, 4)
    assert table.rho == F(1, 4)

    other = code_table(E4, x0=1)
    assert other.values == (F(3, 4), F(0), F(1, 4), F(1, 2))
    assert other[0] - other[3] == table[0] - table[3]
    assert code_differences_consistent(E4)

    with pytest.raises(RotationOneThird):
        code_table(E3)


def test_monotonicity():
    assert code_monotonicity(E4, code_table(E4)) is Monotonicity.STRICTLY_INCREASING
    assert code_monotonicity(E2, code_table(E2)) is Monotonicity.STRICTLY_INCREASING


def test_twist():
    assert is_order_preserving(E3)
    assert is_order_preserving(E4)
    assert is_triod_twist(E3)
    assert is_triod_twist(E4)
    assert not is_triod_twist(E2)


def test_twist_uses_canonical_labelling():
    assert E4_REFLECTED.rotation_pair == (2, 4)
    assert has_canonical_ordering(E4_REFLECTED)
    assert oriented(E4_REFLECTED).rotation_pair == (1, 4)
    assert oriented(E4_REFLECTED).rotation_number == F(1, 4)
    assert is_triod_twist(E4_REFLECTED)
    assert classify(E4_REFLECTED).rotation_number == F(1, 4)


def test_twist_needs_only_hub_fixed():
    assert not has_canonical_ordering(FIXED)
    assert not is_triod_twist(FIXED)
    assert not classify(FIXED).is_triod_twist

    assert FIXED_FIVE.rotation_number == F(1, 5)
    assert not is_triod_twist(FIXED_FIVE)
    assert code_monotonicity(FIXED_FIVE, code_table(FIXED_FIVE)) is Monotonicity.DECREASING


def test_chi():
    table = code_table(E4)
    assert chi(table) == F(3, 4)
    assert chi(table, [0, 3]) == F(1, 4)
    assert chi(table, lift=True) == F(1, 4)
    assert chi(table, [2]) == 0
    with pytest.raises(EmptySubset):
        chi(table, [])


def test_states_and_countries():
    assert states(E3) == [State("black", 0, (0,)), State("black", 1, (1,)), State("black", 2, (2,))]
    assert states(E2) == [State("black", 0, (0,)), State("red", 1, (1,))]

    found = states(E4)
    assert found == [
        State("black", 0, (0,)),
        State("green", 0, (3,)),
        State("black", 1, (1,)),
        State("black", 2, (2,)),
    ]
    assert found[1].inner == found[1].outer == 3

    (country,) = countries(E4)
    assert country == Country(0, (State("green", 0, (3,)),))
    assert country.points == (3,)
    assert countries(E3) == []


def test_phi():
    (country,) = countries(E4)
    assert phi(E4, country, 1) is None
    assert phi(E4, country, 2) is None

    with pytest.raises(ValueError):
        phi(E4, country, 3)
    with pytest.raises(WrongRegime):
        phi(E2, Country(0, (State("black", 0, (0,)),)), 1)


def test_country_maps_cycle():
    # rho = 2/11, greens on b0 split by a black point into two countries
    p = Pattern(((0, 2), (0, 1), (1, 1), (2, 3), (0, 4), (0, 3), (1, 3), (1, 2), (2, 4), (2, 2), (2, 1)))
    assert is_triod_twist(p)
    assert oriented(p) == p

    inner, outer, middle, last = countries(p)
    assert [c.points for c in (inner, outer, middle, last)] == [(0,), (4,), (6,), (9, 8)]
    assert phi(p, outer, 1) == middle
    assert phi(p, middle, 1) == last
    assert phi(p, last, 1) == inner
    assert phi(p, inner, 1) == middle


def test_trains():
    assert list(trains(E4, "green", 1)) == [Train((3, 3), "green")]
    assert all(t.length == 1 for t in trains(E4, "black", 1))
    assert all(len(t.points) <= 4 for t in trains(E4, "mixed", 3))

    with pytest.raises(ValueError):
        list(trains(E4, "blue", 1))
    with pytest.raises(ValueError):
        list(trains(E4, "green", 0))


def test_classify_e4():
    c = classify(E4)
    assert c.rotation_number == F(1, 4)
    assert c.rotation_pair == (1, 4)
    assert c.mrp == (F(1, 4), 1)
    assert c.is_regular
    assert c.is_order_preserving
    assert c.is_triod_twist
    assert c.modality == 2
    assert c.color_census == {"green": 1, "black": 3, "red": 0}
    assert c.chi == F(3, 4)
    assert c.state_census == {"green": 1, "black": 3, "red": 0}
    assert c.countries == 1
    assert (c.laps, c.bound) == (3, 5)


def test_classify_e3():
    c = classify(E3)
    assert c.rotation_number == F(1, 3)
    assert c.is_triod_twist
    assert c.modality == 1
    assert c.chi is None
    assert c.countries == 0
    assert (c.laps, c.bound) == (3, 4)


def test_classify_e2():
    c = classify(E2)
    assert c.rotation_number == F(1, 2)
    assert not c.is_regular
    assert not c.is_triod_twist
    assert c.chi == F(1, 2)
    assert c.laps is None and c.bound is None


if __name__ == "__main__":
    test_colors()
    test_oriented()
    test_code_table()
    test_monotonicity()
    test_twist()
    test_twist_uses_canonical_labelling()
    test_twist_needs_only_hub_fixed()
    test_chi()
    test_states_and_countries()
    test_phi()
    test_country_maps_cycle()
    test_trains()
    test_classify_e4()
    test_classify_e3()
    test_classify_e2()
