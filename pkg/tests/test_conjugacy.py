# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

from dataclasses import replace
from fractions import Fraction

import pytest

from anemoi.triod.conjugacy import RotationOrbit
from anemoi.triod.conjugacy import build_conjugacy
from anemoi.triod.conjugacy import psi_laps
from anemoi.triod.conjugacy import psi_table
from anemoi.triod.errors import BoundViolated
from anemoi.triod.errors import NotTriodTwist
from anemoi.triod.pattern import Pattern

E2 = Pattern(((0, 1), (1, 1)))
E3 = Pattern(((0, 1), (1, 1), (2, 1)))
E4 = Pattern(((0, 1), (1, 1), (2, 1), (0, 2)))


def test_rotation_orbit():
    orbit = RotationOrbit(1, 4)
    assert orbit.rho == Fraction(1, 4)
    assert orbit.points == (0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
    assert orbit.g(Fraction(3, 4)) == 0

    with pytest.raises(AssertionError):
        RotationOrbit(2, 4)


def test_conjugacy_e4():
    report = build_conjugacy(E4)
    assert report.psi == (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(0))
    assert report.base == 3
    assert report.rho == Fraction(1, 4)
    assert report.modality == 2
    assert report.bound == 5
    assert report.laps == 3
    assert report.cut_laps == 3
    assert not report.extension_exceeds
    assert report.integer_parts == 1
    assert psi_laps(report, E4) == 3
    assert psi_table(report) == [(0, Fraction(1, 4)), (1, Fraction(1, 2)), (2, Fraction(3, 4)), (3, Fraction(0))]

    for t in range(E4.period):
        assert report.psi[E4.image(t)] == report.orbit.g(report.psi[t])


def test_conjugacy_e3():
    report = build_conjugacy(E3)
    assert report.psi == (0, Fraction(1, 3), Fraction(2, 3))
    assert report.bound == 4
    assert report.laps == 3


def test_not_twist():
    with pytest.raises(NotTriodTwist):
        build_conjugacy(E2)


def test_bound_violated():
    report = replace(build_conjugacy(E4), laps=6)
    with pytest.raises(BoundViolated):
        psi_laps(report, E4)


if __name__ == "__main__":
    test_rotation_orbit()
    test_conjugacy_e4()
    test_conjugacy_e3()
    test_not_twist()
    test_bound_violated()
