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

from anemoi.triod.pattern import Pattern
from anemoi.triod.plinear import Piece
from anemoi.triod.plinear import build_plinear
from anemoi.triod.plinear import fixes_only_hub
from anemoi.triod.plinear import fold_points
from anemoi.triod.plinear import forced_patterns
from anemoi.triod.plinear import forces
from anemoi.triod.plinear import is_regular
from anemoi.triod.plinear import mrp_set
from anemoi.triod.plinear import periodic_orbits
from anemoi.triod.triod import HUB
from anemoi.triod.triod import point

E2 = Pattern(((0, 1), (1, 1)))
E3 = Pattern(((0, 1), (1, 1), (2, 1)))
E4 = Pattern(((0, 1), (1, 1), (2, 1), (0, 2)))
# Regular, but x0 is on a green self-loop and the map fixes 5/4 on branch 0.
FIXED = Pattern(((0, 1), (0, 2), (2, 1), (1, 1)))


def _targets(f, piece):
    return [e.target for e in f.markov_graph.successors(piece)]


def test_pieces():
    assert build_plinear(E3).pieces == (Piece(0, 0), Piece(1, 0), Piece(2, 0))
    assert build_plinear(E4).pieces == (Piece(0, 0), Piece(0, 1), Piece(1, 0), Piece(2, 0))


def test_evaluate():
    f = build_plinear(E3)
    assert f.evaluate(HUB) == HUB
    assert f.evaluate(point(0, Fraction(1, 2))) == point(1, Fraction(1, 2))
    assert f.evaluate(point(2, 1)) == point(0, 1)
    assert f.iterate(point(0, Fraction(1, 3)), 3) == point(0, Fraction(1, 3))

    f = build_plinear(E4)
    assert f.evaluate(point(0, Fraction(3, 2))) == HUB
    assert f.evaluate(point(0, 2)) == point(0, 1)
    assert f.evaluate(point(0, Fraction(5, 2))) == point(0, 1)
    assert f.evaluate(point(0, Fraction(5, 4))) == point(1, Fraction(1, 2))


def test_markov_graph_e3():
    f = build_plinear(E3)
    for b in range(3):
        (edge,) = f.markov_graph.successors(Piece(b, 0))
        assert edge.target == Piece((b + 1) % 3, 0)
        assert edge.slope == 1 and edge.offset == 0


def test_markov_graph_e4():
    f = build_plinear(E4)
    assert _targets(f, Piece(0, 0)) == [Piece(1, 0)]
    assert _targets(f, Piece(0, 1)) == [Piece(0, 0), Piece(1, 0)]
    assert _targets(f, Piece(1, 0)) == [Piece(2, 0)]
    assert _targets(f, Piece(2, 0)) == [Piece(0, 0), Piece(0, 1)]

    # Each edge law maps its source piece onto its target piece
    for piece in f.pieces:
        for edge in f.markov_graph.successors(piece):
            ends = sorted((edge(Fraction(piece.index)), edge(Fraction(piece.index + 1))))
            assert ends == [edge.target.index, edge.target.index + 1] or abs(edge.slope) > 1

    g = f.markov_graph.to_networkx()
    assert g.number_of_edges() == 6


def test_modality():
    assert build_plinear(E3).modality == 1
    assert fold_points(build_plinear(E3)) == []
    assert build_plinear(E4).modality == 2
    assert fold_points(build_plinear(E4)) == [point(0, 1)]

    # Two arms leave the hub along branch 1.
    hub_fold = build_plinear(Pattern(((0, 1), (1, 1), (1, 2))))
    assert fold_points(hub_fold) == [HUB, point(1, 1)]
    assert hub_fold.modality == 3


def test_periodic_orbits_e3():
    f = build_plinear(E3)
    orbits = periodic_orbits(f, 3)
    assert orbits
    assert {o.pattern for o in orbits} == {E3}
    assert all(HUB not in o.points for o in orbits)
    assert periodic_orbits(f, 1) == []

    with pytest.raises(ValueError):
        periodic_orbits(f, 0)


def test_periodic_orbits_are_cycles():
    f = build_plinear(E4)
    for o in periodic_orbits(f, 4):
        assert len(set(o.points)) == o.period
        for i, x in enumerate(o.points):
            assert f.evaluate(x) == o.points[(i + 1) % o.period]


def test_forces():
    assert forces(E3, E3, 3)
    assert not forces(E3, E2, 2)
    assert forces(E2, E2, 2)
    assert forces(E4, E4, 4)
    with pytest.raises(ValueError):
        forces(E3, E4, 3)


def test_forced_patterns():
    assert forced_patterns(E3, 3) == [E3]
    assert E2 in forced_patterns(E2, 2)
    assert (Fraction(1, 3), 1) in mrp_set(E3, 3)


def test_is_regular():
    assert is_regular(E3)
    assert is_regular(E4)
    assert not is_regular(E2)


def test_fixes_only_hub():
    assert fixes_only_hub(E3)
    assert fixes_only_hub(E4)
    assert is_regular(FIXED)
    assert not fixes_only_hub(FIXED)

    f = build_plinear(FIXED)
    assert f.evaluate(point(0, Fraction(5, 4))) == point(0, Fraction(5, 4))
    assert periodic_orbits(f, 1)


if __name__ == "__main__":
    test_pieces()
    test_evaluate()
    test_markov_graph_e3()
    test_markov_graph_e4()
    test_modality()
    test_periodic_orbits_e3()
    test_periodic_orbits_are_cycles()
    test_forces()
    test_forced_patterns()
    test_is_regular()
    test_fixes_only_hub()
