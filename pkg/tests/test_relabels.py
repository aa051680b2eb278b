# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

import pytest

from anemoi.triod.pattern import Pattern
from anemoi.triod.relabels import relabel_registry
from anemoi.triod.rotation import point_colors
from anemoi.triod.sources import source_registry

E3 = Pattern(((0, 1), (1, 1), (2, 1)))
E4 = Pattern(((0, 1), (1, 1), (2, 1), (0, 2)))


def test_rotate_branches():
    rotate = relabel_registry.create("rotate_branches", k=1)
    q = rotate(E4)
    assert q == Pattern(((1, 1), (2, 1), (0, 1), (1, 2)))
    assert point_colors(q) == point_colors(E4)
    assert q.rotation_pair == E4.rotation_pair
    assert rotate.backward(q) == E4


def test_reflect_branches():
    reflect = relabel_registry.create("reflect_branches")
    q = reflect(E3)
    assert q == Pattern(((0, 1), (2, 1), (1, 1)))
    assert point_colors(q) == ("red", "red", "red")
    assert reflect(q) == E3
    assert point_colors(reflect(E4)) == ("red", "red", "red", "green")


def test_shift_time():
    shift = relabel_registry.create("shift_time", k=1)
    q = shift(E4)
    assert q == Pattern(((1, 1), (2, 1), (0, 2), (0, 1)))
    assert shift.backward(q) == E4
    assert relabel_registry.create("shift_time", k=5)(E4) == q


def test_pipeline():
    rotate = relabel_registry.create("rotate_branches", k=2)
    shift = relabel_registry.create("shift_time", k=3)
    pipeline = rotate | shift
    q = pipeline(E4)
    assert q == shift(rotate(E4))
    assert pipeline.backward(q) == E4
    assert pipeline.reverse()(q) == E4


def test_streams():
    rotate = relabel_registry.create("rotate_branches", k=1)
    source = source_registry.create("patterns", [E3, E4])
    assert list((source | rotate)(None)) == [rotate(E3), rotate(E4)]
    assert list(rotate.backward(iter([rotate(E3), rotate(E4)]))) == [E3, E4]
    assert list(rotate.reverse()([rotate(E3)])) == [E3]

    with pytest.raises(NotImplementedError):
        source.backward([E3])


def test_enumerate_source():
    assert len(list(source_registry.create("enumerate", period=2)(None))) == 6
    assert len(list(source_registry.create("enumerate", max_period=3)(None))) == 29


if __name__ == "__main__":
    test_rotate_branches()
    test_reflect_branches()
    test_shift_time()
    test_pipeline()
    test_streams()
    test_enumerate_source()
