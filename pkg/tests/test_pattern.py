# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

import pytest

from anemoi.triod.errors import DuplicateRank
from anemoi.triod.errors import EmptyPattern
from anemoi.triod.errors import InvalidBranch
from anemoi.triod.errors import NotRegular
from anemoi.triod.errors import PatternSyntaxError
from anemoi.triod.errors import RankGap
from anemoi.triod.pattern import Pattern
from anemoi.triod.pattern import branch_classes
from anemoi.triod.pattern import canonical_branch_ordering
from anemoi.triod.pattern import canonicalize
from anemoi.triod.pattern import ensure_valid
from anemoi.triod.pattern import enumerate_patterns
from anemoi.triod.pattern import parse
from anemoi.triod.pattern import pattern_count
from anemoi.triod.pattern import raw_patterns
from anemoi.triod.pattern import serialize
from anemoi.triod.pattern import validate

E2 = Pattern(((0, 1), (1, 1)))
E3 = Pattern(((0, 1), (1, 1), (2, 1)))
E4 = Pattern(((0, 1), (1, 1), (2, 1), (0, 2)))


def test_pattern_properties():
    assert E4.period == 4
    assert E4.image(3) == 0
    assert [E4.shift(t) for t in range(4)] == [1, 1, 1, 0]
    assert E4.rotation_pair == (1, 4)
    assert E2.rotation_pair == (1, 2)
    assert E3.rotation_pair == (1, 3)
    assert E4.counts == {0: 2, 1: 1, 2: 1}
    assert E2.branches == (0, 1)
    assert E4.on_branch(0) == [0, 3]
    assert E4.above(0) == [0, 3]
    assert E4.above(3) == [3]
    assert E4.time_of(0, 2) == 3


@pytest.mark.parametrize(
    "points, error",
    [
        ((), EmptyPattern),
        (((0, 1), (0, 1)), DuplicateRank),
        (((0, 2),), RankGap),
        (((3, 1),), InvalidBranch),
        (((0, 0),), InvalidBranch),
    ],
)
def test_validate(points, error):
    errors = validate(Pattern(points))
    assert errors
    assert isinstance(errors[0], error)
    with pytest.raises(error):
        ensure_valid(Pattern(points))


def test_valid_patterns():
    for p in (E2, E3, E4):
        assert validate(p) == []


def test_canonicalize():
    assert canonicalize(Pattern(((1, 1), (2, 1), (0, 1)))) == E3
    assert canonicalize(E3) == E3
    rotations = [Pattern(E4.points[k:] + E4.points[:k]) for k in range(4)]
    assert {canonicalize(p) for p in rotations} == {E4}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_matches_brute_force(n):
    patterns = list(enumerate_patterns(n))
    assert len(patterns) == pattern_count(n)
    assert len(set(patterns)) == len(patterns)
    assert patterns == raw_patterns(n)
    assert all(canonicalize(p) == p for p in patterns)


def test_pattern_count():
    assert [pattern_count(n) for n in range(1, 5)] == [3, 6, 20, 90]
    with pytest.raises(ValueError):
        list(enumerate_patterns(0))


def test_serialize_and_parse():
    text = serialize(E3)
    assert text == '{"period":3,"points":[[0,1],[1,1],[2,1]]}'
    assert parse(text) == E3


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"points":[[0,1]]}',
        '{"period":2,"points":[[0,1]]}',
        '{"period":1,"points":[[0,"1"]]}',
        '{"period":true,"points":[[0,1]]}',
    ],
)
def test_parse_errors(text):
    with pytest.raises(PatternSyntaxError) as e:
        parse(text, line=7)
    assert e.value.line == 7
    assert str(e.value).startswith("line 7:")


def test_parse_invalid_pattern():
    with pytest.raises(DuplicateRank):
        parse('{"period":2,"points":[[0,1],[0,1]]}')


def test_canonical_branch_ordering():
    assert canonical_branch_ordering(E3) == E3
    assert canonical_branch_ordering(Pattern(((1, 1), (2, 1), (0, 1)))) == E3
    assert canonical_branch_ordering(E4) == E4

    with pytest.raises(NotRegular):
        canonical_branch_ordering(E2)


def test_branch_classes():
    assert len(list(branch_classes(enumerate_patterns(1)))) == 1
    assert len(list(branch_classes(enumerate_patterns(2)))) == 2


if __name__ == "__main__":
    test_pattern_properties()
    test_valid_patterns()
    test_canonicalize()
    test_pattern_count()
    test_serialize_and_parse()
    test_canonical_branch_ordering()
    test_branch_classes()
