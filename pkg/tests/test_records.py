# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

import io
import json
from fractions import Fraction

import pytest

from anemoi.triod.conjugacy import build_conjugacy
from anemoi.triod.errors import NotTriodTwist
from anemoi.triod.graph import build_graph
from anemoi.triod.pattern import Pattern
from anemoi.triod.records import CSV_HEADER
from anemoi.triod.records import classification_record
from anemoi.triod.records import classification_row
from anemoi.triod.records import conjugacy_record
from anemoi.triod.records import dumps
from anemoi.triod.records import error_record
from anemoi.triod.records import format_rational
from anemoi.triod.records import graph_record
from anemoi.triod.records import orbits_record
from anemoi.triod.records import parse_rational
from anemoi.triod.records import write_csv
from anemoi.triod.records import write_json_lines
from anemoi.triod.rotation import classify

E2 = Pattern(((0, 1), (1, 1)))
E3 = Pattern(((0, 1), (1, 1), (2, 1)))
E4 = Pattern(((0, 1), (1, 1), (2, 1), (0, 2)))


def test_rationals():
    assert format_rational(Fraction(-1, 4)) == "-1/4"
    assert format_rational(2) == "2/1"
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-2/6") == Fraction(-1, 3)
    with pytest.raises(ValueError):
        parse_rational("3")


def test_classification_row():
    assert classification_row(classify(E3)) == [3, "1/3", "(1,3)", "(1/3,1)", 0, 3, 0, "true", "true", "true", 1, "", 3, 4]
    row = classification_row(classify(E2))
    assert row[7:10] == ["false", "true", "false"]
    assert row[-2:] == ["", ""]


def test_write_csv():
    out = io.StringIO()
    assert write_csv(out, [classify(E3)]) == 1
    lines = out.getvalue().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[0] == "period,rho,rp,mrp,green,black,red,regular,order_preserving,twist,modality,chi,laps,bound"
    assert lines[1] == '3,1/3,"(1,3)","(1/3,1)",0,3,0,true,true,true,1,,3,4'


def test_classification_record():
    record = classification_record(classify(E4))
    assert record["pattern"] == {"period": 4, "points": [[0, 1], [1, 1], [2, 1], [0, 2]]}
    assert record["rho"] == "1/4"
    assert record["rp"] == [1, 4]
    assert record["mrp"] == ["1/4", 1]
    assert record["chi"] == "3/4"
    assert record["countries"] == 1
    assert (record["laps"], record["bound"]) == (3, 5)
    assert json.loads(dumps(record)) == record


def test_conjugacy_record():
    record = conjugacy_record(build_conjugacy(E4))
    assert record["psi"] == [[0, "1/4"], [1, "1/2"], [2, "3/4"], [3, "0/1"]]
    assert record["bound"] == 5
    assert record["extension_exceeds"] is False


def test_error_record():
    record = error_record(E2, NotTriodTwist("no"))
    assert record == {"error": "NotTriodTwist", "pattern": {"period": 2, "points": [[0, 1], [1, 1]]}}


def test_graph_record():
    record = graph_record(build_graph(E3))
    assert record["arrows"] == [[0, 1, 1, "black"], [1, 2, 1, "black"], [2, 0, 1, "black"]]
    assert record["loops"] == [{"vertices": [0, 1, 2], "rp": [1, 3]}]
    assert record["rotation_set"] == ["1/3", "1/3"]


def test_orbits_record():
    record = orbits_record(E3, [E3], {(Fraction(1, 3), 1)})
    assert record["forced"] == [{"period": 3, "points": [[0, 1], [1, 1], [2, 1]]}]
    assert record["mrp"] == [["1/3", 1]]


def test_json_lines():
    out = io.StringIO()
    assert write_json_lines(out, [{"a": 1}, {"b": [1, 2]}]) == 2
    assert out.getvalue() == '{"a":1}\n{"b":[1,2]}\n'


if __name__ == "__main__":
    test_rationals()
    test_classification_row()
    test_write_csv()
    test_classification_record()
    test_conjugacy_record()
    test_error_record()
    test_graph_record()
    test_orbits_record()
    test_json_lines()
