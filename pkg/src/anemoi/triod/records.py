# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

"""Text forms of results: exact rationals, JSON lines and CSV rows."""

import csv
import json
from fractions import Fraction
from typing import IO
from typing import Iterable
from typing import Optional
from typing import Tuple
from typing import Union

from .conjugacy import ConjugacyReport
from .conjugacy import psi_table
from .pattern import Pattern
from .pattern import PatternClassification

CSV_HEADER = (
    "period",
    "rho",
    "rp",
    "mrp",
    "green",
    "black",
    "red",
    "regular",
    "order_preserving",
    "twist",
    "modality",
    "chi",
    "laps",
    "bound",
)


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"Expected 'num/den', got {text!r}")
    return Fraction(int(num), int(den))


def _optional(x) -> Optional[str]:
    return None if x is None else format_rational(x)


def pattern_record(p: Pattern) -> dict:
    return {"period": p.period, "points": [list(x) for x in p.points]}


def classification_record(c: PatternClassification) -> dict:
    t, m = c.mrp
    return {
        "pattern": pattern_record(c.pattern),
        "period": c.pattern.period,
        "rho": format_rational(c.rotation_number),
        "rp": list(c.rotation_pair),
        "mrp": [format_rational(t), m],
        "colors": dict(c.color_census),
        "regular": c.is_regular,
        "order_preserving": c.is_order_preserving,
        "twist": c.is_triod_twist,
        "modality": c.modality,
        "chi": _optional(c.chi),
        "states": dict(c.state_census),
        "countries": c.countries,
        "laps": c.laps,
        "bound": c.bound,
    }


def _flag(x: bool) -> str:
    return "true" if x else "false"


def _blank(x: Optional[int]) -> Union[int, str]:
    return "" if x is None else x


def classification_row(c: PatternClassification) -> list:
    d, n = c.rotation_pair
    t, m = c.mrp
    return [
        c.pattern.period,
        format_rational(c.rotation_number),
        f"({d},{n})",
        f"({format_rational(t)},{m})",
        c.color_census["green"],
        c.color_census["black"],
        c.color_census["red"],
        _flag(c.is_regular),
        _flag(c.is_order_preserving),
        _flag(c.is_triod_twist),
        c.modality,
        "" if c.chi is None else format_rational(c.chi),
        _blank(c.laps),
        _blank(c.bound),
    ]


def conjugacy_record(report: ConjugacyReport) -> dict:
    return {
        "pattern": pattern_record(report.pattern),
        "rho": format_rational(report.rho),
        "psi": [[t, format_rational(v)] for t, v in psi_table(report)],
        "laps": report.laps,
        "bound": report.bound,
        "cut_laps": report.cut_laps,
        "extension_exceeds": report.extension_exceeds,
    }


def error_record(p: Pattern, error: Exception) -> dict:
    return {"error": type(error).__name__, "pattern": pattern_record(p)}


def dumps(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


def write_json_lines(out: IO[str], records: Iterable[dict]) -> int:
    count = 0
    for record in records:
        print(dumps(record), file=out)
        count += 1
    return count


def write_csv(out: IO[str], classifications: Iterable[PatternClassification]) -> int:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    count = 0
    for c in classifications:
        writer.writerow(classification_row(c))
        count += 1
    return count


def graph_record(g) -> dict:
    """Arrows, elementary loops and rotation set of an oriented graph."""
    from .errors import NotTransitive
    from .graph import elementary_loops
    from .graph import rotation_set

    try:
        lo, hi = rotation_set(g)
        rotation = [format_rational(lo), format_rational(hi)]
    except NotTransitive:
        rotation = None

    return {
        "pattern": pattern_record(g.pattern),
        "arrows": [[x, y, thirds, color] for x, y, thirds, color in g.arrows()],
        "loops": [
            {"vertices": list(loop.vertices), "rp": list(loop.rotation_pair)} for loop in elementary_loops(g)
        ],
        "rotation_set": rotation,
    }


def orbits_record(p: Pattern, forced: Iterable[Pattern], mrps: Iterable[Tuple[Fraction, int]]) -> dict:
    return {
        "pattern": pattern_record(p),
        "forced": [pattern_record(q) for q in forced],
        "mrp": [[format_rational(t), m] for t, m in sorted(mrps)],
    }
