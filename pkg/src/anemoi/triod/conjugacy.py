# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

"""Conjugacy of a triod-twist cycle with a rigid rotation of the circle.

The normalised code function, taken modulo 1, maps the cycle bijectively onto
the orbit of 0 under ``x -> x + p/q mod 1`` and intertwines the two dynamics.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import List
from typing import Tuple

from .errors import BoundViolated
from .errors import EquivarianceFailure
from .errors import NotTriodTwist
from .pattern import Pattern
from .plinear import build_plinear
from .rotation import ONE_THIRD
from .rotation import code_table
from .rotation import is_triod_twist
from .rotation import oriented

LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class RotationOrbit:
    p: int
    q: int

    def __post_init__(self) -> None:
        assert self.q >= 1 and Fraction(self.p, self.q).denominator == self.q, self

    @property
    def rho(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def points(self) -> Tuple[Fraction, ...]:
        return tuple(sorted((j * self.rho) % 1 for j in range(self.q)))

    def g(self, x: Fraction) -> Fraction:
        return (x + self.rho) % 1


@dataclass(frozen=True)
class ConjugacyReport:
    pattern: Pattern
    orbit: RotationOrbit
    psi: Tuple[Fraction, ...]
    codes: Tuple[Fraction, ...]
    base: int
    modality: int
    laps: int
    cut_laps: int
    equivariance_ok: bool = True

    @property
    def rho(self) -> Fraction:
        return self.orbit.rho

    @property
    def bound(self) -> int:
        return self.modality + 3

    @property
    def extension_exceeds(self) -> bool:
        return self.cut_laps > self.bound

    @property
    def integer_parts(self) -> int:
        return len({floor(c) for c in self.codes})


def _normalised_codes(p: Pattern) -> Tuple[Pattern, Tuple[Fraction, ...]]:
    o = oriented(p)
    if o.rotation_number == ONE_THIRD:
        # The primitive 3-cycle rotates by one third at each step
        return o, tuple(Fraction(t, 3) for t in range(p.period))
    values = code_table(o).values
    low = min(values)
    return o, tuple(v - low for v in values)


def _runs(p: Pattern, codes, psi, split_on_floor: bool) -> int:
    total = 0
    for b in p.branches:
        line = p.on_branch(b)
        total += 1
        direction = 0
        for inner, outer in zip(line, line[1:]):
            step = 1 if psi[outer] > psi[inner] else -1
            jump = split_on_floor and floor(codes[outer]) != floor(codes[inner])
            if jump or (direction and step != direction):
                # A new run starts at `outer`
                total += 1
                direction = 0
            else:
                direction = step
    return total


def build_conjugacy(p: Pattern) -> ConjugacyReport:
    if not is_triod_twist(p):
        raise NotTriodTwist(f"{p} is not a triod-twist pattern")

    o, codes = _normalised_codes(p)
    rho = o.rotation_number
    orbit = RotationOrbit(rho.numerator, rho.denominator)

    if orbit.q != p.period:
        raise EquivarianceFailure(f"{p}: rotation pair {o.rotation_pair} is not coprime")

    psi = tuple(c % 1 for c in codes)
    base = min(range(p.period), key=lambda t: (codes[t], o.branch(t), o.rank(t)))
    assert psi[base] == 0, (p, psi)

    for t in range(p.period):
        if psi[p.image(t)] != orbit.g(psi[t]):
            raise EquivarianceFailure(f"{p}: psi(f(x{t})) = {psi[p.image(t)]} but g(psi(x{t})) = {orbit.g(psi[t])}")

    if tuple(sorted(psi)) != orbit.points:
        raise EquivarianceFailure(f"{p}: psi is not a bijection onto the rotation orbit")

    laps = _runs(o, codes, psi, split_on_floor=True)
    cut_laps = _runs(o, codes, psi, split_on_floor=False)
    modality = build_plinear(p).modality

    LOG.debug("Conjugacy of %s: psi=%s laps=%s bound=%s", p, psi, laps, modality + 3)
    return ConjugacyReport(p, orbit, psi, codes, base, modality, laps, cut_laps)


def psi_laps(report: ConjugacyReport, p: Pattern) -> int:
    """Lap count of psi, raising `BoundViolated` above modality + 3."""
    assert report.pattern == p, (report.pattern, p)
    if report.laps > report.bound:
        raise BoundViolated(f"{p}: psi has {report.laps} laps, more than modality + 3 = {report.bound}")
    return report.laps


def psi_table(report: ConjugacyReport) -> List[Tuple[int, Fraction]]:
    return [(t, report.psi[t]) for t in range(report.pattern.period)]
