# (C) Copyright 2024 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

from anemoi.triod.conjugacy import build_conjugacy
from anemoi.triod.errors import NotTriodTwist
from anemoi.triod.relabels import relabel_registry
from anemoi.triod.rotation import classify
from anemoi.triod.sources import source_registry

################

patterns = source_registry.create("enumerate", period=4)

for p in patterns(None):
    c = classify(p)
    print(p, c.rotation_number, c.is_triod_twist, c.chi)

################

reflect = relabel_registry.create("reflect_branches")
shift = relabel_registry.create("shift_time", k=1)

pipeline = patterns | reflect | shift

for p in pipeline:
    print(p)

################

for p in patterns(None):
    try:
        report = build_conjugacy(p)
    except NotTriodTwist:
        continue
    print(p, report.psi, report.laps, report.bound)
