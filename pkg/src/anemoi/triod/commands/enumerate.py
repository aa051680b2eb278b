# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

import logging

from . import Command
from . import open_output
from . import positive_int

LOG = logging.getLogger(__name__)


class Enumerate(Command):
    """Write every pattern of the given periods, one JSON object per line."""

    def add_arguments(self, command_parser):
        group = command_parser.add_mutually_exclusive_group(required=True)
        group.add_argument("--period", type=positive_int, help="Enumerate this period only.")
        group.add_argument("--max-period", type=positive_int, help="Enumerate all periods up to this one.")
        command_parser.add_argument("--out", default="-", help="Output file (default: standard output).")
        command_parser.add_argument(
            "--quotient",
            action="store_true",
            help="Keep one pattern per class of cyclic branch relabellings.",
        )

    def run(self, args):
        from ..pattern import branch_classes
        from ..pattern import serialize
        from ..sources import source_registry

        patterns = source_registry.create("enumerate", period=args.period, max_period=args.max_period)(None)
        if args.quotient:
            patterns = branch_classes(patterns)

        count = 0
        with open_output(args.out) as out:
            for p in patterns:
                print(serialize(p), file=out)
                count += 1

        LOG.info("Wrote %s patterns to %s", count, args.out)


command = Enumerate
