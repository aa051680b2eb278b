# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.


from . import Command
from . import load_patterns
from . import open_output
from . import positive_int


class Orbits(Command):
    """List the patterns and modified rotation pairs forced by each pattern."""

    def add_arguments(self, command_parser):
        command_parser.add_argument("--in", dest="input", default="-", help="Pattern corpus (default: standard input).")
        command_parser.add_argument("--out", default="-", help="Output file (default: standard output).")
        command_parser.add_argument(
            "--max-period",
            type=positive_int,
            default=6,
            help="Longest forced period searched (default: 6).",
        )

    def run(self, args):
        from ..plinear import forced_patterns
        from ..plinear import mrp_set
        from ..records import orbits_record
        from ..records import write_json_lines

        def records():
            for p in load_patterns(args.input):
                forced = forced_patterns(p, args.max_period)
                yield orbits_record(p, forced, mrp_set(p, args.max_period))

        with open_output(args.out) as out:
            write_json_lines(out, records())


command = Orbits
