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


class Graph(Command):
    """Dump the oriented graph of each pattern with its elementary loops and rotation set."""

    def add_arguments(self, command_parser):
        command_parser.add_argument("--in", dest="input", default="-", help="Pattern corpus (default: standard input).")
        command_parser.add_argument("--out", default="-", help="Output file (default: standard output).")

    def run(self, args):
        from ..graph import build_graph
        from ..records import graph_record
        from ..records import write_json_lines

        with open_output(args.out) as out:
            write_json_lines(out, (graph_record(build_graph(p)) for p in load_patterns(args.input)))


command = Graph
