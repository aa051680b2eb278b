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


class Classify(Command):
    """Classify every pattern of a corpus: rotation data, colours, regularity, twist and bounds."""

    def add_arguments(self, command_parser):
        command_parser.add_argument("--in", dest="input", default="-", help="Pattern corpus (default: standard input).")
        command_parser.add_argument("--out", default="-", help="Output file (default: standard output).")
        command_parser.add_argument("--format", choices=["json", "csv"], default="json", help="Output format.")
        command_parser.add_argument(
            "--quotient",
            action="store_true",
            help="Keep one pattern per class of cyclic branch relabellings.",
        )
        command_parser.add_argument("--no-progress", action="store_true", help="Do not show a progress bar.")

    def run(self, args):
        import tqdm

        from ..records import classification_record
        from ..records import write_csv
        from ..records import write_json_lines
        from ..rotation import classify

        patterns = load_patterns(args.input, quotient=args.quotient)
        classifications = (classify(p) for p in tqdm.tqdm(patterns, desc="Classifying", disable=args.no_progress))

        with open_output(args.out) as out:
            if args.format == "csv":
                write_csv(out, classifications)
            else:
                write_json_lines(out, (classification_record(c) for c in classifications))


command = Classify
