# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

import logging
import sys

from . import DOMAIN_FAILURE
from . import Command
from . import load_patterns
from . import open_output

LOG = logging.getLogger(__name__)


class Conjugate(Command):
    """Build the conjugacy of each triod-twist pattern to its circle rotation."""

    def add_arguments(self, command_parser):
        command_parser.add_argument("--in", dest="input", default="-", help="Pattern corpus (default: standard input).")
        command_parser.add_argument("--out", default="-", help="Output file (default: standard output).")

    def run(self, args):
        from ..conjugacy import build_conjugacy
        from ..errors import NotTriodTwist
        from ..records import conjugacy_record
        from ..records import dumps
        from ..records import error_record

        rejected = 0
        with open_output(args.out) as out:
            for p in load_patterns(args.input):
                try:
                    record = conjugacy_record(build_conjugacy(p))
                except NotTriodTwist as e:
                    LOG.warning("%s", e)
                    record = error_record(p, e)
                    rejected += 1
                print(dumps(record), file=out)

        if rejected:
            LOG.error("%s patterns are not triod-twist", rejected)
            sys.exit(DOMAIN_FAILURE)


command = Conjugate
