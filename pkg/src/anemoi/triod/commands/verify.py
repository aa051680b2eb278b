# (C) Copyright 2025 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

import json
import logging
import sys

from . import DOMAIN_FAILURE
from . import USAGE_FAILURE
from . import Command
from . import open_output
from . import positive_int

LOG = logging.getLogger(__name__)


class Verify(Command):
    """Run the named checks over every pattern up to a period and write the report."""

    def add_arguments(self, command_parser):
        command_parser.add_argument("--max-period", type=positive_int, help="Check every pattern up to this period.")
        command_parser.add_argument("--checks", help="Comma separated check names (default: all).")
        command_parser.add_argument("--config", help="JSON file with suite settings; flags override it.")
        command_parser.add_argument("--out", default="-", help="Report file (default: standard output).")
        command_parser.add_argument("--jobs", type=positive_int, help="Number of worker processes.")
        command_parser.add_argument(
            "--twist-multiplier",
            type=positive_int,
            help="Forced periods searched by the twist oracle, as a multiple of the pattern period.",
        )
        command_parser.add_argument(
            "--twist-budget",
            type=positive_int,
            help="Walks the twist oracle may expand per search before giving up as inconclusive.",
        )
        command_parser.add_argument(
            "--deterministic",
            action="store_true",
            help="Leave out timings so that repeated runs are byte-identical.",
        )
        command_parser.add_argument("--no-progress", action="store_true", help="Do not show a progress bar.")

    def _config(self, args):
        from ..errors import UnknownCheck
        from ..verify import SuiteConfig

        settings = {}
        if args.config:
            try:
                with open(args.config) as f:
                    settings = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                LOG.error("Cannot read %s: %s", args.config, e)
                sys.exit(USAGE_FAILURE)

        if args.max_period is not None:
            settings["max_period"] = args.max_period
        if args.checks:
            settings["checks"] = [c.strip() for c in args.checks.split(",") if c.strip()]
        if args.jobs is not None:
            settings["jobs"] = args.jobs
        if args.twist_multiplier is not None:
            settings["twist_oracle_bound_multiplier"] = args.twist_multiplier
        if args.twist_budget is not None:
            settings["twist_oracle_budget"] = args.twist_budget
        if args.deterministic:
            settings["deterministic"] = True
        if args.no_progress:
            settings["progress"] = False

        if "max_period" not in settings:
            LOG.error("No maximum period given (use --max-period or the config file)")
            sys.exit(USAGE_FAILURE)

        try:
            return SuiteConfig.from_dict(settings)
        except (UnknownCheck, ValueError, TypeError) as e:
            LOG.error("%s", e)
            sys.exit(USAGE_FAILURE)

    def run(self, args):
        from ..verify import run_suite

        cfg = self._config(args)
        report = run_suite(cfg)

        with open_output(args.out) as out:
            json.dump(report.to_dict(), out, indent=2, sort_keys=True)
            print(file=out)

        LOG.info("%s patterns, %s failures, %s inconclusive", report.patterns, report.failures, report.inconclusive)
        if not report.ok:
            sys.exit(DOMAIN_FAILURE)


command = Verify
