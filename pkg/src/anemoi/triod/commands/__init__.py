# (C) Copyright 2024 Anemoi contributors.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# In applying this licence, ECMWF does not waive the privileges and immunities
# granted to it by virtue of its status as an intergovernmental organisation
# nor does it submit to any jurisdiction.

import argparse
import logging
import os
import sys
from contextlib import contextmanager

from anemoi.utils.cli import Command
from anemoi.utils.cli import Failed
from anemoi.utils.cli import register_commands

__all__ = ["Command"]

LOG = logging.getLogger(__name__)

# Exit codes shared by all commands
DOMAIN_FAILURE = 1
USAGE_FAILURE = 2


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def load_patterns(path: str, quotient: bool = False) -> list:
    """Read a pattern corpus, exiting with a usage failure on bad input."""
    from ..errors import PatternError
    from ..pattern import branch_classes
    from ..sources import source_registry

    try:
        patterns = list(source_registry.create("file", path)(None))
    except PatternError as e:
        LOG.error("%s: %s", path, e)
        sys.exit(USAGE_FAILURE)
    except OSError as e:
        LOG.error("Cannot read %s: %s", path, e)
        sys.exit(USAGE_FAILURE)

    if quotient:
        patterns = list(branch_classes(patterns))
    return patterns


@contextmanager
def open_output(path: str):
    """Yield a text stream for `path`; ``-`` is standard output."""
    if path == "-":
        yield sys.stdout
        return
    try:
        f = open(path, "w")
    except OSError as e:
        LOG.error("Cannot write %s: %s", path, e)
        sys.exit(USAGE_FAILURE)
    with f:
        yield f


COMMANDS = register_commands(
    os.path.dirname(__file__),
    __name__,
    lambda x: x.command(),
    lambda name, error: Failed(name, error),
)
