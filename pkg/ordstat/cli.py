# Copyright 2026 The ordstat Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Command line entry point for ordstat."""

import argparse
import logging
import sys
from typing import Optional, Sequence, Text

# pylint: disable=unused-import
from ordstat import commands
from ordstat.helpers import report
from ordstat.lib import manager
from ordstat.lib.command import (
    EXIT_OK,
    EXIT_TOLERANCE,
    EXIT_USAGE,
    CommandArgParsingError,
    CommandArgumentParser,
)
from ordstat.lib.error import (
    ArgParserNonZeroStatus,
    ConfigError,
    DomainError,
    OutOfRangeError,
    PreconditionError,
    ToleranceError,
)
from ordstat.lib.registry import RegistryKeyError

logger = logging.getLogger('ordstat.cli')

USAGE_ERRORS = (
    CommandArgParsingError,
    ConfigError,
    DomainError,
    OutOfRangeError,
    PreconditionError,
    RegistryKeyError,
)


def _global_options() -> argparse.ArgumentParser:
  """Options accepted before and after the command name."""
  parser = argparse.ArgumentParser(add_help=False)
  parser.add_argument(
      '--seed', type=int, default=argparse.SUPPRESS,
      help='seed for Monte Carlo estimates')
  parser.add_argument(
      '--out', default=argparse.SUPPRESS, help='path of the report to write')
  parser.add_argument(
      '--format', dest='report_format', choices=report.FORMATS,
      default=argparse.SUPPRESS, help='report format')
  parser.add_argument(
      '--verbose', action='store_true', default=argparse.SUPPRESS,
      help='log progress')
  parser.add_argument(
      '--debug', action='store_true', default=argparse.SUPPRESS,
      help='log everything')
  return parser


def build_parser() -> CommandArgumentParser:
  """Returns the parser with a sub-parser for every registered command."""
  options = _global_options()
  parser = CommandArgumentParser(
      prog='ordstat',
      description='Moments of order statistics and bounds on them.',
      parents=[options])
  subparsers = parser.add_subparsers(dest='command', metavar='command')
  subparsers.required = True
  for command in manager.CommandManager.get_commands():
    command.add_parser(subparsers, [options])
  return parser


def _configure_logging(options: argparse.Namespace):
  level = logging.WARNING
  if getattr(options, 'verbose', False):
    level = logging.INFO
  if getattr(options, 'debug', False):
    level = logging.DEBUG
  logging.basicConfig(
      level=level, format='%(levelname)s %(name)s: %(message)s')


def _message(error: Exception) -> Text:
  return str(error.args[0]) if error.args else type(error).__name__


def main(argv: Optional[Sequence[Text]] = None) -> int:
  """Runs one command and returns its exit code.

  Args:
    argv (list): the arguments, sys.argv[1:] if None.

  Returns:
    int: 0 on success, 1 if an inequality is violated, 2 on usage errors
        and 3 when a numerical tolerance can't be met.
  """
  parser = build_parser()
  try:
    options = parser.parse_args(argv)
  except ArgParserNonZeroStatus:
    return EXIT_OK
  except CommandArgParsingError as e:
    print(f'ordstat: {_message(e)}', file=sys.stderr)
    return EXIT_USAGE

  _configure_logging(options)
  command = manager.CommandManager.get_command(options.command)
  try:
    result = command(options)
  except ToleranceError as e:
    print(f'ordstat: tolerance failure: {e}', file=sys.stderr)
    return EXIT_TOLERANCE
  except USAGE_ERRORS as e:
    print(f'ordstat: {_message(e)}', file=sys.stderr)
    return EXIT_USAGE

  print(result.text)
  return result.exit_code


def run():
  """Console script entry point."""
  sys.exit(main())
