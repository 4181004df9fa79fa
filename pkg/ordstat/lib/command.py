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
"""Types and functions turning typed, documented functions into commands."""

import argparse
from dataclasses import dataclass, field
from inspect import getfullargspec
from typing import (
    Any,
    Callable,
    Dict,
    FrozenSet,
    List,
    NoReturn,
    Optional,
    Sequence,
    Text,
    Type,
    Union,
)

import pandas
from docstring_parser import parse

from .error import ArgParserNonZeroStatus, Error


class CommandError(Error):
  """Generic ordstat error related to commands."""


class CommandParsingError(CommandError, ValueError):
  """Raised when invalid function is provided to command framework."""


class CommandArgParsingError(CommandError, ValueError):
  """Raised when invalid arguments where provided to a command."""


_CommandArgValues = [bool, int, float, str]
CommandArgValue = Union[bool, int, float, str]
_CommandArgValueType = Union[Type[bool], Type[int], Type[float], Type[str]]

# Options shared by every command; a command receives the ones it declares.
GLOBAL_ARGS: FrozenSet[Text] = frozenset(('seed', 'out', 'report_format'))

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_TOLERANCE = 3


@dataclass
class CommandResult:
  """Outcome of a command: printable text, optional report and exit code."""
  text: Text
  frame: Optional[pandas.DataFrame] = None
  exit_code: int = 0


class CommandArgumentParser(argparse.ArgumentParser):
  """Argument parser for ordstat commands."""

  def exit(self, status: int = 0, message: Optional[Text] = None) -> NoReturn:
    """Exiting method for argument parser.

    Args:
      status (int): exit status of the parser.
      message (str): the error message.

    Raises:
      CommandArgParsingError: when the parser is unable to parse the arguments.
      ArgParserNonZeroStatus: when the parser has successfully completed.
    """
    if not status:
      raise ArgParserNonZeroStatus()

    if message:
      raise CommandArgParsingError(message.strip())

    raise CommandArgParsingError("Wrong usage.")


def _flag(arg: Text) -> Text:
  return "--" + arg.replace("_", "-")


def _unwrap_optional(typ_: Any) -> Any:
  """Returns X for Optional[X], typ_ otherwise."""
  if getattr(typ_, "__origin__", None) is Union:
    args = [arg for arg in typ_.__args__ if arg is not type(None)]
    if len(args) == 1:
      return args[0]
  return typ_


@dataclass(frozen=True)
class _CommandSpec:
  """Command function specification for argument parsing purposes."""
  name: Text
  docstring: Text

  args_with_no_defaults: List[Text] = field(default_factory=list)
  args_with_defaults: Dict[Text, Any] = field(default_factory=dict)
  args_descriptions: Dict[Text, Text] = field(default_factory=dict)
  args_types: Dict[Text, _CommandArgValueType] = field(default_factory=dict)

  def __post_init__(self):
    # pylint: disable=unsupported-membership-test
    for arg, typ in self.args_types.items():
      if typ == bool and arg in self.args_with_no_defaults:
        raise CommandParsingError(
            "Arguments of type bool have to have a default value specified.")
    for arg in self.visible_args:
      if arg not in self.args_descriptions:
        raise CommandParsingError(
            "Commands have to have docstring section describing all of their "
            f"arguments; docstring missing for `{arg}`")
    # pylint: enable=unsupported-membership-test

  @property
  def visible_args(self) -> List[Text]:
    """Arguments that get their own flag, i.e. all but the global ones."""
    args = list(self.args_with_no_defaults) + list(self.args_with_defaults)
    return [arg for arg in args if arg not in GLOBAL_ARGS]

  @property
  def global_args(self) -> List[Text]:
    """Global options the command function accepts."""
    args = list(self.args_with_no_defaults) + list(self.args_with_defaults)
    return [arg for arg in args if arg in GLOBAL_ARGS]

  @classmethod
  def from_function(
      cls, func: Callable[..., Any], name: Optional[Text] = None
  ) -> "_CommandSpec":
    """Creates _CommandSpec from compatible function."""
    name = name if name else func.__name__

    if not func.__doc__:
      raise CommandParsingError("Commands have to have docstring.")

    spec = getfullargspec(func)
    if spec.varargs or spec.varkw:
      raise CommandParsingError(
          "Commands can't have explicit variadic arguments, "
          "i.e. `*args` or `**kwargs`")
    if spec.kwonlyargs:
      raise CommandParsingError("Commands can't have keyword-only arguments.")

    args: List[Text] = list(spec.args)
    args_with_defaults: Dict[Text, Any] = {}
    args_types: Dict[Text, _CommandArgValueType] = {}

    for arg, typ_ in spec.annotations.items():
      if arg == "return":
        continue
      typ_ = _unwrap_optional(typ_)
      if typ_ not in _CommandArgValues:
        raise CommandParsingError(
            f"Commands can only have arguments of type {CommandArgValue}; "
            f"got {arg}: {typ_}")
      args_types[arg] = typ_

    if spec.defaults:
      for default in reversed(spec.defaults):
        args_with_defaults[args.pop()] = default
      args_with_defaults = dict(reversed(list(args_with_defaults.items())))

    args_descriptions: Dict[Text, Text] = {
        param.arg_name: param.description  # type: ignore
        for param in parse(func.__doc__).params
    }

    return cls(
        name, func.__doc__, args, args_with_defaults, args_descriptions,
        args_types)

  def add_parser(
      self, subparsers: Any,
      parents: Sequence[argparse.ArgumentParser]) -> CommandArgumentParser:
    """Adds a sub-parser for the command to the subparsers action."""
    desc, *_ = self.docstring.strip().split("\n")
    parser = subparsers.add_parser(
        self.name, help=desc, description=desc, parents=list(parents))

    for arg in self.args_with_no_defaults:  # pylint: disable=not-an-iterable
      if arg in GLOBAL_ARGS:
        continue
      parser.add_argument(
          _flag(arg),
          dest=arg,
          type=self.args_types.get(arg, str),  # type: ignore
          action="store",
          required=True,
          help=self.args_descriptions[arg])
    for arg, default in self.args_with_defaults.items():  # pylint: disable=no-member
      if arg in GLOBAL_ARGS:
        continue
      typ = self.args_types.get(arg, str)
      if typ == bool:
        if default is None:
          raise CommandParsingError(
              f"Argument `{arg}` of type bool can't default to None.")
        parser.add_argument(
            _flag(arg),
            dest=arg,
            action="store_false" if default else "store_true",
            help=self.args_descriptions[arg],
            default=default)
      else:
        parser.add_argument(
            _flag(arg),
            dest=arg,
            type=typ,  # type: ignore
            action="store",
            help=self.args_descriptions[arg],
            default=argparse.SUPPRESS if default is None else default)
    return parser


@dataclass(frozen=True)
class Command:
  """Wrapper for an ordstat command."""
  _spec: _CommandSpec
  func: Callable[..., Any]
  __doc__: Text

  @classmethod
  def wrap(cls, func: Callable[..., Any], name: Optional[Text] = None
          ) -> "Command":
    """Wrap wraps a function to make it an ordstat command."""
    spec = _CommandSpec.from_function(func, name=name)
    return cls(spec, func, func.__doc__ or cls.__doc__)

  @property
  def name(self) -> Text:
    """Name the command is invoked with."""
    return self._spec.name

  @property
  def description(self) -> Text:
    """First line of the command docstring."""
    desc, *_ = self._spec.docstring.strip().split("\n")
    return desc

  def add_parser(
      self, subparsers: Any,
      parents: Sequence[argparse.ArgumentParser]) -> CommandArgumentParser:
    """Registers the command's argument parser with the subparsers."""
    return self._spec.add_parser(subparsers, parents)

  def __call__(self, options: argparse.Namespace) -> Any:
    kwargs: Dict[Text, Any] = {}
    for arg in self._spec.visible_args + self._spec.global_args:
      if hasattr(options, arg):
        kwargs[arg] = getattr(options, arg)
    return self.func(**kwargs)
