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
"""Class that defines the manager for all commands."""

from typing import Callable, List, Optional, Text, Tuple, Union

import pandas

from ordstat.lib import registry
from ordstat.lib.command import Command


class CommandManager:
  """Manager class for ordstat commands."""

  COMMANDS_DF_COLUMNS = ['name', 'description', 'flags']

  _commands: registry.Registry[Command] = registry.Registry(
      'commands', 'Registered ordstat commands.')

  @classmethod
  def clear_commands(cls):
    """Clear all command registration."""
    cls._commands.clear()

  @classmethod
  def deregister_command(cls, command_name: Text):
    """Removes a command from the registration.

    Args:
      command_name (str): the name of the command to remove.

    Raises:
      KeyError: if the command is not registered.
    """
    cls._commands.delete(command_name)

  @classmethod
  def get_command(cls, command_name: Text) -> Optional[Command]:
    """Return a command from the registration."""
    return cls._commands.get(command_name)

  @classmethod
  def get_commands(cls) -> List[Command]:
    """Return all registered commands, sorted by name."""
    return [cls._commands.lookup(name) for name in sorted(cls._commands)]

  @classmethod
  def get_command_info(
      cls,
      as_pandas: Optional[bool] = True
  ) -> Union[pandas.DataFrame, List[Tuple[Text, Text]]]:
    """Get a list of all commands.

    Args:
      as_pandas (bool): boolean to determine whether to receive the results
          as a list of tuples or a pandas DataFrame. Defaults to True.

    Returns:
      Either a pandas DataFrame or a list of tuples, depending on the as_pandas
      boolean.
    """
    commands = cls.get_commands()
    if not as_pandas:
      return [(x.name, x.description) for x in commands]

    entries = []
    for command in commands:
      # pylint: disable=protected-access
      flags = ' '.join(
          '--' + arg.replace('_', '-') for arg in command._spec.visible_args)
      entries.append(
          {
              'name': command.name,
              'description': command.description,
              'flags': flags,
          })
    return pandas.DataFrame(entries, columns=cls.COMMANDS_DF_COLUMNS)

  @classmethod
  def register_command(
      cls, command: Command, conditional: Optional[Callable[[], bool]] = None):
    """Register a command in ordstat.

    Args:
      command (Command): the wrapped command function to register.
      conditional (function): a function that should return a bool, used to
          determine whether to register the command or not. This is optional
          and if not provided the command will be registered.

    Raises:
      KeyError: if the command is already registered.
    """
    if conditional and not conditional():
      return
    cls._commands.add(command.name, command)
