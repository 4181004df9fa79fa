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
"""Class that defines the framework for exported commands."""

from typing import Any, Callable, Optional, Text

from ordstat.lib import manager
from ordstat.lib.command import Command


def ordstat_command(
    function: Optional[Callable[..., Any]] = None,
    name: Optional[Text] = None,
    conditional: Optional[Callable[[], bool]] = None) -> Any:
  """Decorator to turn functions into ordstat command line commands.

  Args:
    function (function): if the decorator is called without any arguments
        the command function is passed to the decorator.
    name (str): name the command is invoked with. Optional and if not
        provided the name of the function will be used.
    conditional (function): a function that should return a bool, used to
        determine whether to register the command or not.

  Returns:
    the decorator function, or the command function itself.
  """
  if function:
    manager.CommandManager.register_command(
        Command.wrap(function, name=name), conditional)
    return function

  def wrapper(func):
    """Wrapper for the command."""
    manager.CommandManager.register_command(
        Command.wrap(func, name=name), conditional)
    return func

  return wrapper
