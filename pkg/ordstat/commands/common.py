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
"""Class that defines common ordstat commands."""

from ordstat.lib import framework, manager
from ordstat.lib.command import CommandResult
from ordstat.stats import distributions


@framework.ordstat_command
def commands(name: str = '') -> CommandResult:
  """Provides information about registered ordstat commands.

  Args:
    name (str): If empty an overview of all registered commands is provided,
        otherwise only the named command is described.

  Returns:
    CommandResult: a table with the name, description and flags of every
        registered command, or of the named one.
  """
  info_df = manager.CommandManager.get_command_info(as_pandas=True)
  if name:
    info_df = info_df[info_df.name == name.strip()]
  if info_df.empty:
    return CommandResult(f'No command named [{name}]')
  return CommandResult(info_df.to_string(index=False), info_df)


@framework.ordstat_command
def zoo(keyword: str = '') -> CommandResult:
  """Lists the reference distributions.

  Args:
    keyword (str): If set, only distributions whose name or description
        contains the keyword are listed.

  Returns:
    CommandResult: a table of distribution names, types and descriptions.
  """
  if keyword:
    zoo_df = distributions.ZOO.search(keyword)[['name', 'type', 'description']]
  else:
    zoo_df = distributions.ZOO.to_frame()
  return CommandResult(zoo_df.to_string(index=False), zoo_df)
