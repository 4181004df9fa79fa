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
"""Defines helper functions to write verification reports.

Reports are written byte for byte the same for the same input: columns
come in a fixed order, reals use 17 significant digits and nothing
time dependent goes into the metadata.
"""
import json
import logging
import math
import os
from typing import Any, Dict, Iterable, List, Optional, Sequence, Text

import pandas

from ordstat.lib.error import ConfigError
from ordstat.lib.utils import format_real

logger = logging.getLogger('ordstat.report')

FORMAT_CSV = 'csv'
FORMAT_JSON = 'json'
FORMATS = (FORMAT_CSV, FORMAT_JSON)

CELL_COLUMNS = (
    'dist', 'n', 'i', 'k', 'delta', 'rho', 'case', 'moment_exact',
    'moment_err', 'moment_mc', 'mc_se', 'bound', 'margin_ratio', 'holds')

STEP_COLUMNS = (
    'name', 'rho', 'n', 'i', 'x', 'dist', 'delta', 'u', 'alpha', 'beta',
    'lhs', 'rhs', 'margin', 'strict', 'scale', 'holds', 'printed_rhs',
    'printed_holds')


def _csv_value(value: Any) -> Text:
  if value is None:
    return ''
  if isinstance(value, bool):
    return 'true' if value else 'false'
  if isinstance(value, int):
    return str(value)
  if isinstance(value, float):
    return format_real(value)
  return str(value)


def _json_value(value: Any) -> Any:
  if isinstance(value, float) and not math.isfinite(value):
    return format_real(value)
  return value


def report_rows(reports: Iterable[Any]) -> List[Dict[Text, Any]]:
  """Flattens inequality reports into STEP_COLUMNS records."""
  rows = []
  for report in reports:
    row = dict(report.params)
    row.update({
        'name': report.name,
        'lhs': report.lhs,
        'rhs': report.rhs,
        'margin': report.margin,
        'strict': report.strict,
        'scale': report.scale,
        'holds': report.holds,
    })
    rows.append(row)
  return rows


def to_frame(rows: Sequence[Dict[Text, Any]],
             columns: Sequence[Text]) -> pandas.DataFrame:
  """Formats records as a frame of strings in the given column order."""
  return pandas.DataFrame.from_records(
      [[_csv_value(row.get(column)) for column in columns] for row in rows],
      columns=list(columns))


def steps_path(path: Text) -> Text:
  """The companion path for inequality records, <stem>.steps.csv."""
  stem, _ = os.path.splitext(path)
  return f'{stem}.steps.csv'


def _write_csv(frame: pandas.DataFrame, path: Text):
  with open(path, 'w', encoding='utf-8', newline='') as fh:
    frame.to_csv(fh, index=False)


def write_report(
    path: Text,
    report_format: Text,
    records: Sequence[Dict[Text, Any]],
    columns: Sequence[Text],
    inequalities: Optional[Sequence[Dict[Text, Any]]] = None,
    metadata: Optional[Dict[Text, Any]] = None) -> List[Text]:
  """Writes records, and optionally inequality records, to disk.

  CSV output puts the records in path and the inequalities in
  steps_path(path). JSON output puts metadata, records and inequalities
  in the one file.

  Args:
    path (str): where to write.
    report_format (str): csv or json.
    records (list): the main records.
    columns (list): column order of the main records.
    inequalities (list): optional STEP_COLUMNS records.
    metadata (dict): settings echoed into JSON output.

  Raises:
    ConfigError: if the format is unknown or the path can't be written.

  Returns:
    list: the paths written.
  """
  if report_format not in FORMATS:
    raise ConfigError(
        f'Unknown report format [{report_format}], use one of: '
        f'{", ".join(FORMATS)}')

  written = []
  try:
    if report_format == FORMAT_CSV:
      _write_csv(to_frame(records, columns), path)
      written.append(path)
      if inequalities is not None:
        _write_csv(to_frame(inequalities, STEP_COLUMNS), steps_path(path))
        written.append(steps_path(path))
    else:
      payload = {
          'metadata': {
              key: _json_value(value)
              for key, value in (metadata or {}).items()
          },
          'records': [{
              column: _json_value(row.get(column)) for column in columns
          } for row in records],
      }
      if inequalities is not None:
        payload['inequalities'] = [{
            column: _json_value(row.get(column)) for column in STEP_COLUMNS
        } for row in inequalities]
      with open(path, 'w', encoding='utf-8') as fh:
        json.dump(payload, fh, indent=2)
        fh.write('\n')
      written.append(path)
  except OSError as e:
    raise ConfigError(f'Unable to write [{path}]: {e}') from e

  for name in written:
    logger.info('Wrote %s', name)
  return written
