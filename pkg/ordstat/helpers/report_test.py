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
"""Tests for the report writers."""
import json
import math

import pytest

from ordstat.helpers import report
from ordstat.lib.error import ConfigError
from ordstat.stats.bound_engine import InequalityReport

CELLS = [
    {
        'dist': 'uniform', 'n': 9, 'i': 5, 'k': 1.0, 'delta': 1.0,
        'rho': 1.0, 'case': 'Central', 'moment_exact': 0.5,
        'moment_err': 1e-14, 'bound': 34.92442, 'margin_ratio': 69.84884,
        'holds': True
    },
    {
        'dist': 'pareto1.5', 'n': 5, 'i': 3, 'k': 2.0, 'delta': 2.0,
        'rho': 1.0, 'case': 'Central', 'moment_exact': 2.0,
        'moment_err': 0.0, 'bound': math.inf, 'margin_ratio': math.inf,
        'holds': True
    },
]


def test_to_frame():
  """Test records become strings in the fixed column order."""
  frame = report.to_frame(CELLS, report.CELL_COLUMNS)
  assert list(frame.columns) == list(report.CELL_COLUMNS)
  assert frame.holds.tolist() == ['true', 'true']
  assert frame.margin_ratio.tolist()[1] == 'inf'
  assert frame.moment_mc.tolist() == ['', '']
  assert frame.n.tolist() == ['9', '5']


def test_report_rows():
  """Test inequality reports flatten into step records."""
  reports = [
      InequalityReport.compare(
          'eq4', 5.0, 8.0, {'rho': 1.0, 'n': 10, 'i': 3,
                            'printed_holds': True})
  ]
  rows = report.report_rows(reports)
  assert rows[0]['name'] == 'eq4'
  assert rows[0]['i'] == 3
  assert rows[0]['holds'] is True
  frame = report.to_frame(rows, report.STEP_COLUMNS)
  assert frame.printed_holds.tolist() == ['true']
  assert frame.lhs.tolist() == ['5']


def test_write_csv(tmp_path):
  """Test CSV output and its companion inequality file."""
  path = str(tmp_path / 'cells.csv')
  written = report.write_report(
      path, 'csv', CELLS, report.CELL_COLUMNS, inequalities=[])
  assert written == [path, str(tmp_path / 'cells.steps.csv')]
  lines = (tmp_path / 'cells.csv').read_text().splitlines()
  assert lines[0] == ','.join(report.CELL_COLUMNS)
  assert lines[1].startswith('uniform,9,5,1,1,1,Central,0.5,')
  assert lines[2].endswith(',inf,inf,true')

  # Same input, same bytes.
  first = (tmp_path / 'cells.csv').read_bytes()
  report.write_report(path, 'csv', CELLS, report.CELL_COLUMNS)
  assert (tmp_path / 'cells.csv').read_bytes() == first


def test_write_json(tmp_path):
  """Test JSON output carries metadata and spells out infinities."""
  path = str(tmp_path / 'cells.json')
  report.write_report(
      path, 'json', CELLS, report.CELL_COLUMNS, inequalities=[],
      metadata={'seed': 3, 'c_scale': 1.0})
  payload = json.loads((tmp_path / 'cells.json').read_text())
  assert payload['metadata'] == {'seed': 3, 'c_scale': 1.0}
  assert payload['records'][0]['moment_exact'] == 0.5
  assert payload['records'][1]['bound'] == 'inf'
  assert payload['records'][0]['moment_mc'] is None
  assert payload['inequalities'] == []


def test_write_errors(tmp_path):
  """Test unknown formats and unwritable paths."""
  with pytest.raises(ConfigError):
    report.write_report(str(tmp_path / 'x'), 'xml', CELLS, report.CELL_COLUMNS)
  with pytest.raises(ConfigError):
    report.write_report(
        str(tmp_path / 'missing' / 'x.csv'), 'csv', CELLS,
        report.CELL_COLUMNS)


def test_steps_path():
  assert report.steps_path('/tmp/run.csv') == '/tmp/run.steps.csv'
  assert report.steps_path('run') == 'run.steps.csv'
