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
"""Tests for the moment, bound, verify and proof-steps commands."""
import math

import mock
import pytest

from ordstat.commands import verifier
from ordstat.lib import state
from ordstat.lib.command import EXIT_OK, EXIT_VIOLATION
from ordstat.lib.error import ConfigError, DomainError, PreconditionError
from ordstat.stats import distributions, order_moments
from ordstat.stats.order_moments import OrderStatSpec


@pytest.fixture(autouse=True)
def fresh_state():
  state.state(refresh_state=True)


def _value(text, key):
  for line in text.splitlines():
    if line.startswith(f'{key}: '):
      return line.split(': ', 1)[1]
  raise AssertionError(f'{key} missing from {text}')


def test_parse_sweep_config():
  """Test the key = value config format."""
  values = verifier.parse_sweep_config(
      '# sweep\n'
      'distributions = uniform, two_point\n'
      'n_values = 5, 9..11\n'
      'exponent_pairs = 1:1, 3:2  # comment\n'
      'mc_reps = 1000\n'
      'format = json\n'
      'c_scale = 0.5\n')
  config = verifier.SweepConfig(**values)
  assert config.distributions == ('uniform', 'two_point')
  assert config.n_values == (5, 9, 10, 11)
  assert config.exponent_pairs == ((1.0, 1.0), (3.0, 2.0))
  assert config.mc_reps == 1000
  assert config.report_format == 'json'
  assert config.c_scale == 0.5
  assert config.workers == 1

  with pytest.raises(ConfigError):
    verifier.parse_sweep_config('colour = red\n')
  with pytest.raises(ConfigError):
    verifier.parse_sweep_config('mc_reps 10\n')
  with pytest.raises(ConfigError):
    verifier.parse_sweep_config('mc_reps = ten\n')


def test_sweep_config_validation():
  """Test invalid sweeps are rejected."""
  default = verifier.SweepConfig()
  assert default.distributions == tuple(distributions.ZOO.keys())
  assert default.n_values == (5, 11, 25, 101)
  assert len(default.exponent_pairs) == 5

  values = verifier.parse_sweep_config('distributions =\n')
  with pytest.raises(ConfigError):
    verifier.SweepConfig(**values)
  for bad in ({'n_values': ()}, {'mc_reps': 1}, {'c_scale': 0.0},
              {'workers': 0}, {'report_format': 'xml'}):
    with pytest.raises(ConfigError):
      verifier.SweepConfig(**bad)


def test_load_sweep_config(tmp_path):
  path = tmp_path / 'sweep.cfg'
  path.write_text('n_values = 5\n')
  assert verifier.load_sweep_config(str(path)) == {'n_values': (5,)}
  with pytest.raises(ConfigError):
    verifier.load_sweep_config(str(tmp_path / 'missing.cfg'))


def test_cell_group_uniform():
  """Test every rank of a uniform group is checked."""
  result = verifier.run_cell_group(distributions.Uniform(), 9, 1.0, 1.0)
  assert [cell['i'] for cell in result.cells] == list(range(1, 10))
  assert all(cell['holds'] for cell in result.cells)
  assert result.violations == 0
  assert result.exit_code == EXIT_OK

  middle = result.cells[4]
  assert middle['moment_exact'] == pytest.approx(0.5, abs=1e-10)
  assert middle['bound'] == pytest.approx(34.916553, rel=1e-7)
  assert middle['case'] == 'Central'
  assert middle['margin_ratio'] == pytest.approx(69.833107, rel=1e-6)
  assert result.cells[-1]['case'] == 'UpperEdge'

  names = {row['name'] for row in result.inequalities}
  assert names == {'eq2', 'holder_i1', 'holder_in'}
  assert all(row['holds'] for row in result.inequalities)


def test_cell_group_ranks():
  """Test only ranks with rho <= i <= n-rho+1 make cells."""
  result = verifier.run_cell_group(distributions.Exponential(), 11, 3.0, 1.0)
  assert [cell['i'] for cell in result.cells] == list(range(3, 10))

  result = verifier.run_cell_group(distributions.Exponential(), 5, 3.0, 1.0)
  assert not result.cells


def test_cell_group_edge_moments():
  """Test both edge ranks get a moment level check when rho > 1."""
  result = verifier.run_cell_group(distributions.Exponential(), 9, 2.0, 1.0)
  edges = [row for row in result.inequalities if row['name'] == 'eq15']
  assert sorted(row['i'] for row in edges) == [2, 8]
  assert all(row['holds'] for row in edges)

  result = verifier.run_cell_group(distributions.Uniform(), 9, 3.0, 2.0)
  edges = [row for row in result.inequalities if row['name'] == 'eq17']
  assert sorted(row['i'] for row in edges) == [2, 8]
  assert all(row['holds'] for row in edges)
  assert result.violations == 0


def test_cell_group_discrete_uses_exact_sum():
  """Test discrete parents take moment_exact from the atom sum."""
  coin = distributions.ZOO.lookup('coin')
  result = verifier.run_cell_group(coin, 5, 2.0, 1.0)
  assert result.cells
  for cell in result.cells:
    spec = OrderStatSpec(5, cell['i'])
    exact = order_moments.moment_discrete_oracle(coin, spec, 2.0)
    assert cell['moment_exact'] == exact.value
    assert cell['moment_err'] == exact.error_bound
    quadrature = order_moments.moment_quadrature(coin, spec, 2.0)
    assert quadrature.value == pytest.approx(exact.value, abs=1e-8)


def test_cell_group_vacuous():
  """Test infinite parent moments give vacuous cells that hold."""
  result = verifier.run_cell_group(distributions.Pareto(1.5), 5, 1.0, 2.0)
  assert len(result.cells) == 5
  for cell in result.cells:
    assert cell['bound'] == math.inf
    assert cell['margin_ratio'] == math.inf
    assert cell['holds'] is True
  assert not result.inequalities


def test_cell_group_negative_control():
  """Test a shrunken constant is caught."""
  result = verifier.run_cell_group(
      distributions.Uniform(), 5, 1.0, 1.0, c_scale=1e-3)
  assert result.violations > 0
  assert result.exit_code == EXIT_VIOLATION
  assert not all(cell['holds'] for cell in result.cells)


def test_cell_group_monte_carlo():
  """Test Monte Carlo columns are filled when enabled."""
  result = verifier.run_cell_group(
      distributions.Uniform(), 5, 1.0, 1.0, mc_reps=2000, seed=4)
  for cell in result.cells:
    assert abs(cell['moment_mc'] - cell['moment_exact']) < 6 * cell['mc_se']


def test_verify(tmp_path):
  """Test a small sweep end to end."""
  out = tmp_path / 'sweep.csv'
  result = verifier.verify(
      dists='uniform,two_point,four_point', n_values='5,11',
      pairs='1:1,0.5:0.5', out=str(out))
  assert result.exit_code == EXIT_OK
  assert result.frame.empty
  assert 'violations: 0' in result.text
  header = out.read_text().splitlines()[0]
  assert header == ('dist,n,i,k,delta,rho,case,moment_exact,moment_err,'
                    'moment_mc,mc_se,bound,margin_ratio,holds')
  steps = (tmp_path / 'sweep.steps.csv').read_text()
  assert 'chebyshev' in steps
  assert 'consequence' in steps


def test_verify_negative_control():
  """Test the negative control lists violations."""
  result = verifier.verify(
      dists='uniform', n_values='5', pairs='1:1', c_scale=0.001)
  assert result.exit_code == EXIT_VIOLATION
  assert not result.frame.empty
  assert 'violated cells' in result.text


def test_verify_empty_distributions(tmp_path):
  """Test an empty distribution list is a usage error."""
  path = tmp_path / 'empty.cfg'
  path.write_text('distributions =\n')
  with pytest.raises(ConfigError):
    verifier.verify(config=str(path))
  with pytest.raises(ConfigError):
    verifier.verify(dists=',')
  for empty in ({'dists': ''}, {'n_values': ''}, {'pairs': ''}):
    with pytest.raises(ConfigError):
      verifier.verify(**empty)
  with pytest.raises(ConfigError):
    verifier.verify(pairs='1:')


def test_verify_given_values_override_config(tmp_path):
  """Test zero and empty values given explicitly win over the config."""
  path = tmp_path / 'sweep.cfg'
  path.write_text('seed = 7\nmc_reps = 100\noutput_path = sweep.csv\n')
  with mock.patch.object(
      verifier, 'run_sweep', return_value=verifier.SweepResult()) as run, \
      mock.patch.object(verifier.report, 'write_report', return_value=[]):
    verifier.verify(config=str(path), seed=0, mc_reps=0, out='')
    sweep = run.call_args[0][0]
    assert sweep.seed == 0
    assert sweep.mc_reps == 0
    assert sweep.output_path == ''

    verifier.verify(config=str(path))
    sweep = run.call_args[0][0]
    assert sweep.seed == 7
    assert sweep.mc_reps == 100
    assert sweep.output_path == 'sweep.csv'


def test_verify_is_deterministic(tmp_path):
  """Test identical settings write identical bytes, in parallel too."""
  outputs = []
  for name, workers in (('a.json', 1), ('b.json', 1), ('c.json', 2)):
    state.state(refresh_state=True)
    path = tmp_path / name
    verifier.verify(
        dists='normal,coin', n_values='5', pairs='1:1', mc_reps=500,
        seed=11, workers=workers, out=str(path), report_format='json')
    outputs.append(path.read_bytes())
  assert outputs[0] == outputs[1] == outputs[2]


def test_proof_step_reports():
  """Test the rho = 1, n = 10 cell."""
  reports = verifier.proof_step_reports(1.0, 10)
  assert all(report.holds for report in reports)
  eq4 = [r for r in reports if r.name == 'eq4' and r.params['i'] == 3]
  assert len(eq4) == 1
  assert eq4[0].lhs == pytest.approx(5.0, rel=1e-12)

  reports = verifier.proof_step_reports(0.3, 5)
  assert [r.params['i'] for r in reports if r.name == 'eq4'][0] == pytest.approx(1.3)

  with pytest.raises(PreconditionError):
    verifier.proof_step_reports(5.0, 8)


def test_proof_steps(tmp_path):
  """Test the proof-steps command."""
  out = tmp_path / 'steps.csv'
  result = verifier.proof_steps(rho='0.3,1,2,3.7', n='5..12,50', out=str(out))
  assert result.exit_code == EXIT_OK
  assert 'violations: 0' in result.text
  text = out.read_text()
  for name in ('eq3_lower', 'eq3_upper', 'eq4', 'eq5', 'eq5_symmetry',
               'eq6_lt_eq7', 'eq7_lt_eq8', 'eq8', 'eq11', 'eq12', 'eq13',
               'eq16', 'eq18', 'holder_constant'):
    assert f'\n{name},' in text, name

  # Cells with n < 2 rho + 1 are skipped as long as one is left.
  result = verifier.proof_steps(rho='1,5', n='8')
  assert result.exit_code == EXIT_OK
  assert 'skipped cells: 1' in result.text

  with pytest.raises(PreconditionError):
    verifier.proof_steps(rho='5', n='8')
  with pytest.raises(DomainError):
    verifier.proof_steps(rho='-1', n='8')


def test_moment():
  """Test the moment command."""
  result = verifier.moment('uniform', 9, 5, 1.0)
  assert float(_value(result.text, 'value')) == pytest.approx(0.5, abs=1e-10)
  assert _value(result.text, 'method') == 'quadrature'

  result = verifier.moment('coin', 2, 2, 1.0, method='oracle')
  assert float(_value(result.text, 'value')) == pytest.approx(0.75)
  assert _value(result.text, 'method') == 'discrete_oracle'

  result = verifier.moment('pareto1.5', 5, 5, 2.0)
  assert _value(result.text, 'diverged') == 'true'
  assert _value(result.text, 'value') == 'inf'

  result = verifier.moment('normal', 5, 3, 2.0, method='mc', reps=1000, seed=1)
  assert _value(result.text, 'method') == 'monte_carlo'

  with pytest.raises(DomainError):
    verifier.moment('uniform', 9, 5, 1.0, method='oracle')
  with pytest.raises(DomainError):
    verifier.moment('uniform', 9, 10, 1.0)
  with pytest.raises(DomainError):
    verifier.moment('uniform', 9, 5, 1.0, method='guess')


def test_bound():
  """Test the bound command."""
  result = verifier.bound('uniform', 9, 5, 1.0, 1.0)
  assert float(_value(result.text, 'bound')) == pytest.approx(
      34.916553, rel=1e-7)
  assert _value(result.text, 'case') == 'Central'

  result = verifier.bound('uniform', 9, 9, 1.0, 1.0)
  assert float(_value(result.text, 'bound')) == pytest.approx(
      96.99043, rel=1e-6)
  assert _value(result.text, 'case') == 'UpperEdge'

  result = verifier.bound('uniform', 3, 2, 2.0, 1.0)
  assert _value(result.text, 'inapplicable').startswith('n >= 2*rho+1')
  assert result.exit_code == EXIT_OK

  result = verifier.bound('pareto1.5', 11, 5, 2.0, 2.0)
  assert _value(result.text, 'bound') == 'inf'
