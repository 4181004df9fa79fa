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
"""Commands that compute moments and bounds and verify them on sweeps."""

import dataclasses
import logging
import math
from concurrent import futures
from typing import Any, Callable, Dict, List, Optional, Sequence, Text, Tuple

import numpy as np

from ordstat import version
from ordstat.helpers import report
from ordstat.lib import framework, utils
from ordstat.lib.command import (
    EXIT_OK,
    EXIT_TOLERANCE,
    EXIT_VIOLATION,
    CommandResult,
)
from ordstat.lib.error import (
    ConfigError,
    DomainError,
    PreconditionError,
    ToleranceError,
    VacuousMomentError,
)
from ordstat.stats import bound_engine, distributions, order_moments
from ordstat.stats.bound_engine import BoundParams, InequalityReport, ProofCase
from ordstat.stats.order_moments import MomentParams, OrderStatSpec

logger = logging.getLogger('ordstat.commands.verifier')

METHODS = ('quadrature', 'oracle', 'mc')

DEFAULT_N_VALUES = (5, 11, 25, 101)
DEFAULT_PAIRS = ((1.0, 1.0), (2.0, 1.0), (1.0, 2.0), (3.0, 2.0), (0.5, 0.5))
DEFAULT_PROOF_RHO = '0.3,0.5,1,1.5,2,3,3.7'
DEFAULT_PROOF_N = '3..50,56,63,71,79,89,100,112,126,141,158,178,200'
STIRLING_POINTS = 200
ZOO_NAMES = tuple(distributions.ZOO.keys())


@dataclasses.dataclass(frozen=True)
class SweepConfig:
  """Parameters of a verification sweep.

  Attributes:
    distributions: zoo names or paths of finite discrete law files.
    n_values: sample sizes.
    exponent_pairs: (k, delta) pairs.
    mc_reps: Monte Carlo repetitions per cell, 0 disables Monte Carlo.
    seed: Monte Carlo seed.
    output_path: where the report goes, empty to only print a summary.
    report_format: csv or json.
    c_scale: multiplies the bound constant; only for negative controls.
    workers: number of worker processes.
  """
  distributions: Tuple[Text, ...] = ZOO_NAMES
  n_values: Tuple[int, ...] = DEFAULT_N_VALUES
  exponent_pairs: Tuple[Tuple[float, float], ...] = DEFAULT_PAIRS
  mc_reps: int = 0
  seed: int = 0
  output_path: Text = ''
  report_format: Text = report.FORMAT_CSV
  c_scale: float = 1.0
  workers: int = 1

  def __post_init__(self):
    if not self.distributions:
      raise ConfigError('The sweep needs at least one distribution')
    if not self.n_values or any(n < 1 for n in self.n_values):
      raise ConfigError(
          f'Sample sizes have to be positive integers: {self.n_values}')
    if not self.exponent_pairs:
      raise ConfigError('The sweep needs at least one k:delta pair')
    if self.mc_reps < 0 or self.mc_reps == 1:
      raise ConfigError(f'mc_reps has to be 0 or at least 2: {self.mc_reps}')
    if not math.isfinite(self.c_scale) or self.c_scale <= 0:
      raise ConfigError(f'c_scale has to be positive: {self.c_scale}')
    if self.workers < 1:
      raise ConfigError(f'workers has to be at least 1: {self.workers}')
    if self.report_format not in report.FORMATS:
      raise ConfigError(
          f'Unknown format [{self.report_format}], use one of: '
          f'{", ".join(report.FORMATS)}')

  @property
  def metadata(self) -> Dict[Text, Any]:
    return {
        'tool': 'ordstat',
        'version': version.get_version(),
        'distributions': ','.join(self.distributions),
        'n_values': ','.join(str(n) for n in self.n_values),
        'exponent_pairs': ','.join(
            f'{utils.format_real(k)}:{utils.format_real(d)}'
            for k, d in self.exponent_pairs),
        'mc_reps': self.mc_reps,
        'seed': self.seed,
        'c_scale': self.c_scale,
    }


def _parse_int(value: Text) -> int:
  try:
    return int(value.strip())
  except ValueError as e:
    raise ConfigError(f'Not an integer: [{value}]') from e


def _parse_float(value: Text) -> float:
  numbers = utils.parse_float_list(value)
  if len(numbers) != 1:
    raise ConfigError(f'Expected one real number: [{value}]')
  return numbers[0]


_CONFIG_KEYS: Dict[Text, Tuple[Text, Callable[[Text], Any]]] = {
    'distributions': (
        'distributions', lambda v: tuple(utils.parse_name_list(v))),
    'n_values': ('n_values', lambda v: tuple(utils.parse_int_list(v))),
    'exponent_pairs': ('exponent_pairs',
                       lambda v: tuple(utils.parse_pairs(v))),
    'mc_reps': ('mc_reps', _parse_int),
    'seed': ('seed', _parse_int),
    'output_path': ('output_path', str.strip),
    'format': ('report_format', str.strip),
    'c_scale': ('c_scale', _parse_float),
    'workers': ('workers', _parse_int),
}


def parse_sweep_config(text: Text, source: Text = '<config>'
                      ) -> Dict[Text, Any]:
  """Parses `key = value` lines into SweepConfig field values.

  Args:
    text (str): the config text; '#' starts a comment.
    source (str): name used in error messages.

  Raises:
    ConfigError: on unknown keys or malformed values.

  Returns:
    dict: SweepConfig field names mapped to parsed values.
  """
  values = {}
  for number, line in enumerate(text.splitlines(), start=1):
    line = line.split('#', 1)[0].strip()
    if not line:
      continue
    key, sep, value = line.partition('=')
    key = key.strip()
    if not sep:
      raise ConfigError(f'{source}:{number}: expected "key = value"')
    if key not in _CONFIG_KEYS:
      raise ConfigError(
          f'{source}:{number}: unknown key [{key}], use one of: '
          f'{", ".join(sorted(_CONFIG_KEYS))}')
    field_name, parser = _CONFIG_KEYS[key]
    values[field_name] = parser(value)
  return values


def load_sweep_config(path: Text) -> Dict[Text, Any]:
  """Reads a sweep config file, see parse_sweep_config."""
  try:
    with open(path, 'r', encoding='utf-8') as fh:
      text = fh.read()
  except OSError as e:
    raise ConfigError(f'Unable to read config [{path}]: {e}') from e
  return parse_sweep_config(text, path)


@dataclasses.dataclass
class SweepResult:
  """Records of a sweep and what went wrong in it."""
  cells: List[Dict[Text, Any]] = dataclasses.field(default_factory=list)
  inequalities: List[Dict[Text, Any]] = dataclasses.field(default_factory=list)
  violations: int = 0
  tolerance_failures: int = 0

  def extend(self, other: 'SweepResult'):
    self.cells.extend(other.cells)
    self.inequalities.extend(other.inequalities)
    self.violations += other.violations
    self.tolerance_failures += other.tolerance_failures

  def add_reports(self, reports: Sequence[InequalityReport]):
    self.inequalities.extend(report.report_rows(reports))
    self.violations += sum(1 for r in reports if not r.holds)

  @property
  def exit_code(self) -> int:
    if self.violations:
      return EXIT_VIOLATION
    if self.tolerance_failures:
      return EXIT_TOLERANCE
    return EXIT_OK


def _margin_ratio(bound: float, exact: float) -> float:
  if math.isinf(bound):
    return math.inf
  if exact > 0:
    return bound / exact
  return math.inf if bound > 0 else 1.0


def _exact_moment(dist: distributions.Distribution, spec: OrderStatSpec,
                  k: float) -> order_moments.MomentEstimate:
  """The exact atom sum for finite discrete laws, quadrature otherwise."""
  if isinstance(dist, distributions.FiniteDiscrete):
    return order_moments.moment_discrete_oracle(dist, spec, k)
  return order_moments.moment_quadrature(dist, spec, k)


def run_cell_group(
    dist: distributions.Distribution, n: int, k: float, delta: float,
    mc_reps: int = 0, seed: int = 0, c_scale: float = 1.0) -> SweepResult:
  """Checks every admissible rank of one (law, n, k, delta) group.

  Args:
    dist (Distribution): the parent law.
    n (int): sample size.
    k (float): moment exponent of the order statistic.
    delta (float): moment exponent of the parent.
    mc_reps (int): Monte Carlo repetitions, 0 to skip.
    seed (int): Monte Carlo seed.
    c_scale (float): multiplies the bound constant.

  Returns:
    SweepResult: one cell record per rank plus the moment level checks.
  """
  result = SweepResult()
  params = MomentParams(k, delta)
  rho = params.rho
  if n < 2 * rho + 1:
    logger.info('Skipping %s n=%d k=%g delta=%g: n < 2*rho+1', dist.name, n,
                k, delta)
    return result

  try:
    moment_delta = distributions.abs_moment(dist, delta)
  except ToleranceError as e:
    logger.warning('E|X|^%g of %s: %s', delta, dist.name, e)
    result.tolerance_failures += 1
    return result
  if math.isinf(moment_delta):
    logger.info('Vacuous cells for %s with delta=%g', dist.name, delta)

  for i in range(1, n + 1):
    spec = OrderStatSpec(n, i)
    if bound_engine.failed_constraint(params, spec):
      continue
    bound_params = BoundParams(params, spec, moment_delta)
    case = bound_engine.proof_case(spec, rho)
    bound = bound_engine.theorem1_bound(bound_params, c_scale=c_scale)
    cell = {
        'dist': dist.name,
        'n': n,
        'i': i,
        'k': float(k),
        'delta': float(delta),
        'rho': rho,
        'case': case.value,
        'bound': bound,
    }
    labels = {'dist': dist.name, 'delta': float(delta)}

    try:
      exact = _exact_moment(dist, spec, k)
    except ToleranceError as e:
      logger.warning('%s n=%d i=%d k=%g: %s', dist.name, n, i, k, e)
      result.tolerance_failures += 1
      cell['moment_err'] = e.achieved
      result.cells.append(cell)
      continue
    cell['moment_exact'] = exact.value
    cell['moment_err'] = exact.error_bound

    if mc_reps:
      estimate = order_moments.moment_monte_carlo(dist, spec, k, mc_reps, seed)
      cell['moment_mc'] = estimate.value
      cell['mc_se'] = estimate.error_bound

    cell['margin_ratio'] = _margin_ratio(bound, exact.value)
    if math.isinf(bound):
      cell['holds'] = True
    else:
      theorem = bound_engine.check_theorem1(exact.value, bound)
      cell['holds'] = bool(theorem.holds)
      if not theorem.holds:
        result.violations += 1
        logger.warning('Bound violated for %s n=%d i=%d k=%g delta=%g',
                       dist.name, n, i, k, delta)
    result.cells.append(cell)

    if math.isinf(moment_delta):
      continue
    if case is ProofCase.CENTRAL:
      result.add_reports(
          [bound_engine.check_eq2(exact.value, bound_params, labels)])
    if rho <= 1 and i in (1, n):
      result.add_reports([
          bound_engine.check_holder_moment(
              exact.value, n, i, rho, moment_delta, labels)
      ])
    if i in bound_engine.edge_moment_ranks(n, rho):
      result.add_reports([
          bound_engine.check_edge_moment(
              exact.value, n, i, rho, moment_delta, labels)
      ])
  return result


def _group_task(args) -> SweepResult:
  return run_cell_group(*args)


def run_sweep(config: SweepConfig) -> SweepResult:
  """Runs every cell of the sweep and the distribution level checks.

  Records come out in the order of the config: distribution, n,
  exponent pair, rank, whatever the number of workers.

  Raises:
    RegistryKeyMissingError: if a distribution name is unknown.
    ConfigError: if a distribution file can't be read.
  """
  laws = [distributions.get_distribution(name) for name in config.distributions]
  tasks = [(dist, n, k, delta, config.mc_reps, config.seed, config.c_scale)
           for dist in laws
           for n in config.n_values
           for k, delta in config.exponent_pairs]
  logger.info('Running %d cell groups on %d worker(s)', len(tasks),
              config.workers)

  result = SweepResult()
  if config.workers > 1:
    with futures.ProcessPoolExecutor(max_workers=config.workers) as pool:
      for group in pool.map(_group_task, tasks):
        result.extend(group)
  else:
    for task in tasks:
      result.extend(_group_task(task))

  deltas = list(dict.fromkeys(delta for _, delta in config.exponent_pairs))
  for dist in laws:
    for delta in deltas:
      try:
        result.add_reports([bound_engine.chebyshev_worst(dist, delta)])
      except VacuousMomentError as e:
        logger.info('%s', e)
      except ToleranceError as e:
        logger.warning('Chebyshev check of %s: %s', dist.name, e)
        result.tolerance_failures += 1

  rhos = list(dict.fromkeys(k / delta for k, delta in config.exponent_pairs))
  for alpha, beta in bound_engine.CONSEQUENCE_WINDOWS:
    for rho in rhos:
      for n in config.n_values:
        result.add_reports(
            bound_engine.check_consequence_domination(n, rho, alpha, beta))
  return result


def _summary(result: SweepResult, written: Sequence[Text]) -> Text:
  lines = [
      f'cells: {len(result.cells)}',
      f'inequalities: {len(result.inequalities)}',
      f'violations: {result.violations}',
      f'tolerance failures: {result.tolerance_failures}',
  ]
  lines.extend(f'wrote: {path}' for path in written)
  return '\n'.join(lines)


def _failed_rows(rows: Sequence[Dict[Text, Any]]) -> List[Dict[Text, Any]]:
  return [row for row in rows if row.get('holds') is not True]


@framework.ordstat_command
def verify(
    config: Optional[str] = None,
    dists: Optional[str] = None,
    n_values: Optional[str] = None,
    pairs: Optional[str] = None,
    mc_reps: Optional[int] = None,
    c_scale: Optional[float] = None,
    workers: Optional[int] = None,
    seed: Optional[int] = None,
    out: Optional[str] = None,
    report_format: Optional[str] = None) -> CommandResult:
  """Checks the moment bound and its supporting inequalities on a sweep.

  Args:
    config (str): optional sweep config file of `key = value` lines.
    dists (str): comma separated zoo names or discrete law files.
    n_values (str): comma separated sample sizes, `a..b` for ranges.
    pairs (str): comma separated `k:delta` exponent pairs.
    mc_reps (int): Monte Carlo repetitions per cell, 0 disables them.
    c_scale (float): multiplies the bound constant, for negative controls.
    workers (int): number of worker processes.
    seed (int): Monte Carlo seed.
    out (str): report path.
    report_format (str): report format, csv or json.

  Returns:
    CommandResult: the summary, the failed records and the exit code.
  """
  values = load_sweep_config(config) if config is not None else {}
  if dists is not None:
    values['distributions'] = tuple(utils.parse_name_list(dists))
  if n_values is not None:
    values['n_values'] = tuple(utils.parse_int_list(n_values))
  if pairs is not None:
    values['exponent_pairs'] = tuple(utils.parse_pairs(pairs))
  if mc_reps is not None:
    values['mc_reps'] = mc_reps
  if c_scale is not None:
    values['c_scale'] = c_scale
  if workers is not None:
    values['workers'] = workers
  if seed is not None:
    values['seed'] = seed
  if out is not None:
    values['output_path'] = out
  if report_format is not None:
    values['report_format'] = report_format
  sweep = SweepConfig(**values)

  result = run_sweep(sweep)
  written = []
  if sweep.output_path:
    written = report.write_report(
        sweep.output_path, sweep.report_format, result.cells,
        report.CELL_COLUMNS, result.inequalities, sweep.metadata)

  failed = report.to_frame(_failed_rows(result.cells), report.CELL_COLUMNS)
  failed_steps = report.to_frame(
      _failed_rows(result.inequalities), report.STEP_COLUMNS)
  text = _summary(result, written)
  if not failed.empty:
    text += '\n\nviolated cells:\n' + failed.to_string(index=False)
  if not failed_steps.empty:
    text += ('\n\nviolated inequalities:\n' +
             failed_steps.to_string(index=False))
  return CommandResult(text, failed, result.exit_code)


def proof_step_reports(rho: float, n: int) -> List[InequalityReport]:
  """Every proof step inequality for one (rho, n) cell.

  Raises:
    DomainError: if rho is not positive.
    PreconditionError: if n < 2 rho + 1.
  """
  if rho <= 0:
    raise DomainError(f'rho has to be positive, got {rho!r}')
  if n < 2 * rho + 1:
    raise PreconditionError(
        'n >= 2*rho+1', f'n >= 2*rho+1 fails: {n} < {2 * rho + 1:g}')
  reports = []
  lower_ranks = list(range(math.ceil(rho + 1), n + 1))
  if float(rho + 1) not in lower_ranks:
    lower_ranks.insert(0, rho + 1)
  for i in lower_ranks:
    reports.append(bound_engine.check_beta_ratio_lower(i, n, rho))
  for i in range(1, math.floor(n - rho) + 1):
    reports.append(bound_engine.check_beta_ratio_upper(i, n, rho))
    reports.append(bound_engine.check_beta_ratio_symmetry(i, n, rho))
  for i in range(math.ceil(rho + 2), math.floor(n - rho) + 1):
    reports.extend(bound_engine.check_central_chain(i, n, rho))
  reports.extend(bound_engine.check_edge_cases(n, rho))
  if rho <= 1:
    reports.append(bound_engine.check_holder_i1(n, rho))
  return reports


@framework.ordstat_command(name='proof-steps')
def proof_steps(
    rho: str = DEFAULT_PROOF_RHO,
    n: str = DEFAULT_PROOF_N,
    out: str = '',
    report_format: str = report.FORMAT_CSV) -> CommandResult:
  """Checks each inequality of the argument behind the bound on a grid.

  Cells with n < 2 rho + 1 are skipped; if no cell is left the command
  fails with a usage error.

  Args:
    rho (str): comma separated values of rho = k / delta.
    n (str): comma separated sample sizes, `a..b` for ranges.
    out (str): report path.
    report_format (str): report format, csv or json.

  Returns:
    CommandResult: the summary, the violated records and the exit code.
  """
  rhos = utils.parse_float_list(rho)
  sizes = utils.parse_int_list(n)
  if not rhos or not sizes:
    raise ConfigError('proof-steps needs at least one rho and one n')
  for value in rhos:
    if value <= 0:
      raise DomainError(f'rho has to be positive, got {value!r}')

  reports = bound_engine.stirling_reports(
      np.geomspace(1e-3, 1e3, STIRLING_POINTS))
  cells = 0
  skipped = 0
  for value in rhos:
    for size in sizes:
      if size < 2 * value + 1:
        skipped += 1
        continue
      cells += 1
      reports.extend(proof_step_reports(value, size))
  if skipped:
    logger.info('Skipped %d (rho, n) cells with n < 2*rho+1', skipped)
  if not cells:
    raise PreconditionError(
        'n >= 2*rho+1', 'No (rho, n) cell satisfies n >= 2*rho+1')

  result = SweepResult()
  result.add_reports(reports)
  written = []
  if out:
    written = report.write_report(
        out, report_format, result.inequalities, report.STEP_COLUMNS,
        metadata={
            'tool': 'ordstat',
            'version': version.get_version(),
            'rho': ','.join(utils.format_real(r) for r in rhos),
            'n': ','.join(str(s) for s in sizes),
        })
  failed = report.to_frame(
      _failed_rows(result.inequalities), report.STEP_COLUMNS)
  text = '\n'.join([
      f'cells: {cells}',
      f'skipped cells: {skipped}',
      f'inequalities: {len(result.inequalities)}',
      f'violations: {result.violations}',
  ] + [f'wrote: {path}' for path in written])
  if not failed.empty:
    text += '\n\nviolated inequalities:\n' + failed.to_string(index=False)
  return CommandResult(text, failed, result.exit_code)


@framework.ordstat_command
def moment(
    dist: str,
    n: int,
    i: int,
    k: float,
    method: str = 'quadrature',
    reps: int = 100000,
    seed: int = 0) -> CommandResult:
  """Computes E|X_{i:n}|^k for a parent distribution.

  Args:
    dist (str): zoo name or path of a discrete law file.
    n (int): sample size.
    i (int): rank, 1 <= i <= n.
    k (float): moment exponent.
    method (str): quadrature, oracle (finite discrete laws) or mc.
    reps (int): Monte Carlo repetitions.
    seed (int): Monte Carlo seed.

  Returns:
    CommandResult: the estimate with its error bound and method.
  """
  if method not in METHODS:
    raise DomainError(
        f'Unknown method [{method}], use one of: {", ".join(METHODS)}')
  law = distributions.get_distribution(dist)
  spec = OrderStatSpec(n, i)
  if method == 'oracle':
    estimate = order_moments.moment_discrete_oracle(law, spec, k)
  elif method == 'mc':
    estimate = order_moments.moment_monte_carlo(law, spec, k, reps, seed)
  else:
    estimate = order_moments.moment_quadrature(law, spec, k)

  lines = [
      f'E|X_{{{i}:{n}}}|^{k:g} for {law.name}',
      f'value: {utils.format_real(estimate.value)}',
      f'error_bound: {utils.format_real(estimate.error_bound)}',
      f'method: {estimate.method}',
      f'diverged: {str(estimate.diverged).lower()}',
  ]
  return CommandResult('\n'.join(lines))


@framework.ordstat_command
def bound(
    dist: str,
    n: int,
    i: int,
    k: float,
    delta: float,
    c_scale: float = 1.0) -> CommandResult:
  """Evaluates the moment bound and says which case of its proof applies.

  Args:
    dist (str): zoo name or path of a discrete law file.
    n (int): sample size.
    i (int): rank, 1 <= i <= n.
    k (float): moment exponent of the order statistic.
    delta (float): moment exponent of the parent.
    c_scale (float): multiplies the bound constant.

  Returns:
    CommandResult: the bound or the failed constraint, and the case.
  """
  params = MomentParams(k, delta)
  spec = OrderStatSpec(n, i)
  rho = params.rho
  case = bound_engine.proof_case(spec, rho)
  lines = [f'rho: {utils.format_real(rho)}']

  constraint = bound_engine.failed_constraint(params, spec)
  if constraint:
    lines.append(f'inapplicable: {constraint}')
  else:
    law = distributions.get_distribution(dist)
    moment_delta = distributions.abs_moment(law, delta)
    value = bound_engine.theorem1_bound(
        BoundParams(params, spec, moment_delta), c_scale=c_scale)
    lines.extend([
        f'E|X|^{delta:g}: {utils.format_real(moment_delta)}',
        f'C_rho: {utils.format_real(bound_engine.c_rho(rho))}',
        f'bound: {utils.format_real(value)}',
    ])
    if math.isinf(value):
      lines.append('vacuous: E|X|^delta is infinite')
  lines.append(f'case: {case.value}')
  return CommandResult('\n'.join(lines))
