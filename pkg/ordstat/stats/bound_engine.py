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
"""Order statistic moment bounds and checks of the inequalities behind them.

The bound: for k, delta > 0, rho = k / delta, n >= 2 rho + 1 and
rho <= i <= n - rho + 1,

  E|X_{i:n}|^k <= C_rho * (E|X|^delta / g(i/(n+1)))^rho,

with g(u) = u(1-u) and C_rho = 2 sqrt(rho) e^(rho + 7/6).

Each check returns an InequalityReport. Ratios of Gamma functions are
compared in log space; lhs and rhs are exponentiated only for display.
"""

import enum
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Text, Tuple

import numpy as np

from ordstat.lib.error import DomainError, PreconditionError, VacuousMomentError
from ordstat.stats import distributions
from ordstat.stats.order_moments import MomentParams, OrderStatSpec
from ordstat.stats.special_functions import (
    log_beta,
    log_gamma,
    safe_exp,
    stirling_sandwich,
)

logger = logging.getLogger('ordstat.bound_engine')

# Slack for comparing ranks against real thresholds such as rho + 1.
RANK_TOLERANCE = 1e-12
SYMMETRY_TOLERANCE = 1e-10
CHEBYSHEV_POINTS = 10_000
# (alpha, beta) windows for the trimmed-rank consequence.
CONSEQUENCE_WINDOWS = ((0.1, 0.9), (0.25, 0.75), (0.4, 0.6))


class ProofCase(enum.Enum):
  CENTRAL = 'Central'
  LOWER_EDGE = 'LowerEdge'
  UPPER_EDGE = 'UpperEdge'
  INVALID = 'Invalid'


@dataclass(frozen=True)
class InequalityReport:
  """One checked instance of an inequality lhs <= rhs (or lhs < rhs).

  Attributes:
    name: identifies the inequality, e.g. eq4 or eq7_lt_eq8.
    lhs: left hand side.
    rhs: right hand side.
    holds: whether the inequality holds.
    margin: ln(rhs / lhs) when both sides are positive, rhs - lhs
        otherwise, so margin >= 0 whenever a non-strict check holds.
    params: parameters of the instance, rho, n, i and so on.
    strict: True when lhs < rhs is required.
    scale: 'log' when lhs and rhs are themselves logarithms.
  """
  name: Text
  lhs: float
  rhs: float
  holds: bool
  margin: float
  params: Dict[Text, Any] = field(default_factory=dict)
  strict: bool = False
  scale: Text = 'linear'

  @classmethod
  def compare(cls, name: Text, lhs: float, rhs: float,
              params: Optional[Dict[Text, Any]] = None,
              strict: bool = False) -> 'InequalityReport':
    """Builds a report from the two sides."""
    holds = lhs < rhs if strict else lhs <= rhs
    if lhs > 0 and rhs > 0 and math.isfinite(lhs) and math.isfinite(rhs):
      margin = math.log(rhs) - math.log(lhs)
    else:
      margin = rhs - lhs
    return cls(name, lhs, rhs, holds, margin, dict(params or {}), strict)

  @classmethod
  def compare_logs(cls, name: Text, log_lhs: float, log_rhs: float,
                   params: Optional[Dict[Text, Any]] = None,
                   strict: bool = False) -> 'InequalityReport':
    """Builds a report from the logarithms of two positive sides."""
    holds = log_lhs < log_rhs if strict else log_lhs <= log_rhs
    return cls(name, safe_exp(log_lhs), safe_exp(log_rhs), holds,
               log_rhs - log_lhs, dict(params or {}), strict)

  @classmethod
  def compare_in_log_scale(cls, name: Text, log_lhs: float, log_rhs: float,
                           params: Optional[Dict[Text, Any]] = None,
                           strict: bool = False) -> 'InequalityReport':
    """Like compare_logs, but keeps lhs and rhs as logarithms."""
    holds = log_lhs < log_rhs if strict else log_lhs <= log_rhs
    return cls(name, log_lhs, log_rhs, holds, log_rhs - log_lhs,
               dict(params or {}), strict, scale='log')

  @property
  def violated(self) -> bool:
    return not self.holds


def _check_rho(rho: float):
  if not isinstance(rho, (int, float)) or not math.isfinite(rho) or rho <= 0:
    raise DomainError(f'rho has to be a positive real, got {rho!r}')


def _check_sample_size(n: int, rho: float):
  if n < 2 * rho + 1:
    raise PreconditionError(
        'n >= 2*rho+1', f'n >= 2*rho+1 fails: {n} < {2 * rho + 1:g}')


def _is_integer(value: float) -> bool:
  return abs(value - round(value)) < RANK_TOLERANCE


def g(u: float) -> float:
  """u(1 - u)."""
  return u * (1.0 - u)


def log_c_rho(rho: float) -> float:
  _check_rho(rho)
  return math.log(2.0) + 0.5 * math.log(rho) + rho + 7.0 / 6.0


def c_rho(rho: float) -> float:
  """The constant 2 sqrt(rho) e^(rho + 7/6).

  Raises:
    DomainError: if rho is not a positive real.
  """
  return math.exp(log_c_rho(rho))


@dataclass(frozen=True)
class BoundParams:
  """Everything the bound depends on.

  Attributes:
    params: the exponents k and delta.
    spec: sample size and rank.
    abs_moment_delta: E|X|^delta of the parent, possibly inf.
  """
  params: MomentParams
  spec: OrderStatSpec
  abs_moment_delta: float

  def __post_init__(self):
    if math.isnan(self.abs_moment_delta) or self.abs_moment_delta < 0:
      raise DomainError(
          f'E|X|^delta has to be non-negative, got {self.abs_moment_delta!r}')

  @property
  def rho(self) -> float:
    return self.params.rho


def failed_constraint(params: MomentParams,
                      spec: OrderStatSpec) -> Optional[Text]:
  """Names the first applicability constraint that fails, if any."""
  rho = params.rho
  n, i = spec.n, spec.i
  if n < 2 * rho + 1:
    return f'n >= 2*rho+1 ({n} < {2 * rho + 1:g})'
  if i < rho - RANK_TOLERANCE:
    return f'i >= rho ({i} < {rho:g})'
  if i > n - rho + 1 + RANK_TOLERANCE:
    return f'i <= n-rho+1 ({i} > {n - rho + 1:g})'
  return None


def theorem1_bound(bound_params: BoundParams, c_scale: float = 1.0) -> float:
  """Returns C_rho * (E|X|^delta / g(i/(n+1)))^rho.

  Args:
    bound_params (BoundParams): exponents, rank and the parent moment.
    c_scale (float): multiplies the constant; 1 except in negative
        controls.

  Raises:
    PreconditionError: if n, i and rho are outside the range the bound
        covers; the error names the failed constraint.

  Returns:
    float: the bound, inf when E|X|^delta is infinite.
  """
  constraint = failed_constraint(bound_params.params, bound_params.spec)
  if constraint:
    raise PreconditionError(constraint)
  moment = bound_params.abs_moment_delta
  if math.isinf(moment):
    return math.inf
  if moment == 0:
    return 0.0
  rho = bound_params.rho
  spec = bound_params.spec
  log_bound = (
      log_c_rho(rho) +
      rho * (math.log(moment) - math.log(g(spec.i / (spec.n + 1)))))
  return c_scale * safe_exp(log_bound)


def proof_case(spec: OrderStatSpec, rho: float) -> ProofCase:
  """Which part of the argument covers rank i."""
  _check_rho(rho)
  i, n = spec.i, spec.n
  if n < 2 * rho + 1:
    return ProofCase.INVALID
  tol = RANK_TOLERANCE
  if rho + 1 - tol <= i <= n - rho + tol:
    return ProofCase.CENTRAL
  if rho - tol <= i < rho + 1 - tol:
    return ProofCase.LOWER_EDGE
  if n - rho + tol < i <= n - rho + 1 + tol:
    return ProofCase.UPPER_EDGE
  return ProofCase.INVALID


def consequence_constant(alpha: float, beta: float, rho: float) -> float:
  """C_rho * min(g(alpha/2), g(beta))^-rho.

  Raises:
    PreconditionError: unless 0 < alpha < beta < 1.
  """
  if not 0 < alpha < beta < 1:
    raise PreconditionError(
        '0 < alpha < beta < 1', f'need 0 < alpha < beta < 1, got '
        f'alpha={alpha!r}, beta={beta!r}')
  return c_rho(rho) * min(g(alpha / 2.0), g(beta))**-rho


def consequence_bound(moment: float, alpha: float, beta: float,
                      rho: float) -> float:
  """Bound on E|X_{i:n}|^k for alpha n <= i <= beta n, given E|X|^delta.

  Args:
    moment (float): E|X|^delta.
    alpha (float): lower rank fraction.
    beta (float): upper rank fraction.
    rho (float): k / delta.

  Raises:
    PreconditionError: unless 0 < alpha < beta < 1.

  Returns:
    float: C * moment^rho, independent of n and i.
  """
  constant = consequence_constant(alpha, beta, rho)
  if math.isinf(moment):
    return math.inf
  return constant * moment**rho


def _chebyshev_sides(dist: distributions.Distribution, delta: float,
                     u: np.ndarray) -> Tuple[np.ndarray, float]:
  moment = distributions.abs_moment(dist, delta)
  if math.isinf(moment):
    raise VacuousMomentError(
        f'E|X|^{delta:g} is infinite for {dist.name}; nothing to check')
  u = np.asarray(u, dtype=float)
  if np.any((u <= 0) | (u >= 1)):
    raise DomainError('u has to lie in (0, 1)')
  power = np.abs(np.asarray(dist.quantile(u), dtype=float))**delta
  weight = np.where(u >= dist.cdf_at_zero, 1.0 - u, u)
  return power * weight, moment


def chebyshev_check(dist: distributions.Distribution, delta: float,
                    u: float) -> InequalityReport:
  """Checks |Q(u)|^delta (1-u) <= E|X|^delta (u >= F(0)), or with u below.

  Raises:
    VacuousMomentError: if E|X|^delta is infinite.
    DomainError: if u is outside (0, 1).
  """
  lhs, moment = _chebyshev_sides(dist, delta, np.array([u]))
  return InequalityReport.compare(
      'chebyshev', float(lhs[0]), moment,
      {'dist': dist.name, 'delta': delta, 'u': u})


def chebyshev_worst(dist: distributions.Distribution, delta: float,
                    points: int = CHEBYSHEV_POINTS) -> InequalityReport:
  """Checks the quantile tail inequality on the grid (j + 1/2) / points.

  Returns the report of the grid point closest to violating it; it holds
  exactly when every grid point does.
  """
  u = (np.arange(points) + 0.5) / points
  lhs, moment = _chebyshev_sides(dist, delta, u)
  worst = int(np.argmax(lhs))
  return InequalityReport.compare(
      'chebyshev', float(lhs[worst]), moment,
      {'dist': dist.name, 'delta': delta, 'u': float(u[worst])})


def stirling_reports(x_values: Sequence[float]) -> List[InequalityReport]:
  """Both halves of the Stirling sandwich, in log scale, at each x."""
  reports = []
  for x in x_values:
    sandwich = stirling_sandwich(float(x))
    params = {'x': float(x)}
    reports.append(
        InequalityReport('eq3_lower', sandwich.log_lower, sandwich.log_value,
                         sandwich.lower_margin > 0, sandwich.lower_margin,
                         params, True, 'log'))
    reports.append(
        InequalityReport('eq3_upper', sandwich.log_value, sandwich.log_upper,
                         sandwich.upper_margin > 0, sandwich.upper_margin,
                         params, True, 'log'))
  return reports


def _params(rho: float, n: int, i: float) -> Dict[Text, Any]:
  return {'rho': rho, 'n': n, 'i': i}


def check_beta_ratio_lower(i: float, n: int, rho: float) -> InequalityReport:
  """B(i-rho, n-i+1) / B(i, n-i+1) <= e^(rho + 7/6) (n/i)^rho.

  The report also carries the variant with e^(1 + 7/6) in place of
  e^(rho + 7/6) under printed_rhs and printed_holds; that variant fails
  for some rho > 1 and is informational only.

  Raises:
    PreconditionError: unless rho + 1 <= i <= n.
  """
  _check_rho(rho)
  if not rho + 1 - RANK_TOLERANCE <= i <= n:
    raise PreconditionError(
        'rho+1 <= i <= n', f'need rho+1 <= i <= n, got i={i}, n={n}, '
        f'rho={rho:g}')
  log_lhs = log_beta(i - rho, n - i + 1) - log_beta(i, n - i + 1)
  log_rhs = rho + 7.0 / 6.0 + rho * math.log(n / i)
  log_printed = 1.0 + 7.0 / 6.0 + rho * math.log(n / i)
  params = _params(rho, n, i)
  params['printed_rhs'] = safe_exp(log_printed)
  params['printed_holds'] = log_lhs <= log_printed
  return InequalityReport.compare_logs('eq4', log_lhs, log_rhs, params)


def check_beta_ratio_upper(i: float, n: int, rho: float) -> InequalityReport:
  """B(i, n-rho-i+1) / B(i, n-i+1) <= e^(rho + 7/6) (n/(n-i+1))^rho.

  The left side equals the lower-rank ratio at n - i + 1; the relative
  difference between the two evaluations is kept as symmetry_error.
  The e^(1 + 7/6) variant is carried as for eq4.

  Raises:
    PreconditionError: unless 1 <= i <= n - rho.
  """
  _check_rho(rho)
  if not 1 <= i <= n - rho + RANK_TOLERANCE:
    raise PreconditionError(
        '1 <= i <= n-rho', f'need 1 <= i <= n-rho, got i={i}, n={n}, '
        f'rho={rho:g}')
  log_lhs = log_beta(i, n - rho - i + 1) - log_beta(i, n - i + 1)
  log_rhs = rho + 7.0 / 6.0 + rho * math.log(n / (n - i + 1))
  log_printed = 1.0 + 7.0 / 6.0 + rho * math.log(n / (n - i + 1))
  j = n - i + 1
  log_mirror = log_beta(j - rho, n - j + 1) - log_beta(j, n - j + 1)
  params = _params(rho, n, i)
  params['symmetry_error'] = abs(math.expm1(log_mirror - log_lhs))
  params['printed_rhs'] = safe_exp(log_printed)
  params['printed_holds'] = log_lhs <= log_printed
  return InequalityReport.compare_logs('eq5', log_lhs, log_rhs, params)


def check_beta_ratio_symmetry(i: float, n: int,
                              rho: float) -> InequalityReport:
  """The two beta ratio evaluations agree to SYMMETRY_TOLERANCE."""
  report = check_beta_ratio_upper(i, n, rho)
  return InequalityReport.compare(
      'eq5_symmetry', report.params['symmetry_error'], SYMMETRY_TOLERANCE,
      _params(rho, n, i))


def _central_ratio_log(i: int, n: int, rho: float) -> float:
  # Gamma(i-rho) Gamma(n+1) / (Gamma(i) Gamma(n-rho+1))
  return (log_gamma(i - rho) + log_gamma(n + 1) - log_gamma(i) -
          log_gamma(n - rho + 1))


def check_central_chain(i: int, n: int,
                        rho: float) -> List[InequalityReport]:
  """The chain of bounds on the beta ratio for central ranks.

  With a = i-rho-1, b = i-1, c = n-rho, the Stirling sandwich gives

    eq6: Gamma(i-rho) Gamma(n+1) / (Gamma(i) Gamma(n-rho+1))
      < eq7: e^(1/6) sqrt(a n / (c b)) (n/b)^rho (n/c)^c (a/b)^a,

  whose factors satisfy (n/c)^c < e^rho, sqrt(a n / (c b)) < 1 and
  (a/b)^a < e^(-rho + rho^2/b), so that

    eq7 <= e^(1/6 + rho^2/b) (n/b)^rho <= e^(rho + 7/6) (n/i)^rho.

  Raises:
    PreconditionError: unless i is an integer with rho+2 <= i <= n-rho.
  """
  _check_rho(rho)
  if not rho + 2 - RANK_TOLERANCE <= i <= n - rho + RANK_TOLERANCE:
    raise PreconditionError(
        'rho+2 <= i <= n-rho', f'need rho+2 <= i <= n-rho, got i={i}, '
        f'n={n}, rho={rho:g}')
  a = i - rho - 1.0
  b = i - 1.0
  c = n - rho
  params = _params(rho, n, i)

  log_eq6 = _central_ratio_log(i, n, rho)
  log_root = 0.5 * (math.log(a) + math.log(n) - math.log(c) - math.log(b))
  log_power = c * math.log1p(rho / c)
  log_ratio = a * math.log1p(-rho / b)
  log_eq7 = (1.0 / 6.0 + log_root + rho * math.log(n / b) + log_power +
             log_ratio)
  log_eq8 = 1.0 / 6.0 + rho * rho / b + rho * math.log(n / b)
  log_target = rho + 7.0 / 6.0 + rho * math.log(n / i)

  return [
      InequalityReport.compare_logs(
          'eq6_lt_eq7', log_eq6, log_eq7, params, strict=True),
      InequalityReport.compare_logs(
          'eq7_factor_power', log_power, rho, params, strict=True),
      InequalityReport.compare_logs(
          'eq7_factor_root', log_root, 0.0, params, strict=True),
      InequalityReport.compare_logs(
          'eq7_factor_ratio', log_ratio, -rho + rho * rho / b, params,
          strict=True),
      InequalityReport.compare_logs('eq7_lt_eq8', log_eq7, log_eq8, params),
      InequalityReport.compare_logs('eq8', log_eq8, log_target, params),
  ]


def _edge_ratio_log(i: float, n: int, rho: float) -> float:
  # 1 / B(i-rho, ...) style ratio Gamma(n+1) / (Gamma(i) Gamma(n-rho+1))
  return log_gamma(n + 1) - log_gamma(i) - log_gamma(n - rho + 1)


def check_edge_cases(n: int, rho: float) -> List[InequalityReport]:
  """Bounds for the ranks next to the edge of the admissible range.

  Which ranks are covered depends on rho:

    * integer rho, i = rho + 1: eq11, the binomial coefficient C(n, rho)
      against n^rho e^rho / (sqrt(rho) rho^rho);
    * 0 < rho < 1, i = 2: eq12, Gamma(n+1) / Gamma(n-rho+1) against
      e^(1/12) n^rho sqrt(1+rho);
    * non-integer rho > 1, i = [rho] + 2: eq13, the same ratio divided by
      Gamma([rho] + 2);
    * integer rho > 1, i = rho: eq16, 1 / B(rho, n-rho+1) against its
      Stirling majorant;
    * non-integer rho > 1, i = [rho] + 1: eq18.

  Each majorant is followed by a *_target report comparing the exact
  quantity with the final bound at that rank.

  Raises:
    PreconditionError: if n < 2 rho + 1.
  """
  _check_rho(rho)
  _check_sample_size(n, rho)
  reports = []
  floor = math.floor(rho + RANK_TOLERANCE)
  integer = _is_integer(rho)
  if integer:
    rho_int = int(round(rho))
    i = rho_int + 1
    log_lhs = _edge_ratio_log(i, n, rho)
    log_majorant = (rho * math.log(n) + rho - 0.5 * math.log(rho) -
                    rho * math.log(rho))
    log_target = rho + 1.0 + rho * math.log(n / i)
    params = _params(rho, n, i)
    reports.append(InequalityReport.compare_logs(
        'eq11', log_lhs, log_majorant, params, strict=True))
    reports.append(InequalityReport.compare_logs(
        'eq11_target', log_lhs, log_target, params, strict=True))
  elif floor == 0:
    i = 2
    log_lhs = _edge_ratio_log(i, n, rho)
    log_majorant = 1.0 / 12.0 + rho * math.log(n) + 0.5 * math.log1p(rho)
    log_target = 1.0 / 12.0 + rho / 2.0 + 1.0 + rho * math.log(n / 2.0)
    params = _params(rho, n, i)
    reports.append(InequalityReport.compare_logs(
        'eq12', log_lhs, log_majorant, params, strict=True))
    reports.append(InequalityReport.compare_logs(
        'eq12_target', log_lhs, log_target, params, strict=True))
  else:
    i = floor + 2
    log_lhs = _edge_ratio_log(i, n, rho)
    log_majorant = (1.0 / 12.0 + rho * math.log(n) + 0.5 * math.log1p(rho) -
                    log_gamma(i))
    log_target = rho + 1.0 + rho * math.log(n / i)
    params = _params(rho, n, i)
    reports.append(InequalityReport.compare_logs(
        'eq13', log_lhs, log_majorant, params, strict=True))
    reports.append(InequalityReport.compare_logs(
        'eq13_target', log_lhs, log_target, params, strict=True))

  if integer and rho > 1:
    i = int(round(rho))
    log_lhs = _edge_ratio_log(i, n, rho)
    log_majorant = (
        1.0 / 12.0 - 1.0 - 0.5 * math.log(2.0 * math.pi) +
        0.5 * math.log(rho - 1.0) + n * math.log(n) -
        rho * math.log(rho - 1.0) - (n - rho) * math.log(n - rho) +
        0.5 * math.log(n / (n - rho)))
    log_target = (-0.5 * math.log(math.pi) + 1.0 / 12.0 + rho + 1.0 +
                  0.5 * math.log(rho - 1.0) + rho * math.log(n / rho))
    params = _params(rho, n, i)
    reports.append(InequalityReport.compare_logs(
        'eq16', log_lhs, log_majorant, params, strict=True))
    reports.append(InequalityReport.compare_logs(
        'eq16_target', log_lhs, log_target, params, strict=True))
  elif not integer and rho > 1:
    i = floor + 1
    tail = n - 2 * floor
    log_lhs = (log_gamma(n + 1) - log_gamma(floor + 1) -
               log_gamma(n - floor) + (rho - floor - 1.0) * math.log(tail))
    log_majorant = (rho * math.log(n) - log_gamma(floor + 1) +
                    (floor + 1.0 - rho) * math.log(n / tail))
    log_target = (rho + 1.0 + 0.5 * math.log(rho) -
                  rho * math.log(g(i / (n + 1.0))))
    params = _params(rho, n, i)
    reports.append(InequalityReport.compare_logs(
        'eq18', log_lhs, log_majorant, params))
    reports.append(InequalityReport.compare_logs(
        'eq18_target', log_lhs, log_target, params, strict=True))
  return reports


def holder_i1_bound(n: int, rho: float) -> float:
  """n^rho, the bound on E|X_{1:n}|^k / (E|X|^delta)^rho for rho <= 1.

  Raises:
    DomainError: unless 0 < rho <= 1.
    PreconditionError: if n < 2 rho + 1.
  """
  _check_rho(rho)
  if rho > 1:
    raise DomainError(f'the Holder bound needs rho <= 1, got {rho!r}')
  _check_sample_size(n, rho)
  return float(n)**rho


def check_holder_i1(n: int, rho: float) -> InequalityReport:
  """n^rho <= C_rho g(1/(n+1))^-rho, so i = 1 is covered when rho <= 1."""
  lhs = holder_i1_bound(n, rho)
  rhs = c_rho(rho) * g(1.0 / (n + 1))**-rho
  return InequalityReport.compare(
      'holder_constant', lhs, rhs, _params(rho, n, 1))


def check_holder_moment(moment: float, n: int, i: int, rho: float,
                        abs_moment_delta: float,
                        params: Optional[Dict[Text, Any]] = None
                       ) -> InequalityReport:
  """E|X_{i:n}|^k <= n^rho (E|X|^delta)^rho at the extreme ranks."""
  if i not in (1, n):
    raise PreconditionError('i in {1, n}', f'need i = 1 or i = n, got i={i}')
  rhs = holder_i1_bound(n, rho) * abs_moment_delta**rho
  report_params = _params(rho, n, i)
  report_params.update(params or {})
  name = 'holder_i1' if i == 1 else 'holder_in'
  return InequalityReport.compare(name, moment, rhs, report_params)


def edge_moment_ranks(n: int, rho: float) -> Tuple[int, ...]:
  """Ranks with a moment level edge bound, the lowest and its mirror.

  The lowest rank is rho for integer rho > 1 and [rho] + 1 otherwise.
  Empty when rho <= 1.
  """
  _check_rho(rho)
  if rho <= 1:
    return ()
  floor = math.floor(rho + RANK_TOLERANCE)
  low = floor if _is_integer(rho) else floor + 1
  return tuple(sorted({low, n - low + 1}))


def log_edge_moment_factor(n: int, rho: float) -> float:
  """log of the factor multiplying (E|X|^delta)^rho in the edge bound.

  For integer rho > 1 the factor is 1 / B(rho, n-rho+1). Otherwise, with
  m = [rho], it is n! (n-2m)^(rho-m-1) / (m! (n-m-1)!).

  Raises:
    DomainError: unless rho > 1.
    PreconditionError: if n < 2 rho + 1.
  """
  _check_rho(rho)
  if rho <= 1:
    raise DomainError(f'the edge moment bound needs rho > 1, got {rho!r}')
  _check_sample_size(n, rho)
  if _is_integer(rho):
    return -log_beta(round(rho), n - round(rho) + 1)
  floor = math.floor(rho)
  return (log_gamma(n + 1) - log_gamma(floor + 1) - log_gamma(n - floor) +
          (rho - floor - 1.0) * math.log(n - 2 * floor))


def check_edge_moment(moment: float, n: int, i: int, rho: float,
                      abs_moment_delta: float,
                      params: Optional[Dict[Text, Any]] = None
                     ) -> InequalityReport:
  """E|X_{i:n}|^k against the edge factor times (E|X|^delta)^rho.

  Named eq15 for integer rho and eq17 otherwise. The upper rank
  n - i + 1 is covered by the sign change X -> -X.

  Raises:
    PreconditionError: unless i is one of edge_moment_ranks(n, rho).
  """
  ranks = edge_moment_ranks(n, rho)
  if i not in ranks:
    raise PreconditionError(
        'edge rank', f'need i in {ranks}, got i={i}, n={n}, rho={rho:g}')
  rhs = safe_exp(log_edge_moment_factor(n, rho)) * abs_moment_delta**rho
  report_params = _params(rho, n, i)
  report_params.update(params or {})
  name = 'eq15' if _is_integer(rho) else 'eq17'
  return InequalityReport.compare(name, moment, rhs, report_params)


def eq2_bound(bound_params: BoundParams) -> float:
  """(E|X|^delta)^rho times the two beta ratios, for central ranks.

  Raises:
    PreconditionError: unless rho + 1 <= i <= n - rho.
  """
  spec = bound_params.spec
  rho = bound_params.rho
  if proof_case(spec, rho) is not ProofCase.CENTRAL:
    raise PreconditionError(
        'rho+1 <= i <= n-rho', f'need a central rank, got i={spec.i}, '
        f'n={spec.n}, rho={rho:g}')
  moment = bound_params.abs_moment_delta
  if math.isinf(moment):
    return math.inf
  n, i = spec.n, spec.i
  lower = safe_exp(log_beta(i - rho, n - i + 1) - log_beta(i, n - i + 1))
  upper = safe_exp(log_beta(i, n - rho - i + 1) - log_beta(i, n - i + 1))
  return moment**rho * (lower + upper)


def check_eq2(moment: float, bound_params: BoundParams,
              params: Optional[Dict[Text, Any]] = None) -> InequalityReport:
  """E|X_{i:n}|^k <= eq2_bound for a central rank."""
  report_params = _params(
      bound_params.rho, bound_params.spec.n, bound_params.spec.i)
  report_params.update(params or {})
  return InequalityReport.compare(
      'eq2', moment, eq2_bound(bound_params), report_params)


def check_theorem1(moment: float, bound: float,
                   params: Optional[Dict[Text, Any]] = None
                  ) -> InequalityReport:
  """E|X_{i:n}|^k <= bound, strictly unless the bound is 0."""
  return InequalityReport.compare(
      'theorem1', moment, bound, params, strict=bound > 0)


def check_consequence_domination(n: int, rho: float, alpha: float,
                                 beta: float) -> List[InequalityReport]:
  """The per-rank bound is dominated by the consequence constant.

  For every integer i with alpha n < i < beta n inside the admissible
  range, compares C_rho g(i/(n+1))^-rho (the bound at unit moment) with
  C_rho min(g(alpha/2), g(beta))^-rho.
  """
  _check_rho(rho)
  constant = consequence_constant(alpha, beta, rho)
  reports = []
  if n < 2 * rho + 1:
    return reports
  for i in range(math.floor(alpha * n) + 1, math.ceil(beta * n)):
    if not rho - RANK_TOLERANCE <= i <= n - rho + 1 + RANK_TOLERANCE:
      continue
    per_rank = c_rho(rho) * g(i / (n + 1.0))**-rho
    params = _params(rho, n, i)
    params.update({'alpha': alpha, 'beta': beta})
    reports.append(
        InequalityReport.compare('consequence', per_rank, constant, params))
  return reports
