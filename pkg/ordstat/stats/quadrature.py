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
"""Quantile-space quadrature with tail substitution.

Integrals of the form

  exp(-log_norm) * int_0^1 |Q(u)|^power u^a (1-u)^b du

are split into an interior piece on [EDGE, 1 - EDGE], integrated in u,
and two endpoint pieces integrated in t with u = e^-t near 0 and
u = 1 - e^-t near 1. The endpoint pieces are summed over windows of
doubling length; the run of window contributions decides between
convergence and divergence.
"""

import logging
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Iterable, List, Sequence, Tuple

from scipy import integrate
from typing_extensions import Protocol

from ordstat.lib.error import ToleranceError
from ordstat.stats.special_functions import LOG_FLOAT_MAX

logger = logging.getLogger('ordstat.quadrature')

EDGE = 1e-3
T_START = -math.log(EDGE)
# e^-745 is the smallest positive double.
T_MAX = 745.0
FIRST_WINDOW = 8.0
TAIL_RTOL = 1e-15
# A clipped last window holding at least this share of the mass per unit t
# of the window before it means the tail does not decay.
DIVERGENT_DENSITY_RATIO = 0.5

QUAD_EPSABS = 1e-15
QUAD_EPSREL = 1e-12
QUAD_LIMIT = 200


class QuantileLaw(Protocol):
  """What the integrator needs from a distribution."""

  @property
  def cdf_at_zero(self) -> float:
    ...

  @property
  def jump_points(self) -> Tuple[float, ...]:
    ...

  def quantile(self, u: float) -> float:
    ...

  def survival_quantile(self, s: float) -> float:
    ...


@dataclass(frozen=True)
class QuadratureResult:
  value: float
  error: float
  diverged: bool = False


def _quad(func: Callable[[float], float], lo: float, hi: float,
          points: Sequence[float] = ()) -> Tuple[float, float]:
  if hi <= lo:
    return 0.0, 0.0
  inner = sorted(p for p in set(points) if lo < p < hi)
  with warnings.catch_warnings():
    warnings.simplefilter('ignore', integrate.IntegrationWarning)
    value, error = integrate.quad(
        func, lo, hi, points=inner or None, epsabs=QUAD_EPSABS,
        epsrel=QUAD_EPSREL, limit=QUAD_LIMIT)
  return float(value), float(error)


def _bounded_exp(log_value: float) -> float:
  if log_value > LOG_FLOAT_MAX:
    return math.inf
  return math.exp(log_value)


def _tail(func: Callable[[float], float],
          breaks: Iterable[float]) -> QuadratureResult:
  """Integrates func over [T_START, inf) in doubling windows."""
  breaks = [b for b in breaks if math.isfinite(b)]
  total = 0.0
  error = 0.0
  previous = math.inf
  previous_density = math.inf
  lo = T_START
  width = FIRST_WINDOW
  while lo < T_MAX:
    hi = min(lo + width, T_MAX)
    piece, piece_error = _quad(func, lo, hi, breaks)
    if not math.isfinite(piece) or not math.isfinite(piece_error):
      return QuadratureResult(math.inf, math.inf, diverged=True)
    total += piece
    error += piece_error
    if piece <= TAIL_RTOL * total and piece <= previous:
      # What is left beyond hi is no larger than the last window.
      return QuadratureResult(total, error + piece)
    # The last window is clipped, so compare mass per unit of t.
    density = piece / (hi - lo)
    if hi >= T_MAX:
      if density >= DIVERGENT_DENSITY_RATIO * previous_density:
        return QuadratureResult(math.inf, math.inf, diverged=True)
      return QuadratureResult(total, error + piece)
    previous = piece
    previous_density = density
    lo = hi
    width *= 2
  return QuadratureResult(total, error)


def integrate_quantile_power(
    dist: QuantileLaw, power: float, left_exp: float, right_exp: float,
    log_norm: float = 0.0) -> QuadratureResult:
  """Integrates |Q(u)|^power u^left_exp (1-u)^right_exp / exp(log_norm).

  Args:
    dist (QuantileLaw): the distribution to integrate over.
    power (float): exponent applied to |Q(u)|.
    left_exp (float): exponent of u, at least 0.
    right_exp (float): exponent of 1 - u, at least 0.
    log_norm (float): log of the normalising constant.

  Returns:
    QuadratureResult: value and absolute error estimate, or a diverged
        result when the integral is infinite.
  """
  def interior(u: float) -> float:
    q = abs(float(dist.quantile(u)))
    if q == 0.0:
      return 0.0
    return _bounded_exp(
        power * math.log(q) + left_exp * math.log(u) +
        right_exp * math.log1p(-u) - log_norm)

  def lower(t: float) -> float:
    u = math.exp(-t)
    q = abs(float(dist.quantile(u)))
    if q == 0.0 or u == 0.0:
      return 0.0
    return _bounded_exp(
        power * math.log(q) - (left_exp + 1.0) * t +
        right_exp * math.log1p(-u) - log_norm)

  def upper(t: float) -> float:
    s = math.exp(-t)
    q = abs(float(dist.survival_quantile(s)))
    if q == 0.0 or s == 0.0:
      return 0.0
    return _bounded_exp(
        power * math.log(q) + left_exp * math.log1p(-s) -
        (right_exp + 1.0) * t - log_norm)

  jumps = [float(u) for u in dist.jump_points]
  interior_breaks: List[float] = list(jumps)
  interior_breaks.append(float(dist.cdf_at_zero))
  if left_exp + right_exp > 0:
    interior_breaks.append(left_exp / (left_exp + right_exp))
  interior_breaks = sorted(
      set(b for b in interior_breaks if EDGE < b < 1.0 - EDGE))

  value = 0.0
  error = 0.0
  knots = [EDGE] + interior_breaks + [1.0 - EDGE]
  for lo, hi in zip(knots[:-1], knots[1:]):
    piece, piece_error = _quad(interior, lo, hi)
    value += piece
    error += piece_error
  if not math.isfinite(value):
    return QuadratureResult(math.inf, math.inf, diverged=True)

  lower_breaks = [-math.log(u) for u in jumps + [float(dist.cdf_at_zero)]
                  if 0.0 < u < EDGE]
  upper_breaks = [-math.log1p(-u) for u in jumps + [float(dist.cdf_at_zero)]
                  if 1.0 - EDGE < u < 1.0]
  for func, breaks in ((lower, lower_breaks), (upper, upper_breaks)):
    tail = _tail(func, breaks)
    if tail.diverged:
      logger.debug('tail integral diverged')
      return tail
    value += tail.value
    error += tail.error

  return QuadratureResult(value, error)


def require_tolerance(result: QuadratureResult, what: str = '') -> float:
  """Returns the value if its error meets max(1e-10, 1e-8 * value)."""
  if result.diverged:
    return math.inf
  target = max(1e-10, 1e-8 * abs(result.value))
  if result.error > target:
    raise ToleranceError(result.error, target, what)
  return result.value
