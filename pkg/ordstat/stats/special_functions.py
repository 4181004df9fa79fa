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
"""Log-gamma and log-beta evaluation and the Stirling sandwich.

Every Gamma and beta ratio used by the bound checks goes through the
functions below. Ratios are formed by subtracting logarithms and
exponentiating once, so n can go well beyond 10^6 without overflow.
"""

import math
import numbers
import sys
from dataclasses import dataclass
from typing import Optional

import mpmath
from scipy import special

from ordstat.lib.error import DomainError, OutOfRangeError

LOG_FLOAT_MAX = math.log(sys.float_info.max)
LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)

# Working precision of the sandwich margins, in decimal digits.
_SANDWICH_DPS = 30


def _check_positive(x: float, name: str = 'x'):
  if not isinstance(x, numbers.Real) or isinstance(x, bool):
    raise DomainError(f'{name} has to be a real number, got {x!r}')
  if not math.isfinite(x) or x <= 0:
    raise DomainError(f'{name} has to be a finite positive real, got {x!r}')


def safe_exp(log_value: float) -> float:
  """Exponentiates, returning inf instead of raising on overflow."""
  if log_value > LOG_FLOAT_MAX:
    return math.inf
  return math.exp(log_value)


def log_gamma(x: float) -> float:
  """Returns ln Gamma(x) for x > 0.

  Args:
    x (float): a finite positive real.

  Raises:
    DomainError: if x is not finite or not positive.

  Returns:
    float: the natural logarithm of Gamma(x).
  """
  _check_positive(x)
  return float(special.gammaln(x))


def log_beta(a: float, b: float) -> float:
  """Returns ln B(a, b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a + b)."""
  _check_positive(a, 'a')
  _check_positive(b, 'b')
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b)


def log_gamma_ratio(a: float, b: float) -> float:
  """Returns ln(Gamma(a) / Gamma(b))."""
  return log_gamma(a) - log_gamma(b)


def gamma_ratio(a: float, b: float) -> float:
  """Returns Gamma(a) / Gamma(b).

  Raises:
    DomainError: if a or b is not a finite positive real.
    OutOfRangeError: if the ratio is not representable as a finite float.
  """
  log_ratio = log_gamma_ratio(a, b)
  if log_ratio > LOG_FLOAT_MAX:
    raise OutOfRangeError(
        f'Gamma({a!r})/Gamma({b!r}) = exp({log_ratio:.6g}) overflows')
  return math.exp(log_ratio)


@dataclass(frozen=True)
class SandwichResult:
  """Stirling bracket of Gamma(1 + x).

  The bracket is kept in log space; lower_margin and upper_margin are
  ln Gamma(1+x) - ln lower and ln upper - ln Gamma(1+x), evaluated with
  enough digits to resolve them at x = 1e3 where they are ~1e-12.
  """
  x: float
  log_lower: float
  log_value: float
  log_upper: float
  lower_margin: float
  upper_margin: float

  @property
  def lower(self) -> float:
    return safe_exp(self.log_lower)

  @property
  def upper(self) -> float:
    return safe_exp(self.log_upper)

  @property
  def value_hint(self) -> Optional[float]:
    """Gamma(1 + x), or None when it doesn't fit in a float."""
    if self.log_value > LOG_FLOAT_MAX:
      return None
    return math.exp(self.log_value)

  @property
  def holds(self) -> bool:
    return self.lower_margin > 0 and self.upper_margin > 0


def stirling_sandwich(x: float) -> SandwichResult:
  """Brackets Gamma(1 + x) between the two Stirling expressions.

  lower = sqrt(2 pi) x^(x+1/2) e^(-x), upper = lower * e^(1/(12x)).

  Args:
    x (float): a finite positive real.

  Raises:
    DomainError: if x is not a finite positive real.

  Returns:
    SandwichResult: the bracket and its margins.
  """
  _check_positive(x)
  log_lower = LOG_SQRT_2PI + (x + 0.5) * math.log(x) - x
  log_upper = log_lower + 1.0 / (12.0 * x)

  with mpmath.workdps(_SANDWICH_DPS):
    mx = mpmath.mpf(x)
    exact_lower = (
        mpmath.log(2 * mpmath.pi) / 2 + (mx + mpmath.mpf(1) / 2) *
        mpmath.log(mx) - mx)
    exact_value = mpmath.loggamma(1 + mx)
    lower_margin = float(exact_value - exact_lower)
    upper_margin = float(exact_lower + 1 / (12 * mx) - exact_value)

  return SandwichResult(
      x=x,
      log_lower=log_lower,
      log_value=log_gamma(1.0 + x),
      log_upper=log_upper,
      lower_margin=lower_margin,
      upper_margin=upper_margin)
