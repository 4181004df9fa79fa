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
"""Moments of order statistics.

E|X_{i:n}|^k is computed three ways:

  * quadrature of |Q(u)|^k against the Beta(i, n-i+1) density,
  * an exact sum over the atoms of a finite discrete law,
  * Monte Carlo over sorted samples, reproducible from a seed.
"""

import logging
import math
from dataclasses import dataclass
from typing import Text

import numpy as np
from scipy import stats as scipy_stats

from ordstat.lib import state
from ordstat.lib.error import DomainError
from ordstat.stats import quadrature
from ordstat.stats.distributions import Distribution, FiniteDiscrete
from ordstat.stats.special_functions import log_beta

logger = logging.getLogger('ordstat.order_moments')

# Monte Carlo repetitions are drawn in chunks of this size; chunk c is
# seeded from (seed, c), so results don't depend on how chunks are run.
MC_CHUNK = 4096

METHOD_QUADRATURE = 'quadrature'
METHOD_ORACLE = 'discrete_oracle'
METHOD_MONTE_CARLO = 'monte_carlo'


def _is_int(value) -> bool:
  return isinstance(value, (int, np.integer)) and not isinstance(value, bool)


@dataclass(frozen=True)
class OrderStatSpec:
  """Sample size n and rank i, 1 <= i <= n."""
  n: int
  i: int

  def __post_init__(self):
    if not _is_int(self.n) or not _is_int(self.i):
      raise DomainError(
          f'n and i have to be integers, got n={self.n!r}, i={self.i!r}')
    if self.n < 1 or not 1 <= self.i <= self.n:
      raise DomainError(f'need 1 <= i <= n, got n={self.n}, i={self.i}')

  @property
  def mirror(self) -> 'OrderStatSpec':
    """The rank counted from the top, n - i + 1."""
    return OrderStatSpec(self.n, self.n - self.i + 1)


@dataclass(frozen=True)
class MomentParams:
  """Moment exponent k of the order statistic and delta of the parent."""
  k: float
  delta: float

  def __post_init__(self):
    for label, value in (('k', self.k), ('delta', self.delta)):
      if (not isinstance(value, (int, float)) or isinstance(value, bool) or
          not math.isfinite(value) or value <= 0):
        raise DomainError(f'{label} has to be a positive real, got {value!r}')

  @property
  def rho(self) -> float:
    return self.k / self.delta

  @property
  def floor_rho(self) -> int:
    return math.floor(self.rho)


@dataclass(frozen=True)
class MomentEstimate:
  """A value of E|X_{i:n}|^k with its uncertainty.

  Attributes:
    value: the moment, inf when diverged.
    error_bound: absolute error bound, or the standard error for
        Monte Carlo estimates.
    method: one of quadrature, discrete_oracle or monte_carlo.
    diverged: True when the moment is infinite.
  """
  value: float
  error_bound: float
  method: Text
  diverged: bool = False


def _check_k(k: float):
  if (not isinstance(k, (int, float)) or isinstance(k, bool) or
      not math.isfinite(k) or k <= 0):
    raise DomainError(f'k has to be a positive real, got {k!r}')


def moment_quadrature(
    dist: Distribution, spec: OrderStatSpec, k: float) -> MomentEstimate:
  """Computes E|X_{i:n}|^k by quadrature in quantile space.

  Args:
    dist (Distribution): the parent law.
    spec (OrderStatSpec): sample size and rank.
    k (float): positive moment exponent.

  Raises:
    DomainError: if k is not a positive real.
    ToleranceError: if the error estimate exceeds max(1e-10, 1e-8 * value)
        and the integral doesn't diverge.

  Returns:
    MomentEstimate: the moment, or a diverged estimate when infinite.
  """
  _check_k(k)
  n, i = spec.n, spec.i
  result = quadrature.integrate_quantile_power(
      dist, k, float(i - 1), float(n - i), log_beta(i, n - i + 1))
  if result.diverged:
    logger.debug('E|X_{%d:%d}|^%g diverges for %s', i, n, k, dist.name)
    return MomentEstimate(math.inf, math.inf, METHOD_QUADRATURE, True)
  value = quadrature.require_tolerance(
      result, f'E|X_{{{i}:{n}}}|^{k:g} for {dist.name}')
  return MomentEstimate(value, result.error, METHOD_QUADRATURE)


def order_stat_pmf(dist: FiniteDiscrete, spec: OrderStatSpec) -> np.ndarray:
  """P(X_{i:n} = x_j) for every atom x_j of a discrete law.

  P(X_{i:n} <= x_j) is the probability that at least i of n draws fall
  at or below x_j, a binomial tail in F(x_j).
  """
  cdf = scipy_stats.binom.sf(spec.i - 1, spec.n, dist.cumulative)
  cdf[-1] = 1.0
  return np.clip(np.diff(cdf, prepend=0.0), 0.0, 1.0)


def moment_discrete_oracle(
    dist: Distribution, spec: OrderStatSpec, k: float) -> MomentEstimate:
  """Computes E|X_{i:n}|^k exactly for a finite discrete law.

  Raises:
    DomainError: if dist is not finite discrete or k is not positive.
  """
  _check_k(k)
  if not isinstance(dist, FiniteDiscrete):
    raise DomainError(
        f'The exact sum needs a finite discrete law, {dist.name} is not')
  pmf = order_stat_pmf(dist, spec)
  weights = np.abs(dist.values)**k
  value = math.fsum(weights * pmf)
  error = 4.0 * np.finfo(float).eps * len(dist.atoms) * value
  return MomentEstimate(value, error, METHOD_ORACLE)


def _entropy(seed: int) -> int:
  return int(seed) & ((1 << 64) - 1)


def sorted_samples(
    dist: Distribution, n: int, reps: int, seed: int) -> np.ndarray:
  """A (reps, n) matrix of samples sorted along each row.

  The matrix is cached, so every rank and exponent of one (law, n)
  reuses the same draws.
  """
  key = ('sorted_samples', dist, n, reps, _entropy(seed))
  cache = state.state()
  samples = cache.get_from_cache(key)
  if samples is not None:
    return samples

  chunks = []
  for chunk, start in enumerate(range(0, reps, MC_CHUNK)):
    size = min(MC_CHUNK, reps - start)
    rng = np.random.default_rng(
        np.random.SeedSequence(_entropy(seed), spawn_key=(chunk,)))
    draws = dist.sample(rng, (size, n))
    draws.sort(axis=1)
    chunks.append(draws)
  samples = np.concatenate(chunks)
  samples.setflags(write=False)
  cache.add_to_cache(key, samples)
  return samples


def moment_monte_carlo(
    dist: Distribution, spec: OrderStatSpec, k: float, reps: int,
    seed: int) -> MomentEstimate:
  """Estimates E|X_{i:n}|^k from reps sorted samples of size n.

  Args:
    dist (Distribution): the parent law.
    spec (OrderStatSpec): sample size and rank.
    k (float): positive moment exponent.
    reps (int): number of repetitions, at least 2.
    seed (int): seed; the same seed gives bit-identical results.

  Raises:
    DomainError: if reps < 2 or k is not positive.

  Returns:
    MomentEstimate: the sample mean with its standard error as
        error_bound.
  """
  _check_k(k)
  if not _is_int(reps) or reps < 2:
    raise DomainError(f'reps has to be an integer >= 2, got {reps!r}')
  if not _is_int(seed):
    raise DomainError(f'seed has to be an integer, got {seed!r}')
  column = sorted_samples(dist, spec.n, reps, seed)[:, spec.i - 1]
  values = np.abs(column)**k
  mean = float(values.mean())
  stderr = float(values.std(ddof=1) / math.sqrt(reps))
  return MomentEstimate(mean, stderr, METHOD_MONTE_CARLO)
