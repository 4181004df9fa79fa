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
"""Parent distributions, described by their quantile functions.

Every distribution is an immutable, hashable and picklable value, so it
can key the sample cache and travel to worker processes. Quantiles use
the left-continuous convention Q(u) = inf{x : F(x) >= u}.
"""

import abc
import logging
import math
import os
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Text, Tuple, Union

import numpy as np
from scipy import special

from ordstat.lib import registry
from ordstat.lib.error import ConfigError, DomainError
from ordstat.stats import quadrature
from ordstat.stats.special_functions import log_gamma

logger = logging.getLogger('ordstat.distributions')

ArrayLike = Union[float, np.ndarray]

# Probabilities of a loaded law may sum to 1 within this much; they are
# renormalised.
LOAD_SUM_TOLERANCE = 1e-9
SUM_TOLERANCE = 1e-12


class Distribution(abc.ABC):
  """A parent law given by its quantile map."""

  name: Text

  @property
  def description(self) -> Text:
    doc = type(self).__doc__ or self.name
    return doc.strip().split('\n')[0]

  @property
  @abc.abstractmethod
  def cdf_at_zero(self) -> float:
    """F(0)."""

  @property
  def mass_below_zero(self) -> float:
    """P(X < 0); equal to F(0) for laws without an atom at zero."""
    return self.cdf_at_zero

  @property
  def jump_points(self) -> Tuple[float, ...]:
    """Levels u in (0, 1) where the quantile map jumps."""
    return ()

  @abc.abstractmethod
  def quantile(self, u: ArrayLike) -> ArrayLike:
    """Q(u) for u in (0, 1)."""

  def quantile_right(self, u: ArrayLike) -> ArrayLike:
    """inf{x : F(x) > u}; differs from Q only at jump levels."""
    return self.quantile(u)

  def survival_quantile(self, s: ArrayLike) -> ArrayLike:
    """Q(1 - s), accurate when s is tiny."""
    return self.quantile(1.0 - np.asarray(s, dtype=float))

  def survival_quantile_right(self, s: ArrayLike) -> ArrayLike:
    return self.survival_quantile(s)

  def abs_moment_closed_form(self, delta: float) -> Optional[float]:
    """E|X|^delta when known in closed form, inf if it diverges."""
    del delta
    return None

  def sample(self, rng: np.random.Generator, size) -> np.ndarray:
    return np.asarray(self.quantile(rng.random(size)), dtype=float)


@dataclass(frozen=True)
class Uniform(Distribution):
  """Uniform law on [0, 1]."""
  name: Text = 'uniform'

  @property
  def cdf_at_zero(self) -> float:
    return 0.0

  def quantile(self, u):
    return np.asarray(u, dtype=float) + 0.0

  def survival_quantile(self, s):
    return 1.0 - np.asarray(s, dtype=float)

  def abs_moment_closed_form(self, delta):
    return 1.0 / (1.0 + delta)

  def sample(self, rng, size):
    return rng.random(size)


@dataclass(frozen=True)
class Exponential(Distribution):
  """Exponential law with unit rate."""
  name: Text = 'exponential'

  @property
  def cdf_at_zero(self) -> float:
    return 0.0

  def quantile(self, u):
    return -np.log1p(-np.asarray(u, dtype=float))

  def survival_quantile(self, s):
    return -np.log(np.asarray(s, dtype=float))

  def abs_moment_closed_form(self, delta):
    return math.exp(log_gamma(1.0 + delta))

  def sample(self, rng, size):
    return rng.standard_exponential(size)


@dataclass(frozen=True)
class Normal(Distribution):
  """Standard normal law."""
  name: Text = 'normal'

  @property
  def cdf_at_zero(self) -> float:
    return 0.5

  def quantile(self, u):
    return special.ndtri(u)

  def survival_quantile(self, s):
    return -special.ndtri(s)

  def abs_moment_closed_form(self, delta):
    return math.exp(
        0.5 * delta * math.log(2.0) + log_gamma(0.5 * (delta + 1.0)) -
        0.5 * math.log(math.pi))

  def sample(self, rng, size):
    return rng.standard_normal(size)


@dataclass(frozen=True)
class Pareto(Distribution):
  """Pareto law with scale 1 and tail index alpha."""
  alpha: float = 3.0
  name: Text = ''

  def __post_init__(self):
    if not math.isfinite(self.alpha) or self.alpha <= 0:
      raise DomainError(f'Pareto tail index has to be positive: {self.alpha}')
    if not self.name:
      object.__setattr__(self, 'name', f'pareto{self.alpha:g}')

  @property
  def description(self) -> Text:
    return f'Pareto law with scale 1 and tail index {self.alpha:g}.'

  @property
  def cdf_at_zero(self) -> float:
    return 0.0

  def quantile(self, u):
    return np.exp(-np.log1p(-np.asarray(u, dtype=float)) / self.alpha)

  def survival_quantile(self, s):
    return np.power(np.asarray(s, dtype=float), -1.0 / self.alpha)

  def abs_moment_closed_form(self, delta):
    if delta >= self.alpha:
      return math.inf
    return self.alpha / (self.alpha - delta)


@dataclass(frozen=True)
class FiniteDiscrete(Distribution):
  """Law with finitely many atoms.

  Attributes:
    atoms: (value, probability) pairs, values strictly increasing and
        probabilities positive, summing to 1.
  """
  atoms: Tuple[Tuple[float, float], ...] = ((0.0, 1.0),)
  name: Text = 'discrete'
  _cumulative: Tuple[float, ...] = field(
      default=(), init=False, repr=False, compare=False)

  def __post_init__(self):
    atoms = tuple((float(x), float(p)) for x, p in self.atoms)
    if not atoms:
      raise DomainError('A discrete law needs at least one atom')
    values = [x for x, _ in atoms]
    probs = [p for _, p in atoms]
    if not all(math.isfinite(x) for x in values):
      raise DomainError(f'Atoms have to be finite: {values}')
    if any(b <= a for a, b in zip(values, values[1:])):
      raise DomainError(f'Atoms have to be strictly increasing: {values}')
    if any(not math.isfinite(p) or p <= 0 for p in probs):
      raise DomainError(f'Probabilities have to be positive: {probs}')
    if abs(math.fsum(probs) - 1.0) > SUM_TOLERANCE:
      raise DomainError(
          f'Probabilities sum to {math.fsum(probs)!r}, not 1')
    cumulative = list(np.cumsum(probs))
    cumulative[-1] = 1.0
    object.__setattr__(self, 'atoms', atoms)
    object.__setattr__(self, '_cumulative', tuple(float(c) for c in cumulative))

  @property
  def description(self) -> Text:
    atoms = ', '.join(f'{x:g}:{p:g}' for x, p in self.atoms)
    return f'{self.name} {{{atoms}}}'

  @property
  def values(self) -> np.ndarray:
    return np.array([x for x, _ in self.atoms])

  @property
  def probabilities(self) -> np.ndarray:
    return np.array([p for _, p in self.atoms])

  @property
  def cumulative(self) -> np.ndarray:
    """F at each atom, the last entry exactly 1."""
    return np.array(self._cumulative)

  @property
  def cdf_at_zero(self) -> float:
    return math.fsum(p for x, p in self.atoms if x <= 0)

  @property
  def mass_below_zero(self) -> float:
    return math.fsum(p for x, p in self.atoms if x < 0)

  @property
  def jump_points(self) -> Tuple[float, ...]:
    return self._cumulative[:-1]

  def _pick(self, u, side: Text):
    index = np.searchsorted(self._cumulative, u, side=side)
    index = np.clip(index, 0, len(self.atoms) - 1)
    return self.values[index]

  def quantile(self, u):
    return self._pick(u, 'left')

  def quantile_right(self, u):
    return self._pick(u, 'right')

  def survival_quantile(self, s):
    return self.quantile(1.0 - np.asarray(s, dtype=float))

  def survival_quantile_right(self, s):
    return self.quantile_right(1.0 - np.asarray(s, dtype=float))

  def abs_moment_closed_form(self, delta):
    return math.fsum(p * abs(x)**delta for x, p in self.atoms)

  def sample(self, rng, size):
    return self.values[rng.choice(len(self.atoms), size=size,
                                  p=self.probabilities)]


@dataclass(frozen=True)
class Scaled(Distribution):
  """The law of c * X for a positive constant c."""
  base: Distribution = field(default_factory=Uniform)
  scale: float = 1.0

  def __post_init__(self):
    if not math.isfinite(self.scale) or self.scale <= 0:
      raise DomainError(f'Scale has to be a positive real: {self.scale}')

  @property
  def name(self) -> Text:
    return f'{self.base.name}*{self.scale:g}'

  @property
  def cdf_at_zero(self) -> float:
    return self.base.cdf_at_zero

  @property
  def mass_below_zero(self) -> float:
    return self.base.mass_below_zero

  @property
  def jump_points(self):
    return self.base.jump_points

  def quantile(self, u):
    return self.scale * self.base.quantile(u)

  def quantile_right(self, u):
    return self.scale * self.base.quantile_right(u)

  def survival_quantile(self, s):
    return self.scale * self.base.survival_quantile(s)

  def survival_quantile_right(self, s):
    return self.scale * self.base.survival_quantile_right(s)

  def abs_moment_closed_form(self, delta):
    moment = self.base.abs_moment_closed_form(delta)
    if moment is None:
      return None
    return self.scale**delta * moment

  def sample(self, rng, size):
    return self.scale * self.base.sample(rng, size)


@dataclass(frozen=True)
class Reflected(Distribution):
  """The law of -X."""
  base: Distribution = field(default_factory=Uniform)

  @property
  def name(self) -> Text:
    return f'-{self.base.name}'

  @property
  def cdf_at_zero(self) -> float:
    return 1.0 - self.base.mass_below_zero

  @property
  def mass_below_zero(self) -> float:
    return 1.0 - self.base.cdf_at_zero

  @property
  def jump_points(self):
    return tuple(sorted(1.0 - u for u in self.base.jump_points))

  def quantile(self, u):
    return -self.base.survival_quantile_right(u)

  def quantile_right(self, u):
    return -self.base.survival_quantile(u)

  def survival_quantile(self, s):
    return -self.base.quantile_right(s)

  def survival_quantile_right(self, s):
    return -self.base.quantile(s)

  def abs_moment_closed_form(self, delta):
    return self.base.abs_moment_closed_form(delta)

  def sample(self, rng, size):
    return -self.base.sample(rng, size)


def scaled(dist: Distribution, scale: float) -> Distribution:
  """Returns the law of scale * X; negative scales reflect."""
  if scale < 0:
    return Scaled(Reflected(dist), -scale)
  return Scaled(dist, scale)


def reflected(dist: Distribution) -> Distribution:
  return Reflected(dist)


def quantile_of_finite(atoms: Sequence[Tuple[float, float]], u: float) -> float:
  """Returns Q(u) of a finite discrete law.

  Args:
    atoms: (value, probability) pairs, values strictly increasing.
    u (float): level in (0, 1).

  Raises:
    DomainError: if u is outside (0, 1) or the atoms are malformed.

  Returns:
    float: the smallest atom x_j whose cumulative probability reaches u.
  """
  if not 0.0 < u < 1.0:
    raise DomainError(f'u has to lie in (0, 1), got {u!r}')
  return float(FiniteDiscrete(tuple(atoms)).quantile(u))


def abs_moment_numeric(dist: Distribution, delta: float) -> float:
  """Returns E|X|^delta = int_0^1 |Q(u)|^delta du, inf when divergent.

  Raises:
    DomainError: if delta is not a positive real.
    ToleranceError: if the integral neither converges nor diverges.
  """
  if not math.isfinite(delta) or delta <= 0:
    raise DomainError(f'delta has to be a positive real, got {delta!r}')
  result = quadrature.integrate_quantile_power(dist, delta, 0.0, 0.0)
  return quadrature.require_tolerance(result, f'E|X|^{delta:g}')


def abs_moment(dist: Distribution, delta: float) -> float:
  """E|X|^delta, in closed form when the law provides one."""
  moment = dist.abs_moment_closed_form(delta)
  if moment is not None:
    return moment
  return abs_moment_numeric(dist, delta)


def make_zoo() -> List[Distribution]:
  """The reference distributions, in report order."""
  return [
      Uniform(),
      Exponential(),
      Normal(),
      Pareto(1.5),
      Pareto(3.0),
      FiniteDiscrete(((-1.0, 0.5), (1.0, 0.5)), name='two_point'),
      FiniteDiscrete(((0.0, 0.5), (1.0, 0.5)), name='coin'),
      FiniteDiscrete(((-2.0, 0.25), (0.0, 0.5), (3.0, 0.25)),
                     name='three_point'),
      FiniteDiscrete(((-2.0, 0.2), (-0.5, 0.3), (1.0, 0.3), (3.0, 0.2)),
                     name='four_point'),
  ]


ZOO = registry.Registry[Distribution](
    name='zoo', docstring='Reference parent distributions.')
for _dist in make_zoo():
  ZOO.add(_dist.name, _dist)


def load_finite_discrete(path: Text) -> FiniteDiscrete:
  """Reads a finite discrete law from a text file.

  Every non-empty line that doesn't start with '#' holds a value and its
  probability, separated by whitespace or a comma. Lines may come in any
  order; probabilities summing to 1 within LOAD_SUM_TOLERANCE are
  renormalised.

  Args:
    path (str): the file to read.

  Raises:
    ConfigError: if the file can't be read or parsed.
    DomainError: if the atoms don't make up a probability law.

  Returns:
    FiniteDiscrete: the law, named after the file.
  """
  try:
    with open(path, 'r', encoding='utf-8') as fh:
      lines = fh.readlines()
  except OSError as e:
    raise ConfigError(f'Unable to read [{path}]: {e}') from e

  atoms = []
  for number, line in enumerate(lines, start=1):
    line = line.split('#', 1)[0].strip()
    if not line:
      continue
    parts = line.replace(',', ' ').split()
    if len(parts) != 2:
      raise ConfigError(f'{path}:{number}: expected "value probability"')
    try:
      atoms.append((float(parts[0]), float(parts[1])))
    except ValueError as e:
      raise ConfigError(f'{path}:{number}: {e}') from e

  total = math.fsum(p for _, p in atoms)
  if abs(total - 1.0) > LOAD_SUM_TOLERANCE:
    raise DomainError(f'Probabilities in [{path}] sum to {total!r}, not 1')
  atoms = sorted((x, p / total) for x, p in atoms)
  name = os.path.splitext(os.path.basename(path))[0] or 'discrete'
  logger.debug('Loaded %d atoms from %s', len(atoms), path)
  return FiniteDiscrete(tuple(atoms), name=name)


def get_distribution(name_or_path: Text) -> Distribution:
  """Returns a zoo law by name, or loads a discrete law from a file.

  Raises:
    registry.RegistryKeyMissingError: if the name isn't a zoo law and no
        such file exists.
  """
  if name_or_path in ZOO:
    return ZOO.lookup(name_or_path)
  if os.path.isfile(name_or_path):
    return load_finite_discrete(name_or_path)
  return ZOO.lookup(name_or_path)
