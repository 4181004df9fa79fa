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
"""Common reusable components for ordstat."""
import math
from typing import List, Text, Tuple

from ordstat.lib.error import ConfigError


def _items(value: Text) -> List[Text]:
  return [item.strip() for item in value.split(',') if item.strip()]


def parse_int_list(value: Text) -> List[int]:
  """Parses a comma separated list of integers.

  Items of the form `a..b` expand to every integer from a to b inclusive.

  Args:
    value (str): the text to parse, e.g. "5, 11, 20..25".

  Raises:
    ConfigError: if an item isn't an integer or a range.

  Returns:
    list: the integers in the order given.
  """
  numbers = []
  for item in _items(value):
    try:
      if '..' in item:
        start, _, stop = item.partition('..')
        numbers.extend(range(int(start), int(stop) + 1))
      else:
        numbers.append(int(item))
    except ValueError as e:
      raise ConfigError(f'Not an integer or a range: [{item}]') from e
  return numbers


def parse_float_list(value: Text) -> List[float]:
  """Parses a comma separated list of reals.

  Args:
    value (str): the text to parse, e.g. "0.3, 1, 3.7".

  Raises:
    ConfigError: if an item isn't a finite real.

  Returns:
    list: the reals in the order given.
  """
  numbers = []
  for item in _items(value):
    try:
      number = float(item)
    except ValueError as e:
      raise ConfigError(f'Not a real number: [{item}]') from e
    if not math.isfinite(number):
      raise ConfigError(f'Not a finite real number: [{item}]')
    numbers.append(number)
  return numbers


def parse_pairs(value: Text) -> List[Tuple[float, float]]:
  """Parses a comma separated list of `k:delta` exponent pairs.

  Args:
    value (str): the text to parse, e.g. "1:1, 2:1, 0.5:0.5".

  Raises:
    ConfigError: if an item isn't a pair of positive reals.

  Returns:
    list: (k, delta) tuples in the order given.
  """
  pairs = []
  for item in _items(value):
    k_text, sep, delta_text = item.partition(':')
    numbers = parse_float_list(f'{k_text},{delta_text}') if sep else []
    if len(numbers) != 2:
      raise ConfigError(
          f'Exponent pair has to be written k:delta, got [{item}]')
    k, delta = numbers
    if k <= 0 or delta <= 0:
      raise ConfigError(f'Exponents have to be positive, got [{item}]')
    pairs.append((k, delta))
  return pairs


def parse_name_list(value: Text) -> List[Text]:
  """Parses a comma separated list of names or paths."""
  return _items(value)


def format_real(value: float) -> Text:
  """Formats a real with 17 significant digits, `inf`/`nan` spelled out."""
  if value is None:
    return ''
  if math.isnan(value):
    return 'nan'
  if math.isinf(value):
    return 'inf' if value > 0 else '-inf'
  return f'{value:.17g}'
