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
"""Tests for the ordstat utils."""
import math

import pytest

from ordstat.lib import utils
from ordstat.lib.error import ConfigError


def test_parse_int_list():
  """Test integer lists with ranges."""
  assert utils.parse_int_list('5, 11,25') == [5, 11, 25]
  assert utils.parse_int_list('3..6,10') == [3, 4, 5, 6, 10]
  assert utils.parse_int_list('') == []
  with pytest.raises(ConfigError):
    utils.parse_int_list('5,x')
  with pytest.raises(ConfigError):
    utils.parse_int_list('1..y')


def test_parse_float_list():
  """Test real lists."""
  assert utils.parse_float_list('0.3, 1,3.7') == [0.3, 1.0, 3.7]
  with pytest.raises(ConfigError):
    utils.parse_float_list('1,inf')
  with pytest.raises(ConfigError):
    utils.parse_float_list('one')


def test_parse_pairs():
  """Test k:delta pairs."""
  assert utils.parse_pairs('1:1, 3:2,0.5:0.5') == [
      (1.0, 1.0), (3.0, 2.0), (0.5, 0.5)
  ]
  for bad in ('1', '1:0', '-1:1', 'a:b', '1:', ':1', ' : ', '1:2:3'):
    with pytest.raises(ConfigError):
      utils.parse_pairs(bad)


def test_parse_name_list():
  assert utils.parse_name_list(' uniform, ,pareto1.5 ') == [
      'uniform', 'pareto1.5'
  ]


def test_format_real():
  """Test reals keep 17 significant digits."""
  assert utils.format_real(0.1) == '0.10000000000000001'
  assert utils.format_real(0.5) == '0.5'
  assert utils.format_real(math.inf) == 'inf'
  assert utils.format_real(-math.inf) == '-inf'
  assert utils.format_real(math.nan) == 'nan'
  assert utils.format_real(None) == ''
  assert float(utils.format_real(1 / 3)) == 1 / 3
