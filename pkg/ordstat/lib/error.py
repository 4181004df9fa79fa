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
"""Class that defines custom errors for ordstat."""

from typing import Optional, Text


class Error(Exception):
  """Base error class."""


class DomainError(Error, ValueError):
  """Raised when an argument is outside the domain of a function."""


class PreconditionError(Error, ValueError):
  """Raised when a theorem or range precondition does not hold.

  Attributes:
    constraint: human readable form of the constraint that failed.
  """

  def __init__(self, constraint: Text, message: Optional[Text] = None):
    self.constraint = constraint
    super().__init__(message or f'precondition failed: {constraint}')


class ToleranceError(Error, ArithmeticError):
  """Raised when a numerical tolerance is not met without divergence.

  Attributes:
    achieved: the error estimate that was reached.
    target: the error estimate that was required.
  """

  def __init__(self, achieved: float, target: float, what: Text = ''):
    self.achieved = achieved
    self.target = target
    super().__init__(
        f'{what or "computation"} reached error {achieved:.3g}, '
        f'required {target:.3g}')


class OutOfRangeError(Error, OverflowError):
  """Raised when a result is not representable as a finite float."""


class VacuousMomentError(Error):
  """Raised when E|X1|^delta is infinite and a check has to be skipped."""


class ConfigError(Error, ValueError):
  """Raised when a config or an input file can't be read."""


class ArgParserNonZeroStatus(Error):
  """Raised when the argument parser has exited with zero status."""
