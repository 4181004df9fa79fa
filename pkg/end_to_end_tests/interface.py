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
"""Interface for end-to-end tests."""

import collections
import inspect
import logging
import shutil
import tempfile
import unittest
from typing import Callable, Generator, List, Optional, Text, Tuple

logger = logging.getLogger('ordstat.e2e_test')

# Runs the command line with the given arguments and returns the exit code.
CommandRunner = Callable[[List[Text]], int]


class BaseEndToEndTest:
  """Base class for end to end tests.

  Attributes:
      assertions: Instance of unittest.TestCase
      workdir: scratch directory for reports, removed after the run.
  """
  assertions: unittest.TestCase
  workdir: Optional[Text]

  NAME = 'name'

  def __init__(self):
    """Initialize the end-to-end test object."""
    self.assertions = unittest.TestCase()
    self.assertions.maxDiff = None
    self.workdir = None
    self._counter = collections.Counter()

  def _get_test_methods(
      self) -> Generator[Tuple[Text, Callable[[CommandRunner], None]], None,
                         None]:
    """Inspect class and list all methods that matches the criteria.

    Yields:
        Function name and bound method.
    """
    for name, func in inspect.getmembers(self, predicate=inspect.ismethod):
      if name.startswith('test_'):
        yield name, func

  def setup(self):
    """Setup function that is run before any tests."""
    self.workdir = tempfile.mkdtemp(prefix=f'ordstat-{self.NAME}-')

  def teardown(self):
    """Removes the scratch directory."""
    if self.workdir:
      shutil.rmtree(self.workdir, ignore_errors=True)
      self.workdir = None

  def run_tests(self, run: CommandRunner) -> collections.Counter:
    """Run all test functions from the class.

    Args:
        run: the command line entry point, see CommandRunner.

    Returns:
        Counter of number of tests and errors.
    """
    logger.info('*** %s ***', self.NAME)
    for test_name, test_func in self._get_test_methods():
      self._counter['tests'] += 1
      logger.info('Running test: %s ...', test_name)
      try:
        test_func(run)
      except Exception:  # pylint: disable=broad-except
        logger.error('Error while running test %s', test_name, exc_info=True)
        self._counter['errors'] += 1
        continue
      logger.info('%s [OK]', test_name)
    return self._counter
