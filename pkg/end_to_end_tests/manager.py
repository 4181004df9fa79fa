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
"""Registry of the end to end test classes."""
from typing import Dict, Generator, Set, Text, Tuple, Type

from . import interface


class EndToEndTestManager:
  """The test manager."""

  _class_registry: Dict[Text, Type[interface.BaseEndToEndTest]] = {}
  _exclude_registry: Set[Text] = set()

  @classmethod
  def get_tests(
      cls
  ) -> Generator[Tuple[Text, Type[interface.BaseEndToEndTest]], None, None]:
    """Yields (name, test class) for every test that isn't excluded."""
    for test_name, test_class in cls._class_registry.items():
      if test_name not in cls._exclude_registry:
        yield test_name, test_class

  @classmethod
  def get_test(cls, test_name: Text) -> Type[interface.BaseEndToEndTest]:
    """Retrieves a test class by name.

    Raises:
        KeyError: if the test is not registered.
    """
    try:
      return cls._class_registry[test_name.lower()]
    except KeyError as exc:
      raise KeyError(f'No such test: {test_name.lower()}') from exc

  @classmethod
  def register_test(
      cls,
      test_class: Type[interface.BaseEndToEndTest],
      exclude_from_list: bool = False):
    """Registers a test class under its lower case NAME.

    Args:
        test_class (type): the test class to register.
        exclude_from_list (boolean): register the class but leave it out of
            get_tests. Defaults to False.

    Raises:
        KeyError: if a class is already registered under the name.
    """
    test_name = test_class.NAME.lower()
    if test_name in cls._class_registry:
      raise KeyError(f'Class already set for name: {test_class.NAME}.')
    cls._class_registry[test_name] = test_class
    if exclude_from_list:
      cls._exclude_registry.add(test_name)

  @classmethod
  def clear_registration(cls):
    """Clears all test registrations."""
    cls._class_registry = {}
    cls._exclude_registry = set()
