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
"""Class that defines the state, a process wide cache of computed data."""
import logging
import threading
from typing import Any, Dict, Hashable, Optional

logger = logging.getLogger('ordstat.state')

__state = None
_LOCK = threading.RLock()


def state(refresh_state: bool = False):
  """Property that returns a state object."""
  # pylint: disable=global-statement
  # Making sure we have only one state object.
  global __state

  with _LOCK:
    if refresh_state or __state is None:
      __state = State()

    return __state


class State:
  """ordstat state object."""

  _cache: Dict[Hashable, Any]

  def __init__(self, max_entries: int = 4):
    self._cache = {}
    self._max_entries = max_entries

  def add_to_cache(self, name: Hashable, value: Any):
    """Add a value to the cache or update value if it exists.

    The oldest entry is evicted once the cache holds max_entries values.

    Args:
      name (hashable): name of the value in the cache.
      value (object): the value to be stored in the cache.
    """
    with _LOCK:
      self._cache.pop(name, None)
      while len(self._cache) >= self._max_entries:
        oldest = next(iter(self._cache))
        logger.debug('Evicting %s from the cache.', oldest)
        del self._cache[oldest]
      self._cache[name] = value

  def get_from_cache(
      self, name: Hashable, default: Optional[Any] = None) -> Any:
    """Get a value from the cache.

    Args:
      name (hashable): name of the value in the cache to retrieve.
      default (object): if the value does not exist, defines the default
          value to return. This is optional and returns None if not defined.

    Returns:
      The value from the cache if it exists, otherwise the default value.
    """
    with _LOCK:
      return self._cache.get(name, default)

  def remove_from_cache(self, name: Hashable):
    """Removes a value from the cache if it exists."""
    with _LOCK:
      if name in self._cache:
        del self._cache[name]

  def clear_cache(self):
    """Removes all values from the cache."""
    with _LOCK:
      self._cache = {}
