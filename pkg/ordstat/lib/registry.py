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
"""Types and functions defining ordstat registries."""

import re
from difflib import get_close_matches
from inspect import cleandoc
from typing import (
    Any,
    Dict,
    Generic,
    Iterable,
    Iterator,
    List,
    Optional,
    Text,
    Tuple,
    TypeVar,
)

import pandas

from .error import Error

_KEY_RE = re.compile(r'^[A-Za-z][A-Za-z0-9_.\-]*$')


class RegistryKeyError(Error, KeyError):
  """Raised when Registry attempted to operate on invalid key."""


class RegistryKeyExistsError(RegistryKeyError):
  """Raised when add operation was called on already existing key."""


class RegistryKeyMissingError(RegistryKeyError):
  """Raised when non-existing key is attempted to be accessed in a Registry."""

  def __init__(self, key: Text, other_keys: Iterable[Text]):
    matches = get_close_matches(key, list(other_keys), 1)
    if not matches:
      super().__init__(f"{key} does not exist")
    else:
      super().__init__(
          f"{key} does not exist; "
          f"did you mean \"{matches[0]}\"")


A = TypeVar("A")  # pylint: disable=invalid-name


def _as_df_record(name: Text, item: Any, with_doc: bool) -> Dict[Text, Text]:
  """Create a record compatible with pandas.DataFrame.from_records func.

  Args:
    name: human readable name of the item
    item: item to be translated into the row
    with_doc: if True, add whole docstring as a column; 1st line only otherwise

  Returns:
    Dict[Text, Text]: dictionary compatible with pandas.DataFrame.from_records
  """
  doc = getattr(item, "description", None) or item.__doc__ or ""
  doc = cleandoc(str(doc))
  desc, *_ = doc.split("\n")

  record = {
      "name": name,
      "type": type(item).__name__,
      "description": desc,
  }
  if with_doc:
    record["docstring"] = doc
  return record


class Registry(Generic[A]):
  """Ordered name to value mapping with helpful lookup errors."""

  def __init__(self, name: Text, docstring: Text):
    self.name = name
    self.__doc__ = cleandoc(docstring)
    self._items: Dict[Text, A] = {}

  def __contains__(self, key: Text) -> bool:
    return key in self._items

  def __len__(self) -> int:
    return len(self._items)

  def __iter__(self) -> Iterator[Text]:
    return iter(self._items)

  def keys(self) -> List[Text]:
    """All keys in registration order."""
    return list(self._items)

  def items(self) -> Iterator[Tuple[Text, A]]:
    """Iterator over all of the key-value pairs in the registry."""
    for key, value in self._items.items():
      yield (key, value)

  def add(self, key: Text, value: A):
    """Adds a new value under the key.

    Raises:
      RegistryKeyExistsError: when required key already exists
      RegistryKeyError: when key is invalid
    """
    if not _KEY_RE.match(key):
      raise RegistryKeyError(
          f"\"{key}\" isn't a valid {self.name} key; use letters, digits, "
          "'_', '.' and '-', starting with a letter")
    if key in self._items:
      raise RegistryKeyExistsError(
          f"\"{key}\" already exists in {self.name}; remove it first")
    self._items[key] = value

  def get(self, key: Text, default: Optional[A] = None) -> Optional[A]:
    """Return the value for key if key is in the registry, else default."""
    return self._items.get(key, default)

  def lookup(self, key: Text) -> A:
    """Return the value for key.

    Raises:
      RegistryKeyMissingError: when the key is not registered, the message
          suggests the closest registered key.
    """
    if key not in self._items:
      raise RegistryKeyMissingError(key, self._items.keys())
    return self._items[key]

  def delete(self, key: Text):
    """Deletes a key from the registry."""
    if key not in self._items:
      raise RegistryKeyMissingError(key, self._items.keys())
    del self._items[key]

  def clear(self):
    """Removes every registered key."""
    self._items = {}

  def to_frame(self, with_doc: bool = False) -> pandas.DataFrame:
    """Make registry into pandas.DataFrame."""
    return pandas.DataFrame.from_records(
        [_as_df_record(key, value, with_doc) for key, value in self.items()],
        columns=["name", "type", "description"] +
        (["docstring"] if with_doc else []))

  def search(self, keyword: Text) -> pandas.DataFrame:
    """Search registry for elements containing keyword."""
    df = self.to_frame(with_doc=True)
    return df[df.name.str.contains(keyword, regex=False) |
              df.docstring.str.contains(keyword, regex=False)]
