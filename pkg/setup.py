#!/usr/bin/env python
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
"""This is the setup file for the project."""
from typing import List, Text

from setuptools import find_packages, setup


def from_file(name: Text) -> List[Text]:
  """Read dependencies from a requirements file."""
  with open(name, "r", encoding="utf-8") as f:
    return [line for line in f.read().splitlines() if line.strip()]


long_description = (
    "ordstat - moments of order statistics, a distribution free bound on "
    "them, and a command line that checks the bound and every inequality "
    "behind it on parameter sweeps.")

setup(
    name="ordstat",
    version="20261018",
    description="Order statistic moment bounds and their verification",
    long_description=long_description,
    license="Apache License, Version 2.0",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=find_packages(exclude=["end_to_end_tests", "end_to_end_tests.*"]),
    include_package_data=True,
    zip_safe=False,
    python_requires=">=3.7",
    install_requires=from_file("requirements.txt"),
    tests_require=from_file("requirements_dev.txt"),
    entry_points={
        "console_scripts": ["ordstat=ordstat.cli:run"],
    })
