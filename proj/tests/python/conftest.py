# Copyright 2026 The lusym Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import pathlib
import subprocess

import pytest

SOURCE_DIR = pathlib.Path(os.environ.get("LUSYM_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))
CLI = os.environ.get("LUSYM_CLI", str(SOURCE_DIR / "build" / "lusym"))


def run_cli(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


@pytest.fixture
def cli():
    return run_cli


@pytest.fixture
def schema():
    def load(name):
        return json.loads((SOURCE_DIR / "docs" / "schema" / f"{name}.json").read_text())

    return load


@pytest.fixture
def source_dir():
    return SOURCE_DIR
