#!/usr/bin/env python3
#
# Copyright (c) 2020 The lrpc-runtime developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing,
# software distributed under the License is distributed on an
# "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, either express or implied. See the License for the
# specific language governing permissions and limitations
# under the License.

"""Shared fixtures."""

import numpy as np
import pytest

from lrpc.core.code import CodeParams
from lrpc.core.code import keygen
from lrpc.core.field import FieldParams


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def gf8():
    return FieldParams(2, 3)


@pytest.fixture(scope="session")
def gf64():
    return FieldParams(2, 6)


@pytest.fixture(scope="session")
def gf27():
    return FieldParams(3, 3)


@pytest.fixture(scope="session")
def tiny_params(gf64):
    return CodeParams(4, 2, 2, gf64)


@pytest.fixture(scope="session")
def tiny_code(tiny_params):
    return keygen(tiny_params, np.random.default_rng(7))


@pytest.fixture(scope="session")
def small_params():
    return CodeParams(8, 4, 2, FieldParams(2, 12), u=2)


@pytest.fixture(scope="session")
def small_code(small_params):
    return keygen(small_params, np.random.default_rng(11))


@pytest.fixture(scope="session")
def interleaved_code():
    params = CodeParams(16, 8, 2, FieldParams(2, 30), u=2)
    return keygen(params, np.random.default_rng(2020))
