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

"""Rank-error channel tests."""

import numpy as np
import pytest

from lrpc.channel.channel import apply
from lrpc.channel.channel import sample_error
from lrpc.core.code import CodeParams
from lrpc.core.errors import ParameterError
from lrpc.core.field import FieldParams
from lrpc.core.subspace import Subspace
from lrpc.core.subspace import rank_weight


@pytest.fixture(scope="module")
def params():
    return CodeParams(8, 4, 2, FieldParams(2, 12), u=3)


class TestSampleError:

    def test_rank(self, params, rng):
        field = params.field

        for t in range(0, 9):
            err = sample_error(t, params, rng)

            assert err.t == t
            assert err.error.shape == (params.N,)
            assert rank_weight(field, err.error) == t
            assert Subspace.span(field, err.error) == err.support

    def test_shared_support(self, params, rng):
        err = sample_error(4, params, rng)

        for block in err.blocks():
            assert err.support.contains(block)

    def test_zero(self, params, rng):
        err = sample_error(0, params, rng)

        assert not np.any(err.error)
        assert err.coeffs.shape == (params.u, params.n, 0)

    def test_out_of_range(self, params, rng):
        with pytest.raises(ParameterError):
            sample_error(-1, params, rng)
        with pytest.raises(ParameterError):
            sample_error(13, params, rng)

    def test_bounded_by_length(self, rng):
        params = CodeParams(2, 1, 2, FieldParams(2, 8))

        assert sample_error(2, params, rng).t == 2
        with pytest.raises(ParameterError):
            sample_error(3, params, rng)

    def test_deterministic(self, params):
        err_a = sample_error(5, params, np.random.default_rng(9))
        err_b = sample_error(5, params, np.random.default_rng(9))

        assert np.array_equal(err_a.error, err_b.error)

    def test_to_dict(self, params, rng):
        data = sample_error(2, params, rng).to_dict()

        assert data['t'] == 2
        assert len(data['gamma']) == 2
        assert np.array(data['coeffs']).shape == (3, 8, 2)


class TestApply:

    def test_apply(self, params, rng):
        err = sample_error(3, params, rng)
        codeword = params.field.random_array(params.N, rng)
        received = apply(codeword, err)

        assert np.array_equal(params.field.sub_array(received, codeword),
                              err.error)

    def test_length_mismatch(self, params, rng):
        err = sample_error(3, params, rng)

        with pytest.raises(ParameterError):
            apply(np.zeros(4, dtype=np.int64), err)
