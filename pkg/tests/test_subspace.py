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

"""Subspace algebra tests, checked against element enumeration."""

import numpy as np
import pytest

from lrpc.core.errors import DivisionByZero
from lrpc.core.errors import ParameterError
from lrpc.core.field import FieldParams
from lrpc.core.subspace import Subspace
from lrpc.core.subspace import intersect
from lrpc.core.subspace import intersect_all
from lrpc.core.subspace import product_space
from lrpc.core.subspace import random_element_of
from lrpc.core.subspace import random_subspace
from lrpc.core.subspace import rank_distance
from lrpc.core.subspace import rank_weight
from lrpc.core.subspace import scalar_inverse_space


def _enum_set(space):
    return set(int(x) for x in space.enumerate())


class TestSubspace:

    def test_canonical(self, gf8):
        assert Subspace.span(gf8, [3, 2]) == Subspace.span(gf8, [1, 2])
        assert Subspace.span(gf8, [3, 3, 0]).dim == 1
        assert Subspace.span(gf8, [0]) == Subspace.zero(gf8)
        assert Subspace.full(gf8).dim == 3

    def test_membership(self, gf8):
        space = Subspace.span(gf8, [4, 3])

        assert 7 in space
        assert 0 in space
        assert 2 not in space
        assert Subspace.span(gf8, [7]).issubspace(space)

    def test_sum(self, gf8):
        space = Subspace.span(gf8, [1]) + Subspace.span(gf8, [2])
        assert space == Subspace.span(gf8, [1, 2])

    def test_enumerate(self, gf8):
        assert _enum_set(Subspace.span(gf8, [4, 3])) == {0, 3, 4, 7}

    def test_worked_intersection(self, gf8):
        span_a = Subspace.span(gf8, [4, 3])
        span_b = Subspace.span(gf8, [2, 4])

        assert intersect(span_a, span_b) == Subspace.span(gf8, [4])

    def test_inverse_space(self, gf8):
        # a^-1 span{a^2, 1 + a} = span{a, a^2}
        space = Subspace.span(gf8, [4, 3])

        assert scalar_inverse_space(2, space) == Subspace.span(gf8, [2, 4])

    def test_inverse_space_zero(self, gf8):
        with pytest.raises(DivisionByZero):
            scalar_inverse_space(0, Subspace.full(gf8))

    def test_mismatched_fields(self, gf8, gf64):
        with pytest.raises(ParameterError):
            intersect(Subspace.full(gf8), Subspace.full(gf64))

    def test_rank_weight(self, gf8):
        assert rank_weight(gf8, [1, 2, 3]) == 2
        assert rank_weight(gf8, [0, 0]) == 0
        assert rank_distance(gf8, [1, 2, 3], [1, 2, 3]) == 0
        assert rank_distance(gf8, [1, 2], [0, 0]) == 2

    def test_random_subspace(self, gf64, rng):
        for dim in range(7):
            assert random_subspace(gf64, dim, rng).dim == dim

        with pytest.raises(ParameterError):
            random_subspace(gf64, 7, rng)

    def test_random_element_of(self, gf64, rng):
        space = random_subspace(gf64, 3, rng)

        for _ in range(20):
            assert random_element_of(space, rng) in space

        assert random_element_of(Subspace.zero(gf64), rng) == 0

    def test_odd_characteristic(self, gf27, rng):
        space = random_subspace(gf27, 2, rng)

        assert len(_enum_set(space)) == 9
        assert all(x in space for x in space.enumerate())


class TestOracles:

    @pytest.mark.parametrize("m", [4, 6, 8])
    def test_product_and_intersection(self, m, rng):
        field = FieldParams(2, m)

        for _ in range(350):
            dim_a, dim_b = rng.integers(0, 4, size=2)
            space_a = random_subspace(field, dim_a, rng)
            space_b = random_subspace(field, dim_b, rng)

            elems_a = space_a.enumerate()
            elems_b = space_b.enumerate()

            prods = field.mul_array(elems_a[:, None], elems_b[None, :])
            oracle = Subspace.span(field, prods.reshape(-1))
            product = product_space(space_a, space_b)

            assert product == oracle
            assert product.dim <= space_a.dim * space_b.dim

            common = _enum_set(space_a) & _enum_set(space_b)
            assert _enum_set(intersect(space_a, space_b)) == common

    def test_intersect_all(self, gf64, rng):
        spaces = [random_subspace(gf64, 4, rng) for _ in range(3)]
        common = set.intersection(*[_enum_set(s) for s in spaces])

        assert _enum_set(intersect_all(spaces)) == common


class TestRandomSubspace:

    @pytest.mark.slow
    def test_uniform_planes(self, rng):
        field = FieldParams(2, 4)
        samples = 35000
        counts = {}

        for _ in range(samples):
            space = random_subspace(field, 2, rng)
            counts[space] = counts.get(space, 0) + 1

        # Gaussian binomial [4 choose 2]_2
        assert len(counts) == 35

        expected = samples / 35
        chi2 = sum((count - expected) ** 2 / expected
                   for count in counts.values())

        # 99.9% quantile of chi-square with 34 degrees of freedom
        assert chi2 < 65.2
        for count in counts.values():
            assert abs(count / samples - 1 / 35) < 0.01

    @pytest.mark.slow
    def test_product_dimension(self, gf64, rng):
        for _ in range(10000):
            dim_a, dim_b = (int(x) for x in rng.integers(0, 4, size=2))
            space_a = random_subspace(gf64, dim_a, rng)
            space_b = random_subspace(gf64, dim_b, rng)

            product = product_space(space_a, space_b)

            assert product.dim <= min(dim_a * dim_b, gf64.m)
