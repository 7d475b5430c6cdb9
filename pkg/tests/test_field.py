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

"""Finite field tests."""

import numpy as np
import pytest

from lrpc.core.errors import DivisionByZero
from lrpc.core.errors import ParameterError
from lrpc.core.field import FieldElement
from lrpc.core.field import FieldParams
from lrpc.core.field import ff_add
from lrpc.core.field import ff_inv
from lrpc.core.field import ff_mul
from lrpc.core.field import ff_random
from lrpc.core.field import is_irreducible
from lrpc.core.field import smallest_irreducible


class TestFieldParams:

    def test_default_modulus(self, gf8):
        assert gf8.modulus == (1, 1, 0, 1)
        assert gf8.order == 8

    def test_smallest_irreducible_odd(self):
        assert smallest_irreducible(3, 2) == (1, 0, 1)

    def test_irreducibility(self):
        assert is_irreducible([1, 1, 1], 2)
        assert not is_irreducible([1, 0, 1], 2)
        assert is_irreducible([1, 1, 0, 0, 1], 2)

    def test_rejects_composite_q(self):
        with pytest.raises(ParameterError):
            FieldParams(4, 2)

    def test_rejects_reducible_modulus(self):
        with pytest.raises(ParameterError):
            FieldParams(2, 2, [1, 0, 1])

    def test_rejects_large_field(self):
        with pytest.raises(ParameterError):
            FieldParams(2, 62)

    def test_normalizes_to_monic(self):
        field = FieldParams(3, 2, [2, 0, 2])
        assert field.modulus == (1, 0, 1)

    def test_equality(self, gf8):
        assert FieldParams(2, 3) == gf8
        assert FieldParams(2, 3, [1, 0, 1, 1]) != gf8


class TestFieldElement:

    def test_worked_products(self, gf8):
        alpha = gf8.alpha
        alpha2 = alpha * alpha

        assert alpha * alpha2 == FieldElement(gf8, [1, 1, 0])
        assert alpha.inverse() == FieldElement(gf8, [1, 0, 1])
        assert FieldElement(gf8, [1, 0, 1]) * FieldElement(gf8, [1, 1, 0]) \
            == alpha2

    def test_module_functions(self, gf8):
        one = gf8.one
        alpha = gf8.alpha

        assert ff_add(one, alpha).value == 3
        assert ff_mul(alpha, alpha).value == 4
        assert ff_inv(alpha).value == 5

    def test_zero_inverse(self, gf8):
        with pytest.raises(DivisionByZero):
            gf8.zero.inverse()
        with pytest.raises(ZeroDivisionError):
            gf8.inv(0)

    def test_multiplicative_order(self, gf8):
        assert gf8.alpha ** 7 == gf8.one
        assert gf8.alpha ** -1 == gf8.alpha ** 6

    def test_repr(self, gf8):
        assert repr(FieldElement(gf8, 3)) == "1 + a"
        assert repr(gf8.zero) == "0"
        assert repr(FieldElement(gf8, 6)) == "a + a^2"

    def test_coeffs(self, gf8):
        elem = FieldElement(gf8, 6)
        assert elem.coeffs == (0, 1, 1)
        assert elem.to_dict() == [0, 1, 1]

    def test_out_of_range(self, gf8):
        with pytest.raises(ParameterError):
            FieldElement(gf8, 8)

    def test_mismatched_fields(self, gf8, gf64):
        with pytest.raises(ParameterError):
            gf8.one + gf64.one

    @pytest.mark.parametrize("q,m", [(2, 6), (3, 3), (5, 2), (2, 31)])
    def test_axioms(self, q, m, rng):
        field = FieldParams(q, m)

        for _ in range(200):
            x, y, z = (ff_random(field, rng) for _ in range(3))

            assert x + y == y + x
            assert x * y == y * x
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert x - x == field.zero
            assert x + (-x) == field.zero
            assert x * field.one == x

            if x:
                assert x * x.inverse() == field.one
                assert (y / x) * x == y


class TestArrays:

    @pytest.mark.parametrize("q,m", [(2, 8), (2, 30), (2, 40), (3, 4)])
    def test_mul_array_matches_scalar(self, q, m, rng):
        field = FieldParams(q, m)
        arr_a = field.random_array(300, rng)
        arr_b = field.random_array(300, rng)

        prods = field.mul_array(arr_a, arr_b)

        for x, y, p in zip(arr_a, arr_b, prods):
            assert field.mul(x, y) == p

    @pytest.mark.parametrize("q,m", [(2, 6), (3, 3)])
    def test_add_sub_arrays(self, q, m, rng):
        field = FieldParams(q, m)
        arr_a = field.random_array(100, rng)
        arr_b = field.random_array(100, rng)

        sums = field.add_array(arr_a, arr_b)

        assert np.array_equal(field.sub_array(sums, arr_b), arr_a)
        for x, y, s in zip(arr_a, arr_b, sums):
            assert field.add(x, y) == s

    def test_coeff_round_trip(self, gf27, rng):
        values = gf27.random_array(50, rng)
        assert np.array_equal(gf27.from_coeffs(gf27.to_coeffs(values)),
                              values)

    def test_scale_array(self, gf8):
        coeffs = np.array([[1, 1], [0, 1]])
        values = np.array([1, 2])

        assert gf8.scale_array(coeffs, values).tolist() == [3, 2]

    def test_matvec(self, gf8):
        matrix = np.array([[1, 2], [4, 0]])
        vector = np.array([2, 4])

        # [1*a + a*a^2, a^2*a] = [a + 1 + a, 1 + a]
        assert gf8.matvec(matrix, vector).tolist() == [1, 3]

    def test_sum_array_empty(self, gf8):
        assert gf8.sum_array(np.zeros((2, 0), dtype=np.int64),
                             axis=1).tolist() == [0, 0]


class TestPropertySuite:

    @pytest.mark.parametrize("q,m", [(2, 6), (2, 30), (3, 5), (5, 3)])
    def test_axioms_vectorized(self, q, m, rng):
        field = FieldParams(q, m)
        x, y, z = (field.random_array(10000, rng) for _ in range(3))

        mul = field.mul_array
        add = field.add_array

        assert np.array_equal(add(x, y), add(y, x))
        assert np.array_equal(mul(x, y), mul(y, x))
        assert np.array_equal(mul(mul(x, y), z), mul(x, mul(y, z)))
        assert np.array_equal(mul(x, add(y, z)), add(mul(x, y), mul(x, z)))
        assert not np.any(add(x, field.neg_array(x)))
        assert np.array_equal(mul(x, np.ones_like(x)), x)

    @pytest.mark.parametrize("m", range(2, 9))
    def test_exhaustive_inverses(self, m):
        field = FieldParams(2, m)

        for value in range(1, field.order):
            elem = FieldElement(field, value)
            assert ff_mul(elem, ff_inv(elem)) == field.one

    @pytest.mark.parametrize("m", range(2, 9))
    def test_exhaustive_coeff_round_trip(self, m):
        field = FieldParams(2, m)
        values = np.arange(field.order, dtype=np.int64)
        coeffs = field.to_coeffs(values)

        assert coeffs.shape == (field.order, m)
        assert np.array_equal(field.from_coeffs(coeffs), values)
        # digit i is the coefficient of a^i
        assert np.array_equal(coeffs[:, 0], values & 1)

    def test_random_is_uniform(self, rng):
        field = FieldParams(2, 4)
        samples = 16000

        counts = np.zeros(field.order)
        for _ in range(samples):
            counts[ff_random(field, rng).value] += 1

        expected = samples / field.order
        chi2 = np.sum((counts - expected) ** 2 / expected)

        # 99.9% quantile of chi-square with 15 degrees of freedom
        assert chi2 < 37.70
