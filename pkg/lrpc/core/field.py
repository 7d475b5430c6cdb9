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

"""Arithmetic in F_q and in the extension field F_{q^m}.

Elements of F_{q^m} are represented over the polynomial basis
{1, a, ..., a^(m-1)} and packed into a single integer whose base-q digit i
is the coefficient of a^i. At q=2 this is the usual bit-packed word, so
addition is XOR and multiplication is carry-less. Vectors and matrices over
F_{q^m} are numpy int64 arrays of packed values.
"""

from functools import lru_cache

import numpy as np

from lrpc.core.errors import ParameterError
from lrpc.core.errors import DivisionByZero
from lrpc.settings import DEFAULT_Q
from lrpc.settings import MAX_FIELD_BITS


def is_prime(value):
    """Return True if value is a prime number."""

    if value < 2:
        return False

    divisor = 2
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 1

    return True


def prime_factors(value):
    """Return the distinct prime factors of value."""

    factors = []
    divisor = 2

    while divisor * divisor <= value:
        if value % divisor == 0:
            factors.append(divisor)
            while value % divisor == 0:
                value //= divisor
        divisor += 1

    if value > 1:
        factors.append(value)

    return factors


def poly_trim(poly):
    """Drop leading zero coefficients (low-to-high order)."""

    poly = list(poly)
    while poly and poly[-1] == 0:
        poly.pop()

    return poly


def poly_sub(poly_a, poly_b, q):
    """Return a - b over F_q."""

    size = max(len(poly_a), len(poly_b))
    out = [0] * size

    for idx, coeff in enumerate(poly_a):
        out[idx] = coeff

    for idx, coeff in enumerate(poly_b):
        out[idx] = (out[idx] - coeff) % q

    return poly_trim(out)


def poly_mul(poly_a, poly_b, q):
    """Return a * b over F_q."""

    if not poly_a or not poly_b:
        return []

    out = [0] * (len(poly_a) + len(poly_b) - 1)

    for i, coeff_a in enumerate(poly_a):
        if coeff_a == 0:
            continue
        for j, coeff_b in enumerate(poly_b):
            out[i + j] = (out[i + j] + coeff_a * coeff_b) % q

    return poly_trim(out)


def poly_divmod(poly_a, poly_b, q):
    """Return (quotient, remainder) of a / b over F_q."""

    poly_b = poly_trim(poly_b)

    if not poly_b:
        raise DivisionByZero("polynomial division by zero")

    rem = poly_trim(poly_a)
    lead_inv = pow(poly_b[-1], q - 2, q)
    quot = [0] * max(len(rem) - len(poly_b) + 1, 1)

    while len(rem) >= len(poly_b):
        shift = len(rem) - len(poly_b)
        coeff = (rem[-1] * lead_inv) % q
        quot[shift] = coeff
        for idx, value in enumerate(poly_b):
            rem[idx + shift] = (rem[idx + shift] - coeff * value) % q
        rem = poly_trim(rem)

    return poly_trim(quot), rem


def poly_gcd(poly_a, poly_b, q):
    """Return the monic gcd of a and b over F_q."""

    poly_a = poly_trim(poly_a)
    poly_b = poly_trim(poly_b)

    while poly_b:
        poly_a, poly_b = poly_b, poly_divmod(poly_a, poly_b, q)[1]

    if not poly_a:
        return []

    lead_inv = pow(poly_a[-1], q - 2, q)

    return [(coeff * lead_inv) % q for coeff in poly_a]


def poly_powmod(base, exponent, modulus, q):
    """Return base^exponent mod modulus over F_q."""

    result = [1]
    base = poly_divmod(base, modulus, q)[1]

    while exponent:
        if exponent & 1:
            result = poly_divmod(poly_mul(result, base, q), modulus, q)[1]
        base = poly_divmod(poly_mul(base, base, q), modulus, q)[1]
        exponent >>= 1

    return result


def is_irreducible(modulus, q):
    """Rabin's irreducibility test for a polynomial over F_q."""

    modulus = poly_trim(modulus)
    degree = len(modulus) - 1

    if degree < 1:
        return False

    if degree == 1:
        return True

    if modulus[0] == 0:
        return False

    xpoly = [0, 1]

    # x^(q^d) for d = 1 .. degree
    frobenius = [xpoly]
    for _ in range(degree):
        frobenius.append(poly_powmod(frobenius[-1], q, modulus, q))

    if poly_sub(frobenius[degree], xpoly, q):
        return False

    for factor in prime_factors(degree):
        diff = poly_sub(frobenius[degree // factor], xpoly, q)
        if len(poly_gcd(modulus, diff, q)) != 1:
            return False

    return True


@lru_cache(maxsize=None)
def smallest_irreducible(q, m):
    """Return the smallest monic irreducible polynomial of degree m.

    Candidates are ordered by the integer whose base-q digits are the lower
    coefficients, so for q=2, m=3 the result is x^3 + x + 1.
    """

    for low in range(q ** m):
        poly = [(low // q ** idx) % q for idx in range(m)] + [1]
        if is_irreducible(poly, q):
            return tuple(poly)

    raise ParameterError("no irreducible polynomial of degree %u" % m)


class FieldParams(object):
    """The extension field F_{q^m} over a fixed polynomial basis.

    Attributes:
        q: prime modulus of the base field
        m: extension degree
        modulus: defining polynomial, m+1 coefficients low-to-high
    """

    def __init__(self, q=DEFAULT_Q, m=1, modulus=None):

        q = int(q)
        m = int(m)

        if not is_prime(q):
            raise ParameterError("q must be prime, got %d" % q)

        if m < 1:
            raise ParameterError("m must be positive, got %d" % m)

        if q ** m >= 2 ** MAX_FIELD_BITS:
            raise ParameterError("q^m must be below 2^%u" % MAX_FIELD_BITS)

        if modulus is None:
            modulus = smallest_irreducible(q, m)

        modulus = [int(coeff) for coeff in modulus]

        if len(modulus) != m + 1:
            raise ParameterError("modulus must have %u coefficients" % (m + 1))

        if any(coeff < 0 or coeff >= q for coeff in modulus):
            raise ParameterError("modulus coefficients must lie in [0, q-1]")

        if modulus[-1] == 0:
            raise ParameterError("modulus must have degree exactly %u" % m)

        lead_inv = pow(modulus[-1], q - 2, q)
        modulus = [(coeff * lead_inv) % q for coeff in modulus]

        if not is_irreducible(modulus, q):
            raise ParameterError("modulus %s is reducible over F_%u" %
                                 (modulus, q))

        self.__q = q
        self.__m = m
        self.__modulus = tuple(modulus)
        self.__order = q ** m
        self.__powers = np.array([q ** idx for idx in range(m)],
                                 dtype=np.int64)
        self.__low = np.array(modulus[:m], dtype=np.int64)
        self.__modulus_word = sum(coeff * q ** idx
                                  for idx, coeff in enumerate(modulus))

    @property
    def q(self):
        """Return the base field order."""

        return self.__q

    @property
    def m(self):
        """Return the extension degree."""

        return self.__m

    @property
    def modulus(self):
        """Return the defining polynomial (low-to-high)."""

        return self.__modulus

    @property
    def order(self):
        """Return q^m."""

        return self.__order

    @property
    def zero(self):
        """Return the zero element."""

        return FieldElement(self, 0)

    @property
    def one(self):
        """Return the multiplicative identity."""

        return FieldElement(self, 1)

    @property
    def alpha(self):
        """Return the generator a of the polynomial basis."""

        return FieldElement(self, self.pack([0, 1] + [0] * (self.m - 2))
                            if self.m > 1 else self.pack([-self.modulus[0]]))

    def to_dict(self):
        """Return JSON-serializable representation of the object."""

        return {'q': self.q,
                'm': self.m,
                'modulus': list(self.modulus)}

    def __eq__(self, other):

        if isinstance(other, FieldParams):
            return self.q == other.q and self.m == other.m and \
                self.modulus == other.modulus

        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.q, self.m, self.modulus))

    def __repr__(self):
        return "GF(%u^%u)" % (self.q, self.m)

    # Scalar arithmetic on packed integers

    def digits(self, value):
        """Return the coefficient list of a packed value."""

        value = int(value)

        if value < 0 or value >= self.order:
            raise ParameterError("value %d is not an element of %r" %
                                 (value, self))

        return [(value // self.q ** idx) % self.q for idx in range(self.m)]

    def pack(self, coeffs):
        """Pack a coefficient list into an integer."""

        coeffs = list(coeffs)

        if len(coeffs) > self.m:
            raise ParameterError("expected at most %u coefficients" % self.m)

        return sum((int(coeff) % self.q) * self.q ** idx
                   for idx, coeff in enumerate(coeffs))

    def add(self, val_a, val_b):
        """Add two packed elements."""

        if self.q == 2:
            return int(val_a) ^ int(val_b)

        return self.pack([(x + y) % self.q for x, y in
                          zip(self.digits(val_a), self.digits(val_b))])

    def neg(self, value):
        """Negate a packed element."""

        if self.q == 2:
            return int(value)

        return self.pack([(-x) % self.q for x in self.digits(value)])

    def sub(self, val_a, val_b):
        """Subtract two packed elements."""

        return self.add(val_a, self.neg(val_b))

    def mul(self, val_a, val_b):
        """Multiply two packed elements."""

        if self.q == 2:
            val_a = int(val_a)
            val_b = int(val_b)
            acc = 0
            while val_b:
                if val_b & 1:
                    acc ^= val_a
                val_b >>= 1
                val_a <<= 1
                if val_a >> self.m:
                    val_a ^= self.__modulus_word
            return acc

        prod = poly_mul(self.digits(val_a), self.digits(val_b), self.q)
        rem = poly_divmod(prod, list(self.modulus), self.q)[1]

        return self.pack(rem)

    def inv(self, value):
        """Invert a packed element with the extended Euclidean algorithm."""

        value = int(value)

        if value == 0:
            raise DivisionByZero("zero has no inverse in %r" % self)

        q = self.q
        old_r, rem = list(self.modulus), poly_trim(self.digits(value))
        old_s, coef = [], [1]

        while rem:
            quot, nxt = poly_divmod(old_r, rem, q)
            old_r, rem = rem, nxt
            old_s, coef = coef, poly_sub(old_s, poly_mul(quot, coef, q), q)

        # old_r is a nonzero constant since the modulus is irreducible
        scale = pow(old_r[0], q - 2, q)

        return self.pack([(x * scale) % q for x in old_s])

    def power(self, value, exponent):
        """Raise a packed element to a non-negative integer power."""

        result = 1
        base = int(value)

        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1

        return result

    # Array arithmetic on numpy arrays of packed integers

    def to_coeffs(self, values):
        """Return coefficient arrays, shape values.shape + (m,)."""

        values = np.asarray(values, dtype=np.int64)

        if self.q == 2:
            return (values[..., None] >> np.arange(self.m)) & 1

        return (values[..., None] // self.__powers) % self.q

    def from_coeffs(self, coeffs):
        """Pack coefficient arrays along the last axis."""

        coeffs = np.asarray(coeffs, dtype=np.int64) % self.q

        return (coeffs * self.__powers).sum(axis=-1)

    def add_array(self, arr_a, arr_b):
        """Element-wise sum of two packed arrays."""

        arr_a = np.asarray(arr_a, dtype=np.int64)
        arr_b = np.asarray(arr_b, dtype=np.int64)

        if self.q == 2:
            return arr_a ^ arr_b

        return self.from_coeffs(self.to_coeffs(arr_a) + self.to_coeffs(arr_b))

    def neg_array(self, arr):
        """Element-wise negation of a packed array."""

        arr = np.asarray(arr, dtype=np.int64)

        if self.q == 2:
            return arr.copy()

        return self.from_coeffs(-self.to_coeffs(arr))

    def sub_array(self, arr_a, arr_b):
        """Element-wise difference of two packed arrays."""

        return self.add_array(arr_a, self.neg_array(arr_b))

    def sum_array(self, arr, axis=None):
        """Field sum of a packed array along an axis."""

        arr = np.asarray(arr, dtype=np.int64)

        if axis is None:
            arr = arr.reshape(-1)
            axis = 0

        if self.q == 2:
            if arr.shape[axis] == 0:
                return np.zeros(np.delete(arr.shape, axis), dtype=np.int64)
            return np.bitwise_xor.reduce(arr, axis=axis)

        return self.from_coeffs(self.to_coeffs(arr).sum(axis=axis))

    def mul_array(self, arr_a, arr_b):
        """Element-wise (broadcasting) product of two packed arrays."""

        arr_a = np.asarray(arr_a, dtype=np.int64)
        arr_b = np.asarray(arr_b, dtype=np.int64)
        arr_a, arr_b = np.broadcast_arrays(arr_a, arr_b)

        if self.q == 2 and 2 * self.m - 1 < 63:
            return self.__mul_words(arr_a, arr_b)

        return self.__mul_coeffs(arr_a, arr_b)

    def __mul_words(self, arr_a, arr_b):
        """Carry-less product and reduction at q=2."""

        acc = np.zeros(arr_a.shape, dtype=np.int64)

        for idx in range(self.m):
            bit = (arr_b >> idx) & 1
            acc ^= np.where(bit == 1, arr_a << idx, 0)

        for deg in range(2 * self.m - 2, self.m - 1, -1):
            bit = (acc >> deg) & 1
            acc ^= np.where(bit == 1,
                            self.__modulus_word << (deg - self.m), 0)

        return acc

    def __mul_coeffs(self, arr_a, arr_b):
        """Polynomial product and reduction on coefficient arrays."""

        m = self.m
        q = self.q

        coeffs_a = self.to_coeffs(arr_a)
        coeffs_b = self.to_coeffs(arr_b)

        prod = np.zeros(arr_a.shape + (2 * m - 1,), dtype=np.int64)
        for idx in range(m):
            prod[..., idx:idx + m] += coeffs_a[..., idx:idx + 1] * coeffs_b
        prod %= q

        # a^m = -(modulus[0] + ... + modulus[m-1] a^(m-1))
        for deg in range(2 * m - 2, m - 1, -1):
            lead = prod[..., deg] % q
            prod[..., deg - m:deg] -= lead[..., None] * self.__low
            prod[..., deg] = 0
            prod %= q

        return self.from_coeffs(prod[..., :m])

    def scale_array(self, coeffs, values):
        """Return sum_l coeffs[..., l] * values[l] for F_q coefficients."""

        coeffs = np.asarray(coeffs, dtype=np.int64) % self.q
        basis = self.to_coeffs(np.asarray(values, dtype=np.int64))

        return self.from_coeffs(np.tensordot(coeffs, basis, axes=1) % self.q)

    def matvec(self, matrix, vector):
        """Return M v over F_{q^m}."""

        matrix = np.asarray(matrix, dtype=np.int64)
        vector = np.asarray(vector, dtype=np.int64)

        return self.sum_array(self.mul_array(matrix, vector[None, :]), axis=1)

    def vecmat(self, vector, matrix):
        """Return v M over F_{q^m}."""

        matrix = np.asarray(matrix, dtype=np.int64)
        vector = np.asarray(vector, dtype=np.int64)

        return self.sum_array(self.mul_array(vector[:, None], matrix), axis=0)

    def random(self, rng):
        """Return a uniformly random packed element."""

        return int(rng.integers(0, self.order))

    def random_array(self, size, rng):
        """Return an array of uniformly random packed elements."""

        return rng.integers(0, self.order, size=size, dtype=np.int64)


class FieldElement(object):
    """An element of F_{q^m}.

    Attributes:
        params: the field (FieldParams)
        value: the packed coefficient vector (int)
    """

    __slots__ = ('__params', '__value')

    def __init__(self, params, value=0):

        if not isinstance(params, FieldParams):
            raise ParameterError("params must be a FieldParams instance")

        if isinstance(value, FieldElement):
            value = value.value
        elif isinstance(value, (list, tuple, np.ndarray)):
            coeffs = [int(coeff) for coeff in value]
            if any(coeff < 0 or coeff >= params.q for coeff in coeffs):
                raise ParameterError("coefficients must lie in [0, q-1]")
            value = params.pack(coeffs)

        value = int(value)

        if value < 0 or value >= params.order:
            raise ParameterError("value %d is not an element of %r" %
                                 (value, params))

        self.__params = params
        self.__value = value

    @property
    def params(self):
        """Return the field."""

        return self.__params

    @property
    def value(self):
        """Return the packed representation."""

        return self.__value

    @property
    def coeffs(self):
        """Return the coefficient vector over the polynomial basis."""

        return tuple(self.params.digits(self.value))

    def __check(self, other):

        if not isinstance(other, FieldElement):
            raise ParameterError("expected a FieldElement, got %r" % other)

        if other.params != self.params:
            raise ParameterError("mismatched fields %r and %r" %
                                 (self.params, other.params))

    def __add__(self, other):
        self.__check(other)
        return FieldElement(self.params,
                            self.params.add(self.value, other.value))

    def __sub__(self, other):
        self.__check(other)
        return FieldElement(self.params,
                            self.params.sub(self.value, other.value))

    def __neg__(self):
        return FieldElement(self.params, self.params.neg(self.value))

    def __mul__(self, other):
        self.__check(other)
        return FieldElement(self.params,
                            self.params.mul(self.value, other.value))

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, exponent):

        if exponent < 0:
            return self.inverse() ** (-exponent)

        return FieldElement(self.params,
                            self.params.power(self.value, exponent))

    def inverse(self):
        """Return the multiplicative inverse."""

        return FieldElement(self.params, self.params.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __hash__(self):
        return hash((self.params, self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.params == other.params and self.value == other.value
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def to_dict(self):
        """Return JSON-serializable representation of the object."""

        return list(self.coeffs)

    def __repr__(self):

        terms = []

        for idx, coeff in enumerate(self.coeffs):
            if coeff == 0:
                continue
            if idx == 0:
                terms.append("%u" % coeff)
            else:
                power = "a" if idx == 1 else "a^%u" % idx
                terms.append(power if coeff == 1 else "%u%s" % (coeff, power))

        return " + ".join(terms) if terms else "0"


def ff_add(elem_a, elem_b):
    """Add two elements of F_{q^m}."""

    return elem_a + elem_b


def ff_mul(elem_a, elem_b):
    """Multiply two elements of F_{q^m}."""

    return elem_a * elem_b


def ff_inv(elem):
    """Invert a nonzero element of F_{q^m}."""

    return elem.inverse()


def ff_random(params, rng):
    """Draw a uniformly random element of F_{q^m}."""

    return FieldElement(params, params.random(rng))
