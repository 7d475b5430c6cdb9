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

"""F_q-subspaces of F_{q^m}."""

import itertools

from functools import reduce

import numpy as np

from lrpc.core.errors import DivisionByZero
from lrpc.core.errors import ParameterError
from lrpc.core.field import FieldElement
from lrpc.core.linalg import FqMatrix
from lrpc.core.linalg import row_reduce

# Largest dimension enumerated element by element
MAX_ENUM_DIM = 16


def as_values(vector):
    """Turn a vector of FieldElements or packed ints into an int64 array."""

    if isinstance(vector, (FieldElement, int, np.integer)):
        vector = [vector]

    if isinstance(vector, np.ndarray):
        return vector.astype(np.int64).reshape(-1)

    try:
        return np.array([int(x) for x in vector], dtype=np.int64)
    except OverflowError:
        raise ParameterError("value does not fit a packed element")


class Subspace(object):
    """An F_q-subspace of F_{q^m} in canonical form.

    The basis is the reduced row echelon form of any generating set, with
    zero rows removed, so two subspaces are equal iff their bases are
    identical.

    Attributes:
        params: the field (FieldParams)
        basis: FqMatrix with m columns, one row per basis element
        dim: the dimension
    """

    def __init__(self, params, generators=None):

        q = params.q
        m = params.m

        if generators is None:
            generators = np.zeros((0, m), dtype=np.int64)

        arr = np.array(generators, dtype=np.int64).reshape(-1, m) % q
        pivots = row_reduce(arr, q)

        self.__params = params
        self.__basis = FqMatrix(arr[:len(pivots)], q)
        self.__pivots = tuple(pivots)

    @classmethod
    def span(cls, params, values):
        """Return the span of a collection of elements."""

        values = as_values(values)

        return cls(params, params.to_coeffs(values).reshape(-1, params.m))

    @classmethod
    def zero(cls, params):
        """Return the zero subspace."""

        return cls(params)

    @classmethod
    def full(cls, params):
        """Return F_{q^m} as a subspace of itself."""

        return cls(params, np.eye(params.m, dtype=np.int64))

    @property
    def params(self):
        """Return the field."""

        return self.__params

    @property
    def basis(self):
        """Return the canonical basis matrix."""

        return self.__basis

    @property
    def pivots(self):
        """Return the pivot columns of the canonical basis."""

        return self.__pivots

    @property
    def dim(self):
        """Return the dimension."""

        return self.__basis.rows

    def elements(self):
        """Return the basis as packed field elements."""

        return self.params.from_coeffs(self.basis.entries)

    def enumerate(self):
        """Return all q^dim elements as packed values (small spaces only)."""

        if self.dim > MAX_ENUM_DIM:
            raise ParameterError("refusing to enumerate a space of "
                                 "dimension %u" % self.dim)

        if self.dim == 0:
            return np.zeros(1, dtype=np.int64)

        q = self.params.q
        combos = np.array(list(itertools.product(range(q), repeat=self.dim)),
                          dtype=np.int64)

        return self.params.from_coeffs((combos @ self.basis.entries) % q)

    def reduce(self, values):
        """Reduce elements against the canonical basis.

        Returns:
            coefficient arrays that are zero exactly for members
        """

        q = self.params.q
        coeffs = self.params.to_coeffs(as_values(values)).reshape(
            -1, self.params.m)
        basis = self.basis.entries

        for row, col in enumerate(self.pivots):
            factor = coeffs[:, col].copy()
            coeffs = (coeffs - factor[:, None] * basis[row]) % q

        return coeffs

    def contains(self, values):
        """Return True if every given element lies in the subspace."""

        return not np.any(self.reduce(values))

    def __contains__(self, value):
        return self.contains(value)

    def issubspace(self, other):
        """Return True if self is a subspace of other."""

        self.__check(other)

        return other.contains(self.elements())

    def __check(self, other):

        if not isinstance(other, Subspace):
            raise ParameterError("expected a Subspace, got %r" % other)

        if other.params != self.params:
            raise ParameterError("mismatched fields %r and %r" %
                                 (self.params, other.params))

    def __add__(self, other):
        self.__check(other)
        return Subspace(self.params,
                        np.vstack([self.basis.entries, other.basis.entries]))

    def __eq__(self, other):

        if isinstance(other, Subspace):
            return self.params == other.params and self.basis == other.basis

        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.params, self.basis))

    def to_dict(self):
        """Return JSON-serializable representation of the object."""

        return {'dim': self.dim,
                'basis': self.basis.entries.tolist()}

    def __repr__(self):
        return "Subspace(dim=%u of %r)" % (self.dim, self.params)


def support(params, vector):
    """Return the F_q-span of the entries of a vector over F_{q^m}."""

    return Subspace.span(params, vector)


def rank_weight(params, vector):
    """Return rk_q of a vector, the dimension of its support."""

    return support(params, vector).dim


def rank_distance(params, vec_a, vec_b):
    """Return rk_q(a - b)."""

    diff = params.sub_array(as_values(vec_a), as_values(vec_b))

    return rank_weight(params, diff)


def product_space(space_a, space_b):
    """Return the span of all products a*b, a in A and b in B."""

    if space_a.params != space_b.params:
        raise ParameterError("mismatched fields")

    params = space_a.params
    prods = params.mul_array(space_a.elements()[:, None],
                             space_b.elements()[None, :])

    return Subspace.span(params, prods.reshape(-1))


def scalar_inverse_space(phi, space):
    """Return phi^-1 S."""

    params = space.params
    phi = int(phi)

    if phi == 0:
        raise DivisionByZero("cannot scale a subspace by 0^-1")

    inv = params.inv(phi)

    return Subspace.span(params, params.mul_array(space.elements(), inv))


def intersect(space_a, space_b):
    """Return A n B with the Zassenhaus algorithm.

    Row reducing [[A, A], [B, 0]] leaves rows of the form [0, x] whose
    right halves are a basis of the intersection.
    """

    if space_a.params != space_b.params:
        raise ParameterError("mismatched fields")

    params = space_a.params
    q = params.q
    m = params.m

    if space_a.dim == 0 or space_b.dim == 0:
        return Subspace.zero(params)

    basis_a = space_a.basis.entries
    basis_b = space_b.basis.entries

    top = np.hstack([basis_a, basis_a])
    bottom = np.hstack([basis_b, np.zeros_like(basis_b)])
    arr = np.vstack([top, bottom]).astype(np.int64)

    row_reduce(arr, q)

    mask = ~np.any(arr[:, :m] != 0, axis=1)

    return Subspace(params, arr[mask, m:])


def intersect_all(spaces):
    """Return the intersection of several subspaces (left fold)."""

    return reduce(intersect, spaces)


def contains(space, value):
    """Return True if value lies in the subspace."""

    return space.contains(value)


def random_subspace(params, dim, rng):
    """Return a uniformly random subspace of the given dimension."""

    if dim < 0 or dim > params.m:
        raise ParameterError("dimension %d out of range [0, %u]" %
                             (dim, params.m))

    while True:
        arr = rng.integers(0, params.q, size=(dim, params.m), dtype=np.int64)
        space = Subspace(params, arr)
        if space.dim == dim:
            return space


def random_element_of(space, rng):
    """Return a uniformly random element of the subspace (packed)."""

    params = space.params
    coeffs = rng.integers(0, params.q, size=space.dim, dtype=np.int64)
    vec = (coeffs @ space.basis.entries) % params.q \
        if space.dim else np.zeros(params.m, dtype=np.int64)

    return int(params.from_coeffs(vec))
