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

"""Rank-error channel with a support shared by all u blocks."""

import numpy as np

from lrpc.core.errors import ParameterError
from lrpc.core.linalg import FqMatrix
from lrpc.core.linalg import rank
from lrpc.core.subspace import Subspace
from lrpc.core.subspace import as_values
from lrpc.core.subspace import random_subspace


class RankError(object):
    """An interleaved error of rank t.

    Attributes:
        support: the error support E (Subspace of dimension t)
        gamma: the basis of E used for the expansion, t packed elements
        coeffs: e_{j,r}^{(w)} over F_q, shape (u, n, t)
        error: the error vector over F_{q^m}, length un
    """

    def __init__(self, params, support, gamma, coeffs):

        field = params.field
        coeffs = np.array(coeffs, dtype=np.int64)
        gamma = as_values(gamma)

        if coeffs.shape != (params.u, params.n, gamma.shape[0]):
            raise ParameterError("coeffs must have shape (u, n, t)")

        self.params = params
        self.support = support
        self.gamma = gamma
        self.coeffs = coeffs
        self.error = field.scale_array(
            coeffs.reshape(params.N, gamma.shape[0]), gamma) \
            if gamma.shape[0] else np.zeros(params.N, dtype=np.int64)

    @property
    def t(self):
        """Return the error rank."""

        return self.support.dim

    def blocks(self):
        """Return the u component errors, shape (u, n)."""

        return self.error.reshape(self.params.u, self.params.n)

    def to_dict(self):
        """Return JSON-serializable representation of the object."""

        return {'t': self.t,
                'gamma': self.params.field.to_coeffs(self.gamma).tolist(),
                'coeffs': self.coeffs.tolist()}


def sample_error(t, params, rng):
    """Sample an error of rank exactly t shared by all u blocks.

    The support is a uniformly random t-dimensional subspace and the stacked
    un x t coefficient matrix is uniform among those of rank t.
    """

    field = params.field

    if t < 0 or t > min(field.m, params.N):
        raise ParameterError("t=%d out of range [0, %u]" %
                             (t, min(field.m, params.N)))

    if t == 0:
        return RankError(params, Subspace.zero(field),
                         np.zeros(0, dtype=np.int64),
                         np.zeros((params.u, params.n, 0), dtype=np.int64))

    support = random_subspace(field, t, rng)
    gamma = support.elements()

    while True:
        coeffs = rng.integers(0, field.q, size=(params.N, t), dtype=np.int64)
        if rank(FqMatrix(coeffs, field.q)) == t:
            break

    return RankError(params, support, gamma,
                     coeffs.reshape(params.u, params.n, t))


def apply(codeword, err):
    """Return y = c + e."""

    field = err.params.field
    codeword = as_values(codeword)

    if codeword.shape != err.error.shape:
        raise ParameterError("codeword has %u symbols, error has %u" %
                             (codeword.shape[0], err.error.shape[0]))

    return field.add_array(codeword, err.error)
