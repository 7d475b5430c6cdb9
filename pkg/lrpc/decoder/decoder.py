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

"""Interleaved LRPC decoder.

Decoding runs in three steps: the syndrome space S' is split into the
lambda spaces phi_l^-1 S' whose intersection recovers the error support E,
the syndromes are expanded in the product basis {phi_l gamma_r}, and the
error coefficients are recovered by an erasure solve against H_ext. The
non-interleaved decoder is the u=1 case of the same path.
"""

import numpy as np

import lrpc.logger

from lrpc.core.code import syndromes
from lrpc.core.errors import DimensionDeficient
from lrpc.core.errors import OutsideProductSpace
from lrpc.core.errors import ParameterError
from lrpc.core.errors import SystemUnsolvable
from lrpc.core.linalg import FqMatrix
from lrpc.core.linalg import Solver
from lrpc.core.linalg import UNIQUE
from lrpc.core.subspace import Subspace
from lrpc.core.subspace import as_values
from lrpc.core.subspace import intersect_all
from lrpc.core.subspace import scalar_inverse_space

LOG = lrpc.logger.get_logger()

SUCCESS = "success"

# Failure reasons
SUPPORT_TOO_LARGE = "support_too_large"
PRODUCT_SPACE_DEFICIENT = "product_space_deficient"
SYNDROME_SPACE_DEFICIENT = "syndrome_space_deficient"
SUPPORT_MISMATCH = "support_mismatch"
SYSTEM_UNSOLVABLE = "system_unsolvable"
VERIFICATION_MISMATCH = "verification_mismatch"

# Set by the simulator only: a verified decoding to the wrong codeword
MISCORRECTION = "miscorrection"

REASONS = (SUPPORT_TOO_LARGE, PRODUCT_SPACE_DEFICIENT,
           SYNDROME_SPACE_DEFICIENT, SUPPORT_MISMATCH, SYSTEM_UNSOLVABLE,
           VERIFICATION_MISMATCH, MISCORRECTION)


class DecodeOutcome(object):
    """Result of one decoding attempt.

    Attributes:
        reason: SUCCESS or one of REASONS
        codeword: the decoded codeword (packed, length un) on success
        error: the recovered error (packed, length un) on success
        syndrome_dim: dim(S')
        support_dim: dim of the recovered support
    """

    def __init__(self, reason, codeword=None, error=None, syndrome_dim=0,
                 support_dim=0):

        self.reason = reason
        self.codeword = codeword
        self.error = error
        self.syndrome_dim = syndrome_dim
        self.support_dim = support_dim

    @property
    def success(self):
        """Return True if the outcome carries a verified codeword."""

        return self.reason == SUCCESS

    def to_dict(self):
        """Return JSON-serializable representation of the object."""

        out = {'reason': self.reason,
               'syndrome_dim': self.syndrome_dim,
               'support_dim': self.support_dim}

        if self.success:
            out['codeword'] = self.codeword.tolist()
            out['error'] = self.error.tolist()

        return out

    def __eq__(self, other):

        if not isinstance(other, DecodeOutcome):
            return False

        if (self.reason, self.syndrome_dim, self.support_dim) != \
                (other.reason, other.syndrome_dim, other.support_dim):
            return False

        if self.success:
            return bool(np.array_equal(self.codeword, other.codeword)) and \
                bool(np.array_equal(self.error, other.error))

        return True

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "DecodeOutcome(%s, dim S'=%u, dim E=%u)" % \
            (self.reason, self.syndrome_dim, self.support_dim)


class SyndromeExpansion(object):
    """Syndromes expanded in the product basis {phi_l gamma_r}.

    Attributes:
        s_coeffs: s_{i,l,r}^{(w)} over F_q, shape (u, n-k, lambda, t)
    """

    def __init__(self, s_coeffs):
        self.s_coeffs = np.asarray(s_coeffs, dtype=np.int64)

    @property
    def t(self):
        """Return the number of support basis elements."""

        return self.s_coeffs.shape[3]

    def reassemble(self, field, phi, gamma):
        """Return sum_{l,r} s_{i,l,r} phi_l gamma_r, shape (u, n-k)."""

        basis = product_basis(field, phi, gamma).reshape(-1)
        u, redundancy, lam, t = self.s_coeffs.shape

        return field.scale_array(
            self.s_coeffs.reshape(u, redundancy, lam * t), basis)


def product_basis(field, phi, gamma):
    """Return the products phi_l gamma_r, shape (lambda, t)."""

    return field.mul_array(as_values(phi)[:, None], as_values(gamma)[None, :])


def syndrome_space(code, received):
    """Return (syndromes, S') for an interleaved received word.

    Raises:
        ParameterError if the word length is not un
    """

    synd = syndromes(code, received)

    return synd, Subspace.span(code.field, synd.reshape(-1))


def recover_support(space, phi):
    """Return the intersection of phi_l^-1 S' over all l."""

    return intersect_all([scalar_inverse_space(elem, space)
                          for elem in as_values(phi)])


def expand_syndrome(code, synd, gamma):
    """Expand every syndrome entry in the product basis.

    Raises:
        DimensionDeficient if {phi_l gamma_r} is linearly dependent
        OutsideProductSpace if a syndrome entry is not in their span
    """

    field = code.field
    params = code.params
    gamma = as_values(gamma)
    synd = np.asarray(synd, dtype=np.int64)
    t = gamma.shape[0]

    if synd.shape != (params.u, params.redundancy):
        raise ParameterError("syndromes must have shape (u, n-k)")

    if t == 0:
        if np.any(synd):
            raise OutsideProductSpace("nonzero syndrome with empty support")
        return SyndromeExpansion(np.zeros((params.u, params.redundancy,
                                           params.lam, 0), dtype=np.int64))

    basis = product_basis(field, code.phi, gamma).reshape(-1)
    solver = Solver(FqMatrix(field.to_coeffs(basis).T, field.q))

    if solver.rank < basis.shape[0]:
        raise DimensionDeficient("dim(FE)=%u < lambda*t=%u" %
                                 (solver.rank, basis.shape[0]))

    statuses, sol = solver.solve_many(field.to_coeffs(synd.reshape(-1)).T)

    if any(status != UNIQUE for status in statuses):
        raise OutsideProductSpace("syndrome entry outside span{phi gamma}")

    return SyndromeExpansion(sol.T.reshape(params.u, params.redundancy,
                                           params.lam, t))


def solve_error(code, expansion, gamma):
    """Recover the u error blocks by erasure decoding against H_ext.

    The system factorizes per (w, r): H_ext e_{.,r}^{(w)} equals the
    stacked s_{.,.,r}^{(w)}, rows ordered like H_ext (i major, l minor).

    Returns:
        the error blocks, shape (u, n)

    Raises:
        SystemUnsolvable if any of the u*t systems lacks a unique solution
    """

    params = code.params
    field = code.field
    gamma = as_values(gamma)
    s_coeffs = expansion.s_coeffs
    u, redundancy, lam, t = s_coeffs.shape

    if t == 0:
        return np.zeros((u, params.n), dtype=np.int64)

    rhs = np.transpose(s_coeffs, (1, 2, 0, 3)).reshape(redundancy * lam,
                                                       u * t)
    statuses, sol = code.solver.solve_many(rhs)

    if any(status != UNIQUE for status in statuses):
        raise SystemUnsolvable("H_ext system without unique solution")

    e_coeffs = np.transpose(sol.reshape(params.n, u, t), (1, 0, 2))

    return field.scale_array(e_coeffs, gamma)


def verify(code, received, error, synd):
    """Return True if e H^T = s per block and y - e is a codeword."""

    field = code.field

    if not np.array_equal(syndromes(code, error), synd):
        return False

    return not np.any(syndromes(code, field.sub_array(received, error)))


def decode(code, received):
    """Decode an interleaved received word of length un.

    Failures are reported in the outcome, never raised.

    Raises:
        ParameterError if the word length is not un or a symbol lies
        outside F_{q^m}
    """

    params = code.params
    field = code.field
    received = as_values(received)

    synd, space = syndrome_space(code, received)

    if space.dim == 0:
        return DecodeOutcome(SUCCESS, received.copy(),
                             np.zeros(params.N, dtype=np.int64))

    support = recover_support(space, code.phi)
    t_hat = support.dim

    def failure(reason):
        LOG.debug("Decoding failed: %s (dim S'=%u, dim E=%u)",
                  reason, space.dim, t_hat)
        return DecodeOutcome(reason, syndrome_dim=space.dim,
                             support_dim=t_hat)

    if params.lam * t_hat > field.m:
        return failure(SUPPORT_TOO_LARGE)

    # S' strictly inside FE leaves E partly unrecovered
    if space.dim > params.lam * t_hat:
        return failure(SYNDROME_SPACE_DEFICIENT)

    gamma = support.elements()

    try:
        expansion = expand_syndrome(code, synd, gamma)
    except DimensionDeficient:
        return failure(PRODUCT_SPACE_DEFICIENT)
    except OutsideProductSpace:
        return failure(SUPPORT_MISMATCH)

    try:
        blocks = solve_error(code, expansion, gamma)
    except SystemUnsolvable:
        return failure(SYSTEM_UNSOLVABLE)

    error = blocks.reshape(-1)

    if not verify(code, received, error, synd):
        return failure(VERIFICATION_MISMATCH)

    return DecodeOutcome(SUCCESS, field.sub_array(received, error), error,
                         space.dim, t_hat)
