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

"""Low-rank parity-check codes and their u-interleaved versions."""

import math

import numpy as np

import lrpc.logger

from lrpc.core.errors import CodecError
from lrpc.core.errors import ConstructionError
from lrpc.core.errors import ParameterError
from lrpc.core.field import FieldParams
from lrpc.core.linalg import FqMatrix
from lrpc.core.linalg import Solver
from lrpc.core.linalg import UNIQUE
from lrpc.core.linalg import ext_kernel
from lrpc.core.linalg import rank
from lrpc.core.subspace import Subspace
from lrpc.core.subspace import as_values
from lrpc.core.subspace import random_subspace
from lrpc.settings import FORMAT_VERSION
from lrpc.settings import KEYGEN_ATTEMPTS

LOG = lrpc.logger.get_logger()


class CodeParams(object):
    """Parameters of a u-interleaved [lambda; n, k] LRPC code.

    Attributes:
        n: component code length
        k: component code dimension
        lam: rank of the parity-check support F
        field: the field F_{q^m} (FieldParams)
        u: interleaving order (1 means non-interleaved)
    """

    def __init__(self, n, k, lam, field, u=1):

        n, k, lam, u = int(n), int(k), int(lam), int(u)

        if not 0 < k < n:
            raise ParameterError("need 0 < k < n, got n=%d k=%d" % (n, k))

        if lam < 1:
            raise ParameterError("lambda must be positive, got %d" % lam)

        if u < 1:
            raise ParameterError("u must be positive, got %d" % u)

        if not isinstance(field, FieldParams):
            raise ParameterError("field must be a FieldParams instance")

        self.n = n
        self.k = k
        self.lam = lam
        self.field = field
        self.u = u

    @property
    def N(self):
        """Return the interleaved length un."""

        return self.u * self.n

    @property
    def K(self):
        """Return the interleaved dimension uk."""

        return self.u * self.k

    @property
    def redundancy(self):
        """Return n - k."""

        return self.n - self.k

    @property
    def rate(self):
        """Return the code rate k/n."""

        return self.k / self.n

    @property
    def decodable(self):
        """Return True if H_ext can have full rank (lambda >= n/(n-k))."""

        return self.lam * (self.n - self.k) >= self.n

    def to_dict(self):
        """Return JSON-serializable representation of the object."""

        out = self.field.to_dict()
        out.update({'n': self.n,
                    'k': self.k,
                    'lambda': self.lam,
                    'u': self.u})

        return out

    def __eq__(self, other):

        if isinstance(other, CodeParams):
            return (self.n, self.k, self.lam, self.u, self.field) == \
                (other.n, other.k, other.lam, other.u, other.field)

        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.n, self.k, self.lam, self.u, self.field))

    def __repr__(self):
        return "IC[%u,%u;%u,%u] over %r" % (self.u, self.lam, self.n, self.k,
                                            self.field)


class LrpcCode(object):
    """An LRPC code with its parity-check expansion.

    Attributes:
        params: the code parameters (CodeParams)
        phi: basis of F, lambda packed elements
        h_coeffs: h_{i,j,l} over F_q, shape (n-k, n, lambda)
        H: parity-check matrix over F_{q^m}, shape (n-k, n), packed
        h_ext: the (n-k)lambda x n expansion over F_q (FqMatrix)
        gen: generator matrix over F_{q^m}, shape (k', n), packed; k' = k
             for every code accepted by keygen
    """

    def __init__(self, params, phi, h_coeffs):

        field = params.field
        phi = as_values(phi)
        h_coeffs = np.array(h_coeffs, dtype=np.int64)
        shape = (params.redundancy, params.n, params.lam)

        if phi.shape != (params.lam,):
            raise ParameterError("phi must hold %u elements" % params.lam)

        if np.any(phi < 0) or np.any(phi >= field.order):
            raise ParameterError("phi holds values outside %r" % field)

        if h_coeffs.shape != shape:
            raise ParameterError("h_coeffs must have shape %s" % (shape,))

        if np.any(h_coeffs < 0) or np.any(h_coeffs >= field.q):
            raise ParameterError("h_coeffs must lie in [0, q-1]")

        phi.setflags(write=False)
        h_coeffs.setflags(write=False)

        self.params = params
        self.phi = phi
        self.h_coeffs = h_coeffs
        self.H = field.scale_array(h_coeffs, phi)
        self.h_ext = expand_h(self)
        self.gen = ext_kernel(field, self.H)
        self.__solver = None

        self.H.setflags(write=False)
        self.gen.setflags(write=False)

    @property
    def field(self):
        """Return the field."""

        return self.params.field

    @property
    def support(self):
        """Return F, the span of all entries of H."""

        return Subspace.span(self.field, self.H.reshape(-1))

    @property
    def solver(self):
        """Return the echelon factorization of H_ext, computed once."""

        if self.__solver is None:
            self.__solver = Solver(self.h_ext)

        return self.__solver

    def is_valid(self):
        """Check the keygen acceptance conditions.

        Returns:
            True if dim(F) = lambda, rank(H) = n-k and rank(H_ext) = n
        """

        if self.support.dim != self.params.lam:
            return False

        if self.gen.shape[0] != self.params.k:
            return False

        return rank(self.h_ext) == self.params.n

    def to_dict(self):
        """Return JSON-serializable representation of the object."""

        out = {'version': FORMAT_VERSION}
        out.update(self.params.to_dict())
        out['phi'] = self.field.to_coeffs(self.phi).tolist()
        out['h_coeffs'] = self.h_coeffs.tolist()

        return out

    def __getstate__(self):
        return {'params': self.params,
                'phi': self.phi,
                'h_coeffs': self.h_coeffs}

    def __setstate__(self, state):
        self.__init__(state['params'], state['phi'], state['h_coeffs'])

    def __eq__(self, other):

        if isinstance(other, LrpcCode):
            return self.params == other.params and \
                bool(np.array_equal(self.phi, other.phi)) and \
                bool(np.array_equal(self.h_coeffs, other.h_coeffs))

        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "LrpcCode(%r)" % self.params


def expand_h(code):
    """Return H_ext, rows ordered (i, l) with i major and l minor."""

    params = code.params
    coeffs = np.transpose(code.h_coeffs, (0, 2, 1))
    rows = params.redundancy * params.lam

    return FqMatrix(coeffs.reshape(rows, params.n), params.field.q)


def extract_coeffs(field, phi, values):
    """Express elements of span(phi) in the phi basis.

    Returns:
        coefficients of shape values.shape + (len(phi),)

    Raises:
        ParameterError if an element is outside span(phi) or phi is
        dependent
    """

    values = np.asarray(values, dtype=np.int64)
    phi = as_values(phi)

    system = FqMatrix(field.to_coeffs(phi).T, field.q)
    rhs = field.to_coeffs(values.reshape(-1)).T

    statuses, sol = Solver(system).solve_many(rhs)

    if any(status != UNIQUE for status in statuses):
        raise ParameterError("elements are not uniquely expressible in phi")

    return sol.T.reshape(values.shape + (len(phi),))


def random_phi(params, rng):
    """Return a random basis of a random lambda-dimensional subspace."""

    field = params.field
    space = random_subspace(field, params.lam, rng)

    while True:
        # a random invertible change of basis keeps Phi uniform over bases
        mix = rng.integers(0, field.q, size=(params.lam, params.lam))
        if rank(FqMatrix(mix, field.q)) == params.lam:
            break

    return field.from_coeffs((mix @ space.basis.entries) % field.q)


def keygen(params, rng, attempts=KEYGEN_ATTEMPTS):
    """Draw a random LRPC code, resampling until it is decodable.

    Raises:
        ConstructionError if lambda < n/(n-k), lambda > m, or no valid
        parity-check matrix is found within the attempt budget
    """

    if not params.decodable:
        raise ConstructionError("lambda=%u < n/(n-k)=%u/%u" %
                                (params.lam, params.n, params.redundancy))

    if params.lam > params.field.m:
        raise ConstructionError("lambda=%u exceeds m=%u" %
                                (params.lam, params.field.m))

    shape = (params.redundancy, params.n, params.lam)

    for attempt in range(1, attempts + 1):

        phi = random_phi(params, rng)
        h_coeffs = rng.integers(0, params.field.q, size=shape, dtype=np.int64)
        code = LrpcCode(params, phi, h_coeffs)

        if code.is_valid():
            LOG.info("Generated %r after %u attempt(s)", params, attempt)
            return code

        LOG.debug("Rejected parity-check matrix (attempt %u)", attempt)

    raise ConstructionError("no valid parity-check matrix after %u attempts" %
                            attempts)


def encode(code, msg):
    """Encode u*k message symbols block-diagonally."""

    params = code.params
    msg = as_values(msg)

    if msg.shape[0] != params.K:
        raise ParameterError("message must have %u symbols, got %u" %
                             (params.K, msg.shape[0]))

    blocks = [code.field.vecmat(block, code.gen)
              for block in msg.reshape(params.u, params.k)]

    return np.concatenate(blocks)


def syndrome(code, y_block):
    """Return s = y H^T for one length-n block."""

    y_block = as_values(y_block)

    if y_block.shape[0] != code.params.n:
        raise ParameterError("block must have %u symbols, got %u" %
                             (code.params.n, y_block.shape[0]))

    return code.field.matvec(code.H, y_block)


def syndromes(code, received):
    """Return the u syndromes of an interleaved word, shape (u, n-k)."""

    params = code.params
    received = as_values(received)

    if received.shape[0] != params.N:
        raise ParameterError("word must have %u symbols, got %u" %
                             (params.N, received.shape[0]))

    if np.any(received < 0) or np.any(received >= code.field.order):
        raise ParameterError("word holds values outside %r" % code.field)

    blocks = received.reshape(params.u, params.n)

    return np.stack([syndrome(code, block) for block in blocks])


def is_codeword(code, word):
    """Return True if every block of word satisfies c H^T = 0."""

    return not np.any(syndromes(code, word))


def h_ext_full_rank_prob(params):
    """Return Pr[rk(H_ext) = n] for uniformly random h_coeffs."""

    rows = params.redundancy * params.lam
    q = params.field.q

    if rows < params.n:
        return 0.0

    log_prob = math.fsum(math.log1p(-float(q) ** (j - 1 - rows))
                         for j in range(1, params.n + 1))

    return math.exp(log_prob)


def params_from_dict(data):
    """Build CodeParams from a serialized record."""

    try:
        field = FieldParams(data['q'], data['m'], data.get('modulus'))
        return CodeParams(data['n'], data['k'], data['lambda'], field,
                          data.get('u', 1))
    except KeyError as ex:
        raise CodecError("missing field %s" % ex)


def code_from_dict(data):
    """Rebuild an LrpcCode from the output of LrpcCode.to_dict()."""

    if data.get('version') != FORMAT_VERSION:
        raise CodecError("unsupported record version %s" %
                         data.get('version'))

    params = params_from_dict(data)

    try:
        phi = params.field.from_coeffs(np.array(data['phi'],
                                                dtype=np.int64))
        return LrpcCode(params, phi, data['h_coeffs'])
    except KeyError as ex:
        raise CodecError("missing field %s" % ex)
    except ParameterError as ex:
        raise CodecError(str(ex))
