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

"""Decoding failure bounds and complexity estimates.

Bound terms are evaluated in log2 space. The exponents are exact integers,
so codes sharing lambda*t and u(n-k) get identical bounds.
"""

import math

from lrpc.core.code import CodeParams
from lrpc.core.errors import ParameterError


def _log2_term(log2_q, factor, exponent):
    """Return log2(factor * q^exponent), -inf for a zero factor."""

    if factor == 0:
        return -math.inf

    return math.log2(factor) + exponent * log2_q


def _exp2(value):

    if value == -math.inf:
        return 0.0

    # beyond the float range
    if value >= 1024:
        return math.inf

    return 2.0 ** value


class BoundReport(object):
    """Union bound on the decoding failure rate at one error rank.

    Attributes:
        t: error rank
        u: interleaving order
        term_product: bound on Pr[dim(FE) < lambda*t]
        term_intersection: bound on Pr[intersection of phi_l^-1 S' != E]
        term_syndrome: bound on Pr[dim(S') < lambda*t]
        union: min(1, sum of terms)
        log2_*: the same quantities in log2 (union before clipping)
    """

    def __init__(self, t, u, log2_product, log2_intersection,
                 log2_syndrome):

        self.t = t
        self.u = u
        self.log2_product = log2_product
        self.log2_intersection = log2_intersection
        self.log2_syndrome = log2_syndrome

        self.term_product = _exp2(log2_product)
        self.term_intersection = _exp2(log2_intersection)
        self.term_syndrome = _exp2(log2_syndrome)

        self.log2_union = _log2_sum([log2_product, log2_intersection,
                                     log2_syndrome])
        self.union = min(1.0, _exp2(self.log2_union))

    def to_dict(self):
        """Return JSON-serializable representation of the object."""

        return {'t': self.t,
                'u': self.u,
                'term_product': self.term_product,
                'term_intersection': self.term_intersection,
                'term_syndrome': self.term_syndrome,
                'union': self.union}

    def __eq__(self, other):

        if isinstance(other, BoundReport):
            return self.to_dict() == other.to_dict()

        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "BoundReport(t=%u, union=%.3e)" % (self.t, self.union)


def _log2_sum(logs):
    """Return log2(sum 2^x) without leaving log space."""

    finite = [value for value in logs if value != -math.inf]

    if not finite:
        return -math.inf

    top = max(finite)

    return top + math.log2(math.fsum(2.0 ** (value - top)
                                     for value in finite))


def union_bound(params, t):
    """Return the union bound on the failure probability at rank t.

    The terms are t q^(lambda t - m), t q^(lambda t (lambda + 1) / 2 - m)
    and q^(lambda t - u(n-k)).
    """

    if t < 0:
        raise ParameterError("t must be non-negative, got %d" % t)

    log2_q = math.log2(params.field.q)
    lam = params.lam
    m = params.field.m

    # lambda(lambda+1) is even
    inter_exp = lam * (lam + 1) // 2 * t - m

    return BoundReport(
        t, params.u,
        _log2_term(log2_q, t, lam * t - m),
        _log2_term(log2_q, t, inter_exp),
        _log2_term(log2_q, 1, lam * t - params.u * params.redundancy))


def bound_table(params, t_range):
    """Return one BoundReport per t in t_range."""

    return [union_bound(params, t) for t in t_range]


class ComplexityReport(object):
    """Operation counts over F_q of the three decoding stages.

    Attributes:
        syndrome: stage 1, u n^2 m^2 (syndrome space and support recovery)
        expansion: stage 2, 4 t^2 lambda^2 m (product basis expansion)
        solve: stage 3, u n^2 t^2 (erasure solve)
    """

    def __init__(self, syndrome, expansion, solve):
        self.syndrome = syndrome
        self.expansion = expansion
        self.solve = solve

    @property
    def total(self):
        """Return the sum of the three stages."""

        return self.syndrome + self.expansion + self.solve

    def as_tuple(self):
        """Return (syndrome, expansion, solve)."""

        return (self.syndrome, self.expansion, self.solve)

    def to_dict(self):
        """Return JSON-serializable representation of the object."""

        return {'syndrome': self.syndrome,
                'expansion': self.expansion,
                'solve': self.solve,
                'total': self.total}

    def __repr__(self):
        return "ComplexityReport(%u, %u, %u)" % self.as_tuple()


def complexity_estimate(params, t):
    """Return the asymptotic stage costs for decoding at rank t."""

    n = params.n
    m = params.field.m
    lam = params.lam
    u = params.u

    return ComplexityReport(u * n * n * m * m,
                            4 * t * t * lam * lam * m,
                            u * n * n * t * t)


def long_code_params(params):
    """Return the non-interleaved code of length un and dimension uk."""

    return CodeParams(params.N, params.K, params.lam, params.field, 1)


def representation_size(params):
    """Return generator matrix sizes in F_{q^m} elements.

    Returns:
        (interleaved, long) where the interleaved code stores one k x n
        generator and the long code a uk x un one
    """

    return (params.k * params.n, params.K * params.N)
