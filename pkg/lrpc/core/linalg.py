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

"""Dense linear algebra over F_q (and small helpers over F_{q^m})."""

import numpy as np

from lrpc.core.errors import ParameterError

UNIQUE = "unique"
NO_SOLUTION = "no_solution"
UNDERDETERMINED = "underdetermined"


def row_reduce(arr, q, ncols=None, fast=True):
    """Gauss-Jordan elimination in place.

    Pivots are searched only in the first ncols columns, so augmented
    matrices [A | B] can be reduced with respect to A. At q=2 the fast path
    eliminates with a single masked XOR per pivot.

    Returns:
        the list of pivot columns
    """

    rows, cols = arr.shape
    ncols = cols if ncols is None else ncols
    pivots = []
    row = 0

    for col in range(ncols):

        if row == rows:
            break

        candidates = np.nonzero(arr[row:, col])[0]
        if candidates.size == 0:
            continue

        pivot = row + candidates[0]
        if pivot != row:
            arr[[row, pivot]] = arr[[pivot, row]]

        if q == 2 and fast:
            mask = arr[:, col] == 1
            mask[row] = False
            arr[mask] ^= arr[row]
        else:
            inv = pow(int(arr[row, col]), q - 2, q)
            arr[row] = (arr[row] * inv) % q
            factors = arr[:, col].copy()
            factors[row] = 0
            targets = np.nonzero(factors)[0]
            if targets.size:
                arr[targets] = \
                    (arr[targets] - factors[targets, None] * arr[row]) % q

        pivots.append(col)
        row += 1

    return pivots


class FqMatrix(object):
    """Dense immutable matrix over F_q.

    Attributes:
        q: the base field order
        entries: read-only int64 array with values in [0, q-1]
    """

    def __init__(self, entries, q=2):

        arr = np.array(entries, dtype=np.int64)

        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)

        if arr.ndim != 2:
            raise ParameterError("expected a 2-d matrix, got shape %s" %
                                 (arr.shape,))

        if arr.size and (arr.min() < 0 or arr.max() >= q):
            raise ParameterError("entries must lie in [0, %u]" % (q - 1))

        arr.setflags(write=False)

        self.__q = int(q)
        self.__entries = arr

    @classmethod
    def zeros(cls, rows, cols, q=2):
        """Return the all-zero matrix."""

        return cls(np.zeros((rows, cols), dtype=np.int64), q)

    @classmethod
    def identity(cls, size, q=2):
        """Return the identity matrix."""

        return cls(np.eye(size, dtype=np.int64), q)

    @property
    def q(self):
        """Return the field order."""

        return self.__q

    @property
    def entries(self):
        """Return the (read-only) entries."""

        return self.__entries

    @property
    def rows(self):
        """Return the number of rows."""

        return self.__entries.shape[0]

    @property
    def cols(self):
        """Return the number of columns."""

        return self.__entries.shape[1]

    @property
    def shape(self):
        """Return (rows, cols)."""

        return self.__entries.shape

    @property
    def T(self):
        """Return the transpose."""

        return FqMatrix(self.entries.T, self.q)

    def __matmul__(self, other):

        if not isinstance(other, FqMatrix) or other.q != self.q:
            raise ParameterError("mismatched operands")

        if self.cols != other.rows:
            raise ParameterError("cannot multiply %s by %s" %
                                 (self.shape, other.shape))

        return FqMatrix((self.entries @ other.entries) % self.q, self.q)

    def rref(self, fast=True):
        """Return (R, rank, pivot_cols)."""

        return rref(self, fast)

    def rank(self):
        """Return the rank over F_q."""

        return rank(self)

    def kernel(self):
        """Return a basis of the right null space (one row per vector)."""

        return kernel(self)

    def solve(self, vector):
        """Solve self x = vector."""

        return solve(self, vector)

    def is_full_rank(self):
        """Return True if rank equals min(rows, cols)."""

        return is_full_rank(self)

    def to_dict(self):
        """Return JSON-serializable representation of the object."""

        return {'q': self.q,
                'rows': self.rows,
                'cols': self.cols,
                'entries': self.entries.tolist()}

    def __eq__(self, other):

        if isinstance(other, FqMatrix):
            return self.q == other.q and self.shape == other.shape and \
                bool(np.array_equal(self.entries, other.entries))

        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.q, self.shape, self.entries.tobytes()))

    def __repr__(self):
        return "FqMatrix(q=%u, %ux%u)" % (self.q, self.rows, self.cols)


class Solution(object):
    """Outcome of a linear solve.

    Attributes:
        status: one of UNIQUE, NO_SOLUTION, UNDERDETERMINED
        x: the solution vector when status is UNIQUE, otherwise None
    """

    def __init__(self, status, x=None):
        self.status = status
        self.x = x

    @property
    def unique(self):
        """Return True if the system has exactly one solution."""

        return self.status == UNIQUE

    def __repr__(self):
        return "Solution(%s)" % self.status


class Solver(object):
    """Echelon factorization of A, reused across right-hand sides.

    The elimination of [A | I] yields T with T A = R in reduced row echelon
    form, so every system A x = b is answered by one product T b.
    """

    def __init__(self, matrix):

        rows, cols = matrix.shape
        q = matrix.q

        aug = np.hstack([matrix.entries,
                         np.eye(rows, dtype=np.int64)]).astype(np.int64)
        pivots = row_reduce(aug, q, ncols=cols)

        self.q = q
        self.rows = rows
        self.cols = cols
        self.pivots = pivots
        self.rank = len(pivots)
        self.transform = aug[:, cols:].copy()

    def solve_many(self, rhs):
        """Solve A X = B column by column.

        Returns:
            (statuses, X) where X has one column per right-hand side and
            holds the unique solution wherever the status is UNIQUE.
        """

        rhs = np.asarray(rhs, dtype=np.int64)

        if rhs.ndim != 2 or rhs.shape[0] != self.rows:
            raise ParameterError("right-hand side must have %u rows" %
                                 self.rows)

        reduced = (self.transform @ rhs) % self.q
        consistent = ~np.any(reduced[self.rank:] != 0, axis=0)

        sol = np.zeros((self.cols, rhs.shape[1]), dtype=np.int64)
        sol[self.pivots] = reduced[:self.rank]

        statuses = []
        for ok in consistent:
            if not ok:
                statuses.append(NO_SOLUTION)
            elif self.rank < self.cols:
                statuses.append(UNDERDETERMINED)
            else:
                statuses.append(UNIQUE)

        return statuses, sol

    def solve(self, vector):
        """Solve A x = vector."""

        vector = np.asarray(vector, dtype=np.int64).reshape(-1, 1)
        statuses, sol = self.solve_many(vector)

        if statuses[0] == UNIQUE:
            return Solution(UNIQUE, sol[:, 0])

        return Solution(statuses[0])


def rref(matrix, fast=True):
    """Return (R, rank, pivot_cols) for an FqMatrix."""

    arr = matrix.entries.copy()
    pivots = row_reduce(arr, matrix.q, fast=fast)

    return FqMatrix(arr, matrix.q), len(pivots), pivots


def rank(matrix):
    """Return the rank of an FqMatrix."""

    return rref(matrix)[1]


def is_full_rank(matrix):
    """Return True if rank(M) = min(rows, cols)."""

    return rank(matrix) == min(matrix.rows, matrix.cols)


def solve(matrix, vector):
    """Solve A x = b over F_q."""

    vector = np.asarray(vector, dtype=np.int64).reshape(-1)

    if vector.shape[0] != matrix.rows:
        raise ParameterError("A has %u rows but b has %u entries" %
                             (matrix.rows, vector.shape[0]))

    aug = np.hstack([matrix.entries, (vector % matrix.q)[:, None]])
    pivots = row_reduce(aug, matrix.q, ncols=matrix.cols)
    rnk = len(pivots)

    if np.any(aug[rnk:, -1] != 0):
        return Solution(NO_SOLUTION)

    if rnk < matrix.cols:
        return Solution(UNDERDETERMINED)

    sol = np.zeros(matrix.cols, dtype=np.int64)
    sol[pivots] = aug[:rnk, -1]

    return Solution(UNIQUE, sol)


def kernel(matrix):
    """Return a basis of {x : M x = 0}, one row per basis vector."""

    reduced, rnk, pivots = rref(matrix)
    q = matrix.q
    free = [col for col in range(matrix.cols) if col not in pivots]

    basis = np.zeros((len(free), matrix.cols), dtype=np.int64)
    for idx, col in enumerate(free):
        basis[idx, col] = 1
        for row, pivot in enumerate(pivots):
            basis[idx, pivot] = (-reduced.entries[row, col]) % q

    return FqMatrix(basis, q)


def random_matrix(rows, cols, rng, q=2):
    """Return a matrix with i.i.d. uniform entries."""

    return FqMatrix(rng.integers(0, q, size=(rows, cols), dtype=np.int64), q)


def ext_row_reduce(field, arr, ncols=None):
    """Gauss-Jordan elimination in place over F_{q^m} (packed values).

    Returns:
        the list of pivot columns
    """

    rows, cols = arr.shape
    ncols = cols if ncols is None else ncols
    pivots = []
    row = 0

    for col in range(ncols):

        if row == rows:
            break

        candidates = np.nonzero(arr[row:, col])[0]
        if candidates.size == 0:
            continue

        pivot = row + candidates[0]
        if pivot != row:
            arr[[row, pivot]] = arr[[pivot, row]]

        inv = field.inv(int(arr[row, col]))
        arr[row] = field.mul_array(arr[row], inv)

        factors = arr[:, col].copy()
        factors[row] = 0
        targets = np.nonzero(factors)[0]
        if targets.size:
            scaled = field.mul_array(factors[targets, None], arr[row][None, :])
            arr[targets] = field.sub_array(arr[targets], scaled)

        pivots.append(col)
        row += 1

    return pivots


def ext_rank(field, matrix):
    """Return the rank of a packed matrix over F_{q^m}."""

    arr = np.array(matrix, dtype=np.int64)

    return len(ext_row_reduce(field, arr))


def ext_kernel(field, matrix):
    """Return a basis of {x : M x = 0} over F_{q^m}, in RREF."""

    arr = np.array(matrix, dtype=np.int64)
    cols = arr.shape[1]
    pivots = ext_row_reduce(field, arr)
    free = [col for col in range(cols) if col not in pivots]

    basis = np.zeros((len(free), cols), dtype=np.int64)
    for idx, col in enumerate(free):
        basis[idx, col] = 1
        for row, pivot in enumerate(pivots):
            basis[idx, pivot] = field.neg(int(arr[row, col]))

    ext_row_reduce(field, basis)

    return basis
