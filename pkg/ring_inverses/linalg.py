# Copyright 2025 Google LLC

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     https://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Exact linear algebra on square numpy object arrays of Gaussian rationals.

Arithmetic is exact, so pivoting takes the first nonzero entry of a column
instead of the entry of largest magnitude.
"""

from __future__ import annotations

from typing import List, NamedTuple, Optional, Tuple

import numpy as np

from ring_inverses.errors import NotAUnit
from ring_inverses.gaussian import ONE, ZERO, GaussianRational


def identity(n: int) -> np.ndarray:
    return np.array([[ONE if i == j else ZERO for j in range(n)]
                     for i in range(n)], dtype=object)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.array([[ZERO] * cols for _ in range(rows)], dtype=object).reshape(rows, cols)


def matmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Exact product; an empty inner dimension yields the zero matrix."""
    if x.shape[1] == 0:
        return zeros(x.shape[0], y.shape[1])
    return np.dot(x, y)


def conjugate_transpose(x: np.ndarray) -> np.ndarray:
    return np.array([[entry.conjugate() for entry in row] for row in x.T],
                    dtype=object).reshape(x.shape[1], x.shape[0])


class RowEchelon(NamedTuple):
    # The reduced row echelon form of the input.
    reduced: np.ndarray
    # An invertible matrix with transform @ input == reduced.
    transform: np.ndarray
    # Column index of the leading one in each nonzero row.
    pivots: List[int]


def row_reduce(x: np.ndarray) -> RowEchelon:
    """Gauss-Jordan elimination, recording the row operations."""
    rows, cols = x.shape
    reduced = x.copy()
    transform = identity(rows)
    pivots: List[int] = []

    row = 0
    for col in range(cols):
        if row == rows:
            break
        pivot_row = next((i for i in range(row, rows) if reduced[i, col]), None)
        if pivot_row is None:
            continue
        if pivot_row != row:
            reduced[[row, pivot_row]] = reduced[[pivot_row, row]]
            transform[[row, pivot_row]] = transform[[pivot_row, row]]

        pivot = reduced[row, col]
        reduced[row, :] = reduced[row, :] / pivot
        transform[row, :] = transform[row, :] / pivot

        for i in range(rows):
            if i != row and reduced[i, col]:
                factor = reduced[i, col]
                reduced[i, :] = reduced[i, :] - factor * reduced[row, :]
                transform[i, :] = transform[i, :] - factor * transform[row, :]

        pivots.append(col)
        row += 1

    return RowEchelon(reduced, transform, pivots)


def rank(x: np.ndarray) -> int:
    return len(row_reduce(x).pivots)


def inverse(x: np.ndarray) -> np.ndarray:
    """Returns the two-sided inverse of a square matrix.

    Raises:
        NotAUnit: If the matrix is singular.
    """
    n = x.shape[0]
    echelon = row_reduce(x)
    if len(echelon.pivots) != n:
        raise NotAUnit(f"matrix of rank {len(echelon.pivots)} < {n} is not invertible")
    return echelon.transform


def determinant(x: np.ndarray) -> GaussianRational:
    """Bareiss fraction-free elimination; every division is exact."""
    n = x.shape[0]
    if n == 0:
        return ONE
    m = x.copy()
    sign = 1
    previous = ONE
    for k in range(n - 1):
        if not m[k, k]:
            for i in range(k + 1, n):
                if m[i, k]:
                    m[[k, i]] = m[[i, k]]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i, j] = (m[k, k] * m[i, j] - m[i, k] * m[k, j]) / previous
        previous = m[k, k]
    return m[n - 1, n - 1] * sign


class RankFactorization(NamedTuple):
    # Invertible row transform P.
    left: np.ndarray
    # Invertible column transform Q.
    right: np.ndarray
    rank: int


def rank_factorization(x: np.ndarray) -> RankFactorization:
    """Finds invertible P, Q with P @ x @ Q == [[I_r, 0], [0, 0]]."""
    n = x.shape[1]
    echelon = row_reduce(x)
    r = len(echelon.pivots)

    # Move the pivot columns to the front, keeping the relative order of both
    # groups, then clear the non-pivot block with column operations.
    order = echelon.pivots + [j for j in range(n) if j not in echelon.pivots]
    permutation = zeros(n, n)
    for target, source in enumerate(order):
        permutation[source, target] = ONE
    permuted = matmul(echelon.reduced, permutation)

    clearing = identity(n)
    clearing[:r, r:] = -permuted[:r, r:]

    return RankFactorization(echelon.transform, matmul(permutation, clearing), r)


def leading_identity(n: int, r: int) -> np.ndarray:
    result = zeros(n, n)
    for i in range(r):
        result[i, i] = ONE
    return result


def solve(a: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    """Solves a @ x == b, setting every free variable to zero.

    Returns:
        The canonical solution, or None if the system is inconsistent.
    """
    echelon = row_reduce(a)
    rhs = matmul(echelon.transform, b)
    r = len(echelon.pivots)
    for i in range(r, a.shape[0]):
        if any(rhs[i, :]):
            return None

    x = zeros(a.shape[1], b.shape[1])
    for i, col in enumerate(echelon.pivots):
        x[col, :] = rhs[i, :]
    return x


def solve_left(a: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    """Solves x @ a == b through the transposed system."""
    x = solve(a.T.copy(), b.T.copy())
    return None if x is None else x.T.copy()


def as_tuple(x: np.ndarray) -> Tuple[Tuple[GaussianRational, ...], ...]:
    return tuple(tuple(row) for row in x)
