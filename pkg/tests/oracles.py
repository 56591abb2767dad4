"""Independent reference computations on dense 2x2 arrays.

Nothing here calls into the parameter-form formulas under test.
"""

import math

import numpy as np


def dense(a, b):
    return np.array([[1.0 - a, b], [a, 1.0 - b]])


def dense_tangent(x, y):
    return x * np.array([[-1.0, 0.0], [1.0, 0.0]]) + y * np.array([[0.0, 1.0], [0.0, -1.0]])


def dense_rate(alpha, beta):
    return np.array([[-alpha, beta], [alpha, -beta]])


def params(A):
    """(a, b) read off a dense Markov-form matrix."""
    return A[1, 0], A[0, 1]


def cofactor_det(A):
    return A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]


def adjugate_inverse(A):
    adj = np.array([[A[1, 1], -A[0, 1]], [-A[1, 0], A[0, 0]]])
    return adj / cofactor_det(A)


def expm_series(A, terms=30):
    """Truncated power series with scaling and squaring."""
    A = np.asarray(A, dtype=float)
    norm = np.max(np.sum(np.abs(A), axis=0))
    k = max(0, math.ceil(math.log2(norm))) if norm > 0.5 else 0
    B = A / 2**k
    out = np.eye(2)
    term = np.eye(2)
    for n in range(1, terms):
        term = term @ B / n
        out = out + term
    for _ in range(k):
        out = out @ out
    return out
