"""
Group structure of real 2x2 Markov matrices.

A Markov matrix is stored by its two off-diagonal entries ``(a, b)``::

    M = [[1 - a,     b],
         [    a, 1 - b]]

Columns sum to one by construction, so nothing redundant is ever stored.
The invertible ones (``a + b != 1``) form a group ``G`` with two connected
components, told apart by the sign of ``det(M) = 1 - a - b``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import SingularMatrixError

#: Absolute tolerance on ``det`` below which a matrix counts as singular.
DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class MarkovMatrix:
    """The matrix ``[[1-a, b], [a, 1-b]]``; ``a`` and ``b`` are unrestricted reals."""

    a: float
    b: float

    @property
    def det(self) -> float:
        return det(self)

    def to_array(self) -> np.ndarray:
        return np.array([[1.0 - self.a, self.b], [self.a, 1.0 - self.b]])

    def __matmul__(self, other: MarkovMatrix) -> MarkovMatrix:
        if not isinstance(other, MarkovMatrix):
            return NotImplemented
        return multiply(self, other)


class ComponentClass(enum.Enum):
    IDENTITY = "identity-component"
    REFLECTED = "reflected-component"
    SINGULAR = "singular"


@dataclass(frozen=True)
class ParityFactorization:
    """``M = factor`` when ``parity == 1`` and ``M = P @ factor`` when ``parity == -1``."""

    parity: int
    factor: MarkovMatrix


IDENTITY = MarkovMatrix(0.0, 0.0)
P = MarkovMatrix(1.0, 1.0)


def make_markov(a: float, b: float) -> MarkovMatrix:
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError(f"Markov parameters must be finite, got a={a!r}, b={b!r}")
    return MarkovMatrix(a, b)


def det(M: MarkovMatrix) -> float:
    return 1.0 - (M.a + M.b)


def _product_params(c, d, a, b):
    # (c, d) @ (a, b); works elementwise on numpy arrays too
    k = 1.0 - c - d
    return a * k + c, b * k + d


def multiply(N: MarkovMatrix, M: MarkovMatrix) -> MarkovMatrix:
    """Matrix product ``N @ M``, computed in parameter form.

    For ``N = (c, d)`` and ``M = (a, b)`` the product has parameters
    ``a(1-c-d) + c`` and ``b(1-c-d) + d``.
    """
    a2, b2 = _product_params(N.a, N.b, M.a, M.b)
    return MarkovMatrix(a2, b2)


def classify(M: MarkovMatrix, tol: float = DEFAULT_TOL) -> ComponentClass:
    d = det(M)
    if d > tol:
        return ComponentClass.IDENTITY
    if d < -tol:
        return ComponentClass.REFLECTED
    return ComponentClass.SINGULAR


def inverse(M: MarkovMatrix, tol: float = DEFAULT_TOL) -> MarkovMatrix:
    d = det(M)
    if abs(d) <= tol:
        raise SingularMatrixError(f"matrix (a={M.a!r}, b={M.b!r}) has det={d!r}")
    return MarkovMatrix(-M.a / d, -M.b / d)


def parity_factor(M: MarkovMatrix, tol: float = DEFAULT_TOL) -> ParityFactorization:
    """Split ``M`` into its component sign and a factor in the identity component.

    The reflected component is the coset ``P G0`` with ``P = [[0, 1], [1, 0]]``.
    Since ``P @ P = 1``, the factor for a reflected ``M`` is ``P @ M``, whose
    parameters are ``(1 - a, 1 - b)``.
    """
    cls = classify(M, tol)
    if cls is ComponentClass.SINGULAR:
        raise SingularMatrixError(
            f"matrix (a={M.a!r}, b={M.b!r}) is singular and lies in neither component"
        )
    if cls is ComponentClass.IDENTITY:
        return ParityFactorization(1, M)
    return ParityFactorization(-1, MarkovMatrix(1.0 - M.a, 1.0 - M.b))


def is_stochastic(M: MarkovMatrix) -> bool:
    return 0.0 <= M.a <= 1.0 and 0.0 <= M.b <= 1.0


def centrality_search(c, d, trial_count: int = 32, seed: int = 0,
                      tol: float = DEFAULT_TOL, trial_scale: float = 10.0):
    """Vectorised centrality test for many candidates ``(c, d)`` at once.

    Each candidate is multiplied on both sides by ``trial_count`` pseudorandom
    group elements with parameters uniform in ``[-trial_scale, trial_scale]``.
    A candidate is reported central only if every commutator vanishes to
    within a scale-relative tolerance *and* the analytic criterion
    ``max(|c|, |d|) <= tol`` holds.  The randomized trials can only refute
    centrality, never certify it.

    Returns a boolean array with the broadcast shape of ``c`` and ``d``.
    """
    if trial_count < 1:
        raise ValueError("trial_count must be >= 1")
    c = np.asarray(c, dtype=float)
    d = np.asarray(d, dtype=float)
    c, d = np.broadcast_arrays(c, d)
    rng = np.random.default_rng(seed)
    a = rng.uniform(-trial_scale, trial_scale, size=trial_count)
    b = rng.uniform(-trial_scale, trial_scale, size=trial_count)

    cc = c[..., None]
    dd = d[..., None]
    left_a, left_b = _product_params(cc, dd, a, b)
    right_a, right_b = _product_params(a, b, cc, dd)
    scale = (1.0 + np.abs(cc) + np.abs(dd)) * (1.0 + np.abs(a) + np.abs(b))
    gap = np.maximum(np.abs(left_a - right_a), np.abs(left_b - right_b))
    commutes = np.all(gap <= 4 * tol * scale, axis=-1)

    analytic = np.maximum(np.abs(c), np.abs(d)) <= tol
    return commutes & analytic


def is_central(M: MarkovMatrix, trial_count: int = 32, seed: int = 0,
               tol: float = DEFAULT_TOL) -> bool:
    """Whether ``M`` commutes with every element of the group.

    The only central element is the identity: ``N M = M N`` for all ``M``
    forces ``b c = a d`` for all ``(a, b)``, hence ``c = d = 0``.
    """
    return bool(centrality_search(M.a, M.b, trial_count, seed, tol))
