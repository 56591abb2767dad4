"""
The Lie algebra of the Markov group: tangent vectors at the identity.

A smooth path ``A(t) = [[1-a(t), b(t)], [a(t), 1-b(t)]]`` through the
identity has velocity ``a'(0) L1 + b'(0) L2`` with::

    L1 = [[-1, 0],      L2 = [[0,  1],
          [ 1, 0]]            [0, -1]]

so tangent vectors are stored as coordinates ``(x, y)`` in this basis.  The
only nontrivial bracket is ``[L1, L2] = L1 - L2``, which makes the line
spanned by ``Y = L1 - L2`` the derived algebra and the unique proper ideal.
Its one-parameter subgroup ``h(s) = 1 + sY`` is the determinant-one
subgroup.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import MarkovMatrix

#: Relative tolerance for ideal membership tests.
IDEAL_TOL = 1e-12


@dataclass(frozen=True)
class TangentVector:
    """``x * L1 + y * L2``."""

    x: float
    y: float

    def to_array(self) -> np.ndarray:
        return np.array([[-self.x, self.y], [self.x, -self.y]])

    def __add__(self, other: TangentVector) -> TangentVector:
        return TangentVector(self.x + other.x, self.y + other.y)

    def __mul__(self, k: float) -> TangentVector:
        return TangentVector(k * self.x, k * self.y)

    __rmul__ = __mul__

    def __neg__(self) -> TangentVector:
        return TangentVector(-self.x, -self.y)


ZERO = TangentVector(0.0, 0.0)
L1 = TangentVector(1.0, 0.0)
L2 = TangentVector(0.0, 1.0)
Y = TangentVector(1.0, -1.0)


def bracket(X: TangentVector, W: TangentVector) -> TangentVector:
    """Commutator ``XW - WX`` in basis coordinates.

    By bilinearity only the ``[L1, L2]`` term survives, so for
    ``X = (x, y)`` and ``W = (u, v)`` the result is ``(xv - yu) * (1, -1)``.
    """
    k = X.x * W.y - X.y * W.x
    return TangentVector(k, -k)


def tangent_from_path_derivative(da: float, db: float) -> TangentVector:
    return TangentVector(float(da), float(db))


def is_ideal_member(X: TangentVector, tol: float = IDEAL_TOL) -> bool:
    return abs(X.x + X.y) <= tol * max(1.0, abs(X.x), abs(X.y))


def _normalize(v: np.ndarray) -> TangentVector:
    v = v / np.max(np.abs(v))
    first = v[np.flatnonzero(np.abs(v) > 0)[0]]
    if first < 0:
        v = -v
    return TangentVector(float(v[0]) + 0.0, float(v[1]) + 0.0)


def _isotropic_directions(S: np.ndarray, tol: float) -> list[np.ndarray] | None:
    # directions z with z^T S z = 0 for a symmetric 2x2 S;
    # [] means unconstrained (S ~ 0), None means no such direction
    p, q, r = S[0, 0], S[0, 1], S[1, 1]  # p x^2 + 2q xy + r y^2
    scale = max(abs(p), abs(q), abs(r))
    if scale <= tol:
        return []
    if abs(r) > tol * scale:
        # slopes m = y/x solve r m^2 + 2q m + p = 0
        disc = q * q - p * r
        if disc < -tol * scale * scale:
            return None
        root = math.sqrt(max(disc, 0.0))
        return [np.array([1.0, (-q + sgn * root) / r]) for sgn in (1.0, -1.0)]
    # r ~ 0: x (p x + 2q y) = 0, so the y axis is isotropic
    out = [np.array([0.0, 1.0])]
    if abs(q) > tol * scale:
        out.append(np.array([-2.0 * q, p]))
    return out


def find_proper_ideal(tol: float = IDEAL_TOL) -> TangentVector:
    """Re-derive the generator of the unique one-dimensional ideal.

    A line spanned by ``z = (x, y)`` is an ideal iff ``[z, L1]`` and
    ``[z, L2]`` both lie on it.  Each bracket is linear in ``z``, so each
    containment condition ``cross(z, [z, Li]) = 0`` is a quadratic form in
    ``z``.  The candidate lines are the isotropic directions of these forms;
    the ideal is the candidate on which every form vanishes.

    The generator is normalised to unit max-norm with its first nonzero
    coordinate positive.
    """
    basis = (L1, L2)
    J = np.array([[0.0, 1.0], [-1.0, 0.0]])  # z^T J v = z_x v_y - z_y v_x
    forms = []
    for Li in basis:
        # columns: coordinates of [e_k, Li] for the unit coordinate vectors e_k
        A = np.column_stack([
            [bracket(e, Li).x, bracket(e, Li).y] for e in basis
        ])
        K = J @ A
        forms.append(0.5 * (K + K.T))

    candidates = []
    for S in forms:
        dirs = _isotropic_directions(S, tol)
        if dirs is None:
            raise ArithmeticError("no proper ideal: a containment form is definite")
        candidates.extend(dirs)
    if not candidates:
        raise ArithmeticError("every line is an ideal; algebra is abelian")

    for z in candidates:
        z = z / np.linalg.norm(z)
        if all(abs(z @ S @ z) <= tol for S in forms):
            return _normalize(z)
    raise ArithmeticError("no line satisfies all ideal containment conditions")


def h(s: float) -> MarkovMatrix:
    """``exp(sY) = 1 + sY = [[1-s, -s], [s, 1+s]]``; exact because ``Y @ Y = 0``."""
    s = float(s)
    return MarkovMatrix(s, -s)


def exp_tangent(X: TangentVector) -> MarkovMatrix:
    """Matrix exponential of ``x L1 + y L2``.

    ``x L1 + y L2 = [[-x, y], [x, -y]]`` is the rate matrix with
    ``alpha = x`` and ``beta = y``.
    """
    from .decomp import RateMatrix, exp_rate

    return exp_rate(RateMatrix(X.x, X.y), 1.0)
