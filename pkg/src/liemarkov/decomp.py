"""
Closed-form exponential and logarithm of 2x2 Markov matrices, and the
binary-symmetric decomposition ``M = exp(Qt) h(s)``.

For a rate matrix ``Q = [[-alpha, beta], [alpha, -beta]]`` with
``r = alpha + beta`` we have ``Q @ Q = -r Q``, hence::

    exp(Qt) = 1 + Q (1 - exp(-rt)) / r

and ``det(exp(Qt)) = exp(-rt)``.  Inverting this gives a real logarithm for
every matrix with positive determinant, and for nothing else.

Fixing ``Q`` to the binary-symmetric generator ``[[-1/2, 1/2], [1/2, -1/2]]``
and factoring out the determinant-one subgroup gives coordinates ``(t, s)``
on the identity component::

    a = (1 - lam)/2 + lam s,   b = (1 - lam)/2 - lam s,   lam = exp(-t)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DEFAULT_TOL, ComponentClass, MarkovMatrix, classify, det, is_stochastic
from .errors import NoStochasticMatricesError, ReflectedComponentError, SingularComponentError
from .liealg import h

#: Arguments smaller than this in magnitude use the Taylor branch.
SWITCH_THRESHOLD = 1e-4


@dataclass(frozen=True)
class RateMatrix:
    """``[[-alpha, beta], [alpha, -beta]]``; columns sum to zero."""

    alpha: float
    beta: float

    @property
    def is_generator(self) -> bool:
        """True when both off-diagonal rates are nonnegative."""
        return self.alpha >= 0.0 and self.beta >= 0.0

    def to_array(self):
        import numpy as np

        return np.array([[-self.alpha, self.beta], [self.alpha, -self.beta]])


@dataclass(frozen=True)
class Decomposition:
    """Coordinates ``(t, s)`` with ``M = binary_symmetric(t) @ h(s)``."""

    t: float
    s: float

    @property
    def lam(self) -> float:
        """``exp(-t)``, equal to ``det(M)``."""
        return math.exp(-self.t)


BINARY_SYMMETRIC_RATES = RateMatrix(0.5, 0.5)


def _phi_series(z: float) -> float:
    # (e^z - 1)/z = sum z^k/(k+1)!, six terms
    return 1.0 + z * (1 / 2 + z * (1 / 6 + z * (1 / 24 + z * (1 / 120 + z / 720))))


def _phi_closed(z: float) -> float:
    return math.expm1(z) / z


def _psi_series(x: float) -> float:
    # -log(1-x)/x = sum x^k/(k+1), six terms
    return 1.0 + x * (1 / 2 + x * (1 / 3 + x * (1 / 4 + x * (1 / 5 + x / 6))))


def _psi_closed(x: float) -> float:
    return -math.log1p(-x) / x


def phi(z: float) -> float:
    """``(exp(z) - 1) / z`` with ``phi(0) = 1``."""
    if abs(z) > SWITCH_THRESHOLD:
        return _phi_closed(z)
    return _phi_series(z)


def psi(x: float) -> float:
    """``-log(1 - x) / x`` with ``psi(0) = 1``; defined for ``x < 1``."""
    if abs(x) > SWITCH_THRESHOLD:
        return _psi_closed(x)
    return _psi_series(x)


def exp_rate(Q: RateMatrix, t: float = 1.0) -> MarkovMatrix:
    """``exp(Qt)`` in closed form.

    ``a = alpha t phi(-rt)`` and ``b = beta t phi(-rt)`` with
    ``r = alpha + beta``.  The ``r = 0`` case is the nilpotent one, where
    ``exp(Qt) = 1 + Qt = h(alpha t)``.
    """
    rt = (Q.alpha + Q.beta) * t
    f = t * phi(-rt)
    return MarkovMatrix(Q.alpha * f, Q.beta * f)


def _check_identity_component(M: MarkovMatrix, tol: float, what: str) -> None:
    cls = classify(M, tol)
    if cls is ComponentClass.SINGULAR:
        raise SingularComponentError(
            f"det={det(M)!r} is on the boundary; {what}", M.a, M.b
        )
    if cls is ComponentClass.REFLECTED:
        raise ReflectedComponentError(
            f"det={det(M)!r} < 0; {what}; use parity_factor first", M.a, M.b
        )


def log_markov(M: MarkovMatrix, tol: float = DEFAULT_TOL) -> RateMatrix:
    """The real rate matrix ``Q`` with ``exp(Q) = M``.

    With ``x = a + b`` and ``det(M) = 1 - x``, the rates are
    ``alpha = -a log(1 - x) / x`` and ``beta = -b log(1 - x) / x``.

    Raises
    ------
    SingularComponentError
        ``det(M)`` is within ``tol`` of zero.
    ReflectedComponentError
        ``det(M) < 0``; ``M`` lies in the other component.
    """
    _check_identity_component(M, tol, "no real generator")
    g = psi(M.a + M.b)
    return RateMatrix(M.a * g, M.b * g)


def binary_symmetric(t: float) -> MarkovMatrix:
    return exp_rate(BINARY_SYMMETRIC_RATES, t)


def decompose(M: MarkovMatrix, tol: float = DEFAULT_TOL) -> Decomposition:
    """Coordinates ``(t, s)`` of ``M`` in the identity component.

    ``t = -log det(M)`` and ``s = (a - b) / (2 det(M))``.  Matrices with
    ``det(M) > 1`` give ``t < 0``; these are valid group elements but never
    stochastic.
    """
    _check_identity_component(M, tol, "not decomposable")
    lam = det(M)
    # + 0.0 maps -0.0 (identity) to 0.0
    return Decomposition(-math.log(lam) + 0.0, (M.a - M.b) / (2.0 * lam))


def compose(d: Decomposition) -> MarkovMatrix:
    """Inverse of :func:`decompose`: ``binary_symmetric(t) @ h(s)``."""
    lam = math.exp(-d.t)
    half_gap = -0.5 * math.expm1(-d.t)  # (1 - lam)/2
    return MarkovMatrix(half_gap + lam * d.s, half_gap - lam * d.s)


def stochastic_s_bounds(t: float) -> tuple[float, float]:
    """Interval of ``s`` for which ``compose(t, s)`` is stochastic.

    Requiring ``a, b >= 0`` gives ``|s| <= (exp(t) - 1)/2``; the upper
    constraints ``a, b <= 1`` are then implied.
    """
    if t < 0:
        raise NoStochasticMatricesError(
            f"t={t!r} < 0 means det > 1, so a + b < 0; no stochastic matrix qualifies"
        )
    half_width = 0.5 * math.expm1(t)
    return -half_width, half_width


@dataclass(frozen=True)
class PerturbationReport:
    t: float
    s: float
    lam: float
    symmetric_factor: MarkovMatrix
    perturbation_factor: MarkovMatrix
    matrix: MarkovMatrix
    stochastic: bool
    binary_symmetric: bool
    s_bounds: tuple[float, float] | None
    # s / s_max; None when t < 0 or the interval is degenerate
    relative_perturbation: float | None
    region: str  # "interior", "boundary", "non-stochastic"


def perturbation_interpretation(d: Decomposition, rel_tol: float = 1e-12) -> PerturbationReport:
    """Describe how far ``compose(d)`` sits from the binary-symmetric model.

    ``s = 0`` is exactly binary-symmetric.  For ``t >= 0`` the report also
    places ``s`` relative to the stochastic interval; points within
    ``rel_tol`` of either endpoint are flagged as on the boundary.
    """
    M = compose(d)
    bounds = None
    relative = None
    if d.t >= 0:
        bounds = stochastic_s_bounds(d.t)
        s_max = bounds[1]
        if s_max > 0:
            relative = d.s / s_max
        at_edge = abs(abs(d.s) - s_max) <= rel_tol * max(1.0, s_max)
        if at_edge:
            region = "boundary"
        elif abs(d.s) < s_max:
            region = "interior"
        else:
            region = "non-stochastic"
    else:
        region = "non-stochastic"
    return PerturbationReport(
        t=d.t,
        s=d.s,
        lam=d.lam,
        symmetric_factor=binary_symmetric(d.t),
        perturbation_factor=h(d.s),
        matrix=M,
        # endpoints are stochastic exactly; compose may round b or a to -1e-17
        stochastic=is_stochastic(M) or region == "boundary",
        binary_symmetric=d.s == 0.0,
        s_bounds=bounds,
        relative_perturbation=relative,
        region=region,
    )
