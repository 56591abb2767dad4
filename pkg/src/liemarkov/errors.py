"""Exception hierarchy shared by the group, decomposition and CLI layers."""


class MarkovError(ValueError):
    """Base class for domain errors raised by :mod:`liemarkov`."""


class SingularMatrixError(MarkovError):
    """The matrix lies on the ``det(M) = 0`` boundary and is not invertible."""


class NotEmbeddableError(MarkovError):
    """The matrix is not ``exp(Q)`` for any real rate matrix ``Q``.

    Raised by :func:`liemarkov.decomp.log_markov` and
    :func:`liemarkov.decomp.decompose`.  The concrete subclass tells the
    caller *why*: the matrix is either on the singular boundary or in the
    reflected component ``P G0``.
    """

    label = "not-embeddable"

    def __init__(self, message, a=None, b=None):
        super().__init__(f"{self.label}: {message}")
        self.a = a
        self.b = b


class SingularComponentError(NotEmbeddableError, SingularMatrixError):
    label = "singular"


class ReflectedComponentError(NotEmbeddableError):
    label = "reflected-component"


class NoStochasticMatricesError(MarkovError):
    """No stochastic matrix has the requested determinant (``t < 0``)."""
