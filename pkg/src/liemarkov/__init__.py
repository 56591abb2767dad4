"""Lie-geometric structure of 2x2 Markov matrices.

The group of invertible matrices ``[[1-a, b], [a, 1-b]]``, its Lie algebra,
closed-form exponential and logarithm, the binary-symmetric decomposition
``M = exp(Qt) h(s)``, and a two-state chain simulator to check them.
"""

from .core import (DEFAULT_TOL, IDENTITY, P, ComponentClass, MarkovMatrix, ParityFactorization,
                   centrality_search, classify, det, inverse, is_central, is_stochastic,
                   make_markov, multiply, parity_factor)
from .decomp import (Decomposition, PerturbationReport, RateMatrix, binary_symmetric, compose,
                     decompose, exp_rate, log_markov, perturbation_interpretation,
                     stochastic_s_bounds)
from .errors import (MarkovError, NoStochasticMatricesError, NotEmbeddableError,
                     ReflectedComponentError, SingularComponentError, SingularMatrixError)
from .liealg import (L1, L2, Y, TangentVector, bracket, exp_tangent, find_proper_ideal, h,
                     is_ideal_member, tangent_from_path_derivative)
from .simulate import (ChainSpec, EmpiricalTransitionMatrix, MeanEstimate, TrajectorySummary,
                       empirical_transition, mean_jump_count, sample_trajectory)

__version__ = "0.1.0"
