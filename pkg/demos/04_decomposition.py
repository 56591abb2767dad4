"""
Binary-symmetric times a symmetry-breaking factor
=================================================

Every matrix with positive determinant factors as ``exp(Qt) h(s)``, where
``exp(Qt)`` is the binary-symmetric chain run for time ``t`` and ``h(s)``
lives in the determinant-one subgroup.  ``t`` carries all of the determinant
and ``s`` carries the asymmetry between the two rates.
"""

# %%
from liemarkov import Decomposition, MarkovMatrix, compose, decompose

M = MarkovMatrix(0.3, 0.1)
d = decompose(M)
print(f"t = {d.t:.6f}   s = {d.s:.6f}   lambda = {d.lam:.6f}")
print("compose(t, s) =", compose(d))

# %%
# Which (t, s) are stochastic?
# ----------------------------
# For fixed ``t`` only an interval of ``s`` keeps all entries in ``[0, 1]``.
# The endpoints land exactly on the edges ``a = 0`` and ``b = 0``.
import math

import numpy as np

from liemarkov import is_stochastic, stochastic_s_bounds

for t in (0.1, math.log(2), 2.0):
    lo, hi = stochastic_s_bounds(t)
    inside = all(is_stochastic(compose(Decomposition(t, s))) for s in np.linspace(lo, hi, 11)[1:-1])
    print(f"t={t:.4f}  s in [{lo:+.4f}, {hi:+.4f}]  interior stochastic: {inside}")

# %%
# Reading off the perturbation
# ----------------------------
from liemarkov import perturbation_interpretation

for s in (0.0, 0.3, 2.0):
    r = perturbation_interpretation(Decomposition(math.log(5), s))
    print(f"s={s:3.1f}  region={r.region:14s}  relative perturbation={r.relative_perturbation:.3f}")

# %%
# Sweeping the plane
# ------------------
# ``liemarkov region`` writes the same classification for a grid of (a, b),
# ready for any plotting tool:
#
#   liemarkov region --step 0.05 --out region.csv
