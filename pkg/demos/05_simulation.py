"""
Checking exp(Qt) by simulation
==============================

A two-state chain leaves state 1 at rate ``alpha`` and state 2 at rate
``beta``.  Simulating many paths and counting where they end estimates the
transition matrix, which should agree with ``exp(Qt)``.
"""

# %%
import math

from liemarkov import (ChainSpec, MarkovMatrix, RateMatrix, empirical_transition, exp_rate,
                       log_markov, mean_jump_count, sample_trajectory)

# %%
# One path
# --------
spec = ChainSpec(RateMatrix(1.2, 0.4), horizon=5.0, initial_state=1)
print(sample_trajectory(spec, seed=3))

# %%
# Many paths
# ----------
Q = log_markov(MarkovMatrix(0.3, 0.1))
e = empirical_transition(Q, 1.0, n_per_state=100_000, seed=1)
exact = exp_rate(Q, 1.0)
for name, est, se, target in zip("ab", e.estimate, e.std_err, (exact.a, exact.b)):
    print(f"{name}: simulated {est:.4f} +- {se:.4f}   exact {target:.4f}   z = {(est - target) / se:+.2f}")

# %%
# The same seed gives the same counts whatever the number of threads.
again = empirical_transition(Q, 1.0, n_per_state=100_000, seed=1, workers=4)
print("parallel identical:", (again.counts == e.counts).all())

# %%
# Mixing time and jump counts
# ---------------------------
# For the binary-symmetric chain with rate 1/2 the expected number of jumps
# grows linearly in ``t``, like ``t/2``.
q = RateMatrix(0.5, 0.5)
for t in (0.5, math.log(2), 2.0, 8.0):
    m = mean_jump_count(q, t, n=50_000, seed=2)
    print(f"t={t:.3f}  mean jumps {m.mean:.3f} +- {m.std_err:.3f}   t/2 = {t / 2:.3f}")
