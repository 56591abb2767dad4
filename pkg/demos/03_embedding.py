"""
Embedding a Markov matrix in a continuous-time chain
====================================================

A matrix with positive determinant is ``exp(Q)`` for exactly one rate matrix
``Q = [[-alpha, beta], [alpha, -beta]]``.  Both directions are closed-form.
"""

# %%
import math

from liemarkov import MarkovMatrix, RateMatrix, exp_rate, log_markov

M = MarkovMatrix(0.3, 0.1)
Q = log_markov(M)
print("log M        =", Q)
print("exp(log M)   =", exp_rate(Q, 1.0))

# %%
# Time dependence
# ---------------
# The same generator run for longer approaches its stationary distribution.
for t in (0.1, 1.0, 5.0, 20.0):
    Mt = exp_rate(Q, t)
    print(f"t={t:5.1f}  a={Mt.a:.6f}  b={Mt.b:.6f}")
print("stationary   =", Q.beta / (Q.alpha + Q.beta), Q.alpha / (Q.alpha + Q.beta))

# %%
# Small rates
# -----------
# Near the identity the closed forms switch to a short Taylor series, so
# tiny rates round-trip without cancellation.
tiny = MarkovMatrix(3e-10, -1e-10)
print("near identity:", log_markov(tiny), "->", exp_rate(log_markov(tiny)))

# %%
# What does not embed
# -------------------
from liemarkov import MarkovError

for m in (MarkovMatrix(0.5, 0.5), MarkovMatrix(0.9, 0.4)):
    try:
        log_markov(m)
    except MarkovError as err:
        print(type(err).__name__, "-", err)

print("binary symmetric rate 1/2 at ln 2:", exp_rate(RateMatrix(0.5, 0.5), math.log(2)))
