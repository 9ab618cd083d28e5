"""
Building (S,N,T)-implications
=============================

Pick a t-conorm, a negation and a t-norm, and get a fuzzy implication
``I(x, y) = S(N(T(x, N(y))), N(x))``.
"""

import numpy as np

from sntlogic import S_MAX, S_PROB, T_MIN, T_PROD, build_sn, build_snt, build_tn, negation_standard

std = negation_standard()

# max / standard / min collapses to the Kleene-Dienes form max(1 - x, y)
kd = build_snt(S_MAX, std, T_MIN)
print(kd.name, kd(0.3, 0.8))

# the product pair gives something new
prod = build_snt(S_PROB, std, T_PROD)
print(prod.name, prod(0.5, 0.5))

# compare with the two classical constructions on a small grid
x, y = np.meshgrid(np.linspace(0, 1, 5), np.linspace(0, 1, 5), indexing="ij")
print("S,N,T\n", np.round(prod(x, y), 3))
print("S,N\n", np.round(build_sn(S_PROB, std)(x, y), 3))
print("T,N\n", np.round(build_tn(T_PROD, std)(x, y), 3))

# the (S,N,T) value never drops below the (T,N) one
print("dominates T,N:", bool(np.all(prod(x, y) >= build_tn(T_PROD, std)(x, y))))
