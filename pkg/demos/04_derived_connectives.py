"""
Getting t-norms back
====================

From an (S,N,T)-implication and a negation N' one can rebuild a t-conorm
``I(N'(x), y)`` and a t-norm ``N'(I(x, N'(y)))``.  For max/min with the
standard negation the generators come back exactly; in general only a few
axioms survive.
"""

from sntlogic import (
    S_MAX,
    S_PROB,
    T_MIN,
    T_PROD,
    SampleSet,
    build_snt,
    check_pointwise_equal,
    derive_tconorm,
    derive_tnorm,
    format_table,
    negation_standard,
)

std = negation_standard()
exact = SampleSet(grid_step=0.05, random_count=0, exact=True)

kd = build_snt(S_MAX, std, T_MIN)
print("recovers max:", not check_pointwise_equal(derive_tconorm(kd, std), S_MAX, exact, tol=0).falsified)
print("recovers min:", not check_pointwise_equal(derive_tnorm(kd, std), T_MIN, exact, tol=0).falsified)

# with the product pair commutativity is lost
d = derive_tconorm(build_snt(S_PROB, std, T_PROD), std)
print(format_table(d.reports(SampleSet(grid_step=0.05, random_count=32))))
