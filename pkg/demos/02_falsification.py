"""
Looking for counterexamples
===========================

Every check scans a deterministic sample set and either finds a witness or
reports ``no_counterexample``.  Passing is evidence, not proof.
"""

from sntlogic import (
    S_MAX,
    S_PROB,
    T_LUK,
    T_MIN,
    build_snt,
    check_lc,
    check_property,
    format_table,
    negation_alpha_lower,
    negation_standard,
)

std = negation_standard()
crisp = negation_alpha_lower(0.3)

reports = [
    check_property("NP", build_snt(S_MAX, std, T_MIN)),
    check_property("NP", build_snt(S_MAX, crisp, T_MIN)),
    check_property("ROP", build_snt(S_MAX, crisp, T_MIN)),
    check_property("EP", build_snt(S_PROB, crisp, T_MIN)),
    check_lc(T_LUK, std),
    check_lc(T_MIN, std),
]
print(format_table(reports))

# a witness can be replayed: the residual comes back unchanged
lc = reports[-1]
print("LC witness", lc.witness, "residual", lc.replay_residual())
