"""
Theorem suites
==============

A suite checks hypotheses and conclusions together.  When the hypotheses
hold, each conclusion carries an ``expected`` verdict; ``suite_ok`` says
whether the observations agree.
"""

from sntlogic import S_PROB, T_LUK, T_MIN, format_table, negation_standard, run_theorem_suite, suite_ok

std = negation_standard()

# IP holds exactly when the law of contradiction does
for t in (T_LUK, T_MIN):
    reports = run_theorem_suite("Thm3.1", [t, S_PROB, std])
    print(format_table(reports))
    print("agrees with prediction:", suite_ok(reports), "\n")
