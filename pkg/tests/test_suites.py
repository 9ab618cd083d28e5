import pytest

from sntlogic import (
    FALSIFIED,
    NO_COUNTEREXAMPLE,
    S_DRASTIC,
    S_LUK,
    S_MAX,
    S_PROB,
    SUITES,
    T_LUK,
    T_MIN,
    T_PROD,
    Inputs,
    build_snt,
    negation_alpha_lower,
    negation_alpha_upper,
    negation_standard,
    resolve_inputs,
    run_theorem_suite,
    suite_ok,
)

STD = negation_standard()
N03 = negation_alpha_lower(0.3)


def by_id(reports):
    return {r.property_id: r for r in reports}


def test_thm31_positive_instance(coarse):
    r = by_id(run_theorem_suite("Thm3.1", [T_LUK, S_PROB, STD], coarse))
    assert r["LC"].verdict == NO_COUNTEREXAMPLE and r["IP"].verdict == NO_COUNTEREXAMPLE


def test_thm31_negative_instance(coarse):
    reports = run_theorem_suite("thm3.1", [T_MIN, S_PROB, STD], coarse)
    r = by_id(reports)
    assert r["LC"].falsified and r["IP"].falsified
    assert r["IP"].expected == FALSIFIED and suite_ok(reports)


def test_cor31_needs_strict_conorm(coarse):
    r = by_id(run_theorem_suite("Cor3.1", {"S": S_MAX, "N": STD, "T": T_MIN}, coarse))
    assert r["S_STRICT"].falsified and r["IP"].expected is None


def test_prop34_and_lemma(coarse):
    assert suite_ok(run_theorem_suite("Prop3.4", [S_PROB, STD, T_PROD], coarse))
    r = by_id(run_theorem_suite("Prop3.4", [S_PROB, STD, T_PROD], coarse))
    assert r["EP"].verdict == NO_COUNTEREXAMPLE and r["EP"].expected == NO_COUNTEREXAMPLE
    r = by_id(run_theorem_suite("Lemma3.1", [S_MAX, STD, T_MIN], coarse))
    assert not r["LEMMA31_a"].falsified and not r["LEMMA31_b"].falsified


def test_snt_implication_fills_roles(coarse):
    reports = run_theorem_suite("Prop3.5", [build_snt(S_MAX, STD, T_MIN)], coarse)
    assert by_id(reports)["LCP"].expected == NO_COUNTEREXAMPLE and suite_ok(reports)


def test_crisp_suites(coarse):
    for s, t in ((S_MAX, T_MIN), (S_PROB, T_LUK), (S_DRASTIC, T_PROD)):
        for n in (N03, negation_alpha_upper(0.7)):
            assert suite_ok(run_theorem_suite("CrispProp", [s, n, t], coarse))
            assert suite_ok(run_theorem_suite("CrispClosedForm", [s, n, t], coarse))


def test_closed_form_needs_threshold_negation(coarse):
    with pytest.raises(ValueError):
        run_theorem_suite("CrispClosedForm", [S_MAX, STD, T_MIN], coarse)


def test_prop32_np_biconditional(coarse):
    r = by_id(run_theorem_suite("Prop3.2", [S_LUK, N03, T_PROD], coarse))
    assert r["NP"].falsified and r["NP"].expected == FALSIFIED


def test_prop33_prop22_prop24(coarse):
    for sid in ("Prop3.3", "Prop2.2", "Prop2.4", "Prop3.1"):
        assert suite_ok(run_theorem_suite(sid, [S_PROB, STD, T_PROD], coarse)), sid


def test_every_suite_runs_on_max_min(coarse):
    for sid in SUITES:
        if sid.startswith("Crisp"):
            continue
        assert suite_ok(run_theorem_suite(sid, [S_MAX, STD, T_MIN], coarse)), sid


def test_derived_conditionals_not_predicted_outside_hypotheses(coarse):
    reports = run_theorem_suite("Thm3.2", [S_PROB, STD, T_PROD], coarse)
    r = by_id(reports)
    assert r["S_IS_MAX"].falsified
    assert r["S1"].expected is None and r["S5"].expected == NO_COUNTEREXAMPLE
    assert suite_ok(reports)


def test_second_negation(coarse):
    r = by_id(run_theorem_suite("Thm3.3", {"S": S_MAX, "N": STD, "T": T_MIN, "N'": N03}, coarse))
    assert r["N_EQ_NPRIME"].falsified and r["T5"].verdict == NO_COUNTEREXAMPLE


def test_errors():
    with pytest.raises(KeyError):
        run_theorem_suite("Thm9.9", [S_MAX])
    with pytest.raises(ValueError):
        run_theorem_suite("Thm3.1", [S_MAX])
    with pytest.raises(ValueError):
        resolve_inputs([S_MAX, S_PROB])


def test_resolve_inputs_forms():
    assert resolve_inputs(Inputs(S=S_MAX)).S is S_MAX
    inp = resolve_inputs([STD, N03, T_MIN])
    assert inp.N is STD and inp.N2 is N03
