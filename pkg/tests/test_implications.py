from fractions import Fraction

import numpy as np
import pytest

import oracle
from sntlogic import (
    S_LUK,
    S_MAX,
    S_PROB,
    T_MIN,
    T_PROD,
    basic_tconorms,
    basic_tnorms,
    build_sn,
    build_snt,
    build_tn,
    check_axioms,
    closed_crisp_lower,
    closed_crisp_upper,
    natural_negation,
    negation_alpha_lower,
    negation_alpha_upper,
    negation_standard,
    negation_sugeno,
    promote_negation,
)

STD = negation_standard()
HALF = Fraction(1, 2)

# frozen from tests/oracle.py (rational arithmetic)
FROZEN = {
    "snt(probsum,std,prod)(1/2,1/2)": Fraction(7, 8),
    "tn(prod,std)(1/2,1/2)": Fraction(3, 4),
    "sn(luk,std)(3/5,3/10)": Fraction(7, 10),
    "natneg snt(probsum,std,prod)(1/2)": Fraction(3, 4),
    "snt(probsum,std,min)(1/2,1/2)": Fraction(3, 4),
}


def test_frozen_values_match_oracle():
    o = oracle
    assert o.snt(o.s_prob, o.n_std, o.t_prod)(HALF, HALF) == FROZEN["snt(probsum,std,prod)(1/2,1/2)"]
    assert o.tn(o.t_prod, o.n_std)(HALF, HALF) == FROZEN["tn(prod,std)(1/2,1/2)"]
    assert o.sn(o.s_luk, o.n_std)(Fraction(3, 5), Fraction(3, 10)) == FROZEN["sn(luk,std)(3/5,3/10)"]
    assert o.snt(o.s_prob, o.n_std, o.t_prod)(HALF, 0) == FROZEN["natneg snt(probsum,std,prod)(1/2)"]
    assert o.snt(o.s_prob, o.n_std, o.t_min)(HALF, HALF) == FROZEN["snt(probsum,std,min)(1/2,1/2)"]


def test_sn_examples():
    assert build_sn(S_MAX, STD)(0.3, 0.8) == 0.8
    assert build_sn(S_LUK, STD)(0.6, 0.3) == pytest.approx(float(FROZEN["sn(luk,std)(3/5,3/10)"]))


def test_tn_examples():
    assert build_tn(T_MIN, STD)(0.3, 0.8) == pytest.approx(0.8)
    assert build_tn(T_PROD, STD)(0.5, 0.5) == float(FROZEN["tn(prod,std)(1/2,1/2)"])


def test_snt_examples():
    assert build_snt(S_MAX, STD, T_MIN)(0.3, 0.8) == 0.8
    assert build_snt(S_PROB, STD, T_PROD)(0.5, 0.5) == float(FROZEN["snt(probsum,std,prod)(1/2,1/2)"])


def test_snt_reads_s_n_t():
    imp = build_snt(S_PROB, STD, T_MIN)
    assert imp.name == "snt(probsum,std,min)"
    assert (imp.tconorm, imp.negation, imp.tnorm) == (S_PROB, STD, T_MIN)


NEGS = [STD, negation_alpha_lower(0.3), negation_alpha_upper(0.7), negation_sugeno(1.5)]


@pytest.mark.parametrize("n", NEGS, ids=lambda n: n.name)
def test_boundary_values_all_triples(n):
    for s in basic_tconorms():
        for t in basic_tnorms():
            imp = build_snt(s, n, t)
            assert imp(1.0, 0.0) == 0 and imp(0.0, 0.0) == 1
    for s in basic_tconorms():
        ys = np.linspace(0, 1, 11)
        assert np.all(build_sn(s, n)(np.zeros_like(ys), ys) == 1)
    for t in basic_tnorms():
        assert build_tn(t, n)(1.0, 0.0) == 0


def test_max_min_std_is_kleene_dienes_on_grid():
    a = oracle.grid(100)
    x = np.array([u for u in a for _ in a], dtype=object)
    y = np.array([v for _ in a for v in a], dtype=object)
    got = build_snt(S_MAX, STD, T_MIN)(x, y)
    assert all(g == max(1 - u, v) for g, u, v in zip(got, x, y))


@pytest.mark.parametrize("sname", list(oracle.TCONORMS))
@pytest.mark.parametrize("tname", list(oracle.TNORMS))
def test_snt_matches_oracle(sname, tname):
    from sntlogic import parse_expr, build

    imp = build(parse_expr(f"snt({sname},sugeno:1.0,{tname})"))
    ref = oracle.snt(oracle.TCONORMS[sname], oracle.n_sugeno(Fraction(1)), oracle.TNORMS[tname])
    a = oracle.grid(10)
    x = np.array([u for u in a for _ in a], dtype=object)
    y = np.array([v for _ in a for v in a], dtype=object)
    assert list(imp(x, y)) == [ref(u, v) for u, v in zip(x, y)]


def test_natural_negation():
    assert natural_negation(build_snt(S_MAX, STD, T_MIN))(0.3) == pytest.approx(0.7)
    assert natural_negation(build_snt(S_PROB, STD, T_PROD))(0.5) == 0.75
    for s in basic_tconorms():
        assert natural_negation(build_snt(s, negation_alpha_lower(0.4), T_PROD))(0.0) == 1


def test_promote_negation():
    n = promote_negation(natural_negation(build_snt(S_PROB, STD, T_PROD)), "natP")
    assert n(0.5) == 0.75 and not n.strong
    with pytest.raises(ValueError):
        promote_negation(lambda x: x, "identity")


def test_closed_forms():
    assert closed_crisp_lower(0.3)(0.9, 0.5) == 1
    assert closed_crisp_lower(0.3)(0.9, 0.1) == 0
    assert closed_crisp_upper(0.3)(0.9, 0.3) == 1
    assert closed_crisp_upper(0.3)(0.9, 0.2) == 0
    with pytest.raises(ValueError):
        closed_crisp_lower(1.0)
    with pytest.raises(ValueError):
        closed_crisp_upper(0.0)


def test_closed_forms_are_implications():
    for imp in (closed_crisp_lower(0.0), closed_crisp_lower(0.5), closed_crisp_upper(1.0)):
        assert all(not r.falsified for r in check_axioms(imp))


def test_exact_mode_agrees_with_float(exact_coarse):
    imp = build_snt(S_PROB, STD, T_PROD)
    (x, y) = exact_coarse.binary()
    exact = imp(x, y)
    approx = imp(x.astype(float), y.astype(float))
    assert isinstance(exact[3], Fraction)
    assert np.allclose(exact.astype(float), approx, atol=1e-12)
