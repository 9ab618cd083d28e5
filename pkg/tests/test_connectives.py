from fractions import Fraction

import numpy as np
import pytest

import oracle
from sntlogic import (
    S_DRASTIC,
    S_LUK,
    S_MAX,
    S_PROB,
    T_DRASTIC,
    T_LUK,
    T_MIN,
    T_PROD,
    SampleSet,
    basic_tconorms,
    basic_tnorms,
    check_axioms,
    check_flags,
    check_pointwise_equal,
    dual_tconorm_of,
    dual_tnorm_of,
    negation_alpha_lower,
    negation_alpha_upper,
    negation_standard,
    negation_sugeno,
)

PAIRS_T = [(T_MIN, oracle.t_min), (T_PROD, oracle.t_prod), (T_LUK, oracle.t_luk), (T_DRASTIC, oracle.t_drastic)]
PAIRS_S = [(S_MAX, oracle.s_max), (S_PROB, oracle.s_prob), (S_LUK, oracle.s_luk), (S_DRASTIC, oracle.s_drastic)]


def test_examples():
    assert T_LUK(0.7, 0.5) == pytest.approx(0.2)
    assert T_DRASTIC(0.9, 0.9) == 0
    assert S_LUK(0.7, 0.5) == 1.0
    assert S_DRASTIC(0.1, 0.2) == 1.0
    assert negation_alpha_lower(0.3)(0.3) == 1
    assert negation_alpha_upper(0.3)(0.3) == 0
    assert negation_sugeno(0)(0.25) == 0.75


def test_boundaries_on_samples():
    (x,) = SampleSet().unary()
    assert np.array_equal(T_MIN(x, np.ones_like(x)), x)
    assert np.array_equal(S_PROB(x, np.zeros_like(x)), x)


def test_scalar_in_scalar_out():
    assert isinstance(T_PROD(0.5, 0.5), float)
    assert T_PROD(np.array([0.5]), 0.5).shape == (1,)


@pytest.mark.parametrize("conn,ref", PAIRS_T + PAIRS_S, ids=lambda v: getattr(v, "name", ""))
def test_matches_oracle_exactly(conn, ref):
    g = oracle.grid(20)
    xs = np.array([a for a in g for _ in g], dtype=object)
    ys = np.array([b for _ in g for b in g], dtype=object)
    got = conn(xs, ys)
    want = [ref(a, b) for a, b in zip(xs, ys)]
    assert list(got) == want


@pytest.mark.parametrize("conn", basic_tnorms() + basic_tconorms(), ids=lambda c: c.kind + ":" + c.name)
def test_basic_families_are_connectives(conn):
    reports = check_axioms(conn)
    assert all(not r.falsified for r in reports), [r.property_id for r in reports if r.falsified]
    assert len(reports) == 8


@pytest.mark.parametrize("conn", basic_tnorms() + basic_tconorms(), ids=lambda c: c.kind + ":" + c.name)
def test_declared_flags_hold(conn):
    assert all(not r.falsified for r in check_flags(conn))


@pytest.mark.parametrize(
    "n",
    [negation_standard(), negation_alpha_lower(0.0), negation_alpha_lower(0.3),
     negation_alpha_upper(0.7), negation_alpha_upper(1.0), negation_sugeno(2.0), negation_sugeno(-0.5)],
    ids=lambda n: n.name,
)
def test_negations_axioms_and_flags(n):
    assert all(not r.falsified for r in check_axioms(n))
    assert all(not r.falsified for r in check_flags(n))


def test_undeclared_flags_really_fail():
    # the flags are not just conservative: these are the counterexamples
    assert T_DRASTIC(0.5, 0.5) == 0
    assert S_DRASTIC(0.5, 0.5) == 1
    assert negation_alpha_upper(0.7)(0.3) == 1  # N^alpha is filling


def test_sugeno_strong():
    n = negation_sugeno(3.0)
    assert n.strong and n.strict and not n.crisp
    assert n(n(0.4)) == pytest.approx(0.4)


@pytest.mark.parametrize("bad", [-0.1, 1.0, 2.0])
def test_alpha_lower_range(bad):
    with pytest.raises(ValueError):
        negation_alpha_lower(bad)


@pytest.mark.parametrize("bad", [0.0, 1.5])
def test_alpha_upper_range(bad):
    with pytest.raises(ValueError):
        negation_alpha_upper(bad)


def test_sugeno_range():
    with pytest.raises(ValueError):
        negation_sugeno(-1.0)


def test_crisp_negations_exact_in_rationals():
    n = negation_alpha_lower(0.25)
    out = n(np.array([Fraction(1, 4), Fraction(1, 2)], dtype=object))
    assert list(out) == [1, 0]
    assert not isinstance(out[0], float)


def test_duals():
    std = negation_standard()
    assert not check_pointwise_equal(dual_tconorm_of(T_MIN, std), S_MAX).falsified
    assert not check_pointwise_equal(dual_tconorm_of(T_PROD, std), S_PROB).falsified
    assert not check_pointwise_equal(dual_tnorm_of(S_LUK, std), T_LUK).falsified


def test_duals_exact_grid():
    exact = SampleSet(grid_step=0.01, random_count=0, exact=True)
    std = negation_standard()
    r = check_pointwise_equal(dual_tnorm_of(S_LUK, std), T_LUK, exact, tol=0)
    assert not r.falsified and r.residual == 0


def test_dual_needs_strong_negation():
    with pytest.raises(ValueError):
        dual_tconorm_of(T_MIN, negation_alpha_lower(0.3))
