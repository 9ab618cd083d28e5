"""Theorem suites: hypotheses are checked first, then the conclusions.

Each suite returns a list of :class:`PropertyReport` whose ``role`` is
``"hypothesis"`` or ``"conclusion"``.  A conclusion carries ``expected``
when the result predicts its verdict on the supplied instance:

* unconditional items, or conditional items whose hypotheses all pass,
  expect ``no_counterexample``;
* for biconditionals the expectation follows the other side, so a failing
  hypothesis predicts a falsified conclusion;
* otherwise ``expected`` is ``None`` and the report is informational.

Metadata-only hypotheses (positivity, strictness of a t-conorm, strictness
of the negation in a De Morgan triple) trust the declared flag and say so in
the note.  Suites only test the instance they are given.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional, Union

import numpy as np

from .connectives import Negation, TConorm, TNorm
from .derived import derive_tconorm, derive_tconorm_tilde, derive_tnorm, derive_tnorm_tilde
from .implications import (
    Implication,
    build_sn,
    build_snt,
    build_tn,
    closed_crisp_lower,
    closed_crisp_upper,
)
from .properties import (
    FALSIFIED,
    NO_COUNTEREXAMPLE,
    PropertyReport,
    _abs,
    _binary,
    _scan,
    check_axioms,
    check_duality,
    check_lc,
    check_negation,
    check_pointwise_equal,
    check_property,
    prepare,
    resolve_tol,
)
from .sampling import SampleSet

__all__ = ["SUITES", "run_theorem_suite", "suite_ok", "resolve_inputs", "Inputs"]


@dataclass(frozen=True)
class Inputs:
    S: Optional[TConorm] = None
    N: Optional[Negation] = None
    T: Optional[TNorm] = None
    N2: Optional[Negation] = None

    def need(self, *roles: str) -> tuple:
        missing = [r for r in roles if getattr(self, r) is None]
        if missing:
            names = {"S": "t-conorm", "N": "negation", "T": "t-norm", "N2": "second negation"}
            raise ValueError("missing input: " + ", ".join(names[m] for m in missing))
        return tuple(getattr(self, r) for r in roles)


InputSpec = Union[Inputs, Mapping[str, object], Iterable[object]]


def resolve_inputs(inputs: InputSpec) -> Inputs:
    """Accept an :class:`Inputs`, a mapping keyed ``S``/``N``/``T``/``N'``, or
    an iterable of connectives classified by type.

    In an iterable the first negation is ``N`` and a second one ``N'``; an
    (S,N,T)-implication fills ``S``, ``N`` and ``T``.
    """
    if isinstance(inputs, Inputs):
        return inputs
    if isinstance(inputs, Mapping):
        alias = {"S": "S", "N": "N", "T": "T", "N'": "N2", "N2": "N2", "Nprime": "N2"}
        kw = {}
        for key, value in inputs.items():
            if key not in alias:
                raise ValueError(f"unknown input role {key!r}")
            kw[alias[key]] = value
        return Inputs(**kw)
    slots: dict[str, object] = {}
    negs: list[Negation] = []
    for obj in inputs:
        if isinstance(obj, Implication):
            if obj.recipe != "snt":
                raise ValueError(f"{obj.name}: only (S,N,T)-implications can stand for a triple")
            slots.setdefault("S", obj.tconorm)
            slots.setdefault("T", obj.tnorm)
            negs.insert(0, obj.negation)
        elif isinstance(obj, TConorm):
            _set_once(slots, "S", obj)
        elif isinstance(obj, TNorm):
            _set_once(slots, "T", obj)
        elif isinstance(obj, Negation):
            negs.append(obj)
        else:
            raise TypeError(f"cannot use {obj!r} as a suite input")
    if len(negs) > 2:
        raise ValueError("at most two negations (N and N') may be supplied")
    if negs:
        slots["N"] = negs[0]
    if len(negs) == 2:
        slots["N2"] = negs[1]
    return Inputs(**slots)


def _set_once(slots: dict, key: str, obj) -> None:
    if key in slots:
        raise ValueError(f"two inputs given for role {key}")
    slots[key] = obj


# --- report helpers -------------------------------------------------------


def _hyp(r: PropertyReport, note: str = "") -> PropertyReport:
    return r.with_role("hypothesis", None, note)


def _concl(r: PropertyReport, expected: Optional[str], note: str = "") -> PropertyReport:
    return r.with_role("conclusion", expected, note)


def _flag(pid: str, value: bool, subject: str) -> PropertyReport:
    verdict = NO_COUNTEREXAMPLE if value else FALSIFIED
    note = "declared flag, trusted" if value else "flag not declared"
    return PropertyReport(pid, verdict, None, 0.0, 0, 0.0, subject, "hypothesis", None, note)


def _ok(*hyps: PropertyReport) -> bool:
    return all(not h.falsified for h in hyps)


def _expect(ok: bool) -> Optional[str]:
    return NO_COUNTEREXAMPLE if ok else None


_UNMET = "hypotheses not met; not predicted"


def _conclusions(reports: Iterable[PropertyReport], ok: bool) -> list[PropertyReport]:
    return [_concl(r, _expect(ok), "" if ok else _UNMET) for r in reports]


def _relation(pid: str, residual: Callable, space, samples, tol, subject, *objs) -> PropertyReport:
    samples = prepare(samples, *objs)
    tol = resolve_tol(tol, samples, *objs)
    return _scan(pid, residual, space(samples), tol, subject)


def _is_max(s: TConorm, samples, tol) -> PropertyReport:
    return check_pointwise_equal(s, np.maximum, samples, 2, tol, "S_IS_MAX", s.name)


def _is_min(t: TNorm, samples, tol) -> PropertyReport:
    return check_pointwise_equal(t, np.minimum, samples, 2, tol, "T_IS_MIN", t.name)


def _same_negation(n: Negation, n2: Negation, samples, tol) -> PropertyReport:
    samples = prepare(samples, n, n2)
    return check_pointwise_equal(n, n2, samples, 1, tol, "N_EQ_NPRIME", f"{n.name} vs {n2.name}")


# --- suites ---------------------------------------------------------------


def _sn_basics(inp: Inputs, samples, tol):
    """(S,N)-implications: fuzzy implication, NP, EP, natural negation N,
    R-CP(N); CP(N) when N is strong."""
    s, n = inp.need("S", "N")
    imp = build_sn(s, n)
    strong = _hyp(check_negation("N5", n, samples, tol))
    out = [strong]
    out += _conclusions(check_axioms(imp, samples, tol), True)
    for pid in ("NP", "EP"):
        out.append(_concl(check_property(pid, imp, None, samples, tol), NO_COUNTEREXAMPLE))
    for pid in ("NATNEG", "RCP"):
        out.append(_concl(check_property(pid, imp, n, samples, tol), NO_COUNTEREXAMPLE))
    out += _conclusions([check_property("CP", imp, n, samples, tol)], _ok(strong))
    return out


def _t_recovery(inp: Inputs, samples, tol):
    """T(x, y) = N(I_TN(x, N(y))) for strong N."""
    t, n = inp.need("T", "N")
    strong = _hyp(check_negation("N5", n, samples, tol))
    I, N, T = build_tn(t, n).func, n.func, t.func
    rep = _relation(
        "PROP24", lambda x, y: _abs(T(x, y) - N(I(x, N(y)))), _binary, samples, tol,
        f"({t.name},{n.name})", t, n,
    )
    return [strong] + _conclusions([rep], _ok(strong))


def _snt_is_implication(inp: Inputs, samples, tol):
    """Every (S,N,T)-implication satisfies I1-I9."""
    s, n, t = inp.need("S", "N", "T")
    return _conclusions(check_axioms(build_snt(s, n, t), samples, tol), True)


def _snt_basic_properties(inp: Inputs, samples, tol):
    """NP iff N strong; CB, SIB for strong N; natural negation N when S is
    max or N crisp; IP and LOP for crisp N."""
    s, n, t = inp.need("S", "N", "T")
    imp = build_snt(s, n, t)
    strong = _hyp(check_negation("N5", n, samples, tol))
    crisp = _hyp(check_negation("N7", n, samples, tol))
    is_max = _hyp(_is_max(s, samples, tol))
    out = [strong, crisp, is_max]
    np_rep = check_property("NP", imp, None, samples, tol)
    out.append(_concl(np_rep, strong.verdict, "holds iff N5 holds"))
    out += _conclusions(
        [check_property(pid, imp, None, samples, tol) for pid in ("CB", "SIB")], _ok(strong)
    )
    natneg_ok = not is_max.falsified or not crisp.falsified
    out += _conclusions([check_property("NATNEG", imp, n, samples, tol)], natneg_ok)
    out += _conclusions(
        [check_property(pid, imp, None, samples, tol) for pid in ("IP", "LOP")], _ok(crisp)
    )
    return out


def _snt_crisp(inp: Inputs, samples, tol):
    """Crisp N: EP, IP, LOP hold; NP, ROP and OP fail."""
    s, n, t = inp.need("S", "N", "T")
    imp = build_snt(s, n, t)
    crisp = _hyp(check_negation("N7", n, samples, tol))
    ok = _ok(crisp)
    out = [crisp]
    for pid in ("EP", "IP", "LOP"):
        r = check_property(pid, imp, None, samples, tol)
        out.append(_concl(r, _expect(ok), "" if ok else _UNMET))
    for pid in ("NP", "ROP", "OP"):
        r = check_property(pid, imp, None, samples, tol)
        out.append(_concl(r, FALSIFIED if ok else None, "" if ok else _UNMET))
    return out


def _snt_crisp_closed_form(inp: Inputs, samples, tol):
    """With N = N_alpha (resp. N^alpha) the implication is the two-valued
    ``x <= alpha or y > alpha`` (resp. ``x < alpha or y >= alpha``)."""
    s, n, t = inp.need("S", "N", "T")
    if n.family not in ("alpha_lower", "alpha_upper"):
        raise ValueError(f"{n.name}: closed forms are known only for the two threshold families")
    imp = build_snt(s, n, t)
    closed = closed_crisp_lower(n.alpha) if n.family == "alpha_lower" else closed_crisp_upper(n.alpha)
    crisp = _hyp(check_negation("N7", n, samples, tol))
    samples = prepare(samples, imp, closed)
    rep = check_pointwise_equal(imp, closed, samples, 2, 0.0 if tol is None else tol,
                                "CLOSED_FORM", f"{imp.name} vs {closed.name}")
    return [crisp] + _conclusions([rep], _ok(crisp))


def _snt_relations(inp: Inputs, samples, tol):
    """I_SNT >= I_TN; composition through I_SN and I_TN for strong N and for
    De Morgan triples."""
    s, n, t = inp.need("S", "N", "T")
    snt, sn, tn = build_snt(s, n, t).func, build_sn(s, n).func, build_tn(t, n).func
    subj = f"({s.name},{n.name},{t.name})"
    objs = (s, n, t)
    strong = _hyp(check_negation("N5", n, samples, tol))
    strict = _flag("N_STRICT", n.strict, n.name)
    demorgan = _hyp(check_duality(t, s, n, samples, tol)[2])
    out = [strong, strict, demorgan]
    dom = _relation("PROP33i", lambda x, y: tn(x, y) - snt(x, y), _binary, samples, tol, subj, *objs)
    out.append(_concl(dom, NO_COUNTEREXAMPLE))
    ii = _relation("PROP33ii", lambda x, y: _abs(snt(x, y) - sn(x, tn(x, y))), _binary, samples, tol, subj, *objs)
    out += _conclusions([ii], _ok(strong))
    a = _relation("PROP33iii_a", lambda x, y: _abs(snt(x, y) - sn(x, sn(x, y))), _binary, samples, tol, subj, *objs)
    b = _relation("PROP33iii_b", lambda x, y: _abs(snt(x, y) - tn(x, tn(x, y))), _binary, samples, tol, subj, *objs)
    out += _conclusions([a, b], _ok(strict, demorgan))
    return out


def _ip_iff_lc(strict_conorm: bool):
    def suite(inp: Inputs, samples, tol):
        t, s, n = inp.need("T", "S", "N")
        imp = build_snt(s, n, t)
        if strict_conorm:
            s_hyp = _flag("S_STRICT", s.strict, s.name)
        else:
            s_hyp = _flag("S_POSITIVE", s.positive, s.name)
        non_filling = _hyp(check_negation("N6", n, samples, tol))
        lc = _hyp(check_lc(t, n, samples, tol))
        ip = check_property("IP", imp, None, samples, tol)
        if _ok(s_hyp, non_filling):
            concl = _concl(ip, lc.verdict, "holds iff LC holds")
        else:
            concl = _concl(ip, None, _UNMET)
        return [s_hyp, non_filling, lc, concl]

    suite.__doc__ = (
        "IP iff (T,N) satisfies LC, for non-filling N and a "
        + ("strict" if strict_conorm else "positive") + " t-conorm."
    )
    return suite


def _ep_from_duality(inp: Inputs, samples, tol):
    """EP when N is strong and T is N-dual to S."""
    s, n, t = inp.need("S", "N", "T")
    strong = _hyp(check_negation("N5", n, samples, tol))
    dual = _hyp(check_duality(t, s, n, samples, tol)[0])
    ep = check_property("EP", build_snt(s, n, t), None, samples, tol)
    return [strong, dual] + _conclusions([ep], _ok(strong, dual))


def _shift_identity(inp: Inputs, samples, tol):
    """I(N(x), y) = S(S(x, y), x) = S(S(x, x), y) for strong N with S
    N-dual to T."""
    s, n, t = inp.need("S", "N", "T")
    strong = _hyp(check_negation("N5", n, samples, tol))
    dual = _hyp(check_duality(t, s, n, samples, tol)[1])
    I, N, S = build_snt(s, n, t).func, n.func, s.func
    subj = f"({s.name},{n.name},{t.name})"
    a = _relation("LEMMA31_a", lambda x, y: _abs(I(N(x), y) - S(S(x, y), x)), _binary, samples, tol, subj, s, n, t)
    b = _relation("LEMMA31_b", lambda x, y: _abs(I(N(x), y) - S(S(x, x), y)), _binary, samples, tol, subj, s, n, t)
    return [strong, dual] + _conclusions([a, b], _ok(strong, dual))


def _max_min_hyps(inp: Inputs, samples, tol, with_prime: bool) -> list[PropertyReport]:
    s, n, t = inp.need("S", "N", "T")
    hyps = [
        _hyp(_is_max(s, samples, tol)),
        _hyp(_is_min(t, samples, tol)),
        _hyp(check_negation("N5", n, samples, tol)),
    ]
    if with_prime:
        hyps.append(_hyp(_same_negation(n, inp.N2 or n, samples, tol)))
    return hyps


def _lcp_max_min(inp: Inputs, samples, tol):
    """L-CP(N) for S = max, T = min and strong N."""
    s, n, t = inp.need("S", "N", "T")
    hyps = _max_min_hyps(inp, samples, tol, with_prime=False)
    lcp = check_property("LCP", build_snt(s, n, t), n, samples, tol)
    return hyps + _conclusions([lcp], _ok(*hyps))


_DERIVERS = {
    "S": derive_tconorm,
    "T": derive_tnorm,
    "Tt": derive_tnorm_tilde,
    "St": derive_tconorm_tilde,
}


def _derived_suite(which: str, unconditional: tuple[str, ...], conditional: tuple[str, ...]):
    def suite(inp: Inputs, samples, tol):
        s, n, t = inp.need("S", "N", "T")
        n2 = inp.N2 or n
        d = _DERIVERS[which](build_snt(s, n, t), n2)
        hyps = _max_min_hyps(inp, samples, tol, with_prime=True)
        out = list(hyps)
        if unconditional:
            out += _conclusions(check_axioms(d, samples, tol, ids=unconditional), True)
        out += _conclusions(check_axioms(d, samples, tol, ids=conditional), _ok(*hyps))
        return out

    suite.__doc__ = (
        f"Derived connective ({which}): {', '.join(unconditional) or 'nothing'} unconditionally; "
        f"{', '.join(conditional)} when S = max, T = min and N = N' is strong."
    )
    return suite


SUITES: dict[str, Callable] = {
    "Prop2.2": _sn_basics,
    "Prop2.4": _t_recovery,
    "Prop3.1": _snt_is_implication,
    "Prop3.2": _snt_basic_properties,
    "CrispProp": _snt_crisp,
    "CrispClosedForm": _snt_crisp_closed_form,
    "Prop3.3": _snt_relations,
    "Thm3.1": _ip_iff_lc(strict_conorm=False),
    "Cor3.1": _ip_iff_lc(strict_conorm=True),
    "Prop3.4": _ep_from_duality,
    "Lemma3.1": _shift_identity,
    "Prop3.5": _lcp_max_min,
    "Thm3.2": _derived_suite("S", ("S5", "S3"), ("S1", "S4", "S2")),
    "Cor3.2": _derived_suite("S", (), ("S1", "S2", "S3", "S4")),
    "Cor3.3": _derived_suite("Tt", (), ("T1", "T2", "T3", "T4")),
    "Thm3.3": _derived_suite("T", ("T5", "T3"), ("T1", "T4", "T2")),
    "Cor3.4": _derived_suite("T", (), ("T1", "T2", "T3", "T4")),
    "Cor3.5": _derived_suite("St", (), ("S1", "S2", "S3", "S4")),
}

_LOOKUP = {k.lower(): k for k in SUITES}


def run_theorem_suite(
    suite_id: str,
    inputs: InputSpec,
    samples: Optional[SampleSet] = None,
    tol: Optional[float] = None,
) -> list[PropertyReport]:
    key = _LOOKUP.get(str(suite_id).lower().replace(" ", ""))
    if key is None:
        raise KeyError(f"unknown suite {suite_id!r}; known: {', '.join(SUITES)}")
    return SUITES[key](resolve_inputs(inputs), samples, tol)


def suite_ok(reports: Iterable[PropertyReport]) -> bool:
    """True when every predicted verdict was observed."""
    return all(r.agrees for r in reports)
