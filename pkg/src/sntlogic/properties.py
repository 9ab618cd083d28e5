"""Numerical falsification of connective axioms and implication properties.

Every check evaluates a *residual* on a finite sample space: a non-negative
number that exceeds the tolerance exactly where the statement is violated.
A report either says that no counterexample was found among the samples or
carries the witness with the largest residual (ties broken by the
lexicographically smallest point).  Passing is never a proof.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .connectives import Negation, TConorm, TNorm
from .implications import Implication
from .sampling import SampleSet, critical_points_for

__all__ = [
    "EPS",
    "NO_COUNTEREXAMPLE",
    "FALSIFIED",
    "PropertyReport",
    "IMPLICATION_PROPERTIES",
    "check_axioms",
    "check_flags",
    "check_property",
    "check_negation",
    "check_lc",
    "check_duality",
    "check_pointwise_equal",
    "check_function_axioms",
    "reports_to_json",
    "format_table",
]

EPS = 1e-9
NO_COUNTEREXAMPLE = "no_counterexample"
FALSIFIED = "falsified"


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of scanning one property.

    ``residual`` is the witness residual for a falsified property and the
    largest residual seen otherwise.  ``expected`` is set by theorem suites
    when a result predicts the verdict; ``role`` separates hypotheses from
    conclusions there.
    """

    property_id: str
    verdict: str
    witness: Optional[tuple[float, ...]]
    residual: float
    samples_checked: int
    tolerance: float
    subject: str = ""
    role: str = "property"
    expected: Optional[str] = None
    note: str = ""
    replay: Optional[Callable] = field(default=None, repr=False, compare=False)

    @property
    def falsified(self) -> bool:
        return self.verdict == FALSIFIED

    @property
    def agrees(self) -> bool:
        """Whether the verdict matches a prediction (vacuously true without one)."""
        return self.expected is None or self.verdict == self.expected

    def replay_residual(self, point: Optional[Sequence[float]] = None) -> float:
        """Re-evaluate the residual at ``point`` (default: the witness)."""
        if self.replay is None or (point is None and self.witness is None):
            raise ValueError(f"{self.property_id}: nothing to replay")
        return self.replay() if point is None else self.replay(*point)

    def with_role(self, role: str, expected: Optional[str] = None, note: str = "") -> "PropertyReport":
        from dataclasses import replace

        return replace(self, role=role, expected=expected, note=note or self.note)

    def to_dict(self) -> dict:
        return {
            "property_id": self.property_id,
            "verdict": self.verdict,
            "witness": None if self.witness is None else [_sig(v) for v in self.witness],
            "residual": _sig(self.residual),
            "samples_checked": self.samples_checked,
            "tolerance": self.tolerance,
            "subject": self.subject,
            "role": self.role,
            "expected": self.expected,
            "note": self.note,
        }


def _sig(v: float) -> float:
    return float(f"{float(v):.12g}")


# --- scanning -------------------------------------------------------------


def _float(a) -> np.ndarray:
    out = np.asarray(a).astype(float)
    return np.where(np.isnan(out), np.inf, out)


def _scan(pid: str, residual: Callable, coords: tuple, tol: float, subject: str = "") -> PropertyReport:
    n = len(coords[0])
    r = _float(np.broadcast_to(np.asarray(residual(*coords)), (n,)))
    raw = None

    def replay(*point):
        pts = raw if not point else point
        args = tuple(np.asarray([p], dtype=c.dtype) for p, c in zip(pts, coords))
        return float(_float(np.broadcast_to(np.asarray(residual(*args)), (1,)))[0])

    bad = r > tol
    if not bad.any():
        worst = float(r.max()) if n else 0.0
        return PropertyReport(pid, NO_COUNTEREXAMPLE, None, worst, n, tol, subject, replay=replay)
    worst = r[bad].max()
    idx = np.flatnonzero(r == worst)
    keys = [_float(c[idx]) for c in coords]
    pick = idx[np.lexsort(keys[::-1])[0]]
    raw = tuple(c[pick] for c in coords)
    witness = tuple(float(v) for v in raw)
    return PropertyReport(pid, FALSIFIED, witness, float(worst), n, tol, subject, replay=replay)


# --- sample spaces (coordinates in the order the statement names them) -----


def _at(*point):
    def space(s: SampleSet):
        return tuple(s.cast([p]) for p in point)

    return space


def _ends(s):
    return (s.cast([0.0, 1.0]),)


def _unary(s):
    return s.unary()


def _binary(s):
    return s.binary()


def _ternary(s):
    return s.ternary()


def _steps(s):
    return s.steps()


def _lines_first(s):
    lo, hi, f = s.line_steps()
    return lo, hi, f


def _lines_second(s):
    lo, hi, f = s.line_steps()
    return f, lo, hi


def _mono2(s):
    lo, hi, f = s.line_steps()
    return (
        np.concatenate([lo, f]),
        np.concatenate([f, lo]),
        np.concatenate([hi, f]),
        np.concatenate([f, hi]),
    )


def _zeros(x):
    return np.zeros_like(x)


def _ones(x):
    return np.ones_like(x)


def _abs(a):
    return np.abs(np.asarray(a))


# --- connective axioms ----------------------------------------------------
# each entry: id -> (space, residual(F, *coords))

TNORM_AXIOMS = {
    "T1": (_binary, lambda F, x, y: _abs(F(x, y) - F(y, x))),
    "T2": (_ternary, lambda F, x, y, z: _abs(F(x, F(y, z)) - F(F(x, y), z))),
    "T3": (_mono2, lambda F, x, y, z, w: F(x, y) - F(z, w)),
    "T4": (_unary, lambda F, x: _abs(F(x, _ones(x)) - x)),
    "T5": (_unary, lambda F, x: np.maximum(_abs(F(_zeros(x), x)), _abs(F(x, _zeros(x))))),
    "T6": (_unary, lambda F, x: _abs(F(_ones(x), x) - x)),
    "T7": (_binary, lambda F, x, y: F(x, y) - x),
    "T8": (_binary, lambda F, x, y: F(x, y) - y),
}

TCONORM_AXIOMS = {
    "S1": (_binary, lambda F, x, y: _abs(F(x, y) - F(y, x))),
    "S2": (_ternary, lambda F, x, y, z: _abs(F(x, F(y, z)) - F(F(x, y), z))),
    "S3": (_mono2, lambda F, x, y, z, w: F(x, y) - F(z, w)),
    "S4": (_unary, lambda F, x: _abs(F(x, _zeros(x)) - x)),
    "S5": (_unary, lambda F, x: np.maximum(_abs(F(_ones(x), x) - 1), _abs(F(x, _ones(x)) - 1))),
    "S6": (_unary, lambda F, x: _abs(F(_zeros(x), x) - x)),
    "S7": (_binary, lambda F, x, y: x - F(x, y)),
    "S8": (_binary, lambda F, x, y: y - F(x, y)),
}

NEGATION_AXIOMS = {
    "N1": (_ends, lambda F, x: _abs(F(x) - (1 - x))),
    "N2": (_steps, lambda F, x, y: F(y) - F(x)),
}

IMPLICATION_AXIOMS = {
    "I1": (_lines_first, lambda F, x, y, z: F(y, z) - F(x, z)),
    "I2": (_lines_second, lambda F, x, y, z: F(x, y) - F(x, z)),
    "I3": (_at(0.0, 0.0), lambda F, x, y: _abs(F(x, y) - 1)),
    "I4": (_at(1.0, 1.0), lambda F, x, y: _abs(F(x, y) - 1)),
    "I5": (_at(1.0, 0.0), lambda F, x, y: _abs(F(x, y))),
    "I6": (_unary, lambda F, y: _abs(F(_zeros(y), y) - 1)),
    "I7": (_unary, lambda F, x: _abs(F(x, _ones(x)) - 1)),
    "I8": (_binary, lambda F, x, y: F(x, _zeros(y)) - F(x, y)),
    "I9": (_binary, lambda F, x, y: F(_ones(x), y) - F(x, y)),
}

_AXIOMS_BY_KIND = {
    "tnorm": TNORM_AXIOMS,
    "tconorm": TCONORM_AXIOMS,
    "negation": NEGATION_AXIOMS,
    "implication": IMPLICATION_AXIOMS,
}


# --- implication properties -----------------------------------------------
# residual(I, N, tol, *coords); N is the raw negation function or None


def _np(I, N, tol, y):
    return _abs(I(_ones(y), y) - y)


def _ep(I, N, tol, x, y, z):
    return _abs(I(x, I(y, z)) - I(y, I(x, z)))


def _ip(I, N, tol, x):
    return _abs(I(x, x) - 1)


def _lop(I, N, tol, x, y):
    return np.where(x <= y, 1 - I(x, y), 0)


def _rop(I, N, tol, x, y):
    return np.where(I(x, y) >= 1 - tol, x - y, 0)


def _op(I, N, tol, x, y):
    return np.maximum(_float(_lop(I, N, tol, x, y)), _float(_rop(I, N, tol, x, y)))


def _cb(I, N, tol, x, y):
    return y - I(x, y)


def _sib(I, N, tol, x, y):
    return I(x, y) - I(x, I(x, y))


def _ib(I, N, tol, x, y):
    return _abs(I(x, I(x, y)) - I(x, y))


def _cp(I, N, tol, x, y):
    return _abs(I(x, y) - I(N(y), N(x)))


def _lcp(I, N, tol, x, y):
    return _abs(I(N(x), y) - I(N(y), x))


def _rcp(I, N, tol, x, y):
    return _abs(I(x, N(y)) - I(y, N(x)))


def _natneg(I, N, tol, x):
    return _abs(I(x, _zeros(x)) - N(x))


IMPLICATION_PROPERTIES = {
    "NP": (_unary, _np, False),
    "EP": (_ternary, _ep, False),
    "IP": (_unary, _ip, False),
    "LOP": (_binary, _lop, False),
    "ROP": (_binary, _rop, False),
    "OP": (_binary, _op, False),
    "CB": (_binary, _cb, False),
    "SIB": (_binary, _sib, False),
    "IB": (_binary, _ib, False),
    "CP": (_binary, _cp, True),
    "LCP": (_binary, _lcp, True),
    "RCP": (_binary, _rcp, True),
    "NATNEG": (_unary, _natneg, True),
}


# --- helpers --------------------------------------------------------------


def _critical(objs: Iterable) -> set[float]:
    pts: set[float] = set()
    for obj in objs:
        if obj is None:
            continue
        if isinstance(obj, Negation):
            if obj.crisp and obj.alpha is not None:
                pts.update(critical_points_for(obj.alpha))
        elif isinstance(obj, Implication):
            if obj.alpha is not None:
                pts.update(critical_points_for(obj.alpha))
            pts |= _critical([obj.tconorm, obj.negation, obj.tnorm])
        elif hasattr(obj, "source"):
            pts |= _critical([obj.source, getattr(obj, "aux", None)])
    return pts


def prepare(samples: Optional[SampleSet], *objs) -> SampleSet:
    """Default samples, extended with the critical points of ``objs``."""
    samples = SampleSet() if samples is None else samples
    return samples.with_critical(_critical(objs))


def resolve_tol(tol: Optional[float], samples: SampleSet, *objs) -> float:
    """Explicit ``tol`` wins; otherwise 0 for rational samples or exact connectives."""
    if tol is not None:
        return float(tol)
    if samples.exact:
        return 0.0
    if objs and all(getattr(o, "exact", False) for o in objs if o is not None):
        return 0.0
    return EPS


def _kind(c) -> str:
    kind = getattr(c, "kind", None)
    if kind not in _AXIOMS_BY_KIND:
        raise TypeError(f"cannot check axioms of {c!r}")
    return kind


# --- public checks --------------------------------------------------------


def check_function_axioms(
    kind: str,
    func: Callable,
    samples: Optional[SampleSet] = None,
    tol: Optional[float] = None,
    subject: str = "",
    ids: Optional[Sequence[str]] = None,
) -> list[PropertyReport]:
    """Axiom reports for a bare function interpreted as a connective of ``kind``."""
    samples = SampleSet() if samples is None else samples
    tol = EPS if tol is None else float(tol)
    table = _AXIOMS_BY_KIND[kind]
    out = []
    for pid in ids or table:
        space, res = table[pid]
        out.append(_scan(pid, lambda *c, _r=res: _r(func, *c), space(samples), tol, subject))
    return out


def check_axioms(
    c,
    samples: Optional[SampleSet] = None,
    tol: Optional[float] = None,
    ids: Optional[Sequence[str]] = None,
) -> list[PropertyReport]:
    """One report per axiom of ``c``'s kind (T1-T8, S1-S8, N1-N2 or I1-I9)."""
    samples = prepare(samples, c)
    tol = resolve_tol(tol, samples, c)
    return check_function_axioms(_kind(c), c.func, samples, tol, c.name, ids)


def check_flags(c, samples: Optional[SampleSet] = None, tol: Optional[float] = None) -> list[PropertyReport]:
    """Spot-check the declared classification flags of a connective.

    Continuity is metadata only and never checked.
    """
    samples = prepare(samples, c)
    tol = resolve_tol(tol, samples, c)
    if isinstance(c, Negation):
        declared = {"N3": c.strict, "N5": c.strong, "N6": c.non_filling, "N7": c.crisp}
        return [check_negation(pid, c, samples, tol) for pid, on in declared.items() if on]

    F = c.func
    is_t = isinstance(c, TNorm) or getattr(c, "kind", "") == "tnorm"
    checks: list[tuple[str, Callable, Callable]] = []
    if c.idempotent:
        checks.append(("IDEMPOTENT", _unary, lambda x: _abs(F(x, x) - x)))
    if c.positive:
        if is_t:
            res = lambda x, y: np.where((x > 0) & (y > 0) & (F(x, y) == 0), 1.0, 0.0)
        else:
            res = lambda x, y: np.where((x < 1) & (y < 1) & (F(x, y) == 1), 1.0, 0.0)
        checks.append(("POSITIVE", _binary, res))
    if c.strict:
        # x fixed, y < z consecutive
        if is_t:
            res = lambda x, y, z: np.where((x > 0) & (F(x, y) >= F(x, z)), 1.0, 0.0)
        else:
            res = lambda x, y, z: np.where((x < 1) & (F(x, y) >= F(x, z)), 1.0, 0.0)
        checks.append(("STRICT", _lines_second, res))
    return [_scan(pid, res, space(samples), tol, c.name) for pid, space, res in checks]


NEGATION_CLASSES = {
    "N3": (_steps, lambda F, tol, x, y: np.where(F(y) >= F(x), 1.0, 0.0)),
    "N5": (_unary, lambda F, tol, x: _abs(F(F(x)) - x)),
    "N6": (_unary, lambda F, tol, x: np.where(F(x) >= 1 - tol, x, 0)),
    "N7": (_unary, lambda F, tol, x: np.minimum(_float(_abs(F(x))), _float(_abs(F(x) - 1)))),
}


def check_negation(
    property_id: str, n: Negation, samples: Optional[SampleSet] = None, tol: Optional[float] = None
) -> PropertyReport:
    """Scan a negation class: N3 strictly decreasing, N5 involutive,
    N6 non-filling, N7 crisp."""
    samples = prepare(samples, n)
    tol = resolve_tol(tol, samples, n)
    space, res = NEGATION_CLASSES[property_id]
    F = n.func
    return _scan(property_id, lambda *c: res(F, tol, *c), space(samples), tol, n.name)


def check_property(
    property_id: str,
    imp: Implication,
    n: Optional[Negation] = None,
    samples: Optional[SampleSet] = None,
    tol: Optional[float] = None,
) -> PropertyReport:
    """Scan one implication property (NP, EP, IP, LOP, ROP, OP, CB, SIB, IB,
    CP, LCP, RCP, NATNEG, or an axiom I1-I9).

    The contrapositive properties and NATNEG need a negation ``n``.
    """
    pid = property_id.upper().replace("-", "")
    if pid in IMPLICATION_AXIOMS:
        return check_axioms(imp, samples, tol, ids=[pid])[0]
    if pid not in IMPLICATION_PROPERTIES:
        raise KeyError(f"unknown implication property {property_id!r}")
    space, res, needs_n = IMPLICATION_PROPERTIES[pid]
    if needs_n and n is None:
        raise ValueError(f"property {pid} requires a negation")
    samples = prepare(samples, imp, n)
    tol = resolve_tol(tol, samples, imp, n)
    I = imp.func
    N = None if n is None else n.func
    subject = imp.name if n is None else f"{imp.name} [{n.name}]"
    return _scan(pid, lambda *c: res(I, N, tol, *c), space(samples), tol, subject)


def check_lc(
    t: TNorm, n: Negation, samples: Optional[SampleSet] = None, tol: Optional[float] = None
) -> PropertyReport:
    """Law of contradiction ``T(N(x), x) = 0``."""
    samples = prepare(samples, t, n)
    tol = resolve_tol(tol, samples, t, n)
    T, N = t.func, n.func
    return _scan("LC", lambda x: _abs(T(N(x), x)), _unary(samples), tol, f"({t.name},{n.name})")


def check_duality(
    t: TNorm,
    s: TConorm,
    n: Negation,
    samples: Optional[SampleSet] = None,
    tol: Optional[float] = None,
) -> tuple[PropertyReport, PropertyReport, PropertyReport]:
    """``N(T(x,y)) = S(N(x),N(y))``, ``N(S(x,y)) = T(N(x),N(y))`` and both together.

    The combined DEMORGAN report notes when ``n`` is not declared strict, in
    which case the triple is not a De Morgan triple whatever the verdict.
    """
    samples = prepare(samples, t, s, n)
    tol = resolve_tol(tol, samples, t, s, n)
    T, S, N = t.func, s.func, n.func
    subject = f"({t.name},{s.name},{n.name})"

    def t_s(x, y):
        return _abs(N(T(x, y)) - S(N(x), N(y)))

    def s_t(x, y):
        return _abs(N(S(x, y)) - T(N(x), N(y)))

    coords = _binary(samples)
    r1 = _scan("NDUAL_T_S", t_s, coords, tol, subject)
    r2 = _scan("NDUAL_S_T", s_t, coords, tol, subject)
    r3 = _scan("DEMORGAN", lambda x, y: np.maximum(_float(t_s(x, y)), _float(s_t(x, y))), coords, tol, subject)
    if not n.strict:
        r3 = r3.with_role(r3.role, note=f"negation {n.name} not declared strict")
    return r1, r2, r3


def check_pointwise_equal(
    f: Callable,
    g: Callable,
    samples: Optional[SampleSet] = None,
    arity: int = 2,
    tol: Optional[float] = None,
    property_id: str = "EQUIV",
    subject: str = "",
) -> PropertyReport:
    """``|f - g|`` over the 1-D or 2-D samples."""
    samples = prepare(samples, f, g)
    tol = resolve_tol(tol, samples, f, g)
    space = _unary if arity == 1 else _binary
    ff = getattr(f, "func", f)
    gf = getattr(g, "func", g)
    return _scan(property_id, lambda *c: _abs(ff(*c) - gf(*c)), space(samples), tol, subject)


# --- serialisation --------------------------------------------------------


def reports_to_json(reports: Iterable[PropertyReport], indent: Optional[int] = 2) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=indent)


def _fmt(v: float) -> str:
    return f"{v:.4f}"


def format_table(reports: Sequence[PropertyReport]) -> str:
    """Aligned text table; numbers rounded to four decimals."""
    header = ("property", "verdict", "residual", "witness", "samples", "role", "expected", "subject")
    rows = [header]
    for r in reports:
        witness = "-" if r.witness is None else "(" + ", ".join(_fmt(v) for v in r.witness) + ")"
        rows.append((
            r.property_id,
            r.verdict,
            _fmt(r.residual),
            witness,
            str(r.samples_checked),
            r.role,
            r.expected or "-",
            r.subject + (f"  # {r.note}" if r.note else ""),
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(len(header) - 1)]
    lines = []
    for row in rows:
        cells = [c.ljust(w) for c, w in zip(row[:-1], widths)] + [row[-1]]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)
