"""T-norms, t-conorms and fuzzy negations.

Each connective is an immutable value wrapping a vectorised function together
with *declared* classification flags.  Flags are metadata: the property
checkers spot-check them on samples, but nothing here infers them.

The arithmetic of the basic connectives is arranged so that boundary
identities such as ``T(x, 1) == x`` and ``S(1, y) == 1`` hold bit-exactly in
floating point, not only up to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from ._arith import is_exact, lift

__all__ = [
    "TNorm",
    "TConorm",
    "Negation",
    "T_MIN",
    "T_PROD",
    "T_LUK",
    "T_DRASTIC",
    "S_MAX",
    "S_PROB",
    "S_LUK",
    "S_DRASTIC",
    "basic_tnorms",
    "basic_tconorms",
    "negation_standard",
    "negation_alpha_lower",
    "negation_alpha_upper",
    "negation_sugeno",
    "dual_tconorm_of",
    "dual_tnorm_of",
]


@dataclass(frozen=True)
class TNorm:
    """A binary conjunction on the unit square.

    ``name`` is the registry identifier (``"min"``, ``"prod"``...), ``label``
    the display name.  ``exact`` marks connectives built only from
    comparisons, whose identities are asserted without tolerance.
    """

    name: str
    func: Callable = field(repr=False, compare=False)
    label: str = ""
    continuous: bool = False
    idempotent: bool = False
    strict: bool = False
    positive: bool = False
    exact: bool = False

    kind = "tnorm"

    def __call__(self, x, y):
        return lift(self.func, x, y)


@dataclass(frozen=True)
class TConorm:
    """A binary disjunction on the unit square; see :class:`TNorm`."""

    name: str
    func: Callable = field(repr=False, compare=False)
    label: str = ""
    continuous: bool = False
    idempotent: bool = False
    strict: bool = False
    positive: bool = False
    exact: bool = False

    kind = "tconorm"

    def __call__(self, x, y):
        return lift(self.func, x, y)


@dataclass(frozen=True)
class Negation:
    """A fuzzy negation.

    ``family`` is one of ``standard``, ``alpha_lower``, ``alpha_upper``,
    ``sugeno`` or ``custom``; ``alpha`` / ``lam`` hold the family parameter.
    """

    name: str
    func: Callable = field(repr=False, compare=False)
    label: str = ""
    strict: bool = False
    strong: bool = False
    non_filling: bool = False
    crisp: bool = False
    family: str = "custom"
    alpha: Optional[float] = None
    lam: Optional[float] = None
    exact: bool = False

    kind = "negation"

    def __call__(self, x):
        return lift(self.func, x)


# --- basic t-norms --------------------------------------------------------


def _t_min(x, y):
    return np.minimum(x, y)


def _t_prod(x, y):
    return x * y


def _t_luk(x, y):
    # min - (1 - max) keeps T(x, 1) == x and T(1, y) == y exact
    lo, hi = np.minimum(x, y), np.maximum(x, y)
    return np.maximum(lo - (1 - hi), 0)


def _t_drastic(x, y):
    return np.where((x < 1) & (y < 1), 0, np.minimum(x, y))


T_MIN = TNorm("min", _t_min, "T_min", continuous=True, idempotent=True, positive=True, exact=True)
T_PROD = TNorm("prod", _t_prod, "T_P", continuous=True, strict=True, positive=True)
T_LUK = TNorm("luk", _t_luk, "T_L", continuous=True)
T_DRASTIC = TNorm("drastic", _t_drastic, "T_D", exact=True)


def basic_tnorms() -> list[TNorm]:
    """The four basic t-norms: minimum, product, Łukasiewicz, drastic."""
    return [T_MIN, T_PROD, T_LUK, T_DRASTIC]


# --- basic t-conorms ------------------------------------------------------


def _s_max(x, y):
    return np.maximum(x, y)


def _s_prob(x, y):
    # algebraically x + y - xy; this form makes S(x, 0) and S(1, y) exact
    lo, hi = np.minimum(x, y), np.maximum(x, y)
    return hi + lo * (1 - hi)


def _s_luk(x, y):
    return np.minimum(x + y, 1)


def _s_drastic(x, y):
    return np.where((x > 0) & (y > 0), 1, np.maximum(x, y))


S_MAX = TConorm("max", _s_max, "S_max", continuous=True, idempotent=True, positive=True, exact=True)
S_PROB = TConorm("probsum", _s_prob, "S_P", continuous=True, strict=True, positive=True)
S_LUK = TConorm("luk", _s_luk, "S_L", continuous=True)
S_DRASTIC = TConorm("drastic", _s_drastic, "S_D", exact=True)


def basic_tconorms() -> list[TConorm]:
    """The four basic t-conorms: maximum, probabilistic sum, Łukasiewicz, drastic sum."""
    return [S_MAX, S_PROB, S_LUK, S_DRASTIC]


# --- negations ------------------------------------------------------------


def _n_standard(x):
    return 1 - x


def negation_standard() -> Negation:
    return Negation(
        "std", _n_standard, "N_S",
        strict=True, strong=True, non_filling=True, family="standard",
    )


def _check_alpha(alpha, lo_closed: bool, hi_closed: bool) -> float:
    alpha = float(alpha)
    lo_ok = alpha >= 0 if lo_closed else alpha > 0
    hi_ok = alpha <= 1 if hi_closed else alpha < 1
    if not (lo_ok and hi_ok) or np.isnan(alpha):
        interval = f"{'[' if lo_closed else '('}0,1{']' if hi_closed else ')'}"
        raise ValueError(f"alpha={alpha!r} outside {interval}")
    return alpha


def negation_alpha_lower(alpha: float) -> Negation:
    """Crisp negation: 1 on ``[0, alpha]``, 0 above.  ``alpha`` in ``[0, 1)``.

    ``alpha == 0`` gives the least negation.
    """
    alpha = _check_alpha(alpha, True, False)

    def func(x):
        return np.where(x <= alpha, 1, 0)

    return Negation(
        f"nalpha:{alpha!r}", func, f"N_{alpha:g}",
        crisp=True, non_filling=(alpha == 0), family="alpha_lower", alpha=alpha, exact=True,
    )


def negation_alpha_upper(alpha: float) -> Negation:
    """Crisp negation: 1 on ``[0, alpha)``, 0 from ``alpha`` on.  ``alpha`` in ``(0, 1]``.

    ``alpha == 1`` gives the greatest negation.  Never non-filling: it is 1 on
    the whole of ``[0, alpha)``.
    """
    alpha = _check_alpha(alpha, False, True)

    def func(x):
        return np.where(x < alpha, 1, 0)

    return Negation(
        f"nupper:{alpha!r}", func, f"N^{alpha:g}",
        crisp=True, family="alpha_upper", alpha=alpha, exact=True,
    )


def negation_sugeno(lam: float) -> Negation:
    """Sugeno class ``(1 - x) / (1 + lam * x)`` for ``lam > -1``."""
    lam = float(lam)
    if not lam > -1 or not np.isfinite(lam):
        raise ValueError(f"lambda={lam!r} must be a finite value > -1")

    exact_lam = Fraction(lam)

    def func(x):
        k = exact_lam if is_exact(x) else lam
        return (1 - x) / (1 + k * x)

    return Negation(
        f"sugeno:{lam!r}", func, f"N_sugeno({lam:g})",
        strict=True, strong=True, non_filling=True, family="sugeno", lam=lam,
    )


# --- duality --------------------------------------------------------------


def _require_strong(n: Negation) -> None:
    if not n.strong:
        raise ValueError(f"negation {n.name!r} is not declared strong; duality needs an involution")


def dual_tconorm_of(t: TNorm, n: Optional[Negation] = None) -> TConorm:
    """The N-dual t-conorm ``S(x, y) = N(T(N(x), N(y)))``.

    With the standard negation this is ``1 - T(1 - x, 1 - y)``.
    """
    n = negation_standard() if n is None else n
    _require_strong(n)

    def func(x, y):
        return n.func(t.func(n.func(x), n.func(y)))

    return TConorm(
        f"dual({t.name},{n.name})", func, f"{t.label or t.name}^*",
        continuous=t.continuous, idempotent=t.idempotent, strict=t.strict,
        positive=t.positive, exact=t.exact and n.exact,
    )


def dual_tnorm_of(s: TConorm, n: Optional[Negation] = None) -> TNorm:
    """The N-dual t-norm ``T(x, y) = N(S(N(x), N(y)))``."""
    n = negation_standard() if n is None else n
    _require_strong(n)

    def func(x, y):
        return n.func(s.func(n.func(x), n.func(y)))

    return TNorm(
        f"dual({s.name},{n.name})", func, f"{s.label or s.name}^*",
        continuous=s.continuous, idempotent=s.idempotent, strict=s.strict,
        positive=s.positive, exact=s.exact and n.exact,
    )
