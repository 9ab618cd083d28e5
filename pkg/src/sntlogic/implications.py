"""Fuzzy implications built from t-norms, t-conorms and negations.

Three compositional classes are provided:

* ``build_sn``  -- ``S(N(x), y)``
* ``build_tn``  -- ``N(T(x, N(y)))``
* ``build_snt`` -- ``S(N(T(x, N(y))), N(x))``

plus the two-valued closed forms reached by the third class when the negation
is crisp.  Every implication keeps the connectives it was built from, so the
property checkers can tell which results apply to it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ._arith import lift
from .connectives import (
    Negation,
    TConorm,
    TNorm,
    _check_alpha,
)

__all__ = [
    "Implication",
    "build_sn",
    "build_tn",
    "build_snt",
    "natural_negation",
    "promote_negation",
    "closed_crisp_lower",
    "closed_crisp_upper",
]


@dataclass(frozen=True)
class Implication:
    """A binary function on the unit square tagged with its construction.

    ``recipe`` is one of ``"sn"``, ``"tn"``, ``"snt"``, ``"crisplow"``,
    ``"crispup"`` or ``"custom"``.
    """

    name: str
    func: Callable = field(repr=False, compare=False)
    recipe: str = "custom"
    tconorm: Optional[TConorm] = None
    negation: Optional[Negation] = None
    tnorm: Optional[TNorm] = None
    alpha: Optional[float] = None

    kind = "implication"

    def __call__(self, x, y):
        return lift(self.func, x, y)

    @property
    def exact(self) -> bool:
        parts = [p for p in (self.tconorm, self.negation, self.tnorm) if p is not None]
        if self.recipe in ("crisplow", "crispup"):
            return True
        return bool(parts) and all(p.exact for p in parts)


def build_sn(s: TConorm, n: Negation) -> Implication:
    sf, nf = s.func, n.func

    def func(x, y):
        return sf(nf(x), y)

    return Implication(f"sn({s.name},{n.name})", func, "sn", tconorm=s, negation=n)


def build_tn(t: TNorm, n: Negation) -> Implication:
    tf, nf = t.func, n.func

    def func(x, y):
        return nf(tf(x, nf(y)))

    return Implication(f"tn({t.name},{n.name})", func, "tn", negation=n, tnorm=t)


def build_snt(s: TConorm, n: Negation, t: TNorm) -> Implication:
    """The (S,N,T)-implication ``S(N(T(x, N(y))), N(x))``.

    Evaluated literally; no simplification is applied even when a closed
    form is known.
    """
    sf, nf, tf = s.func, n.func, t.func

    def func(x, y):
        return sf(nf(tf(x, nf(y))), nf(x))

    return Implication(
        f"snt({s.name},{n.name},{t.name})", func, "snt", tconorm=s, negation=n, tnorm=t
    )


def natural_negation(imp: Implication) -> Callable:
    """The induced negation ``x -> I(x, 0)`` as a plain function.

    It is not wrapped as a :class:`Negation`; use :func:`promote_negation`
    once it has been checked.
    """
    f = imp.func

    def n_i(x):
        return lift(lambda a: f(a, np.zeros_like(a)), x)

    n_i.__name__ = f"natneg[{imp.name}]"
    return n_i


def promote_negation(func: Callable, name: str, samples=None) -> Negation:
    """Wrap ``func`` as a :class:`Negation` after N1 and N2 pass on ``samples``.

    No classification flags are set on the result.
    """
    from .properties import check_function_axioms

    reports = check_function_axioms("negation", func, samples)
    bad = [r.property_id for r in reports if r.falsified]
    if bad:
        raise ValueError(f"{name!r} is not a fuzzy negation on the samples: fails {', '.join(bad)}")
    return Negation(name, lambda x: np.asarray(func(x)), name)


def closed_crisp_lower(alpha: float) -> Implication:
    """``1 if x <= alpha or y > alpha else 0``, for ``alpha`` in ``[0, 1)``."""
    alpha = _check_alpha(alpha, True, False)

    def func(x, y):
        return np.where((x <= alpha) | (y > alpha), 1, 0)

    return Implication(f"crisplow:{alpha!r}", func, "crisplow", alpha=alpha)


def closed_crisp_upper(alpha: float) -> Implication:
    """``1 if x < alpha or y >= alpha else 0``, for ``alpha`` in ``(0, 1]``."""
    alpha = _check_alpha(alpha, False, True)

    def func(x, y):
        return np.where((x < alpha) | (y >= alpha), 1, 0)

    return Implication(f"crispup:{alpha!r}", func, "crispup", alpha=alpha)
