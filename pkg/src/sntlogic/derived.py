"""T-norms and t-conorms obtained back from an (S,N,T)-implication.

Given ``I = snt(S, N, T)`` and a negation ``N'``:

* ``derive_tconorm``       -- ``I(N'(x), y)``
* ``derive_tnorm``         -- ``N'(I(x, N'(y)))``
* ``derive_tnorm_tilde``   -- ``1 - I(N'(1 - x), 1 - y)``
* ``derive_tconorm_tilde`` -- ``1 - N'(I(1 - x, N'(1 - y)))``

The tilde forms are the standard-negation duals of the other two.  The outer
``N'`` in the t-conorm is needed: ``1 - I(1 - x, N'(1 - y))`` alone reduces
to ``1 - max(x, y)`` for the max/min case, which is not a t-conorm.

The functions are always returned.  For ``S = max``, ``T = min`` and
``N = N'`` strong they are genuine t-conorms / t-norms; otherwise only the
boundary and monotonicity items are guaranteed, and :meth:`DerivedConnective.reports`
tells which axioms fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from ._arith import lift
from .connectives import Negation, TConorm, TNorm
from .implications import Implication
from .sampling import SampleSet

__all__ = [
    "DerivedConnective",
    "derive_tconorm",
    "derive_tnorm",
    "derive_tnorm_tilde",
    "derive_tconorm_tilde",
]

_KINDS = {
    "S_from_impl": "tconorm",
    "T_from_impl": "tnorm",
    "T_tilde": "tnorm",
    "S_tilde": "tconorm",
}


@dataclass(frozen=True)
class DerivedConnective:
    name: str
    func: Callable = field(repr=False, compare=False)
    construction: str = "S_from_impl"
    source: Optional[Implication] = None
    aux: Optional[Negation] = None

    @property
    def kind(self) -> str:
        return _KINDS[self.construction]

    @property
    def exact(self) -> bool:
        return bool(self.source is not None and self.source.exact and self.aux is not None and self.aux.exact)

    def __call__(self, x, y):
        return lift(self.func, x, y)

    def reports(self, samples: Optional[SampleSet] = None, tol: Optional[float] = None):
        """Full T1-T8 or S1-S8 axiom reports."""
        from .properties import check_axioms

        return check_axioms(self, samples, tol)

    def promote(self, samples: Optional[SampleSet] = None, tol: Optional[float] = None):
        """Return a :class:`TNorm` / :class:`TConorm` once every axiom passes.

        Only the idempotent flag can be set, and only if it checks out with
        zero tolerance; continuity and the rest stay false.
        """
        from .properties import _abs, _float, prepare

        bad = [r.property_id for r in self.reports(samples, tol) if r.falsified]
        if bad:
            raise ValueError(f"{self.name} is not a {self.kind}: fails {', '.join(bad)}")
        (x,) = prepare(samples, self).unary()
        idempotent = not (_float(_abs(self.func(x, x) - x)) > 0).any()
        cls = TNorm if self.kind == "tnorm" else TConorm
        return cls(self.name, self.func, self.name, idempotent=bool(idempotent), exact=self.exact)


def _require_snt(imp: Implication) -> None:
    if imp.recipe != "snt":
        raise ValueError(f"{imp.name} is not an (S,N,T)-implication (recipe {imp.recipe!r})")


def derive_tconorm(imp: Implication, n: Negation) -> DerivedConnective:
    _require_snt(imp)
    I, N = imp.func, n.func

    def func(x, y):
        return I(N(x), y)

    return DerivedConnective(f"deriveS({imp.name},{n.name})", func, "S_from_impl", imp, n)


def derive_tnorm(imp: Implication, n: Negation) -> DerivedConnective:
    _require_snt(imp)
    I, N = imp.func, n.func

    def func(x, y):
        return N(I(x, N(y)))

    return DerivedConnective(f"deriveT({imp.name},{n.name})", func, "T_from_impl", imp, n)


def derive_tnorm_tilde(imp: Implication, n: Negation) -> DerivedConnective:
    _require_snt(imp)
    I, N = imp.func, n.func

    def func(x, y):
        return 1 - I(N(1 - x), 1 - y)

    return DerivedConnective(f"deriveTt({imp.name},{n.name})", func, "T_tilde", imp, n)


def derive_tconorm_tilde(imp: Implication, n: Negation) -> DerivedConnective:
    _require_snt(imp)
    I, N = imp.func, n.func

    def func(x, y):
        return 1 - N(I(1 - x, N(1 - y)))

    return DerivedConnective(f"deriveSt({imp.name},{n.name})", func, "S_tilde", imp, n)
