"""Named catalogue of connectives used by the expression grammar.

The catalogue is fixed; nothing is loaded at run time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import connectives as c
from .derived import derive_tconorm, derive_tconorm_tilde, derive_tnorm, derive_tnorm_tilde
from .implications import build_sn, build_snt, build_tn, closed_crisp_lower, closed_crisp_upper


@dataclass(frozen=True)
class Atom:
    """A leaf identifier, optionally taking one numeric parameter."""

    kind: str
    build: Callable
    param: Optional[str] = None  # human-readable range, None when parameterless
    doc: str = ""


@dataclass(frozen=True)
class Combinator:
    slots: tuple[str, ...]
    kind: str
    build: Callable
    doc: str = ""


ATOMS: dict[str, dict[str, Atom]] = {
    "tnorm": {
        "min": Atom("tnorm", lambda: c.T_MIN, doc="minimum"),
        "prod": Atom("tnorm", lambda: c.T_PROD, doc="product"),
        "luk": Atom("tnorm", lambda: c.T_LUK, doc="Łukasiewicz max(x+y-1, 0)"),
        "drastic": Atom("tnorm", lambda: c.T_DRASTIC, doc="drastic product"),
    },
    "tconorm": {
        "max": Atom("tconorm", lambda: c.S_MAX, doc="maximum"),
        "probsum": Atom("tconorm", lambda: c.S_PROB, doc="probabilistic sum x+y-xy"),
        "luk": Atom("tconorm", lambda: c.S_LUK, doc="Łukasiewicz min(x+y, 1)"),
        "drastic": Atom("tconorm", lambda: c.S_DRASTIC, doc="drastic sum"),
    },
    "negation": {
        "std": Atom("negation", c.negation_standard, doc="1 - x"),
        "nalpha": Atom("negation", c.negation_alpha_lower, "alpha in [0,1)", "1 if x <= alpha else 0"),
        "nupper": Atom("negation", c.negation_alpha_upper, "alpha in (0,1]", "1 if x < alpha else 0"),
        "sugeno": Atom("negation", c.negation_sugeno, "lambda > -1", "(1-x)/(1+lambda x)"),
    },
    "implication": {
        "crisplow": Atom("implication", closed_crisp_lower, "alpha in [0,1)", "1 if x <= alpha or y > alpha"),
        "crispup": Atom("implication", closed_crisp_upper, "alpha in (0,1]", "1 if x < alpha or y >= alpha"),
    },
}

COMBINATORS: dict[str, Combinator] = {
    "sn": Combinator(("tconorm", "negation"), "implication", build_sn, "S(N(x), y)"),
    "tn": Combinator(("tnorm", "negation"), "implication", build_tn, "N(T(x, N(y)))"),
    "snt": Combinator(("tconorm", "negation", "tnorm"), "implication", build_snt, "S(N(T(x, N(y))), N(x))"),
    "deriveS": Combinator(("snt", "negation"), "derived", derive_tconorm, "I(N'(x), y)"),
    "deriveT": Combinator(("snt", "negation"), "derived", derive_tnorm, "N'(I(x, N'(y)))"),
    "deriveTt": Combinator(("snt", "negation"), "derived", derive_tnorm_tilde, "1 - I(N'(1-x), 1-y)"),
    "deriveSt": Combinator(("snt", "negation"), "derived", derive_tconorm_tilde, "1 - N'(I(1-x, N'(1-y)))"),
}

KINDS = ("tnorm", "tconorm", "negation", "implication", "derived")


def kinds_of(name: str) -> list[str]:
    """Every kind an identifier can denote."""
    out = [k for k, table in ATOMS.items() if name in table]
    if name in COMBINATORS:
        out.append(COMBINATORS[name].kind)
    return out


def listing() -> str:
    lines = []
    titles = {"tnorm": "t-norms", "tconorm": "t-conorms", "negation": "negations", "implication": "implications"}
    for kind, table in ATOMS.items():
        lines.append(f"{titles[kind]}:")
        for name, atom in table.items():
            sig = f"{name}:<{atom.param}>" if atom.param else name
            lines.append(f"  {sig:<26} {atom.doc}")
    lines.append("combinators:")
    for name, comb in COMBINATORS.items():
        sig = f"{name}({','.join(comb.slots)})"
        lines.append(f"  {sig:<40} {comb.doc}")
    return "\n".join(lines)
