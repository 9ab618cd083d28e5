"""Fuzzy connectives, (S,N,T)-implications and a falsification engine."""

from .connectives import *  # noqa: F401,F403
from .connectives import __all__ as _c
from .derived import *  # noqa: F401,F403
from .derived import __all__ as _d
from .grammar import build, parse_expr, Expr, ExprError
from .implications import *  # noqa: F401,F403
from .implications import __all__ as _i
from .properties import *  # noqa: F401,F403
from .properties import __all__ as _p
from .sampling import SampleSet
from .suites import *  # noqa: F401,F403
from .suites import __all__ as _s

__version__ = "0.1.0"

__all__ = [*_c, *_d, *_i, *_p, *_s, "SampleSet", "build", "parse_expr", "Expr", "ExprError"]
