"""Recursive-descent parser for connective expressions.

    expr  := IDENT [':' NUMBER]
           | IDENT '(' expr (',' expr)* ')'

Slots are typed: ``snt`` takes (t-conorm, negation, t-norm) and the
``derive*`` forms take an ``snt(...)`` expression and a negation.  Names such
as ``luk`` and ``drastic`` are resolved by the slot they occupy; at top level
the caller may pass the expected kind.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .registry import ATOMS, COMBINATORS, KINDS, kinds_of

__all__ = [
    "Expr",
    "ExprError",
    "ExprSyntaxError",
    "UnknownIdentifier",
    "ArityError",
    "SlotKindError",
    "ParameterError",
    "AmbiguousKind",
    "parse_expr",
    "build",
]


class ExprError(ValueError):
    def __init__(self, message: str, token: str = "", position: int = 0):
        super().__init__(f"{message} (token {token!r} at position {position})")
        self.token = token
        self.position = position


class ExprSyntaxError(ExprError):
    pass


class UnknownIdentifier(ExprError):
    pass


class ArityError(ExprError):
    pass


class SlotKindError(ExprError):
    pass


class ParameterError(ExprError):
    pass


class AmbiguousKind(ExprError):
    pass


@dataclass(frozen=True)
class Expr:
    name: str
    kind: str
    param: Optional[float] = None
    args: tuple["Expr", ...] = ()
    pos: int = field(default=0, compare=False)

    def __str__(self) -> str:
        if self.args:
            return f"{self.name}({','.join(str(a) for a in self.args)})"
        if self.param is not None:
            return f"{self.name}:{self.param!r}"
        return self.name


_TOKEN = re.compile(
    r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<num>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)"
    r"|(?P<punct>[(),:]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = len(text) - len(text[pos:].lstrip())
            raise ExprSyntaxError("unexpected character", text[start:start + 1], start)
        typ = m.lastgroup
        tokens.append((typ, m.group(typ), m.start(typ)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


# untyped parse tree: (name, param, args | None, pos)


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, typ: str, value: Optional[str] = None):
        tok = self.peek()
        if tok[0] != typ or (value is not None and tok[1] != value):
            want = value or typ
            raise ExprSyntaxError(f"expected {want}", tok[1] or "<end>", tok[2])
        self.i += 1
        return tok

    def expr(self):
        _, name, pos = self.take("ident")
        tok = self.peek()
        if tok[1] == ":":
            self.i += 1
            _, num, _ = self.take("num")
            return (name, float(num), None, pos)
        if tok[1] == "(":
            self.i += 1
            args = [self.expr()]
            while self.peek()[1] == ",":
                self.i += 1
                args.append(self.expr())
            self.take("punct", ")")
            return (name, None, tuple(args), pos)
        return (name, None, None, pos)

    def parse(self):
        tree = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprSyntaxError("trailing input", tok[1], tok[2])
        return tree


def _kind_name(kind: str) -> str:
    return {"tnorm": "t-norm", "tconorm": "t-conorm", "snt": "snt(...) implication"}.get(kind, kind)


def _resolve(tree, expected: Optional[str]) -> Expr:
    name, param, args, pos = tree
    if args is not None:
        comb = COMBINATORS.get(name)
        if comb is None:
            if kinds_of(name):
                raise ArityError(f"{name!r} takes no arguments", name, pos)
            raise UnknownIdentifier(f"unknown combinator {name!r}", name, pos)
        if expected == "snt" and name != "snt":
            raise SlotKindError(f"{name!r} is not an snt(...) implication", name, pos)
        if expected not in (None, "snt", comb.kind):
            raise SlotKindError(f"{name!r} builds a {_kind_name(comb.kind)}, expected {_kind_name(expected)}", name, pos)
        if len(args) != len(comb.slots):
            raise ArityError(f"{name} takes {len(comb.slots)} arguments, got {len(args)}", name, pos)
        resolved = tuple(_resolve(a, slot) for a, slot in zip(args, comb.slots))
        return Expr(name, comb.kind, None, resolved, pos)

    kinds = kinds_of(name)
    atom_kinds = [k for k in kinds if name in ATOMS.get(k, {})]
    if not kinds:
        raise UnknownIdentifier(f"unknown identifier {name!r}", name, pos)
    if not atom_kinds:
        raise ArityError(f"{name} needs arguments", name, pos)
    if expected == "snt":
        raise SlotKindError(f"{name!r} is not an snt(...) implication", name, pos)
    if expected is None:
        if len(atom_kinds) > 1:
            raise AmbiguousKind(f"{name!r} may be any of {', '.join(atom_kinds)}; give the kind", name, pos)
        kind = atom_kinds[0]
    elif expected in atom_kinds:
        kind = expected
    else:
        raise SlotKindError(
            f"{name!r} is not a registered {_kind_name(expected)}", name, pos
        )
    atom = ATOMS[kind][name]
    if atom.param is None and param is not None:
        raise ParameterError(f"{name} takes no parameter", name, pos)
    if atom.param is not None:
        if param is None:
            raise ParameterError(f"{name} needs a parameter ({atom.param})", name, pos)
        try:
            atom.build(param)
        except ValueError as exc:
            raise ParameterError(f"{name}: {exc}; expected {atom.param}", f"{name}:{param!r}", pos) from None
    return Expr(name, kind, param, (), pos)


def parse_expr(text: str, kind: Optional[str] = None) -> Expr:
    """Parse ``text``; ``kind`` pins the top-level kind when a name is ambiguous."""
    if kind is not None and kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    return _resolve(_Parser(text).parse(), kind)


def build(expr: Expr):
    """Construct the connective, implication or derived connective for ``expr``."""
    if expr.args:
        comb = COMBINATORS[expr.name]
        return comb.build(*(build(a) for a in expr.args))
    atom = ATOMS[expr.kind][expr.name]
    return atom.build() if atom.param is None else atom.build(expr.param)
