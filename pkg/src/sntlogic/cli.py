"""Command-line interface.

Exit status: 0 when every verdict is as required, 1 when a property is
falsified (or, for ``suite``, a prediction is contradicted), 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, fields
from typing import Optional, Sequence

import numpy as np

from .connectives import Negation
from .derived import DerivedConnective
from .grammar import Expr, ExprError, build, parse_expr
from .implications import Implication
from .properties import (
    EPS,
    IMPLICATION_AXIOMS,
    IMPLICATION_PROPERTIES,
    PropertyReport,
    check_axioms,
    check_flags,
    check_property,
    format_table,
    reports_to_json,
)
from .registry import KINDS, listing
from .sampling import SampleSet, _grid
from .suites import SUITES, run_theorem_suite, suite_ok

SEED_ENV = "SNTLOGIC_SEED"
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    grid_step: float = 0.01
    triple_grid_step: float = 0.05
    random_count: int = 256
    seed: int = 42
    tolerance: float = EPS
    format: str = "text"

    def __post_init__(self):
        for name in ("grid_step", "triple_grid_step"):
            v = getattr(self, name)
            if not 0 < v <= 0.5:
                raise UsageError(f"{name} must be in (0, 0.5], got {v!r}")
        if not self.tolerance > 0:
            raise UsageError(f"tolerance must be > 0, got {self.tolerance!r}")
        if self.random_count < 0:
            raise UsageError("random_count must be non-negative")
        if self.format not in FORMATS:
            raise UsageError(f"format must be one of {', '.join(FORMATS)}")

    def samples(self) -> SampleSet:
        try:
            return SampleSet(
                grid_step=self.grid_step,
                random_count=self.random_count,
                seed=self.seed,
                triple_grid_step=self.triple_grid_step,
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from None


_CONFIG_FIELDS = tuple(f.name for f in fields(RunConfig))
_CASTS = {"grid_step": float, "triple_grid_step": float, "random_count": int, "seed": int,
          "tolerance": float, "format": str}


def load_config(args: argparse.Namespace) -> RunConfig:
    """Defaults, then the seed environment variable, then a JSON file, then flags."""
    values: dict = {}
    env_seed = os.environ.get(SEED_ENV)
    if env_seed:
        try:
            values["seed"] = int(env_seed)
        except ValueError:
            raise UsageError(f"{SEED_ENV}={env_seed!r} is not an integer") from None
    if getattr(args, "config", None):
        try:
            with open(args.config, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
        unknown = set(data) - set(_CONFIG_FIELDS)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        values.update(data)
    for name in _CONFIG_FIELDS:
        v = getattr(args, name, None)
        if v is not None:
            values[name] = v
    if getattr(args, "json", False):
        values["format"] = "json"
    try:
        values = {k: _CASTS[k](v) for k, v in values.items()}
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad config value: {exc}") from None
    return RunConfig(**values)


# --- helpers --------------------------------------------------------------


def _parse(text: str, kind: Optional[str] = None) -> Expr:
    try:
        return parse_expr(text, kind)
    except ExprError as exc:
        raise UsageError(str(exc)) from None


def _fmt(v) -> str:
    return f"{float(v):.12g}"


def _unit(text: str, what: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise UsageError(f"{what}={text!r} is not a number") from None
    if not 0 <= v <= 1:
        raise UsageError(f"{what}={v!r} outside [0, 1]")
    return v


def _split_top(text: str) -> list[str]:
    """Split on commas that are not inside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


_ROLE_KINDS = {"S": "tconorm", "T": "tnorm", "N": "negation", "N'": "negation", "N2": "negation"}


def _suite_inputs(items: Sequence[str]):
    roles: dict = {}
    positional: list = []
    for item in (p for raw in items for p in _split_top(raw)):
        role, sep, text = item.partition("=")
        if sep and role in _ROLE_KINDS:
            roles[role] = build(_parse(text, _ROLE_KINDS[role]))
        else:
            positional.append(build(_parse(item)))
    if roles and positional:
        raise UsageError("mix of ROLE=expr and bare inputs; use one style")
    return roles or positional


def _emit_reports(reports: list[PropertyReport], cfg: RunConfig, out) -> None:
    if cfg.format == "json":
        out.write(reports_to_json(reports) + "\n")
    elif cfg.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["property_id", "verdict", "witness", "residual", "samples_checked", "role", "expected", "subject"])
        for r in reports:
            d = r.to_dict()
            witness = "" if r.witness is None else " ".join(_fmt(v) for v in r.witness)
            w.writerow([d["property_id"], d["verdict"], witness, _fmt(r.residual), d["samples_checked"],
                        d["role"], d["expected"] or "", d["subject"]])
    else:
        out.write(format_table(reports) + "\n")
        total = len(reports)
        bad = sum(r.falsified for r in reports)
        out.write(f"{total - bad}/{total} without counterexample on the samples (not a proof)\n")


# --- commands -------------------------------------------------------------


def cmd_eval(expr_text: str, x: str, y: Optional[str] = None, kind: Optional[str] = None) -> float:
    obj = build(_parse(expr_text, kind))
    xv = _unit(x, "x")
    if isinstance(obj, Negation):
        if y is not None:
            raise UsageError("a negation takes one argument")
        return float(obj(xv))
    if y is None:
        raise UsageError("binary connective needs x and y")
    return float(obj(xv, _unit(y, "y")))


def cmd_table(expr_text: str, step: float, kind: Optional[str] = None) -> str:
    obj = build(_parse(expr_text, kind))
    if isinstance(obj, Negation):
        raise UsageError("table needs a binary connective")
    if not 0 < step <= 0.5:
        raise UsageError(f"step must be in (0, 0.5], got {step!r}")
    try:
        axis = _grid(step, exact=False)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    xs, ys = np.meshgrid(axis, axis, indexing="ij")
    values = np.asarray(obj(xs, ys), dtype=float)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x\\y"] + [_fmt(v) for v in axis])
    for i, xv in enumerate(axis):
        w.writerow([_fmt(xv)] + [_fmt(v) for v in values[i]])
    return buf.getvalue()


def _default_props(obj: Implication, negation: Optional[Negation]) -> list[str]:
    props = list(IMPLICATION_AXIOMS) + [p for p, spec in IMPLICATION_PROPERTIES.items() if not spec[2]]
    if negation is not None:
        props += [p for p, spec in IMPLICATION_PROPERTIES.items() if spec[2]]
    return props


def cmd_check(
    expr_text: str,
    props: str,
    cfg: RunConfig,
    kind: Optional[str] = None,
    negation: Optional[str] = None,
) -> list[PropertyReport]:
    obj = build(_parse(expr_text, kind))
    samples = cfg.samples()
    tol = cfg.tolerance
    wanted = None if props.lower() == "all" else [p.strip().upper().replace("-", "") for p in props.split(",") if p.strip()]
    if isinstance(obj, Implication):
        n = build(_parse(negation, "negation")) if negation else obj.negation
        ids = wanted or _default_props(obj, n)
        try:
            return [check_property(p, obj, n, samples, tol) for p in ids]
        except (KeyError, ValueError) as exc:
            raise UsageError(str(exc.args[0] if exc.args else exc)) from None
    if negation:
        raise UsageError("--negation only applies to implications")
    reports = check_axioms(obj, samples, tol)
    if not isinstance(obj, DerivedConnective):
        reports += check_flags(obj, samples, tol)
    if wanted:
        known = {r.property_id for r in reports}
        unknown = [p for p in wanted if p not in known]
        if unknown:
            raise UsageError(f"not applicable to {obj.name}: {', '.join(unknown)}")
        reports = [r for r in reports if r.property_id in wanted]
    return reports


def cmd_suite(suite_id: str, inputs: Sequence[str], cfg: RunConfig) -> list[PropertyReport]:
    try:
        return run_theorem_suite(suite_id, _suite_inputs(inputs), cfg.samples(), cfg.tolerance)
    except (KeyError, ValueError, TypeError) as exc:
        raise UsageError(str(exc.args[0] if exc.args else exc)) from None


def cmd_list() -> str:
    return listing() + "\nsuites:\n" + "\n".join(
        f"  {sid:<16} {' '.join((fn.__doc__ or '').split())}" for sid, fn in SUITES.items()
    )


# --- argument parsing -----------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("sampling")
    g.add_argument("--grid-step", dest="grid_step", type=float, help="2-D grid spacing (default 0.01)")
    g.add_argument("--triple-step", dest="triple_grid_step", type=float, help="3-D grid spacing (default 0.05)")
    g.add_argument("--random-count", dest="random_count", type=int, help="random samples per space (default 256)")
    g.add_argument("--seed", type=int, help=f"random seed (default 42, or ${SEED_ENV})")
    g.add_argument("--tolerance", type=float, help="absolute tolerance (default 1e-9)")
    g.add_argument("--format", choices=FORMATS, help="report format")
    g.add_argument("--config", help="JSON file with any of the options above")
    kind = argparse.ArgumentParser(add_help=False)
    kind.add_argument("--kind", choices=KINDS, help="top-level kind for ambiguous names")

    p = argparse.ArgumentParser(prog="sntlogic", description="Fuzzy implication toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[kind], help="evaluate an expression at a point")
    e.add_argument("expr")
    e.add_argument("x")
    e.add_argument("y", nargs="?")

    t = sub.add_parser("table", parents=[common, kind], help="CSV grid of values")
    t.add_argument("expr")
    t.add_argument("--step", type=float)
    t.add_argument("--out")

    c = sub.add_parser("check", parents=[common, kind], help="falsification checks")
    c.add_argument("expr")
    c.add_argument("--props", default="all", help="comma-separated ids or 'all'")
    c.add_argument("--negation", help="negation for CP, LCP, RCP, NATNEG")
    c.add_argument("--json", action="store_true")

    s = sub.add_parser("suite", parents=[common], help="run a theorem suite")
    s.add_argument("suite_id")
    s.add_argument("--inputs", nargs="+", required=True,
                   help="expressions, comma-separated or repeated; ROLE=expr with roles S, T, N, N'")
    s.add_argument("--json", action="store_true")

    sub.add_parser("list", help="registered identifiers and suites")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "eval":
            out.write(_fmt(cmd_eval(args.expr, args.x, args.y, args.kind)) + "\n")
            return 0
        if args.command == "list":
            out.write(cmd_list() + "\n")
            return 0
        cfg = load_config(args)
        if args.command == "table":
            text = cmd_table(args.expr, args.step or cfg.grid_step, args.kind)
            if args.out:
                with open(args.out, "w", encoding="utf-8", newline="") as fh:
                    fh.write(text)
            else:
                out.write(text)
            return 0
        if args.command == "check":
            reports = cmd_check(args.expr, args.props, cfg, args.kind, args.negation)
            _emit_reports(reports, cfg, out)
            return 1 if any(r.falsified for r in reports) else 0
        if args.command == "suite":
            reports = cmd_suite(args.suite_id, args.inputs, cfg)
            _emit_reports(reports, cfg, out)
            return 0 if suite_ok(reports) else 1
    except UsageError as exc:
        print(f"sntlogic: error: {exc}", file=sys.stderr)
        return 2
    parser.error(f"unknown command {args.command}")  # pragma: no cover
    return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
