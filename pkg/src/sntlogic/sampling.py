"""Deterministic sample sets on the unit interval, square and cube."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable

import numpy as np

CRITICAL_OFFSET = 1e-6


def _grid(step: float, exact: bool) -> np.ndarray:
    n = round(1 / step)
    if n < 2 or abs(n * step - 1) > 1e-9:
        raise ValueError(f"grid step {step!r} must divide 1 into at least two intervals")
    if exact:
        return np.array([Fraction(i, n) for i in range(n + 1)], dtype=object)
    # i / n is correctly rounded, so 30/100 is the same double as the literal 0.3
    return np.arange(n + 1) / n


def critical_points_for(alpha: float) -> tuple[float, ...]:
    """``alpha`` and its two near neighbours, clipped to ``[0, 1]``."""
    pts = {alpha, min(1.0, alpha + CRITICAL_OFFSET), max(0.0, alpha - CRITICAL_OFFSET)}
    return tuple(sorted(pts))


@dataclass(frozen=True)
class SampleSet:
    """Grid, critical points and seeded random draws.

    ``exact=True`` produces :class:`~fractions.Fraction` coordinates so that
    connectives are evaluated in rational arithmetic.
    """

    grid_step: float = 0.01
    critical_points: tuple[float, ...] = ()
    random_count: int = 256
    seed: int = 42
    triple_grid_step: float = 0.05
    exact: bool = False

    def __post_init__(self):
        for c in self.critical_points:
            if not 0 <= c <= 1:
                raise ValueError(f"critical point {c!r} outside [0, 1]")
        if self.random_count < 0:
            raise ValueError("random_count must be non-negative")

    def with_critical(self, points: Iterable[float]) -> "SampleSet":
        merged = tuple(sorted(set(self.critical_points) | {float(p) for p in points}))
        if merged == self.critical_points:
            return self
        return replace(self, critical_points=merged)

    # -- coordinate sets ---------------------------------------------------

    def cast(self, values) -> np.ndarray:
        if self.exact:
            return np.array([Fraction(v) for v in values], dtype=object)
        return np.asarray(values, dtype=float)

    def _axis(self, step: float) -> np.ndarray:
        grid = _grid(step, self.exact)
        extra = self.cast((0.0, 1.0) + tuple(self.critical_points))
        return np.array(sorted(set(grid.tolist()) | set(extra.tolist())), dtype=grid.dtype)

    def axis(self) -> np.ndarray:
        """Sorted grid values plus 0, 1 and the critical points."""
        return self._axis(self.grid_step)

    def triple_axis(self) -> np.ndarray:
        return self._axis(self.triple_grid_step)

    def _random(self, dim: int) -> np.ndarray:
        rng = np.random.default_rng(self.seed + dim)
        return self.cast(rng.random(self.random_count * dim)).reshape(self.random_count, dim)

    def unary(self) -> tuple[np.ndarray]:
        return (np.concatenate([self.axis(), self._random(1)[:, 0]]),)

    def binary(self) -> tuple[np.ndarray, np.ndarray]:
        a = self.axis()
        xs, ys = np.meshgrid(a, a, indexing="ij")
        r = self._random(2)
        return (
            np.concatenate([xs.ravel(), r[:, 0]]),
            np.concatenate([ys.ravel(), r[:, 1]]),
        )

    def ternary(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        a = self.triple_axis()
        xs, ys, zs = np.meshgrid(a, a, a, indexing="ij")
        r = self._random(3)
        return (
            np.concatenate([xs.ravel(), r[:, 0]]),
            np.concatenate([ys.ravel(), r[:, 1]]),
            np.concatenate([zs.ravel(), r[:, 2]]),
        )

    def steps(self) -> tuple[np.ndarray, np.ndarray]:
        """Consecutive axis pairs ``(a_k, a_{k+1})``."""
        a = self.axis()
        return a[:-1], a[1:]

    def line_steps(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``(lo, hi, fixed)``: every consecutive step, along every grid line."""
        lo, hi = self.steps()
        a = self.axis()
        k, j = np.meshgrid(np.arange(len(lo)), np.arange(len(a)), indexing="ij")
        return lo[k.ravel()], hi[k.ravel()], a[j.ravel()]
