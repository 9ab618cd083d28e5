"""Array helpers shared by every connective.

Connective callables accept Python scalars, float arrays, or object arrays
holding :class:`fractions.Fraction` values.  Scalars in give a scalar out.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

import numpy as np


def as_array(value) -> np.ndarray:
    arr = np.asarray(value)
    if arr.dtype.kind in "iub":
        arr = arr.astype(float)
    return arr


def is_exact(value) -> bool:
    """True for rational (object-dtype) inputs."""
    return np.asarray(value).dtype == object


def to_fraction(arr: np.ndarray) -> np.ndarray:
    flat = [Fraction(v) for v in np.asarray(arr).ravel().tolist()]
    return np.array(flat + [None], dtype=object)[:-1].reshape(np.shape(arr))


def lift(func: Callable, *args):
    """Apply an array function to ``args`` and keep scalar-ness of the input."""
    arrays = [as_array(a) for a in args]
    exact = any(a.dtype == object for a in arrays)
    if exact:
        # ints and floats mixed with rationals are lifted to rationals too
        arrays = [a if a.dtype == object else to_fraction(a) for a in arrays]
    out = np.asarray(func(*arrays))
    if exact:
        out = out.astype(object)
    else:
        out = as_array(out)
    if all(a.ndim == 0 for a in arrays):
        return out.item()
    return out
