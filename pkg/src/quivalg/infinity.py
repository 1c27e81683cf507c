"""Shared sentinel for quantities that are infinite rather than numeric.

Dimensions, GK dimensions and chain lengths are either exact non-negative
integers or infinite.  Using a dedicated singleton keeps float("inf") (and
floats in general) out of the library entirely.
"""

from __future__ import annotations

from typing import Union


class Infinite:
    """Singleton marker for an infinite dimension, GK dimension or chain length."""

    _instance: "Infinite | None" = None

    def __new__(cls) -> "Infinite":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "infinite"

    def __reduce__(self):
        return (Infinite, ())


INFINITE = Infinite()

# An "extent" is a size that is either exact or infinite.
Extent = Union[int, Infinite]


def is_finite(value: Extent) -> bool:
    return not isinstance(value, Infinite)
