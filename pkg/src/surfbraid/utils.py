"""Utility functions."""

from __future__ import annotations

from typing import Sequence


def validate_seed(seed: int) -> None:
    """Validate a random seed.

    Raises ValueError if invalid.
    """
    if seed < 0:
        raise ValueError(f"Invalid seed: {seed} (must be non-negative)")


def validate_samples(samples: int) -> None:
    """Validate a sample count for randomized checks.

    Raises ValueError if invalid.
    """
    if samples < 1:
        raise ValueError(f"Invalid sample count: {samples} (must be at least 1)")


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    """Inner product of two integer vectors of equal length."""
    return sum(x * y for x, y in zip(u, v, strict=True))


def vec_add(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(u, v, strict=True))


def vec_neg(u: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in u)


def unit(length: int, index: int, value: int = 1) -> tuple[int, ...]:
    """Vector of the given length with value at index (0-based), zeros elsewhere."""
    return tuple(value if i == index else 0 for i in range(length))


def zeros(length: int) -> tuple[int, ...]:
    return (0,) * length
