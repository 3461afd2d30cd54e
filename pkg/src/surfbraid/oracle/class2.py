"""The free class-2 nilpotent group F/Gamma_3(F) on N generators.

An element (e, c) stands for x_1^e_1 ... x_N^e_N prod_{i<j} [x_i, x_j]^c_ij,
with the pairs i<j in lexicographic order. Since x_j x_i = [x_i, x_j]^-1 x_i x_j,
(e, c)(e', c') = (e + e', c + c' + d) with d_ij = -e'_i e_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from surfbraid.exceptions import GeneratorError, ValidationError
from surfbraid.words import Generator, Word


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Basic commutator indices (i, j), i < j, in lexicographic order."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def beta(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """Commutator block of [x, y] for x, y with abelian parts u, v."""
    return tuple(u[i] * v[j] - u[j] * v[i] for i, j in pairs(len(u)))


def _quadratic(e: Sequence[int]) -> tuple[int, ...]:
    return tuple(e[i] * e[j] for i, j in pairs(len(e)))


@dataclass(frozen=True)
class Class2Elt:
    """Element of the free class-2 nilpotent group in collected form."""

    e: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        n = len(self.e)
        if len(self.c) != n * (n - 1) // 2:
            raise ValidationError(
                f"Commutator block has {len(self.c)} entries, expected {n * (n - 1) // 2}"
            )

    @property
    def n(self) -> int:
        return len(self.e)

    @classmethod
    def identity(cls, n: int) -> "Class2Elt":
        return cls((0,) * n, (0,) * (n * (n - 1) // 2))

    @classmethod
    def generator(cls, n: int, index: int, exp: int = 1) -> "Class2Elt":
        """x_index^exp (0-based index)."""
        e = tuple(exp if i == index else 0 for i in range(n))
        return cls(e, (0,) * (n * (n - 1) // 2))

    def __mul__(self, other: "Class2Elt") -> "Class2Elt":
        if self.n != other.n:
            raise ValidationError(f"Cannot multiply class-2 elements on {self.n} and {other.n} generators")
        e = tuple(a + b for a, b in zip(self.e, other.e))
        c = tuple(
            ci + cj - other.e[i] * self.e[j]
            for (ci, cj, (i, j)) in zip(self.c, other.c, pairs(self.n))
        )
        return Class2Elt(e, c)

    def __pow__(self, k: int) -> "Class2Elt":
        """x^k = (k e, k c - C(k, 2) q(e)), valid for every integer k."""
        binom = k * (k - 1) // 2
        q = _quadratic(self.e)
        return Class2Elt(
            tuple(k * a for a in self.e),
            tuple(k * ci - binom * qi for ci, qi in zip(self.c, q)),
        )

    def __invert__(self) -> "Class2Elt":
        return self ** -1

    def is_identity(self) -> bool:
        return not any(self.e) and not any(self.c)

    def commutator(self, other: "Class2Elt") -> "Class2Elt":
        return Class2Elt((0,) * self.n, beta(self.e, other.e))


def collect_class2(w: Word, index: Mapping[Generator, int]) -> Class2Elt:
    """Image of w in F/Gamma_3(F), generators numbered by index."""
    n = len(index)
    result = Class2Elt.identity(n)
    for gen, exp in w.letters:
        if gen not in index:
            raise GeneratorError(f"Unknown generator '{gen.name}' for the oracle")
        result = result * Class2Elt.generator(n, index[gen], exp)
    return result
