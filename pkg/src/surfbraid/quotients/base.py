"""Shared machinery for quotient elements and evaluation maps."""

from __future__ import annotations

from typing import Iterable, Protocol, TypeVar

from surfbraid.exceptions import GeneratorError, ValidationError
from surfbraid.output import debug
from surfbraid.words import Family, Generator, GroupParams, Word, format_word

E = TypeVar("E", bound="GroupElement")


class GroupElement:
    """Mixin giving normal-form element types their group operators.

    Subclasses implement _mul, _inv, coordinates and normal_word.
    """

    def _mul(self: E, other: E) -> E:
        raise NotImplementedError

    def _inv(self: E) -> E:
        raise NotImplementedError

    def coordinates(self) -> tuple[int, ...]:
        """All exponents, flattened; all-zero iff the element is the identity."""
        raise NotImplementedError

    def normal_word(self) -> Word:
        """The normal form as a word (collapsed generators print index-free)."""
        raise NotImplementedError

    def __mul__(self: E, other: E) -> E:
        if type(self) is not type(other):
            return NotImplemented
        return self._mul(other)

    def __invert__(self: E) -> E:
        return self._inv()

    def __pow__(self: E, n: int) -> E:
        base = self if n >= 0 else self._inv()
        n = abs(n)
        result = self._mul(self._inv())
        while n:
            if n & 1:
                result = result._mul(base)
            base = base._mul(base)
            n >>= 1
        return result

    def commutator(self: E, other: E) -> E:
        """[self, other] = self other self^-1 other^-1."""
        return self._mul(other)._mul(self._inv())._mul(other._inv())

    def conjugate(self: E, by: E) -> E:
        """self^by = by^-1 self by."""
        return by._inv()._mul(self)._mul(by)

    def is_identity(self) -> bool:
        return not any(self.coordinates())

    def __str__(self) -> str:
        return format_word(self.normal_word())


def factor_word(factors: Iterable[tuple[Generator, int]]) -> Word:
    """Word of the given factors, dropping zero exponents."""
    return Word(tuple((gen, exp) for gen, exp in factors if exp != 0))


def check_same_shape(x: tuple[int, ...], y: tuple[int, ...], what: str) -> None:
    if len(x) != len(y):
        raise ValidationError(
            f"Cannot combine {what} elements of different shapes ({len(x)} vs {len(y)})"
        )


class Evaluator(Protocol):
    """Protocol for evaluation maps from words into a quotient."""

    name: str
    params: GroupParams

    def identity(self) -> GroupElement:
        """Identity element of the target."""
        ...

    def letter(self, gen: Generator) -> GroupElement:
        """Image of a single generator."""
        ...

    def __call__(self, w: Word) -> GroupElement:
        """Image of a word; a homomorphism from the free group."""
        ...


class BaseEvaluator:
    """Shared implementation: regime and alphabet checks, then a fold over letters.

    Subclasses set name, alphabet, collapsed and the regime bounds, and
    implement identity and _image.
    """

    name = "quotient"
    alphabet: frozenset[Family] = frozenset(Family)
    collapsed: frozenset[Family] = frozenset()
    min_k = 1
    min_n = 0
    min_g = 0

    def __init__(self, params: GroupParams):
        params.require(self.name, k=self.min_k, n=self.min_n, g=self.min_g)
        self.params = params

    def identity(self) -> GroupElement:
        raise NotImplementedError

    def _image(self, gen: Generator) -> GroupElement:
        raise NotImplementedError

    def letter(self, gen: Generator) -> GroupElement:
        if gen.family not in self.alphabet:
            raise GeneratorError(f"Letter '{gen.name}' is outside the alphabet of {self.name}")
        if gen.collapsed and gen.family not in self.collapsed:
            raise GeneratorError(f"Collapsed generator '{gen.name}' is not defined in {self.name}")
        self.params.check_generator(gen, allow_collapsed=True)
        return self._image(gen)

    def __call__(self, w: Word) -> GroupElement:
        result = self.identity()
        for gen, exp in w.letters:
            result = result * (self.letter(gen) ** exp)
        return result

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.params})"


def log_evaluation(name: str, w: Word, result: GroupElement) -> None:
    debug(f"{name}: {format_word(w)} -> {result}")
