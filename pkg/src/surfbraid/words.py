"""Generator alphabets, free-group words, parsing and printing.

Word grammar: tokens separated by one or more ASCII spaces; a token is a
generator name optionally followed by ``^`` and a signed decimal exponent
(``s2^-3``). Names are ``s<i>`` (sigma_i), ``ts<i>`` (tilde sigma_i),
``a<i>``, ``b<i>``, ``ta<i>``, ``tb<i>``, ``z<i>`` (zeta_i). The literal
``1`` on its own is the empty word.

The index-free names ``s``, ``ts`` and ``z`` denote the common image of a
whole family in the quotients where that family collapses; they are only
accepted when the caller asks for them.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Iterator, Sequence

from surfbraid.exceptions import (
    GeneratorError,
    RegimeError,
    ValidationError,
    WordSyntaxError,
)


class Family(Enum):
    """Generator families, valued by their word-grammar prefix."""

    SIGMA = "s"
    SIGMA_TILDE = "ts"
    A = "a"
    B = "b"
    A_TILDE = "ta"
    B_TILDE = "tb"
    ZETA = "z"

    @property
    def prefix(self) -> str:
        return self.value

    @property
    def collapsible(self) -> bool:
        """Whether the family has a collapsed (index-free) image."""
        return self in COLLAPSIBLE


# Generators of B_k(Sigma_{g,n}), of B_n(Sigma_g), and of the classical B_{k,n}.
INNER = frozenset({Family.SIGMA, Family.A, Family.B, Family.ZETA})
OUTER = frozenset({Family.SIGMA_TILDE, Family.A_TILDE, Family.B_TILDE})
CLASSICAL = frozenset({Family.SIGMA, Family.SIGMA_TILDE, Family.ZETA})
COLLAPSIBLE = CLASSICAL
ALL_FAMILIES = frozenset(Family)

_TOKEN = re.compile(r"^(ts|ta|tb|s|a|b|z)(\d*)(?:\^([+-]?\d+))?$")


@dataclass(frozen=True)
class Generator:
    """A generator sigma_i, tilde sigma_i, a_i, b_i, tilde a_i, tilde b_i or zeta_i.

    Index 0 is the collapsed image of a collapsible family (printed ``s``,
    ``ts`` or ``z``).
    """

    family: Family
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise GeneratorError(f"Invalid generator index: {self.index}")
        if self.index == 0 and not self.family.collapsible:
            raise GeneratorError(
                f"Family '{self.family.prefix}' has no collapsed generator"
            )

    @property
    def name(self) -> str:
        if self.index == 0:
            return self.family.prefix
        return f"{self.family.prefix}{self.index}"

    @property
    def collapsed(self) -> bool:
        return self.index == 0

    @classmethod
    def from_name(cls, name: str, *, allow_collapsed: bool = False) -> "Generator":
        """Build a generator from its grammar name (no range checking).

        Indices start at 1; the bare names ``s``, ``ts`` and ``z`` need allow_collapsed.
        """
        match = _TOKEN.match(name)
        if not match or match.group(3) is not None:
            raise GeneratorError(f"Unknown generator: '{name}'")
        family = Family(match.group(1))
        if not match.group(2):
            if not allow_collapsed:
                raise GeneratorError(f"Generator '{name}' has no index")
            return cls(family, 0)
        index = int(match.group(2))
        if index == 0:
            raise GeneratorError(f"Generator '{name}': indices start at 1")
        return cls(family, index)

    def sort_key(self) -> tuple[int, int, int]:
        """Position in the canonical order S, S~, AB, AB~, Z (a_i before b_i)."""
        rank = _FAMILY_RANK[self.family]
        # AB and AB~ interleave by index: a1 b1 a2 b2 ...
        if self.family in (Family.A, Family.B):
            return (2, self.index, 0 if self.family is Family.A else 1)
        if self.family in (Family.A_TILDE, Family.B_TILDE):
            return (3, self.index, 0 if self.family is Family.A_TILDE else 1)
        return (rank, self.index, 0)

    def __str__(self) -> str:
        return self.name


_FAMILY_RANK = {
    Family.SIGMA: 0,
    Family.SIGMA_TILDE: 1,
    Family.A: 2,
    Family.B: 2,
    Family.A_TILDE: 3,
    Family.B_TILDE: 3,
    Family.ZETA: 4,
}


@dataclass(frozen=True)
class GroupParams:
    """The triple (k, n, g): inner strands, outer strands (or punctures), genus."""

    k: int
    n: int
    g: int

    def __post_init__(self):
        if self.k < 1:
            raise ValidationError(f"Invalid k: {self.k} (must be at least 1)")
        if self.n < 0:
            raise ValidationError(f"Invalid n: {self.n} (must be at least 0)")
        if self.g < 0:
            raise ValidationError(f"Invalid g: {self.g} (must be at least 0)")

    def family_size(self, family: Family) -> int:
        """Number of indexed generators of a family for these parameters."""
        if family is Family.SIGMA:
            return self.k - 1
        if family is Family.SIGMA_TILDE:
            return max(self.n - 1, 0)
        if family is Family.ZETA:
            return self.n
        return self.g

    def generators(self, families: Iterable[Family] = ALL_FAMILIES) -> tuple[Generator, ...]:
        """Indexed generators of the given families, in canonical order."""
        gens = [
            Generator(family, i)
            for family in set(families)
            for i in range(1, self.family_size(family) + 1)
        ]
        return tuple(sorted(gens, key=Generator.sort_key))

    def check_generator(self, gen: Generator, allow_collapsed: bool = False) -> None:
        """Raise GeneratorError unless gen is valid for these parameters."""
        size = self.family_size(gen.family)
        if size == 0:
            raise GeneratorError(
                f"Generator '{gen.name}': family '{gen.family.prefix}' is empty for {self}"
            )
        if gen.collapsed:
            if not allow_collapsed:
                raise GeneratorError(
                    f"Generator '{gen.name}': collapsed names are not accepted here"
                )
            return
        if gen.index > size:
            raise GeneratorError(
                f"Generator '{gen.name}': index out of range 1..{size} for {self}"
            )

    def require(self, operation: str, *, k: int = 1, n: int = 0, g: int = 0) -> None:
        """Raise RegimeError unless k, n, g meet the given lower bounds."""
        violated = []
        if self.k < k:
            violated.append(f"k >= {k}")
        if self.n < n:
            violated.append(f"n >= {n}")
        if self.g < g:
            violated.append(f"g >= {g}")
        if violated:
            raise RegimeError(
                f"{operation} requires {' and '.join(violated)} (got {self})"
            )

    def as_dict(self) -> dict[str, int]:
        return {"k": self.k, "n": self.n, "g": self.g}

    def __str__(self) -> str:
        return f"(k,n,g)=({self.k},{self.n},{self.g})"


Letter = tuple[Generator, int]


@dataclass(frozen=True)
class Word:
    """A word on generators and their inverses, stored as (generator, exponent) letters.

    Concatenation with ``*`` does not reduce; use free_reduce for the canonical form.
    """

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for gen, exp in self.letters:
            if exp == 0:
                raise ValidationError(f"Zero exponent on '{gen.name}'")

    @classmethod
    def letter(cls, gen: Generator, exp: int = 1) -> "Word":
        return cls(((gen, exp),))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return Word()
        if n < 0:
            return invert(self) ** -n
        half = self ** (n // 2)
        result = half * half
        if n % 2:
            result = result * self
        return free_reduce(result)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def length(self) -> int:
        """Sum of absolute exponents."""
        return sum(abs(exp) for _, exp in self.letters)

    def is_empty(self) -> bool:
        return not self.letters

    def generators(self) -> set[Generator]:
        return {gen for gen, _ in self.letters}

    def substitute(self, image: Callable[[Generator], "Word"]) -> "Word":
        """Replace each letter x^e by image(x)^e, freely reduced."""
        out = Word()
        for gen, exp in self.letters:
            out = out * (image(gen) ** exp)
        return free_reduce(out)

    def __str__(self) -> str:
        return format_word(self)


def free_reduce(w: Word) -> Word:
    """Cancel adjacent inverse pairs and merge runs of the same generator."""
    out: list[Letter] = []
    for gen, exp in w.letters:
        if out and out[-1][0] == gen:
            total = out[-1][1] + exp
            if total == 0:
                out.pop()
            else:
                out[-1] = (gen, total)
        else:
            out.append((gen, exp))
    return Word(tuple(out))


def invert(w: Word) -> Word:
    """Reverse the letters and negate every exponent."""
    return Word(tuple((gen, -exp) for gen, exp in reversed(w.letters)))


def commutator(x: Word, y: Word) -> Word:
    """[x, y] = x y x^-1 y^-1, freely reduced."""
    return free_reduce(x * y * invert(x) * invert(y))


def conjugate(x: Word, y: Word) -> Word:
    """x^y = y^-1 x y, freely reduced."""
    return free_reduce(invert(y) * x * y)


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    return " ".join(
        gen.name if exp == 1 else f"{gen.name}^{exp}" for gen, exp in w.letters
    )


def parse_word(text: str, params: GroupParams, *, allow_collapsed: bool = False) -> Word:
    """Parse text in the word grammar, exactly as written (no reduction).

    Raises WordSyntaxError with the column of the offending token, and
    GeneratorError for generators that do not exist for params.
    """
    tokens = [(m.group(0), m.start()) for m in re.finditer(r"[^ ]+", text)]
    if not tokens:
        raise WordSyntaxError("Empty word text (use 1 for the identity)", 0)
    if len(tokens) == 1 and tokens[0][0] == "1":
        return Word()

    letters: list[Letter] = []
    for token, pos in tokens:
        match = _TOKEN.match(token)
        if not match:
            raise WordSyntaxError(f"Invalid token '{token}'", pos)
        family = Family(match.group(1))
        if match.group(2):
            index = int(match.group(2))
            if index == 0:
                raise GeneratorError(f"Generator '{token}': indices start at 1")
        elif allow_collapsed and family.collapsible:
            index = 0
        else:
            raise WordSyntaxError(f"Missing generator index in '{token}'", pos)
        exp = int(match.group(3)) if match.group(3) is not None else 1
        if exp == 0:
            raise WordSyntaxError(f"Zero exponent in '{token}'", pos)
        gen = Generator(family, index)
        params.check_generator(gen, allow_collapsed=allow_collapsed)
        letters.append((gen, exp))
    return Word(tuple(letters))


def check_alphabet(w: Word, families: frozenset[Family], what: str) -> None:
    """Raise GeneratorError if w uses a letter outside the given families."""
    for gen, _ in w.letters:
        if gen.family not in families:
            raise GeneratorError(f"Letter '{gen.name}' is outside the alphabet of {what}")


def random_word(
    rng: random.Random,
    generators: Sequence[Generator],
    max_length: int = 12,
    exponents: Sequence[int] = (-1, 1),
) -> Word:
    """Random word of at most max_length letters over generators."""
    if not generators:
        return Word()
    length = rng.randint(0, max_length)
    return Word(
        tuple((rng.choice(generators), rng.choice(exponents)) for _ in range(length))
    )
