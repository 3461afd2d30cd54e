"""Abelianisations of B_{k,n}(Sigma_g) and B_k(Sigma_{g,n}).

MixedAbel: free on s (k >= 2), ts (n >= 2), z when g = 0; when g >= 1 it is
Z^{4g} (AB and tilde AB) times Z_2 for each of s, ts, and every zeta_i dies.
PuncturedAbel: free on AB and Z, with s free when g = 0 and of order 2 when
g >= 1 (k >= 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from surfbraid.exceptions import ValidationError
from surfbraid.presentations import QuotientKind
from surfbraid.quotients.base import GroupElement, factor_word
from surfbraid.utils import vec_add, vec_neg, zeros
from surfbraid.words import Family, Generator, GroupParams, Word

_S = Generator(Family.SIGMA, 0)
_TS = Generator(Family.SIGMA_TILDE, 0)
_Z = Generator(Family.ZETA, 0)


@dataclass(frozen=True)
class AbelLayout:
    """Which generator owns each free and each Z_2 coordinate."""

    kind: QuotientKind
    free: tuple[Generator, ...]
    torsion: tuple[Generator, ...]

    def slot(self, gen: Generator) -> tuple[str, int] | None:
        """('free' | 'torsion', position) of the image of gen, or None if it dies."""
        key = Generator(gen.family, 0) if self._collapses(gen.family) else gen
        if key in self.free:
            return ("free", self.free.index(key))
        if key in self.torsion:
            return ("torsion", self.torsion.index(key))
        return None

    def _collapses(self, family: Family) -> bool:
        if family is Family.ZETA:
            return self.kind is QuotientKind.MIXED_ABEL
        return family in (Family.SIGMA, Family.SIGMA_TILDE)


def _surface_interleaved(params: GroupParams) -> list[Generator]:
    """a1 ta1 a2 ta2 ... b1 tb1 b2 tb2 ..."""
    out = []
    for left, right in ((Family.A, Family.A_TILDE), (Family.B, Family.B_TILDE)):
        for i in range(1, params.g + 1):
            out += [Generator(left, i), Generator(right, i)]
    return out


@lru_cache(maxsize=64)
def abel_layout(params: GroupParams, kind: QuotientKind) -> AbelLayout:
    if kind is QuotientKind.MIXED_ABEL:
        params.require("eval_abel(abel-mixed)", n=1)
        hat_s = ([_S] if params.k >= 2 else []) + ([_TS] if params.n >= 2 else [])
        if params.g == 0:
            return AbelLayout(kind, tuple(hat_s + [_Z]), ())
        return AbelLayout(kind, tuple(_surface_interleaved(params)), tuple(hat_s))
    if kind is QuotientKind.PUNCTURED_ABEL:
        hat_s = [_S] if params.k >= 2 else []
        rest = list(params.generators({Family.ZETA})) + list(params.generators({Family.A}))
        rest += list(params.generators({Family.B}))
        if params.g == 0:
            return AbelLayout(kind, tuple(hat_s + rest), ())
        return AbelLayout(kind, tuple(rest), tuple(hat_s))
    raise ValidationError(f"'{kind.value}' is not an abelian quotient")


@dataclass(frozen=True)
class AbelElt(GroupElement):
    """Element of an abelianisation; torsion coordinates are kept reduced mod 2."""

    layout: AbelLayout
    free: tuple[int, ...]
    torsion2: tuple[int, ...]

    def __post_init__(self):
        if len(self.free) != len(self.layout.free) or len(self.torsion2) != len(self.layout.torsion):
            raise ValidationError("AbelElt coordinates do not match the layout")
        if any(t not in (0, 1) for t in self.torsion2):
            object.__setattr__(self, "torsion2", tuple(t % 2 for t in self.torsion2))

    @property
    def kind(self) -> QuotientKind:
        return self.layout.kind

    @classmethod
    def identity(cls, layout: AbelLayout) -> "AbelElt":
        return cls(layout, zeros(len(layout.free)), zeros(len(layout.torsion)))

    def coordinates(self) -> tuple[int, ...]:
        return self.torsion2 + self.free

    def normal_word(self) -> Word:
        return factor_word(
            list(zip(self.layout.torsion, self.torsion2)) + list(zip(self.layout.free, self.free))
        )

    def _mul(self, other: "AbelElt") -> "AbelElt":
        return abel_mul(self, other)

    def _inv(self) -> "AbelElt":
        return abel_inv(self)


def abel_mul(x: AbelElt, y: AbelElt) -> AbelElt:
    if x.layout != y.layout:
        raise ValidationError("Cannot combine elements of different abelianisations")
    return AbelElt(
        x.layout,
        vec_add(x.free, y.free),
        tuple((a + b) % 2 for a, b in zip(x.torsion2, y.torsion2)),
    )


def abel_inv(x: AbelElt) -> AbelElt:
    return AbelElt(x.layout, vec_neg(x.free), x.torsion2)
