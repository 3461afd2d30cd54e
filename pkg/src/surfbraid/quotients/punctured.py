"""Normal-form arithmetic in B_k(Sigma_{g,n})/Gamma_3 and in G_k(Sigma_g).

B_k(Sigma_{g,n})/Gamma_3 elements are s^p prod z_i^q_i prod a_i^m_i prod b_i^n_i
with s and every z_i central and [a_i, b_i] = s^2. Collapsing all z_i to a
single z gives M_k(Sigma_g), which is G_k(Sigma_g): s^p z^r prod a^m prod b^n.

The same element type, with tilde printing and an empty z block, serves as
B_n(Sigma_g)/Gamma_3 (ts^q prod ta^mt prod tb^nt).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from surfbraid.exceptions import ValidationError
from surfbraid.quotients.base import GroupElement, check_same_shape, factor_word
from surfbraid.utils import dot, vec_add, vec_neg, zeros
from surfbraid.words import Family, Generator, Word

SIGMA = Generator(Family.SIGMA, 0)
SIGMA_TILDE = Generator(Family.SIGMA_TILDE, 0)
ZETA = Generator(Family.ZETA, 0)


def _ab_factors(m, nv, tilde: bool = False) -> list[tuple[Generator, int]]:
    fa, fb = (Family.A_TILDE, Family.B_TILDE) if tilde else (Family.A, Family.B)
    return [(Generator(fa, i), mi) for i, mi in enumerate(m, start=1)] + [
        (Generator(fb, i), ni) for i, ni in enumerate(nv, start=1)
    ]


@dataclass(frozen=True)
class PuncturedGamma3Elt(GroupElement):
    """Element of B_k(Sigma_{g,n})/Gamma_3 in normal form.

    With tilde=True the element lives in B_n(Sigma_g)/Gamma_3 and prints with
    the tilde alphabet (its z block is then empty).
    """

    p: int = 0
    qz: tuple[int, ...] = ()
    m: tuple[int, ...] = ()
    nv: tuple[int, ...] = ()
    tilde: bool = field(default=False)

    def __post_init__(self):
        if len(self.m) != len(self.nv):
            raise ValidationError(
                f"Surface blocks must share one genus, got lengths {len(self.m)} and {len(self.nv)}"
            )
        if self.tilde and self.qz:
            raise ValidationError("Tilde elements have no zeta coordinates")

    @property
    def g(self) -> int:
        return len(self.m)

    @classmethod
    def identity(cls, n: int, g: int, tilde: bool = False) -> "PuncturedGamma3Elt":
        return cls(0, zeros(n), zeros(g), zeros(g), tilde)

    def coordinates(self) -> tuple[int, ...]:
        return (self.p,) + self.qz + self.m + self.nv

    def normal_word(self) -> Word:
        if self.tilde:
            return factor_word([(SIGMA_TILDE, self.p)] + _ab_factors(self.m, self.nv, tilde=True))
        return factor_word(
            [(SIGMA, self.p)]
            + [(Generator(Family.ZETA, i), qi) for i, qi in enumerate(self.qz, start=1)]
            + _ab_factors(self.m, self.nv)
        )

    def _mul(self, other: "PuncturedGamma3Elt") -> "PuncturedGamma3Elt":
        return punctured_mul(self, other)

    def _inv(self) -> "PuncturedGamma3Elt":
        return punctured_inv(self)


def punctured_mul(x: PuncturedGamma3Elt, y: PuncturedGamma3Elt) -> PuncturedGamma3Elt:
    check_same_shape(x.coordinates(), y.coordinates(), "PuncturedGamma3")
    if x.tilde != y.tilde:
        raise ValidationError("Cannot combine punctured and base Gamma3 elements")
    return PuncturedGamma3Elt(
        p=x.p + y.p - 2 * dot(x.nv, y.m),
        qz=vec_add(x.qz, y.qz),
        m=vec_add(x.m, y.m),
        nv=vec_add(x.nv, y.nv),
        tilde=x.tilde,
    )


def punctured_inv(x: PuncturedGamma3Elt) -> PuncturedGamma3Elt:
    return PuncturedGamma3Elt(
        p=-x.p - 2 * dot(x.nv, x.m),
        qz=vec_neg(x.qz),
        m=vec_neg(x.m),
        nv=vec_neg(x.nv),
        tilde=x.tilde,
    )


def is_central_punctured(x: PuncturedGamma3Elt) -> bool:
    """Central iff the surface blocks vanish (centre is s and the z_i)."""
    return not any(x.m + x.nv)


@dataclass(frozen=True)
class GkSurfaceElt(GroupElement):
    """Element of G_k(Sigma_g): s^p z^r prod a_i^m_i prod b_i^n_i."""

    p: int = 0
    r: int = 0
    m: tuple[int, ...] = ()
    nv: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.m) != len(self.nv):
            raise ValidationError(
                f"Surface blocks must share one genus, got lengths {len(self.m)} and {len(self.nv)}"
            )

    @property
    def g(self) -> int:
        return len(self.m)

    @classmethod
    def identity(cls, g: int) -> "GkSurfaceElt":
        return cls(0, 0, zeros(g), zeros(g))

    def coordinates(self) -> tuple[int, ...]:
        return (self.p, self.r) + self.m + self.nv

    def normal_word(self) -> Word:
        return factor_word([(SIGMA, self.p), (ZETA, self.r)] + _ab_factors(self.m, self.nv))

    def _mul(self, other: "GkSurfaceElt") -> "GkSurfaceElt":
        return gk_mul(self, other)

    def _inv(self) -> "GkSurfaceElt":
        return gk_inv(self)


def gk_mul(x: GkSurfaceElt, y: GkSurfaceElt) -> GkSurfaceElt:
    check_same_shape(x.coordinates(), y.coordinates(), "GkSurface")
    return GkSurfaceElt(
        p=x.p + y.p - 2 * dot(x.nv, y.m),
        r=x.r + y.r,
        m=vec_add(x.m, y.m),
        nv=vec_add(x.nv, y.nv),
    )


def gk_inv(x: GkSurfaceElt) -> GkSurfaceElt:
    return GkSurfaceElt(
        p=-x.p - 2 * dot(x.nv, x.m),
        r=-x.r,
        m=vec_neg(x.m),
        nv=vec_neg(x.nv),
    )


def mk_reduce(x: PuncturedGamma3Elt) -> GkSurfaceElt:
    """M_k(Sigma_g) -> G_k(Sigma_g): identify all z_i, so r is the sum of the q_i."""
    if x.tilde:
        raise ValidationError("mk_reduce takes B_k(Sigma_{g,n})/Gamma_3 elements")
    return GkSurfaceElt(x.p, sum(x.qz), x.m, x.nv)
