"""Normal-form arithmetic in B_{k,n}(Sigma_g)/Gamma_3 and in H_Sigma.

Elements of the Gamma_3 quotient are written uniquely as

    s^p ts^q z^r  prod_i a_i^m_i ta_i^mt_i  prod_i b_i^n_i tb_i^nt_i

where s, ts, z (the common images of all sigma_i, tilde sigma_i, zeta_i)
are central, and the only nontrivial commutators of surface generators are
[a_i, b_i] = s^2, [ta_i, tb_i] = ts^2 and [a_i, tb_i] = [ta_i, b_i] = z.
Multiplying two normal forms moves the b-block of the left factor past the
a-block of the right one, which produces the central correction terms.
"""

from __future__ import annotations

from dataclasses import dataclass

from surfbraid.exceptions import ValidationError
from surfbraid.quotients.base import GroupElement, check_same_shape, factor_word
from surfbraid.utils import dot, vec_add, vec_neg, zeros
from surfbraid.words import Family, Generator, Word

SIGMA = Generator(Family.SIGMA, 0)
SIGMA_TILDE = Generator(Family.SIGMA_TILDE, 0)
ZETA = Generator(Family.ZETA, 0)


def _check_vectors(*vectors: tuple[int, ...]) -> None:
    lengths = {len(v) for v in vectors}
    if len(lengths) > 1:
        raise ValidationError(f"Surface blocks must share one genus, got lengths {sorted(lengths)}")


def _surface_blocks(m, mt, nv, nt) -> list[tuple[Generator, int]]:
    """Interleaved a/ta block, then interleaved b/tb block."""
    factors: list[tuple[Generator, int]] = []
    for i, (mi, mti) in enumerate(zip(m, mt), start=1):
        factors += [(Generator(Family.A, i), mi), (Generator(Family.A_TILDE, i), mti)]
    for i, (ni, nti) in enumerate(zip(nv, nt), start=1):
        factors += [(Generator(Family.B, i), ni), (Generator(Family.B_TILDE, i), nti)]
    return factors


@dataclass(frozen=True)
class Gamma3MixedElt(GroupElement):
    """Element of B_{k,n}(Sigma_g)/Gamma_3 in normal form."""

    p: int = 0
    q: int = 0
    r: int = 0
    m: tuple[int, ...] = ()
    mt: tuple[int, ...] = ()
    nv: tuple[int, ...] = ()
    nt: tuple[int, ...] = ()

    def __post_init__(self):
        _check_vectors(self.m, self.mt, self.nv, self.nt)

    @property
    def g(self) -> int:
        return len(self.m)

    @classmethod
    def identity(cls, g: int) -> "Gamma3MixedElt":
        z = zeros(g)
        return cls(0, 0, 0, z, z, z, z)

    @classmethod
    def central(cls, g: int, p: int = 0, q: int = 0, r: int = 0) -> "Gamma3MixedElt":
        z = zeros(g)
        return cls(p, q, r, z, z, z, z)

    def coordinates(self) -> tuple[int, ...]:
        return (self.p, self.q, self.r) + self.m + self.mt + self.nv + self.nt

    def normal_word(self) -> Word:
        return factor_word(
            [(SIGMA, self.p), (SIGMA_TILDE, self.q), (ZETA, self.r)]
            + _surface_blocks(self.m, self.mt, self.nv, self.nt)
        )

    def _mul(self, other: "Gamma3MixedElt") -> "Gamma3MixedElt":
        return mixed_mul(self, other)

    def _inv(self) -> "Gamma3MixedElt":
        return mixed_inv(self)


def mixed_mul(x: Gamma3MixedElt, y: Gamma3MixedElt) -> Gamma3MixedElt:
    check_same_shape(x.coordinates(), y.coordinates(), "Gamma3Mixed")
    return Gamma3MixedElt(
        p=x.p + y.p - 2 * dot(x.nv, y.m),
        q=x.q + y.q - 2 * dot(x.nt, y.mt),
        r=x.r + y.r - dot(x.nv, y.mt) - dot(x.nt, y.m),
        m=vec_add(x.m, y.m),
        mt=vec_add(x.mt, y.mt),
        nv=vec_add(x.nv, y.nv),
        nt=vec_add(x.nt, y.nt),
    )


def mixed_inv(x: Gamma3MixedElt) -> Gamma3MixedElt:
    return Gamma3MixedElt(
        p=-x.p - 2 * dot(x.nv, x.m),
        q=-x.q - 2 * dot(x.nt, x.mt),
        r=-x.r - dot(x.nv, x.mt) - dot(x.nt, x.m),
        m=vec_neg(x.m),
        mt=vec_neg(x.mt),
        nv=vec_neg(x.nv),
        nt=vec_neg(x.nt),
    )


def mixed_commutator(x: Gamma3MixedElt, y: Gamma3MixedElt) -> Gamma3MixedElt:
    """x y x^-1 y^-1; always central."""
    return x.commutator(y)


def is_central_mixed(x: Gamma3MixedElt) -> bool:
    return not any(x.m + x.mt + x.nv + x.nt)


@dataclass(frozen=True)
class HSigmaElt(GroupElement):
    """Element of H_Sigma, the Gamma_3 quotient with ts = 1."""

    p: int = 0
    r: int = 0
    m: tuple[int, ...] = ()
    mt: tuple[int, ...] = ()
    nv: tuple[int, ...] = ()
    nt: tuple[int, ...] = ()

    def __post_init__(self):
        _check_vectors(self.m, self.mt, self.nv, self.nt)

    @property
    def g(self) -> int:
        return len(self.m)

    @classmethod
    def identity(cls, g: int) -> "HSigmaElt":
        z = zeros(g)
        return cls(0, 0, z, z, z, z)

    def coordinates(self) -> tuple[int, ...]:
        return (self.p, self.r) + self.m + self.mt + self.nv + self.nt

    def normal_word(self) -> Word:
        return factor_word(
            [(SIGMA, self.p), (ZETA, self.r)]
            + _surface_blocks(self.m, self.mt, self.nv, self.nt)
        )

    def _mul(self, other: "HSigmaElt") -> "HSigmaElt":
        return hsigma_mul(self, other)

    def _inv(self) -> "HSigmaElt":
        return hsigma_inv(self)


def hsigma_mul(x: HSigmaElt, y: HSigmaElt) -> HSigmaElt:
    check_same_shape(x.coordinates(), y.coordinates(), "HSigma")
    return HSigmaElt(
        p=x.p + y.p - 2 * dot(x.nv, y.m),
        r=x.r + y.r - dot(x.nv, y.mt) - dot(x.nt, y.m),
        m=vec_add(x.m, y.m),
        mt=vec_add(x.mt, y.mt),
        nv=vec_add(x.nv, y.nv),
        nt=vec_add(x.nt, y.nt),
    )


def hsigma_inv(x: HSigmaElt) -> HSigmaElt:
    return HSigmaElt(
        p=-x.p - 2 * dot(x.nv, x.m),
        r=-x.r - dot(x.nv, x.mt) - dot(x.nt, x.m),
        m=vec_neg(x.m),
        mt=vec_neg(x.mt),
        nv=vec_neg(x.nv),
        nt=vec_neg(x.nt),
    )


def project_hsigma(x: Gamma3MixedElt) -> HSigmaElt:
    """Image under ts = 1: drop q."""
    return HSigmaElt(x.p, x.r, x.m, x.mt, x.nv, x.nt)
