"""The homomorphisms between quotient groups that make up the comparison diagrams.

Naming: rho is the Gamma_3 evaluation of the mixed group, Phi_k that of
B_k(Sigma_{g,n}) into G_k(Sigma_g), r_{k,n} and r_k the abelianisations of the
classical groups B_{k,n} and B_k(D_n), and p_k: B_k(D_n) -> G_k = Z^2.
"""

from __future__ import annotations

from dataclasses import replace

from surfbraid.exceptions import ValidationError
from surfbraid.presentations import QuotientKind
from surfbraid.quotients import (
    AbelElt,
    Gamma3MixedElt,
    GkSurfaceElt,
    PuncturedGamma3Elt,
    abel_layout,
    eval_abel,
)
from surfbraid.words import (
    CLASSICAL,
    INNER,
    Family,
    GroupParams,
    Word,
    check_alphabet,
)

DISC = frozenset({Family.SIGMA, Family.ZETA})


def psi_word(w: Word) -> Word:
    """Forget the first k strands: S, AB, Z map to 1, tilde generators are fixed."""
    return w.substitute(lambda gen: Word() if gen.family in INNER else Word.letter(gen))


def psi_bar(x: Gamma3MixedElt) -> PuncturedGamma3Elt:
    """Induced map to B_n(Sigma_g)/Gamma_3: keep (q, mt, nt)."""
    return PuncturedGamma3Elt(p=x.q, qz=(), m=x.mt, nv=x.nt, tilde=True)


def kernel_certificate_psi_bar(x: Gamma3MixedElt) -> GkSurfaceElt | None:
    """The element of G_k(Sigma_g) equal to x, if x lies in the kernel of psi_bar."""
    if not psi_bar(x).is_identity():
        return None
    return GkSurfaceElt(p=x.p, r=x.r, m=x.m, nv=x.nv)


def embed_gk(y: GkSurfaceElt) -> Gamma3MixedElt:
    """G_k(Sigma_g) as the subgroup generated by s, z and AB of the mixed quotient."""
    zeros = (0,) * y.g
    return Gamma3MixedElt(p=y.p, q=0, r=y.r, m=y.m, mt=zeros, nv=y.nv, nt=zeros)


def classical_abel_mixed(w: Word, params: GroupParams) -> AbelElt:
    """r_{k,n}: B_{k,n} -> B_{k,n}/Gamma_2, free on s, ts, z."""
    check_alphabet(w, CLASSICAL, "B_{k,n}")
    return eval_abel(w, replace(params, g=0), QuotientKind.MIXED_ABEL)


def classical_abel_disc(w: Word, params: GroupParams) -> AbelElt:
    """r_k: B_k(D_n) -> B_k(D_n)/Gamma_2, free on s and the z_i."""
    check_alphabet(w, DISC, "B_k(D_n)")
    return eval_abel(w, replace(params, g=0), QuotientKind.PUNCTURED_ABEL)


def project_gk(w: Word, params: GroupParams) -> tuple[int, int]:
    """p_k: B_k(D_n) -> G_k = Z^2, (sigma exponent sum, zeta exponent sum)."""
    params.require("p_k", k=2)
    check_alphabet(w, DISC, "B_k(D_n)")
    s = sum(exp for gen, exp in w.letters if gen.family is Family.SIGMA)
    z = sum(exp for gen, exp in w.letters if gen.family is Family.ZETA)
    return s, z


def _check_layout(v: AbelElt, params: GroupParams, kind: QuotientKind) -> None:
    expected = abel_layout(replace(params, g=0), kind)
    if v.layout != expected:
        raise ValidationError(f"Expected an element of the classical {kind.value} abelianisation")


def alpha_kn(v: AbelElt, params: GroupParams) -> Gamma3MixedElt:
    """alpha_{k,n}: B_{k,n}/Gamma_2 = Z^3 -> B_{k,n}(Sigma_g)/Gamma_3, onto the centre."""
    params.require("alpha_kn", k=3, n=3, g=1)
    _check_layout(v, params, QuotientKind.MIXED_ABEL)
    s, ts, z = v.free
    return Gamma3MixedElt.central(params.g, p=s, q=ts, r=z)


def alpha_k(v: AbelElt, params: GroupParams) -> PuncturedGamma3Elt:
    """alpha_k: B_k(D_n)/Gamma_2 = Z^{1+n} -> B_k(Sigma_{g,n})/Gamma_3, onto the centre."""
    params.require("alpha_k", k=3, g=1)
    _check_layout(v, params, QuotientKind.PUNCTURED_ABEL)
    s, *zs = v.free
    zeros = (0,) * params.g
    return PuncturedGamma3Elt(p=s, qz=tuple(zs), m=zeros, nv=zeros)


def gamma_k(v: tuple[int, int], params: GroupParams) -> GkSurfaceElt:
    """gamma_k: G_k = Z^2 -> G_k(Sigma_g), (s, z) to s^s z^z; image is the centre."""
    params.require("gamma_k", k=3, n=3, g=1)
    s, z = v
    return GkSurfaceElt(p=s, r=z, m=(0,) * params.g, nv=(0,) * params.g)
