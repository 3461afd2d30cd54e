"""Evaluation maps from words into the quotient groups."""

from __future__ import annotations

from surfbraid.exceptions import ValidationError
from surfbraid.presentations import QuotientKind
from surfbraid.quotients.abelian import AbelElt, abel_layout
from surfbraid.quotients.base import BaseEvaluator, Evaluator, log_evaluation
from surfbraid.quotients.mixed import Gamma3MixedElt, HSigmaElt
from surfbraid.quotients.punctured import GkSurfaceElt, PuncturedGamma3Elt
from surfbraid.utils import unit, zeros
from surfbraid.words import (
    ALL_FAMILIES,
    CLASSICAL,
    INNER,
    OUTER,
    Family,
    Generator,
    GroupParams,
    Word,
)


def _block(gen: Generator, family: Family, size: int) -> tuple[int, ...]:
    if gen.family is family:
        return unit(size, gen.index - 1)
    return zeros(size)


class MixedGamma3Evaluator(BaseEvaluator):
    """rho_{k,n}: B_{k,n}(Sigma_g) -> B_{k,n}(Sigma_g)/Gamma_3."""

    name = QuotientKind.MIXED_GAMMA3.value
    alphabet = ALL_FAMILIES
    collapsed = CLASSICAL
    min_k = 3
    min_n = 3

    def identity(self) -> Gamma3MixedElt:
        return Gamma3MixedElt.identity(self.params.g)

    def _image(self, gen: Generator) -> Gamma3MixedElt:
        g = self.params.g
        return Gamma3MixedElt(
            p=int(gen.family is Family.SIGMA),
            q=int(gen.family is Family.SIGMA_TILDE),
            r=int(gen.family is Family.ZETA),
            m=_block(gen, Family.A, g),
            mt=_block(gen, Family.A_TILDE, g),
            nv=_block(gen, Family.B, g),
            nt=_block(gen, Family.B_TILDE, g),
        )


class HSigmaEvaluator(BaseEvaluator):
    """B_{k,n}(Sigma_g) -> H_Sigma; every tilde sigma_i maps to 1."""

    name = QuotientKind.HSIGMA.value
    alphabet = ALL_FAMILIES
    collapsed = CLASSICAL
    min_k = 3
    min_n = 3

    def identity(self) -> HSigmaElt:
        return HSigmaElt.identity(self.params.g)

    def _image(self, gen: Generator) -> HSigmaElt:
        g = self.params.g
        return HSigmaElt(
            p=int(gen.family is Family.SIGMA),
            r=int(gen.family is Family.ZETA),
            m=_block(gen, Family.A, g),
            mt=_block(gen, Family.A_TILDE, g),
            nv=_block(gen, Family.B, g),
            nt=_block(gen, Family.B_TILDE, g),
        )


class PuncturedGamma3Evaluator(BaseEvaluator):
    """rho_k: B_k(Sigma_{g,n}) -> B_k(Sigma_{g,n})/Gamma_3; the zeta_i stay distinct."""

    name = QuotientKind.PUNCTURED_GAMMA3.value
    alphabet = INNER
    collapsed = frozenset({Family.SIGMA})
    min_k = 3

    def identity(self) -> PuncturedGamma3Elt:
        return PuncturedGamma3Elt.identity(self.params.n, self.params.g)

    def _image(self, gen: Generator) -> PuncturedGamma3Elt:
        g = self.params.g
        return PuncturedGamma3Elt(
            p=int(gen.family is Family.SIGMA),
            qz=_block(gen, Family.ZETA, self.params.n),
            m=_block(gen, Family.A, g),
            nv=_block(gen, Family.B, g),
        )


class BaseGamma3Evaluator(BaseEvaluator):
    """B_n(Sigma_g) -> B_n(Sigma_g)/Gamma_3, on the tilde alphabet."""

    name = QuotientKind.BASE_GAMMA3.value
    alphabet = OUTER
    collapsed = frozenset({Family.SIGMA_TILDE})
    min_n = 3

    def identity(self) -> PuncturedGamma3Elt:
        return PuncturedGamma3Elt.identity(0, self.params.g, tilde=True)

    def _image(self, gen: Generator) -> PuncturedGamma3Elt:
        g = self.params.g
        return PuncturedGamma3Elt(
            p=int(gen.family is Family.SIGMA_TILDE),
            qz=(),
            m=_block(gen, Family.A_TILDE, g),
            nv=_block(gen, Family.B_TILDE, g),
            tilde=True,
        )


class GkSurfaceEvaluator(BaseEvaluator):
    """Phi_k: B_k(Sigma_{g,n}) -> G_k(Sigma_g); every zeta_i maps to z."""

    name = QuotientKind.GK_SURFACE.value
    alphabet = INNER
    collapsed = frozenset({Family.SIGMA, Family.ZETA})
    min_k = 3
    min_n = 3
    min_g = 1

    def identity(self) -> GkSurfaceElt:
        return GkSurfaceElt.identity(self.params.g)

    def _image(self, gen: Generator) -> GkSurfaceElt:
        g = self.params.g
        return GkSurfaceElt(
            p=int(gen.family is Family.SIGMA),
            r=int(gen.family is Family.ZETA),
            m=_block(gen, Family.A, g),
            nv=_block(gen, Family.B, g),
        )


class AbelEvaluator(BaseEvaluator):
    """Abelianisation of B_{k,n}(Sigma_g) or of B_k(Sigma_{g,n})."""

    def __init__(self, params: GroupParams, kind: QuotientKind):
        self.name = kind.value
        if kind is QuotientKind.MIXED_ABEL:
            self.alphabet = ALL_FAMILIES
            self.collapsed = CLASSICAL
        else:
            self.alphabet = INNER
            self.collapsed = frozenset({Family.SIGMA})
        super().__init__(params)
        self.layout = abel_layout(params, kind)

    def identity(self) -> AbelElt:
        return AbelElt.identity(self.layout)

    def _image(self, gen: Generator) -> AbelElt:
        free = zeros(len(self.layout.free))
        torsion = zeros(len(self.layout.torsion))
        slot = self.layout.slot(gen)
        if slot is not None:
            part, pos = slot
            if part == "free":
                free = unit(len(free), pos)
            else:
                torsion = unit(len(torsion), pos)
        return AbelElt(self.layout, free, torsion)


_EVALUATORS = {
    QuotientKind.MIXED_GAMMA3: MixedGamma3Evaluator,
    QuotientKind.HSIGMA: HSigmaEvaluator,
    QuotientKind.PUNCTURED_GAMMA3: PuncturedGamma3Evaluator,
    QuotientKind.BASE_GAMMA3: BaseGamma3Evaluator,
    QuotientKind.GK_SURFACE: GkSurfaceEvaluator,
}


def evaluator_for(kind: QuotientKind, params: GroupParams) -> Evaluator:
    """The evaluation map of a quotient kind (RegimeError outside its regime)."""
    if kind in (QuotientKind.MIXED_ABEL, QuotientKind.PUNCTURED_ABEL):
        return AbelEvaluator(params, kind)
    if kind in _EVALUATORS:
        return _EVALUATORS[kind](params)
    raise ValidationError(
        f"'{kind.value}' is a full braid group; it has no normal-form arithmetic"
    )


def evaluate(w: Word, params: GroupParams, kind: QuotientKind):
    result = evaluator_for(kind, params)(w)
    log_evaluation(kind.value, w, result)
    return result


def eval_mixed_gamma3(w: Word, params: GroupParams) -> Gamma3MixedElt:
    return MixedGamma3Evaluator(params)(w)


def eval_hsigma(w: Word, params: GroupParams) -> HSigmaElt:
    return HSigmaEvaluator(params)(w)


def eval_punctured_gamma3(w: Word, params: GroupParams) -> PuncturedGamma3Elt:
    return PuncturedGamma3Evaluator(params)(w)


def eval_base_gamma3(w: Word, params: GroupParams) -> PuncturedGamma3Elt:
    return BaseGamma3Evaluator(params)(w)


def eval_gk_surface(w: Word, params: GroupParams) -> GkSurfaceElt:
    return GkSurfaceEvaluator(params)(w)


def eval_abel(w: Word, params: GroupParams, kind: QuotientKind) -> AbelElt:
    return AbelEvaluator(params, kind)(w)
