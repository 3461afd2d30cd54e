"""Normal-form arithmetic in the quotient groups."""

from surfbraid.quotients.abelian import AbelElt, AbelLayout, abel_layout, abel_inv, abel_mul
from surfbraid.quotients.base import BaseEvaluator, Evaluator, GroupElement
from surfbraid.quotients.evaluate import (
    evaluate,
    eval_abel,
    eval_base_gamma3,
    eval_gk_surface,
    eval_hsigma,
    eval_mixed_gamma3,
    eval_punctured_gamma3,
    evaluator_for,
)
from surfbraid.quotients.mixed import (
    Gamma3MixedElt,
    HSigmaElt,
    hsigma_inv,
    hsigma_mul,
    is_central_mixed,
    mixed_commutator,
    mixed_inv,
    mixed_mul,
    project_hsigma,
)
from surfbraid.quotients.punctured import (
    GkSurfaceElt,
    PuncturedGamma3Elt,
    gk_inv,
    gk_mul,
    is_central_punctured,
    mk_reduce,
    punctured_inv,
    punctured_mul,
)

__all__ = [
    "AbelElt",
    "AbelLayout",
    "BaseEvaluator",
    "Evaluator",
    "Gamma3MixedElt",
    "GkSurfaceElt",
    "GroupElement",
    "HSigmaElt",
    "PuncturedGamma3Elt",
    "abel_inv",
    "abel_layout",
    "abel_mul",
    "evaluate",
    "eval_abel",
    "eval_base_gamma3",
    "eval_gk_surface",
    "eval_hsigma",
    "eval_mixed_gamma3",
    "eval_punctured_gamma3",
    "evaluator_for",
    "gk_inv",
    "gk_mul",
    "hsigma_inv",
    "hsigma_mul",
    "is_central_mixed",
    "is_central_punctured",
    "mixed_commutator",
    "mixed_inv",
    "mixed_mul",
    "mk_reduce",
    "project_hsigma",
    "punctured_inv",
    "punctured_mul",
]
