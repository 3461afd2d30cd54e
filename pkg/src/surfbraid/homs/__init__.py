"""Comparison homomorphisms and the verification suites built on them."""

from surfbraid.homs.maps import (
    alpha_k,
    alpha_kn,
    classical_abel_disc,
    classical_abel_mixed,
    embed_gk,
    gamma_k,
    kernel_certificate_psi_bar,
    project_gk,
    psi_bar,
    psi_word,
)
from surfbraid.homs.report import CheckResult, VerificationReport, first_witness
from surfbraid.homs.suites import (
    SUITE_ORDER,
    run_suites,
    verify_diagram,
    verify_nonextension,
    verify_oracle_agreement,
    verify_relators,
    verify_rigidity,
)

__all__ = [
    "CheckResult",
    "SUITE_ORDER",
    "VerificationReport",
    "alpha_k",
    "alpha_kn",
    "classical_abel_disc",
    "classical_abel_mixed",
    "embed_gk",
    "first_witness",
    "gamma_k",
    "kernel_certificate_psi_bar",
    "project_gk",
    "psi_bar",
    "psi_word",
    "run_suites",
    "verify_diagram",
    "verify_nonextension",
    "verify_oracle_agreement",
    "verify_relators",
    "verify_rigidity",
]
