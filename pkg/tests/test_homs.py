"""Tests for the comparison homomorphisms and the verification suites."""

import random

import pytest

from surfbraid.exceptions import GeneratorError, RegimeError
from surfbraid.homs import (
    SUITE_ORDER,
    CheckResult,
    VerificationReport,
    alpha_kn,
    classical_abel_mixed,
    first_witness,
    gamma_k,
    kernel_certificate_psi_bar,
    project_gk,
    psi_bar,
    psi_word,
    run_suites,
    verify_diagram,
    verify_nonextension,
    verify_oracle_agreement,
    verify_relators,
    verify_rigidity,
)
from surfbraid.homs.maps import embed_gk
from surfbraid.homs.suites import mixed_grid, normal_form_word, random_mixed
from surfbraid.quotients import Gamma3MixedElt, GkSurfaceElt, PuncturedGamma3Elt, eval_mixed_gamma3
from surfbraid.words import GroupParams

SAMPLES = 40


class TestMaps:
    """Tests for the individual homomorphisms."""

    def test_psi_word_forgets_inner_strands(self, word):
        """psi drops s, a, b, z and keeps the tilde letters."""
        assert psi_word(word("s1 ta1 a1 z2 tb1 b1^-1")) == word("ta1 tb1")

    def test_psi_bar_keeps_outer_coordinates(self):
        """psi_bar reads off (q, mt, nt)."""
        x = Gamma3MixedElt(p=1, q=2, r=3, m=(4,), mt=(5,), nv=(6,), nt=(7,))
        assert psi_bar(x) == PuncturedGamma3Elt(p=2, qz=(), m=(5,), nv=(7,), tilde=True)

    def test_kernel_certificate(self):
        """Kernel elements come back as G_k(Sigma_g) elements."""
        x = Gamma3MixedElt(p=1, q=0, r=2, m=(3,), mt=(0,), nv=(-1,), nt=(0,))
        cert = kernel_certificate_psi_bar(x)
        assert cert == GkSurfaceElt(p=1, r=2, m=(3,), nv=(-1,))
        assert embed_gk(cert) == x

    def test_no_certificate_outside_kernel(self):
        """Elements with an outer component have no certificate."""
        assert kernel_certificate_psi_bar(Gamma3MixedElt.central(1, q=1)) is None

    def test_alpha_kn_on_centre(self, params, word):
        """alpha_{k,n}(s1 ts2 z1^-1) = s ts z^-1."""
        v = classical_abel_mixed(word("s1 ts2 z1^-1"), params)
        assert alpha_kn(v, params) == Gamma3MixedElt.central(1, p=1, q=1, r=-1)

    def test_alpha_kn_regime(self, params_g0, word):
        """alpha_{k,n} needs a surface of genus at least 1."""
        v = classical_abel_mixed(word("s1", params_g0), params_g0)
        with pytest.raises(RegimeError):
            alpha_kn(v, params_g0)

    def test_classical_alphabet(self, params, word):
        """r_{k,n} only accepts classical letters."""
        with pytest.raises(GeneratorError):
            classical_abel_mixed(word("a1"), params)

    def test_project_gk(self, params, word):
        """p_k counts sigma and zeta exponents."""
        assert project_gk(word("s1 s2 z1^-1 z3^2"), params) == (2, 1)

    def test_project_gk_regime(self, word):
        """p_k needs two inner strands."""
        params = GroupParams(1, 3, 1)
        with pytest.raises(RegimeError):
            project_gk(word("z1", params), params)

    def test_gamma_k(self, params):
        """gamma_k lands in the centre of G_k(Sigma_g)."""
        assert gamma_k((2, -1), params) == GkSurfaceElt(p=2, r=-1, m=(0,), nv=(0,))


class TestReport:
    """Tests for VerificationReport and first_witness."""

    def test_check_and_skip(self, params):
        """A witness means failure; skips never fail a report."""
        report = VerificationReport("demo", params, 0)
        report.check("demo.b", None)
        report.skip("demo.c", "not applicable")
        assert report.passed
        report.check("demo.a", "x = 1")
        assert not report.passed
        assert [c.check_id for c in report.failures] == ["demo.a"]
        assert [c.check_id for c in report.sorted().checks] == ["demo.a", "demo.b", "demo.c"]

    def test_to_dict(self, params):
        """JSON form carries params and per-check status."""
        report = VerificationReport("demo", params, 7)
        report.check("demo.a", None, "3 words")
        data = report.to_dict()
        assert data["params"] == {"k": 3, "n": 3, "g": 1}
        assert data["seed"] == 7
        assert data["checks"] == [CheckResult("demo.a", "pass", None, "3 words").to_dict()]

    def test_first_witness(self):
        """The first failing case wins."""
        assert first_witness([(True, "a"), (False, "b"), (False, "c")]) == "b"
        assert first_witness([(True, "a")]) is None


class TestSuitesPass:
    """Every suite passes on the default triple and on genus 2."""

    @pytest.mark.parametrize("g", [1, 2])
    def test_relators(self, g):
        """Each relator dies in each quotient."""
        assert verify_relators(GroupParams(3, 3, g)).passed

    @pytest.mark.parametrize("g", [1, 2])
    def test_diagram(self, g):
        """The comparison diagrams commute and are exact."""
        report = verify_diagram(GroupParams(3, 3, g), seed=1, samples=SAMPLES)
        assert report.passed, report.failures

    @pytest.mark.parametrize("g", [1, 2])
    def test_rigidity(self, g):
        """Centre, kernel and collapse facts hold."""
        report = verify_rigidity(GroupParams(3, 3, g), seed=1, samples=SAMPLES)
        assert report.passed, report.failures

    def test_nonextension(self, params):
        """All non-extension facts hold for k >= 3."""
        report = verify_nonextension(params)
        assert report.passed, report.failures
        statuses = {c.check_id: c.status for c in report.checks}
        assert statuses["nonextension.k1-injective"] == "skip"
        assert statuses["nonextension.length-extends"] == "pass"

    def test_nonextension_k1(self):
        """For k = 1 the zetas survive in the abelianisation."""
        report = verify_nonextension(GroupParams(1, 2, 1))
        statuses = {c.check_id: c.status for c in report.checks}
        assert report.passed, report.failures
        assert statuses["nonextension.k1-injective"] == "pass"
        assert statuses["nonextension.sigma-square"] == "skip"

    def test_nonextension_k2(self):
        """For k = 2, s1^2 is killed by the abelianisation but not by p_k."""
        report = verify_nonextension(GroupParams(2, 3, 1))
        statuses = {c.check_id: c.status for c in report.checks}
        assert statuses["nonextension.sigma-square"] == "pass"
        assert statuses["nonextension.length-extends"] == "skip"

    @pytest.mark.parametrize("g", [0, 1])
    def test_oracle_agreement(self, g):
        """Hand-coded arithmetic and the oracle agree."""
        report = verify_oracle_agreement(GroupParams(3, 3, g), seed=3, samples=SAMPLES)
        assert report.passed, report.failures

    def test_oracle_grid_checks_are_exhaustive(self, params):
        """The inverse and product grids are swept in full, not sampled."""
        report = verify_oracle_agreement(params, seed=3, samples=SAMPLES)
        details = {c.check_id: c.detail for c in report.checks}
        assert details["oracle.inverse-grid"] == f"{3 ** 7} grid points"
        assert details["oracle.mul-grid"] == f"{81 ** 2} pairs"
        assert details["oracle.mul-sampled"] == f"{SAMPLES} pairs"

    def test_hsigma_kernel_sweeps_grid(self, params):
        report = verify_rigidity(params, seed=1, samples=SAMPLES)
        detail = {c.check_id: c.detail for c in report.checks}["rigidity.hsigma.kernel"]
        assert detail == f"{3 ** 7} grid points, {SAMPLES} elements"

    def test_run_suites_all(self, params):
        """Reports come back in suite order with sorted checks."""
        reports = run_suites(SUITE_ORDER, params, seed=0, samples=10)
        assert [r.suite for r in reports] == list(SUITE_ORDER)
        assert all(r.passed for r in reports)
        for r in reports:
            ids = [c.check_id for c in r.checks]
            assert ids == sorted(ids)


class TestSuitesDetectFaults:
    """Broken maps are caught with a witness."""

    def test_wrong_alpha(self, params):
        """An alpha that drops ts and z fails the diagram square."""

        def wrong(v, p):
            return Gamma3MixedElt.central(p.g, p=v.free[0])

        report = verify_diagram(params, samples=SAMPLES, alpha=wrong)
        failed = {c.check_id: c for c in report.failures}
        assert "diagram.alpha-rho.generators" in failed
        assert "ts" in failed["diagram.alpha-rho.generators"].witness

    def test_wrong_centre_predicate(self, params):
        """Claiming everything is central fails the centre check."""
        report = verify_rigidity(params, samples=SAMPLES, is_central=lambda x: True)
        assert "rigidity.centre" in [c.check_id for c in report.failures]


class TestRegimes:
    """Tests for parameter regimes of the suites."""

    def test_single_suite_raises(self, params_g0):
        """A lone suite outside its regime is an error."""
        with pytest.raises(RegimeError):
            run_suites(["diagram"], params_g0)

    def test_several_suites_skip(self, params_g0):
        """With several suites, an out-of-regime suite is recorded as a skip."""
        reports = run_suites(["diagram", "rigidity"], params_g0, samples=5)
        for report, name in zip(reports, ["diagram", "rigidity"]):
            assert [c.check_id for c in report.checks] == [f"{name}.regime"]
            assert report.checks[0].status == "skip"
            assert report.passed

    def test_nonextension_needs_genus(self, params_g0):
        """The non-extension facts are about surfaces."""
        with pytest.raises(RegimeError):
            verify_nonextension(params_g0)


class TestDeterminism:
    """Tests for seeded reproducibility."""

    def test_same_seed_same_report(self, params):
        """Reports depend only on params, seed and samples."""
        first = verify_rigidity(params, seed=5, samples=10).to_dict()
        assert verify_rigidity(params, seed=5, samples=10).to_dict() == first

    def test_normal_form_word_evaluates_back(self, params):
        """The word printed for an element evaluates to that element."""
        rng = random.Random(11)
        for _ in range(50):
            x = random_mixed(rng, params.g)
            assert eval_mixed_gamma3(normal_form_word(x), params) == x


class TestMixedGrid:
    """Tests for mixed_grid."""

    @pytest.mark.parametrize("g,size", [(0, 27), (1, 3 ** 7), (2, 3 ** 7)])
    def test_size(self, g, size):
        """The grid lives on the first handle only."""
        grid = list(mixed_grid(g))
        assert len(grid) == size
        assert all(x.g == g for x in grid)
        assert all(not any(x.m[1:] + x.mt[1:] + x.nv[1:] + x.nt[1:]) for x in grid)

    def test_handle_subgrid(self, params):
        """central=False fixes p = q = r = 0."""
        sub = list(mixed_grid(params.g, central=False))
        assert len(sub) == 81
        assert all((x.p, x.q, x.r) == (0, 0, 0) for x in sub)
        assert Gamma3MixedElt.identity(1) in sub


class TestFullSampleCounts:
    """The suites at their default sample count of 1000."""

    def test_all_suites_default_triple(self, params):
        reports = run_suites(SUITE_ORDER, params, seed=0, samples=1000)
        assert all(r.passed for r in reports), [c for r in reports for c in r.failures]
        oracle = {c.check_id: c.detail for c in reports[-1].checks}
        assert oracle["oracle.pairs"] == "1000 pairs"

    def test_oracle_agreement_genus_zero(self, params_g0):
        report = verify_oracle_agreement(params_g0, seed=0, samples=1000)
        assert report.passed, report.failures
