"""Tests for presentations, relator labels and the outer action."""

import pytest

from surfbraid.exceptions import GeneratorError, RegimeError, ValidationError
from surfbraid.presentations import (
    Presentation,
    QuotientKind,
    act_outer,
    presentation_base,
    presentation_mixed,
    presentation_punctured,
    presentation_quotient,
)
from surfbraid.quotients import evaluator_for
from surfbraid.words import (
    INNER,
    OUTER,
    Family,
    Generator,
    GroupParams,
    Word,
    free_reduce,
    parse_word,
    random_word,
)


def _relator(pres: Presentation, label: str) -> str:
    return str(dict(pres)[label])


def _names(pres: Presentation) -> list[str]:
    return [gen.name for gen in pres.generators]


class TestPresentationPunctured:
    """Tests for presentation_punctured."""

    def test_surface_relation_encoding(self):
        """a_1 s_1 b_1 = s_1 b_1 s_1 a_1 s_1 is stored as lhs rhs^-1."""
        pres = presentation_punctured(GroupParams(3, 1, 1))
        assert _relator(pres, "a.5[i=1]") == "a1 s1 b1 s1^-1 a1^-1 s1^-1 b1^-1 s1^-1"

    def test_far_commutation_single_pair(self):
        """For k = 4 the only far pair is (s1, s3)."""
        pres = presentation_punctured(GroupParams(4, 0, 0))
        far = [label for label, _ in pres if label.startswith("a.1")]
        assert far == ["a.1[i=1,j=3]"]
        assert _relator(pres, "a.1[i=1,j=3]") == "s1 s3 s1^-1 s3^-1"

    def test_k1_suppresses_sigma(self):
        """With one strand the group is free on the zeta_i."""
        pres = presentation_punctured(GroupParams(1, 2, 0))
        assert _names(pres) == ["z1", "z2"]
        assert pres.relators == ()

    def test_relators_in_section_order(self, params):
        """Sections appear in ascending order."""
        sections = [label.split("[")[0] for label, _ in presentation_punctured(params)]
        assert sections == sorted(sections)

    def test_deterministic(self, params):
        """Two calls give identical relator lists."""
        assert presentation_punctured(params) == presentation_punctured(GroupParams(3, 3, 1))


class TestPresentationBase:
    """Tests for presentation_base."""

    def test_two_strands_no_surface(self):
        """n = 2, g = 0: one tilde sigma and no relators."""
        pres = presentation_base(GroupParams(3, 2, 0))
        assert _names(pres) == ["ts1"]
        assert pres.relators == ()

    def test_one_strand(self):
        """n = 1, g = 1: free on ta1, tb1."""
        pres = presentation_base(GroupParams(3, 1, 1))
        assert _names(pres) == ["ta1", "tb1"]
        assert pres.relators == ()

    def test_requires_n(self):
        """There is no base group without outer strands."""
        with pytest.raises(RegimeError):
            presentation_base(GroupParams(3, 0, 1))

    def test_labels_use_b_sections(self, params):
        """Base relators are labelled (b.*)."""
        assert all(label.startswith("b.") for label, _ in presentation_base(params))


class TestPresentationMixed:
    """Tests for presentation_mixed."""

    def test_classical_generators(self, params_g0):
        """For g = 0 the generators are S, tilde S and Z."""
        pres = presentation_mixed(params_g0)
        assert _names(pres) == ["s1", "s2", "ts1", "ts2", "z1", "z2", "z3"]

    def test_classical_sections(self, params_g0):
        """For g = 0 only braid, zeta and (c.1), (c.3) relations remain."""
        sections = {label.split("[")[0] for label, _ in presentation_mixed(params_g0)}
        assert "c.3.1" in sections and "c.3.2" in sections
        assert all(s[0] in "ab" or s in {"c.1", "c.3.1", "c.3.2", "c.3.3"} for s in sections)

    def test_action_relator_label(self, params):
        """(c.7.1) reads ta1 b1 ta1^-1 = b1 z1."""
        pres = presentation_mixed(params)
        assert _relator(pres, "c.7.1[ta1,b1]") == "ta1 b1 ta1^-1 z1^-1 b1^-1"

    def test_every_generator_is_used(self, params):
        """Every generator of Omega appears in some relator."""
        pres = presentation_mixed(params)
        used = set().union(*(rel.generators() for rel in pres.relators))
        assert used == set(pres.generators)

    def test_requires_outer_strand(self):
        """presentation_mixed needs n >= 1."""
        with pytest.raises(RegimeError):
            presentation_mixed(GroupParams(3, 0, 1))

    @pytest.mark.parametrize("k", [3, 4])
    @pytest.mark.parametrize("n", [3, 4])
    @pytest.mark.parametrize("g", [0, 1, 2])
    def test_relators_die_in_gamma3(self, k, n, g):
        """Every relator is the identity in the Gamma_3 quotient."""
        p = GroupParams(k, n, g)
        rho = evaluator_for(QuotientKind.MIXED_GAMMA3, p)
        for label, rel in presentation_mixed(p):
            assert rho(rel).is_identity(), label

    @pytest.mark.parametrize("k", [3, 4])
    @pytest.mark.parametrize("g", [0, 1, 2])
    def test_punctured_relators_die_in_gamma3(self, k, g):
        """Every relator of B_k(Sigma_{g,n}) dies in its Gamma_3 quotient."""
        p = GroupParams(k, 3, g)
        rho = evaluator_for(QuotientKind.PUNCTURED_GAMMA3, p)
        for label, rel in presentation_punctured(p):
            assert rho(rel).is_identity(), label


class TestPresentationValidation:
    """Tests for the Presentation dataclass."""

    def test_relator_outside_generators(self, params):
        """A relator letter must be a generator."""
        s1 = Generator(Family.SIGMA, 1)
        with pytest.raises(GeneratorError):
            Presentation(params, None, (s1,), (Word.letter(Generator(Family.A, 1)),))

    def test_label_count(self, params):
        """Labels, when given, match the relators one to one."""
        s1 = Generator(Family.SIGMA, 1)
        with pytest.raises(ValidationError):
            Presentation(params, None, (s1,), (Word.letter(s1, 2),), ("x", "y"))

    def test_duplicate_generators(self, params):
        """Generators are distinct."""
        s1 = Generator(Family.SIGMA, 1)
        with pytest.raises(ValidationError):
            Presentation(params, None, (s1, s1), ())

    def test_default_labels(self, params):
        """Unlabelled relators are r1, r2, ..."""
        s1 = Generator(Family.SIGMA, 1)
        pres = Presentation(params, None, (s1,), (Word.letter(s1, 2),))
        assert [label for label, _ in pres] == ["r1"]

    def test_to_dict(self, params_g0):
        """to_dict carries params, kind, generators, relators and labels."""
        data = presentation_mixed(params_g0).to_dict()
        assert data["kind"] == "mixed"
        assert data["params"] == {"k": 3, "n": 3, "g": 0}
        assert len(data["relators"]) == len(data["labels"])


class TestActOuter:
    """Tests for act_outer."""

    def test_tilde_a_on_b(self, params, word):
        """ta1 b1 ta1^-1 = b1 z1."""
        assert str(act_outer(Generator(Family.A_TILDE, 1), word("b1"))) == "b1 z1"

    def test_tilde_sigma_on_zeta(self, params, word):
        """ts1 z2 ts1^-1 = z1 and ts1 z1 ts1^-1 = z1^-1 z2 z1."""
        ts1 = Generator(Family.SIGMA_TILDE, 1)
        assert str(act_outer(ts1, word("z2"))) == "z1"
        assert str(act_outer(ts1, word("z1"))) == "z1^-1 z2 z1"

    def test_sigma_fixed(self, params, word):
        """The outer generators fix every sigma_i."""
        assert str(act_outer(Generator(Family.B_TILDE, 1), word("s1 s2^-1"))) == "s1 s2^-1"

    def test_word_is_reduced(self, params, word):
        """Images of letters are concatenated and freely reduced."""
        ts1 = Generator(Family.SIGMA_TILDE, 1)
        assert str(act_outer(ts1, word("z1 z2"))) == "z1^-1 z2 z1^2"

    def test_matches_conjugation_in_gamma3(self, params, rng):
        """act_outer agrees with conjugation in the Gamma_3 quotient."""
        rho = evaluator_for(QuotientKind.MIXED_GAMMA3, params)
        for actor in params.generators({Family.SIGMA_TILDE, Family.A_TILDE, Family.B_TILDE}):
            for x in params.generators({Family.SIGMA, Family.A, Family.B, Family.ZETA}):
                lhs = rho(act_outer(actor, Word.letter(x)))
                rhs = rho(Word.letter(actor) * Word.letter(x) * Word.letter(actor, -1))
                assert lhs == rhs, f"{actor} on {x}"

    @pytest.mark.parametrize("g", [1, 2])
    def test_multiplicative(self, g, rng):
        """act(uv) = act(u) act(v) and act(u^-1) = act(u)^-1, up to free reduction."""
        p = GroupParams(3, 3, g)
        inner = p.generators(INNER)
        for actor in p.generators(OUTER):
            for _ in range(50):
                u, v = random_word(rng, inner, 10), random_word(rng, inner, 10)
                assert act_outer(actor, u * v) == free_reduce(act_outer(actor, u) * act_outer(actor, v))
                assert act_outer(actor, ~u) == free_reduce(~act_outer(actor, u))

    def test_rejects_inner_actor(self, params, word):
        """Only tilde generators act."""
        with pytest.raises(GeneratorError):
            act_outer(Generator(Family.A, 1), word("b1"))

    def test_rejects_outer_letters(self, params, word):
        """The word must lie in B_k(Sigma_{g,n})."""
        with pytest.raises(GeneratorError):
            act_outer(Generator(Family.A_TILDE, 1), word("tb1"))

    def test_rejects_collapsed_letters(self, params, word):
        """Collapsed names have no action."""
        with pytest.raises(GeneratorError):
            act_outer(Generator(Family.A_TILDE, 1), word("z"))


class TestPresentationQuotient:
    """Tests for presentation_quotient."""

    def test_full_kinds_route(self, params):
        """Full kinds return the full presentations."""
        assert presentation_quotient(params, QuotientKind.MIXED_FULL) == presentation_mixed(params)
        assert presentation_quotient(params, QuotientKind.BASE_FULL) == presentation_base(params)

    def test_mixed_gamma3(self, params):
        """All commutators of distinct generators, four of them twisted."""
        pres = presentation_quotient(params, QuotientKind.MIXED_GAMMA3)
        assert _names(pres) == ["s", "ts", "a1", "b1", "ta1", "tb1", "z"]
        assert len(pres.relators) == 21
        assert _relator(pres, "comm[a1,b1]") == "a1 b1 a1^-1 b1^-1 s^-2"
        assert _relator(pres, "comm[ta1,tb1]") == "ta1 tb1 ta1^-1 tb1^-1 ts^-2"
        assert _relator(pres, "comm[a1,tb1]") == "a1 tb1 a1^-1 tb1^-1 z^-1"
        assert _relator(pres, "comm[ta1,b1]") == "ta1 b1 ta1^-1 b1^-1 z^-1"
        assert _relator(pres, "comm[s,ts]") == "s ts s^-1 ts^-1"

    def test_gk_surface(self, params_g2):
        """G_k(Sigma_2) is generated by s, z and AB."""
        pres = presentation_quotient(params_g2, QuotientKind.GK_SURFACE)
        assert _names(pres) == ["s", "a1", "b1", "a2", "b2", "z"]
        assert len(pres.relators) == 15
        assert _relator(pres, "comm[a2,b2]") == "a2 b2 a2^-1 b2^-1 s^-2"

    def test_mixed_abel_g0(self, params_g0):
        """For g = 0 the abelianisation is free on s, ts, z."""
        pres = presentation_quotient(params_g0, QuotientKind.MIXED_ABEL)
        assert _names(pres) == ["s", "ts", "z"]
        assert len(pres.relators) == 3

    def test_mixed_abel_squares(self, params):
        """For g >= 1, s and ts have order two and z is absent."""
        pres = presentation_quotient(params, QuotientKind.MIXED_ABEL)
        assert "z" not in _names(pres)
        assert _relator(pres, "square[s]") == "s^2"
        assert _relator(pres, "square[ts]") == "ts^2"

    def test_gamma3_regime(self):
        """The Gamma_3 presentation needs k, n >= 3."""
        with pytest.raises(RegimeError):
            presentation_quotient(GroupParams(2, 3, 1), QuotientKind.MIXED_GAMMA3)

    @pytest.mark.parametrize("kind", [k for k in QuotientKind if not k.is_full])
    def test_own_evaluator_kills_relators(self, params, kind):
        """Each quotient's relators die under its own evaluation map."""
        pres = presentation_quotient(params, kind)
        ev = evaluator_for(kind, params)
        for label, rel in pres:
            assert ev(rel).is_identity(), label

    def test_parsed_normal_forms_are_words(self, params):
        """Collapsed names in quotient relators are valid word syntax."""
        pres = presentation_quotient(params, QuotientKind.HSIGMA)
        for _, rel in pres:
            assert parse_word(str(rel), params, allow_collapsed=True) == rel
