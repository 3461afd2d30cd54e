"""Tests for the nf command."""

import json

import pytest

from surfbraid.commands.nf import cmd_nf
from surfbraid.exceptions import GeneratorError, RegimeError, WordSyntaxError
from surfbraid.presentations import QuotientKind
from surfbraid.words import GroupParams


class TestCmdNf:
    """Tests for cmd_nf."""

    def test_reordering_produces_sigma(self, params, capsys):
        """b1 a1 = s^-2 a1 b1 in the mixed Gamma_3 quotient."""
        assert cmd_nf("b1 a1", params, QuotientKind.MIXED_GAMMA3) == 0
        assert capsys.readouterr().out.strip() == "s^-2 a1 b1"

    def test_identity_prints_one(self, params, capsys):
        """All sigma_i coincide, so s1 s2^-1 is trivial."""
        cmd_nf("s1 s2^-1", params, QuotientKind.MIXED_GAMMA3)
        assert capsys.readouterr().out.strip() == "1"

    def test_collapsed_input(self, params, capsys):
        """Printed normal forms can be fed back in."""
        cmd_nf("s^-2 a1 b1", params, QuotientKind.MIXED_GAMMA3)
        assert capsys.readouterr().out.strip() == "s^-2 a1 b1"

    def test_zeta_dies_in_abelianisation(self, params, capsys):
        """z1 is trivial in the surface abelianisation."""
        cmd_nf("z1", params, QuotientKind.MIXED_ABEL)
        assert capsys.readouterr().out.strip() == "1"

    def test_json(self, params, capsys):
        """JSON output carries the schema and coordinates."""
        cmd_nf("b1 a1", params, QuotientKind.MIXED_GAMMA3, json_output=True)
        data = json.loads(capsys.readouterr().out)
        assert data["schema"] == 1
        assert data["quotient"] == "gamma3-mixed"
        assert data["word"] == "b1 a1"
        assert data["normal_form"] == "s^-2 a1 b1"
        assert data["coordinates"] == [-2, 0, 0, 1, 0, 1, 0]

    def test_syntax_error(self, params):
        """Malformed words are rejected."""
        with pytest.raises(WordSyntaxError):
            cmd_nf("a1^", params, QuotientKind.MIXED_GAMMA3)

    def test_unknown_generator(self, params):
        """Out-of-range indices are rejected."""
        with pytest.raises(GeneratorError):
            cmd_nf("a2", params, QuotientKind.MIXED_GAMMA3)

    def test_regime(self):
        """The mixed Gamma_3 formulas need k, n >= 3."""
        with pytest.raises(RegimeError):
            cmd_nf("s1", GroupParams(2, 3, 1), QuotientKind.MIXED_GAMMA3)
