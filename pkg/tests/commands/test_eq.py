"""Tests for the eq command."""

import json

from surfbraid.commands.eq import cmd_eq
from surfbraid.presentations import QuotientKind


class TestCmdEq:
    """Tests for cmd_eq."""

    def test_twisted_conjugation_equal(self, params, capsys):
        """ta1 b1 ta1^-1 = b1 z1 modulo Gamma_3."""
        assert cmd_eq("ta1 b1 ta1^-1", "b1 z1", params, QuotientKind.MIXED_GAMMA3) == 0
        assert capsys.readouterr().out.startswith("equal")

    def test_unequal(self, params, capsys):
        """s1 and ts1 differ."""
        assert cmd_eq("s1", "ts1", params, QuotientKind.MIXED_GAMMA3) == 1
        out = capsys.readouterr().out
        assert out.startswith("unequal")
        assert "!=" in out

    def test_abelian_quotient(self, params):
        """z1 = 1 in the surface abelianisation, but not in Gamma_3."""
        assert cmd_eq("z1", "1", params, QuotientKind.MIXED_ABEL) == 0
        assert cmd_eq("z1", "1", params, QuotientKind.MIXED_GAMMA3) == 1

    def test_json(self, params, capsys):
        """JSON output reports both normal forms."""
        cmd_eq("b1 a1", "a1 b1 s^-2", params, QuotientKind.MIXED_GAMMA3, json_output=True)
        data = json.loads(capsys.readouterr().out)
        assert data["schema"] == 1
        assert data["equal"] is True
        assert data["normal_forms"] == ["s^-2 a1 b1", "s^-2 a1 b1"]
