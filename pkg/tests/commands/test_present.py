"""Tests for the present command."""

import json

from surfbraid.commands.present import cmd_present
from surfbraid.presentations import QuotientKind


class TestCmdPresent:
    """Tests for cmd_present."""

    def test_text_layout(self, params_g0, capsys):
        """A gens line, then one relator per line; the summary goes to stderr."""
        assert cmd_present(params_g0, QuotientKind.MIXED_FULL) == 0
        captured = capsys.readouterr()
        lines = captured.out.splitlines()
        assert lines[0] == "gens: s1 s2 ts1 ts2 z1 z2 z3"
        assert len(lines) > 1
        assert "generators" in captured.err

    def test_json(self, params, capsys):
        """JSON carries generators, relators and matching labels."""
        cmd_present(params, QuotientKind.MIXED_FULL, json_output=True)
        data = json.loads(capsys.readouterr().out)
        assert data["schema"] == 1
        assert data["kind"] == "mixed"
        assert data["params"] == {"k": 3, "n": 3, "g": 1}
        assert len(data["labels"]) == len(data["relators"])

    def test_quotient_presentation(self, params, capsys):
        """The Gamma_3 quotient presentation lists its extra relators."""
        cmd_present(params, QuotientKind.MIXED_GAMMA3, json_output=True)
        data = json.loads(capsys.readouterr().out)
        assert data["kind"] == "gamma3-mixed"
        assert len(data["relators"]) == 21
