"""Shared test fixtures for surfbraid."""

from __future__ import annotations

import random

import pytest

from surfbraid.words import GroupParams, Word, parse_word


@pytest.fixture
def params():
    """The default triple (k, n, g) = (3, 3, 1)."""
    return GroupParams(3, 3, 1)


@pytest.fixture
def params_g0():
    """Classical mixed braid group B_{3,3}."""
    return GroupParams(3, 3, 0)


@pytest.fixture
def params_g2():
    return GroupParams(3, 3, 2)


@pytest.fixture
def rng():
    """Seeded random stream; every randomised test is reproducible."""
    return random.Random(0)


@pytest.fixture
def word(params):
    """Parse word text against the default params (collapsed names allowed)."""

    def parse(text: str, p: GroupParams | None = None) -> Word:
        return parse_word(text, p or params, allow_collapsed=True)

    return parse


@pytest.fixture
def temp_pres_file(tmp_path):
    """Create a presentation file on top of B_3(Sigma_{1,3})."""
    path = tmp_path / "pres.toml"
    path.write_text(
        """
k = 3
n = 3
g = 1
base = "punctured"
relators = ["z1 z2^-1"]
"""
    )
    return path


@pytest.fixture
def capture_stderr(capsys):
    """Helper to capture stderr for testing output functions."""
    return capsys
