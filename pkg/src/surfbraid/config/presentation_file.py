"""Presentation files (TOML) for the oracle.

    k = 3
    n = 3
    g = 1
    base = "punctured"          # mixed | punctured | base | none
    generators = ["ts1"]        # added to the base generators
    relators = ["s1 z1 s1^-1 z1^-1"]

Names may use the collapsed forms s, ts and z.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

import tomli

from surfbraid.exceptions import ConfigError, SurfbraidError
from surfbraid.output import debug, warn
from surfbraid.presentations import (
    Presentation,
    QuotientKind,
    presentation_quotient,
)
from surfbraid.words import Generator, GroupParams, parse_word

KNOWN_FIELDS = {"k", "n", "g", "base", "generators", "relators"}

BASES = {
    "mixed": QuotientKind.MIXED_FULL,
    "punctured": QuotientKind.PUNCTURED_FULL,
    "base": QuotientKind.BASE_FULL,
    "none": None,
}


def _int_field(data: dict[str, Any], key: str, source: str) -> int:
    if key not in data:
        raise ConfigError(f"{source}: missing required field '{key}'")
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{source}: field '{key}' must be an integer")
    return value


def _str_list(data: dict[str, Any], key: str, source: str) -> list[str]:
    value = data.get(key, [])
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ConfigError(f"{source}: field '{key}' must be a list of strings")
    return value


def load_presentation_file(path: Path) -> Presentation:
    """Load a presentation file; raises ConfigError on any problem with it."""
    source = path.name
    if not path.exists():
        raise ConfigError(f"Presentation file not found: {path}")
    try:
        with open(path, "rb") as f:
            data = tomli.load(f)
    except tomli.TOMLDecodeError as e:
        raise ConfigError(f"{source}: invalid TOML: {e}")

    unknown = set(data.keys()) - KNOWN_FIELDS
    if unknown:
        warn(f"{source}: unknown fields: {', '.join(sorted(unknown))}")

    base_name = data.get("base", "none")
    if base_name not in BASES:
        raise ConfigError(
            f"{source}: field 'base' must be one of {', '.join(BASES)} (got {base_name!r})"
        )
    names = _str_list(data, "generators", source)
    texts = _str_list(data, "relators", source)

    try:
        params = GroupParams(
            _int_field(data, "k", source), _int_field(data, "n", source), _int_field(data, "g", source)
        )
        kind = BASES[base_name]
        base = presentation_quotient(params, kind) if kind else None

        generators = list(base.generators) if base else []
        for name in names:
            gen = Generator.from_name(name, allow_collapsed=True)
            params.check_generator(gen, allow_collapsed=True)
            if gen not in generators:
                generators.append(gen)
        generators.sort(key=Generator.sort_key)
        if not generators:
            raise ConfigError(f"{source}: no generators (set 'base' or 'generators')")

        relators = list(base.relators) if base else []
        labels = [base.label(i) for i in range(len(base.relators))] if base else []
        for i, text in enumerate(texts, start=1):
            relators.append(parse_word(text, params, allow_collapsed=True))
            labels.append(f"file[{i}]")

        pres = Presentation(
            params=params,
            kind=kind if not names and not texts else None,
            generators=tuple(generators),
            relators=tuple(relators),
            labels=tuple(labels),
        )
    except ConfigError:
        raise
    except SurfbraidError as e:
        raise ConfigError(f"{source}: {e.message}")

    debug(f"{source}: {len(pres.generators)} generators, {len(pres.relators)} relators")
    return pres
