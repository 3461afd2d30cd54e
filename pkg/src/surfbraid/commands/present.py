"""Dump a presentation."""

from __future__ import annotations

from surfbraid.output import emit_json, info
from surfbraid.presentations import Presentation, QuotientKind, presentation_quotient
from surfbraid.words import GroupParams


def print_presentation(pres: Presentation) -> None:
    """One 'gens:' line, then one relator per line in the word grammar."""
    name = pres.kind.value if pres.kind else "presentation"
    info(f"{name} {pres.params}: {len(pres.generators)} generators, {len(pres.relators)} relators")
    print("gens: " + " ".join(gen.name for gen in pres.generators))
    for rel in pres.relators:
        print(rel)


def cmd_present(params: GroupParams, kind: QuotientKind, json_output: bool = False) -> int:
    pres = presentation_quotient(params, kind)
    if json_output:
        emit_json(pres.to_dict())
    else:
        print_presentation(pres)
    return 0
