"""Invariants and word problem in class-2 quotients of presentations."""

from __future__ import annotations

from surfbraid.oracle import (
    abelian_invariants,
    format_invariants,
    gamma2_mod_gamma3_invariants,
    is_trivial_class2,
)
from surfbraid.output import colorize_status, emit_json, warn
from surfbraid.presentations import Presentation, QuotientKind
from surfbraid.words import parse_word


def _exploratory(pres: Presentation) -> bool:
    """gamma2mod3 of a mixed presentation is only established for k, n >= 3."""
    p = pres.params
    return pres.kind is QuotientKind.MIXED_FULL and (p.k < 3 or p.n < 3)


def cmd_oracle_invariants(pres: Presentation, which: str, json_output: bool = False) -> int:
    if which == "abelian":
        free, torsion = abelian_invariants(pres)
    else:
        if _exploratory(pres):
            warn(f"gamma2mod3 for {pres.params} is exploratory; the value is not asserted")
        free, torsion = gamma2_mod_gamma3_invariants(pres)

    if json_output:
        output = {
            "params": pres.params.as_dict(),
            "presentation": pres.kind.value if pres.kind else None,
            "invariants": which,
            "free_rank": free,
            "torsion": torsion,
            "group": format_invariants(free, torsion),
        }
        emit_json(output)
    else:
        print(format_invariants(free, torsion))
    return 0


def cmd_oracle_trivial(pres: Presentation, text: str, json_output: bool = False) -> int:
    """Exit 0 if the word is trivial in G/Gamma_3(G), 1 if not."""
    w = parse_word(text, pres.params, allow_collapsed=True)
    trivial = is_trivial_class2(pres, w)

    if json_output:
        output = {
            "params": pres.params.as_dict(),
            "presentation": pres.kind.value if pres.kind else None,
            "word": str(w),
            "trivial": trivial,
        }
        emit_json(output)
    else:
        print(colorize_status("trivial" if trivial else "nontrivial"))
    return 0 if trivial else 1


def cmd_oracle(
    pres: Presentation,
    invariants: str | None = None,
    trivial: str | None = None,
    json_output: bool = False,
) -> int:
    if trivial is not None:
        return cmd_oracle_trivial(pres, trivial, json_output)
    return cmd_oracle_invariants(pres, invariants or "abelian", json_output)
