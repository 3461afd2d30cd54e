"""Normal forms of words in a quotient."""

from __future__ import annotations

from surfbraid.output import emit_json
from surfbraid.presentations import QuotientKind
from surfbraid.quotients import evaluate
from surfbraid.words import GroupParams, parse_word


def cmd_nf(text: str, params: GroupParams, kind: QuotientKind, json_output: bool = False) -> int:
    """Print the normal form of a word in the chosen quotient."""
    w = parse_word(text, params, allow_collapsed=True)
    result = evaluate(w, params, kind)

    if json_output:
        output = {
            "params": params.as_dict(),
            "quotient": kind.value,
            "word": str(w),
            "normal_form": str(result),
            "coordinates": list(result.coordinates()),
        }
        emit_json(output)
    else:
        print(result)
    return 0
