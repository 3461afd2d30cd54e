"""Equality of two words in a quotient."""

from __future__ import annotations

from surfbraid.output import colorize_status, emit_json
from surfbraid.presentations import QuotientKind
from surfbraid.quotients import evaluator_for
from surfbraid.words import GroupParams, parse_word


def cmd_eq(
    left: str,
    right: str,
    params: GroupParams,
    kind: QuotientKind,
    json_output: bool = False,
) -> int:
    """Exit 0 if the words are equal in the quotient, 1 if not."""
    u = parse_word(left, params, allow_collapsed=True)
    v = parse_word(right, params, allow_collapsed=True)
    ev = evaluator_for(kind, params)
    x, y = ev(u), ev(v)
    equal = x == y

    if json_output:
        output = {
            "params": params.as_dict(),
            "quotient": kind.value,
            "equal": equal,
            "normal_forms": [str(x), str(y)],
        }
        emit_json(output)
    elif equal:
        print(f"{colorize_status('equal')}  {x}")
    else:
        print(f"{colorize_status('unequal')}  {x}  !=  {y}")
    return 0 if equal else 1
