"""Group presentations and the outer action on B_k(Sigma_{g,n}).

Every relation lhs = rhs is stored as the single relator lhs rhs^-1, written
letter for letter (no reduction), and tagged with a label such as
``a.5[i=1]`` or ``c.3.2[ts1,z1]``. Relators come out in the order
(a.1)...(a.8), (b.1)...(b.6), (c.1)...(c.8), each by ascending indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Any, Iterator, Sequence

from surfbraid.exceptions import GeneratorError, ValidationError
from surfbraid.output import debug
from surfbraid.words import (
    INNER,
    OUTER,
    Family,
    Generator,
    GroupParams,
    Word,
    check_alphabet,
    commutator,
    conjugate,
    format_word,
    invert,
)


class QuotientKind(Enum):
    """The groups surfbraid knows, valued by their command-line names."""

    MIXED_FULL = "mixed"
    PUNCTURED_FULL = "punctured"
    BASE_FULL = "base"
    MIXED_ABEL = "abel-mixed"
    PUNCTURED_ABEL = "abel-punctured"
    MIXED_GAMMA3 = "gamma3-mixed"
    PUNCTURED_GAMMA3 = "gamma3-punctured"
    BASE_GAMMA3 = "gamma3-base"
    GK_SURFACE = "gk"
    HSIGMA = "hsigma"

    @property
    def is_full(self) -> bool:
        return self in (QuotientKind.MIXED_FULL, QuotientKind.PUNCTURED_FULL, QuotientKind.BASE_FULL)


@dataclass(frozen=True)
class Presentation:
    """Generators and relators (each relator r meaning r = 1)."""

    params: GroupParams
    kind: QuotientKind | None
    generators: tuple[Generator, ...]
    relators: tuple[Word, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.labels and len(self.labels) != len(self.relators):
            raise ValidationError(
                f"{len(self.labels)} labels for {len(self.relators)} relators"
            )
        if len(set(self.generators)) != len(self.generators):
            raise ValidationError("Presentation generators must be distinct")
        known = set(self.generators)
        for rel in self.relators:
            for gen in rel.generators():
                if gen not in known:
                    raise GeneratorError(
                        f"Relator '{format_word(rel)}' uses '{gen.name}', "
                        "which is not a generator of the presentation"
                    )

    def label(self, index: int) -> str:
        return self.labels[index] if self.labels else f"r{index + 1}"

    def __iter__(self) -> Iterator[tuple[str, Word]]:
        return iter((self.label(i), rel) for i, rel in enumerate(self.relators))

    def to_dict(self) -> dict[str, Any]:
        return {
            "params": self.params.as_dict(),
            "kind": self.kind.value if self.kind else None,
            "generators": [gen.name for gen in self.generators],
            "relators": [format_word(rel) for rel in self.relators],
            "labels": [self.label(i) for i in range(len(self.relators))],
        }


def _x(family: Family, index: int, exp: int = 1) -> Word:
    return Word.letter(Generator(family, index), exp)


def _relation(lhs: Word, rhs: Word) -> Word:
    return lhs * invert(rhs)


def _commutes(x: Word, y: Word) -> Word:
    """Relator of xy = yx."""
    return _relation(x * y, y * x)


def _surface_pairs(params: GroupParams, tilde: bool) -> list[list[Word]]:
    """[[a_1, b_1], [a_2, b_2], ...] (or the tilde families)."""
    fa, fb = (Family.A_TILDE, Family.B_TILDE) if tilde else (Family.A, Family.B)
    return [[_x(fa, i), _x(fb, i)] for i in range(1, params.g + 1)]


def _braid_relations(
    prefix: str,
    sigma: Family,
    count: int,
    pairs: list[list[Word]],
    extra: list[Word],
) -> list[tuple[str, Word]]:
    """Relations (a.1)-(a.6) or (b.1)-(b.6): braid, surface and commuting relations."""
    out: list[tuple[str, Word]] = []
    s = [_x(sigma, i) for i in range(1, count + 1)]
    surface = [c for pair in pairs for c in pair]
    others = surface + extra

    for i, j in itertools.combinations(range(count), 2):
        if j - i >= 2:
            out.append((f"{prefix}.1[i={i + 1},j={j + 1}]", _commutes(s[i], s[j])))
    for i in range(count - 1):
        out.append(
            (
                f"{prefix}.2[i={i + 1}]",
                _relation(s[i] * s[i + 1] * s[i], s[i + 1] * s[i] * s[i + 1]),
            )
        )
    for i in range(1, count):
        for c in others:
            out.append((f"{prefix}.3[i={i + 1},c={c}]", _commutes(c, s[i])))
    if count == 0:
        return out

    s1 = s[0]
    for c in others:
        out.append((f"{prefix}.4[c={c}]", _relation(c * s1 * c * s1, s1 * c * s1 * c)))
    for i, (a, b) in enumerate(pairs, start=1):
        out.append((f"{prefix}.5[i={i}]", _relation(a * s1 * b, s1 * b * s1 * a * s1)))
    for i, j in itertools.combinations(range(len(pairs)), 2):
        for c in pairs[i]:
            for d in pairs[j]:
                out.append((f"{prefix}.6[c={c},d={d}]", _commutes(~s1 * c * s1, d)))
    return out


def _relations_a(params: GroupParams) -> list[tuple[str, Word]]:
    zetas = [_x(Family.ZETA, i) for i in range(1, params.n + 1)]
    pairs = _surface_pairs(params, tilde=False)
    out = _braid_relations("a", Family.SIGMA, params.k - 1, pairs, zetas)
    if params.k < 2:
        return out
    s1 = _x(Family.SIGMA, 1)
    surface = [c for pair in pairs for c in pair]
    for i, z in enumerate(zetas, start=1):
        for c in surface:
            out.append((f"a.7[i={i},c={c}]", _commutes(~s1 * z * s1, c)))
    for i, j in itertools.combinations(range(len(zetas)), 2):
        out.append((f"a.8[i={i + 1},j={j + 1}]", _commutes(~s1 * zetas[i] * s1, zetas[j])))
    return out


def _relations_b(params: GroupParams) -> list[tuple[str, Word]]:
    pairs = _surface_pairs(params, tilde=True)
    return _braid_relations("b", Family.SIGMA_TILDE, max(params.n - 1, 0), pairs, [])


def _action(actor: Generator, x: Generator) -> tuple[str, Word]:
    """Section label and right-hand side of actor x actor^-1 = rhs."""
    i, j = actor.index, x.index
    word = Word.letter(x)
    z1 = _x(Family.ZETA, 1)

    if x.family is Family.SIGMA:
        return "c.1", word
    if actor.family is Family.SIGMA_TILDE:
        if x.family is not Family.ZETA:
            return "c.2", word
        if j == i + 1:
            return "c.3.1", _x(Family.ZETA, i)
        if j == i:
            return "c.3.2", _x(Family.ZETA, i, -1) * _x(Family.ZETA, i + 1) * _x(Family.ZETA, i)
        return "c.3.3", word

    is_a = actor.family is Family.A_TILDE
    c_i = _x(Family.A if is_a else Family.B, i)
    twist = commutator(~c_i, ~z1)

    if x.family is Family.ZETA:
        if j == 1:
            return ("c.4.1" if is_a else "c.4.2"), conjugate(z1, c_i * z1)
        return ("c.4.3" if is_a else "c.4.4"), conjugate(word, twist)

    # (c.5) ta on a, (c.6) tb on b, (c.7) ta on b, (c.8) tb on a
    same = (x.family is Family.A) == is_a
    section = ("c.5" if is_a else "c.6") if same else ("c.7" if is_a else "c.8")
    if j > i:
        return f"{section}.3", word
    if j < i:
        return f"{section}.2", conjugate(word, twist)
    if same:
        return f"{section}.1", conjugate(word, z1)
    if is_a:
        return f"{section}.1", word * z1
    return f"{section}.1", ~z1 * word * twist


def _section_key(label: str) -> tuple[int, ...]:
    return tuple(int(part) for part in label.split(".")[1:])


def _relations_c(params: GroupParams) -> list[tuple[str, Word]]:
    rows = []
    for actor in params.generators(OUTER):
        for x in params.generators(INNER):
            section, rhs = _action(actor, x)
            relator = _relation(Word.letter(actor) * Word.letter(x) * Word.letter(actor, -1), rhs)
            rows.append(
                (_section_key(section), actor.sort_key(), x.sort_key(), f"{section}[{actor},{x}]", relator)
            )
    rows.sort(key=lambda row: row[:3])
    return [(label, relator) for *_, label, relator in rows]


def _build(params: GroupParams, kind: QuotientKind | None, generators, rows) -> Presentation:
    pres = Presentation(
        params=params,
        kind=kind,
        generators=tuple(generators),
        relators=tuple(rel for _, rel in rows),
        labels=tuple(label for label, _ in rows),
    )
    debug(
        f"{kind.value if kind else 'presentation'} {params}: "
        f"{len(pres.generators)} generators, {len(pres.relators)} relators"
    )
    return pres


@lru_cache(maxsize=64)
def presentation_punctured(params: GroupParams) -> Presentation:
    """B_k(Sigma_{g,n}): generators S, AB, Z and relations (a.1)-(a.8)."""
    return _build(
        params, QuotientKind.PUNCTURED_FULL, params.generators(INNER), _relations_a(params)
    )


@lru_cache(maxsize=64)
def presentation_base(params: GroupParams) -> Presentation:
    """B_n(Sigma_g): generators tilde S, tilde AB and relations (b.1)-(b.6)."""
    params.require("presentation_base", n=1)
    return _build(params, QuotientKind.BASE_FULL, params.generators(OUTER), _relations_b(params))


@lru_cache(maxsize=64)
def presentation_mixed(params: GroupParams) -> Presentation:
    """B_{k,n}(Sigma_g): generators Omega_{k,n}, relations (a), (b) and (c)."""
    params.require("presentation_mixed", n=1)
    rows = _relations_a(params) + _relations_b(params) + _relations_c(params)
    return _build(params, QuotientKind.MIXED_FULL, params.generators(), rows)


def act_outer(gen: Generator, w: Word) -> Word:
    """gen w gen^-1 rewritten in S, AB, Z through relations (c.1)-(c.8), freely reduced."""
    if gen.family not in OUTER or gen.collapsed:
        raise GeneratorError(f"act_outer needs a generator of tilde S or tilde AB, got '{gen.name}'")
    check_alphabet(w, INNER, "B_k(Sigma_{g,n})")
    for x, _ in w.letters:
        if x.collapsed:
            raise GeneratorError(f"act_outer needs indexed letters, got '{x.name}'")
    return w.substitute(lambda x: _action(gen, x)[1])


# Quotient presentations over the collapsed alphabet.

_S = Generator(Family.SIGMA, 0)
_TS = Generator(Family.SIGMA_TILDE, 0)
_Z = Generator(Family.ZETA, 0)


def _class2_rows(
    generators: Sequence[Generator],
    special: Sequence[tuple[Generator, Generator, Word]],
    squares: Sequence[Generator] = (),
) -> list[tuple[str, Word]]:
    """Commutation relators for every pair, except the pairs in special.

    A special entry (x, y, c) gives the relator [x, y] c^-1 instead.
    """
    exceptions = {frozenset((x, y)): (x, y, c) for x, y, c in special}
    rows = []
    for x, y in itertools.combinations(generators, 2):
        entry = exceptions.get(frozenset((x, y)))
        if entry is None:
            rows.append((f"comm[{x},{y}]", commutator(Word.letter(x), Word.letter(y))))
        else:
            x, y, c = entry
            rows.append(
                (f"comm[{x},{y}]", commutator(Word.letter(x), Word.letter(y)) * invert(c))
            )
    for s in squares:
        rows.append((f"square[{s}]", Word.letter(s, 2)))
    return rows


def _ordered(gens: list[Generator]) -> list[Generator]:
    return sorted(gens, key=Generator.sort_key)


def _pair_specials(params: GroupParams, left: Family, right: Family, c: Word):
    return [
        (Generator(left, i), Generator(right, i), c) for i in range(1, params.g + 1)
    ]


def presentation_quotient(params: GroupParams, kind: QuotientKind) -> Presentation:
    """Presentation of a quotient over the collapsed alphabet (or a full presentation)."""
    if kind is QuotientKind.MIXED_FULL:
        return presentation_mixed(params)
    if kind is QuotientKind.PUNCTURED_FULL:
        return presentation_punctured(params)
    if kind is QuotientKind.BASE_FULL:
        return presentation_base(params)
    return _quotient(params, kind)


@lru_cache(maxsize=64)
def _quotient(params: GroupParams, kind: QuotientKind) -> Presentation:
    ab = list(params.generators({Family.A, Family.B}))
    tab = list(params.generators({Family.A_TILDE, Family.B_TILDE}))
    zetas = list(params.generators({Family.ZETA}))
    s, ts, z = Word.letter(_S), Word.letter(_TS), Word.letter(_Z)
    name = f"presentation_quotient({kind.value})"

    if kind is QuotientKind.MIXED_ABEL:
        params.require(name, n=1)
        hat_s = ([_S] if params.k >= 2 else []) + ([_TS] if params.n >= 2 else [])
        hat_z = [_Z] if params.g == 0 else []
        gens = _ordered(hat_s + hat_z + ab + tab)
        squares = hat_s if params.g >= 1 else []
        return _build(params, kind, gens, _class2_rows(gens, [], squares))

    if kind is QuotientKind.PUNCTURED_ABEL:
        hat_s = [_S] if params.k >= 2 else []
        gens = _ordered(hat_s + ab + zetas)
        squares = hat_s if params.g >= 1 else []
        return _build(params, kind, gens, _class2_rows(gens, [], squares))

    if kind is QuotientKind.MIXED_GAMMA3:
        params.require(name, k=3, n=3)
        gens = _ordered([_S, _TS, _Z] + ab + tab)
        special = (
            _pair_specials(params, Family.A, Family.B, s ** 2)
            + _pair_specials(params, Family.A_TILDE, Family.B_TILDE, ts ** 2)
            + _pair_specials(params, Family.A, Family.B_TILDE, z)
            + _pair_specials(params, Family.A_TILDE, Family.B, z)
        )
        return _build(params, kind, gens, _class2_rows(gens, special))

    if kind is QuotientKind.PUNCTURED_GAMMA3:
        params.require(name, k=3)
        gens = _ordered([_S] + ab + zetas)
        special = _pair_specials(params, Family.A, Family.B, s ** 2)
        return _build(params, kind, gens, _class2_rows(gens, special))

    if kind is QuotientKind.BASE_GAMMA3:
        params.require(name, n=3)
        gens = _ordered([_TS] + tab)
        special = _pair_specials(params, Family.A_TILDE, Family.B_TILDE, ts ** 2)
        return _build(params, kind, gens, _class2_rows(gens, special))

    if kind is QuotientKind.GK_SURFACE:
        params.require(name, k=3, n=3, g=1)
        gens = _ordered([_S, _Z] + ab)
        special = _pair_specials(params, Family.A, Family.B, s ** 2)
        return _build(params, kind, gens, _class2_rows(gens, special))

    if kind is QuotientKind.HSIGMA:
        params.require(name, k=3, n=3)
        gens = _ordered([_S, _Z] + ab + tab)
        special = (
            _pair_specials(params, Family.A, Family.B, s ** 2)
            + _pair_specials(params, Family.A, Family.B_TILDE, z)
            + _pair_specials(params, Family.A_TILDE, Family.B, z)
        )
        return _build(params, kind, gens, _class2_rows(gens, special))

    raise ValidationError(f"No quotient presentation for kind '{kind.value}'")
