"""Class-2 quotients G/Gamma_3(G) of finite presentations.

The normal closure N of the relators in F/Gamma_3(F) is the subgroup they
generate times the central lattice C spanned by [x_k, r] for generators x_k
and relators r. N/C is abelian, so N is echelonised at the group level:
each abelian column keeps one pivot element, combined with the others by
unimodular powers, and anything whose abelian part cancels falls into C.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from surfbraid.oracle.class2 import Class2Elt, beta, collect_class2
from surfbraid.oracle.lattice import IntLattice, smith_invariants, xgcd
from surfbraid.output import debug
from surfbraid.presentations import Presentation
from surfbraid.words import Generator, Word


@dataclass
class Class2Quotient:
    """The image of a presentation's relators' normal closure in F/Gamma_3(F)."""

    generators: tuple[Generator, ...]
    pivots: dict[int, Class2Elt] = field(default_factory=dict)
    central: IntLattice = field(init=False)

    def __post_init__(self):
        n = len(self.generators)
        self.index = {gen: i for i, gen in enumerate(self.generators)}
        self.central = IntLattice(n * (n - 1) // 2)

    @property
    def n(self) -> int:
        return len(self.generators)

    def insert(self, elt: Class2Elt) -> None:
        w = elt
        for j in range(self.n):
            b = w.e[j]
            if b == 0:
                continue
            h = self.pivots.get(j)
            if h is None:
                self.pivots[j] = w
                return
            a = h.e[j]
            if b % a == 0:
                w = w * h ** (-(b // a))
            elif a % b == 0:
                self.pivots[j] = w
                w = h * w ** (-(a // b))
            else:
                x, y, g = xgcd(a, b)
                self.pivots[j] = h ** x * w ** y
                w = h ** (-(b // g)) * w ** (a // g)
        self.central.add_vector(w.c)

    def close(self) -> None:
        """Add the commutators of every generator with every pivot to the central lattice."""
        for piv in self.pivots.values():
            for k in range(self.n):
                unit = tuple(int(i == k) for i in range(self.n))
                self.central.add_vector(beta(unit, piv.e))

    def __contains__(self, elt: Class2Elt) -> bool:
        w = elt
        for j in range(self.n):
            b = w.e[j]
            if b == 0:
                continue
            h = self.pivots.get(j)
            if h is None or b % h.e[j]:
                return False
            w = w * h ** (-(b // h.e[j]))
        return w.c in self.central

    def collect(self, w: Word) -> Class2Elt:
        return collect_class2(w, self.index)

    @property
    def lattice(self) -> IntLattice:
        """Hull of the closure in Z^{N+M}: pivot rows (e, c) and rows (0, v) for v in C."""
        zero = (0,) * self.n
        rows = [piv.e + piv.c for _, piv in sorted(self.pivots.items())]
        rows += [zero + v for v in self.central.basis()]
        return IntLattice(self.n + self.central.dim, rows)


@lru_cache(maxsize=32)
def class2_quotient_lattice(pres: Presentation) -> Class2Quotient:
    quotient = Class2Quotient(pres.generators)
    for rel in pres.relators:
        quotient.insert(quotient.collect(rel))
    quotient.close()
    debug(
        f"class-2 quotient: {quotient.n} generators, {len(quotient.pivots)} abelian pivots, "
        f"central rank {quotient.central.rank}"
    )
    return quotient


def is_trivial_class2(pres: Presentation, w: Word) -> bool:
    """Whether w is trivial in G/Gamma_3(G), G = <generators | relators>."""
    quotient = class2_quotient_lattice(pres)
    return quotient.collect(w) in quotient


def abelian_invariants(pres: Presentation) -> tuple[int, list[int]]:
    """Invariant factors of G/Gamma_2(G) from the relator exponent sums."""
    index = {gen: i for i, gen in enumerate(pres.generators)}
    rows = [collect_class2(rel, index).e for rel in pres.relators]
    return smith_invariants(rows, len(pres.generators))


def gamma2_mod_gamma3_invariants(pres: Presentation) -> tuple[int, list[int]]:
    """Invariant factors of Gamma_2(G)/Gamma_3(G): Z^M modulo the central lattice."""
    quotient = class2_quotient_lattice(pres)
    return smith_invariants(quotient.central.basis(), quotient.central.dim)
