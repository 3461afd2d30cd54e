"""Integer lattices: incremental echelon form, Hermite normal form, Smith invariants."""

from __future__ import annotations

from collections import defaultdict
from itertools import zip_longest
from math import prod
from typing import Iterable, Sequence

from sympy import ZZ, factorint
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from surfbraid.exceptions import ValidationError


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(x, y, g) with x a + y b = g = gcd(a, b) up to sign."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    return x, y, g


class IntLattice:
    """Sublattice of Z^dim kept in row echelon form, one row per pivot column.

    Rows are combined with unimodular operations only, so the rows always
    form a basis of the span of every vector added so far.
    """

    def __init__(self, dim: int, rows: Iterable[Sequence[int]] = ()):
        self.dim = dim
        self._rows: dict[int, list[int]] = {}
        for row in rows:
            self.add_vector(row)

    def _check(self, vec: Sequence[int]) -> list[int]:
        if len(vec) != self.dim:
            raise ValidationError(f"Vector of length {len(vec)} in a lattice of dimension {self.dim}")
        return list(vec)

    def add_vector(self, vec: Sequence[int]) -> None:
        vec = self._check(vec)
        for j in range(self.dim):
            b = vec[j]
            if b == 0:
                continue
            row = self._rows.get(j)
            if row is None:
                self._rows[j] = vec
                return
            a = row[j]
            if b % a == 0:
                q = b // a
                for jj in range(j, self.dim):
                    vec[jj] -= q * row[jj]
            elif a % b == 0:
                row[j:], vec[j:] = vec[j:], row[j:]
                q = a // b
                for jj in range(j, self.dim):
                    vec[jj] -= q * row[jj]
            else:
                x, y, g = xgcd(a, b)
                ag, mbg = a // g, -b // g
                for jj in range(j, self.dim):
                    aa, bb = row[jj], vec[jj]
                    row[jj] = x * aa + y * bb
                    vec[jj] = mbg * aa + ag * bb

    def __contains__(self, vec: Sequence[int]) -> bool:
        vec = self._check(vec)
        for j in range(self.dim):
            b = vec[j]
            if b == 0:
                continue
            row = self._rows.get(j)
            if row is None or b % row[j]:
                return False
            q = b // row[j]
            for jj in range(j, self.dim):
                vec[jj] -= q * row[jj]
        return True

    @property
    def rank(self) -> int:
        return len(self._rows)

    def basis(self) -> list[tuple[int, ...]]:
        """The Hermite normal form basis: positive pivots, entries above a pivot in [0, pivot)."""
        cols = sorted(self._rows)
        rows = [list(self._rows[j]) for j in cols]
        for i, j in enumerate(cols):
            if rows[i][j] < 0:
                rows[i] = [-x for x in rows[i]]
            pivot = rows[i][j]
            for k in range(i):
                q = rows[k][j] // pivot
                if q:
                    rows[k] = [x - q * y for x, y in zip(rows[k], rows[i])]
        return [tuple(row) for row in rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntLattice):
            return NotImplemented
        return self.dim == other.dim and self.basis() == other.basis()

    def __repr__(self) -> str:
        return f"IntLattice(dim={self.dim}, rank={self.rank})"


def _divisibility_chain(divisors: Iterable[int]) -> list[int]:
    """Canonical invariant factors (>1, each dividing the next) of Z/d_1 + Z/d_2 + ..."""
    exponents: dict[int, list[int]] = defaultdict(list)
    for d in divisors:
        for p, e in factorint(abs(d)).items():
            exponents[int(p)].append(int(e))
    chain = zip_longest(
        *[[p ** e for e in sorted(es, reverse=True)] for p, es in sorted(exponents.items())],
        fillvalue=1,
    )
    return sorted(prod(part) for part in chain)


def smith_invariants(rows: Iterable[Sequence[int]], dim: int) -> tuple[int, list[int]]:
    """(free rank, torsion) of Z^dim / span(rows); torsion in divisibility order."""
    basis = IntLattice(dim, rows).basis()
    if not basis:
        return dim, []
    matrix = DomainMatrix([[ZZ(x) for x in row] for row in basis], (len(basis), dim), ZZ)
    factors = [abs(int(f)) for f in invariant_factors(matrix)]
    nonzero = [f for f in factors if f]
    return dim - len(nonzero), _divisibility_chain(f for f in nonzero if f > 1)


def format_invariants(free: int, torsion: Sequence[int]) -> str:
    """``Z^4 x Z2^2`` style; the trivial group is ``1``."""
    parts = []
    if free:
        parts.append("Z" if free == 1 else f"Z^{free}")
    counts: dict[int, int] = {}
    for t in torsion:
        counts[t] = counts.get(t, 0) + 1
    for t in sorted(counts):
        parts.append(f"Z{t}" if counts[t] == 1 else f"Z{t}^{counts[t]}")
    return " x ".join(parts) if parts else "1"
