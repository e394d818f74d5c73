"""Integer vectors, rational forms, semilattices as mod-2 coset sets, coset enumeration."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from . import linalg

IntVector = Tuple[int, ...]
Coset = Tuple[int, ...]


def vadd(x: Sequence[int], y: Sequence[int]) -> IntVector:
    if len(x) != len(y):
        raise ValueError("rank mismatch")
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Sequence[int], y: Sequence[int]) -> IntVector:
    if len(x) != len(y):
        raise ValueError("rank mismatch")
    return tuple(a - b for a, b in zip(x, y))


def vscale(k, x: Sequence[int]) -> IntVector:
    return tuple(k * a for a in x)


def mod_vec(x: Sequence[int], m: int) -> IntVector:
    return tuple(a % m for a in x)


def coset_order_key(c: Sequence[int]):
    """Order residues by weight, then so that lower coordinates come first (100 < 010 < 001)."""
    return (sum(c), tuple(-a for a in c))


@dataclass(frozen=True)
class RationalForm:
    """Symmetric bilinear form given by an exact rational Gram matrix."""

    gram: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        g = tuple(tuple(Fraction(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
            raise ValueError("gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def __call__(self, x: Sequence, y: Sequence) -> Fraction:
        g = self.gram
        if len(x) != len(g) or len(y) != len(g):
            raise ValueError("rank mismatch")
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                row = g[i]
                total += xi * sum((row[j] * yj for j, yj in enumerate(y) if yj), Fraction(0))
        return total

    def is_positive_semidefinite(self) -> bool:
        return linalg.principal_minors_nonnegative(self.gram)

    def extended(self, nullity: int) -> "RationalForm":
        """Append a zero radical block of the given size."""
        n = self.rank
        rows = [list(r) + [Fraction(0)] * nullity for r in self.gram]
        rows += [[Fraction(0)] * (n + nullity) for _ in range(nullity)]
        return RationalForm(tuple(map(tuple, rows)))

    def scaled(self, k) -> "RationalForm":
        k = Fraction(k)
        return RationalForm(tuple(tuple(k * x for x in row) for row in self.gram))


@dataclass(frozen=True)
class Semilattice:
    """Union of cosets of 2Λ in Λ = Z^nullity, stored by residues mod 2.

    ``translated`` marks the E-type sets which may omit the zero coset.
    """

    nullity: int
    cosets: FrozenSet[Coset]
    translated: bool = False

    def __post_init__(self):
        cs = frozenset(mod_vec(c, 2) for c in self.cosets)
        if any(len(c) != self.nullity for c in cs):
            raise ValueError("rank mismatch")
        object.__setattr__(self, "cosets", cs)
        if not self.translated and (0,) * self.nullity not in cs:
            raise ValueError("semilattice must contain the zero coset")
        if self.translated and not cs:
            raise ValueError("translated semilattice must be nonempty")

    @classmethod
    def from_strings(cls, strings: Iterable[str], translated: bool = False) -> "Semilattice":
        strings = list(strings)
        if not strings:
            raise ValueError("empty coset list")
        nu = len(strings[0])
        cosets = []
        for s in strings:
            if len(s) != nu or set(s) - {"0", "1"}:
                raise ValueError(f"bad coset string {s!r}")
            cosets.append(tuple(int(ch) for ch in s))
        return cls(nu, frozenset(cosets), translated)

    @classmethod
    def full(cls, nullity: int) -> "Semilattice":
        return cls(nullity, frozenset(itertools.product((0, 1), repeat=nullity)))

    @classmethod
    def zero(cls, nullity: int) -> "Semilattice":
        return cls(nullity, frozenset([(0,) * nullity]))

    def to_strings(self) -> List[str]:
        return ["".join(map(str, c)) for c in self.sorted_cosets()]

    def sorted_cosets(self) -> List[Coset]:
        return sorted(self.cosets, key=coset_order_key)

    def contains(self, delta: Sequence[int]) -> bool:
        if len(delta) != self.nullity:
            raise ValueError("rank mismatch")
        return mod_vec(delta, 2) in self.cosets

    __contains__ = contains

    def is_lattice(self) -> bool:
        return all(mod_vec(vadd(a, b), 2) in self.cosets for a in self.cosets for b in self.cosets) \
            and (0,) * self.nullity in self.cosets

    def __add__(self, other: "Semilattice") -> "Semilattice":
        return semilattice_sum(self, other)

    def span(self) -> "Semilattice":
        return lattice_span(self)


def semilattice_contains(s: Semilattice, delta: Sequence[int]) -> bool:
    return s.contains(delta)


def semilattice_is_lattice(s: Semilattice) -> bool:
    return s.is_lattice()


def semilattice_sum(s: Semilattice, t: Semilattice) -> Semilattice:
    if s.nullity != t.nullity:
        raise ValueError("rank mismatch")
    cosets = frozenset(mod_vec(vadd(a, b), 2) for a in s.cosets for b in t.cosets)
    return Semilattice(s.nullity, cosets, translated=(0,) * s.nullity not in cosets)


def lattice_span(s: Semilattice) -> Semilattice:
    """Smallest subgroup of F_2^nullity containing the cosets."""
    span = {(0,) * s.nullity}
    frontier = set(s.cosets)
    while frontier:
        span |= frontier
        frontier = {mod_vec(vadd(a, b), 2) for a in span for b in span} - span
    return Semilattice(s.nullity, frozenset(span))


@dataclass(frozen=True)
class CosetEnumerator:
    """All residue vectors in {0..modulus-1}^rank, each exactly once."""

    modulus: int
    rank: int

    def __post_init__(self):
        if self.modulus < 1 or self.rank < 0:
            raise ValueError("modulus must be positive and rank non-negative")

    def __len__(self) -> int:
        return self.modulus ** self.rank

    def __iter__(self) -> Iterator[IntVector]:
        return iter(sorted(itertools.product(range(self.modulus), repeat=self.rank),
                           key=coset_order_key))


def box(radius: int, rank: int) -> Iterator[IntVector]:
    """Integer points of [-radius, radius]^rank in lexicographic order."""
    return itertools.product(range(-radius, radius + 1), repeat=rank)


# --- integer lattices -------------------------------------------------------

def hermite_basis(vectors: Iterable[Sequence[int]]) -> List[IntVector]:
    """Row-style Hermite normal form basis of the Z-span of integer vectors."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    n = len(rows[0])
    basis: List[List[int]] = []
    col = 0
    while rows and col < n:
        nz = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            new = [piv]
            for r in nz[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                (new if r[col] != 0 else rest).append(r)
            nz = new
        if nz:
            piv = nz[0]
            if piv[col] < 0:
                piv = [-a for a in piv]
            basis.append(piv)
        rows = [r for r in rest if any(r)]
        col += 1
    # reduce entries above pivots
    for i, b in enumerate(basis):
        pc = next(j for j, a in enumerate(b) if a)
        for k in range(i):
            q = basis[k][pc] // b[pc]
            if q:
                basis[k] = [a - q * c for a, c in zip(basis[k], b)]
    return [tuple(b) for b in basis]


def in_integer_span(basis: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Membership of an integer vector in the lattice with the given Hermite basis."""
    v = list(v)
    for b in basis:
        pc = next(j for j, a in enumerate(b) if a)
        if v[pc] % b[pc]:
            return False
        q = v[pc] // b[pc]
        v = [a - q * c for a, c in zip(v, b)]
    return not any(v)


def rational_rank(vectors: Iterable[Sequence]) -> int:
    rows = [list(v) for v in vectors]
    return linalg.rank(rows) if rows else 0
