"""Finite root systems: construction by type, root strings, classification."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .lattice import RationalForm

Vector = Tuple  # tuple of int or Fraction coordinates

STRING_WINDOW = 8

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "BC": 1}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


class NotARootSystem(ValueError):
    pass


class StringAnomaly(ValueError):
    pass


@dataclass(frozen=True, order=True)
class FiniteType:
    family: str
    rank: int

    def __post_init__(self):
        f, r = self.family, self.rank
        if f in _FIXED_RANKS:
            ok = r in _FIXED_RANKS[f]
        elif f in _MIN_RANK:
            ok = r >= _MIN_RANK[f]
        else:
            raise ValueError(f"unknown family {f!r}")
        if not ok:
            raise ValueError(f"illegal rank {r} for family {f}")

    @classmethod
    def parse(cls, name: str) -> "FiniteType":
        m = re.fullmatch(r"(BC|[A-G])(\d+)", name.strip())
        if not m:
            raise ValueError(f"bad type name {name!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.family in ("A", "D", "E")


def _dynkin(t: FiniteType) -> Tuple[List[int], List[Tuple[int, int]]]:
    """Squared lengths of the simple roots (short = 2) and Dynkin edges, Bourbaki numbering."""
    f, l = t.family, t.rank
    chain = [(i, i + 1) for i in range(l - 1)]
    if f == "A":
        return [2] * l, chain
    if f == "B" or f == "BC":
        if l == 1:
            return [2], []
        return [4] * (l - 1) + [2], chain
    if f == "C":
        return [2] * (l - 1) + [4], chain
    if f == "D":
        return [2] * l, [(i, i + 1) for i in range(l - 2)] + [(l - 3, l - 1)]
    if f == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, l - 1)]
        return [2] * l, edges
    if f == "F":
        return [4, 4, 2, 2], chain
    if f == "G":
        return [2, 6], chain
    raise AssertionError(f)


def cartan_gram(t: FiniteType) -> RationalForm:
    """Gram matrix of the simple roots, short roots of squared length 2."""
    lengths, edges = _dynkin(t)
    l = t.rank
    g = [[Fraction(0)] * l for _ in range(l)]
    for i in range(l):
        g[i][i] = Fraction(lengths[i])
    for i, j in edges:
        g[i][j] = g[j][i] = Fraction(-max(lengths[i], lengths[j]), 2)
    return RationalForm(tuple(map(tuple, g)))


def cartan_matrix(simple: Sequence[Vector], form: RationalForm) -> Tuple[Tuple[int, ...], ...]:
    """a_ij = 2(a_i, a_j)/(a_j, a_j)."""
    out = []
    for a in simple:
        row = []
        for b in simple:
            v = 2 * form(a, b) / form(b, b)
            if v.denominator != 1:
                raise NotARootSystem("not a root system")
            row.append(int(v))
        out.append(tuple(row))
    return tuple(out)


def reflect(beta: Vector, alpha: Vector, form: RationalForm) -> Vector:
    c = 2 * form(beta, alpha) / form(alpha, alpha)
    return _normalize(tuple(b - c * a for b, a in zip(beta, alpha)))


def _normalize(v: Vector) -> Vector:
    return tuple(int(x) if isinstance(x, Fraction) and x.denominator == 1 else x for x in v)


@dataclass(frozen=True)
class FiniteRootSystem:
    """Roots in simple-root coordinates with their length classes."""

    type: FiniteType
    form: RationalForm
    roots: Tuple[Vector, ...]
    classes: Tuple[Tuple[Vector, str], ...]

    @cached_property
    def length_class(self) -> Dict[Vector, str]:
        return dict(self.classes)

    def by_class(self, name: str) -> List[Vector]:
        return [r for r, c in self.classes if c == name]

    @property
    def class_names(self) -> List[str]:
        present = {c for _, c in self.classes}
        return [c for c in ("short", "long", "extra") if c in present]

    @cached_property
    def _positive(self) -> List[Vector]:
        return [r for r in self.roots if _lex_positive(r)]

    def positive(self) -> List[Vector]:
        return list(self._positive)


def _lex_positive(v: Vector) -> bool:
    for x in v:
        if x:
            return x > 0
    return False


@lru_cache(maxsize=None)
def build_finite_roots(t: FiniteType) -> FiniteRootSystem:
    """All roots of type t, closed under simple reflections, sorted; classes by length."""
    form = cartan_gram(t)
    l = t.rank
    simple = [tuple(1 if i == j else 0 for j in range(l)) for i in range(l)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for b in frontier:
            for a in simple:
                r = reflect(b, a, form)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    if t.family == "BC":
        seen |= {tuple(2 * x for x in r) for r in seen if form(r, r) == 2}
    roots = tuple(sorted(seen, key=lambda v: (not _lex_positive(v), [-abs(x) for x in v], v)))
    lengths = sorted({form(r, r) for r in roots})
    classes = []
    for r in roots:
        n = form(r, r)
        if t.family == "BC" and n == 8:
            c = "extra"
        elif n == lengths[0] or t.simply_laced:
            c = "short"
        else:
            c = "long"
        classes.append((r, c))
    return FiniteRootSystem(t, form, roots, tuple(classes))


@dataclass(frozen=True)
class RootString:
    d: int
    u: int


def root_string(contains, form: RationalForm, alpha: Vector, beta: Vector,
                window: int = STRING_WINDOW) -> RootString:
    """(d, u) of the alpha-string through beta; `contains` decides membership (0 counts as a root).

    `contains` may be a set of vectors or a predicate.
    """
    if form(alpha, alpha) == 0:
        raise ValueError("alpha must be nonisotropic")
    member = contains.__contains__ if not callable(contains) else contains
    hits = [n for n in range(-window, window + 1)
            if member(_normalize(tuple(b + n * a for a, b in zip(alpha, beta))))]
    if 0 not in hits:
        raise StringAnomaly("string anomaly: beta is not a root")
    d = u = 0
    while -(d + 1) in hits:
        d += 1
    while u + 1 in hits:
        u += 1
    if d >= window or u >= window or len(hits) != d + u + 1:
        raise StringAnomaly("string anomaly")
    expected = 2 * form(alpha, beta) / form(alpha, alpha)
    if d - u != expected:
        raise StringAnomaly("string anomaly")
    return RootString(d, u)


# --- classification ---------------------------------------------------------

def _components(vectors: Sequence[Vector], form: RationalForm) -> List[List[Vector]]:
    parent = list(range(len(vectors)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    gv = [[sum(g * x for g, x in zip(row, v)) for row in form.gram] for v in vectors]
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            if find(i) != find(j) and sum(x * y for x, y in zip(vectors[i], gv[j])) != 0:
                parent[find(i)] = find(j)
    groups: Dict[int, List[Vector]] = {}
    for i, v in enumerate(vectors):
        groups.setdefault(find(i), []).append(v)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: max(g))


def simple_system(vectors: Iterable[Vector]) -> List[Vector]:
    """Lexicographically positive roots that are not a sum of two positive roots, sorted descending."""
    pos = sorted((v for v in vectors if _lex_positive(v)), reverse=True)
    pos_set = set(pos)
    simple = []
    for v in pos:
        if not any(_normalize(tuple(a - b for a, b in zip(v, w))) in pos_set for w in pos):
            simple.append(v)
    return simple


def _dynkin_graph(cartan) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(len(cartan)))
    for i, row in enumerate(cartan):
        for j, a in enumerate(row):
            if i != j and a:
                g.add_edge(i, j, a=a)
    return g


def _catalog(rank: int) -> List[FiniteType]:
    out = []
    for fam in ("A", "B", "C", "D"):
        try:
            out.append(FiniteType(fam, rank))
        except ValueError:
            pass
    for fam, ranks in _FIXED_RANKS.items():
        if rank in ranks:
            out.append(FiniteType(fam, rank))
    return out


def _match_reduced(simple: List[Vector], form: RationalForm) -> FiniteType:
    cartan = cartan_matrix(simple, form)
    g = _dynkin_graph(cartan)
    matches = []
    for t in _catalog(len(simple)):
        if t.family == "D" and t.rank == 3:
            continue
        ref = build_finite_roots(t)
        ref_simple = [tuple(1 if i == j else 0 for j in range(t.rank)) for i in range(t.rank)]
        if nx.is_isomorphic(g, _dynkin_graph(cartan_matrix(ref_simple, ref.form)),
                            edge_match=lambda e1, e2: e1["a"] == e2["a"]):
            matches.append(t)
    if not matches:
        raise NotARootSystem("not a root system")
    if len(matches) > 1:
        # B2 and C2 share a Dynkin diagram; read the extracted order as Bourbaki labels.
        long_first = form(simple[0], simple[0]) > form(simple[-1], simple[-1])
        return FiniteType("B" if long_first else "C", 2)
    return matches[0]


def classify(vectors: Iterable[Vector], form: RationalForm) -> List[Tuple[FiniteType, List[Vector]]]:
    """Split a finite nonisotropic vector set into irreducible components and name each type."""
    vecs = sorted({_normalize(tuple(v)) for v in vectors})
    vset = set(vecs)
    for v in vecs:
        if form(v, v) == 0:
            raise ValueError("isotropic vector in classify input")
        if _normalize(tuple(-x for x in v)) not in vset:
            raise NotARootSystem("not a root system")
    # reflection closure; G*a is cached so each pairing is a plain dot product
    zero = tuple(0 for _ in vecs[0]) if vecs else ()
    ga = {a: [sum(g * x for g, x in zip(row, a)) for row in form.gram] for a in vecs}
    for a in vecs:
        ga_a = ga[a]
        na = sum(x * y for x, y in zip(a, ga_a))
        for b in vecs:
            c = 2 * sum(x * y for x, y in zip(b, ga_a)) / na
            if c.denominator != 1:
                raise NotARootSystem("not a root system")
            k = int(c)
            r = tuple(y - k * x for x, y in zip(a, b))
            if r not in vset and r != zero:
                raise NotARootSystem("not a root system")
    out = []
    for comp in _components(vecs, form):
        cset = set(comp)
        extra = {v for v in comp if _normalize(tuple(Fraction(x) / 2 for x in v)) in cset}
        reduced = [v for v in comp if v not in extra]
        simple = simple_system(reduced)
        if extra:
            t = FiniteType("BC", len(simple))
            if len(comp) != 2 * t.rank * (t.rank + 1):
                raise NotARootSystem("not a root system")
            if t.rank > 1 and _match_reduced(simple, form).family != "B":
                raise NotARootSystem("not a root system")
        else:
            t = _match_reduced(simple, form)
            if len(comp) != len(build_finite_roots(t).roots):
                raise NotARootSystem("not a root system")
        out.append((t, comp))
    return out
