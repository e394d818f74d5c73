"""Extended affine root systems given by finite-type data plus semilattices.

A presentation encodes the infinite set

    (S+S) ∪ (R_sh + S) ∪ (R_lg + L) ∪ (R_ex + E)

together with optional adjoined isolated isotropic classes.  Membership of a
root only depends on its finite part and on the residue of its isotropic part,
so every global question below reduces to a finite enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import cached_property
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import finroot, lattice
from .finroot import FiniteRootSystem, FiniteType, StringAnomaly, build_finite_roots
from .lattice import CosetEnumerator, RationalForm, Semilattice, coset_order_key, mod_vec

DEFAULT_WINDOW = 3


class NotAnEars(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Root:
    finite: Tuple[int, ...]
    iso: Tuple[int, ...]

    @property
    def is_isotropic(self) -> bool:
        return not any(self.finite)

    def __add__(self, other: "Root") -> "Root":
        return Root(lattice.vadd(self.finite, other.finite), lattice.vadd(self.iso, other.iso))

    def __sub__(self, other: "Root") -> "Root":
        return Root(lattice.vsub(self.finite, other.finite), lattice.vsub(self.iso, other.iso))

    def __neg__(self) -> "Root":
        return Root(tuple(-x for x in self.finite), tuple(-x for x in self.iso))

    def __mul__(self, k: int) -> "Root":
        return Root(tuple(k * x for x in self.finite), tuple(k * x for x in self.iso))

    __rmul__ = __mul__

    @property
    def vector(self) -> Tuple[int, ...]:
        return self.finite + self.iso

    def to_json(self) -> dict:
        return {"finite": list(self.finite), "iso": list(self.iso)}


@dataclass(frozen=True)
class IsoClass:
    """Residue class delta + modulus*Z^nu of isotropic vectors."""

    modulus: int
    residue: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "residue", mod_vec(self.residue, self.modulus))

    def contains(self, iso: Sequence[int]) -> bool:
        return mod_vec(iso, self.modulus) == self.residue

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "residue": list(self.residue)}


@dataclass(frozen=True)
class IsoClassification:
    kind: str  # "isolated" | "nonisolated"
    witness: Optional[Root] = None

    @property
    def isolated(self) -> bool:
        return self.kind == "isolated"


@dataclass(frozen=True)
class EarsPresentation:
    type: FiniteType
    nullity: int
    S: Semilattice
    L: Optional[Semilattice] = None
    E: Optional[Semilattice] = None
    extra_isolated: Tuple[IsoClass, ...] = ()

    def __post_init__(self):
        fam = self.type.family
        needs_L = fam in ("B", "C", "F", "G") or (fam == "BC" and self.type.rank > 1)
        needs_E = fam == "BC"
        if needs_L != (self.L is not None):
            raise ValueError(f"L semilattice {'required' if needs_L else 'not allowed'} for {self.type}")
        if needs_E != (self.E is not None):
            raise ValueError(f"E set {'required' if needs_E else 'not allowed'} for {self.type}")
        for s in (self.S, self.L, self.E):
            if s is not None and s.nullity != self.nullity:
                raise ValueError("rank mismatch")
        if self.E is not None and not self.E.translated:
            object.__setattr__(self, "E", Semilattice(self.nullity, self.E.cosets, translated=True))
        object.__setattr__(self, "extra_isolated", tuple(sorted(
            set(self.extra_isolated), key=lambda c: (c.modulus, coset_order_key(c.residue)))))
        for c in self.extra_isolated:
            if len(c.residue) != self.nullity or c.modulus % 2:
                raise ValueError("isolated class descriptors need an even modulus and matching rank")
            if self.S_plus_S.contains(c.residue):
                raise ValueError("adjoined isolated class meets S+S")
            if self._niso_witness(c.residue) is not None:
                raise ValueError("adjoined class would not be isolated")

    # -- structure -----------------------------------------------------------
    @property
    def finite(self) -> FiniteRootSystem:
        return build_finite_roots(self.type)

    @property
    def form(self) -> RationalForm:
        return self.finite.form

    @property
    def full_form(self) -> RationalForm:
        return self.finite.form.extended(self.nullity)

    @cached_property
    def S_plus_S(self) -> Semilattice:
        return lattice.semilattice_sum(self.S, self.S)

    def class_semilattice(self, name: str) -> Semilattice:
        return {"short": self.S, "long": self.L, "extra": self.E}[name]

    @property
    def modulus(self) -> int:
        m = 2
        for c in self.extra_isolated:
            m = math.lcm(m, c.modulus)
        return m

    def zero(self) -> Root:
        return Root((0,) * self.type.rank, (0,) * self.nullity)

    def root(self, finite: Sequence[int], iso: Sequence[int]) -> Root:
        return Root(tuple(finite), tuple(iso))

    # -- membership ----------------------------------------------------------
    def contains(self, x: Root) -> bool:
        if len(x.finite) != self.type.rank or len(x.iso) != self.nullity:
            raise ValueError("rank mismatch")
        if x.is_isotropic:
            return self.S_plus_S.contains(x.iso) or any(c.contains(x.iso) for c in self.extra_isolated)
        cls = self.finite.length_class.get(x.finite)
        if cls is None:
            return False
        return self.class_semilattice(cls).contains(x.iso)

    __contains__ = contains

    def _niso_witness(self, delta: Sequence[int]) -> Optional[Root]:
        # alpha + mu and alpha + mu + delta both in R  <=>  mu, mu + delta in the class semilattice (mod 2)
        for name in self.finite.class_names:
            sl = self.class_semilattice(name)
            alpha = next(r for r in self.finite.positive() if self.finite.length_class[r] == name)
            for mu in sl.sorted_cosets():
                if sl.contains(lattice.vadd(mu, delta)):
                    return Root(alpha, mu)
        return None

    def window(self, radius: int) -> List[Root]:
        """Roots whose isotropic part lies in [-radius, radius]^nullity (0 included)."""
        finite = [(0,) * self.type.rank] + list(self.finite.roots)
        out = []
        for iso in lattice.box(radius, self.nullity):
            for f in finite:
                r = Root(f, iso)
                if self.contains(r):
                    out.append(r)
        return out

    def isotropic_classes(self) -> List[IsoClass]:
        m = self.modulus
        return [IsoClass(m, d) for d in CosetEnumerator(m, self.nullity)
                if self.contains(Root((0,) * self.type.rank, d))]

    def to_json(self) -> dict:
        return {
            "type": str(self.type),
            "nullity": self.nullity,
            "S": self.S.to_strings(),
            "L": self.L.to_strings() if self.L is not None else None,
            "E": self.E.to_strings() if self.E is not None else None,
            "extra_isolated": [c.to_json() for c in self.extra_isolated],
        }

    @classmethod
    def from_json(cls, data: dict) -> "EarsPresentation":
        try:
            t = FiniteType.parse(data["type"])
            nu = int(data["nullity"])
            S = Semilattice.from_strings(data["S"]) if nu else Semilattice.zero(0)
            L = data.get("L")
            E = data.get("E")
            L = (Semilattice.from_strings(L) if nu else Semilattice.zero(0)) if L is not None else None
            E = (Semilattice.from_strings(E, translated=True) if nu else Semilattice(0, frozenset([()]), True)) \
                if E is not None else None
            extra = tuple(IsoClass(int(c["modulus"]), tuple(c["residue"]))
                          for c in data.get("extra_isolated", []))
        except KeyError as exc:
            raise ValueError(f"presentation missing field {exc}") from None
        return cls(t, nu, S, L, E, extra)


def ears_contains(p: EarsPresentation, x: Root) -> bool:
    return p.contains(x)


def classify_isotropic(p: EarsPresentation, delta: Root) -> IsoClassification:
    """Exact isolated/nonisolated decision by enumerating length classes times mod-2 cosets."""
    if not delta.is_isotropic:
        raise ValueError("delta must be isotropic")
    if not p.contains(delta):
        raise ValueError("precondition: delta is not a root")
    w = p._niso_witness(delta.iso)
    if w is None:
        return IsoClassification("isolated")
    return IsoClassification("nonisolated", w)


def tame_core(p: EarsPresentation) -> EarsPresentation:
    return replace(p, extra_isolated=())


# --- axiom verification -----------------------------------------------------

@dataclass
class AxiomResult:
    passed: bool
    witness: Optional[object] = None
    note: str = ""

    def to_json(self) -> dict:
        w = self.witness
        if isinstance(w, (Root, IsoClass)):
            w = w.to_json()
        elif isinstance(w, tuple) and all(isinstance(x, Root) for x in w):
            w = [x.to_json() for x in w]
        out = {"passed": self.passed}
        if w is not None:
            out["witness"] = w
        if self.note:
            out["note"] = self.note
        return out


def _string_memo(contains: Callable[[Root], bool], key: Callable[[Root], tuple]):
    cache: Dict[tuple, bool] = {}

    def member(r: Root) -> bool:
        k = key(r)
        if k not in cache:
            cache[k] = contains(r)
        return cache[k]

    return member


def check_r4(roots: Sequence[Root], form: RationalForm, contains: Callable[[Root], bool],
             window: int = finroot.STRING_WINDOW,
             key: Optional[Callable[[Root], tuple]] = None) -> AxiomResult:
    """Unbroken alpha-strings with d - u = 2(alpha,beta)/(alpha,alpha) for all pairs.

    When `key` is given, pairs with equal keys are assumed to have identical strings
    (true for presentations, where membership is periodic in the isotropic part).
    """
    done = set()
    for a in roots:
        if a.is_isotropic or form(a.finite, a.finite) == 0:
            continue
        na = form(a.finite, a.finite)
        for b in roots:
            if key is not None:
                k = (key(a), key(b))
                if k in done:
                    continue
                done.add(k)
            hits = [n for n in range(-window, window + 1) if contains(b + n * a)]
            if 0 not in hits:
                return AxiomResult(False, (a, b), "beta not a root")
            d = u = 0
            while -(d + 1) in hits:
                d += 1
            while u + 1 in hits:
                u += 1
            if d >= window or u >= window or len(hits) != d + u + 1 \
                    or d - u != 2 * form(a.finite, b.finite) / na:
                return AxiomResult(False, (a, b), "string anomaly")
    return AxiomResult(True)


def axioms_check(p: EarsPresentation, window: int = DEFAULT_WINDOW) -> Dict[str, AxiomResult]:
    if window < 1:
        raise ValueError("window radius must be >= 1")
    roots = p.window(window)
    form = p.form
    report: Dict[str, AxiomResult] = {}

    bad = next((r for r in roots if not p.contains(-r)), None)
    report["R1"] = AxiomResult(bad is None, bad)

    vectors = [r.vector for r in roots]
    rk = lattice.rational_rank(vectors)
    report["R2"] = AxiomResult(rk == p.type.rank + p.nullity, note=f"rank {rk}")

    report["R3"] = AxiomResult(True, note="lattice-based presentation")

    m = p.modulus
    key = lambda r: (r.finite, mod_vec(r.iso, m))  # noqa: E731
    report["R4"] = check_r4(roots, form, _string_memo(p.contains, key), key=key)

    isolated = [c for c in p.isotropic_classes()
                if classify_isotropic(p, Root((0,) * p.type.rank, c.residue)).isolated]
    report["R5"] = AxiomResult(not isolated, isolated[0] if isolated else None)

    comps = finroot.classify({r.finite for r in roots if not r.is_isotropic}, form)
    report["R6"] = AxiomResult(len(comps) == 1, note=f"{len(comps)} component(s)")

    doubled = next((r for r in roots if not r.is_isotropic and p.contains(2 * r)), None)
    report["R7"] = AxiomResult(doubled is None, doubled)
    return report


# --- explicit decomposition -------------------------------------------------

@dataclass
class Component:
    nonisotropic: List[tuple]
    isotropic: List[tuple]
    primed_isotropic: List[tuple]

    def to_json(self) -> dict:
        return {
            "nonisotropic": [list(map(str, v)) for v in self.nonisotropic],
            "isotropic": [list(map(str, v)) for v in self.isotropic],
            "primed_isotropic": [list(map(str, v)) for v in self.primed_isotropic],
        }


def decompose(roots: Iterable[Sequence], form: RationalForm,
              contains: Optional[Callable[[tuple], bool]] = None,
              check: bool = True) -> Tuple[List[Component], List[tuple]]:
    """Split an explicit root set into orthogonal components plus its isolated isotropic roots.

    `roots` are coordinate tuples for `form` (radical coordinates allowed).
    `contains` is an exact membership oracle used for root strings; defaults to the set itself.
    Each component carries R_i^x, the isotropic roots attached to it, and the
    isotropic roots lying in the Z-span of the component.
    """
    rs = sorted({finroot._normalize(tuple(r)) for r in roots})
    rset = set(rs)
    zero = tuple(0 for _ in range(form.rank))
    # 0 always counts as a root for string purposes
    member = contains or (lambda v: v == zero or v in rset)
    for r in rs:
        if finroot._normalize(tuple(-x for x in r)) not in rset:
            raise NotAnEars("not an EARS: R1 fails")
    nonis = [r for r in rs if form(r, r) != 0]
    iso = [r for r in rs if form(r, r) == 0]
    if check:
        for a in nonis:
            for b in rs:
                try:
                    finroot.root_string(member, form, a, b)
                except StringAnomaly:
                    raise NotAnEars(f"not an EARS: R4 fails for {a}, {b}") from None
    comps = finroot._components(nonis, form)
    iso_attached = []
    out = []
    for comp in comps:
        attached = [d for d in iso
                    if any(member(finroot._normalize(tuple(x + y for x, y in zip(d, a)))) for a in comp)]
        iso_attached.extend(attached)
        scale = _denominator(comp)
        hb = lattice.hermite_basis(_integral(comp, scale))
        primed = [d for d in iso if _all_int(d, scale) and
                  lattice.in_integer_span(hb, tuple(int(x * scale) for x in d))]
        out.append(Component(comp, attached, primed))
    isolated = [d for d in iso if d not in set(iso_attached)]
    return out, isolated


def _denominator(vectors) -> int:
    den = 1
    for v in vectors:
        for x in v:
            den = math.lcm(den, Fraction(x).denominator)
    return den


def _integral(vectors, den):
    return [tuple(int(Fraction(x) * den) for x in v) for v in vectors]


def _all_int(v, scale) -> bool:
    return all((Fraction(x) * scale).denominator == 1 for x in v)
