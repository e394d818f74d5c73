"""Character automorphisms, fixed root systems and their decomposition.

A character phi: Q -> mu_m acts on each root space by a scalar, so the fixed
root system is {a in R : phi(a) = 1}.  Membership in R depends on the
isotropic part modulo 2 and phi depends on it modulo m; hence every question
about the fixed root system (in particular "is delta isolated?", which asks for
the existence of some alpha in an infinite set) is settled by enumerating
finite roots times residues modulo lcm(2, m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import finroot, lattice, linalg
from .ears import (AxiomResult, EarsPresentation, IsoClass, IsoClassification, Root,
                   classify_isotropic)
from .finroot import FiniteType
from .lattice import CosetEnumerator, RationalForm, mod_vec

DEFAULT_WINDOW = 2


class TheoremNotApplicable(ValueError):
    pass


@dataclass(frozen=True)
class Character:
    order: int
    alpha_exps: Tuple[int, ...]
    delta_exps: Tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("character order must be positive")
        object.__setattr__(self, "alpha_exps", mod_vec(self.alpha_exps, self.order))
        object.__setattr__(self, "delta_exps", mod_vec(self.delta_exps, self.order))

    @classmethod
    def trivial(cls, rank: int, nullity: int) -> "Character":
        return cls(1, (0,) * rank, (0,) * nullity)

    @classmethod
    def from_json(cls, data: dict) -> "Character":
        return cls(int(data["order"]), tuple(data["alpha"]), tuple(data["delta"]))

    def to_json(self) -> dict:
        return {"order": self.order, "alpha": list(self.alpha_exps), "delta": list(self.delta_exps)}


def char_eval(chi: Character, x: Root) -> int:
    """Exponent k with phi(x) = zeta^k."""
    if len(x.finite) != len(chi.alpha_exps) or len(x.iso) != len(chi.delta_exps):
        raise ValueError("rank mismatch")
    s = sum(a * e for a, e in zip(x.finite, chi.alpha_exps))
    s += sum(a * e for a, e in zip(x.iso, chi.delta_exps))
    return s % chi.order


@dataclass(frozen=True)
class FixedRootSystem:
    base: EarsPresentation
    chi: Character

    def __post_init__(self):
        if len(self.chi.alpha_exps) != self.base.type.rank or len(self.chi.delta_exps) != self.base.nullity:
            raise ValueError("rank mismatch")

    @property
    def modulus(self) -> int:
        return math.lcm(self.base.modulus, self.chi.order)

    def contains(self, x: Root) -> bool:
        return self.base.contains(x) and char_eval(self.chi, x) == 0

    __contains__ = contains

    def window(self, radius: int) -> List[Root]:
        return [r for r in self.base.window(radius) if char_eval(self.chi, r) == 0]

    def nonisotropic_classes(self) -> List[Root]:
        """Representatives alpha + mu, mu in [0, M)^nu, of the nonisotropic fixed roots."""
        fin = self.base.finite
        return [Root(a, mu) for a in fin.roots for mu in CosetEnumerator(self.modulus, self.base.nullity)
                if self.contains(Root(a, mu))]

    def isotropic_classes(self) -> List[IsoClass]:
        m = self.modulus
        z = (0,) * self.base.type.rank
        return [IsoClass(m, d) for d in CosetEnumerator(m, self.base.nullity) if self.contains(Root(z, d))]


def fixed_root_system(p: EarsPresentation, chi: Character) -> FixedRootSystem:
    return FixedRootSystem(p, chi)


def is_isolated_exact(f: FixedRootSystem, delta: Root) -> IsoClassification:
    """delta is isolated iff no fixed nonisotropic alpha has alpha + delta in R.

    phi(alpha + delta) = phi(alpha) phi(delta) = 1 automatically, and both
    conditions are periodic modulo M = lcm(2, m), so the residues of alpha's
    isotropic part in [0, M)^nu exhaust all cases.
    """
    if not delta.is_isotropic:
        raise ValueError("delta must be isotropic")
    if not f.contains(delta):
        raise ValueError("precondition: delta is not in the fixed root system")
    fin = f.base.finite
    ordered = fin.positive() + [r for r in fin.roots if r not in set(fin.positive())]
    for mu in CosetEnumerator(f.modulus, f.base.nullity):
        for a in ordered:
            alpha = Root(a, mu)
            if f.contains(alpha) and f.base.contains(alpha + delta):
                return IsoClassification("nonisolated", alpha)
    return IsoClassification("isolated")


def isolated_bruteforce(f: FixedRootSystem, delta: Root, radius: int) -> bool:
    """Window search oracle: no alpha with isotropic part in [-radius, radius]^nu works."""
    for alpha in f.window(radius):
        if not alpha.is_isotropic and f.base.contains(alpha + delta):
            return False
    return True


# --- decomposition ----------------------------------------------------------

@dataclass
class ComponentReport:
    type: FiniteType
    l_i: int
    nu_i: int
    dim_H_i: int
    simple_preimage: List[Root]
    iso_basis: List[Tuple[int, ...]]
    finite_roots: List[Tuple[int, ...]] = field(repr=False, default_factory=list)

    def to_json(self) -> dict:
        return {
            "type": str(self.type),
            "l_i": self.l_i,
            "nu_i": self.nu_i,
            "dim_H_i": self.dim_H_i,
            "simple_preimage": [r.to_json() for r in self.simple_preimage],
            "iso_basis": [list(b) for b in self.iso_basis],
        }


@dataclass
class IsolatedClass:
    iso_class: IsoClass
    kind: str  # "internal-isolated" | "external-isolated"

    def to_json(self) -> dict:
        return {**self.iso_class.to_json(), "kind": self.kind}


@dataclass
class DecompositionReport:
    k: int
    components: List[ComponentReport]
    isolated: List[IsolatedClass]
    dim_W: int
    has_I: bool
    dim_H_sigma: int

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "components": [c.to_json() for c in self.components],
            "isolated": [c.to_json() for c in self.isolated],
            "dim_W": self.dim_W,
            "has_I": self.has_I,
            "dim_H_sigma": self.dim_H_sigma,
        }


def _coords_in(simple: Sequence[Tuple[int, ...]], v: Tuple[int, ...]) -> List[int]:
    sol = linalg.solve([list(col) for col in zip(*simple)], list(v))
    if sol is None or any(x.denominator != 1 for x in sol):
        raise finroot.NotARootSystem("root outside the lattice of its simple system")
    return [int(x) for x in sol]


def decompose_fixed(f: FixedRootSystem, dim_H_sigma: Optional[int] = None) -> DecompositionReport:
    p = f.base
    nu = p.nullity
    if dim_H_sigma is None:
        dim_H_sigma = p.type.rank + 2 * nu
    reps = f.nonisotropic_classes()
    if not reps:
        raise TheoremNotApplicable("(R^sigma)^x empty")
    M = f.modulus
    form = p.form
    comps = finroot.classify({r.finite for r in reps}, form)
    lifts: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
    for r in reps:
        lifts.setdefault(r.finite, []).append(r.iso)

    reports = []
    comp_lattices = []
    for t, roots in comps:
        simple = finroot.simple_system([v for v in roots if
                                        finroot._normalize(tuple(Fraction(x) / 2 for x in v)) not in set(roots)])
        # fixed preimage: smallest residue lift, all-zero when available
        pre = [Root(a, min(lifts[a], key=lambda mu: (any(mu), mu))) for a in simple]
        lengths = {form(v, v) for v in roots}
        shortest = min(lengths)
        short_bar = [v for v in roots if form(v, v) == shortest]
        s_i = set()
        for v in short_bar:
            c = _coords_in([r.finite for r in pre], v)
            base_iso = tuple(sum(ci * r.iso[j] for ci, r in zip(c, pre)) for j in range(nu))
            for mu in lifts[v]:
                s_i.add(mod_vec(lattice.vsub(mu, base_iso), M))
        gens = list(s_i) + [tuple(M if j == i else 0 for j in range(nu)) for i in range(nu)]
        b_i = lattice.hermite_basis(gens)
        nu_i = len(b_i)
        l_i = len(simple)
        reports.append(ComponentReport(t, l_i, nu_i, l_i + 2 * nu_i, pre, b_i, sorted(roots)))
        span = lattice.hermite_basis([r.vector for r in pre] + [(0,) * p.type.rank + b for b in b_i])
        comp_lattices.append(span)

    isolated = []
    z = (0,) * p.type.rank
    for c in f.isotropic_classes():
        if is_isolated_exact(f, Root(z, c.residue)).isolated:
            internal = any(lattice.in_integer_span(span, z + c.residue) for span in comp_lattices)
            isolated.append(IsolatedClass(c, "internal-isolated" if internal else "external-isolated"))

    # components share the isotropic directions; count the shared radical part once
    iso_dim = lattice.rational_rank([b for c in reports for b in c.iso_basis])
    used = sum(c.l_i for c in reports) + 2 * iso_dim
    if dim_H_sigma < used:
        raise ValueError(f"dim_H_sigma = {dim_H_sigma} is smaller than the rank bookkeeping {used}")
    return DecompositionReport(len(reports), reports, isolated, dim_H_sigma - used, bool(isolated), dim_H_sigma)


# --- SEARS-style checks -----------------------------------------------------

def sears_check_roots(roots: Sequence[Root], form: RationalForm,
                      contains: Callable[[Root], bool]) -> Dict[str, AxiomResult]:
    """Integrality, reflection closure and indecomposability of a nonisotropic root window."""
    nonis = [r for r in roots if not r.is_isotropic]
    report: Dict[str, AxiomResult] = {}
    bad_int = bad_refl = None
    for a in nonis:
        na = form(a.finite, a.finite)
        for b in nonis:
            c = 2 * form(b.finite, a.finite) / na
            if c.denominator != 1:
                bad_int = bad_int or (a, b)
                continue
            if bad_refl is None and not contains(b - int(c) * a):
                bad_refl = (a, b)
    report["integrality"] = AxiomResult(bad_int is None, bad_int)
    report["reflection"] = AxiomResult(bad_refl is None, bad_refl)
    comps = finroot._components(sorted({r.finite for r in nonis}), form) if nonis else []
    report["indecomposable"] = AxiomResult(len(comps) == 1, note=f"{len(comps)} component(s)")
    return report


def sears_check(f: FixedRootSystem, window: int = DEFAULT_WINDOW) -> Dict[str, AxiomResult]:
    roots = f.window(window)
    if not any(not r.is_isotropic for r in roots):
        raise TheoremNotApplicable("(R^sigma)^x empty")
    return sears_check_roots(roots, f.base.form, f.contains)
