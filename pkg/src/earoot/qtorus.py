"""Quantum tori with involution, matrices over them, and the graded fixed-point engine.

Coefficients are Fractions or Cyclotomic numbers; the example recipes only
need rationals.  A matrix x^delta e_pq is written as the monomial key
``(delta, p, q)`` and sparse vectors are dicts from such keys to coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .cyclotomic import Cyclotomic
from .lattice import Semilattice, box, mod_vec

Exponent = Tuple[int, ...]
Mono = Tuple[Exponent, int, int]
Vec = Dict[Mono, Fraction]


class AutomorphismError(ValueError):
    pass


def _conj(c):
    return c.conjugate() if isinstance(c, Cyclotomic) else c


# --- the torus --------------------------------------------------------------

@dataclass(frozen=True)
class TorusPresentation:
    e: Tuple[int, ...]
    q: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        e = tuple(int(x) for x in self.e)
        q = tuple(tuple(int(x) for x in row) for row in self.q)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "q", q)
        nu = len(e)
        if nu < 1:
            raise ValueError("nu must be at least 1")
        if any(x not in (1, -1) for x in e):
            raise ValueError("e_i must be +1 or -1")
        if len(q) != nu or any(len(row) != nu for row in q):
            raise ValueError("q must be a nu x nu matrix")
        for i in range(nu):
            if q[i][i] != 1:
                raise ValueError("q_ii must be 1")
            for j in range(nu):
                if q[i][j] not in (1, -1):
                    raise ValueError("q_ij must be +1 or -1")
                if q[i][j] != q[j][i]:
                    raise ValueError("q must be symmetric")

    @classmethod
    def trivial(cls, nu: int) -> "TorusPresentation":
        return cls((1,) * nu, tuple(tuple(1 for _ in range(nu)) for _ in range(nu)))

    @classmethod
    def from_json(cls, e, q=None) -> "TorusPresentation":
        nu = len(e)
        if q is None:
            q = [[1] * nu for _ in range(nu)]
        return cls(tuple(e), tuple(map(tuple, q)))

    def to_json(self) -> dict:
        return {"e": list(self.e), "q": [list(r) for r in self.q]}

    @property
    def nu(self) -> int:
        return len(self.e)

    @property
    def is_commutative(self) -> bool:
        return all(x == 1 for row in self.q for x in row)

    @property
    def is_trivial(self) -> bool:
        return self.is_commutative and all(x == 1 for x in self.e)

    def _check(self, d: Sequence[int]):
        if len(d) != self.nu:
            raise ValueError("nu mismatch")

    def cocycle(self, d: Sequence[int], t: Sequence[int]) -> int:
        """c(d, t) with x^d x^t = c(d, t) x^{d+t}."""
        self._check(d)
        self._check(t)
        s = 0
        for i in range(self.nu):
            for j in range(i):
                if self.q[i][j] == -1:
                    s += d[i] * t[j]
        return -1 if s % 2 else 1

    def commutation(self, d: Sequence[int], t: Sequence[int]) -> int:
        """x^d x^t = commutation(d, t) x^t x^d."""
        return self.cocycle(d, t) * self.cocycle(t, d)

    def bar_parity(self, d: Sequence[int]) -> int:
        self._check(d)
        s = sum(d[i] for i in range(self.nu) if self.e[i] == -1)
        s += sum(d[i] * d[j] for i in range(self.nu) for j in range(i + 1, self.nu) if self.q[i][j] == -1)
        return s % 2

    def bar_sign(self, d: Sequence[int]) -> int:
        return -1 if self.bar_parity(d) else 1

    def is_central(self, d: Sequence[int]) -> bool:
        unit = [tuple(1 if i == j else 0 for i in range(self.nu)) for j in range(self.nu)]
        return all(self.commutation(d, u) == 1 for u in unit)

    def in_z(self, d: Sequence[int]) -> bool:
        return self.bar_parity(d) == 0


class TorusElement:
    """Finite sum of c x^delta; zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Exponent, object]] = None):
        self.terms = {tuple(k): v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def monomial(cls, delta: Sequence[int], coeff=1) -> "TorusElement":
        return cls({tuple(delta): Fraction(coeff) if isinstance(coeff, int) else coeff})

    def __add__(self, other: "TorusElement") -> "TorusElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TorusElement(out)

    def __neg__(self) -> "TorusElement":
        return TorusElement({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "TorusElement") -> "TorusElement":
        return self + (-other)

    def scale(self, c) -> "TorusElement":
        return TorusElement({k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, TorusElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def epsilon(self):
        """Coefficient of x^0."""
        for k, v in self.terms.items():
            if not any(k):
                return v
        return Fraction(0)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*x^{k}" for k, v in sorted(self.terms.items()))


def torus_mul(t: TorusPresentation, a: TorusElement, b: TorusElement) -> TorusElement:
    out: Dict[Exponent, object] = {}
    for d, x in a.terms.items():
        for s, y in b.terms.items():
            k = tuple(i + j for i, j in zip(d, s))
            if len(d) != t.nu or len(s) != t.nu:
                raise ValueError("nu mismatch")
            out[k] = out.get(k, 0) + t.cocycle(d, s) * x * y
    return TorusElement(out)


def torus_bar(t: TorusPresentation, a: TorusElement) -> TorusElement:
    out = {}
    for d, x in a.terms.items():
        if len(d) != t.nu:
            raise ValueError("nu mismatch")
        out[d] = t.bar_sign(d) * _conj(x)
    return TorusElement(out)


def monomial_inverse(t: TorusPresentation, delta: Sequence[int], coeff=Fraction(1)) -> TorusElement:
    """Inverse of c x^delta: x^delta x^{-delta} = c(delta, -delta)."""
    neg = tuple(-x for x in delta)
    return TorusElement.monomial(neg, t.cocycle(delta, neg) / coeff)


def z_eq(t: TorusPresentation) -> Semilattice:
    """Cosets mod 2 of the exponents with x-bar^delta = x^delta."""
    cosets = [c for c in box(1, t.nu) if all(x >= 0 for x in c) and t.in_z(c)]
    return Semilattice(t.nu, frozenset(cosets))


# --- matrices ---------------------------------------------------------------

class TorusMatrix:
    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: Optional[Dict[Tuple[int, int], TorusElement]] = None):
        self.n = n
        self.entries: Dict[Tuple[int, int], TorusElement] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < n and 0 <= c < n):
                raise ValueError("matrix index out of range")
            if v:
                self.entries[(r, c)] = v

    @classmethod
    def identity(cls, n: int, nu: int) -> "TorusMatrix":
        return cls(n, {(i, i): TorusElement.monomial((0,) * nu) for i in range(n)})

    @classmethod
    def from_vec(cls, n: int, vec: Dict[Mono, object]) -> "TorusMatrix":
        entries: Dict[Tuple[int, int], Dict[Exponent, object]] = {}
        for (d, p, q), c in vec.items():
            cell = entries.setdefault((p, q), {})
            cell[d] = cell.get(d, 0) + c
        return cls(n, {k: TorusElement(v) for k, v in entries.items()})

    def to_vec(self) -> Dict[Mono, object]:
        return {(d, p, q): c for (p, q), el in self.entries.items() for d, c in el.terms.items()}

    def __add__(self, other: "TorusMatrix") -> "TorusMatrix":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return TorusMatrix(self.n, out)

    def __neg__(self) -> "TorusMatrix":
        return TorusMatrix(self.n, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "TorusMatrix") -> "TorusMatrix":
        return self + (-other)

    def scale(self, c) -> "TorusMatrix":
        return TorusMatrix(self.n, {k: v.scale(c) for k, v in self.entries.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, TorusMatrix) and self.n == other.n and self.entries == other.entries

    def __bool__(self) -> bool:
        return bool(self.entries)

    def mul(self, t: TorusPresentation, other: "TorusMatrix") -> "TorusMatrix":
        if self.n != other.n:
            raise ValueError("size mismatch")
        rows: Dict[int, List[Tuple[int, TorusElement]]] = {}
        for (r, c), v in other.entries.items():
            rows.setdefault(r, []).append((c, v))
        out: Dict[Tuple[int, int], TorusElement] = {}
        for (i, k), a in self.entries.items():
            for j, b in rows.get(k, ()):
                p = torus_mul(t, a, b)
                out[(i, j)] = out[(i, j)] + p if (i, j) in out else p
        return TorusMatrix(self.n, out)

    def bracket(self, t: TorusPresentation, other: "TorusMatrix") -> "TorusMatrix":
        return self.mul(t, other) - other.mul(t, self)

    def transpose(self) -> "TorusMatrix":
        return TorusMatrix(self.n, {(c, r): v for (r, c), v in self.entries.items()})

    def bar_transpose(self, t: TorusPresentation) -> "TorusMatrix":
        return TorusMatrix(self.n, {(c, r): torus_bar(t, v) for (r, c), v in self.entries.items()})

    def trace(self) -> TorusElement:
        out = TorusElement()
        for (r, c), v in self.entries.items():
            if r == c:
                out = out + v
        return out

    def block(self, rows: range, cols: range) -> "TorusMatrix":
        """Square sub-block; rows and cols must have the same length."""
        if len(rows) != len(cols):
            raise ValueError("blocks must be square here; use rect_block")
        return self.rect_block(rows, cols)

    def rect_block(self, rows: range, cols: range) -> "RectMatrix":
        return RectMatrix(len(rows), len(cols),
                          {(r - rows.start, c - cols.start): v for (r, c), v in self.entries.items()
                           if r in rows and c in cols})

    def monomial_inverse(self, t: TorusPresentation) -> "TorusMatrix":
        """Inverse of a matrix with exactly one monomial entry in each row and column."""
        rows = {r for r, _ in self.entries}
        cols = {c for _, c in self.entries}
        if len(self.entries) != self.n or len(rows) != self.n or len(cols) != self.n:
            raise ValueError("not a monomial matrix")
        out = {}
        for (r, c), v in self.entries.items():
            if len(v.terms) != 1:
                raise ValueError("not a monomial matrix")
            (d, coeff), = v.terms.items()
            out[(c, r)] = monomial_inverse(t, d, coeff)
        return TorusMatrix(self.n, out)

    def __repr__(self) -> str:
        return f"TorusMatrix({self.n}, {dict(sorted(self.entries.items()))})"


class RectMatrix:
    """Rectangular matrix over the torus, used for block-shape predicates."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows, self.cols = rows, cols
        self.entries = {k: v for k, v in (entries or {}).items() if v}

    @classmethod
    def diag(cls, t: TorusPresentation, exps: Sequence[Exponent]) -> "RectMatrix":
        k = len(exps)
        return cls(k, k, {(i, i): TorusElement.monomial(e) for i, e in enumerate(exps)})

    @classmethod
    def identity(cls, k: int, nu: int) -> "RectMatrix":
        return cls.diag(None, [(0,) * nu] * k)

    def __add__(self, other):
        self._same(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return RectMatrix(self.rows, self.cols, out)

    def __neg__(self):
        return RectMatrix(self.rows, self.cols, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def _same(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __eq__(self, other) -> bool:
        return isinstance(other, RectMatrix) and (self.rows, self.cols) == (other.rows, other.cols) \
            and self.entries == other.entries

    def __bool__(self):
        return bool(self.entries)

    def mul(self, t: TorusPresentation, other: "RectMatrix") -> "RectMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out: Dict[Tuple[int, int], TorusElement] = {}
        for (i, k), a in self.entries.items():
            for (k2, j), b in other.entries.items():
                if k == k2:
                    p = torus_mul(t, a, b)
                    out[(i, j)] = out[(i, j)] + p if (i, j) in out else p
        return RectMatrix(self.rows, other.cols, out)

    def T(self) -> "RectMatrix":
        return RectMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def barT(self, t: TorusPresentation) -> "RectMatrix":
        return RectMatrix(self.cols, self.rows, {(c, r): torus_bar(t, v) for (r, c), v in self.entries.items()})

    def inverse_diag(self, t: TorusPresentation) -> "RectMatrix":
        out = {}
        for (r, c), v in self.entries.items():
            if r != c or len(v.terms) != 1:
                raise ValueError("not a monomial diagonal matrix")
            (d, coeff), = v.terms.items()
            out[(r, r)] = monomial_inverse(t, d, coeff)
        return RectMatrix(self.rows, self.cols, out)


def assemble(sizes: Sequence[int], blocks: Dict[Tuple[int, int], RectMatrix]) -> TorusMatrix:
    """Square matrix from a block dictionary keyed by (block row, block col)."""
    offs = [sum(sizes[:i]) for i in range(len(sizes))]
    entries: Dict[Tuple[int, int], TorusElement] = {}
    for (bi, bj), m in blocks.items():
        if (m.rows, m.cols) != (sizes[bi], sizes[bj]):
            raise ValueError("block shape mismatch")
        for (r, c), v in m.entries.items():
            entries[(offs[bi] + r, offs[bj] + c)] = v
    return TorusMatrix(sum(sizes), entries)


def split(x: TorusMatrix, sizes: Sequence[int]) -> Dict[Tuple[int, int], RectMatrix]:
    offs = [sum(sizes[:i]) for i in range(len(sizes) + 1)]
    return {(i, j): x.rect_block(range(offs[i], offs[i + 1]), range(offs[j], offs[j + 1]))
            for i in range(len(sizes)) for j in range(len(sizes))}


def matrix_form(t: TorusPresentation, x: TorusMatrix, y: TorusMatrix):
    """(X, Y) = epsilon(tr(XY))."""
    return x.mul(t, y).trace().epsilon()


# --- involutions and the graded engine -----------------------------------------

@dataclass(frozen=True)
class MatrixInvolution:
    """Y -> sign * G^{-1} op(Y) G with op one of transpose, bar-transpose, identity."""

    name: str
    sign: int
    g: TorusMatrix = field(compare=False)
    mode: str  # "transpose" | "bar-transpose" | "identity"
    torus: TorusPresentation = field(compare=False)

    def __post_init__(self):
        if self.mode not in ("transpose", "bar-transpose", "identity"):
            raise ValueError(f"unknown involution mode {self.mode!r}")

    @cached_property
    def g_inv(self) -> TorusMatrix:
        return self.g.monomial_inverse(self.torus)

    def apply(self, y: TorusMatrix) -> TorusMatrix:
        t = self.torus
        if self.mode == "transpose":
            y = y.transpose()
        elif self.mode == "bar-transpose":
            y = y.bar_transpose(t)
        out = self.g_inv.mul(t, y).mul(t, self.g)
        return out if self.sign == 1 else -out


class GradedMatrixAlgebra:
    """Subalgebra of sl_N(A) cut out by involutions, graded by deg(x^d e_pq) = 2d + lam_p - lam_q.

    Each homogeneous block (degree, weight for the given diagonal Cartan basis)
    is finite dimensional; its eigenspaces are computed exactly on demand.
    """

    def __init__(self, torus: TorusPresentation, n: int, lambdas: Sequence[Exponent],
                 involutions: Sequence[MatrixInvolution], cartan: Sequence[Sequence[int]]):
        if len(lambdas) != n or any(len(lam) != torus.nu for lam in lambdas):
            raise ValueError("lambda list does not match the matrix size")
        self.torus = torus
        self.n = n
        self.lambdas = [tuple(l) for l in lambdas]
        self.involutions = list(involutions)
        self.cartan = [tuple(h) for h in cartan]
        self._blocks: Dict[Exponent, Dict[tuple, List[Mono]]] = {}
        self._images: Dict[Tuple[int, Mono], Dict[Mono, object]] = {}
        self._eigen: Dict[tuple, List[Vec]] = {}

    @property
    def nu(self) -> int:
        return self.torus.nu

    def weight(self, p: int, q: int) -> tuple:
        return tuple(h[p] - h[q] for h in self.cartan)

    def degree(self, mono: Mono) -> Exponent:
        d, p, q = mono
        return tuple(2 * a + b - c for a, b, c in zip(d, self.lambdas[p], self.lambdas[q]))

    def blocks(self, gamma: Sequence[int]) -> Dict[tuple, List[Mono]]:
        gamma = tuple(gamma)
        if gamma not in self._blocks:
            out: Dict[tuple, List[Mono]] = {}
            for p in range(self.n):
                for q in range(self.n):
                    diff = [g - a + b for g, a, b in zip(gamma, self.lambdas[p], self.lambdas[q])]
                    if all(x % 2 == 0 for x in diff):
                        out.setdefault(self.weight(p, q), []).append((tuple(x // 2 for x in diff), p, q))
            self._blocks[gamma] = out
        return self._blocks[gamma]

    def image(self, k: int, mono: Mono) -> Dict[Mono, object]:
        key = (k, mono)
        if key not in self._images:
            d, p, q = mono
            y = TorusMatrix(self.n, {(p, q): TorusElement.monomial(d)})
            self._images[key] = self.involutions[k].apply(y).to_vec()
        return self._images[key]

    def apply(self, k: int, vec: Dict[Mono, object]) -> Dict[Mono, object]:
        out: Dict[Mono, object] = {}
        for mono, c in vec.items():
            for m2, c2 in self.image(k, mono).items():
                out[m2] = out.get(m2, 0) + c * c2
        return {m: c for m, c in out.items() if c != 0}

    def eigenspace(self, gamma: Sequence[int], w: Sequence, signs: Optional[Sequence[int]] = None) -> List[Vec]:
        """Basis of {v in block : theta_k v = signs[k] v, trace condition}; default all +1."""
        gamma, w = tuple(gamma), tuple(w)
        signs = tuple(signs) if signs is not None else (1,) * len(self.involutions)
        key = (gamma, w, signs)
        if key in self._eigen:
            return self._eigen[key]
        monos = self.blocks(gamma).get(w, [])
        index = {m: i for i, m in enumerate(monos)}
        rows = []
        for k, s in enumerate(signs):
            cols = []
            for m in monos:
                img = self.image(k, m)
                for m2 in img:
                    if m2 not in index:
                        raise AutomorphismError(
                            f"automorphism axiom A2 failed: {self.involutions[k].name} moves {m} out of its block")
                cols.append(img)
            for i, m in enumerate(monos):
                row = [Fraction(0)] * len(monos)
                for j, img in enumerate(cols):
                    row[j] = Fraction(img.get(m, 0))
                row[i] -= s
                rows.append(row)
        if not any(w):
            # tr(X) = 0 modulo [A, A]: only central monomials are constrained
            by_delta: Dict[Exponent, List[int]] = {}
            for i, (d, p, q) in enumerate(monos):
                if p == q:
                    by_delta.setdefault(d, []).append(i)
            for d, idx in by_delta.items():
                if self.torus.is_central(d):
                    rows.append([Fraction(1) if i in idx else Fraction(0) for i in range(len(monos))])
        basis = linalg.nullspace(rows, len(monos)) if monos else []
        out = [{monos[i]: c for i, c in enumerate(v) if c != 0} for v in basis]
        self._eigen[key] = out
        return out

    def dim(self, gamma: Sequence[int], w: Sequence, signs=None) -> int:
        return len(self.eigenspace(gamma, w, signs))

    def weights(self, gamma: Sequence[int]) -> List[tuple]:
        return sorted(self.blocks(gamma))

    def as_matrix(self, vec: Dict[Mono, object]) -> TorusMatrix:
        return TorusMatrix.from_vec(self.n, vec)

    def form(self, x: Dict[Mono, object], y: Dict[Mono, object]):
        return matrix_form(self.torus, self.as_matrix(x), self.as_matrix(y))

    def bracket(self, x: Dict[Mono, object], y: Dict[Mono, object]) -> Dict[Mono, object]:
        t = self.torus
        return self.as_matrix(x).bracket(t, self.as_matrix(y)).to_vec()


# --- example recipes ----------------------------------------------------------

EXAMPLE_IDS = ("3.6", "3.7", "3.8", "3.9", "3.11")


@dataclass(frozen=True)
class ExampleScenario:
    example_id: str
    l: int
    torus: TorusPresentation
    m: int = 0
    tau: Tuple[Exponent, ...] = ()
    window: int = 2

    def __post_init__(self):
        object.__setattr__(self, "tau", tuple(tuple(int(x) for x in t) for t in self.tau))
        ex, t = self.example_id, self.torus
        if ex not in EXAMPLE_IDS:
            raise ValueError(f"unknown example {ex!r}")
        if self.l < 1 or self.window < 0:
            raise ValueError("need l >= 1 and a non-negative window")
        if ex in ("3.6", "3.8"):
            if self.m or self.tau:
                raise ValueError(f"example {ex} takes no tau list")
            if ex == "3.6" and not t.is_trivial:
                raise ValueError("example 3.6 needs e = 1 and q = 1")
            if ex == "3.8" and self.l < 2:
                raise ValueError("example 3.8 needs l >= 2")
            return
        if self.m < 1 or len(self.tau) != self.m:
            raise ValueError("need m >= 1 coset representatives tau")
        if any(len(x) != t.nu for x in self.tau):
            raise ValueError("nu mismatch in tau")
        if len({mod_vec(x, 2) for x in self.tau}) != self.m:
            raise ValueError("tau must represent distinct cosets of 2Z^nu")
        if ex in ("3.7", "3.9") and any(self.tau[0]):
            raise ValueError("tau_1 must be 0")
        if ex == "3.7" and not all(t.in_z(x) for x in self.tau):
            raise ValueError("example 3.7 needs every tau_i in Z_{e,q}")
        if ex == "3.9" and not t.is_commutative:
            raise ValueError("example 3.9 needs a commutative torus")
        if ex == "3.11":
            if t.is_trivial:
                raise ValueError("example 3.11 needs e != 1 or q != 1")
            if any(t.in_z(x) for x in self.tau):
                raise ValueError("example 3.11 needs every tau_i outside Z_{e,q}")

    @classmethod
    def from_json(cls, data: dict) -> "ExampleScenario":
        ex = str(data["example"])
        if "e" in data:
            torus = TorusPresentation.from_json(data["e"], data.get("q"))
        else:
            torus = TorusPresentation.trivial(int(data.get("nu", 1)))
        tau = tuple(tuple(x) for x in data.get("tau", ()))
        m = int(data.get("m", len(tau)))
        if ex in ("3.7", "3.9", "3.11") and not tau:
            tau = default_tau(ex, torus, m or 1)
            m = len(tau)
        return cls(ex, int(data["l"]), torus, m, tau, int(data.get("window", 2)))

    def to_json(self) -> dict:
        out = {"example": self.example_id, "l": self.l, **self.torus.to_json(), "window": self.window}
        if self.tau:
            out["m"] = self.m
            out["tau"] = [list(x) for x in self.tau]
        return out


def default_tau(example_id: str, torus: TorusPresentation, m: int) -> Tuple[Exponent, ...]:
    """First m admissible coset representatives in enumeration order."""
    cands = sorted((c for c in box(1, torus.nu) if all(x >= 0 for x in c)), key=lambda c: (sum(c), c[::-1]))
    if example_id == "3.11":
        cands = [c for c in cands if not torus.in_z(c)]
    elif example_id == "3.7":
        cands = [c for c in cands if torus.in_z(c)]
    if len(cands) < m:
        raise ValueError(f"only {len(cands)} admissible cosets for m = {m}")
    return tuple(cands[:m])


@dataclass
class ExampleSetup:
    scenario: ExampleScenario
    n: int
    sizes: Tuple[int, ...]
    lambdas: List[Exponent]
    ambient_involutions: List[MatrixInvolution]
    sigma: MatrixInvolution
    ambient_cartan: List[Tuple[int, ...]]
    h_sigma: List[Tuple[int, ...]]
    f: Optional[RectMatrix]


def _diag_vec(n: int, plus: int, minus: int) -> Tuple[int, ...]:
    return tuple(1 if i == plus else -1 if i == minus else 0 for i in range(n))


def build_example(sc: ExampleScenario) -> ExampleSetup:
    t, l, m, nu = sc.torus, sc.l, sc.m, sc.torus.nu
    zero = (0,) * nu
    I = lambda k: RectMatrix.identity(k, nu)
    f = RectMatrix.diag(t, sc.tau) if sc.tau else None
    ex = sc.example_id
    if ex in ("3.6", "3.8"):
        n = 2 * l
        sizes = (l, l)
        lambdas = [zero] * n
        if ex == "3.6":
            k = assemble(sizes, {(0, 1): I(l), (1, 0): I(l)})
            sigma = MatrixInvolution("sigma", -1, k, "transpose", t)
        else:
            k = assemble(sizes, {(0, 1): I(l), (1, 0): -I(l)})
            sigma = MatrixInvolution("sigma", -1, k, "bar-transpose", t)
        ambient: List[MatrixInvolution] = []
        cartan = [_diag_vec(n, i, i + 1) for i in range(n - 1)]
        hs = [_diag_vec(n, i, l + i) for i in range(l)]
    elif ex == "3.7":
        n = 2 * l + m
        sizes = (l, l, m)
        lambdas = [zero] * (2 * l) + list(sc.tau)
        g = assemble(sizes, {(0, 1): I(l), (1, 0): I(l), (2, 2): f})
        sigma = MatrixInvolution("sigma", -1, g, "bar-transpose", t)
        ambient = []
        cartan = [_diag_vec(n, i, i + 1) for i in range(n - 1)]
        hs = [_diag_vec(n, i, l + i) for i in range(l)]
    else:
        nn = l + m
        n = 2 * nn
        sizes = (l, m, l, m)
        neg = [tuple(-x for x in tau) for tau in sc.tau]
        lambdas = [zero] * l + neg + [zero] * l + list(sc.tau)
        halves = (nn, nn)
        finv = f.inverse_diag(t)
        if ex == "3.9":
            k0 = assemble(halves, {(0, 1): I(nn), (1, 0): I(nn)})
            theta = MatrixInvolution("theta", -1, k0, "transpose", t)
            k = assemble(sizes, {(0, 0): I(l), (1, 3): f, (2, 2): I(l), (3, 1): finv})
            sigma = MatrixInvolution("sigma", 1, k, "identity", t)
        else:
            k0 = assemble(halves, {(0, 1): I(nn), (1, 0): -I(nn)})
            theta = MatrixInvolution("theta", -1, k0, "bar-transpose", t)
            k = assemble(sizes, {(0, 2): I(l), (1, 1): -finv, (2, 0): -I(l), (3, 3): f})
            sigma = MatrixInvolution("sigma", -1, k, "bar-transpose", t)
        ambient = [theta]
        cartan = [_diag_vec(n, i, nn + i) for i in range(nn)]
        hs = [_diag_vec(n, i, nn + i) for i in range(l)]
    return ExampleSetup(sc, n, sizes, lambdas, ambient, sigma, cartan, hs, f)


class ExampleRun:
    """Lazily computed ambient algebra and fixed-point algebra of one scenario."""

    def __init__(self, sc: ExampleScenario):
        self.scenario = sc
        self.setup = build_example(sc)
        s = self.setup
        self.ambient = GradedMatrixAlgebra(sc.torus, s.n, s.lambdas, s.ambient_involutions, s.ambient_cartan)
        self.fixed = GradedMatrixAlgebra(sc.torus, s.n, s.lambdas, s.ambient_involutions + [s.sigma], s.h_sigma)
        # the same algebra with weights for the full ambient Cartan, used for A3 and parity checks
        self.split = GradedMatrixAlgebra(sc.torus, s.n, s.lambdas, s.ambient_involutions + [s.sigma],
                                         s.ambient_cartan)

    @property
    def torus(self) -> TorusPresentation:
        return self.scenario.torus

    @property
    def nu(self) -> int:
        return self.scenario.torus.nu

    def degrees(self, radius: Optional[int] = None) -> List[Exponent]:
        r = self.scenario.window if radius is None else radius
        return [tuple(g) for g in box(r, self.nu)]

    def sigma_index(self) -> int:
        return len(self.setup.ambient_involutions)

    @cached_property
    def h_gram_inverse(self) -> List[List[Fraction]]:
        hs = self.setup.h_sigma
        gram = [[Fraction(sum(a * b for a, b in zip(h, k))) for k in hs] for h in hs]
        return linalg.inverse(gram)

    # -- automorphism conditions ------------------------------------------------

    def window_monomials(self, radius: Optional[int] = None) -> List[Mono]:
        return [m for g in self.degrees(radius) for ms in self.ambient.blocks(g).values() for m in ms]

    def check_period_two(self) -> "Check":
        """A1: every involution squares to the identity on the window monomials."""
        eng = self.fixed
        for k, inv in enumerate(eng.involutions):
            for mono in self.window_monomials():
                if eng.apply(k, eng.image(k, mono)) != {mono: 1}:
                    return Check(False, f"automorphism axiom A1 failed: {inv.name}^2 moves {mono}")
        return Check(True)

    def check_cartan_stable(self) -> "Check":
        """A2: sigma maps the ambient Cartan into itself and fixes h^sigma."""
        eng = self.fixed
        k = self.sigma_index()
        zero = (0,) * self.nu
        diag = {(zero, i, i) for i in range(self.setup.n)}
        for h in self.setup.ambient_cartan:
            vec = {(zero, i, i): Fraction(c) for i, c in enumerate(h) if c}
            if not set(eng.apply(k, vec)) <= diag:
                return Check(False, "automorphism axiom A2 failed: Cartan not stable")
        for h in self.setup.h_sigma:
            vec = {(zero, i, i): Fraction(c) for i, c in enumerate(h) if c}
            if eng.apply(k, vec) != vec:
                return Check(False, "automorphism axiom A2 failed: h^sigma not fixed")
        return Check(True)

    def check_a4(self) -> "Check":
        """A4 via the criterion 0 != alpha in R implies alpha restricted to H^sigma != 0,
        plus the equality of the fixed weight-0 degree-0 space with h^sigma."""
        zero_w = (0,) * len(self.setup.h_sigma)
        for g in self.degrees():
            for w, monos in self.ambient.blocks(g).items():
                if (any(w) or any(g)) and self.ambient.dim(g, w):
                    _, p, q = monos[0]
                    if not any(g) and self.fixed.weight(p, q) == zero_w:
                        return Check(False, f"A4 criterion fails for ambient root {w} at degree {g}")
        zero = (0,) * self.nu
        basis = self.fixed.eigenspace(zero, zero_w)
        monos = self.fixed.blocks(zero).get(zero_w, [])
        rows = [[v.get(mm, Fraction(0)) for mm in monos] for v in basis]
        for h in self.setup.h_sigma:
            hv = [Fraction(h[p]) if p == q and not any(d) else Fraction(0) for d, p, q in monos]
            if not linalg.in_span(rows, hv):
                return Check(False, "h^sigma is not inside the fixed Cartan block")
        if len(basis) != len(self.setup.h_sigma):
            return Check(False, f"fixed weight-0 degree-0 space has dimension {len(basis)}, "
                                f"expected {len(self.setup.h_sigma)}")
        return Check(True)

    # -- shapes -------------------------------------------------------------------

    def shape_check(self, x: TorusMatrix) -> bool:
        return check_shape(self.setup, x)


@dataclass
class Check:
    passed: bool
    note: str = ""

    def to_json(self) -> dict:
        out = {"passed": self.passed}
        if self.note:
            out["note"] = self.note
        return out


def check_shape(s: ExampleSetup, x: TorusMatrix) -> bool:
    """Block-shape description of the fixed points for each example recipe."""
    t = s.scenario.torus
    ex = s.scenario.example_id
    b = split(x, s.sizes)
    f = s.f
    if ex == "3.6":
        a, bb, c, d = b[0, 0], b[0, 1], b[1, 0], b[1, 1]
        return d == -a.T() and bb.T() == -bb and c.T() == -c
    if ex == "3.8":
        a, ss, tt, d = b[0, 0], b[0, 1], b[1, 0], b[1, 1]
        return d == -a.barT(t) and ss.barT(t) == ss and tt.barT(t) == tt
    finv = f.inverse_diag(t)
    if ex == "3.7":
        a, ss, tt = b[0, 0], b[0, 1], b[1, 0]
        c, d, bb = b[2, 0], b[2, 1], b[2, 2]
        return (b[1, 1] == -a.barT(t) and b[0, 2] == -d.barT(t).mul(t, f)
                and b[1, 2] == -c.barT(t).mul(t, f) and ss.barT(t) == -ss and tt.barT(t) == -tt
                and finv.mul(t, bb.barT(t)).mul(t, f) == -bb)
    a, ss, tt = b[0, 0], b[0, 2], b[2, 0]
    c, p, d, bb = b[3, 0], b[3, 1], b[3, 2], b[3, 3]
    if ex == "3.9":
        expected = {
            (0, 1): -d.T(), (0, 3): -d.T().mul(t, f),
            (1, 0): f.mul(t, c), (1, 1): -bb.T(), (1, 2): f.mul(t, d), (1, 3): f.mul(t, p).mul(t, f),
            (2, 1): -c.T(), (2, 2): -a.T(), (2, 3): -c.T().mul(t, f),
        }
        ok = ss.T() == -ss and tt.T() == -tt and p.T() == -p and finv.mul(t, bb.T()).mul(t, f) == -bb
        return ok and all(b[k] == v for k, v in expected.items())
    expected = {
        # the printed shape has D-bar^t here; S'-bar^t = S' for the ambient block forces D-bar^t F
        (0, 1): -d.barT(t), (0, 3): d.barT(t).mul(t, f),
        (1, 0): -f.mul(t, c), (1, 1): -bb.barT(t), (1, 2): -f.mul(t, d), (1, 3): f.mul(t, p).mul(t, f),
        (2, 1): c.barT(t), (2, 2): -a.barT(t), (2, 3): -c.barT(t).mul(t, f),
    }
    ok = ss.barT(t) == ss and tt.barT(t) == tt and p.barT(t) == p \
        and finv.mul(t, bb.barT(t)).mul(t, f) == -bb
    return ok and all(b[k] == v for k, v in expected.items())


# --- roots of the fixed algebra ---------------------------------------------------

def expected_types(sc: ExampleScenario) -> List[str]:
    """Type of R^sigma claimed for each recipe."""
    l, ex = sc.l, sc.example_id
    if ex == "3.6":
        return {1: [], 2: ["A1", "A1"], 3: ["A3"]}.get(l, [f"D{l}"])
    if ex == "3.7":
        if not sc.torus.is_trivial:
            return [f"BC{l}"]
        return ["A1"] if l == 1 else [f"B{l}"]
    if ex == "3.8":
        return [f"C{l}"]
    if ex == "3.9":
        return ["A1"] if l == 1 else [f"B{l}"]
    return [f"BC{l}"]


@dataclass
class RootsReport:
    window: int
    roots: List[Tuple[int, ...]]
    multiplicities: Dict[Tuple[int, ...], int]
    types: List[str]
    expected: List[str]
    k: int
    isolated: List[Tuple[int, ...]]
    a4: Check

    @property
    def matches(self) -> bool:
        return sorted(self.types) == sorted(self.expected)

    def to_json(self) -> dict:
        return {
            "window": self.window,
            "root_count": len(self.roots),
            "roots": [{"root": list(r), "mult": self.multiplicities[r]} for r in self.roots],
            "types": self.types,
            "expected_types": self.expected,
            "types_match": self.matches,
            "k": self.k,
            "isolated_in_window": [list(r) for r in self.isolated],
            "A4": self.a4.to_json(),
        }


def root_form(run: ExampleRun):
    from .lattice import RationalForm
    g = run.h_gram_inverse
    return RationalForm(tuple(map(tuple, g))).extended(run.nu)


def fixed_root_oracle(run: ExampleRun):
    """Exact membership: block dimensions are periodic in the degree modulo 4."""
    L = len(run.setup.h_sigma)

    def contains(v) -> bool:
        v = tuple(int(x) for x in v)
        if not any(v):
            return True
        w, g = v[:L], v[L:]
        return run.fixed.dim(mod_vec(g, 4), w) > 0

    return contains


def roots_of_fixed(sc: ExampleScenario, run: Optional[ExampleRun] = None) -> RootsReport:
    from . import ears, finroot
    run = run or ExampleRun(sc)
    a4 = run.check_a4()
    if not a4.passed:
        return RootsReport(sc.window, [], {}, [], expected_types(sc), 0, [], a4)
    L = len(run.setup.h_sigma)
    mult: Dict[Tuple[int, ...], int] = {}
    for g in run.degrees():
        for w in run.fixed.weights(g):
            d = run.fixed.dim(g, w)
            if d:
                mult[tuple(w) + tuple(g)] = d
    mult[(0,) * (L + run.nu)] = L + 2 * run.nu
    roots = sorted(mult)
    form = root_form(run)
    wform_gram = tuple(tuple(r[:L]) for r in form.gram[:L])
    from .lattice import RationalForm
    wform = RationalForm(wform_gram)
    finite = {r[:L] for r in roots if any(r[:L])}
    types = [str(t) for t, _ in finroot.classify(finite, wform)] if finite else []
    comps, isolated = ears.decompose(roots, form, contains=fixed_root_oracle(run))
    return RootsReport(sc.window, roots, mult, types, expected_types(sc), len(comps), isolated, a4)


# --- core and tameness -------------------------------------------------------------

@dataclass
class TamenessReport:
    verdict: str  # "core = G^sigma ∩ G_c" | "core ≠ G^sigma ∩ G_c" | "inconclusive-at-radius"
    per_degree: List[dict] = field(default_factory=list)
    core_inside: bool = True
    witness: Optional[dict] = None
    relation_check: Optional[Check] = None
    explicit_witness: Optional[dict] = None

    @property
    def equal(self) -> Optional[bool]:
        if self.verdict == "inconclusive-at-radius":
            return None
        return self.verdict.startswith("core =")

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "core_inside_fixed": self.core_inside, "per_degree": self.per_degree}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.relation_check is not None:
            out["relation_check"] = self.relation_check.to_json()
        if self.explicit_witness is not None:
            out["explicit_witness"] = self.explicit_witness
        return out


def vec_to_json(vec: Dict[Mono, object]) -> List[dict]:
    return [{"delta": list(d), "row": p, "col": q, "coeff": str(c)} for (d, p, q), c in sorted(vec.items())]


def _core_block(run: ExampleRun, gamma: Exponent, pair_radius: int, weights: List[tuple]) -> List[dict]:
    """Spanning set of the core at (weight 0, gamma): brackets of opposite nonisotropic root vectors.

    The central part of [x, y] is sum_i gamma1_i (x, y) c_i.  Shifting gamma1 by
    4 multiplies x and y by mutually inverse central bar-fixed monomials, which
    leaves the bracket unchanged, so a pair window of radius >= 2 is exhaustive.
    """
    eng = run.fixed
    out = []
    for g1 in box(pair_radius, run.nu):
        g2 = tuple(a - b for a, b in zip(gamma, g1))
        for w in weights:
            xs = eng.eigenspace(g1, w)
            if not xs:
                continue
            ys = eng.eigenspace(g2, tuple(-a for a in w))
            for x in xs:
                for y in ys:
                    v = dict(eng.bracket(x, y))
                    if not any(gamma):
                        pair = eng.form(x, y)
                        for i, gi in enumerate(g1):
                            if gi and pair:
                                v[("c", i)] = gi * pair
                    v = {k: c for k, c in v.items() if c != 0}
                    if v:
                        out.append(v)
    return out


def _coords(keys: List, vec: dict) -> List[Fraction]:
    index = {k: i for i, k in enumerate(keys)}
    row = [Fraction(0)] * len(keys)
    for k, c in vec.items():
        if k not in index:
            raise AutomorphismError(f"bracket left its block at {k}")
        row[index[k]] = Fraction(c)
    return row


def _relation_blocks(run: ExampleRun, vec: Dict[Mono, object]):
    s = run.setup
    t = run.torus
    b = split(run.fixed.as_matrix(vec), s.sizes)
    p, bb = b[3, 1], b[3, 3]
    finv = s.f.inverse_diag(t)
    return p, bb.mul(t, finv)


def core_and_tameness(sc: ExampleScenario, run: Optional[ExampleRun] = None) -> TamenessReport:
    run = run or ExampleRun(sc)
    r = sc.window
    if r < 2:
        return TamenessReport("inconclusive-at-radius")
    eng = run.fixed
    L = len(run.setup.h_sigma)
    zero_w = (0,) * L
    weights = sorted({w for g in box(2 * r, run.nu) for w in eng.weights(g) if any(w) and eng.dim(g, w)})
    per_degree = []
    inside = True
    witness = None
    cores: Dict[Exponent, List[dict]] = {}
    for g in run.degrees():
        monos = eng.blocks(g).get(zero_w, [])
        keys: List = list(monos) + ([("c", i) for i in range(run.nu)] if not any(g) else [])
        fixed = [_coords(keys, v) for v in eng.eigenspace(g, zero_w)]
        if not any(g):
            fixed += [[Fraction(1) if k == ("c", i) else Fraction(0) for k in keys] for i in range(run.nu)]
        core = _core_block(run, g, 2 * r, weights)
        cores[g] = core
        core_rows = linalg.row_space([_coords(keys, v) for v in core]) if core else []
        if any(not linalg.in_span(fixed, row) for row in core_rows):
            inside = False
        per_degree.append({"degree": list(g), "core_dim": len(core_rows), "fixed_dim": len(fixed)})
        if witness is None and len(core_rows) < len(fixed):
            for v in eng.eigenspace(g, zero_w):
                if not linalg.in_span(core_rows, _coords(keys, v)):
                    witness = {"degree": list(g), "element": vec_to_json(v), "_vec": v}
                    break
    verdict = "core = G^sigma ∩ G_c" if witness is None else "core ≠ G^sigma ∩ G_c"
    report = TamenessReport(verdict, per_degree, inside)
    ex = sc.example_id
    if ex in ("3.9", "3.11"):
        report.relation_check = _relation_check(run, cores, witness)
    if witness is not None:
        witness.pop("_vec")
        report.witness = witness
    if ex == "3.11":
        report.explicit_witness = explicit_311_witness(run, cores)
    return report


def _relation_check(run: ExampleRun, cores, witness) -> Check:
    """Core elements obey P = B F^{-1} (3.9) or P = -B F^{-1} (3.11); the witness violates it."""
    sgn = 1 if run.scenario.example_id == "3.9" else -1
    for g, core in cores.items():
        for v in core:
            mv = {k: c for k, c in v.items() if k[0] != "c"}
            p, bf = _relation_blocks(run, mv)
            if p != (bf if sgn == 1 else -bf):
                return Check(False, f"core element at degree {list(g)} breaks the P relation")
    if witness is not None:
        p, bf = _relation_blocks(run, witness["_vec"])
        if p == (bf if sgn == 1 else -bf):
            return Check(False, "witness satisfies the P relation")
        return Check(True, "core obeys the P relation; witness violates it")
    return Check(True, "core obeys the P relation")


def explicit_311_witness(run: ExampleRun, cores) -> dict:
    """X with A=S=T=C=D=0, P=I, B=F: fixed, orthogonal to the core, not in the core."""
    s = run.setup
    t = run.torus
    l, m, nu = s.scenario.l, s.scenario.m, run.nu
    f = s.f
    ident = RectMatrix.identity(m, nu)
    x = assemble(s.sizes, {(1, 1): -f.barT(t), (1, 3): f.mul(t, ident).mul(t, f), (3, 1): ident, (3, 3): f})
    xv = x.to_vec()
    eng = run.fixed
    fixed = all(eng.apply(k, xv) == {kk: Fraction(c) for kk, c in xv.items()} for k in range(len(eng.involutions)))
    tr = x.trace()
    trace_ok = all(not t.is_central(d) for d in tr.terms)
    degs = {eng.degree(mm) for mm in xv}
    out = {"element": vec_to_json(xv), "fixed": fixed and trace_ok}
    center_minus = [list(d) for d in box(2, t.nu) if t.is_central(d) and t.bar_parity(d)]
    out["A_minus_meets_center"] = bool(center_minus)
    if len(degs) != 1:
        out.update(homogeneous=False, orthogonal_to_core=None, in_core=None)
        return out
    (deg,) = degs
    neg = tuple(-a for a in deg)
    window = set(run.degrees())
    out["degree"] = list(deg)
    if deg not in window or neg not in window:
        out.update(orthogonal_to_core="inconclusive-at-radius", in_core="inconclusive-at-radius")
        return out
    # the core at -deg: full nonisotropic fixed blocks plus the computed weight-0 part
    partners = [v for w in eng.weights(neg) if any(w) for v in eng.eigenspace(neg, w)]
    partners += [{k: c for k, c in v.items() if k[0] != "c"} for v in cores[neg]]
    out["orthogonal_to_core"] = all(eng.form(xv, v) == 0 for v in partners)
    zero_w = (0,) * len(s.h_sigma)
    keys = list(eng.blocks(deg).get(zero_w, []))
    core_rows = [_coords(keys, {k: c for k, c in v.items() if k[0] != "c"}) for v in cores[deg]]
    out["in_core"] = linalg.in_span(core_rows, _coords(keys, xv)) if core_rows else False
    p, bf = _relation_blocks(run, xv)
    out["satisfies_core_relation"] = p == -bf
    return out


def check_form_invariance(run: ExampleRun) -> Check:
    """A3 and eigenspace orthogonality on opposite monomial blocks of the window."""
    eng = run.split
    k = run.sigma_index()
    for g in run.degrees():
        neg = tuple(-a for a in g)
        for w, monos in eng.blocks(g).items():
            opp = eng.blocks(neg).get(tuple(-a for a in w), [])
            for a in monos:
                x = {a: Fraction(1)}
                sx = eng.apply(k, x)
                for b in opp:
                    y = {b: Fraction(1)}
                    if eng.form(sx, eng.apply(k, y)) != eng.form(x, y):
                        return Check(False, f"automorphism axiom A3 failed at {a}, {b}")
    return Check(True)


def degree_dimensions(run: ExampleRun) -> List[dict]:
    out = []
    for g in run.degrees():
        dim = sum(run.fixed.dim(g, w) for w in run.fixed.weights(g))
        out.append({"degree": list(g), "dim": dim})
    return out


def qtorus_report(sc: ExampleScenario) -> Tuple[dict, Dict[str, bool]]:
    """Full scenario report and the per-claim verdicts."""
    run = ExampleRun(sc)
    claims: Dict[str, bool] = {}
    checks = {"A1": run.check_period_two(), "A2": run.check_cartan_stable(), "A3": check_form_invariance(run)}
    for name, c in checks.items():
        claims[name] = c.passed
    if not checks["A1"].passed:
        return {"scenario": sc.to_json(), "checks": {k: v.to_json() for k, v in checks.items()}}, claims
    shape_bad = [g for g in run.degrees() for w in run.fixed.weights(g)
                 for v in run.fixed.eigenspace(g, w) if not run.shape_check(run.fixed.as_matrix(v))]
    claims["shape"] = not shape_bad
    roots = roots_of_fixed(sc, run)
    claims["A4"] = roots.a4.passed
    claims["type"] = roots.matches
    tame = core_and_tameness(sc, run)
    ex = sc.example_id
    expect_equal = not (ex == "3.11" or (ex == "3.9" and sc.m >= 2))
    if tame.equal is not None:
        claims["tameness"] = tame.equal == expect_equal and tame.core_inside
    if tame.relation_check is not None and tame.equal is not None:
        claims["core_relation"] = tame.relation_check.passed
    xw = tame.explicit_witness
    if xw is not None and not xw["A_minus_meets_center"] and xw.get("orthogonal_to_core") in (True, False):
        claims["explicit_witness"] = bool(xw["fixed"] and xw["orthogonal_to_core"] is True and xw["in_core"] is False)
    report = {
        "scenario": sc.to_json(),
        "checks": {k: v.to_json() for k, v in checks.items()},
        "shape_violations": [list(g) for g in shape_bad],
        "degree_dimensions": degree_dimensions(run),
        "roots": roots.to_json(),
        "tameness": tame.to_json(),
    }
    return report, claims
