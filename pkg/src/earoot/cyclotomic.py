"""Exact arithmetic in Q(zeta_m), elements stored as polynomials reduced mod Phi_m."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Tuple

Poly = Tuple[Fraction, ...]


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pdivmod(a, b):
    a = _trim(a)
    b = _trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and r:
        c = r[-1] / b[-1]
        k = len(r) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            r[i + k] -= c * y
        r = _trim(r)
    return _trim(q), r


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> Poly:
    """Coefficients of Phi_m, constant term first."""
    num = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            num, r = _pdivmod(num, list(cyclotomic_polynomial(d)))
            assert not r
    return tuple(num)


class Cyclotomic:
    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = order
        phi = list(cyclotomic_polynomial(order))
        _, r = _pdivmod([Fraction(c) for c in coeffs], phi)
        self.coeffs: Poly = tuple(r)

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "Cyclotomic":
        power %= order
        return cls(order, [0] * power + [1])

    @classmethod
    def rational(cls, order: int, value) -> "Cyclotomic":
        return cls(order, [Fraction(value)])

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise ValueError("cyclotomic order mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, [Fraction(other)])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(o.coeffs) + [Fraction(0)] * (n - len(o.coeffs))
        return Cyclotomic(self.order, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-x for x in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyclotomic(self.order, _pmul(list(self.coeffs), list(o.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self.coeffs:
            raise ZeroDivisionError("zero in cyclotomic field")
        # extended Euclid: s*self + t*phi = g (a nonzero constant)
        r0, r1 = list(cyclotomic_polynomial(self.order)), list(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            s_next = _trim([x - y for x, y in _zip_pad(s0, _pmul(q, s1))])
            r0, r1, s0, s1 = r1, r, s1, s_next
        c = r1[0]
        return Cyclotomic(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic(self.order, [1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation zeta -> zeta^{-1}."""
        out = Cyclotomic(self.order)
        for i, c in enumerate(self.coeffs):
            if c:
                out = out + Cyclotomic.zeta(self.order, -i) * c
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic(self.order, [Fraction(other)])
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash((self.order, self.coeffs))

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*z^{i}" if c != 1 else f"z^{i}")
        return " + ".join(terms)

    def to_json(self):
        return [str(c) for c in self.coeffs]


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return zip(a, b)
