"""Exact Gaussian elimination over any field whose elements support + - * / and ==.

Entries are expected to be :class:`fractions.Fraction` or
:class:`earoot.cyclotomic.Cyclotomic`; plain ints are promoted to Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, List, Sequence, Tuple

Matrix = List[List[Any]]


def _lift(x):
    return Fraction(x) if isinstance(x, int) else x


def _is_zero(x) -> bool:
    return x == 0


def rref(rows: Sequence[Sequence[Any]]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[_lift(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if not _is_zero(m[i][c])), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c] if isinstance(m[r][c], Fraction) else m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not _is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Any]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Any]], ncols: int, one=Fraction(1)) -> Matrix:
    """Basis of {v : rows . v = 0}; one basis vector per free column, in column order."""
    reduced, pivots = rref(rows) if rows else ([], [])
    zero = one - one
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def row_space(rows: Sequence[Sequence[Any]]) -> Matrix:
    """Canonical (reduced echelon) basis of the row span."""
    return rref(rows)[0]


def in_span(basis: Sequence[Sequence[Any]], v: Sequence[Any]) -> bool:
    if not any(not _is_zero(x) for x in v):
        return True
    return rank(list(basis) + [list(v)]) == rank(basis)


def solve(a: Sequence[Sequence[Any]], b: Sequence[Any]):
    """One solution x of a x = b, or None when inconsistent."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    reduced, pivots = rref(aug)
    if ncols in pivots:
        return None
    zero = _lift(0)
    x = [zero] * ncols
    for row, pc in zip(reduced, pivots):
        x[pc] = row[-1]
    return x


def det(a: Sequence[Sequence[Any]]):
    m = [[_lift(x) for x in row] for row in a]
    n = len(m)
    result = _lift(1)
    for c in range(n):
        p = next((i for i in range(c, n) if not _is_zero(m[i][c])), None)
        if p is None:
            return _lift(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        result = result * m[c][c]
        for i in range(c + 1, n):
            if not _is_zero(m[i][c]):
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def inverse(a: Sequence[Sequence[Any]]) -> Matrix:
    n = len(a)
    one, zero = _lift(1), _lift(0)
    aug = [list(map(_lift, row)) + [one if i == j else zero for j in range(n)]
           for i, row in enumerate(a)]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in reduced]


def matmul(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), _lift(0)) for col in bt] for row in a]


def principal_minors_nonnegative(a: Sequence[Sequence[Any]]) -> bool:
    """Exact positive semidefiniteness test through every principal minor."""
    from itertools import combinations

    n = len(a)
    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            if det([[a[i][j] for j in idx] for i in idx]) < 0:
                return False
    return True
