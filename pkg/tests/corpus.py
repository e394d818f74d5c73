"""Presentation corpus shared by the ears and acceptance tests."""

from earoot.ears import EarsPresentation
from earoot.finroot import FiniteType
from earoot.lattice import Semilattice

TYPES = ["A1", "A2", "B2", "G2", "BC1"]
# types whose S may be a genuine (non-lattice) semilattice
SEMILATTICE_OK = {"A1", "B2", "BC1"}


def example_35_style(nu: int) -> Semilattice:
    """Zero coset plus the unit vectors: not a lattice once nu >= 2."""
    cosets = [(0,) * nu] + [tuple(int(i == j) for j in range(nu)) for i in range(nu)]
    return Semilattice(nu, frozenset(cosets))


def make(t: str, nu: int, shape: str) -> EarsPresentation:
    ft = FiniteType.parse(t)
    S = Semilattice.full(nu) if shape == "lattice" else example_35_style(nu)
    L = E = None
    if ft.family in ("B", "C", "F", "G"):
        # L = Z^nu when S is a lattice, 2Z^nu otherwise; both satisfy S + L = S and L + kS inside L
        L = Semilattice.full(nu) if shape == "lattice" else Semilattice.zero(nu)
    if ft.family == "BC":
        E = Semilattice(nu, frozenset([(0,) * nu]), translated=True)
    return EarsPresentation(ft, nu, S, L, E)


def corpus():
    """(label, presentation, expected flags) triples."""
    out = []
    for t in TYPES:
        for nu in (1, 2):
            for shape in ("lattice", "semilattice"):
                if shape == "semilattice" and (t not in SEMILATTICE_OK or nu < 2):
                    continue
                expect = {"R5": True, "R6": True, "R7": t != "BC1"}
                out.append((f"{t}-nu{nu}-{shape}", make(t, nu, shape), expect))
    return out
