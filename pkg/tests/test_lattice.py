import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from earoot.lattice import (CosetEnumerator, RationalForm, Semilattice, box, hermite_basis, in_integer_span,
                            lattice_span, rational_rank, semilattice_contains, semilattice_is_lattice,
                            semilattice_sum)

EX35 = Semilattice.from_strings(["000", "100", "010", "001"])


def S(*cs):
    return Semilattice.from_strings(cs)


def test_contains_example_35():
    assert semilattice_contains(EX35, (1, 0, 0))
    assert not semilattice_contains(EX35, (1, 1, 1))
    assert semilattice_contains(EX35, (0, 0, 0))
    # residues are taken mod 2
    assert semilattice_contains(EX35, (3, -2, 4))


def test_contains_rank_mismatch():
    with pytest.raises(ValueError, match="rank mismatch"):
        semilattice_contains(EX35, (1, 0))


def test_is_lattice():
    assert not semilattice_is_lattice(EX35)
    assert semilattice_is_lattice(Semilattice.full(3))
    assert semilattice_is_lattice(S("000", "100", "010", "110"))


def test_sum():
    assert set(semilattice_sum(EX35, EX35).to_strings()) == {"000", "100", "010", "001", "110", "101", "011"}
    assert semilattice_sum(EX35, Semilattice.zero(3)) == EX35
    assert set(semilattice_sum(S("000", "100"), S("000", "010")).to_strings()) == {"000", "100", "010", "110"}


def test_span():
    assert len(lattice_span(EX35).cosets) == 8
    L = S("000", "100", "010", "110")
    assert lattice_span(L) == L
    assert lattice_span(S("00", "11")) == S("00", "11")


def test_zero_coset_required():
    with pytest.raises(ValueError):
        S("100", "010")
    Semilattice.from_strings(["10"], translated=True)


def test_bad_strings():
    with pytest.raises(ValueError):
        S("000", "12")


def test_coset_enumerator_exhaustive():
    got = list(CosetEnumerator(3, 2))
    assert len(got) == len(set(got)) == 9 == len(CosetEnumerator(3, 2))


def test_box():
    assert len(list(box(2, 2))) == 25


def test_form_extended_is_degenerate():
    f = RationalForm(((2, -1), (-1, 2))).extended(2)
    assert f.rank == 4  # dimension, the radical is the last two coordinates
    assert f.is_positive_semidefinite()
    assert f((1, 0, 5, 7), (1, 0, -3, 1)) == 2


def test_hermite_and_span():
    b = hermite_basis([(2, 0), (0, 2), (1, 1)])
    assert in_integer_span(b, (1, 1)) and in_integer_span(b, (2, 0))
    assert not in_integer_span(b, (1, 0))
    assert rational_rank([(1, 2), (2, 4)]) == 1


nu3 = st.lists(st.tuples(*[st.integers(0, 1)] * 3), max_size=8)


@given(nu3, nu3)
def test_sum_is_semilattice_and_commutative(a, b):
    A = Semilattice(3, frozenset(a) | {(0, 0, 0)})
    B = Semilattice(3, frozenset(b) | {(0, 0, 0)})
    assert semilattice_sum(A, B) == semilattice_sum(B, A)
    assert A.cosets <= semilattice_sum(A, B).cosets


@given(nu3)
def test_span_is_smallest_lattice(a):
    A = Semilattice(3, frozenset(a) | {(0, 0, 0)})
    L = lattice_span(A)
    assert semilattice_is_lattice(L)
    assert A.cosets <= L.cosets
    # brute force: every F2-combination of cosets of A lies in L and nothing else does
    combos = {tuple(sum(c[i] * e for c, e in zip(A.cosets, es)) % 2 for i in range(3))
              for es in itertools.product((0, 1), repeat=len(A.cosets))}
    assert combos == set(L.cosets)
