import pytest
from hypothesis import given, settings, strategies as st

from earoot.ears import (EarsPresentation, IsoClass, NotAnEars, Root, axioms_check, classify_isotropic, decompose,
                         ears_contains, tame_core)
from earoot.finroot import FiniteType, build_finite_roots
from earoot.lattice import RationalForm, Semilattice

from corpus import corpus, example_35_style, make

EX35 = EarsPresentation.from_json({"type": "A1", "nullity": 3, "S": ["000", "100", "010", "001"]})
AFFINE_A1 = EarsPresentation.from_json({"type": "A1", "nullity": 1, "S": ["0", "1"]})


def R(f, i):
    return Root(tuple(f), tuple(i))


def test_contains_example_35():
    assert ears_contains(EX35, R([1], [1, 0, 0]))
    assert ears_contains(EX35, R([0], [1, 1, 0]))
    assert not ears_contains(EX35, R([1], [1, 1, 1]))
    assert not ears_contains(EX35, R([2], [0, 0, 0]))


def test_contains_dimension_mismatch():
    with pytest.raises(ValueError):
        EX35.contains(R([1], [1, 0]))


def test_classify_isotropic_example_35():
    got = classify_isotropic(EX35, R([0], [1, 1, 0]))
    assert got.kind == "nonisolated"
    w = got.witness
    assert not w.is_isotropic and EX35.contains(w + R([0], [1, 1, 0]))


def test_zero_is_nonisolated():
    assert classify_isotropic(EX35, EX35.zero()).kind == "nonisolated"


def test_precondition():
    with pytest.raises(ValueError, match="precondition"):
        classify_isotropic(EX35, R([0], [1, 1, 1]))


def _with_isolated():
    # S = {00}: S+S = {00}; adjoin the class 11 mod 2, which meets no S coset pair
    return EarsPresentation(FiniteType.parse("A1"), 2, Semilattice.zero(2), None, None, (IsoClass(2, (1, 1)),))


def test_extra_isolated_class():
    p = _with_isolated()
    assert classify_isotropic(p, R([0], [1, 1])).isolated
    rep = axioms_check(p, 2)
    assert not rep["R5"].passed
    assert rep["R5"].witness == IsoClass(2, (1, 1))


def test_tame_core():
    p = _with_isolated()
    assert tame_core(p).extra_isolated == ()
    assert tame_core(EX35) == EX35


def test_axioms_example_35():
    rep = axioms_check(EX35, 2)
    assert all(v.passed for v in rep.values()), {k: v.to_json() for k, v in rep.items()}


def test_axioms_affine_a1():
    assert all(v.passed for v in axioms_check(AFFINE_A1, 3).values())


@pytest.mark.parametrize("label,p,expect", corpus(), ids=[c[0] for c in corpus()])
def test_corpus(label, p, expect):
    rep = axioms_check(p, 2)
    for k in ("R1", "R2", "R3", "R4"):
        assert rep[k].passed, (k, rep[k].to_json())
    for k, v in expect.items():
        assert rep[k].passed == v, k


def test_a2_needs_a_lattice():
    p = EarsPresentation(FiniteType.parse("A2"), 2, example_35_style(2))
    assert not axioms_check(p, 2)["R4"].passed


def test_json_round_trip():
    for _, p, _ in corpus():
        assert EarsPresentation.from_json(p.to_json()) == p


def test_missing_L():
    with pytest.raises(ValueError):
        EarsPresentation(FiniteType.parse("B2"), 1, Semilattice.full(1))


def test_decompose_a3_fixed():
    fr = build_finite_roots(FiniteType.parse("A3"))
    sub = [r for r in fr.roots if r[1] % 2 == 0]
    comps, iso = decompose(sub, fr.form)
    assert len(comps) == 2 and iso == []
    assert sorted(len(c.nonisotropic) for c in comps) == [2, 2]


def test_decompose_irreducible():
    fr = build_finite_roots(FiniteType.parse("B2"))
    comps, iso = decompose(fr.roots, fr.form)
    assert len(comps) == 1 and iso == []


def test_decompose_rejects_r1():
    fr = build_finite_roots(FiniteType.parse("A2"))
    with pytest.raises(NotAnEars):
        decompose([(1, 0)], fr.form)


def test_decompose_detects_isolated():
    # A1 x {0, +-d}: d is isotropic and never added to a nonisotropic root inside the set
    form = RationalForm(((2, 0), (0, 0)))
    roots = [(1, 0), (-1, 0), (0, 0), (0, 1), (0, -1)]
    comps, iso = decompose(roots, form, check=False)
    assert len(comps) == 1
    assert set(iso) == {(0, 1), (0, -1)}


@settings(max_examples=100, deadline=None)
@given(st.integers(-3, 3), st.tuples(*[st.integers(-4, 4)] * 3))
def test_membership_depends_on_residue_only(a, iso):
    r = R([a], iso)
    shifted = R([a], tuple(x + 2 for x in iso))
    assert EX35.contains(r) == EX35.contains(shifted)
    assert EX35.contains(r) == EX35.contains(-r)
