import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from earoot.ears import EarsPresentation, Root, axioms_check
from earoot.fixpoint import (Character, FixedRootSystem, TheoremNotApplicable, char_eval, decompose_fixed,
                             fixed_root_system, is_isolated_exact, isolated_bruteforce, sears_check,
                             sears_check_roots)

from corpus import make

EX35 = EarsPresentation.from_json({"type": "A1", "nullity": 3, "S": ["000", "100", "010", "001"]})
CHI35 = Character(2, (1,), (0, 0, 1))
F35 = FixedRootSystem(EX35, CHI35)
A3 = EarsPresentation.from_json({"type": "A3", "nullity": 0, "S": []})
CHI_A3 = Character(2, (0, 1, 0), ())
AFFINE_A1 = EarsPresentation.from_json({"type": "A1", "nullity": 1, "S": ["0", "1"]})


def R(f, i):
    return Root(tuple(f), tuple(i))


def test_char_eval():
    assert char_eval(CHI35, R([1], [0, 0, 1])) == 0
    assert char_eval(CHI35, R([1], [2, 0, 0])) == 1
    assert char_eval(CHI35, EX35.zero()) == 0


def test_char_eval_rank_mismatch():
    with pytest.raises(ValueError):
        char_eval(CHI35, R([1, 0], [0, 0, 0]))


def test_exponents_reduced():
    assert Character(3, (4,), (-1,)).to_json() == {"order": 3, "alpha": [1], "delta": [2]}


def test_membership_example_35():
    assert F35.contains(R([0], [1, 1, 0]))
    assert F35.contains(R([1], [0, 0, 1]))
    assert not F35.contains(R([1], [2, 0, 0]))


def test_trivial_character_is_identity():
    f = fixed_root_system(EX35, Character.trivial(1, 3))
    assert set(f.window(2)) == set(EX35.window(2))


def test_finite_a3():
    f = FixedRootSystem(A3, CHI_A3)
    assert {r.finite for r in f.window(0) if not r.is_isotropic} == {(1, 0, 0), (-1, 0, 0), (0, 0, 1), (0, 0, -1)}


def test_rank_mismatch():
    with pytest.raises(ValueError):
        FixedRootSystem(EX35, Character(2, (1,), (0, 1)))


def test_isolated_example_35():
    assert is_isolated_exact(F35, R([0], [1, 1, 0])).isolated
    got = is_isolated_exact(F35, R([0], [0, 0, 2]))
    assert got.kind == "nonisolated"
    assert F35.contains(got.witness) and EX35.contains(got.witness + R([0], [0, 0, 2]))


def test_isolated_precondition():
    with pytest.raises(ValueError, match="precondition"):
        is_isolated_exact(F35, R([0], [1, 1, 1]))


def test_lattice_s_has_no_isolated():
    p = make("A1", 2, "lattice")
    f = FixedRootSystem(p, Character(2, (1,), (1, 0)))
    assert f.nonisotropic_classes()
    for c in f.isotropic_classes():
        assert not is_isolated_exact(f, R([0], c.residue)).isolated


def test_decompose_example_35():
    rep = decompose_fixed(F35, 7)
    assert rep.k == 1
    c = rep.components[0]
    assert (str(c.type), c.l_i, c.nu_i, c.dim_H_i) == ("A1", 1, 3, 7)
    assert rep.has_I
    assert (1, 1, 0) in {i.iso_class.residue for i in rep.isolated}


def test_decompose_finite_a3():
    rep = decompose_fixed(FixedRootSystem(A3, CHI_A3), 3)
    assert rep.k == 2
    assert [(str(c.type), c.nu_i, c.dim_H_i) for c in rep.components] == [("A1", 0, 1), ("A1", 0, 1)]
    assert rep.dim_W == 1 and not rep.has_I


def test_decompose_trivial_character():
    rep = decompose_fixed(fixed_root_system(AFFINE_A1, Character.trivial(1, 1)), 3)
    assert rep.k == 1 and rep.dim_W == 0 and not rep.has_I
    assert str(rep.components[0].type) == "A1"


def test_decompose_not_applicable():
    # alpha-dot -> -1 with all deltas -> 1 kills every nonisotropic root
    f = FixedRootSystem(EX35, Character(2, (1,), (0, 0, 0)))
    with pytest.raises(TheoremNotApplicable, match="empty"):
        decompose_fixed(f)


def test_decompose_dim_h_too_small():
    with pytest.raises(ValueError):
        decompose_fixed(F35, 2)


def test_sears_example_35():
    assert all(v.passed for v in sears_check(F35, 2).values())


def test_sears_affine_a1():
    f = fixed_root_system(AFFINE_A1, Character.trivial(1, 1))
    assert all(v.passed for v in sears_check(f, 2).values())


def test_sears_negative_control():
    roots = [r for r in AFFINE_A1.window(2) if r != R([1], [1])]
    rep = sears_check_roots(roots, AFFINE_A1.form, lambda x: x in set(roots) or x == R([0], [0]))
    assert not rep["reflection"].passed and rep["reflection"].witness is not None


def test_symmetric_under_negation():
    for r in F35.window(3):
        assert F35.contains(-r)


def test_components_orthogonal():
    rep = decompose_fixed(FixedRootSystem(A3, CHI_A3), 3)
    a, b = rep.components
    for x in a.finite_roots:
        for y in b.finite_roots:
            assert A3.form(x, y) == 0


def test_trivial_character_axioms_agree():
    f = fixed_root_system(EX35, Character.trivial(1, 3))
    assert set(f.window(2)) == set(EX35.window(2))
    rep = axioms_check(EX35, 2)
    assert all(v.passed for v in rep.values())


def test_scaling_form_changes_nothing():
    rep = decompose_fixed(F35, 7)
    scaled = EX35.form.scaled(Fraction(5, 3))
    for a in F35.nonisotropic_classes():
        for b in F35.nonisotropic_classes():
            assert 2 * scaled(a.finite, b.finite) / scaled(a.finite, a.finite) == \
                2 * EX35.form(a.finite, b.finite) / EX35.form(a.finite, a.finite)
    assert rep.k == 1


CASES = [("A1", 1), ("A1", 2), ("A2", 1), ("B2", 1), ("G2", 1)]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(CASES), st.sampled_from(["lattice", "semilattice"]), st.integers(2, 4), st.data())
def test_exact_matches_bruteforce(case, shape, m, data):
    t, nu = case
    if shape == "semilattice" and (t not in ("A1", "B2") or nu < 2):
        shape = "lattice"
    p = make(t, nu, shape)
    l = p.type.rank
    ex = data.draw(st.tuples(*[st.integers(0, m - 1)] * (l + nu)))
    f = FixedRootSystem(p, Character(m, ex[:l], ex[l:]))
    for c in f.isotropic_classes():
        d = R((0,) * l, c.residue)
        assert is_isolated_exact(f, d).isolated == isolated_bruteforce(f, d, 2 * f.modulus)


@settings(max_examples=120, deadline=None)
@given(st.sampled_from([("A2", 1), ("A2", 2), ("B2", 1), ("G2", 1), ("A1", 1)]), st.integers(2, 4), st.data())
def test_example_34_predictor(case, m, data):
    """Lattice S (and L = S): whenever some nonisotropic root is fixed, nothing is isolated."""
    t, nu = case
    p = make(t, nu, "lattice")
    l = p.type.rank
    ex = data.draw(st.tuples(*[st.integers(0, m - 1)] * (l + nu)))
    f = FixedRootSystem(p, Character(m, ex[:l], ex[l:]))
    if not f.nonisotropic_classes():
        return
    assert not decompose_fixed(f).has_I
