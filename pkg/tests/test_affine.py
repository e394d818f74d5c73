import random
from fractions import Fraction

import pytest

from earoot.affine import (AffElement, aff_bracket, aff_form, affinize_report, base_from_qtorus, character_sigma,
                           check_conditions, diagram_sigma, ealaxiom_window_check, loop_element, projector_dims, sl,
                           trivial_sigma, twisted_fixed_points)
from earoot.cyclotomic import Cyclotomic
from earoot.qtorus import ExampleScenario

SL2 = sl(2)
H, E, F = (SL2.unit(i) for i in range(3))  # labels h1, e12, e21
C = AffElement({}, Fraction(1), Fraction(0))
D = AffElement({}, Fraction(0), Fraction(1))


def test_labels():
    assert SL2.labels == ["h1", "e12", "e21"]


def test_bracket_loop_cocycle():
    got = aff_bracket(SL2, loop_element(E, 1), loop_element(F, -1))
    assert got == AffElement({0: SL2.bracket(E, F)}, SL2.pair(E, F), Fraction(0))
    assert got.c == 1


def test_c_central_and_d_grades():
    x = loop_element(E, 3)
    assert aff_bracket(SL2, C, x).is_zero()
    assert aff_bracket(SL2, x, C).is_zero()
    assert aff_bracket(SL2, D, x) == x.scaled(3)


def test_form_cd():
    assert aff_form(SL2, C, D) == 1
    assert aff_form(SL2, C, C) == 0
    assert aff_form(SL2, D, D) == 0


def test_mismatched_base():
    with pytest.raises(ValueError):
        aff_bracket(SL2, loop_element([1, 0], 0), loop_element(E, 0))


def _random_aff(rng, base, one=Fraction(1)):
    loop = {n: [one * rng.randint(-2, 2) for _ in range(base.dim)] for n in rng.sample(range(-2, 3), 2)}
    return AffElement(loop, one * rng.randint(-2, 2), one * rng.randint(-2, 2))


@pytest.mark.parametrize("n", [2, 3])
def test_form_invariance_and_jacobi_randomized(n):
    base = sl(n)
    rng = random.Random(n)
    for _ in range(100):
        a, b, e = (_random_aff(rng, base) for _ in range(3))
        assert aff_form(base, aff_bracket(base, a, b), e) == aff_form(base, a, aff_bracket(base, b, e))
        assert aff_form(base, a, b) == aff_form(base, b, a)
        jac = aff_bracket(base, a, aff_bracket(base, b, e)) + aff_bracket(base, b, aff_bracket(base, e, a)) \
            + aff_bracket(base, e, aff_bracket(base, a, b))
        assert jac.is_zero()


def test_jacobi_on_basis_triples():
    basis = [loop_element(SL2.unit(i), n) for i in range(3) for n in (-1, 0, 1)] + [C, D]
    for a in basis:
        for b in basis:
            for e in basis:
                jac = aff_bracket(SL2, a, aff_bracket(SL2, b, e)) + aff_bracket(SL2, b, aff_bracket(SL2, e, a)) \
                    + aff_bracket(SL2, e, aff_bracket(SL2, a, b))
                assert jac.is_zero()


def test_trivial_sigma_is_everything():
    fp = twisted_fixed_points(SL2, trivial_sigma(SL2), 3)
    assert fp.degree_dims() == {i: 3 for i in range(-3, 4)}
    want = {(s, n) for s in (2, -2) for n in range(-3, 4)} | {(0, n) for n in range(-3, 4)}
    assert set(fp.roots()) == want
    for r in want:
        assert fp.contains(r)
    assert not fp.contains((4, 0))


def test_character_sigma_alternates():
    T = character_sigma(SL2, 2, [1])
    fp = twisted_fixed_points(SL2, T, 3)
    for (i, w), v in fp.blocks.items():
        if v and w != (0,):
            assert i % 2 == 1
        if v and w == (0,):
            assert i % 2 == 0


def test_sl3_diagram():
    base = sl(3)
    T = diagram_sigma(base)
    assert all(check_conditions(base, T).results.values())
    fp = twisted_fixed_points(base, T, 2)
    assert fp.degree_dims()[0] == 3
    # BC1 pattern: alpha and 2 alpha both occur among restricted weights
    ws = {w for (i, w), v in fp.blocks.items() if v and any(w)}
    a = min(abs(w[0]) for w in ws)
    assert {a, 2 * a} <= {abs(w[0]) for w in ws}


def test_sl3_order_three():
    base = sl(3)
    T = character_sigma(base, 3, [1, 1])
    fp = twisted_fixed_points(base, T, 2)
    assert all(projector_dims(base, T, 2)[k] == len(v) for k, v in fp.blocks.items())
    x = base.unit(base.labels.index("e12"))
    # zeta^{-i} twist: x (x) t is fixed exactly when phi(alpha_1) = zeta
    assert T.apply(loop_element(x, 1)) == loop_element(x, 1)


@pytest.mark.parametrize("n,T", [(2, "trivial"), (3, "diagram"), (2, "char")])
def test_dims_match_projector_oracle(n, T):
    base = sl(n)
    sig = {"trivial": trivial_sigma, "diagram": diagram_sigma}.get(T, lambda b: character_sigma(b, 2, [1]))(base)
    fp = twisted_fixed_points(base, sig, 3)
    oracle = projector_dims(base, sig, 3)
    assert {k: v for k, v in oracle.items() if v} == fp.dims()


def test_ealaxioms_untwisted():
    fp = twisted_fixed_points(SL2, trivial_sigma(SL2), 3)
    rep = ealaxiom_window_check(fp)
    assert rep.passed, rep.to_json()


def test_ealaxioms_zeroed_cd_fails_ea1():
    fp = twisted_fixed_points(SL2, trivial_sigma(SL2), 2)
    assert not ealaxiom_window_check(fp, cd_pairing=0).results["EA1"]


def test_twist_preserves_form():
    base = sl(3)
    T = character_sigma(base, 3, [1, 2])
    one = Cyclotomic.rational(3, 1)
    rng = random.Random(5)
    for _ in range(30):
        a, b = _random_aff(rng, base, one), _random_aff(rng, base, one)
        assert aff_form(base, T.apply(a), T.apply(b)) == aff_form(base, a, b)


def test_qtorus_base():
    base = base_from_qtorus(ExampleScenario.from_json({"example": "3.9", "l": 2, "m": 1, "e": [1]}))
    assert base.check_invariance()
    fp = twisted_fixed_points(base, trivial_sigma(base), 1)
    assert fp.degree_dims()[0] == base.dim


def test_report_order_mismatch():
    with pytest.raises(ValueError):
        affinize_report({"base": "sl2", "sigma": "diagram", "order": 3})
