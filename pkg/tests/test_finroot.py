from fractions import Fraction

import pytest

from earoot.finroot import (FiniteType, NotARootSystem, StringAnomaly, build_finite_roots, cartan_gram, classify,
                            reflect, root_string)
from earoot.lattice import RationalForm

LEGAL = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2", "BC1", "BC2", "BC3"]
COUNTS = {"A1": 2, "A2": 6, "A3": 12, "A4": 20, "B2": 8, "B3": 18, "C3": 18, "D4": 24, "D5": 40,
          "E6": 72, "E7": 126, "E8": 240, "F4": 48, "G2": 12, "BC1": 4, "BC2": 12, "BC3": 24}


def classes(t):
    fr = build_finite_roots(FiniteType.parse(t))
    return {c: len(fr.by_class(c)) for c in fr.class_names}


def test_a2_all_short():
    assert classes("A2") == {"short": 6}


def test_bc1_extra():
    fr = build_finite_roots(FiniteType.parse("BC1"))
    assert set(fr.roots) == {(1,), (-1,), (2,), (-2,)}
    assert classes("BC1") == {"short": 2, "extra": 2}


def test_b2_counts():
    assert classes("B2") == {"short": 4, "long": 4}


@pytest.mark.parametrize("t", LEGAL)
def test_root_counts(t):
    assert len(build_finite_roots(FiniteType.parse(t)).roots) == COUNTS[t]


@pytest.mark.parametrize("name", ["A0", "B1", "D1", "E9", "G3", "X2", "BC0"])
def test_illegal_types(name):
    with pytest.raises(ValueError):
        FiniteType.parse(name)


def _member(t):
    fr = build_finite_roots(FiniteType.parse(t))
    rs = set(fr.roots) | {(0,) * t_rank(t)}
    return fr, lambda v: tuple(v) in rs


def t_rank(t):
    return FiniteType.parse(t).rank


def test_string_a2():
    fr, member = _member("A2")
    assert root_string(member, fr.form, (1, 0), (0, 1)) == type(root_string(member, fr.form, (1, 0), (0, 1)))(0, 1)
    s = root_string(member, fr.form, (1, 0), (0, 1))
    assert (s.d, s.u) == (0, 1)


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "D4"])
def test_string_self(t):
    fr, member = _member(t)
    for a in fr.roots:
        s = root_string(member, fr.form, a, a)
        assert (s.d, s.u) == (2, 0)


def test_string_bc1():
    fr, member = _member("BC1")
    s = root_string(member, fr.form, (1,), (2,))
    assert s.d - s.u == 4


def test_string_anomaly():
    fr = build_finite_roots(FiniteType.parse("A1"))
    with pytest.raises(StringAnomaly):
        root_string(lambda v: True, fr.form, (1,), (1,), window=3)


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "F4", "BC2"])
def test_string_property(t):
    """d - u equals the Cartan integer 2(beta, alpha)/(alpha, alpha)."""
    fr, member = _member(t)
    for a in fr.roots:
        for b in fr.roots:
            s = root_string(member, fr.form, a, b)
            assert s.d - s.u == 2 * fr.form(b, a) / fr.form(a, a)


def test_classify_round_trip():
    for t in LEGAL:
        fr = build_finite_roots(FiniteType.parse(t))
        [(got, vs)] = classify(fr.roots, fr.form)
        assert str(got) == t and set(vs) == set(fr.roots)


def test_classify_a1_a1_inside_a3():
    fr = build_finite_roots(FiniteType.parse("A3"))
    sub = [r for r in fr.roots if (r[1]) % 2 == 0]  # phi(a1)=phi(a3)=1, phi(a2)=-1
    got = classify(sub, fr.form)
    assert sorted(str(t) for t, _ in got) == ["A1", "A1"]


def test_classify_d4_standard_form():
    vecs = []
    for i in range(4):
        for j in range(i + 1, 4):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [0] * 4
                    v[i], v[j] = si, sj
                    vecs.append(tuple(v))
    eye = RationalForm(tuple(tuple(int(i == j) for j in range(4)) for i in range(4)))
    [(t, vs)] = classify(vecs, eye)
    assert str(t) == "D4" and len(vs) == 24


def test_classify_rejects_non_closed():
    fr = build_finite_roots(FiniteType.parse("A2"))
    with pytest.raises(NotARootSystem):
        classify([(1, 0), (-1, 0), (0, 1), (0, -1)], fr.form)


def test_reflection_is_involution():
    fr = build_finite_roots(FiniteType.parse("G2"))
    for a in fr.roots:
        for b in fr.roots:
            assert reflect(reflect(b, a, fr.form), a, fr.form) == b
            assert reflect(b, a, fr.form) in set(fr.roots)


def test_cartan_gram_short_norm_two():
    for t in ["B3", "C3", "F4", "G2"]:
        g = cartan_gram(FiniteType.parse(t))
        fr = build_finite_roots(FiniteType.parse(t))
        assert min(g(r, r) for r in fr.roots) == 2
