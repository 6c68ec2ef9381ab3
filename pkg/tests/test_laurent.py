"""Exact Laurent arithmetic: ring axioms, quantum integers, text forms."""

from hypothesis import given, settings
from hypothesis import strategies as st

from sl3web.laurent import ONE, LaurentPoly, monomial, qfactorial, qint

import pytest


def ply(d):
    return LaurentPoly(d)


small_polys = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-9, max_value=9),
    max_size=6,
).map(LaurentPoly)


def test_qint_one_is_single_term():
    assert qint(1) == ply({0: 1})


def test_qint_three():
    assert qint(3) == ply({2: 1, 0: 1, -2: 1})


def test_qint_two_times_three():
    # [2][3] = q^-3 + 2q^-1 + 2q + q^3
    assert qint(2) * qint(3) == ply({3: 1, 1: 2, -1: 2, -3: 1})


def test_qint_rejects_nonpositive():
    with pytest.raises(ValueError):
        qint(0)
    with pytest.raises(ValueError):
        qint(-2)


def test_additive_inverse():
    q = monomial(1)
    assert (q + q.scale(-1)).is_zero


def test_shift_of_qint_two():
    assert qint(2).shift(1) == ply({2: 1, 0: 1})


def test_square_of_qint_two():
    # hand expansion of (q + 1/q)^2
    assert qint(2) * qint(2) == ply({2: 1, 0: 2, -2: 1})


def test_qfactorial():
    assert qfactorial(0) == ONE
    assert qfactorial(3) == qint(2) * qint(3)


def test_canonical_text_form():
    p = qint(2) * qint(3)
    assert str(p) == "q^3 + 2*q + 2*q^-1 + q^-3"
    assert str(LaurentPoly()) == "0"
    assert str(ply({0: -3, 2: 1})) == "q^2 - 3"


def test_parse_canonical_form():
    assert LaurentPoly.parse("q^3 + 2*q + 2*q^-1 + q^-3") == qint(2) * qint(3)
    assert LaurentPoly.parse("0").is_zero
    assert LaurentPoly.parse("-q + 4") == ply({1: -1, 0: 4})


def test_json_roundtrip():
    p = ply({-2: 5, 0: -1, 7: 3})
    assert LaurentPoly.from_json(p.to_json()) == p


def test_evaluation_counts_terms():
    assert (qint(2) * qint(3))(1) == 6


@given(small_polys, small_polys, small_polys)
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(small_polys)
@settings(max_examples=60)
def test_zero_is_neutral_and_text_roundtrips(p):
    assert p + LaurentPoly() == p
    assert LaurentPoly.parse(str(p)) == p
    assert LaurentPoly.from_json(p.to_json()) == p


@given(st.integers(min_value=1, max_value=7), st.integers(min_value=1, max_value=7))
@settings(max_examples=40)
def test_qint_products_bar_symmetric(a, b):
    assert (qint(a) * qint(b)).is_bar_symmetric
