from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heapalg import LaurentPoly

polys = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly()
    assert a * 1 == a and a + 0 == a


@given(polys, polys, st.sampled_from([2, 3, -1, 0.5]))
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b)(x) == pytest.approx(a(x) * b(x))
    assert (a + b)(x) == pytest.approx(a(x) + b(x))


@given(st.integers(0, 8))
def test_delta_powers(k):
    d = LaurentPoly.v(1) + LaurentPoly.v(-1)
    assert LaurentPoly.delta(k) == d ** k
    assert LaurentPoly.delta(k)(1) == 2 ** k
    assert LaurentPoly.delta(k).coeffs.get(k - 2 * (k // 2), 0) == comb(k, k // 2)


def test_printing():
    assert str(LaurentPoly.delta(1)) == "v + v^-1"
    assert str(LaurentPoly.delta(2)) == "v^2 + 2 + v^-2"
    assert str(LaurentPoly()) == "0"
    assert str(LaurentPoly({1: -3, 0: 1})) == "-3*v + 1"
    assert str(LaurentPoly(-1)) == "-1"


def test_errors():
    with pytest.raises(ValueError):
        LaurentPoly.delta(-1)
    with pytest.raises(ValueError):
        LaurentPoly.v() ** -1


def test_hash_and_zero():
    assert hash(LaurentPoly({2: 1, 0: 0})) == hash(LaurentPoly.v(2))
    assert not LaurentPoly({3: 0})
    assert LaurentPoly(0).is_zero()
