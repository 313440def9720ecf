from hypothesis import given, strategies as st

from almostpa.laurent import DELTA, LaurentPoly

polys = st.dictionaries(st.integers(-12, 12), st.integers(-5, 5), max_size=6).map(LaurentPoly)


def test_zero_coefficients_are_dropped():
    p = LaurentPoly({3: 0, 1: 2})
    assert p.coeffs == {1: 2}
    assert LaurentPoly({2: 1}) - LaurentPoly({2: 1}) == LaurentPoly()


def test_rendering():
    assert str(LaurentPoly({4: -1, -4: -1})) == "-A^4 - A^-4"
    assert str(LaurentPoly.const(1)) == "1"
    assert str(LaurentPoly({1: 3, 0: -2})) == "3A - 2"
    assert str(LaurentPoly()) == "0"


def test_delta():
    assert DELTA * DELTA == LaurentPoly({4: 1, 0: 2, -4: 1})


def test_mirror_negates_exponents():
    assert LaurentPoly({3: 2, -1: 1}).mirror() == LaurentPoly({-3: 2, 1: 1})


@given(polys)
def test_text_round_trip(p):
    assert LaurentPoly.parse(str(p)) == p


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == LaurentPoly()


@given(polys, st.integers(0, 4))
def test_power_matches_repeated_product(p, n):
    acc = LaurentPoly.const(1)
    for _ in range(n):
        acc = acc * p
    assert p**n == acc
