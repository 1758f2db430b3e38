"""Exact cyclotomic arithmetic against sympy and against algebraic
identities."""
from __future__ import annotations

import cmath
from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

import pytest

from charzero.cyclotomic import Cyclotomic, cyclotomic_polynomial, reduction_rows
from charzero.numtheory import euler_phi


def test_cyclotomic_polynomial_matches_sympy():
    x = sympy.symbols("x")
    for e in range(1, 40):
        ours = cyclotomic_polynomial(e)
        theirs = sympy.Poly(sympy.cyclotomic_poly(e, x), x).all_coeffs()
        assert list(ours) == [int(c) for c in reversed(theirs)], e


def test_reduction_rows_shape_and_low_powers():
    for e in (1, 2, 3, 4, 6, 8, 12):
        rows = reduction_rows(e)
        phi = euler_phi(e)
        assert len(rows) == 2 * e - 1  # covers exponent sums from products
        for m in range(phi):
            want = [0] * phi
            want[m] = 1
            assert list(rows[m]) == want


def test_root_of_unity_power_identity():
    for e in (2, 3, 4, 5, 8, 12, 15):
        z = Cyclotomic.root_of_unity(e, 1)
        acc = Cyclotomic.rational(1, e)
        for _ in range(e):
            acc = acc * z
        assert acc == Cyclotomic.rational(1, e)
        total = Cyclotomic.zero(e)
        for m in range(e):
            total = total + Cyclotomic.root_of_unity(e, m)
        assert total.is_zero


def test_golden_ratio_identity():
    # (z5 + z5^4) satisfies x^2 + x - 1 = 0
    z = Cyclotomic.root_of_unity(5, 1)
    x = z + z.galois(4)
    assert x * x + x - 1 == Cyclotomic.zero(5)


def test_sqrt2_from_eighth_roots():
    z = Cyclotomic.root_of_unity(8, 1)
    s = z + z.conjugate()
    assert s * s == Cyclotomic.rational(2, 8)


def test_conjugate_and_galois():
    z = Cyclotomic.root_of_unity(12, 1)
    v = 3 * z + Fraction(1, 2)
    assert v.conjugate().conjugate() == v
    with pytest.raises(ValueError):
        v.galois(2)  # gcd(2, 12) != 1
    w = v.galois(5)
    assert w.galois(5) == v  # 5*5 = 25 = 1 mod 12


def test_cross_conductor_equality_and_promotion():
    half = Cyclotomic.rational(Fraction(1, 2), 1)
    assert half == Cyclotomic.rational(Fraction(1, 2), 6)
    z3 = Cyclotomic.root_of_unity(3, 1)
    z6 = Cyclotomic.root_of_unity(6, 2)
    assert z3 == z6
    assert z3 + 1 == z6 + 1


def test_to_complex():
    for e in (3, 5, 8, 12):
        for m in range(e):
            got = Cyclotomic.root_of_unity(e, m).to_complex()
            want = cmath.exp(2j * cmath.pi * m / e)
            assert abs(got - want) < 1e-9


def test_is_zero_and_rational_detection():
    z = Cyclotomic.root_of_unity(7, 1)
    total = Cyclotomic.zero(7)
    for m in range(1, 7):
        total = total + Cyclotomic.root_of_unity(7, m)
    assert total == Cyclotomic.rational(-1, 7)
    assert (total + 1).is_zero
    assert not z.is_zero


@st.composite
def small_cyclotomic(draw, e):
    phi = euler_phi(e)
    coeffs = draw(
        st.lists(
            st.integers(min_value=-4, max_value=4), min_size=phi, max_size=phi
        )
    )
    return Cyclotomic(e, coeffs)


@given(
    e=st.sampled_from([3, 4, 6, 8, 12]),
    data=st.data(),
)
@settings(max_examples=100, deadline=None)
def test_ring_axioms_and_embedding(e, data):
    a = data.draw(small_cyclotomic(e))
    b = data.draw(small_cyclotomic(e))
    c = data.draw(small_cyclotomic(e))
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    za, zb = a.to_complex(), b.to_complex()
    assert abs((a * b).to_complex() - za * zb) < 1e-6
    assert abs((a + b).to_complex() - (za + zb)) < 1e-6


def test_coefficient_count_enforced():
    with pytest.raises(ValueError):
        Cyclotomic(8, [1, 2, 3])  # phi(8) = 4
