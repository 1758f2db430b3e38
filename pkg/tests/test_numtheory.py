"""Number-theory utilities against sympy and against their defining
properties."""
from __future__ import annotations

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

import pytest

from charzero.errors import NoSuitablePrime
from charzero.numtheory import (
    divisors,
    dixon_prime,
    euler_phi,
    factorization,
    inverse_mod,
    is_prime,
    multiplicative_order,
    primitive_root,
    sqrt_mod,
    unit_group_generators,
)


def test_is_prime_matches_sympy_up_to_2000():
    for n in range(-3, 2001):
        assert is_prime(n) == sympy.isprime(n), n


def test_factorization_matches_sympy():
    for n in list(range(1, 500)) + [720, 1024, 59049, 2 * 3 * 5 * 7 * 11]:
        fac = dict(factorization(n))
        assert fac == {int(p): int(e) for p, e in sympy.factorint(n).items()}, n


@given(st.integers(min_value=1, max_value=100_000))
@settings(max_examples=200, deadline=None)
def test_factorization_reassembles(n):
    prod = 1
    for p, e in factorization(n):
        assert is_prime(p)
        prod *= p**e
    assert prod == n


def test_divisors_sorted_and_complete():
    for n in (1, 2, 12, 36, 97, 360):
        d = divisors(n)
        assert d == sorted(d)
        assert d == [m for m in range(1, n + 1) if n % m == 0]


def test_euler_phi_matches_sympy():
    for n in range(1, 300):
        assert euler_phi(n) == int(sympy.totient(n)), n


def test_multiplicative_order():
    for n in (5, 7, 9, 16, 31, 45):
        for a in range(1, n):
            if sympy.gcd(a, n) != 1:
                continue
            assert multiplicative_order(a, n) == int(sympy.n_order(a, n)), (a, n)


def test_unit_group_generators_generate():
    for n in (2, 3, 8, 15, 16, 24, 31, 45, 60):
        gens = unit_group_generators(n)
        seen = {1}
        frontier = [1]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = (x * g) % n
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        assert len(seen) == euler_phi(n), n


def test_inverse_mod():
    for n in (2, 7, 12, 31, 100):
        for a in range(1, n):
            if sympy.gcd(a, n) == 1:
                assert (a * inverse_mod(a, n)) % n == 1


def test_primitive_root():
    for p in (3, 5, 7, 11, 13, 31, 97):
        g = primitive_root(p)
        assert multiplicative_order(g, p) == p - 1


def test_sqrt_mod():
    for p in (3, 5, 7, 13, 101):
        squares = {(x * x) % p for x in range(p)}
        for a in range(p):
            r = sqrt_mod(a, p)
            if a in squares:
                assert r is not None and (r * r) % p == a
            else:
                assert r is None


def test_dixon_prime_properties():
    for exponent, order in ((6, 6), (12, 24), (4, 8), (60, 60), (21, 21)):
        ell = dixon_prime(exponent, order, 10_000_000)
        assert is_prime(ell)
        assert ell % exponent == 1
        assert ell > 2 * sympy.sqrt(order)


def test_dixon_prime_cap():
    with pytest.raises(NoSuitablePrime):
        dixon_prime(9973 * 2, 100, 300)
