"""Small exact number-theory helpers (integers only, no floats)."""
from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt

from .errors import NoSuitablePrime

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (the base set is proven for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def factorization(n: int) -> tuple[tuple[int, int], ...]:
    """Sorted (prime, multiplicity) pairs; trial division is plenty here."""
    if n < 1:
        raise ValueError(f"factorization of non-positive {n}")
    out: list[tuple[int, int]] = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            a = 0
            while n % d == 0:
                n //= d
                a += 1
            out.append((d, a))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisors(n: int) -> list[int]:
    out = [1]
    for p, a in factorization(n):
        out = [d * p**i for d in out for i in range(a + 1)]
    return sorted(out)


def euler_phi(n: int) -> int:
    out = n
    for p, _ in factorization(n):
        out = out // p * (p - 1)
    return out


def multiplicative_order(a: int, n: int) -> int:
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    o = euler_phi(n)
    for p, _ in factorization(o):
        while o % p == 0 and pow(a, o // p, n) == 1:
            o //= p
    return o


def unit_group_generators(n: int) -> tuple[int, ...]:
    """Generators of (Z/n)^*, found by greedy incremental closure."""
    if n <= 2:
        return ()
    units = [a for a in range(1, n) if gcd(a, n) == 1]
    gens: list[int] = []
    closed = {1}
    for a in units:
        if a in closed:
            continue
        gens.append(a)
        frontier = [1]
        closed = {1}
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = x * g % n
                if y not in closed:
                    closed.add(y)
                    frontier.append(y)
        if len(closed) == len(units):
            break
    return tuple(gens)


def inverse_mod(a: int, n: int) -> int:
    return pow(a, -1, n)


def primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group of F_p."""
    if p == 2:
        return 1
    for g in range(2, p):
        if multiplicative_order(g, p) == p - 1:
            return g
    raise ValueError(f"{p} is not prime")


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a modulo an odd prime p (Tonelli-Shanks), or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) == 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def dixon_prime(exponent: int, group_order: int, prime_cap: int) -> int:
    """Smallest prime l = 1 (mod exponent) with l^2 > 4*group_order.

    Raises NoSuitablePrime past prime_cap.
    """
    l = exponent + 1
    while l * l <= 4 * group_order or not is_prime(l):
        l += exponent
        if l > prime_cap:
            raise NoSuitablePrime(exponent, prime_cap)
    return l
