"""Exact arithmetic in cyclotomic fields Q(zeta_e).

Values are stored densely on the power basis 1, zeta, ..., zeta^(phi(e)-1)
with Fraction coefficients, reduced modulo the e-th cyclotomic polynomial.
The basis property makes the zero test a plain coefficient check, which is
what the whole engine leans on: no floating point anywhere.

Reduction rows (zeta^m expressed on the basis, for m up to 2e-2) are computed
once per conductor and cached, so products and Galois maps are table lookups
plus integer/Fraction accumulation.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Sequence, Union

from .numtheory import euler_phi

Rat = Union[int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_e, low degree first, monic.

    Computed by exact division: x^e - 1 = prod over d | e of Phi_d.
    """
    if e < 1:
        raise ValueError(f"conductor must be positive, got {e}")
    num = [-1] + [0] * (e - 1) + [1]          # x^e - 1
    for d in range(1, e):
        if e % d == 0:
            num = _polydiv_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of an exact polynomial division (monic divisor)."""
    out = [0] * (len(num) - len(den) + 1)
    rem = list(num)
    for i in range(len(out) - 1, -1, -1):
        c = rem[i + len(den) - 1]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                rem[i + j] -= c * dj
    assert all(r == 0 for r in rem), "non-exact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def reduction_rows(e: int) -> tuple[tuple[int, ...], ...]:
    """rows[m] = coefficients of zeta_e^m on the power basis, m = 0..2e-2.

    Exponent sums met during products stay below 2*phi(e)-1 <= 2e-1, and
    Galois maps reduce exponents mod e first, so this range covers every use.
    """
    phi_poly = cyclotomic_polynomial(e)
    phi = len(phi_poly) - 1
    rows: list[tuple[int, ...]] = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(2 * e - 1):
        rows.append(tuple(cur))
        top = cur[phi - 1]
        cur = [0] + cur[: phi - 1]
        if top:
            for j in range(phi):
                cur[j] -= top * phi_poly[j]
    return tuple(rows)


class Cyclotomic:
    """An element of Q(zeta_conductor) on the dense power basis.

    Binary operations promote both sides to the lcm of the conductors.
    Equality works across conductors; hashing does not canonicalize the
    conductor, so only same-conductor values should share a dict or set
    (which is how the package uses them: one conductor per character table).
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Sequence[Rat]):
        phi = euler_phi(conductor)
        if len(coeffs) != phi:
            raise ValueError(f"need {phi} coefficients for conductor {conductor}")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) for c in coeffs)
        )

    def __setattr__(self, *a):  # immutable
        raise AttributeError("Cyclotomic is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def rational(q: Rat, conductor: int = 1) -> "Cyclotomic":
        coeffs = [Fraction(q)] + [Fraction(0)] * (euler_phi(conductor) - 1)
        return Cyclotomic(conductor, coeffs)

    @staticmethod
    def zero(conductor: int = 1) -> "Cyclotomic":
        return Cyclotomic.rational(0, conductor)

    @staticmethod
    def root_of_unity(e: int, m: int) -> "Cyclotomic":
        return Cyclotomic(e, reduction_rows(e)[m % e])

    @staticmethod
    def from_int_vector(e: int, vec: Sequence[int]) -> "Cyclotomic":
        return Cyclotomic(e, vec)

    # -- promotion -----------------------------------------------------------

    def promote(self, e2: int) -> "Cyclotomic":
        e = self.conductor
        if e2 == e:
            return self
        if e2 % e != 0:
            raise ValueError(f"cannot promote conductor {e} to {e2}")
        step = e2 // e
        rows = reduction_rows(e2)
        phi2 = euler_phi(e2)
        out = [Fraction(0)] * phi2
        for i, c in enumerate(self.coeffs):
            if c:
                row = rows[(i * step) % e2]
                for t in range(phi2):
                    if row[t]:
                        out[t] += c * row[t]
        return Cyclotomic(e2, out)

    def _common(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        e = lcm(self.conductor, other.conductor)
        return self.promote(e), other.promote(e)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> "Cyclotomic":
        other = _coerce(other, self.conductor)
        a, b = self._common(other)
        return Cyclotomic(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other) -> "Cyclotomic":
        return self + (-_coerce(other, self.conductor))

    def __rsub__(self, other) -> "Cyclotomic":
        return _coerce(other, self.conductor) - self

    def __mul__(self, other) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.conductor, [c * other for c in self.coeffs])
        a, b = self._common(other)
        e = a.conductor
        rows = reduction_rows(e)
        phi = len(a.coeffs)
        out = [Fraction(0)] * phi
        for i, ca in enumerate(a.coeffs):
            if not ca:
                continue
            for j, cb in enumerate(b.coeffs):
                if not cb:
                    continue
                cab = ca * cb
                row = rows[i + j]
                for t in range(phi):
                    if row[t]:
                        out[t] += cab * row[t]
        return Cyclotomic(e, out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyclotomic(self.conductor, [c / q for c in self.coeffs])
        raise TypeError("division only by rationals")

    # -- Galois --------------------------------------------------------------

    def galois(self, k: int) -> "Cyclotomic":
        """Image under zeta -> zeta^k, for k coprime to the conductor."""
        e = self.conductor
        if gcd(k, e) != 1:
            raise ValueError(f"{k} is not coprime to conductor {e}")
        rows = reduction_rows(e)
        phi = len(self.coeffs)
        out = [Fraction(0)] * phi
        for i, c in enumerate(self.coeffs):
            if c:
                row = rows[(i * k) % e]
                for t in range(phi):
                    if row[t]:
                        out[t] += c * row[t]
        return Cyclotomic(e, out)

    def conjugate(self) -> "Cyclotomic":
        if self.conductor == 1:
            return self
        return self.galois(self.conductor - 1)

    # -- predicates ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"not rational: {self!r}")
        return self.coeffs[0]

    @property
    def is_integer(self) -> bool:
        return self.is_rational and self.coeffs[0].denominator == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- rendering -----------------------------------------------------------

    def to_complex(self) -> complex:
        """Advisory float rendering; never used by exact code paths."""
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        if self.is_rational:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                s = f"{mag}z{self.conductor}" + (f"^{i}" if i > 1 else "")
                terms.append(("-" if c < 0 else "+") + s if terms or c < 0 else s)
        return "".join(terms) if terms else "0"


def _coerce(x, conductor: int) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic.rational(x, conductor)
    raise TypeError(f"cannot coerce {type(x).__name__} to Cyclotomic")
