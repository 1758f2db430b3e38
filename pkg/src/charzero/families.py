"""Group families: Singer-type Frobenius groups on finite fields, generalized
dihedral groups, extraspecial groups, and a catalog of named groups.

Every constructor returns a validated FiniteGroup whose structure is
independently checkable by the detectors in structure.py; tests enforce that
round trip rather than trusting the construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .caps import Caps
from .errors import CapExceeded, EvenInvariant, InvalidParameters, InvalidVariant, UnknownName
from .groups import (
    FiniteGroup,
    Subgroup,
    direct_product,
    group_from_generators,
    group_from_table,
    perm_from_cycles,
    quotient_group,
    subgroup_closure,
)
from .numtheory import factorization, is_prime


# ---------------------------------------------------------------------------
# finite-field arithmetic for the Singer construction
#
# Bundled table of irreducible polynomials over F_p for every prime power
# p^k <= 1024 with k >= 2. Entry (p, k) holds (c_0, ..., c_{k-1}) for the monic
# f(x) = x^k + c_{k-1} x^{k-1} + ... + c_0, chosen as the lexicographically
# least irreducible in the coefficient order (c_0, ..., c_{k-1}). Field
# elements are encoded as base-p integers, digit i = coefficient of x^i.

_IRREDUCIBLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1),
    (2, 3): (1, 1, 0),
    (2, 4): (1, 1, 0, 0),
    (2, 5): (1, 0, 1, 0, 0),
    (2, 6): (1, 1, 0, 0, 0, 0),
    (2, 7): (1, 1, 0, 0, 0, 0, 0),
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0),
    (2, 9): (1, 1, 0, 0, 0, 0, 0, 0, 0),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0),
    (3, 2): (1, 0),
    (3, 3): (1, 2, 0),
    (3, 4): (2, 1, 0, 0),
    (3, 5): (1, 2, 0, 0, 0),
    (3, 6): (2, 1, 0, 0, 0, 0),
    (5, 2): (2, 0),
    (5, 3): (1, 1, 0),
    (5, 4): (2, 0, 0, 0),
    (7, 2): (1, 0),
    (7, 3): (2, 0, 0),
    (11, 2): (1, 0),
    (13, 2): (2, 0),
    (17, 2): (3, 0),
    (19, 2): (1, 0),
    (23, 2): (1, 0),
    (29, 2): (2, 0),
    (31, 2): (1, 0),
}

_FIELD_LIMIT = 1024


class _Field:
    """F_{p^k} on integer codes 0..p^k-1 (base-p digit = coefficient of x^i)."""

    def __init__(self, p: int, k: int):
        self.p, self.k, self.size = p, k, p**k
        self.modulus = _IRREDUCIBLE[(p, k)] if k > 1 else ()

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    def encode(self, digits: Sequence[int]) -> int:
        out = 0
        for d in reversed(digits):
            out = out * self.p + d % self.p
        return out

    def add(self, a: int, b: int) -> int:
        return self.encode([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return a * b % p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j, fj in enumerate(self.modulus):
                    prod[i - k + j] = (prod[i - k + j] - c * fj) % p
        return self.encode(prod[:k])

    def pow(self, a: int, n: int) -> int:
        out, base = 1, a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def primitive_element(self) -> int:
        q = self.size - 1
        checks = [q // r for r, _ in factorization(q)]
        for g in range(2, self.size):
            if all(self.pow(g, c) != 1 for c in checks):
                return g
        raise AssertionError("no primitive element found (field arithmetic broken)")


def singer_frobenius(
    p: int, k: int, m: int, *, caps: Optional[Caps] = None
) -> FiniteGroup:
    """The Frobenius group of order m * p^k inside AGL(1, p^k): permutations
    x -> a*x + b of the field with p^k elements, a running over the order-m
    subgroup of the multiplicative group. Requires m > 1 and m | p^k - 1."""
    if not is_prime(p):
        raise InvalidParameters(f"p = {p} is not prime")
    if k < 1:
        raise InvalidParameters(f"k = {k} must be positive")
    if p**k > _FIELD_LIMIT:
        raise InvalidParameters(
            f"p^k = {p**k} exceeds the bundled field table limit {_FIELD_LIMIT}"
        )
    if m <= 1 or (p**k - 1) % m != 0:
        raise InvalidParameters(f"m = {m} is not a divisor > 1 of p^k - 1 = {p**k - 1}")
    F = _Field(p, k)
    a = F.pow(F.primitive_element(), (F.size - 1) // m)
    translate = tuple(F.add(x, 1) for x in range(F.size))
    scale = tuple(F.mul(a, x) for x in range(F.size))
    G = group_from_generators(
        [translate, scale], name=f"Singer({p},{k},{m})", caps=caps
    )
    assert G.order == m * F.size, (G.order, m * F.size)
    return G


# ---------------------------------------------------------------------------
# generalized dihedral groups

def generalized_dihedral(
    invariants: Sequence[int], *, caps: Optional[Caps] = None
) -> FiniteGroup:
    """Dih(A) = A : C2 with the inverting action, A the abelian group with the
    given invariant factor list (all odd, so inversion is fixed-point-free)."""
    invariants = list(invariants)
    if not invariants or any(d < 1 for d in invariants):
        raise InvalidParameters(f"bad invariant list {invariants}")
    for d in invariants:
        if d % 2 == 0:
            raise EvenInvariant(f"invariant {d} is even")
    invariants = [d for d in invariants if d > 1]
    if not invariants:
        raise InvalidParameters("the abelian kernel must be nontrivial")
    # points = elements of A in mixed radix; generators act by translation,
    # plus the inversion a -> -a
    size = 1
    for d in invariants:
        size *= d

    def decode(x: int) -> list[int]:
        out = []
        for d in invariants:
            x, r = divmod(x, d)
            out.append(r)
        return out

    def encode(digits: Sequence[int]) -> int:
        out = 0
        for d, r in zip(reversed(invariants), reversed(list(digits))):
            out = out * d + r % d
        return out

    gens = []
    for axis, d in enumerate(invariants):
        gens.append(
            tuple(
                encode([r + (1 if i == axis else 0) for i, r in enumerate(decode(x))])
                for x in range(size)
            )
        )
    gens.append(tuple(encode([-r for r in decode(x)]) for x in range(size)))
    name = "GD(" + ",".join(str(d) for d in invariants) + ")"
    G = group_from_generators(gens, name=name, caps=caps)
    assert G.order == 2 * size
    return G


# ---------------------------------------------------------------------------
# extraspecial groups

def _heisenberg(p: int) -> FiniteGroup:
    """Exponent-p extraspecial group of order p^3: triples (a, b, c) with
    (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b')."""
    n = p**3

    def mul(x: int, y: int) -> int:
        a, b, c = x // (p * p), (x // p) % p, x % p
        d, e, f = y // (p * p), (y // p) % p, y % p
        return ((a + d) % p) * p * p + ((b + e) % p) * p + (c + f + a * e) % p

    table = [[mul(x, y) for y in range(n)] for x in range(n)]
    return group_from_table(table, name=f"Heis({p})")


def _central_product(A: FiniteGroup, B: FiniteGroup, *, name: str) -> FiniteGroup:
    """A * B identifying the (prime-order) centers: quotient of A x B by the
    anti-diagonal copy of the common center."""
    za, zb = A.center, B.center
    assert len(za) == len(zb) and is_prime(len(za)), "factors need matching prime centers"
    P = direct_product(A, B)
    nb = B.order
    seed = za[1] * nb + B.inv(zb[1])
    N = Subgroup(P, subgroup_closure(P, [seed]), validate=False)
    Q, _ = quotient_group(P, N)
    return group_from_table(
        [[Q.mult(i, j) for j in range(Q.order)] for i in range(Q.order)],
        name=name,
        validate=False,
    )


def extraspecial_group(
    p: int, n: int, variant: str, *, caps: Optional[Caps] = None
) -> FiniteGroup:
    """Extraspecial group of order p^(2n+1).

    variant 'plus' (p = 2): central product of n dihedral D8 factors.
    variant 'minus' (p = 2): one quaternion Q8 factor, n-1 dihedral.
    variant 'exponent_p' (p odd): central product of n Heisenberg p^3 factors.
    """
    if not is_prime(p) or n < 1:
        raise InvalidParameters(f"need prime p and n >= 1, got p={p}, n={n}")
    if variant not in ("plus", "minus", "exponent_p"):
        raise InvalidVariant(f"unknown variant {variant!r}")
    if (variant in ("plus", "minus")) != (p == 2):
        raise InvalidVariant(f"variant {variant!r} is not defined for p = {p}")
    order = p ** (2 * n + 1)
    cap = (caps or Caps()).order
    if order > cap:
        raise CapExceeded("order", cap, order)
    if p == 2:
        d8 = named_group("D8")
        G = named_group("Q8") if variant == "minus" else d8
        factor = d8
    else:
        G = factor = _heisenberg(p)
    for _ in range(n - 1):
        G = _central_product(G, factor, name="tmp")
    return group_from_table(
        [[G.mult(i, j) for j in range(G.order)] for i in range(G.order)],
        name=f"ES({p},{n},{variant})",
        validate=False,
    )


# ---------------------------------------------------------------------------
# named groups

def _metacyclic(n: int, k: int, t: int, s: int, name: str) -> FiniteGroup:
    """<a, b | a^n = 1, b^k = a^s, b a b^-1 = a^t> as a table on pairs
    (i, j) = a^i b^j with index i*k + j. Needs t^k = 1 and s(t-1) = 0 mod n;
    table validation (exhaustive at these orders) backstops the arithmetic."""
    assert pow(t, k, n) == 1 and (s * (t - 1)) % n == 0

    def mul(x: int, y: int) -> int:
        i, j = divmod(x, k)
        i2, j2 = divmod(y, k)
        jj = j + j2
        carry = s if jj >= k else 0
        return ((i + i2 * pow(t, j, n) + carry) % n) * k + jj % k

    return group_from_table(
        [[mul(x, y) for y in range(n * k)] for x in range(n * k)], name=name
    )


def _dihedral(n: int) -> FiniteGroup:
    rot = tuple((i + 1) % n for i in range(n))
    flip = tuple((n - i) % n for i in range(n))
    return group_from_generators([rot, flip], name=f"D{2 * n}")


def _cyclic(n: int) -> FiniteGroup:
    if n == 1:
        return group_from_table([[0]], name="C1")
    return group_from_generators(
        [tuple((i + 1) % n for i in range(n))], name=f"C{n}"
    )


def _psl27() -> FiniteGroup:
    """Moebius action on the projective line over F_7; point 7 = infinity."""
    shift = tuple([(x + 1) % 7 for x in range(7)] + [7])
    inv = [0] * 8
    inv[0], inv[7] = 7, 0
    for x in range(1, 7):
        inv[x] = (-pow(x, 5, 7)) % 7  # -1/x
    G = group_from_generators([shift, tuple(inv)], name="PSL(2,7)")
    assert G.order == 168
    return G


def _sl23() -> FiniteGroup:
    """SL(2,3) acting on the 8 nonzero vectors of F_3^2."""
    nonzero = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    pos = {v: i for i, v in enumerate(nonzero)}

    def act(a, b, c, d):
        return tuple(
            pos[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in nonzero
        )

    G = group_from_generators([act(0, -1, 1, 0), act(1, 1, 0, 1)], name="SL(2,3)")
    assert G.order == 24
    return G


def _q8_frobenius_72() -> FiniteGroup:
    """(C3 x C3) : Q8, the Frobenius group of order 72 with quaternion
    complement: SL(2,3)'s Sylow 2-subgroup acting on the affine plane F_3^2."""

    def lin(a, b, c, d):
        return tuple(
            3 * ((a * (v // 3) + b * (v % 3)) % 3) + (c * (v // 3) + d * (v % 3)) % 3
            for v in range(9)
        )

    translate = tuple(3 * ((v // 3 + 1) % 3) + v % 3 for v in range(9))
    G = group_from_generators(
        [lin(0, -1, 1, 0), lin(1, 1, 1, -1), translate], name="(C3xC3):Q8"
    )
    assert G.order == 72
    return G


_P = perm_from_cycles

_NAMED = {
    "V4": lambda: group_from_generators(
        [_P(4, [(0, 1), (2, 3)]), _P(4, [(0, 2), (1, 3)])], name="V4"
    ),
    "S3": lambda: group_from_generators([_P(3, [(0, 1, 2)]), _P(3, [(0, 1)])], name="S3"),
    "S4": lambda: group_from_generators(
        [_P(4, [(0, 1, 2, 3)]), _P(4, [(0, 1)])], name="S4"
    ),
    "A4": lambda: group_from_generators(
        [_P(4, [(0, 1, 2)]), _P(4, [(0, 1), (2, 3)])], name="A4"
    ),
    "A5": lambda: group_from_generators(
        [_P(5, [(0, 1, 2, 3, 4)]), _P(5, [(0, 1, 2)])], name="A5"
    ),
    "D8": lambda: _dihedral(4),
    "D10": lambda: _dihedral(5),
    "D12": lambda: _dihedral(6),
    "D14": lambda: _dihedral(7),
    "D16": lambda: _dihedral(8),
    "Q8": lambda: _metacyclic(4, 2, 3, 2, "Q8"),
    "Q16": lambda: _metacyclic(8, 2, 7, 4, "Q16"),
    "SD16": lambda: _metacyclic(8, 2, 3, 0, "SD16"),
    "M16": lambda: _metacyclic(8, 2, 5, 0, "M16"),
    "Dic3": lambda: _metacyclic(6, 2, 5, 3, "Dic3"),
    "M27": lambda: _metacyclic(9, 3, 4, 0, "M27"),
    "Heis3": lambda: _heisenberg(3),
    "SL23": _sl23,
    "PSL27": _psl27,
    "F20": lambda: singer_frobenius(5, 1, 4),
    "F21": lambda: singer_frobenius(7, 1, 3),
    "F39": lambda: singer_frobenius(13, 1, 3),
    "F55": lambda: singer_frobenius(11, 1, 5),
    "F57": lambda: singer_frobenius(19, 1, 3),
    "F75": lambda: singer_frobenius(5, 2, 3),
    "Q8F72": _q8_frobenius_72,
}

_ALIASES = {
    "C3xC4_dicyclic": "Dic3",
    "Q12": "Dic3",
    "PSL(2,7)": "PSL27",
    "SL(2,3)": "SL23",
}


def named_group(name: str, *, caps: Optional[Caps] = None) -> FiniteGroup:
    """A group from the built-in catalog; C<n> builds the cyclic group of
    order n dynamically."""
    key = _ALIASES.get(name, name)
    if key in _NAMED:
        return _NAMED[key]()
    if key.startswith("C") and key[1:].isdigit():
        n = int(key[1:])
        cap = (caps or Caps()).order
        if n > cap:
            raise CapExceeded("order", cap, n)
        if n >= 1:
            return _cyclic(n)
    known = sorted(_NAMED) + sorted(_ALIASES) + ["C<n>"]
    raise UnknownName(name, known)


# ---------------------------------------------------------------------------
# family dispatch (shared by the CLI and corpus round-tripping)

@dataclass(frozen=True)
class FamilySpec:
    family: str  # singer_frobenius | generalized_dihedral | extraspecial | named
    parameters: tuple

    def build(self, *, caps: Optional[Caps] = None) -> FiniteGroup:
        return build_family(self, caps=caps)


def build_family(spec: FamilySpec, *, caps: Optional[Caps] = None) -> FiniteGroup:
    fam, par = spec.family, spec.parameters
    if fam == "singer_frobenius":
        if len(par) != 3:
            raise InvalidParameters("singer_frobenius takes p k m")
        return singer_frobenius(int(par[0]), int(par[1]), int(par[2]), caps=caps)
    if fam == "generalized_dihedral":
        if not par:
            raise InvalidParameters("generalized_dihedral takes invariant factors")
        return generalized_dihedral([int(d) for d in par], caps=caps)
    if fam == "extraspecial":
        if len(par) != 3:
            raise InvalidParameters("extraspecial takes p n variant")
        return extraspecial_group(int(par[0]), int(par[1]), str(par[2]), caps=caps)
    if fam == "named":
        if len(par) != 1:
            raise InvalidParameters("named takes one group name")
        return named_group(str(par[0]), caps=caps)
    raise InvalidParameters(f"unknown family {fam!r}")
