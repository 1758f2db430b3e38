"""Exact character tables by the modular (Dixon-Schneider) method.

The pipeline, all integer arithmetic:

1. Conjugacy classes; conductor e = exponent of the group; a prime
   l = 1 (mod e) with l^2 > 4|G|, so F_l contains the e-th roots of unity
   and integers up to 2*sqrt(|G|) lift uniquely from symmetric residues.
2. Common eigenvectors of the class-algebra matrices M_i (with
   M_i[j,m] = #{(x,y) in K_i x K_j : xy = z_m}) over F_l. Subspaces are
   tracked as (B, T) pairs with T B = I, split by the eigenspaces of the
   restriction T M B, and the M_i are materialized lazily in increasing
   class-size order -- most tables finish after one or two matrices.
3. Each common eigenvector w (normalized so w[identity] = 1) carries the
   central character: w_j = |K_j| chi(g_j) / chi(1) mod l. Degrees come from
   the first orthogonality relation; values mod l follow directly.
4. Values lift to Z[zeta_e] through a discrete Fourier transform over each
   cyclic group <g_j>: the root-of-unity multiplicities c_m are integers in
   [0, chi(1)], recovered exactly from their residues.
5. The finished table is verified: degrees, both orthogonality relations,
   and closure of the character set under the Galois action on Q(zeta_e)
   (complex conjugation included). Verification is exact integer work on
   the coefficient tensors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt, lcm
from typing import Optional, Sequence

import numpy as np

from .caps import Caps
from .cyclotomic import Cyclotomic, reduction_rows
from .errors import CapExceeded, EigenspaceSplitFailure, NotIrreducible
from .groups import ClassPartition, FiniteGroup, Subgroup, conjugacy_classes
from .modlinalg import (
    hessenberg_eigenvalues_mod,
    hessenberg_mod,
    inv_mod,
    matmul_mod,
    nullspace_mod,
    rref_mod,
)
from .numtheory import dixon_prime, euler_phi, primitive_root, sqrt_mod


# ---------------------------------------------------------------------------
# class algebra

def class_matrix(G: FiniteGroup, part: ClassPartition, i: int) -> np.ndarray:
    """Class matrix M_i with M_i[j, m] = a_{ijm} = #{(x,y) in K_i x K_j : xy = z_m}.

    Computed in O(k |K_i|) group operations: for each class representative
    z_m and each x in K_i, the partner y = x^-1 z_m lands in exactly one
    class j.
    """
    k = part.count
    M = np.zeros((k, k), dtype=np.int64)
    class_of = part.class_of
    mult = G.mult
    inv_members = [G.inv(x) for x in part.members[i]]
    for m, z in enumerate(part.representatives):
        col = M[:, m]
        for xi in inv_members:
            col[class_of[mult(xi, z)]] += 1
    return M


def class_algebra_constants(G: FiniteGroup, i: int, j: int, m: int) -> int:
    """a_{ijm} = number of ways a fixed representative of class m factors as
    (element of class i) * (element of class j)."""
    part = conjugacy_classes(G)
    return int(class_matrix(G, part, i)[j, m])


# ---------------------------------------------------------------------------
# table objects

class Character:
    """One irreducible character: integer coefficients on the power basis
    of Q(zeta_conductor), one row per conjugacy class."""

    __slots__ = ("conductor", "coeffs", "degree", "_values")

    def __init__(self, conductor: int, coeffs: np.ndarray):
        self.conductor = conductor
        self.coeffs = coeffs                      # (k, phi) int64, read-only
        self.coeffs.flags.writeable = False
        self.degree = int(coeffs[0, 0])
        self._values: Optional[tuple[Cyclotomic, ...]] = None

    @property
    def is_linear(self) -> bool:
        return self.degree == 1

    def value(self, j: int) -> Cyclotomic:
        return Cyclotomic.from_int_vector(self.conductor, [int(c) for c in self.coeffs[j]])

    @property
    def values(self) -> tuple[Cyclotomic, ...]:
        if self._values is None:
            self._values = tuple(self.value(j) for j in range(self.coeffs.shape[0]))
        return self._values

    def is_zero_at(self, j: int) -> bool:
        return not self.coeffs[j].any()

    def zero_classes(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.coeffs.shape[0]) if self.is_zero_at(j))

    def __repr__(self) -> str:
        return f"Character(degree={self.degree}, zeros={len(self.zero_classes())})"


@dataclass(frozen=True)
class CharacterTable:
    group: FiniteGroup
    partition: ClassPartition
    conductor: int
    prime: int
    characters: tuple[Character, ...]
    inverse_class: tuple[int, ...]
    class_orders: tuple[int, ...]

    @property
    def k(self) -> int:
        return self.partition.count

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(c.degree for c in self.characters)

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return self.partition.sizes

    def value(self, a: int, j: int) -> Cyclotomic:
        return self.characters[a].value(j)

    def coeff_tensor(self) -> np.ndarray:
        """(num_chars, num_classes, phi(conductor)) int64 stack."""
        return np.stack([c.coeffs for c in self.characters])

    def zero_mask(self) -> np.ndarray:
        """Boolean (char, class): True where the value is zero."""
        return ~self.coeff_tensor().any(axis=2)

    def kernel_classes(self, a: int) -> tuple[int, ...]:
        """Classes j with chi_a(g_j) = chi_a(1)."""
        c = self.characters[a]
        out = []
        target = c.coeffs[0]
        for j in range(self.k):
            if np.array_equal(c.coeffs[j], target):
                out.append(j)
        return tuple(out)

    def character_kernel(self, a: int) -> Subgroup:
        """Kernel of chi_a as a subgroup of the underlying group."""
        members: list[int] = []
        for j in self.kernel_classes(a):
            members.extend(self.partition.members[j])
        return Subgroup(self.group, members, validate=False)

    def linear_characters(self) -> tuple[int, ...]:
        return tuple(a for a, c in enumerate(self.characters) if c.degree == 1)

    @property
    def principal_index(self) -> int:
        """Index of the principal (all-ones) character. Not necessarily 0:
        rows are ordered by (degree, coefficient fingerprint), and negative
        leading coefficients sort ahead of the principal row's (1, 0, ...)."""
        for a, c in enumerate(self.characters):
            if c.degree == 1 and len(self.kernel_classes(a)) == self.k:
                return a
        raise AssertionError("table has no principal character")

    def __repr__(self) -> str:
        return (
            f"CharacterTable({self.group.name!r}, k={self.k}, "
            f"degrees={self.degrees})"
        )


# ---------------------------------------------------------------------------
# the Dixon-Schneider driver

def character_table(G: FiniteGroup, *, caps: Optional[Caps] = None) -> CharacterTable:
    caps = caps or Caps()
    if G.order > caps.order:
        raise CapExceeded("character_table", caps.order, G.order)
    part = conjugacy_classes(G)
    k = part.count
    reps = part.representatives
    orders = tuple(G.element_order(r) for r in reps)
    e = reduce(lcm, orders, 1)
    l = dixon_prime(e, G.order, caps.prime)
    jinv = tuple(part.class_of[G.inv(r)] for r in reps)

    w_vectors = _common_eigenvectors(G, part, l)
    assert len(w_vectors) == k

    sizes = part.sizes
    inv_size = [pow(int(s), -1, l) for s in sizes]
    omega = pow(primitive_root(l), (l - 1) // e, l)

    raw: list[np.ndarray] = []
    for w in w_vectors:
        coeffs = _lift_character(
            G, part, w, l, e, omega, orders, jinv, inv_size
        )
        raw.append(coeffs)
    raw.sort(key=lambda c: (int(c[0, 0]), tuple(int(x) for x in c.ravel())))
    chars = tuple(Character(e, c) for c in raw)
    table = CharacterTable(
        group=G,
        partition=part,
        conductor=e,
        prime=l,
        characters=chars,
        inverse_class=jinv,
        class_orders=orders,
    )
    verify_table(table)
    return table


def _common_eigenvectors(
    G: FiniteGroup, part: ClassPartition, l: int
) -> list[np.ndarray]:
    """Joint eigenvectors of all class matrices over F_l, one per character."""
    k = part.count
    spaces: list[tuple[np.ndarray, np.ndarray]] = [
        (np.eye(k, dtype=np.int64), np.eye(k, dtype=np.int64))
    ]
    for i in range(1, k):
        if all(B.shape[1] == 1 for B, _ in spaces):
            break
        M = class_matrix(G, part, i)
        nxt: list[tuple[np.ndarray, np.ndarray]] = []
        for B, T in spaces:
            d = B.shape[1]
            if d == 1:
                nxt.append((B, T))
                continue
            C = matmul_mod(T, matmul_mod(M, B, l), l)
            eigs = hessenberg_eigenvalues_mod(hessenberg_mod(C, l), l)
            if len(eigs) <= 1:
                nxt.append((B, T))
                continue
            covered = 0
            for lam in eigs:
                N = nullspace_mod((C - lam * np.eye(d, dtype=np.int64)) % l, l)
                m = N.shape[1]
                covered += m
                B2 = matmul_mod(B, N, l)
                _, piv = rref_mod(N.T, l)
                S = inv_mod(N[piv, :], l)
                T2 = matmul_mod(S, T[piv, :], l)
                nxt.append((B2, T2))
            if covered != d:
                raise EigenspaceSplitFailure(
                    f"class matrix {i} is not semisimple on a tracked subspace"
                )
        spaces = nxt
    if any(B.shape[1] != 1 for B, _ in spaces):
        raise EigenspaceSplitFailure(
            "class matrices exhausted with a subspace still unsplit"
        )
    out = []
    for B, _ in spaces:
        v = B[:, 0] % l
        assert v[0] % l != 0, "common eigenvector must be nonzero on the identity class"
        out.append(v * pow(int(v[0]), -1, l) % l)
    return out


def _lift_character(
    G: FiniteGroup,
    part: ClassPartition,
    w: np.ndarray,
    l: int,
    e: int,
    omega: int,
    orders: Sequence[int],
    jinv: Sequence[int],
    inv_size: Sequence[int],
) -> np.ndarray:
    """Integer coefficient matrix (k x phi(e)) of the character with central
    character w: degree from first orthogonality, then a DFT lift per class."""
    k = part.count
    n_order = G.order
    s = 0
    for j in range(k):
        s = (s + int(w[j]) * int(w[jinv[j]]) % l * inv_size[j]) % l
    d2 = n_order % l * pow(s, -1, l) % l
    r = sqrt_mod(d2, l)
    if r is None:
        raise NotIrreducible(f"degree^2 = {d2} is not a square mod {l}")
    d = min(r, l - r)
    if d * d % l != d2 or not (0 < d <= isqrt(n_order)) or n_order % d != 0:
        raise NotIrreducible(f"no valid degree lifts from {d2} mod {l}")

    vals_l = [d * int(w[j]) % l * inv_size[j] % l for j in range(k)]
    phi = euler_phi(e)
    rows = reduction_rows(e)
    coeffs = np.zeros((k, phi), dtype=np.int64)
    class_of = part.class_of
    for j, rep in enumerate(part.representatives):
        n = orders[j]
        pow_class = []
        x = 0
        for _ in range(n):
            pow_class.append(class_of[x])
            x = G.mult(x, rep)
        z = pow(omega, e // n, l)
        zinv = pow(z, -1, l)
        n_inv = pow(n, -1, l)
        step = e // n
        for m in range(n):
            acc = 0
            zm = pow(zinv, m, l)
            t_pow = 1
            for t in range(n):
                acc = (acc + vals_l[pow_class[t]] * t_pow) % l
                t_pow = t_pow * zm % l
            c = acc * n_inv % l
            if c == 0:
                continue
            assert c <= d, "root-of-unity multiplicity must lie in [0, degree]"
            row = rows[(step * m) % e]
            for t in range(phi):
                if row[t]:
                    coeffs[j, t] += c * row[t]
    assert coeffs[0, 0] == d and not coeffs[0, 1:].any()
    return coeffs


# ---------------------------------------------------------------------------
# verification

def verify_orthogonality(table: CharacterTable) -> list[str]:
    """Exact verification: degree column, sum of squares, both orthogonality
    relations, and Galois/conjugation closure of the character set. Returns
    the list of violations (empty = table is correct, not just probably so).
    All checks are integer tensor arithmetic; bounds fit int64 at the capped
    group orders."""
    G = table.group
    n = G.order
    k = table.k
    e = table.conductor
    phi = euler_phi(e)
    V = table.coeff_tensor()                      # (k, k, phi)
    sizes = np.array(table.class_sizes, dtype=np.int64)
    jinv = list(table.inverse_class)
    violations: list[str] = []

    if sum(d * d for d in table.degrees) != n:
        violations.append(f"sum of squared degrees {sum(d*d for d in table.degrees)} != {n}")
    for d in table.degrees:
        if d <= 0 or n % d:
            violations.append(f"degree {d} does not divide group order {n}")
            break

    R = np.array(reduction_rows(e), dtype=np.int64)    # (2e-1, phi)
    Vbar = V[:, jinv, :]                               # conj = value at inverse class

    # first orthogonality: sum_j |K_j| chi_a(j) conj(chi_b(j)) = n delta_ab
    W = V * sizes[None, :, None]
    P = np.tensordot(W, Vbar, axes=([1], [1]))         # (a, s, b, t)
    acc = np.zeros((k, k, phi), dtype=np.int64)
    for s in range(phi):
        acc += np.tensordot(P[:, s, :, :], R[s : s + phi], axes=([2], [0]))
    expected = np.zeros_like(acc)
    expected[np.arange(k), np.arange(k), 0] = n
    if not np.array_equal(acc, expected):
        bad = np.argwhere((acc != expected).any(axis=2))
        for a, b in bad[:5]:
            violations.append(f"first orthogonality fails for character pair ({a}, {b})")

    # second orthogonality: sum_a chi_a(i) conj(chi_a(j)) = delta_ij |C(g_i)|
    Q = np.tensordot(V, Vbar, axes=([0], [0]))         # (i, s, j, t)
    acc2 = np.zeros((k, k, phi), dtype=np.int64)
    for s in range(phi):
        acc2 += np.tensordot(Q[:, s, :, :], R[s : s + phi], axes=([2], [0]))
    expected2 = np.zeros_like(acc2)
    for i in range(k):
        expected2[i, i, 0] = n // int(sizes[i])
    if not np.array_equal(acc2, expected2):
        bad = np.argwhere((acc2 != expected2).any(axis=2))
        for i, j in bad[:5]:
            violations.append(f"second orthogonality fails for class pair ({i}, {j})")

    violations.extend(_galois_closure_violations(table, R))
    return violations


def verify_table(table: CharacterTable) -> None:
    """Raising form of verify_orthogonality, run on every freshly built table."""
    violations = verify_orthogonality(table)
    if violations:
        raise NotIrreducible("; ".join(violations))


def _galois_closure_violations(table: CharacterTable, R: np.ndarray) -> list[str]:
    from .numtheory import unit_group_generators

    e = table.conductor
    phi = R.shape[1]
    keys = {c.coeffs.tobytes() for c in table.characters}
    out = []
    for g in sorted(set(unit_group_generators(e)) | ({e - 1} if e > 2 else set())):
        sigma = np.zeros((phi, phi), dtype=np.int64)
        for s in range(phi):
            sigma[s] = R[(s * g) % e]
        for a, c in enumerate(table.characters):
            if (c.coeffs @ sigma).tobytes() not in keys:
                out.append(f"character {a} leaves the table under zeta -> zeta^{g}")
    return out


# ---------------------------------------------------------------------------
# linear characters and extension tests (used by the structure detectors)

def abelian_character_exponents(A: FiniteGroup) -> tuple[int, list[tuple[int, ...]]]:
    """All |A| linear characters of an abelian group A.

    Returns (m, rows) where m is the exponent of A and each row assigns to
    element x the integer a_x with chi(x) = zeta_m^(a_x). Built by extending
    characters along a chain of cyclic extensions.
    """
    n = A.order
    m = A.exponent
    from .groups import subgroup_closure

    chain: list[int] = []
    members: tuple[int, ...] = (0,)
    for x in range(1, n):
        if x not in set(members):
            chain.append(x)
            members = subgroup_closure(A, chain)
        if len(members) == n:
            break

    # start with the trivial character of the trivial subgroup and extend
    # along each cyclic step; a step of quotient order s has exactly s
    # extensions per character, so the count multiplies up to |A|
    sub_members: tuple[int, ...] = (0,)
    chars: list[dict[int, int]] = [{0: 0}]
    for g in chain:
        prev = set(sub_members)
        s = 1                                    # order of g modulo the old subgroup
        y = g
        while y not in prev:
            y = A.mult(y, g)
            s += 1
        g_to_s = A.power(g, s)
        new_chars: list[dict[int, int]] = []
        for chi in chars:
            # chi'(g) = zeta_m^t must satisfy s*t = chi(g^s) exponent (mod m);
            # s divides m, so there are exactly s solutions spaced m/s apart
            base = chi[g_to_s]
            assert m % s == 0
            t0 = _solve_linear(s, base, m)
            for jstep in range(s):
                t = (t0 + jstep * (m // s)) % m
                ext = dict(chi)
                cur, val = 0, 0
                for _ in range(s):               # chi'(x g^i) = chi(x) + i t
                    for x in sub_members:
                        ext[A.mult(x, cur)] = (chi[x] + val) % m
                    cur = A.mult(cur, g)
                    val = (val + t) % m
                new_chars.append(ext)
        chars = new_chars
        sub_members = subgroup_closure(A, list(sub_members) + [g])
        assert len(sub_members) == len(chars[0])
    rows = [tuple(chi[x] for x in range(n)) for chi in chars]
    assert len(set(rows)) == n, "an abelian group has exactly |A| linear characters"
    rows.sort()
    return m, rows


def _solve_linear(s: int, base: int, m: int) -> int:
    """Smallest t >= 0 with s*t = base (mod m); solvable in our use."""
    g = gcd(s, m)
    assert base % g == 0
    return (base // g) * pow(s // g, -1, m // g) % (m // g)


def linear_character_exponents(G: FiniteGroup) -> tuple[int, list[tuple[int, ...]]]:
    """Linear characters of any group G as exponent rows over all elements:
    chi(x) = zeta_m^(row[x]), with m the exponent of G/G'. Pulled back from
    the abelian quotient."""
    from .groups import derived_subgroup, quotient_group

    D = derived_subgroup(G)
    Q, proj = quotient_group(G, D)
    m, rows = abelian_character_exponents(Q)
    return m, [tuple(r[proj[x]] for x in range(G.order)) for r in rows]


# ---------------------------------------------------------------------------
# restriction, inner products, extension

@dataclass(frozen=True)
class ClassFunction:
    """A class function on (the re-indexed group of) a subgroup."""

    group: FiniteGroup
    values: tuple[Cyclotomic, ...]

    @property
    def degree(self) -> Cyclotomic:
        return self.values[0]


def restrict_character(table: CharacterTable, a: int, H: Subgroup) -> ClassFunction:
    """chi_a restricted to H, as a class function on H's own classes."""
    assert H.parent is table.group
    Hg = H.as_group
    partH = conjugacy_classes(Hg)
    chi = table.characters[a]
    vals = []
    for rep in partH.representatives:
        j = table.partition.class_of[H.parent_index(rep)]
        vals.append(chi.value(j))
    return ClassFunction(group=Hg, values=tuple(vals))


def inner_product(f: ClassFunction, g: ClassFunction) -> Cyclotomic:
    """<f, g> = (1/|H|) sum |K_j| f(j) conj(g(j)), exact."""
    assert f.group is g.group
    part = conjugacy_classes(f.group)
    acc = Cyclotomic.zero()
    for j, size in enumerate(part.sizes):
        acc = acc + f.values[j] * g.values[j].conjugate() * size
    return acc / f.group.order


def character_norm(f: ClassFunction) -> Fraction:
    """<f, f>; rational (and 1 exactly when f is irreducible)."""
    return inner_product(f, f).rational_value()


def character_as_class_function(table: CharacterTable, a: int) -> ClassFunction:
    return ClassFunction(group=table.group, values=table.characters[a].values)


def extends_to(
    N: Subgroup,
    phi: Character,
    U: Subgroup,
    *,
    U_table: Optional[CharacterTable] = None,
    caps: Optional[Caps] = None,
) -> tuple[bool, Optional[Character]]:
    """Does the irreducible phi of N extend to U (N normal in U)?

    phi is a character of N.as_group. Returns (True, psi) for the first
    psi in Irr(U) (table order) restricting exactly to phi, else (False,
    None). Comparison is exact and elementwise over N.
    """
    assert N.parent is U.parent and set(N.members) <= set(U.members)
    TU = U_table if U_table is not None else character_table(U.as_group, caps=caps)
    partN = conjugacy_classes(N.as_group)
    targets = [phi.value(j) for j in range(partN.count)]
    for psi in TU.characters:
        if psi.degree != phi.degree:
            continue
        if all(
            psi.value(TU.partition.class_of[U.position(N.parent_index(rep))]) == targets[jn]
            for jn, rep in enumerate(partN.representatives)
        ):
            return True, psi
    return False, None


def characters_over(
    table: CharacterTable, N: Subgroup, phi: Character
) -> list[int]:
    """Indices of irreducibles of G lying over phi in Irr(N), i.e. with
    <chi restricted to N, phi> != 0."""
    assert N.parent is table.group
    partN = conjugacy_classes(N.as_group)
    out = []
    for a in range(table.k):
        chi = table.characters[a]
        acc = Cyclotomic.zero()
        for jn, rep in enumerate(partN.representatives):
            j = table.partition.class_of[N.parent_index(rep)]
            acc = acc + chi.value(j) * phi.value(jn).conjugate() * partN.sizes[jn]
        if not acc.is_zero:
            out.append(a)
    return out
