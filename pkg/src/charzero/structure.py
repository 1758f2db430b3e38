"""Structure detectors: Camina property, Frobenius structure, extraspecial
groups, and Wolf subgroups.

Everything is decided by exhaustive finite checks at desk scale -- no
classification theorems are assumed. Where a detector has a character-
theoretic twin (Camina) the two are implemented independently so their
agreement is a testable statement rather than a tautology.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .caps import Caps
from .chartab import Character, CharacterTable, character_table, characters_over
from .errors import DegenerateDerived, NotCamina, UniquenessFailure
from .groups import (
    FiniteGroup,
    Subgroup,
    conjugacy_classes,
    derived_subgroup,
    intermediate_subgroups,
    lower_central_series,
    subgroup_closure,
)
from .numtheory import divisors, factorization


# ---------------------------------------------------------------------------
# Camina property

def _proper_derived(G: FiniteGroup) -> Subgroup:
    D = derived_subgroup(G)
    if D.order == 1:
        raise DegenerateDerived("derived subgroup is trivial (abelian input)")
    if D.order == G.order:
        raise DegenerateDerived("derived subgroup is the whole group (perfect input)")
    return D


def is_camina(G: FiniteGroup) -> bool:
    """gG' is a single conjugacy class for every g outside G' (coset test)."""
    D = _proper_derived(G)
    part = conjugacy_classes(G)
    dmem = D.members
    seen = [False] * G.order
    for g in range(G.order):
        if seen[g] or g in D:
            continue
        coset = sorted(G.mult(g, d) for d in dmem)
        for x in coset:
            seen[x] = True
        if tuple(coset) != part.members[part.class_of[g]]:
            return False
    return True


def is_camina_by_characters(G: FiniteGroup, table: CharacterTable) -> bool:
    """Character twin: every nonlinear irreducible vanishes identically off G'."""
    D = _proper_derived(G)
    part = table.partition
    outside = [j for j, rep in enumerate(part.representatives) if rep not in D]
    for chi in table.characters:
        if chi.degree == 1:
            continue
        if any(not chi.is_zero_at(j) for j in outside):
            return False
    return True


def dark_scoppola_case(G: FiniteGroup, *, caps: Optional[Caps] = None) -> str:
    """Which case of the Camina-group classification G falls into:
    'p-group-class-le-3', 'frobenius-cyclic', 'frobenius-quaternion8',
    or 'violation' (reserved; must never occur on a genuine Camina group)."""
    if not is_camina(G):
        raise NotCamina(f"{G.name} is not a Camina group")
    fac = factorization(G.order)
    if len(fac) == 1:
        series = lower_central_series(G)
        nclass = len(series) - 1
        return "p-group-class-le-3" if nclass <= 3 else "violation"
    fd = frobenius_structure(G, caps=caps)
    if fd is None:
        return "violation"
    C = fd.complement
    if fd.complement_cyclic:
        return "frobenius-cyclic"
    if _is_quaternion8(C.as_group):
        return "frobenius-quaternion8"
    return "violation"


def _is_quaternion8(H: FiniteGroup) -> bool:
    if H.order != 8 or H.is_abelian:
        return False
    involutions = sum(1 for x in range(8) if H.element_order(x) == 2)
    return involutions == 1


# ---------------------------------------------------------------------------
# Frobenius structure

@dataclass(frozen=True)
class FrobeniusData:
    kernel: Subgroup
    complement: Subgroup
    complement_cyclic: bool
    complement_order: int


def frobenius_structure(G: FiniteGroup, *, caps: Optional[Caps] = None) -> Optional[FrobeniusData]:
    """Detect a Frobenius kernel/complement pair, or return None.

    Kernel candidates are Hall sets {g : order(g) divides n} for Hall
    divisors n of |G| (the kernel of a genuine Frobenius group is exactly
    such a set). A candidate must be a subgroup, every nontrivial member's
    centralizer must lie inside it, and a complement is then found by
    search -- it exists whenever the kernel does, so the search failing is
    an assertion error, not a soft None. All FrobeniusData invariants are
    re-verified by brute force before returning.
    """
    n_g = G.order
    for n in divisors(n_g):
        if n in (1, n_g) or gcd(n, n_g // n) != 1:
            continue
        members = [g for g in range(n_g) if n % G.element_order(g) == 0]
        if len(members) != n:
            continue
        member_set = set(members)
        if any(G.mult(a, b) not in member_set for a in members for b in members):
            continue
        K = Subgroup(G, members, validate=False)
        if not _centralizers_inside(G, member_set):
            continue
        C = _find_complement(G, member_set, n_g // n)
        assert C is not None, "a normal Hall kernel must have a complement"
        data = FrobeniusData(
            kernel=K,
            complement=C,
            complement_cyclic=_is_cyclic(C),
            complement_order=C.order,
        )
        _verify_frobenius(G, data)
        return data
    return None


def _centralizers_inside(G: FiniteGroup, kernel: set[int]) -> bool:
    for x in kernel:
        if x == 0:
            continue
        for g in range(G.order):
            if g not in kernel and G.mult(g, x) == G.mult(x, g):
                return False
    return True


def _find_complement(G: FiniteGroup, kernel: set[int], h: int) -> Optional[Subgroup]:
    """A subgroup of order h meeting the kernel trivially.

    One generator suffices for cyclic complements; otherwise closures of
    elements pairs are scanned with early aborts (Frobenius complements at
    this scale are 2-generated).
    """
    outside = [
        g for g in range(1, G.order)
        if g not in kernel and h % G.element_order(g) == 0
    ]
    for g in outside:
        if G.element_order(g) == h:
            members = subgroup_closure(G, [g])
            if len(members) == h and sum(1 for m in members if m in kernel) == 1:
                return Subgroup(G, members, validate=False)
    for i, a in enumerate(outside):
        for b in outside[i + 1:]:
            members = subgroup_closure(G, [a, b])
            if len(members) == h and sum(1 for m in members if m in kernel) == 1:
                return Subgroup(G, members, validate=False)
    return None


def _is_cyclic(H: Subgroup) -> bool:
    return any(
        H.parent.element_order(m) == H.order for m in H.members
    )


def _verify_frobenius(G: FiniteGroup, data: FrobeniusData) -> None:
    K, C = data.kernel, data.complement
    assert K.order * C.order == G.order
    assert set(K.members) & set(C.members) == {0}
    assert K.is_normal()
    for x in K.members:
        if x == 0:
            continue
        for c in C.members:
            if c == 0:
                continue
            assert G.mult(x, c) != G.mult(c, x), "complement must act fixed-point-freely"


# ---------------------------------------------------------------------------
# extraspecial groups

def extraspecial_parameters(G: FiniteGroup) -> Optional[tuple[int, int]]:
    """(p, n) when G is extraspecial of order p^(2n+1), else None."""
    fac = factorization(G.order)
    if len(fac) != 1:
        return None
    p, a = fac[0]
    if a < 3 or a % 2 == 0:
        return None
    n = (a - 1) // 2
    Z = G.center
    if len(Z) != p:
        return None
    D = derived_subgroup(G)
    if D.members != tuple(sorted(Z)):
        return None
    # G/Z elementary abelian: x^p central for every x
    for x in range(G.order):
        if G.power(x, p) not in set(Z):
            return None
    return (p, n)


def is_extraspecial(G: FiniteGroup) -> bool:
    return extraspecial_parameters(G) is not None


# ---------------------------------------------------------------------------
# Wolf subgroups

@dataclass(frozen=True)
class WolfData:
    phi: Character
    U: Subgroup
    num_chars_over_phi: int


def wolf_subgroup(
    G: FiniteGroup,
    table: CharacterTable,
    phi: Character,
    *,
    caps: Optional[Caps] = None,
    table_cache: Optional[dict] = None,
) -> WolfData:
    """The unique maximal U with G' <= U <= G to which phi in Irr(G')
    extends invariantly.

    The search space is the intermediate-subgroup lattice (G/G' abelian).
    A candidate U qualifies when U lies inside the inertia group T of phi
    and some extension of phi to U is T-invariant; the maximal candidate
    must be unique (UniquenessFailure otherwise -- firing on any real group
    would falsify the uniqueness lemma this implements). Both WolfData
    invariants -- the count of irreducibles of G over phi equals |U:G'|, and
    each such irreducible vanishes off U -- are verified before returning.
    """
    D = derived_subgroup(G)
    partD = conjugacy_classes(D.as_group)
    val_at = {
        x: phi.value(partD.class_of[D.position(x)]) for x in D.members
    }

    inertia = [
        g for g in range(G.order)
        if all(val_at[G.conjugate(g, x)] == val_at[x] for x in D.members)
    ]
    T = Subgroup(G, inertia, validate=False)
    t_gens = _subgroup_generators(T)
    cache = table_cache if table_cache is not None else {}

    candidates: list[Subgroup] = []
    for V in intermediate_subgroups(G, D):
        if not set(V.members) <= set(T.members):
            continue
        if _has_invariant_extension(D, phi, V, t_gens, cache, caps):
            candidates.append(V)

    maximal = [
        V for V in candidates
        if not any(W is not V and set(V.members) < set(W.members) for W in candidates)
    ]
    if len(maximal) != 1:
        raise UniquenessFailure(
            f"{len(maximal)} maximal extension subgroups (orders "
            f"{sorted(W.order for W in maximal)}) for phi of degree {phi.degree}"
        )
    U = maximal[0]

    over = characters_over(table, D, phi)
    expected = U.order // D.order
    assert len(over) == expected, (
        f"got {len(over)} characters over phi, expected |U:G'| = {expected}"
    )
    u_set = set(U.members)
    for a in over:
        for j, rep in enumerate(table.partition.representatives):
            if rep not in u_set:
                assert table.characters[a].is_zero_at(j), (
                    f"character {a} over phi fails to vanish off U at class {j}"
                )
    return WolfData(phi=phi, U=U, num_chars_over_phi=expected)


def _subgroup_generators(H: Subgroup) -> list[int]:
    gens: list[int] = []
    closed: set[int] = {0}
    for x in H.members:
        if x in closed:
            continue
        gens.append(x)
        closed = set(subgroup_closure(H.parent, gens))
        if len(closed) == H.order:
            break
    return gens


def _has_invariant_extension(
    D: Subgroup,
    phi: Character,
    V: Subgroup,
    t_gens: list[int],
    cache: dict,
    caps: Optional[Caps],
) -> bool:
    """Is there psi in Irr(V) with psi|_{G'} = phi and psi^t = psi for all t
    in the inertia group? (V normal in T because V/G' sits in the abelian
    G/G', so conjugates of psi are again characters of V.)"""
    G = V.parent
    key = V.members
    TV = cache.get(key)
    if TV is None:
        TV = character_table(V.as_group, caps=caps)
        cache[key] = TV
    partD = conjugacy_classes(D.as_group)
    targets = [phi.value(j) for j in range(partD.count)]
    class_of_v = TV.partition.class_of

    for psi in TV.characters:
        if psi.degree != phi.degree:
            continue
        if not all(
            psi.value(class_of_v[V.position(D.parent_index(rep))]) == targets[jn]
            for jn, rep in enumerate(partD.representatives)
        ):
            continue
        if all(_conjugate_fixes(G, V, TV, psi, t) for t in t_gens):
            return True
    return False


def _conjugate_fixes(
    G: FiniteGroup, V: Subgroup, TV: CharacterTable, psi: Character, t: int
) -> bool:
    """psi^t = psi, where psi^t(x) = psi(t x t^-1) on V."""
    class_of_v = TV.partition.class_of
    for j, rep in enumerate(TV.partition.representatives):
        x = V.parent_index(rep)
        jc = class_of_v[V.position(G.conjugate(t, x))]
        if jc != j and psi.value(jc) != psi.value(j):
            return False
    return True
