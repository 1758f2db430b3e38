"""Group core: construction, validation, classes, subgroup machinery."""
from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from charzero.caps import Caps
from charzero.errors import (
    ClosureCapExceeded,
    EmptyGeneratorList,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotNormal,
    NotSubgroup,
)
from charzero.families import named_group
from charzero.groups import (
    FiniteGroup,
    Subgroup,
    conjugacy_classes,
    derived_series,
    derived_subgroup,
    direct_product,
    fitting_data,
    group_from_generators,
    group_from_table,
    intermediate_subgroups,
    normal_subgroups,
    perm_from_cycles,
    quotient_group,
    subgroup_closure,
)

S3_GENS = [perm_from_cycles(3, [(0, 1, 2)]), perm_from_cycles(3, [(0, 1)])]


def cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# construction

def test_group_from_generators_s3():
    G = group_from_generators(S3_GENS, name="S3")
    assert G.order == 6
    assert not G.is_abelian
    assert G.realization == "permutation"
    assert len(G.generator_indices) == 2


def test_known_orders_from_generators():
    assert named_group("A4").order == 12
    assert named_group("A5").order == 60
    assert named_group("S4").order == 24
    assert named_group("PSL(2,7)").order == 168


def test_identity_is_index_zero():
    G = group_from_generators(S3_GENS)
    for i in range(G.order):
        assert G.mult(0, i) == i == G.mult(i, 0)


def test_empty_generators():
    G = group_from_generators([], degree=4, name="trivial")
    assert G.order == 1
    with pytest.raises(EmptyGeneratorList):
        group_from_generators([])


def test_closure_cap():
    with pytest.raises(ClosureCapExceeded):
        group_from_generators(
            [perm_from_cycles(5, [(0, 1, 2, 3, 4)]), perm_from_cycles(5, [(0, 1, 2)])],
            caps=Caps(closure=10),
        )


def test_group_from_table_cyclic():
    G = group_from_table(cyclic_table(6), name="C6")
    assert G.order == 6
    assert G.is_abelian
    assert G.element_order(1) == 6


def test_table_validation_no_identity():
    # shift every row so no two-sided identity sits at index 0
    t = [[(i + j + 1) % 3 for j in range(3)] for i in range(3)]
    with pytest.raises(NoIdentity):
        group_from_table(t)


def test_table_validation_no_inverse():
    # row-wise latin property broken: element 1 never yields 0
    t = [
        [0, 1, 2],
        [1, 1, 1],
        [2, 1, 0],
    ]
    with pytest.raises((NoInverse, NotAssociative)):
        group_from_table(t)


def test_table_validation_not_associative():
    # identity and inverses fine, associativity broken (order-5 loop)
    t = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative):
        group_from_table(t)


def test_table_validation_malformed():
    with pytest.raises(Exception):
        group_from_table([[0, 1], [1]])


# ---------------------------------------------------------------------------
# element arithmetic

def test_power_and_element_order():
    G = group_from_table(cyclic_table(12))
    assert G.power(1, 5) == 5
    assert G.power(1, -1) == 11
    assert G.power(1, 0) == 0
    for i in range(12):
        o = G.element_order(i)
        assert G.power(i, o) == 0
        assert 12 % o == 0  # Lagrange


def test_exponent():
    assert group_from_table(cyclic_table(12)).exponent == 12
    assert named_group("S3").exponent == 6
    assert named_group("Q8").exponent == 4
    assert named_group("A5").exponent == 30


def test_center():
    assert len(named_group("S3").center) == 1
    assert len(named_group("Q8").center) == 2
    assert len(named_group("D12").center) == 2
    C6 = group_from_table(cyclic_table(6))
    assert len(C6.center) == 6


# ---------------------------------------------------------------------------
# conjugacy classes (against the oracle's brute partition)

@pytest.mark.parametrize(
    "name", ["S3", "A4", "D8", "Q8", "S4", "SL(2,3)", "F21", "D12"]
)
def test_conjugacy_classes_match_brute_force(name):
    G = named_group(name)
    part = conjugacy_classes(G)
    brute = oracle.brute_classes(G)
    assert part.count == len(brute)
    assert sum(part.sizes) == G.order
    ours = sorted(sorted(c) for c in part.members)
    theirs = sorted(sorted(c) for c in brute)
    assert ours == theirs
    for c in brute:
        assert len({part.class_of[x] for x in c}) == 1


# ---------------------------------------------------------------------------
# subgroups

def test_subgroup_validation():
    G = named_group("S3")
    rot = subgroup_closure(G, [G.generator_indices[0]])
    H = Subgroup(G, rot)
    assert H.order == 3
    assert H.is_normal()
    with pytest.raises(NotSubgroup):
        Subgroup(G, [0, G.generator_indices[1], G.generator_indices[0]])


def test_derived_subgroup_matches_oracle():
    for name in ("S3", "S4", "A4", "Q8", "D12", "SL(2,3)", "F21"):
        G = named_group(name)
        D = derived_subgroup(G)
        brute = oracle.derived_members(G, range(G.order))
        assert sorted(D.members) == sorted(brute), name


def test_derived_series_terminates():
    series = derived_series(named_group("S4"))
    assert [s.order for s in series] == [24, 12, 4, 1]
    series = derived_series(named_group("A5"))  # perfect: stabilizes at once
    assert [s.order for s in series] == [60]


def test_normal_subgroups_complete():
    # compare against brute-force enumeration of normal subgroups
    for name in ("S3", "D8", "Q8", "A4", "D12"):
        G = named_group(name)
        ours = sorted(sorted(N.members) for N in normal_subgroups(G))
        brute = []
        for members in oracle.all_subgroups(G):
            mset = set(members)
            if all(
                G.mult(G.mult(g, x), G.inv(g)) in mset
                for g in range(G.order)
                for x in members
            ):
                brute.append(sorted(members))
        assert ours == sorted(brute), name


def test_intermediate_subgroups_between_derived_and_group():
    G = named_group("D8")
    D = derived_subgroup(G)
    mid = intermediate_subgroups(G, D)
    # G/G' = C2 x C2 has 5 subgroups
    assert len(mid) == 5
    orders = sorted(H.order for H in mid)
    assert orders == [2, 4, 4, 4, 8]
    for H in mid:
        assert H.is_normal()


def test_quotient_group():
    G = named_group("S4")
    N = derived_subgroup(G)  # A4
    Q, proj = quotient_group(G, N)
    assert Q.order == 2
    for a in range(G.order):
        for b in range(0, G.order, 5):
            assert proj[G.mult(a, b)] == Q.mult(proj[a], proj[b])
    with pytest.raises(NotNormal):
        # an order-2 non-normal subgroup of S3
        H = Subgroup(named_group("S3"), [0, named_group("S3").generator_indices[1]])
        quotient_group(named_group("S3"), H)


def test_quotient_heisenberg_center():
    G = named_group("Heis3")
    Z = Subgroup(G, G.center)
    Q, _ = quotient_group(G, Z)
    assert Q.order == 9
    assert Q.is_abelian


def test_direct_product():
    A = named_group("S3")
    B = group_from_table(cyclic_table(5))
    P = direct_product(A, B)
    assert P.order == 30
    assert not P.is_abelian
    assert P.exponent == 30


def test_fitting_data():
    fd = fitting_data(named_group("S3"))
    assert fd.is_solvable and fd.height == 2
    assert fd.fitting.order == 3
    fd = fitting_data(named_group("S4"))
    assert fd.is_solvable and fd.height == 3
    assert fd.fitting.order == 4
    fd = fitting_data(named_group("A5"))
    assert not fd.is_solvable
    fd = fitting_data(named_group("Heis3"))
    assert fd.is_solvable and fd.height == 1


# ---------------------------------------------------------------------------
# properties over random cyclic relabelings

@given(st.integers(min_value=1, max_value=10), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_relabelled_cyclic_tables_validate(n, rnd):
    # permute the non-identity labels of a cyclic Cayley table; the result is
    # still a group table and must validate, with unchanged element orders
    perm = list(range(1, n))
    rnd.shuffle(perm)
    relabel = [0] + perm
    inverse = [0] * n
    for i, v in enumerate(relabel):
        inverse[v] = i
    t = [
        [relabel[(inverse[i] + inverse[j]) % n] for j in range(n)]
        for i in range(n)
    ]
    G = group_from_table(t)
    assert G.order == n
    assert sorted(G.element_order(i) for i in range(n)) == sorted(
        n // __import__("math").gcd(n, k) if k else 1 for k in range(n)
    )
