"""Finite groups on integer element indices.

Elements are indices 0..n-1, index 0 the identity. Three realizations:

* ``permutation`` -- elements are image tuples, built by breadth-first closure
  from generators (level by level, ties broken by lexicographic image sequence,
  so element numbering is deterministic).
* ``table`` -- an explicit, validated Cayley table.
* ``coset-quotient`` -- a table built on cosets by quotient_group.

Multiplication is stored as a full table when the order is at most
TABLE_EAGER; larger permutation groups compose images on demand through an
index dictionary, which keeps family sweeps linear in the work actually done
instead of quadratic in the order.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence

from .caps import ASSOC_EXHAUSTIVE_LIMIT, ASSOC_SAMPLES, Caps
from .errors import (
    CapExceeded,
    ClosureCapExceeded,
    EmptyGeneratorList,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotNormal,
    NotSubgroup,
    ParseError,
    QuotientNotAbelian,
)
from .numtheory import factorization

TABLE_EAGER = 512


# ---------------------------------------------------------------------------
# permutation helpers

def identity_perm(degree: int) -> tuple[int, ...]:
    return tuple(range(degree))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """p after q: (p*q)(i) = p(q(i))."""
    return tuple(p[i] for i in q)


def inverse_perm(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, img in enumerate(p):
        out[img] = i
    return tuple(out)


def perm_from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> tuple[int, ...]:
    """Build an image tuple from disjoint cycles, e.g. [(0,1,2)] on degree 4."""
    out = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
            out[a] = b
    return tuple(out)


def _is_perm(seq: Sequence[int], degree: int) -> bool:
    return len(seq) == degree and sorted(seq) == list(range(degree))


# ---------------------------------------------------------------------------
# core type

@dataclass(frozen=True)
class ClassPartition:
    """Conjugacy classes ordered by (size, smallest member); class 0 = {identity}."""

    members: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.members)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.members)

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.members)


class FiniteGroup:
    """A finite group on indices 0..order-1 with index 0 the identity."""

    def __init__(
        self,
        *,
        name: str,
        realization: str,
        elements: Optional[list[tuple[int, ...]]] = None,
        table: Optional[list[list[int]]] = None,
        generator_indices: Optional[tuple[int, ...]] = None,
    ):
        self.name = name
        self.realization = realization
        self._elements = elements
        self._index = {e: i for i, e in enumerate(elements)} if elements else None
        self._table = table
        if table is None and elements is not None and len(elements) <= TABLE_EAGER:
            self._table = _table_from_elements(elements, self._index)
        self._gen_idx = generator_indices
        self._inv: Optional[list[int]] = None
        self._orders: Optional[list[int]] = None
        self._classes: Optional[ClassPartition] = None
        self._center: Optional[tuple[int, ...]] = None
        self._derived: Optional[tuple[int, ...]] = None

    # -- basics ------------------------------------------------------------

    @property
    def order(self) -> int:
        if self._table is not None:
            return len(self._table)
        return len(self._elements)

    @property
    def degree(self) -> Optional[int]:
        return len(self._elements[0]) if self._elements else None

    def element(self, i: int) -> tuple[int, ...]:
        if self._elements is None:
            raise ValueError("no point representation for a table-realized group")
        return self._elements[i]

    def mult(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        return self._index[compose(self._elements[i], self._elements[j])]

    def inv(self, i: int) -> int:
        if self._inv is None:
            self._inv = self._build_inverses()
        return self._inv[i]

    def _build_inverses(self) -> list[int]:
        n = self.order
        if self._elements is not None and self._table is None:
            return [self._index[inverse_perm(e)] for e in self._elements]
        inv = [-1] * n
        for i in range(n):
            if inv[i] >= 0:
                continue
            row = self._table[i]
            for j in range(n):
                if row[j] == 0:
                    inv[i] = j
                    inv[j] = i
                    break
            if inv[i] < 0:
                raise NoInverse(i)
        return inv

    def power(self, i: int, n: int) -> int:
        if n < 0:
            return self.power(self.inv(i), -n)
        out, base = 0, i
        while n:
            if n & 1:
                out = self.mult(out, base)
            base = self.mult(base, base)
            n >>= 1
        return out

    def element_order(self, i: int) -> int:
        if self._orders is None:
            self._orders = [0] * self.order
            self._orders[0] = 1
        if self._orders[i] == 0:
            k, y = 1, i
            while y != 0:
                y = self.mult(y, i)
                k += 1
            self._orders[i] = k
        return self._orders[i]

    @property
    def exponent(self) -> int:
        e = 1
        for i in range(self.order):
            o = self.element_order(i)
            e = e * o // gcd(e, o)
        return e

    @property
    def generator_indices(self) -> tuple[int, ...]:
        if self._gen_idx is None:
            self._gen_idx = greedy_generators(self)
        return self._gen_idx

    def conjugate(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.mult(self.mult(g, x), self.inv(g))

    def commutator(self, a: int, b: int) -> int:
        """a^-1 b^-1 a b."""
        return self.mult(self.mult(self.inv(a), self.inv(b)), self.mult(a, b))

    @property
    def center(self) -> tuple[int, ...]:
        if self._center is None:
            gens = self.generator_indices
            self._center = tuple(
                z for z in range(self.order)
                if all(self.mult(z, g) == self.mult(g, z) for g in gens)
            )
        return self._center

    @property
    def is_abelian(self) -> bool:
        gens = self.generator_indices
        return all(
            self.mult(a, b) == self.mult(b, a) for a in gens for b in gens
        )

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order}, {self.realization})"


def _table_from_elements(elements, index) -> list[list[int]]:
    return [[index[compose(a, b)] for b in elements] for a in elements]


# ---------------------------------------------------------------------------
# constructors

def group_from_generators(
    generators: Sequence[Sequence[int]],
    *,
    degree: Optional[int] = None,
    name: Optional[str] = None,
    caps: Optional[Caps] = None,
) -> FiniteGroup:
    """Breadth-first closure of permutation generators.

    Levels are explored in order; within a level new elements are sorted by
    image sequence, so the element numbering depends only on the generator
    list. Raises ClosureCapExceeded beyond caps.closure.
    """
    caps = caps or Caps()
    gens = [tuple(g) for g in generators]
    if not gens:
        if degree is None:
            raise EmptyGeneratorList("no generators and no degree given")
        return FiniteGroup(
            name=name or "trivial",
            realization="permutation",
            elements=[identity_perm(degree)],
            generator_indices=(),
        )
    deg = len(gens[0])
    for g in gens:
        if not _is_perm(g, deg):
            raise ValueError(f"not a permutation of range({deg}): {g}")
    ident = identity_perm(deg)
    elements = [ident]
    seen = {ident}
    level = [ident]
    while level:
        nxt = set()
        for x in level:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    nxt.add(y)
        level = sorted(nxt)
        seen.update(level)
        elements.extend(level)
        if len(elements) > caps.closure:
            raise ClosureCapExceeded(caps.closure, len(elements))
    index = {e: i for i, e in enumerate(elements)}
    return FiniteGroup(
        name=name or f"gen-group-{len(elements)}",
        realization="permutation",
        elements=elements,
        generator_indices=tuple(index[g] for g in gens),
    )


def group_from_table(
    table: Sequence[Sequence[int]],
    *,
    name: Optional[str] = None,
    validate: bool = True,
) -> FiniteGroup:
    """Wrap a Cayley table, validating the group axioms.

    Index 0 must be a two-sided identity; every row and column must be a
    permutation; every element needs an inverse. Associativity is checked on
    all triples up to order 200 and on 10^5 seeded random triples above that.
    """
    t = [list(row) for row in table]
    n = len(t)
    if validate:
        _validate_table(t, n)
    return FiniteGroup(name=name or f"table-group-{n}", realization="table", table=t)


def _validate_table(t: list[list[int]], n: int) -> None:
    if n == 0:
        raise NoIdentity("empty table")
    full = list(range(n))
    for i, row in enumerate(t):
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise ParseError(f"table row {i}", f"not a sequence over range({n})")
    if t[0] != full or [t[i][0] for i in range(n)] != full:
        raise NoIdentity("index 0 is not a two-sided identity")
    for i in range(n):
        if sorted(t[i]) != full or sorted(t[j][i] for j in range(n)) != full:
            raise NoInverse(i)
    if n <= ASSOC_EXHAUSTIVE_LIMIT:
        triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
    else:
        rng = random.Random(0xC0FFEE)
        triples = (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            for _ in range(ASSOC_SAMPLES)
        )
    for a, b, c in triples:
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise NotAssociative((a, b, c))


# ---------------------------------------------------------------------------
# generators, closures

def greedy_generators(G: FiniteGroup) -> tuple[int, ...]:
    """A small generating set: scan elements ascending, keep those that enlarge
    the closure. Deterministic; at most log2(order) generators."""
    gens: list[int] = []
    closed = {0}
    for x in range(1, G.order):
        if x in closed:
            continue
        gens.append(x)
        closed = set(subgroup_closure(G, gens))
        if len(closed) == G.order:
            break
    return tuple(gens)


def subgroup_closure(G: FiniteGroup, seed: Iterable[int]) -> tuple[int, ...]:
    """Members of the subgroup generated by seed, sorted ascending."""
    seed = list(seed)
    closed = {0}
    frontier = [0]
    for s in seed:
        if s not in closed:
            closed.add(s)
            frontier.append(s)
    # right-multiplying by seeds reaches every word in them, and inverses come
    # for free since each element has finite order
    while frontier:
        x = frontier.pop()
        for s in seed:
            y = G.mult(x, s)
            if y not in closed:
                closed.add(y)
                frontier.append(y)
    return tuple(sorted(closed))


def normal_closure(G: FiniteGroup, seed: Iterable[int]) -> tuple[int, ...]:
    """Smallest normal subgroup of G containing seed."""
    gens = list(G.generator_indices)
    current = list(dict.fromkeys(seed))
    while True:
        members = subgroup_closure(G, current)
        member_set = set(members)
        extra = []
        for g in gens:
            for h in members:
                c = G.conjugate(g, h)
                if c not in member_set:
                    extra.append(c)
        if not extra:
            return members
        current = list(members) + extra


# ---------------------------------------------------------------------------
# subgroups

class Subgroup:
    """A subgroup as a sorted member tuple plus a re-indexed group view."""

    def __init__(self, parent: FiniteGroup, members: Iterable[int], *, validate: bool = True):
        self.parent = parent
        self.members = tuple(sorted(set(members)))
        if not self.members or self.members[0] != 0:
            raise NotSubgroup((0, 0))
        self._pos = {m: i for i, m in enumerate(self.members)}
        if validate:
            for a in self.members:
                if parent.inv(a) not in self._pos:
                    raise NotSubgroup((a, parent.inv(a)))
                for b in self.members:
                    if parent.mult(a, b) not in self._pos:
                        raise NotSubgroup((a, b))
        self._as_group: Optional[FiniteGroup] = None

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index_in_parent(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, parent_index: int) -> bool:
        return parent_index in self._pos

    def position(self, parent_index: int) -> int:
        """Sub-index of a parent element (the identity maps to 0)."""
        return self._pos[parent_index]

    def parent_index(self, position: int) -> int:
        return self.members[position]

    @property
    def as_group(self) -> FiniteGroup:
        if self._as_group is None:
            mem, pos, par = self.members, self._pos, self.parent
            table = [[pos[par.mult(a, b)] for b in mem] for a in mem]
            self._as_group = FiniteGroup(
                name=f"{par.name}|sub{self.order}",
                realization="table",
                table=table,
            )
        return self._as_group

    def is_normal(self) -> bool:
        for g in self.parent.generator_indices:
            for h in self.members:
                if self.parent.conjugate(g, h) not in self._pos:
                    return False
        return True

    def contains(self, other: "Subgroup") -> bool:
        return set(other.members) <= set(self.members)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.parent is other.parent and self.members == other.members

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name})"


# ---------------------------------------------------------------------------
# conjugacy classes

def conjugacy_classes(G: FiniteGroup) -> ClassPartition:
    """Orbit BFS under conjugation by generators; cached on the group."""
    if G._classes is not None:
        return G._classes
    n = G.order
    gens = G.generator_indices
    gen_inv = [G.inv(g) for g in gens]
    class_of = [-1] * n
    raw: list[list[int]] = []
    for s in range(n):
        if class_of[s] >= 0:
            continue
        orbit = {s}
        queue = [s]
        while queue:
            x = queue.pop()
            for g, gi in zip(gens, gen_inv):
                y = G.mult(G.mult(g, x), gi)
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        idx = len(raw)
        mem = sorted(orbit)
        raw.append(mem)
        for x in mem:
            class_of[x] = idx
    order = sorted(range(len(raw)), key=lambda c: (len(raw[c]), raw[c][0]))
    members = tuple(tuple(raw[c]) for c in order)
    class_of = [-1] * n
    for ci, mem in enumerate(members):
        for x in mem:
            class_of[x] = ci
    part = ClassPartition(members=members, class_of=tuple(class_of))
    G._classes = part
    return part


# ---------------------------------------------------------------------------
# derived series, nilpotency, profile

def _derived_members(G: FiniteGroup, members: Sequence[int]) -> tuple[int, ...]:
    """Derived subgroup of the subgroup on `members`, in parent indices."""
    sub = set(members)
    gens = [m for m in _small_gens_within(G, members)]
    comms = {G.commutator(a, b) for a in gens for b in gens}
    comms.discard(0)
    if not comms:
        return (0,)
    # normal closure within the subgroup
    current = sorted(comms)
    while True:
        closed = subgroup_closure(G, current)
        closed_set = set(closed)
        extra = []
        for g in gens:
            for h in closed:
                c = G.conjugate(g, h)
                if c not in closed_set:
                    extra.append(c)
        if not extra:
            assert closed_set <= sub
            return closed
        current = list(closed) + extra


def _small_gens_within(G: FiniteGroup, members: Sequence[int]) -> list[int]:
    if len(members) == G.order:
        return list(G.generator_indices)
    gens: list[int] = []
    closed = {0}
    for x in members:
        if x in closed:
            continue
        gens.append(x)
        closed = set(subgroup_closure(G, gens))
        if len(closed) == len(members):
            break
    return gens


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    if G._derived is None:
        G._derived = _derived_members(G, range(G.order))
    return Subgroup(G, G._derived, validate=False)


def derived_series(G: FiniteGroup) -> list[Subgroup]:
    """[G, G', G'', ...] down to the perfect core (strictly descending)."""
    series = [Subgroup(G, range(G.order), validate=False)]
    while True:
        nxt = _derived_members(G, series[-1].members)
        if len(nxt) == len(series[-1].members):
            break
        series.append(Subgroup(G, nxt, validate=False))
    return series


def lower_central_series(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Member tuples of G = gamma_1 >= gamma_2 >= ... until stable."""
    series = [tuple(range(G.order))]
    out_gens = list(G.generator_indices)
    cur_gens = out_gens
    while True:
        comms = {G.commutator(a, b) for a in cur_gens for b in out_gens}
        comms.discard(0)
        members = normal_closure(G, sorted(comms)) if comms else (0,)
        if len(members) == len(series[-1]):
            break
        series.append(members)
        cur_gens = _small_gens_within(G, members)
        if members == (0,):
            break
    return series


def _is_nilpotent(G: FiniteGroup) -> bool:
    # nilpotent iff every Sylow subgroup is normal, iff for each prime p the
    # elements of p-power order number exactly p^(v_p of the order)
    n = G.order
    for p, a in factorization(n):
        target = p**a
        cnt = 1 + sum(
            1 for x in range(1, n) if _is_power_of(G.element_order(x), p)
        )
        if cnt != target:
            return False
    return True


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


@dataclass(frozen=True)
class StructureProfile:
    order: int
    is_abelian: bool
    is_nilpotent: bool
    nilpotency_class: Optional[int]
    is_solvable: bool
    derived_length: Optional[int]
    is_metabelian: bool
    exponent: int
    center_order: int
    derived_order: int


def structure_profile(G: FiniteGroup) -> StructureProfile:
    abelian = G.is_abelian
    nilpotent = True if abelian else _is_nilpotent(G)
    nclass: Optional[int] = None
    if nilpotent:
        lcs = lower_central_series(G)
        nclass = len(lcs) - 1 if G.order > 1 else 0
    series = derived_series(G)
    solvable = series[-1].order == 1
    dlength = len(series) - 1 if solvable else None
    if G.order == 1:
        dlength = 0
    return StructureProfile(
        order=G.order,
        is_abelian=abelian,
        is_nilpotent=nilpotent,
        nilpotency_class=nclass,
        is_solvable=solvable,
        derived_length=dlength,
        is_metabelian=solvable and (dlength is not None and dlength <= 2),
        exponent=G.exponent,
        center_order=len(G.center),
        derived_order=series[1].order if len(series) > 1 else 1,
    )


# ---------------------------------------------------------------------------
# products and quotients

def direct_product(A: FiniteGroup, B: FiniteGroup, *, name: Optional[str] = None) -> FiniteGroup:
    """A x B as a table group; element (a, b) has index a*|B| + b."""
    na, nb = A.order, B.order
    rows_a = [[A.mult(i, j) for j in range(na)] for i in range(na)]
    rows_b = [[B.mult(i, j) for j in range(nb)] for i in range(nb)]
    table = [
        [rows_a[ea // nb][eb // nb] * nb + rows_b[ea % nb][eb % nb] for eb in range(na * nb)]
        for ea in range(na * nb)
    ]
    return group_from_table(
        table, name=name or f"({A.name} x {B.name})", validate=False
    )


def quotient_group(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, tuple[int, ...]]:
    """(G/N as a coset-quotient group, projection element -> coset index).

    N must be normal; the identity coset gets index 0 and coset representatives
    are the smallest member indices, so the numbering is canonical.
    """
    for g in G.generator_indices:
        for h in N.members:
            if G.conjugate(g, h) not in N:
                raise NotNormal(g, h)
    n = G.order
    proj = [-1] * n
    reps: list[int] = []
    for x in range(n):
        if proj[x] >= 0:
            continue
        ci = len(reps)
        reps.append(x)
        for h in N.members:
            proj[G.mult(x, h)] = ci
    k = len(reps)
    table = [[proj[G.mult(a, b)] for b in reps] for a in reps]
    Q = FiniteGroup(
        name=f"{G.name}/N{N.order}",
        realization="coset-quotient",
        table=table,
    )
    return Q, tuple(proj)


# ---------------------------------------------------------------------------
# normal subgroups, intermediate subgroups, Fitting

def normal_subgroups(G: FiniteGroup, *, caps: Optional[Caps] = None) -> list[Subgroup]:
    """All normal subgroups: join-closure of the normal closures of single
    conjugacy classes. Sorted by (order, member tuple)."""
    caps = caps or Caps()
    if G.order > caps.order:
        raise CapExceeded("normal_subgroups", caps.order, G.order)
    part = conjugacy_classes(G)
    atoms: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for mem in part.members:
        closed = subgroup_closure(G, mem)
        if closed not in seen:
            seen.add(closed)
            atoms.append(closed)
    all_sets: set[tuple[int, ...]] = {(0,)} | set(atoms)
    queue = list(atoms)
    while queue:
        a = queue.pop()
        for b in sorted(all_sets):
            if set(b) <= set(a) or set(a) <= set(b):
                continue
            join = subgroup_closure(G, set(a) | set(b))
            if join not in all_sets:
                all_sets.add(join)
                queue.append(join)
    out = [Subgroup(G, mem, validate=False) for mem in sorted(all_sets, key=lambda m: (len(m), m))]
    return out


def intermediate_subgroups(G: FiniteGroup, bottom: Subgroup, *, lattice_cap: int = 100_000) -> list[Subgroup]:
    """All U with bottom <= U <= G, for bottom containing the derived subgroup.

    Works through the abelian quotient Q = G/bottom: every subgroup of Q pulls
    back to an intermediate subgroup (all of them normal in G). Sorted by
    (order, member tuple).
    """
    dmem = derived_subgroup(G).members
    if not set(dmem) <= set(bottom.members):
        raise QuotientNotAbelian(
            f"bottom (order {bottom.order}) does not contain the derived subgroup"
        )
    Q, proj = quotient_group(G, bottom)
    subs = _all_subgroups(Q, lattice_cap)
    out = []
    for smem in subs:
        sset = set(smem)
        members = [x for x in range(G.order) if proj[x] in sset]
        out.append(Subgroup(G, members, validate=False))
    out.sort(key=lambda s: (s.order, s.members))
    return out


def _all_subgroups(Q: FiniteGroup, lattice_cap: int) -> list[tuple[int, ...]]:
    """Every subgroup of Q by incremental closure (fine for small Q)."""
    found: set[tuple[int, ...]] = {(0,)}
    queue: list[tuple[int, ...]] = [(0,)]
    while queue:
        base = queue.pop()
        base_set = set(base)
        for g in range(1, Q.order):
            if g in base_set:
                continue
            bigger = subgroup_closure(Q, list(base) + [g])
            if bigger not in found:
                found.add(bigger)
                queue.append(bigger)
                if len(found) > lattice_cap:
                    raise CapExceeded("subgroup lattice", lattice_cap, len(found))
    return sorted(found, key=lambda m: (len(m), m))


@dataclass(frozen=True)
class FittingData:
    fitting: Subgroup
    height: Optional[int]     # None when not solvable
    is_solvable: bool


def fitting_data(G: FiniteGroup, *, caps: Optional[Caps] = None) -> FittingData:
    """Fitting subgroup (largest nilpotent normal subgroup) and Fitting height."""
    caps = caps or Caps()
    fit = _fitting_members(G, caps)
    solvable = derived_series(G)[-1].order == 1
    height: Optional[int] = None
    if solvable:
        height = 0
        cur = G
        while cur.order > 1:
            fm = _fitting_members(cur, caps)
            cur, _ = quotient_group(cur, Subgroup(cur, fm, validate=False))
            height += 1
    return FittingData(fitting=Subgroup(G, fit, validate=False), height=height, is_solvable=solvable)


def _fitting_members(G: FiniteGroup, caps: Caps) -> tuple[int, ...]:
    best: tuple[int, ...] = (0,)
    nilpotents: list[tuple[int, ...]] = []
    for N in normal_subgroups(G, caps=caps):
        if _is_nilpotent(N.as_group):
            nilpotents.append(N.members)
            if len(N.members) > len(best):
                best = N.members
    best_set = set(best)
    for mem in nilpotents:
        assert set(mem) <= best_set, "Fitting subgroup must contain every nilpotent normal subgroup"
    return best
