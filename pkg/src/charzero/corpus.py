"""Corpus assembly: every group of order <= 31, plus the nonabelian groups
of odd order <= 75.

Groups are built from standard presentations -- abelian invariant factors,
dihedral, dicyclic, generalized dihedral, split metacyclic C_m x| C_k,
direct products with smaller corpus members, and a handful of named
constructions (A4, S4, SL(2,3), the Heisenberg group of order 27, the
central product D8 * C4, C2^2 x| C4, C3 x| D8). Candidates are
deduplicated by fingerprint and the per-order counts are validated against
the standard small-groups census, so the frozen files are complete and
pairwise non-isomorphic.
"""
from __future__ import annotations

from math import gcd
from pathlib import Path
from typing import Optional, Union

from .caps import Caps
from .chartab import character_table
from .classify import fingerprint
from .errors import CharzeroError
from .families import (
    _cyclic,
    _dihedral,
    _metacyclic,
    generalized_dihedral,
    named_group,
    singer_frobenius,
)
from .groups import FiniteGroup, direct_product, group_from_table
from .groupio import write_group_file
from .numtheory import divisors, factorization

# Number of groups of each order 1..31 (standard small-groups census).
EXPECTED_COUNTS = (
    1, 1, 1, 2, 1, 2, 1, 5, 2, 2,
    1, 5, 1, 2, 1, 14, 1, 5, 1, 5,
    2, 2, 1, 15, 2, 2, 5, 4, 1, 4,
    1,
)

# Nonabelian groups of odd order 33..75 (orders not listed have none).
EXPECTED_ODD_NONABELIAN = {39: 1, 55: 1, 57: 1, 63: 2, 75: 1}

ODD_CORPUS_LIMIT = 75


# ---------------------------------------------------------------------------
# constructors

def _partitions(e: int) -> list[tuple[int, ...]]:
    """All partitions of e as descending tuples, deterministic order."""
    if e == 0:
        return [()]
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, largest: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(remaining, largest), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(e, e, ())
    return out


def abelian_invariant_lists(n: int) -> list[tuple[int, ...]]:
    """Invariant-factor decompositions (d_1 | d_2 | ... | d_r, ascending) of
    every abelian group of order n, one per isomorphism class."""
    if n == 1:
        return [()]
    fac = factorization(n)
    per_prime = [(_p, _partitions(e)) for _p, e in fac]

    def combine(idx: int, chosen: list[tuple[int, ...]]) -> list[list[tuple[int, ...]]]:
        if idx == len(per_prime):
            return [list(chosen)]
        acc = []
        for part in per_prime[idx][1]:
            acc.extend(combine(idx + 1, chosen + [part]))
        return acc

    results = []
    for chosen in combine(0, []):
        length = max(len(part) for part in chosen)
        invariants = []
        for i in range(length):
            d = 1
            for (p, _e), part in zip(per_prime, chosen):
                padded = part + (0,) * (length - len(part))
                d *= p ** padded[i]
            invariants.append(d)
        invariants = [d for d in sorted(invariants) if d > 1]
        results.append(tuple(invariants))
    return sorted(set(results))


def abelian_group(invariants: tuple[int, ...]) -> FiniteGroup:
    """Direct product of cyclic groups, named by the invariant factors."""
    if not invariants:
        return _cyclic(1)
    G = _cyclic(invariants[0])
    for d in invariants[1:]:
        G = direct_product(G, _cyclic(d))
    G.name = "x".join(f"C{d}" for d in invariants)
    return G


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order n (n even, n >= 6)."""
    assert n % 2 == 0 and n >= 6
    return _dihedral(n // 2)


def dicyclic(m: int) -> FiniteGroup:
    """Dicyclic group of order 4m: <a, b | a^(2m) = 1, b^2 = a^m,
    b a b^-1 = a^-1>. Dic2 = Q8."""
    return _metacyclic(2 * m, 2, 2 * m - 1, m, name=f"Dic{m}")


def split_metacyclic(m: int, k: int, t: int) -> FiniteGroup:
    """C_m x| C_k with the generator of C_k acting as x -> x^t."""
    return _metacyclic(m, k, t, 0, name=f"C{m}:C{k}(t={t})")


def c3_semidirect_d8() -> FiniteGroup:
    """C3 x| D8 where the rotation inverts C3 and the reflection fixes it
    (the action of D8 on C3 factors through D8 / <r^2, s> = C2).

    Elements c^i r^j s^e with index i*8 + j*2 + e.
    """
    def mul(x: int, y: int) -> int:
        i, je = divmod(x, 8)
        j, e = divmod(je, 2)
        i2, je2 = divmod(y, 8)
        j2, e2 = divmod(je2, 2)
        i_out = (i + (-1) ** j * i2) % 3
        j_out = (j + (-1) ** e * j2) % 4
        e_out = (e + e2) % 2
        return i_out * 8 + j_out * 2 + e_out

    return group_from_table(
        [[mul(x, y) for y in range(24)] for x in range(24)], name="C3:D8"
    )


def pauli_group() -> FiniteGroup:
    """Central product D8 * C4 of order 16: elements i^a X^b Z^c with
    Z X = - X Z, index a*4 + b*2 + c."""
    def mul(x: int, y: int) -> int:
        a, bc = divmod(x, 4)
        b, c = divmod(bc, 2)
        a2, bc2 = divmod(y, 4)
        b2, c2 = divmod(bc2, 2)
        return ((a + a2 + 2 * c * b2) % 4) * 4 + ((b + b2) % 2) * 2 + (c + c2) % 2

    return group_from_table(
        [[mul(x, y) for y in range(16)] for x in range(16)], name="D8*C4"
    )


def c2c2_semidirect_c4() -> FiniteGroup:
    """(C2 x C2) x| C4 with the generator of C4 swapping the two factors.

    Elements (v, j) with v in C2^2 (bits), j in C4, index v*4 + j.
    """
    def swap(v: int, times: int) -> int:
        if times % 2 == 0:
            return v
        return ((v & 1) << 1) | (v >> 1)

    def mul(x: int, y: int) -> int:
        v, j = divmod(x, 4)
        v2, j2 = divmod(y, 4)
        return (v ^ swap(v2, j)) * 4 + (j + j2) % 4

    return group_from_table(
        [[mul(x, y) for y in range(16)] for x in range(16)], name="C2^2:C4"
    )


# ---------------------------------------------------------------------------
# assembly

def _special_candidates(n: int) -> list[FiniteGroup]:
    if n == 12:
        return [named_group("A4")]
    if n == 16:
        return [pauli_group(), c2c2_semidirect_c4()]
    if n == 24:
        return [named_group("S4"), named_group("SL23"), c3_semidirect_d8()]
    if n == 27:
        return [named_group("Heis3")]
    return []


def _candidates(n: int, pool: dict[int, list[FiniteGroup]]) -> list[FiniteGroup]:
    """Every corpus candidate of order n, nice names first so deduplication
    keeps the most recognizable construction."""
    out: list[FiniteGroup] = [abelian_group(inv) for inv in abelian_invariant_lists(n)]
    out.extend(_special_candidates(n))
    if n % 2 == 0 and n >= 6:
        out.append(dihedral(n))
    if n % 4 == 0 and n >= 8:
        out.append(dicyclic(n // 4))
    if n % 2 == 0:
        for inv in abelian_invariant_lists(n // 2):
            if inv and all(d % 2 == 1 for d in inv):
                out.append(generalized_dihedral(inv))
    for d in divisors(n):
        if d >= 6 and d < n:
            for H in pool.get(d, []):
                if H.is_abelian:
                    continue
                for inv in abelian_invariant_lists(n // d):
                    out.append(direct_product(H, abelian_group(inv)))
    for m in divisors(n):
        k = n // m
        if m < 3 or k < 2:
            continue
        for t in range(2, m):
            if gcd(t, m) == 1 and pow(t, k, m) == 1:
                out.append(split_metacyclic(m, k, t))
    return out


def _odd_extras() -> list[FiniteGroup]:
    """The nonabelian groups of odd order 33..75."""
    f21 = named_group("F21")
    return [
        split_metacyclic(13, 3, 3),            # Frobenius of order 39
        split_metacyclic(11, 5, 3),            # Frobenius of order 55
        split_metacyclic(19, 3, 7),            # Frobenius of order 57
        split_metacyclic(7, 9, 2),             # C7 x| C9, order 63
        direct_product(f21, _cyclic(3), name="F21xC3"),
        singer_frobenius(5, 2, 3),             # Frobenius of order 75
    ]


def corpus_groups(*, caps: Optional[Caps] = None) -> list[FiniteGroup]:
    """The full corpus, deduplicated and census-validated.

    Raises AssertionError if any per-order count disagrees with the
    standard census -- that means a candidate construction is wrong or two
    non-isomorphic candidates collided on the fingerprint.
    """
    caps = caps or Caps()
    pool: dict[int, list[FiniteGroup]] = {}
    ordered: list[FiniteGroup] = []
    for n in range(1, 32):
        seen: set[tuple] = set()
        kept: list[FiniteGroup] = []
        for G in _candidates(n, pool):
            assert G.order == n, f"{G.name}: order {G.order} != {n}"
            fp = fingerprint(G, character_table(G, caps=caps))
            if fp in seen:
                continue
            seen.add(fp)
            kept.append(G)
        expected = EXPECTED_COUNTS[n - 1]
        assert len(kept) == expected, (
            f"order {n}: assembled {len(kept)} distinct groups "
            f"({[g.name for g in kept]}), census says {expected}"
        )
        pool[n] = kept
        ordered.extend(kept)

    extras_by_order: dict[int, list[FiniteGroup]] = {}
    for G in _odd_extras():
        assert G.order % 2 == 1 and not G.is_abelian, G.name
        extras_by_order.setdefault(G.order, []).append(G)
    assert {o: len(gs) for o, gs in extras_by_order.items()} == EXPECTED_ODD_NONABELIAN
    for n in sorted(extras_by_order):
        seen_fp = set()
        for G in extras_by_order[n]:
            fp = fingerprint(G, character_table(G, caps=caps))
            assert fp not in seen_fp, f"fingerprint collision at order {n}"
            seen_fp.add(fp)
        ordered.extend(extras_by_order[n])
    return ordered


def _slug(name: str) -> str:
    out = []
    for ch in name.lower():
        if ch.isalnum():
            out.append(ch)
        elif out and out[-1] != "_":
            out.append("_")
    return "".join(out).strip("_")


def corpus_filename(G: FiniteGroup) -> str:
    return f"{G.order:03d}_{_slug(G.name)}.json"


def freeze_corpus(
    dest: Union[str, Path], *, caps: Optional[Caps] = None
) -> list[Path]:
    """Write the corpus as group-definition JSON files under dest."""
    dest_dir = Path(dest)
    dest_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    names: set[str] = set()
    for G in corpus_groups(caps=caps):
        fname = corpus_filename(G)
        assert fname not in names, f"duplicate corpus filename {fname}"
        names.add(fname)
        path = dest_dir / fname
        write_group_file(G, path)
        written.append(path)
    return written
