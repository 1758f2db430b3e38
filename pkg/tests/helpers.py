"""Shared test utilities: corpus loading, cached tables, exact engine gate,
and the comparison against the independent brute-force oracle."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from charzero.caps import Caps
from charzero.chartab import CharacterTable, character_table
from charzero.cyclotomic import Cyclotomic
from charzero.groupio import load_group_file
from charzero.groups import FiniteGroup

import oracle

REPO_ROOT = Path(__file__).resolve().parent.parent
CORPUS_DIR = REPO_ROOT / "corpus"


@lru_cache(maxsize=1)
def corpus_paths() -> tuple[Path, ...]:
    paths = tuple(sorted(CORPUS_DIR.glob("*.json")))
    assert paths, f"frozen corpus missing at {CORPUS_DIR}"
    return paths


_GROUPS: dict[Path, FiniteGroup] = {}
_TABLES: dict[int, CharacterTable] = {}


def corpus_group(path: Path) -> FiniteGroup:
    G = _GROUPS.get(path)
    if G is None:
        G = load_group_file(path, caps=Caps())
        _GROUPS[path] = G
    return G


def corpus_groups(max_order: int | None = None) -> list[FiniteGroup]:
    out = []
    for path in corpus_paths():
        G = corpus_group(path)
        if max_order is None or G.order <= max_order:
            out.append(G)
    return out


def table_for(G: FiniteGroup) -> CharacterTable:
    """Session-level table cache keyed by object identity (corpus groups and
    named groups are constructed once per session through this module)."""
    t = _TABLES.get(id(G))
    if t is None:
        t = character_table(G, caps=Caps())
        _TABLES[id(G)] = t
    return t


# ---------------------------------------------------------------------------
# exact engine gate (recomputed here, independent of chartab's own checks)

def check_table_gate(G: FiniteGroup, table: CharacterTable) -> None:
    """Row/column orthogonality, degree identity, conjugate- and
    Galois-closure, all in exact cyclotomic arithmetic."""
    k = table.k
    n = G.order
    assert k == len(table.class_sizes)
    assert sum(table.class_sizes) == n

    chars = table.characters
    assert sum(int(chi.degree) ** 2 for chi in chars) == n

    values = [[chi.value(j) for j in range(k)] for chi in chars]

    # first orthogonality, exact
    for a in range(k):
        for b in range(a + 1):
            acc = Cyclotomic.zero(table.conductor)
            for j in range(k):
                acc = acc + values[a][j] * values[b][j].conjugate() * table.class_sizes[j]
            want = n if a == b else 0
            assert acc == Cyclotomic.rational(want, table.conductor), (
                f"{G.name}: row orthogonality fails at ({a},{b})"
            )

    # second orthogonality, exact
    inverse_class = table.inverse_class
    for i in range(k):
        for j in range(k):
            acc = Cyclotomic.zero(table.conductor)
            for a in range(k):
                acc = acc + values[a][i] * values[a][inverse_class[j]]
            want = n // table.class_sizes[i] if i == j else 0
            assert acc == Cyclotomic.rational(want, table.conductor), (
                f"{G.name}: column orthogonality fails at ({i},{j})"
            )

    # conjugate closure: complex conjugation permutes the rows
    row_keys = {tuple(v.coeffs for v in row) for row in values}
    for row in values:
        conj_key = tuple(v.conjugate().coeffs for v in row)
        assert conj_key in row_keys, f"{G.name}: conjugate closure fails"

    # Galois closure: sigma_t (zeta -> zeta^t) permutes the rows
    e = table.conductor
    from math import gcd

    for t in range(2, e):
        if gcd(t, e) != 1:
            continue
        for row in values:
            im_key = tuple(v.galois(t).coeffs for v in row)
            assert im_key in row_keys, (
                f"{G.name}: Galois closure fails at sigma_{t}"
            )


# ---------------------------------------------------------------------------
# oracle comparison

def _package_row_key(table: CharacterTable, chi, class_reps: list[int]):
    """Row of chi over the oracle's class order, as reduced coefficient
    tuples over the power basis of Q(zeta_e), e = group exponent."""
    part = table.partition
    key = []
    for rep in class_reps:
        v = chi.value(part.class_of[rep])
        key.append(tuple(v.coeffs))
    return tuple(key)


def _oracle_row_key(row, e: int):
    return tuple(
        tuple(oracle.reduce_mod_cyclo(v.vec, e)) for v in row
    )


def oracle_match(G: FiniteGroup, table: CharacterTable) -> None:
    """Exact equality of the table with the independently computed one:
    same class partition, same multiset of character rows."""
    ot = oracle.OracleTable(G)
    e = table.conductor
    assert e == ot.e, f"{G.name}: conductor {e} != oracle exponent {ot.e}"
    # identical class partitions (same index space)
    part = table.partition
    assert sorted(map(len, ot.classes)) == sorted(table.class_sizes)
    for c in ot.classes:
        ids = {part.class_of[x] for x in c}
        assert len(ids) == 1, f"{G.name}: class partition mismatch"
    class_reps = [c[0] for c in ot.classes]

    pkg = sorted(_package_row_key(table, chi, class_reps) for chi in table.characters)
    orc = sorted(_oracle_row_key(row, e) for row in ot.rows)
    assert pkg == orc, f"{G.name}: character rows differ from oracle"
