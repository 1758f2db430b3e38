"""The frozen corpus: census counts, distinctness, and reproducibility."""
from __future__ import annotations

import re
from collections import Counter

import pytest

import helpers
from charzero.classify import fingerprint
from charzero.corpus import (
    EXPECTED_COUNTS,
    EXPECTED_ODD_NONABELIAN,
    ODD_CORPUS_LIMIT,
    abelian_invariant_lists,
    corpus_filename,
    corpus_groups,
    freeze_corpus,
)


def test_census_counts_from_files():
    counts = Counter()
    for p in helpers.corpus_paths():
        counts[helpers.corpus_group(p).order] += 1
    for n, expected in enumerate(EXPECTED_COUNTS, start=1):
        assert counts[n] == expected, f"order {n}"
    # the odd tail beyond 31: nonabelian odd groups up to the limit
    for n, expected in EXPECTED_ODD_NONABELIAN.items():
        assert counts[n] == expected, f"order {n}"
    assert ODD_CORPUS_LIMIT == 75
    assert sum(counts.values()) == sum(EXPECTED_COUNTS) + sum(
        EXPECTED_ODD_NONABELIAN.values()
    )
    assert sum(counts.values()) == 99


def test_odd_tail_is_nonabelian_and_odd():
    for p in helpers.corpus_paths():
        G = helpers.corpus_group(p)
        if G.order > 31:
            assert G.order % 2 == 1
            assert G.order <= ODD_CORPUS_LIMIT
            assert not G.is_abelian


def test_filename_convention():
    for p in helpers.corpus_paths():
        assert re.fullmatch(r"\d{3}_[a-z0-9_]+\.json", p.name), p.name
        G = helpers.corpus_group(p)
        assert int(p.name[:3]) == G.order
        assert p.name == corpus_filename(G)


def test_pairwise_distinct_fingerprints():
    seen: dict[tuple, str] = {}
    for p in helpers.corpus_paths():
        G = helpers.corpus_group(p)
        fp = fingerprint(G, helpers.table_for(G))
        assert fp not in seen, f"{p.name} duplicates {seen[fp]}"
        seen[fp] = p.name
    assert len(seen) == 99


def test_corpus_groups_matches_files():
    groups = corpus_groups()
    assert len(groups) == 99
    by_file = [helpers.corpus_group(p) for p in helpers.corpus_paths()]
    assert Counter(G.order for G in groups) == Counter(G.order for G in by_file)
    assert sorted(G.name for G in groups) == sorted(G.name for G in by_file)


def test_freeze_corpus_reproduces_shipped_files(tmp_path):
    written = freeze_corpus(tmp_path)
    assert len(written) == 99
    shipped = {p.name: p for p in helpers.corpus_paths()}
    assert {p.name for p in written} == set(shipped)
    for p in written:
        assert p.read_bytes() == shipped[p.name].read_bytes(), p.name


def test_abelian_invariant_lists():
    # invariant-factor chains d1 | d2 | ... with product n
    assert abelian_invariant_lists(1) == [()]
    assert sorted(abelian_invariant_lists(4)) == [(2, 2), (4,)]
    assert sorted(abelian_invariant_lists(8)) == [(2, 2, 2), (2, 4), (8,)]
    assert sorted(abelian_invariant_lists(12)) == [(2, 6), (12,)]
    assert sorted(abelian_invariant_lists(16)) == [
        (2, 2, 2, 2), (2, 2, 4), (2, 8), (4, 4), (16,)
    ]
    for n in range(1, 32):
        for inv in abelian_invariant_lists(n):
            prod = 1
            for d in inv:
                prod *= d
            assert prod == n
            for a, b in zip(inv, inv[1:]):
                assert b % a == 0


def test_abelian_counts_match_census_for_prime_orders():
    # for prime p the census count is 1 and the only group is cyclic
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        assert EXPECTED_COUNTS[p - 1] == 1
        assert abelian_invariant_lists(p) == [(p,)]
