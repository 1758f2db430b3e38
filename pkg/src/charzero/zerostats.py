"""Zero-counting statistics of character tables, all exact rationals.

For a table with k classes: m(chi) is the number of classes where chi
vanishes; anz is the average of m(chi) over the k characters; sigma_prime =
anz/k is the fraction of zero entries and sigma = 1 - sigma_prime the
fraction of nonzero entries; m_max is the largest m(chi).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .chartab import Character, CharacterTable
from .errors import EmptySubset


@dataclass(frozen=True)
class ZeroStats:
    k: int
    zero_counts: tuple[int, ...]
    anz: Fraction
    sigma: Fraction
    sigma_prime: Fraction
    m_max: int


def zero_count(chi: Character) -> int:
    """m(chi): number of classes with exactly-zero value."""
    return len(chi.zero_classes())


def zero_stats(table: CharacterTable) -> ZeroStats:
    mask = table.zero_mask()
    row_counts = tuple(int(c) for c in mask.sum(axis=1))
    # the row average must equal the column average; count both ways
    col_counts = tuple(int(c) for c in mask.sum(axis=0))
    assert sum(row_counts) == sum(col_counts)
    k = table.k
    total = sum(row_counts)
    a = Fraction(total, k)
    sp = a / k
    return ZeroStats(
        k=k,
        zero_counts=row_counts,
        anz=a,
        sigma=1 - sp,
        sigma_prime=sp,
        m_max=max(row_counts),
    )


def anz(table: CharacterTable) -> Fraction:
    """Average number of zeros per character row."""
    return zero_stats(table).anz


def anz_subset(table: CharacterTable, subset: Iterable[int]) -> Fraction:
    """Average of m(chi) over a nonempty subset of character indices."""
    idx = sorted(set(subset))
    if not idx:
        raise EmptySubset("anz over the empty character set")
    counts = [zero_count(table.characters[a]) for a in idx]
    return Fraction(sum(counts), len(idx))


def sparsity(table: CharacterTable) -> tuple[Fraction, Fraction]:
    """(sigma, sigma_prime): fractions of nonzero and zero entries."""
    s = zero_stats(table)
    return s.sigma, s.sigma_prime


def m_max(table: CharacterTable) -> int:
    """m(G) = max over chi of m(chi)."""
    return zero_stats(table).m_max
