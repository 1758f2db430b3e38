"""Structural verdicts for the zero-average classification theorems.

This module decides *structurally* whether a nonabelian group belongs to the
six classes of the theorem-A list (Frobenius with complement of order 2 and
odd abelian kernel; Frobenius with cyclic complement of order p^n - 1 on an
elementary abelian kernel of order p^n; the Frobenius group of order 21; D12
or C3:C4; extraspecial 2-groups; S4) or to the theorem-B list (the Frobenius
groups of order 21, 39, 57 and 55), computes the exact average number of
zeros anz(G) independently, and reports whether the two sides of each
biconditional agree:

    theorem A:  anz(G) < 1      <=>  G belongs to the six-class list
    theorem B:  anz(G) < 16/11  <=>  odd G belongs to the four-group list

`lemma_suite` instantiates the supporting lemmas behind those classifications
as executable checks (each one named by its mathematical content), and
`sweep_corpus` runs everything over a directory of frozen group files,
deduplicating by fingerprint and emitting a deterministic report.
"""
from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Union

from .caps import Caps
from .chartab import CharacterTable, character_table
from .errors import (
    AbelianInput,
    CapExceeded,
    CharzeroError,
    ClosureCapExceeded,
    DegenerateDerived,
    EvenOrder,
    NoSuitablePrime,
    ParseError,
    UniquenessFailure,
)
from .groupio import frac_str
from .groups import (
    FiniteGroup,
    Subgroup,
    derived_subgroup,
    fitting_data,
    normal_subgroups,
    quotient_group,
)
from .numtheory import divisors as _divisors
from .numtheory import factorization
from .structure import (
    WolfData,
    dark_scoppola_case,
    extraspecial_parameters,
    frobenius_structure,
    is_camina,
    is_camina_by_characters,
    wolf_subgroup,
)
from .zerostats import anz as table_anz
from .zerostats import zero_stats

# Exact rational thresholds; never compared through floats.
THRESHOLD_A = Fraction(1)
THRESHOLD_B = Fraction(16, 11)
THRESHOLD_WOLF_ODD = Fraction(12, 5)
THRESHOLD_QUOTIENT_ODD = Fraction(2)

TAG_FROB_C2 = "frob_c2_odd_abelian_kernel"
TAG_FROB_FIELD = "frob_field"
TAG_FROB21 = "frob21"
TAG_D12_OR_C3C4 = "d12_or_c3c4"
TAG_EXTRASPECIAL2 = "extraspecial2"
TAG_S4 = "s4"
ALL_TAGS = (
    TAG_FROB_C2,
    TAG_FROB_FIELD,
    TAG_FROB21,
    TAG_D12_OR_C3C4,
    TAG_EXTRASPECIAL2,
    TAG_S4,
)

# Orders of the theorem-B groups mapped to their (kernel, complement) orders.
THEOREM_B_ORDERS = {21: (7, 3), 39: (13, 3), 57: (19, 3), 55: (11, 5)}


# ---------------------------------------------------------------------------
# fingerprints

def fingerprint(G: FiniteGroup, table: CharacterTable) -> tuple:
    """Isomorphism-invariant identity used for deduplication and for the
    membership tests that name a specific group (D12, C3:C4, S4).

    Headline components: order, sorted class sizes, sorted character
    degrees, exponent, |G'|, |Z(G)|, and the multiset of element orders
    (which separates D8 from Q8). Those alone still conflate some order-16
    pairs (Q8 x C2 vs C4 x| C4; D8 * C4 vs C2^2 x| C4), so the tail adds the
    element orders of the center and of the abelianization, the image sizes
    of every power map g -> g^m for m dividing the exponent, and per-class
    square data. Pairwise separation over the shipped corpus is enforced by
    the census count check during corpus freezing.
    """
    part = table.partition
    order_multiset = tuple(
        sorted(Counter(G.element_order(g) for g in range(G.order)).items())
    )
    center_orders = tuple(sorted(G.element_order(z) for z in G.center))
    D = derived_subgroup(G)
    Q, _ = quotient_group(G, D)
    ab_orders = tuple(sorted(Q.element_order(x) for x in range(Q.order)))
    e = G.exponent
    power_image_sizes = tuple(
        (m, len({G.power(g, m) for g in range(G.order)}))
        for m in _divisors(e)
        if m > 1
    )
    class_squares = tuple(
        sorted(
            (
                part.sizes[j],
                G.element_order(rep),
                G.element_order(G.mult(rep, rep)),
                part.sizes[part.class_of[G.mult(rep, rep)]],
            )
            for j, rep in enumerate(part.representatives)
        )
    )
    return (
        G.order,
        tuple(sorted(table.class_sizes)),
        tuple(sorted(table.degrees)),
        e,
        D.order,
        len(G.center),
        order_multiset,
        center_orders,
        ab_orders,
        power_image_sizes,
        class_squares,
    )


def fingerprint_str(fp: tuple) -> str:
    """Canonical compact rendering: the headline invariants plus a stable
    digest of the full tuple (repr of nested integer tuples is canonical)."""
    import hashlib

    order, sizes, degrees, exponent, dorder, zorder, orders = fp[:7]
    digest = hashlib.sha256(repr(fp).encode()).hexdigest()[:12]
    return "|".join(
        [
            str(order),
            ",".join(map(str, sizes)),
            ",".join(map(str, degrees)),
            str(exponent),
            str(dorder),
            str(zorder),
            ",".join(f"{o}:{c}" for o, c in orders),
            digest,
        ]
    )


_REFERENCE_FPS: dict[str, tuple] = {}


def _reference_fingerprint(name: str) -> tuple:
    """Fingerprint of a bundled named group, computed once per process."""
    fp = _REFERENCE_FPS.get(name)
    if fp is None:
        from .families import named_group

        H = named_group(name)
        fp = fingerprint(H, character_table(H))
        _REFERENCE_FPS[name] = fp
    return fp


# ---------------------------------------------------------------------------
# theorem A / theorem B verdicts

@dataclass(frozen=True)
class TheoremAClass:
    """All matching membership tags, in list order; empty means none.

    The six classes are not disjoint: a Frobenius group with complement of
    order 2 = 3^1 - 1 on a kernel of order 3 (i.e. S3) carries both
    `frob_c2_odd_abelian_kernel` and `frob_field`. Every matching tag is
    reported; `tag` exposes the first one (or "none") as the primary label.
    """

    tags: tuple[str, ...]
    witness: dict

    @property
    def tag(self) -> str:
        return self.tags[0] if self.tags else "none"

    @property
    def predicted(self) -> bool:
        return bool(self.tags)


@dataclass(frozen=True)
class Verdict:
    """One side-by-side comparison of structure against exact statistics."""

    fingerprint: tuple
    name: str
    theorem: str  # "A" or "B"
    predicted: Union[TheoremAClass, bool]
    anz: Fraction
    threshold: Fraction
    consistent: bool
    witness: dict


def _is_elementary_abelian(K: Subgroup) -> Optional[tuple[int, int]]:
    """(p, n) when K is elementary abelian of order p^n > 1, else None."""
    fac = factorization(K.order)
    if len(fac) != 1:
        return None
    p, n = fac[0]
    G = K.parent
    if any(G.element_order(m) != p for m in K.members if m != 0):
        return None
    if not K.as_group.is_abelian:
        return None
    return (p, n)


def theorem_a_class(
    G: FiniteGroup,
    *,
    table: Optional[CharacterTable] = None,
    caps: Optional[Caps] = None,
) -> TheoremAClass:
    """All theorem-A tags carried by the nonabelian group G.

    Tags are decided structurally (Frobenius kernel/complement data,
    extraspecial parameters, fingerprint identity for the named groups) and
    never by looking at zero counts, so the comparison performed by
    `verify_theorem_a` is between two independent computations.
    """
    if G.is_abelian:
        raise AbelianInput(f"{G.name}: theorem-A classes are nonabelian")
    caps = caps or Caps()
    if table is None:
        table = character_table(G, caps=caps)

    tags: list[str] = []
    witness: dict = {}

    frob = frobenius_structure(G, caps=caps)
    if frob is not None:
        K = frob.kernel
        witness["frobenius"] = {
            "kernel_order": K.order,
            "complement_order": frob.complement_order,
            "complement_cyclic": frob.complement_cyclic,
        }
        kernel_abelian = K.as_group.is_abelian
        if frob.complement_order == 2 and K.order % 2 == 1 and kernel_abelian:
            tags.append(TAG_FROB_C2)
        elem = _is_elementary_abelian(K)
        if (
            elem is not None
            and frob.complement_cyclic
            and frob.complement_order == elem[0] ** elem[1] - 1
        ):
            tags.append(TAG_FROB_FIELD)
            witness["field_parameters"] = {"p": elem[0], "n": elem[1]}
        if G.order == 21:
            tags.append(TAG_FROB21)

    fp = fingerprint(G, table)
    named_matches = [
        ref
        for ref in ("D12", "C3xC4_dicyclic")
        if fp == _reference_fingerprint(ref)
    ]
    if named_matches:
        tags.append(TAG_D12_OR_C3C4)
        witness["named_match"] = named_matches[0]

    es = extraspecial_parameters(G)
    if es is not None:
        witness["extraspecial"] = {"p": es[0], "n": es[1]}
        if es[0] == 2:
            tags.append(TAG_EXTRASPECIAL2)

    if fp == _reference_fingerprint("S4"):
        tags.append(TAG_S4)
        witness["named_match"] = "S4"

    return TheoremAClass(tags=tuple(tags), witness=witness)


def verify_theorem_a(
    G: FiniteGroup,
    *,
    table: Optional[CharacterTable] = None,
    caps: Optional[Caps] = None,
) -> Verdict:
    """Check anz(G) < 1 <=> G carries at least one theorem-A tag."""
    if G.is_abelian:
        raise AbelianInput(f"{G.name}: theorem A addresses nonabelian groups")
    caps = caps or Caps()
    if table is None:
        table = character_table(G, caps=caps)
    cls = theorem_a_class(G, table=table, caps=caps)
    value = table_anz(table)
    below = value < THRESHOLD_A
    consistent = cls.predicted == below
    witness = dict(cls.witness)
    witness["tags"] = list(cls.tags)
    witness["anz_below_threshold"] = below
    return Verdict(
        fingerprint=fingerprint(G, table),
        name=G.name,
        theorem="A",
        predicted=cls,
        anz=value,
        threshold=THRESHOLD_A,
        consistent=consistent,
        witness=witness,
    )


def verify_theorem_b(
    G: FiniteGroup,
    *,
    table: Optional[CharacterTable] = None,
    caps: Optional[Caps] = None,
) -> Verdict:
    """Check anz(G) < 16/11 <=> G is one of the four small Frobenius groups.

    Applies to nonabelian groups of odd order only.
    """
    if G.order % 2 == 0:
        raise EvenOrder(f"{G.name}: theorem B addresses odd-order groups")
    if G.is_abelian:
        raise AbelianInput(f"{G.name}: theorem B addresses nonabelian groups")
    caps = caps or Caps()
    if table is None:
        table = character_table(G, caps=caps)

    witness: dict = {}
    predicted = False
    if G.order in THEOREM_B_ORDERS:
        frob = frobenius_structure(G, caps=caps)
        if frob is not None:
            pair = (frob.kernel.order, frob.complement_order)
            witness["frobenius"] = {
                "kernel_order": pair[0],
                "complement_order": pair[1],
            }
            predicted = pair == THEOREM_B_ORDERS[G.order]

    value = table_anz(table)
    below = value < THRESHOLD_B
    witness["predicted"] = predicted
    witness["anz_below_threshold"] = below
    return Verdict(
        fingerprint=fingerprint(G, table),
        name=G.name,
        theorem="B",
        predicted=predicted,
        anz=value,
        threshold=THRESHOLD_B,
        consistent=predicted == below,
        witness=witness,
    )


# ---------------------------------------------------------------------------
# lemma suite

@dataclass(frozen=True)
class LemmaResult:
    lemma: str
    status: str  # "pass" | "fail" | "skipped"
    witness: str


_PASS = "pass"
_FAIL = "fail"
_SKIP = "skipped"


def _result(lemma: str, status: str, witness: str) -> LemmaResult:
    return LemmaResult(lemma=lemma, status=status, witness=witness)


class _SuiteContext:
    """Shared facts computed once per group for the whole lemma suite."""

    def __init__(self, G: FiniteGroup, table: CharacterTable, caps: Caps,
                 subset_samples: int, rng_seed: int):
        self.G = G
        self.table = table
        self.caps = caps
        self.subset_samples = subset_samples
        self.rng_seed = rng_seed
        self.stats = zero_stats(table)
        self.anz = self.stats.anz
        self.D = derived_subgroup(G)
        self.odd = G.order % 2 == 1
        self.abelian = G.is_abelian
        self.metabelian = derived_subgroup(self.D.as_group).order == 1
        self.fp = fingerprint(G, table)
        self.excluded_pair = any(
            self.fp == _reference_fingerprint(ref)
            for ref in ("D12", "C3xC4_dicyclic")
        )
        self.frobenius = frobenius_structure(G, caps=caps)
        self.extraspecial = extraspecial_parameters(G)
        self.p_group = len(factorization(G.order)) == 1 if G.order > 1 else False
        try:
            self.camina: Optional[bool] = is_camina(G)
        except DegenerateDerived:
            self.camina = None  # abelian or perfect: the notion degenerates
        self._tags: Optional[tuple[str, ...]] = None
        self._wolf: Optional[list[WolfData]] = None
        self._wolf_error: Optional[str] = None
        self._normals_in_derived: Optional[list[Subgroup]] = None

    @property
    def tags(self) -> tuple[str, ...]:
        if self._tags is None:
            if self.abelian:
                self._tags = ()
            else:
                self._tags = theorem_a_class(
                    self.G, table=self.table, caps=self.caps
                ).tags
        return self._tags

    def wolf_data(self) -> tuple[Optional[list[WolfData]], Optional[str]]:
        """Wolf subgroup of every irreducible character of G', cached."""
        if self._wolf is None and self._wolf_error is None:
            try:
                dtable = character_table(self.D.as_group, caps=self.caps)
                cache: dict = {}
                self._wolf = [
                    wolf_subgroup(
                        self.G, self.table, phi, caps=self.caps, table_cache=cache
                    )
                    for phi in dtable.characters
                ]
            except (AssertionError, UniquenessFailure, CharzeroError) as exc:
                self._wolf_error = f"{type(exc).__name__}: {exc}"
        return self._wolf, self._wolf_error

    def normals_in_derived(self) -> list[Subgroup]:
        if self._normals_in_derived is None:
            dset = set(self.D.members)
            self._normals_in_derived = [
                N
                for N in normal_subgroups(self.G, caps=self.caps)
                if set(N.members) <= dset
            ]
        return self._normals_in_derived


def _check_subset_averaging(ctx: _SuiteContext) -> LemmaResult:
    """Any set of irreducibles containing every character with m(chi) below
    the average has subset average <= anz(G). Exhaustive over subsets when
    k <= 10, sampled otherwise."""
    lemma = "subset-averaging"
    m = ctx.stats.zero_counts
    k = ctx.table.k
    a = ctx.anz
    mandatory = [i for i in range(k) if m[i] < a]
    optional = [i for i in range(k) if m[i] >= a]

    def subset_violates(extra: Sequence[int]) -> Optional[Fraction]:
        idx = mandatory + list(extra)
        if not idx:
            return None
        val = Fraction(sum(m[i] for i in idx), len(idx))
        return val if val > a else None

    checked = 0
    if k <= 10:
        mode = "exhaustive"
        for bits in range(1 << len(optional)):
            extra = [optional[j] for j in range(len(optional)) if (bits >> j) & 1]
            bad = subset_violates(extra)
            if bad is not None:
                return _result(
                    lemma, _FAIL, f"subset of size {len(mandatory) + len(extra)} has average {bad} > {a}"
                )
            checked += 1
    else:
        mode = f"{ctx.subset_samples} random samples"
        rng = random.Random(ctx.rng_seed * 1_000_003 + ctx.G.order * 101 + k)
        for _ in range(ctx.subset_samples):
            extra = [i for i in optional if rng.random() < 0.5]
            bad = subset_violates(extra)
            if bad is not None:
                return _result(
                    lemma, _FAIL, f"subset of size {len(mandatory) + len(extra)} has average {bad} > {a}"
                )
            checked += 1
    return _result(lemma, _PASS, f"{checked} subsets ({mode}), anz = {a}")


def _check_averaging_quotient(ctx: _SuiteContext) -> LemmaResult:
    """anz(G) < 1 implies anz(G/N) <= anz(G) for every normal N <= G'."""
    lemma = "averaging-quotient"
    if not ctx.anz < THRESHOLD_A:
        return _result(lemma, _SKIP, f"anz = {ctx.anz} >= 1")
    return _quotient_monotone(ctx, lemma)


def _check_odd_quotient_monotone(ctx: _SuiteContext) -> LemmaResult:
    """Odd order and anz(G) < 2 imply anz(G/N) <= anz(G) for normal N <= G'."""
    lemma = "odd-quotient-monotone"
    if not ctx.odd:
        return _result(lemma, _SKIP, "even order")
    if not ctx.anz < THRESHOLD_QUOTIENT_ODD:
        return _result(lemma, _SKIP, f"anz = {ctx.anz} >= 2")
    return _quotient_monotone(ctx, lemma)


def _quotient_monotone(ctx: _SuiteContext, lemma: str) -> LemmaResult:
    worst: Optional[Fraction] = None
    count = 0
    for N in ctx.normals_in_derived():
        Q, _ = quotient_group(ctx.G, N)
        qa = table_anz(character_table(Q, caps=ctx.caps))
        if qa > ctx.anz:
            return _result(
                lemma,
                _FAIL,
                f"N of order {N.order}: anz(G/N) = {qa} > anz(G) = {ctx.anz}",
            )
        worst = qa if worst is None else max(worst, qa)
        count += 1
    return _result(
        lemma, _PASS, f"{count} normal subgroups inside G'; max quotient anz = {worst}"
    )


def _check_odd_even_zero_counts(ctx: _SuiteContext) -> LemmaResult:
    """In odd-order groups every nonlinear character vanishes on a positive
    even number of classes."""
    lemma = "odd-even-zero-counts"
    if not ctx.odd:
        return _result(lemma, _SKIP, "even order")
    counts = []
    for chi, mc in zip(ctx.table.characters, ctx.stats.zero_counts):
        if chi.degree == 1:
            continue
        if mc <= 0 or mc % 2 != 0:
            return _result(lemma, _FAIL, f"nonlinear character has m = {mc}")
        counts.append(mc)
    if not counts:
        return _result(lemma, _PASS, "vacuous: no nonlinear characters")
    return _result(lemma, _PASS, f"nonlinear zero counts {sorted(counts)}")


def _check_burnside(ctx: _SuiteContext) -> LemmaResult:
    """Every nonlinear irreducible character vanishes somewhere."""
    lemma = "burnside-nonlinear-zero"
    nonlinear = 0
    for chi, mc in zip(ctx.table.characters, ctx.stats.zero_counts):
        if chi.degree == 1:
            continue
        nonlinear += 1
        if mc < 1:
            return _result(
                lemma, _FAIL, f"nonlinear character of degree {chi.degree} has no zero"
            )
    if nonlinear == 0:
        return _result(lemma, _PASS, "vacuous: no nonlinear characters")
    return _result(lemma, _PASS, f"{nonlinear} nonlinear characters all vanish somewhere")


def _check_camina_dual(ctx: _SuiteContext) -> LemmaResult:
    """Coset test and character test for the Camina property agree."""
    lemma = "camina-dual-test"
    if ctx.camina is None:
        return _result(lemma, _SKIP, "derived subgroup trivial or whole group")
    by_chars = is_camina_by_characters(ctx.G, ctx.table)
    if ctx.camina != by_chars:
        return _result(
            lemma, _FAIL, f"coset test {ctx.camina} != character test {by_chars}"
        )
    return _result(lemma, _PASS, f"both tests agree: camina = {ctx.camina}")


def _check_camina_case(ctx: _SuiteContext) -> LemmaResult:
    """Every Camina group lands in one of the three structural cases."""
    lemma = "camina-case-assignment"
    if not ctx.camina:
        reason = (
            "derived subgroup trivial or whole group"
            if ctx.camina is None
            else "not a Camina group"
        )
        return _result(lemma, _SKIP, reason)
    case = dark_scoppola_case(ctx.G, caps=ctx.caps)
    if case == "violation":
        return _result(lemma, _FAIL, "no structural case matched")
    return _result(lemma, _PASS, f"case: {case}")


def _check_wolf_count_vanishing(ctx: _SuiteContext) -> LemmaResult:
    """For every phi in Irr(G') the maximal extension subgroup U is unique,
    exactly |U:G'| irreducibles of G lie over phi, and they vanish off U."""
    lemma = "wolf-count-vanishing"
    data, err = ctx.wolf_data()
    if err is not None:
        return _result(lemma, _FAIL, err)
    assert data is not None
    orders = sorted({wd.U.order for wd in data})
    return _result(
        lemma,
        _PASS,
        f"{len(data)} characters of G' checked; U orders {orders}",
    )


def _check_wolf_dichotomy_anz1(ctx: _SuiteContext) -> LemmaResult:
    """anz(G) < 1 forces U in {G', G} for every phi, once the two named
    exceptional groups are excluded."""
    lemma = "wolf-dichotomy-anz1"
    if not ctx.anz < THRESHOLD_A:
        return _result(lemma, _SKIP, f"anz = {ctx.anz} >= 1")
    if ctx.excluded_pair:
        return _result(lemma, _SKIP, "excluded group (D12 or C3:C4)")
    return _wolf_dichotomy(ctx, lemma)


def _check_wolf_dichotomy_odd(ctx: _SuiteContext) -> LemmaResult:
    """Odd order and anz(G) < 12/5 force U in {G', G} for every phi."""
    lemma = "wolf-dichotomy-odd"
    if not ctx.odd:
        return _result(lemma, _SKIP, "even order")
    if not ctx.anz < THRESHOLD_WOLF_ODD:
        return _result(lemma, _SKIP, f"anz = {ctx.anz} >= 12/5")
    return _wolf_dichotomy(ctx, lemma)


def _wolf_dichotomy(ctx: _SuiteContext, lemma: str) -> LemmaResult:
    data, err = ctx.wolf_data()
    if err is not None:
        return _result(lemma, _SKIP, f"wolf computation failed: {err}")
    assert data is not None
    for wd in data:
        if wd.U.order not in (ctx.D.order, ctx.G.order):
            return _result(
                lemma,
                _FAIL,
                f"phi of degree {wd.phi.degree} has U of order {wd.U.order} "
                f"strictly between |G'| = {ctx.D.order} and |G| = {ctx.G.order}",
            )
    return _result(
        lemma, _PASS, f"all {len(data)} extension subgroups are G' or G"
    )


def _check_wolf_counterexample(ctx: _SuiteContext) -> LemmaResult:
    """The two excluded groups really do have a strictly intermediate U."""
    lemma = "wolf-dichotomy-counterexample"
    if not ctx.excluded_pair:
        return _result(lemma, _SKIP, "applies to D12 and C3:C4 only")
    data, err = ctx.wolf_data()
    if err is not None:
        return _result(lemma, _FAIL, f"wolf computation failed: {err}")
    assert data is not None
    for wd in data:
        if ctx.D.order < wd.U.order < ctx.G.order:
            return _result(
                lemma,
                _PASS,
                f"phi of degree {wd.phi.degree} has U of order {wd.U.order}",
            )
    return _result(lemma, _FAIL, "no strictly intermediate extension subgroup found")


def _check_metabelian_camina_anz1(ctx: _SuiteContext) -> LemmaResult:
    """A nonabelian metabelian group with anz < 1 is D12, C3:C4 or Camina."""
    lemma = "metabelian-camina-anz1"
    if ctx.abelian:
        return _result(lemma, _SKIP, "abelian")
    if not ctx.metabelian:
        return _result(lemma, _SKIP, "not metabelian")
    if not ctx.anz < THRESHOLD_A:
        return _result(lemma, _SKIP, f"anz = {ctx.anz} >= 1")
    if ctx.excluded_pair:
        return _result(lemma, _PASS, "one of the two named exceptions")
    if ctx.camina:
        return _result(lemma, _PASS, "Camina group")
    return _result(lemma, _FAIL, "neither a named exception nor Camina")


def _check_metabelian_camina_odd(ctx: _SuiteContext) -> LemmaResult:
    """A nonabelian metabelian odd-order group with anz < 12/5 is Camina."""
    lemma = "metabelian-camina-odd"
    if ctx.abelian:
        return _result(lemma, _SKIP, "abelian")
    if not ctx.odd:
        return _result(lemma, _SKIP, "even order")
    if not ctx.metabelian:
        return _result(lemma, _SKIP, "not metabelian")
    if not ctx.anz < THRESHOLD_WOLF_ODD:
        return _result(lemma, _SKIP, f"anz = {ctx.anz} >= 12/5")
    if ctx.camina:
        return _result(lemma, _PASS, "Camina group")
    return _result(lemma, _FAIL, "not a Camina group")


def _check_camina_pgroup(ctx: _SuiteContext) -> LemmaResult:
    """A Camina p-group with anz < 1 is an extraspecial 2-group, and a
    Camina p-group for odd p has anz >= 16/11."""
    lemma = "camina-pgroup-extraspecial"
    if not ctx.camina or not ctx.p_group:
        return _result(lemma, _SKIP, "not a Camina p-group")
    p = factorization(ctx.G.order)[0][0]
    if ctx.anz < THRESHOLD_A:
        es = ctx.extraspecial
        if es is None or es[0] != 2:
            return _result(
                lemma, _FAIL, f"anz = {ctx.anz} < 1 but not an extraspecial 2-group"
            )
        return _result(lemma, _PASS, f"extraspecial 2-group, anz = {ctx.anz}")
    if p % 2 == 1:
        if ctx.anz < THRESHOLD_B:
            return _result(
                lemma, _FAIL, f"odd Camina p-group with anz = {ctx.anz} < 16/11"
            )
        return _result(lemma, _PASS, f"odd p; anz = {ctx.anz} >= 16/11")
    return _result(lemma, _PASS, f"p = 2 with anz = {ctx.anz} >= 1; nothing to check")


def _check_extraspecial_formula(ctx: _SuiteContext) -> LemmaResult:
    """anz of an extraspecial group of order p^(2n+1) is exactly
    (p-1)(p^(2n)-1)/(p^(2n)+p-1)."""
    lemma = "extraspecial-anz-formula"
    es = ctx.extraspecial
    if es is None:
        return _result(lemma, _SKIP, "not extraspecial")
    p, n = es
    q = p ** (2 * n)
    expected = Fraction((p - 1) * (q - 1), q + p - 1)
    if ctx.anz != expected:
        return _result(
            lemma, _FAIL, f"anz = {ctx.anz} but formula gives {expected} (p={p}, n={n})"
        )
    return _result(lemma, _PASS, f"anz = {expected} matches formula (p={p}, n={n})")


def _check_frobenius_cyclic_classes(ctx: _SuiteContext) -> LemmaResult:
    """A metabelian Frobenius group with cyclic complement and anz < 1 is in
    one of the first three theorem-A classes."""
    lemma = "frobenius-cyclic-classes"
    if ctx.abelian:
        return _result(lemma, _SKIP, "abelian")
    if not ctx.metabelian:
        return _result(lemma, _SKIP, "not metabelian")
    if ctx.frobenius is None or not ctx.frobenius.complement_cyclic:
        return _result(lemma, _SKIP, "not Frobenius with cyclic complement")
    if not ctx.anz < THRESHOLD_A:
        return _result(lemma, _SKIP, f"anz = {ctx.anz} >= 1")
    hits = [t for t in ctx.tags if t in (TAG_FROB_C2, TAG_FROB_FIELD, TAG_FROB21)]
    if hits:
        return _result(lemma, _PASS, f"classes: {', '.join(hits)}")
    return _result(lemma, _FAIL, "no Frobenius class tag matched")


def _check_odd_metabelian_16_11(ctx: _SuiteContext) -> LemmaResult:
    """A nonabelian metabelian odd-order group with anz < 16/11 is one of the
    four theorem-B Frobenius groups."""
    lemma = "odd-metabelian-16-11"
    if ctx.abelian:
        return _result(lemma, _SKIP, "abelian")
    if not ctx.odd:
        return _result(lemma, _SKIP, "even order")
    if not ctx.metabelian:
        return _result(lemma, _SKIP, "not metabelian")
    if not ctx.anz < THRESHOLD_B:
        return _result(lemma, _SKIP, f"anz = {ctx.anz} >= 16/11")
    frob = ctx.frobenius
    expected = THEOREM_B_ORDERS.get(ctx.G.order)
    if (
        expected is not None
        and frob is not None
        and (frob.kernel.order, frob.complement_order) == expected
    ):
        return _result(
            lemma, _PASS, f"Frobenius of order {ctx.G.order} = {expected[0]}*{expected[1]}"
        )
    return _result(lemma, _FAIL, f"order {ctx.G.order} is not one of 21, 39, 57, 55")


def _is_simple(G: FiniteGroup, caps: Caps) -> bool:
    if G.order == 1:
        return False
    return len(normal_subgroups(G, caps=caps)) == 2


def _check_simple_m(ctx: _SuiteContext) -> LemmaResult:
    """A nonabelian simple group has a character vanishing on > 1 class."""
    lemma = "simple-m-gt-1"
    if ctx.abelian or not _is_simple(ctx.G, ctx.caps):
        return _result(lemma, _SKIP, "not nonabelian simple")
    if ctx.stats.m_max > 1:
        return _result(lemma, _PASS, f"m(G) = {ctx.stats.m_max}")
    return _result(lemma, _FAIL, f"m(G) = {ctx.stats.m_max}")


def _check_m1_structure(ctx: _SuiteContext) -> LemmaResult:
    """m(G) = 1 forces a Frobenius group with complement of order 2 and odd
    abelian kernel."""
    lemma = "m1-structure"
    if ctx.abelian or ctx.stats.m_max != 1:
        return _result(lemma, _SKIP, f"m(G) = {ctx.stats.m_max} != 1")
    if TAG_FROB_C2 in ctx.tags:
        return _result(lemma, _PASS, "Frobenius, complement order 2, odd abelian kernel")
    return _result(lemma, _FAIL, "m(G) = 1 but the Frobenius structure is absent")


def _check_index2_classification(ctx: _SuiteContext) -> LemmaResult:
    """For nonabelian G with |G:G'| <= 2: anz < 1 iff G is S4 or Frobenius
    with complement of order 2 and odd abelian kernel."""
    lemma = "index2-anz-classification"
    if ctx.abelian:
        return _result(lemma, _SKIP, "abelian")
    index = ctx.G.order // ctx.D.order
    if index > 2:
        return _result(lemma, _SKIP, f"|G:G'| = {index} > 2")
    in_list = TAG_S4 in ctx.tags or TAG_FROB_C2 in ctx.tags
    below = ctx.anz < THRESHOLD_A
    if in_list == below:
        return _result(
            lemma, _PASS, f"anz = {ctx.anz}; listed = {in_list}; both sides agree"
        )
    return _result(
        lemma, _FAIL, f"anz = {ctx.anz} but listed = {in_list}"
    )


def _check_anz1_s4_or_metabelian(ctx: _SuiteContext) -> LemmaResult:
    """A nonabelian group with anz < 1 is S4 or metabelian."""
    lemma = "anz1-s4-or-metabelian"
    if ctx.abelian:
        return _result(lemma, _SKIP, "abelian")
    if not ctx.anz < THRESHOLD_A:
        return _result(lemma, _SKIP, f"anz = {ctx.anz} >= 1")
    if TAG_S4 in ctx.tags:
        return _result(lemma, _PASS, "S4")
    if ctx.metabelian:
        return _result(lemma, _PASS, "metabelian")
    return _result(lemma, _FAIL, "neither S4 nor metabelian")


_LEMMA_CHECKS = (
    _check_subset_averaging,
    _check_averaging_quotient,
    _check_odd_even_zero_counts,
    _check_odd_quotient_monotone,
    _check_burnside,
    _check_camina_dual,
    _check_camina_case,
    _check_wolf_count_vanishing,
    _check_wolf_dichotomy_anz1,
    _check_wolf_counterexample,
    _check_metabelian_camina_anz1,
    _check_camina_pgroup,
    _check_extraspecial_formula,
    _check_frobenius_cyclic_classes,
    _check_wolf_dichotomy_odd,
    _check_metabelian_camina_odd,
    _check_odd_metabelian_16_11,
    _check_simple_m,
    _check_m1_structure,
    _check_index2_classification,
    _check_anz1_s4_or_metabelian,
)

LEMMA_IDS = (
    "subset-averaging",
    "averaging-quotient",
    "odd-even-zero-counts",
    "odd-quotient-monotone",
    "burnside-nonlinear-zero",
    "camina-dual-test",
    "camina-case-assignment",
    "wolf-count-vanishing",
    "wolf-dichotomy-anz1",
    "wolf-dichotomy-counterexample",
    "metabelian-camina-anz1",
    "camina-pgroup-extraspecial",
    "extraspecial-anz-formula",
    "frobenius-cyclic-classes",
    "wolf-dichotomy-odd",
    "metabelian-camina-odd",
    "odd-metabelian-16-11",
    "simple-m-gt-1",
    "m1-structure",
    "index2-anz-classification",
    "anz1-s4-or-metabelian",
)


def lemma_suite(
    G: FiniteGroup,
    table: Optional[CharacterTable] = None,
    *,
    caps: Optional[Caps] = None,
    subset_samples: int = 200,
    rng_seed: int = 0,
) -> list[LemmaResult]:
    """Run every executable lemma check against one group.

    Returns one result per lemma in a fixed order; hypotheses that do not
    apply yield "skipped" with the reason. Failures are data, not
    exceptions. Deterministic for a fixed seed.
    """
    caps = caps or Caps()
    if table is None:
        table = character_table(G, caps=caps)
    ctx = _SuiteContext(G, table, caps, subset_samples, rng_seed)
    return [check(ctx) for check in _LEMMA_CHECKS]


# ---------------------------------------------------------------------------
# corpus sweeps

@dataclass(frozen=True)
class SweepOptions:
    theorem: str = "both"  # "a", "b", or "both"
    lemmas: bool = False
    open_questions: bool = False
    jobs: int = 1
    caps: Caps = field(default_factory=Caps)
    subset_samples: int = 200
    rng_seed: int = 0


@dataclass(frozen=True)
class GroupReport:
    """Per-group sweep row; everything needed for JSON and CSV emission."""

    fingerprint: tuple
    name: str
    order: int
    anz: Fraction
    tags: Optional[tuple[str, ...]]  # None when theorem A was not applicable
    theorem_b_predicted: Optional[bool]  # None when B was not applicable
    inconsistencies: tuple[str, ...]
    consistent: bool
    lemma_results: Optional[tuple[LemmaResult, ...]]
    fitting_height: Optional[int]
    solvable: Optional[bool]
    p_group_order: Optional[int]

    def to_dict(self) -> dict:
        d: dict = {
            "fingerprint": fingerprint_str(self.fingerprint),
            "name": self.name,
            "order": self.order,
            "anz": frac_str(self.anz),
            "predicted": {
                "theorem_a": list(self.tags) if self.tags is not None else None,
                "theorem_b": self.theorem_b_predicted,
            },
            "consistent": self.consistent,
            "inconsistencies": list(self.inconsistencies),
            "lemma_results": (
                [
                    {"lemma": r.lemma, "status": r.status, "witness": r.witness}
                    for r in self.lemma_results
                ]
                if self.lemma_results is not None
                else None
            ),
        }
        if self.fitting_height is not None or self.solvable is not None:
            d["open_questions"] = {
                "fitting_height": self.fitting_height,
                "solvable": self.solvable,
                "p_group_order": self.p_group_order,
            }
        return d


@dataclass(frozen=True)
class SkippedEntry:
    source: str
    reason: str


@dataclass(frozen=True)
class Report:
    per_group: tuple[GroupReport, ...]
    skipped: tuple[SkippedEntry, ...]

    @property
    def summary(self) -> dict:
        consistent = sum(1 for g in self.per_group if g.consistent)
        return {
            "groups": len(self.per_group),
            "consistent": consistent,
            "inconsistent": len(self.per_group) - consistent,
            "skipped": len(self.skipped),
        }

    def to_json(self) -> str:
        import json

        payload = {
            "summary": self.summary,
            "per_group": [g.to_dict() for g in self.per_group],
            "skipped": [
                {"source": s.source, "reason": s.reason} for s in self.skipped
            ],
        }
        return json.dumps(payload, indent=2) + "\n"

    def to_csv(self) -> str:
        import csv
        import io

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            [
                "fingerprint",
                "name",
                "order",
                "anz",
                "theorem_a_tags",
                "theorem_b_predicted",
                "consistent",
                "inconsistencies",
                "lemma_pass",
                "lemma_fail",
                "lemma_skipped",
                "lemma_failures",
                "fitting_height",
                "solvable",
                "p_group_order",
            ]
        )
        for g in self.per_group:
            statuses = [r.status for r in g.lemma_results or ()]
            failures = [r.lemma for r in g.lemma_results or () if r.status == _FAIL]
            writer.writerow(
                [
                    fingerprint_str(g.fingerprint),
                    g.name,
                    g.order,
                    frac_str(g.anz),
                    "+".join(g.tags) if g.tags is not None else "",
                    "" if g.theorem_b_predicted is None else str(g.theorem_b_predicted).lower(),
                    str(g.consistent).lower(),
                    "+".join(g.inconsistencies),
                    statuses.count(_PASS) if g.lemma_results is not None else "",
                    statuses.count(_FAIL) if g.lemma_results is not None else "",
                    statuses.count(_SKIP) if g.lemma_results is not None else "",
                    "+".join(failures),
                    "" if g.fitting_height is None else g.fitting_height,
                    "" if g.solvable is None else str(g.solvable).lower(),
                    "" if g.p_group_order is None else g.p_group_order,
                ]
            )
        return buf.getvalue()


def analyze_group(G: FiniteGroup, options: SweepOptions) -> GroupReport:
    """Run the requested verdicts and suites over one group."""
    caps = options.caps
    table = character_table(G, caps=caps)
    fp = fingerprint(G, table)
    value = table_anz(table)
    nonabelian = not G.is_abelian

    tags: Optional[tuple[str, ...]] = None
    theorem_b_predicted: Optional[bool] = None
    inconsistencies: list[str] = []

    if options.theorem in ("a", "both") and nonabelian:
        verdict_a = verify_theorem_a(G, table=table, caps=caps)
        assert isinstance(verdict_a.predicted, TheoremAClass)
        tags = verdict_a.predicted.tags
        if not verdict_a.consistent:
            inconsistencies.append("theorem_a")
    if options.theorem in ("b", "both") and nonabelian and G.order % 2 == 1:
        verdict_b = verify_theorem_b(G, table=table, caps=caps)
        theorem_b_predicted = bool(verdict_b.predicted)
        if not verdict_b.consistent:
            inconsistencies.append("theorem_b")

    lemma_results: Optional[tuple[LemmaResult, ...]] = None
    if options.lemmas:
        lemma_results = tuple(
            lemma_suite(
                G,
                table,
                caps=caps,
                subset_samples=options.subset_samples,
                rng_seed=options.rng_seed,
            )
        )

    fitting_height: Optional[int] = None
    solvable: Optional[bool] = None
    p_group_order: Optional[int] = None
    if options.open_questions:
        fd = fitting_data(G, caps=caps)
        fitting_height = fd.height
        solvable = fd.is_solvable
        if len(factorization(G.order)) == 1:
            p_group_order = G.order

    return GroupReport(
        fingerprint=fp,
        name=G.name,
        order=G.order,
        anz=value,
        tags=tags,
        theorem_b_predicted=theorem_b_predicted,
        inconsistencies=tuple(inconsistencies),
        consistent=not inconsistencies,
        lemma_results=lemma_results,
        fitting_height=fitting_height,
        solvable=solvable,
        p_group_order=p_group_order,
    )


def _collect_corpus_files(paths: Sequence[Union[str, Path]]) -> list[Path]:
    files: list[Path] = []
    for raw in paths:
        p = Path(raw)
        if p.is_dir():
            files.extend(sorted(p.glob("*.json")))
        elif p.is_file():
            files.append(p)
        else:
            raise ParseError(str(p), "no such file or directory")
    return files


def _sweep_one(args: tuple[str, SweepOptions]):
    """Worker: load one group file and analyze it. Cap overruns become
    skip records; parse failures propagate (bad corpus is a caller error)."""
    path, options = args
    from .groupio import load_group_file

    try:
        G = load_group_file(path, caps=options.caps)
        return ("ok", path, analyze_group(G, options))
    except (CapExceeded, ClosureCapExceeded, NoSuitablePrime) as exc:
        return ("skip", path, str(exc))


def sweep_corpus(
    paths: Sequence[Union[str, Path]],
    options: Optional[SweepOptions] = None,
) -> Report:
    """Analyze every group file under the given paths.

    Directories contribute their *.json members in sorted order. Groups are
    deduplicated by fingerprint (first occurrence in path order wins), and
    the report is sorted by fingerprint, so identical inputs and options
    produce byte-identical output regardless of job count.
    """
    options = options or SweepOptions()
    if isinstance(paths, (str, Path)):
        paths = [paths]
    files = _collect_corpus_files(paths)

    jobs = max(1, options.jobs)
    work = [(str(p), options) for p in files]
    if jobs == 1 or len(work) <= 1:
        outcomes = [_sweep_one(item) for item in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_sweep_one, work, chunksize=4))

    seen: set[tuple] = set()
    rows: list[GroupReport] = []
    skipped: list[SkippedEntry] = []
    for kind, path, payload in outcomes:
        if kind == "skip":
            skipped.append(SkippedEntry(source=path, reason=payload))
            continue
        report: GroupReport = payload
        if report.fingerprint in seen:
            continue
        seen.add(report.fingerprint)
        rows.append(report)
    rows.sort(key=lambda r: r.fingerprint)
    return Report(per_group=tuple(rows), skipped=tuple(skipped))
