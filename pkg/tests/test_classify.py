"""Classification layer: theorem verdicts, lemma suite, fingerprints, sweeps."""
from __future__ import annotations

import re
from fractions import Fraction

import pytest

import helpers
from charzero.caps import Caps
from charzero.classify import (
    LEMMA_IDS,
    Report,
    SweepOptions,
    TAG_D12_OR_C3C4,
    TAG_EXTRASPECIAL2,
    TAG_FROB21,
    TAG_FROB_C2,
    TAG_FROB_FIELD,
    TAG_S4,
    THRESHOLD_A,
    THRESHOLD_B,
    fingerprint,
    fingerprint_str,
    lemma_suite,
    sweep_corpus,
    theorem_a_class,
    verify_theorem_a,
    verify_theorem_b,
)
from charzero.errors import AbelianInput, EvenOrder, ParseError
from charzero.families import generalized_dihedral, named_group
from charzero.groupio import write_group_file


# ---------------------------------------------------------------------------
# theorem A classification

@pytest.mark.parametrize(
    "name, tags",
    [
        ("S3", (TAG_FROB_C2, TAG_FROB_FIELD)),
        ("D10", (TAG_FROB_C2,)),
        ("A4", (TAG_FROB_FIELD,)),
        ("F20", (TAG_FROB_FIELD,)),
        ("F21", (TAG_FROB21,)),
        ("D12", (TAG_D12_OR_C3C4,)),
        ("Dic3", (TAG_D12_OR_C3C4,)),
        ("D8", (TAG_EXTRASPECIAL2,)),
        ("Q8", (TAG_EXTRASPECIAL2,)),
        ("S4", (TAG_S4,)),
        ("D16", ()),
        ("A5", ()),
        ("SL(2,3)", ()),
        ("Heis3", ()),
        ("PSL(2,7)", ()),
    ],
)
def test_theorem_a_tags(name, tags):
    G = named_group(name)
    cls = theorem_a_class(G, table=helpers.table_for(G))
    assert cls.tags == tags
    assert cls.predicted is bool(tags)


def test_theorem_a_rejects_abelian():
    with pytest.raises(AbelianInput):
        theorem_a_class(named_group("C6"))
    with pytest.raises(AbelianInput):
        verify_theorem_a(named_group("C4"))


@pytest.mark.parametrize(
    "name, value",
    [
        ("S3", Fraction(1, 3)),
        ("S4", Fraction(4, 5)),
        ("D16", Fraction(10, 7)),
        ("A5", Fraction(1)),
        ("PSL(2,7)", Fraction(4, 3)),
        ("Heis3", Fraction(16, 11)),
    ],
)
def test_verify_theorem_a(name, value):
    G = named_group(name)
    table = helpers.table_for(G)
    v = verify_theorem_a(G, table=table)
    assert v.theorem == "A"
    assert v.name == G.name
    assert v.threshold == THRESHOLD_A == 1
    assert v.anz == value
    assert v.consistent
    assert v.fingerprint == fingerprint(G, table)
    assert v.witness["anz_below_threshold"] is (value < 1)
    assert v.witness["tags"] == list(v.predicted.tags)


# ---------------------------------------------------------------------------
# theorem B verdicts

def test_theorem_b_guards():
    with pytest.raises(EvenOrder):
        verify_theorem_b(named_group("C6"))  # even wins over abelian
    with pytest.raises(EvenOrder):
        verify_theorem_b(named_group("S4"))
    with pytest.raises(AbelianInput):
        verify_theorem_b(named_group("C9"))


@pytest.mark.parametrize(
    "name, predicted, value",
    [
        ("F21", True, Fraction(4, 5)),
        ("F39", True, Fraction(8, 7)),
        ("F55", True, Fraction(8, 7)),
        ("F57", True, Fraction(4, 3)),
        ("F75", False, Fraction(16, 11)),
        ("Heis3", False, Fraction(16, 11)),
        ("M27", False, Fraction(16, 11)),
    ],
)
def test_verify_theorem_b(name, predicted, value):
    G = named_group(name)
    v = verify_theorem_b(G, table=helpers.table_for(G))
    assert v.theorem == "B"
    assert v.threshold == THRESHOLD_B == Fraction(16, 11)
    assert v.predicted is predicted
    assert v.anz == value
    assert v.consistent


def test_theorem_b_order_63_from_corpus():
    paths = [p for p in helpers.corpus_paths() if p.name.startswith("063")]
    assert len(paths) == 2
    for p in paths:
        G = helpers.corpus_group(p)
        v = verify_theorem_b(G, table=helpers.table_for(G))
        assert v.predicted is False
        assert v.anz >= THRESHOLD_B
        assert v.consistent


# ---------------------------------------------------------------------------
# fingerprints

def test_fingerprint_separates_hard_pairs():
    pairs = [
        ("016_dic2_x_c2.json", "016_c4_c4_t_3.json"),
        ("016_d8_c4.json", "016_c2_2_c4.json"),
    ]
    for a, b in pairs:
        Ga = helpers.corpus_group(helpers.CORPUS_DIR / a)
        Gb = helpers.corpus_group(helpers.CORPUS_DIR / b)
        fa = fingerprint(Ga, helpers.table_for(Ga))
        fb = fingerprint(Gb, helpers.table_for(Gb))
        assert fa != fb, (a, b)
        # the classical invariants alone do NOT separate these pairs
        assert fa[:3] == fb[:3]


def test_fingerprint_is_presentation_independent():
    A = named_group("S3")  # permutation generators
    B = generalized_dihedral([3])  # Cayley table route
    fa = fingerprint(A, helpers.table_for(A))
    fb = fingerprint(B, helpers.table_for(B))
    assert fa == fb
    assert fingerprint_str(fa) == fingerprint_str(fb)


def test_fingerprint_str_shape():
    G = named_group("S4")
    s = fingerprint_str(fingerprint(G, helpers.table_for(G)))
    parts = s.split("|")
    assert len(parts) == 8
    assert parts[0] == "24"
    assert parts[2] == "1,1,2,3,3"  # degrees
    assert re.fullmatch(r"[0-9a-f]{12}", parts[-1])


# ---------------------------------------------------------------------------
# lemma suite

def test_lemma_suite_order_and_ids():
    G = named_group("S4")
    results = lemma_suite(G, helpers.table_for(G))
    assert [r.lemma for r in results] == list(LEMMA_IDS)
    assert len(LEMMA_IDS) == 21
    assert all(r.status in ("pass", "fail", "skipped") for r in results)
    assert all(isinstance(r.witness, str) and r.witness for r in results)


@pytest.mark.parametrize("name", ["S3", "S4", "D12", "F21", "Heis3", "A5", "Q8F72"])
def test_lemma_suite_no_failures_on_anchors(name):
    G = named_group(name)
    results = lemma_suite(G, helpers.table_for(G))
    failures = [r.lemma for r in results if r.status == "fail"]
    assert failures == [], (name, failures)


def test_lemma_suite_d12_dichotomy_exclusion():
    G = named_group("D12")
    results = {r.lemma: r for r in lemma_suite(G, helpers.table_for(G))}
    assert results["wolf-dichotomy-anz1"].status == "skipped"
    assert "excluded" in results["wolf-dichotomy-anz1"].witness
    assert results["wolf-dichotomy-counterexample"].status == "pass"


def test_lemma_suite_deterministic():
    G = named_group("S4")
    t = helpers.table_for(G)
    a = lemma_suite(G, t, rng_seed=0)
    b = lemma_suite(G, t, rng_seed=0)
    assert a == b


# ---------------------------------------------------------------------------
# sweeps

def _write_tmp_corpus(tmp_path):
    files = []
    for stem, G in [
        ("s3", named_group("S3")),
        ("q8", named_group("Q8")),
        ("heis3", named_group("Heis3")),
    ]:
        p = tmp_path / f"{stem}.json"
        write_group_file(G, p)
        files.append(p)
    return files


def test_sweep_basic(tmp_path):
    _write_tmp_corpus(tmp_path)
    report = sweep_corpus([tmp_path], SweepOptions(theorem="both", lemmas=True))
    assert report.summary == {
        "groups": 3,
        "consistent": 3,
        "inconsistent": 0,
        "skipped": 0,
    }
    assert [g.fingerprint for g in report.per_group] == sorted(
        g.fingerprint for g in report.per_group
    )
    names = {g.name for g in report.per_group}
    assert names == {"S3", "Q8", "Heis(3)"}
    for g in report.per_group:
        assert g.consistent
        assert g.lemma_results is not None
        assert [r.lemma for r in g.lemma_results] == list(LEMMA_IDS)


def test_sweep_dedup_by_fingerprint(tmp_path):
    _write_tmp_corpus(tmp_path)
    # same group under another name: deduplicated, first in path order wins
    write_group_file(generalized_dihedral([3]), tmp_path / "zz_s3_again.json")
    report = sweep_corpus([tmp_path], SweepOptions())
    assert report.summary["groups"] == 3
    assert "S3" in {g.name for g in report.per_group}


def test_sweep_abelian_groups_have_no_verdicts(tmp_path):
    write_group_file(named_group("C6"), tmp_path / "c6.json")
    report = sweep_corpus([tmp_path], SweepOptions(theorem="both"))
    (g,) = report.per_group
    assert g.tags is None
    assert g.theorem_b_predicted is None
    assert g.consistent
    assert g.anz == 0


def test_sweep_caps_skip(tmp_path):
    _write_tmp_corpus(tmp_path)
    report = sweep_corpus(
        [tmp_path], SweepOptions(caps=Caps(order=8))
    )
    assert report.summary["groups"] == 2  # S3 and Q8 fit; Heis3 skipped
    assert report.summary["skipped"] == 1
    (entry,) = report.skipped
    assert entry.source.endswith("heis3.json")
    assert "exceeds cap" in entry.reason


def test_sweep_malformed_file_raises(tmp_path):
    (tmp_path / "bad.json").write_text("{ not json", encoding="utf-8")
    with pytest.raises(ParseError):
        sweep_corpus([tmp_path], SweepOptions())


def test_sweep_deterministic_across_jobs(tmp_path):
    _write_tmp_corpus(tmp_path)
    opts1 = SweepOptions(theorem="both", lemmas=True, jobs=1)
    opts2 = SweepOptions(theorem="both", lemmas=True, jobs=3)
    r1 = sweep_corpus([tmp_path], opts1)
    r2 = sweep_corpus([tmp_path], opts2)
    assert r1.to_json() == r2.to_json()
    assert r1.to_csv() == r2.to_csv()


def test_report_csv_shape(tmp_path):
    _write_tmp_corpus(tmp_path)
    report = sweep_corpus([tmp_path], SweepOptions(lemmas=True, open_questions=True))
    lines = report.to_csv().splitlines()
    assert len(lines) == 4
    import csv

    rows = list(csv.reader(lines))
    assert len(rows[0]) == 15
    assert all(len(row) == 15 for row in rows)
    assert rows[0][0] == "fingerprint"


def test_report_json_roundtrip(tmp_path):
    import json

    _write_tmp_corpus(tmp_path)
    report = sweep_corpus([tmp_path], SweepOptions(lemmas=True))
    payload = json.loads(report.to_json())
    assert set(payload) == {"summary", "per_group", "skipped"}
    assert payload["summary"]["groups"] == 3
    anz_by_name = {g["name"]: g["anz"] for g in payload["per_group"]}
    assert anz_by_name["S3"] == "1/3"
    assert anz_by_name["Heis(3)"] == "16/11"
    assert anz_by_name["Q8"] == "3/5"
