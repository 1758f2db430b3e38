"""Group files, exact renderings, and parse diagnostics."""
from __future__ import annotations

import json
from fractions import Fraction

import pytest

import helpers
from charzero.errors import NotAssociative, ParseError
from charzero.families import named_group
from charzero.groupio import (
    frac_str,
    group_json_text,
    group_to_dict,
    load_group_file,
    parse_group_json,
    stats_to_dict,
    table_to_dict,
    value_to_dict,
    write_group_file,
)
from charzero.classify import fingerprint


# ---------------------------------------------------------------------------
# frac_str

def test_frac_str_always_explicit():
    assert frac_str(Fraction(1)) == "1/1"
    assert frac_str(Fraction(16, 11)) == "16/11"
    assert frac_str(Fraction(-1, 2)) == "-1/2"
    assert frac_str(Fraction(0)) == "0/1"
    assert frac_str(Fraction(4, 6)) == "2/3"


# ---------------------------------------------------------------------------
# parse errors

def parse_err(text: str) -> str:
    with pytest.raises(ParseError) as ei:
        parse_group_json(text)
    return str(ei.value)


def test_invalid_json_reports_byte_offset():
    msg = parse_err('{"name": }')
    assert "invalid JSON at byte 9" in msg


def test_top_level_must_be_object():
    assert "top-level" in parse_err("[1, 2, 3]")


def test_name_type():
    assert "name must be a string" in parse_err(
        '{"name": 7, "cayley": [[0]]}'
    )


def test_exactly_one_body_key():
    msg = parse_err('{"name": "X"}')
    assert 'exactly one of "generators" and "cayley"' in msg
    msg = parse_err('{"generators": [[0]], "cayley": [[0]]}')
    assert 'exactly one of "generators" and "cayley"' in msg


def test_generator_shape_errors():
    assert "lists of integers" in parse_err('{"generators": [[0, "a"]]}')
    assert "lists of integers" in parse_err('{"generators": 3}')
    assert "degree must be an integer" in parse_err(
        '{"generators": [[0, 1]], "degree": "two"}'
    )
    assert "explicit degree" in parse_err('{"generators": []}')
    assert "length degree = 3" in parse_err(
        '{"generators": [[1, 0]], "degree": 3}'
    )


def test_generator_not_permutation():
    with pytest.raises(ParseError):
        parse_group_json('{"generators": [[0, 0]]}')


def test_cayley_shape_errors():
    assert "square table of integers" in parse_err('{"cayley": "x"}')
    assert "square table of integers" in parse_err('{"cayley": [[0, "x"]]}')


def test_cayley_group_axiom_errors_are_not_parse_errors():
    # a structurally valid JSON table that is not a group fails with the
    # specific group-axiom error, not a ParseError
    bad = [[0, 1, 2, 3, 4],
           [1, 0, 3, 4, 2],
           [2, 4, 0, 1, 3],
           [3, 2, 4, 0, 1],
           [4, 3, 1, 2, 0]]
    with pytest.raises(NotAssociative):
        parse_group_json(json.dumps({"cayley": bad}))


def test_load_missing_file(tmp_path):
    with pytest.raises(ParseError) as ei:
        load_group_file(tmp_path / "nope.json")
    assert "nope.json" in str(ei.value)


def test_parse_error_carries_source(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{", encoding="utf-8")
    with pytest.raises(ParseError) as ei:
        load_group_file(p)
    assert "broken.json" in str(ei.value)


# ---------------------------------------------------------------------------
# round-trips

def test_roundtrip_permutation_group(tmp_path):
    G = named_group("A4")
    p = tmp_path / "a4.json"
    write_group_file(G, p)
    data = json.loads(p.read_text())
    assert set(data) == {"name", "degree", "generators"}
    H = load_group_file(p)
    assert H.order == 12
    assert H.name == "A4"
    assert fingerprint(G, helpers.table_for(G)) == fingerprint(
        H, helpers.table_for(H)
    )


def test_roundtrip_cayley_group(tmp_path):
    G = named_group("Dic3")  # realized through a Cayley table
    p = tmp_path / "dic3.json"
    write_group_file(G, p)
    data = json.loads(p.read_text())
    assert "cayley" in data
    assert len(data["cayley"]) == 12
    H = load_group_file(p)
    assert H.order == 12
    assert fingerprint(G, helpers.table_for(G)) == fingerprint(
        H, helpers.table_for(H)
    )


def test_default_name_is_file_stem(tmp_path):
    p = tmp_path / "mygroup.json"
    p.write_text('{"cayley": [[0, 1], [1, 0]]}', encoding="utf-8")
    assert load_group_file(p).name == "mygroup"


def test_group_json_text_is_single_line():
    text = group_json_text(named_group("S3"))
    assert text.endswith("\n")
    assert text.count("\n") == 1
    json.loads(text)


# ---------------------------------------------------------------------------
# machine renderings

def test_value_to_dict_exact_and_decimal():
    G = named_group("S3")
    table = helpers.table_for(G)
    chi2 = max(table.characters, key=lambda c: c.degree)
    j_reflection = next(
        j for j in range(table.k) if table.class_orders[j] == 2
    )
    d = value_to_dict(chi2.value(j_reflection))
    assert d["coeffs"][0] == 0 and all(c == 0 for c in d["coeffs"])
    assert d["decimal"] == "0"
    d = value_to_dict(chi2.value(table.partition.class_of[0]))
    assert d["decimal"] == "2"
    assert d["conductor"] == 6


def test_table_to_dict_shape():
    G = named_group("Q8")
    table = helpers.table_for(G)
    d = table_to_dict(table)
    assert d["group"] == "Q8"
    assert d["order"] == 8
    assert d["k"] == 5
    assert d["conductor"] == 4
    assert len(d["classes"]) == 5
    assert sum(c["size"] for c in d["classes"]) == 8
    assert len(d["characters"]) == 5
    for a, ch in enumerate(d["characters"]):
        assert ch["index"] == a
        assert len(ch["values"]) == 5
    degrees = sorted(ch["degree"] for ch in d["characters"])
    assert degrees == [1, 1, 1, 1, 2]
    # identity class has the degree in the first coefficient
    j0 = next(c["index"] for c in d["classes"] if c["representative"] == 0)
    for ch in d["characters"]:
        assert ch["values"][j0]["coeffs"][0] == ch["degree"]
    json.dumps(d)  # serializable


def test_stats_to_dict_shape():
    G = named_group("A5")
    d = stats_to_dict(helpers.table_for(G))
    assert d == {
        "group": "A5",
        "order": 60,
        "k": 5,
        "zero_counts": d["zero_counts"],
        "anz": "1/1",
        "sigma": "4/5",
        "sigma_prime": "1/5",
        "m_max": 2,
    }
    assert sorted(d["zero_counts"]) == [0, 1, 1, 1, 2]
    json.dumps(d)


def test_group_to_dict_realizations():
    d = group_to_dict(named_group("A5"))
    assert "generators" in d and d["degree"] == 5
    d = group_to_dict(named_group("Q8"))
    assert "cayley" in d
