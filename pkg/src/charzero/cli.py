"""Command-line surface.

Subcommands::

    charzero table <group.json>          exact character table
    charzero stats <group.json>          zero statistics (anz, sigma, m)
    charzero classify <group.json>       verdicts against the classification
    charzero camina <group.json>         Camina detection + case analysis
    charzero frobenius <group.json>      Frobenius kernel/complement data
    charzero extraspecial <group.json>   extraspecial parameters + anz formula
    charzero wolf <group.json> [--phi I] maximal extendible subgroup per phi
    charzero families build <family> <params...>   emit a group JSON file
    charzero sweep <paths...>            verdict/lemma sweep over group files
    charzero selftest                    bundled golden-value suite

``-`` names stdin wherever a group file is expected. Machine formats render
rationals as "num/den"; decimals appear only in pretty output and are
advisory. Exit codes: 0 success, 1 an inconsistency or golden-value mismatch
was found, 2 usage or parse errors.

Caps precedence: explicit ``--*-cap`` flag > ``CHARZERO_CAPS`` environment
variable > built-in defaults.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .caps import Caps, caps_from_env
from .chartab import CharacterTable, character_table
from .classify import (
    SweepOptions,
    analyze_group,
    sweep_corpus,
    theorem_a_class,
    verify_theorem_a,
    verify_theorem_b,
)
from .errors import CharzeroError
from .families import FamilySpec, build_family
from .groupio import (
    _decimal_str,
    frac_str,
    group_json_text,
    load_group_file,
    stats_to_dict,
    table_to_dict,
)
from .groups import FiniteGroup, derived_subgroup
from .structure import (
    dark_scoppola_case,
    extraspecial_parameters,
    frobenius_structure,
    is_camina,
    is_camina_by_characters,
    wolf_subgroup,
)
from .zerostats import zero_stats


# ---------------------------------------------------------------------------
# argument parsing

def _add_caps_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--closure-cap", type=int, metavar="N", default=None)
    sp.add_argument("--order-cap", type=int, metavar="N", default=None)
    sp.add_argument("--prime-cap", type=int, metavar="N", default=None)


def _add_format_flag(sp: argparse.ArgumentParser, choices: tuple[str, ...]) -> None:
    sp.add_argument("--format", choices=choices, default="pretty")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charzero",
        description="Exact character tables and zero statistics for finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def group_cmd(name: str, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("group", help='group JSON file, or "-" for stdin')
        _add_caps_flags(sp)
        return sp

    sp = group_cmd("table", "print the exact character table")
    _add_format_flag(sp, ("pretty", "json"))

    sp = group_cmd("stats", "print zero statistics")
    _add_format_flag(sp, ("pretty", "json"))

    sp = group_cmd("classify", "compare structure predictions against exact anz")
    _add_format_flag(sp, ("pretty", "json"))
    sp.add_argument("--theorem", choices=("a", "b", "both"), default="both")
    sp.add_argument("--lemmas", action="store_true")
    sp.add_argument("--open-questions", action="store_true")

    sp = group_cmd("camina", "Camina detection, dual test, case analysis")
    _add_format_flag(sp, ("pretty", "json"))

    sp = group_cmd("frobenius", "Frobenius kernel/complement structure")
    _add_format_flag(sp, ("pretty", "json"))

    sp = group_cmd("extraspecial", "extraspecial parameters and anz formula")
    _add_format_flag(sp, ("pretty", "json"))

    sp = group_cmd("wolf", "maximal subgroup to which phi extends invariantly")
    _add_format_flag(sp, ("pretty", "json"))
    sp.add_argument(
        "--phi",
        type=int,
        default=None,
        metavar="INDEX",
        help="index into Irr(G') (default: all)",
    )

    spf = sub.add_parser("families", help="build groups from the bundled families")
    subf = spf.add_subparsers(dest="families_command", required=True)
    spb = subf.add_parser("build", help="emit a group-definition JSON document")
    spb.add_argument(
        "family",
        help="singer_frobenius | generalized_dihedral | extraspecial | named",
    )
    spb.add_argument("params", nargs="*", help="family parameters")
    spb.add_argument("--out", default="-", help='output file (default "-": stdout)')
    _add_caps_flags(spb)

    sp = sub.add_parser("sweep", help="run verdict/lemma sweeps over group files")
    sp.add_argument("paths", nargs="+", help="group JSON files and/or directories")
    sp.add_argument("--theorem", choices=("a", "b", "both"), default="both")
    sp.add_argument("--lemmas", action="store_true")
    sp.add_argument("--open-questions", action="store_true")
    sp.add_argument("--jobs", type=int, default=1, metavar="N")
    sp.add_argument(
        "--format", choices=("pretty", "json", "csv", "jsonl"), default="pretty"
    )
    sp.add_argument("--out", default="-", help='output file (default "-": stdout)')
    _add_caps_flags(sp)

    sp = sub.add_parser("selftest", help="verify the bundled golden values")
    _add_caps_flags(sp)

    return parser


def _resolve_caps(ns: argparse.Namespace) -> Caps:
    caps = caps_from_env()
    return caps.with_overrides(
        closure=getattr(ns, "closure_cap", None),
        order=getattr(ns, "order_cap", None),
        prime=getattr(ns, "prime_cap", None),
    )


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


# ---------------------------------------------------------------------------
# pretty renderings

def _grid(columns: list[list[str]]) -> str:
    widths = [max(len(cell) for cell in col) for col in columns]
    height = len(columns[0])
    lines = []
    for r in range(height):
        lines.append(
            "  ".join(col[r].rjust(w) for col, w in zip(columns, widths)).rstrip()
        )
    return "\n".join(lines)


def _render_table_pretty(table: CharacterTable) -> str:
    G = table.group
    k = table.k
    header = (
        f"group: {G.name}  order: {G.order}  classes: {k}"
        f"  conductor: {table.conductor}"
    )
    label_col = ["class", "size", "order"] + [f"chi{a}" for a in range(k)]
    columns = [label_col]
    for j in range(k):
        col = [f"C{j}", str(table.class_sizes[j]), str(table.class_orders[j])]
        for chi in table.characters:
            col.append(_decimal_str(chi.value(j).to_complex()))
        columns.append(col)
    return header + "\n" + _grid(columns) + "\n"


def _render_stats_pretty(table: CharacterTable) -> str:
    s = zero_stats(table)
    G = table.group
    lines = [
        f"group: {G.name}  order: {G.order}  classes: {s.k}",
        f"zero counts: {list(s.zero_counts)}",
        f"anz = {frac_str(s.anz)} ({float(s.anz):.10g})",
        f"sigma = {frac_str(s.sigma)} ({float(s.sigma):.10g})",
        f"sigma' = {frac_str(s.sigma_prime)} ({float(s.sigma_prime):.10g})",
        f"m(G) = {s.m_max}",
    ]
    return "\n".join(lines) + "\n"


def _render_report_pretty(d: dict) -> str:
    lines = [f"group: {d['name']}  order: {d['order']}  anz = {d['anz']}"]
    pa = d["predicted"]["theorem_a"]
    if pa is not None:
        lines.append(
            "theorem A tags: " + ("+".join(pa) if pa else "(none)")
        )
    pb = d["predicted"]["theorem_b"]
    if pb is not None:
        lines.append(f"theorem B predicted: {str(pb).lower()}")
    lines.append("consistent: " + ("yes" if d["consistent"] else "NO"))
    if d["inconsistencies"]:
        lines.append("inconsistencies: " + ", ".join(d["inconsistencies"]))
    if d.get("lemma_results") is not None:
        statuses = [r["status"] for r in d["lemma_results"]]
        lines.append(
            f"lemma suite: {statuses.count('pass')} pass,"
            f" {statuses.count('fail')} fail, {statuses.count('skipped')} skipped"
        )
        for r in d["lemma_results"]:
            if r["status"] == "fail":
                lines.append(f"  FAIL {r['lemma']}: {r['witness']}")
    if "open_questions" in d:
        oq = d["open_questions"]
        lines.append(
            f"fitting height: {oq['fitting_height']}  solvable: {oq['solvable']}"
            + (
                f"  p-group order: {oq['p_group_order']}"
                if oq["p_group_order"] is not None
                else ""
            )
        )
    return "\n".join(lines) + "\n"


def _print_payload(payload: dict, fmt: str, pretty_fn) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(pretty_fn(payload))


# ---------------------------------------------------------------------------
# subcommand bodies

def _cmd_table(ns: argparse.Namespace, caps: Caps) -> int:
    G = load_group_file(ns.group, caps=caps)
    table = character_table(G, caps=caps)
    if ns.format == "json":
        sys.stdout.write(json.dumps(table_to_dict(table), indent=2) + "\n")
    else:
        sys.stdout.write(_render_table_pretty(table))
    return 0


def _cmd_stats(ns: argparse.Namespace, caps: Caps) -> int:
    G = load_group_file(ns.group, caps=caps)
    table = character_table(G, caps=caps)
    if ns.format == "json":
        sys.stdout.write(json.dumps(stats_to_dict(table), indent=2) + "\n")
    else:
        sys.stdout.write(_render_stats_pretty(table))
    return 0


def _cmd_classify(ns: argparse.Namespace, caps: Caps) -> int:
    G = load_group_file(ns.group, caps=caps)
    options = SweepOptions(
        theorem=ns.theorem,
        lemmas=ns.lemmas,
        open_questions=ns.open_questions,
        caps=caps,
    )
    report = analyze_group(G, options)
    d = report.to_dict()
    _print_payload(d, ns.format, _render_report_pretty)
    failures = [
        r for r in (report.lemma_results or ()) if r.status == "fail"
    ]
    return 0 if report.consistent and not failures else 1


def _cmd_camina(ns: argparse.Namespace, caps: Caps) -> int:
    G = load_group_file(ns.group, caps=caps)
    table = character_table(G, caps=caps)
    camina = is_camina(G)
    by_chars = is_camina_by_characters(G, table)
    payload = {
        "group": G.name,
        "order": G.order,
        "is_camina": camina,
        "by_characters": by_chars,
        "tests_agree": camina == by_chars,
        "case": dark_scoppola_case(G, caps=caps) if camina else None,
    }

    def pretty(d: dict) -> str:
        lines = [
            f"group: {d['group']}  order: {d['order']}",
            f"camina (class test): {str(d['is_camina']).lower()}",
            f"camina (character test): {str(d['by_characters']).lower()}",
        ]
        if d["case"] is not None:
            lines.append(f"case: {d['case']}")
        return "\n".join(lines) + "\n"

    _print_payload(payload, ns.format, pretty)
    return 0 if payload["tests_agree"] else 1


def _cmd_frobenius(ns: argparse.Namespace, caps: Caps) -> int:
    G = load_group_file(ns.group, caps=caps)
    data = frobenius_structure(G, caps=caps)
    payload: dict = {"group": G.name, "order": G.order}
    if data is None:
        payload["frobenius"] = False
    else:
        payload.update(
            {
                "frobenius": True,
                "kernel_order": data.kernel.order,
                "complement_order": data.complement_order,
                "complement_cyclic": data.complement_cyclic,
            }
        )

    def pretty(d: dict) -> str:
        if not d["frobenius"]:
            return f"group: {d['group']}  order: {d['order']}\nnot a Frobenius group\n"
        return (
            f"group: {d['group']}  order: {d['order']}\n"
            f"Frobenius: kernel order {d['kernel_order']},"
            f" complement order {d['complement_order']}"
            f" ({'cyclic' if d['complement_cyclic'] else 'non-cyclic'})\n"
        )

    _print_payload(payload, ns.format, pretty)
    return 0


def _cmd_extraspecial(ns: argparse.Namespace, caps: Caps) -> int:
    G = load_group_file(ns.group, caps=caps)
    es = extraspecial_parameters(G)
    payload: dict = {"group": G.name, "order": G.order}
    if es is None:
        payload["extraspecial"] = False
    else:
        p, n = es
        formula = Fraction((p - 1) * (p ** (2 * n) - 1), p ** (2 * n) + p - 1)
        table = character_table(G, caps=caps)
        value = zero_stats(table).anz
        payload.update(
            {
                "extraspecial": True,
                "p": p,
                "n": n,
                "anz": frac_str(value),
                "anz_formula": frac_str(formula),
                "matches_formula": value == formula,
            }
        )

    def pretty(d: dict) -> str:
        if not d["extraspecial"]:
            return f"group: {d['group']}  order: {d['order']}\nnot extraspecial\n"
        return (
            f"group: {d['group']}  order: {d['order']}\n"
            f"extraspecial with p = {d['p']}, n = {d['n']}"
            f" (order p^(2n+1))\n"
            f"anz = {d['anz']}, closed form (p-1)(p^2n-1)/(p^2n+p-1)"
            f" = {d['anz_formula']}"
            f" [{'match' if d['matches_formula'] else 'MISMATCH'}]\n"
        )

    _print_payload(payload, ns.format, pretty)
    return 0 if es is None or payload["matches_formula"] else 1


def _cmd_wolf(ns: argparse.Namespace, caps: Caps) -> int:
    G = load_group_file(ns.group, caps=caps)
    table = character_table(G, caps=caps)
    D = derived_subgroup(G)
    dtable = character_table(D.as_group, caps=caps)
    if ns.phi is None:
        indices = list(range(dtable.k))
    else:
        if not 0 <= ns.phi < dtable.k:
            raise CharzeroError(
                f"--phi {ns.phi} out of range: Irr(G') has {dtable.k} characters"
            )
        indices = [ns.phi]
    cache: dict = {}
    rows = []
    for i in indices:
        data = wolf_subgroup(
            G, table, dtable.characters[i], caps=caps, table_cache=cache
        )
        rows.append(
            {
                "phi": i,
                "phi_degree": int(dtable.characters[i].degree),
                "U_order": data.U.order,
                "index_over_derived": data.U.order // D.order,
                "num_chars_over_phi": data.num_chars_over_phi,
            }
        )
    payload = {
        "group": G.name,
        "order": G.order,
        "derived_order": D.order,
        "rows": rows,
    }

    def pretty(d: dict) -> str:
        lines = [
            f"group: {d['group']}  order: {d['order']}"
            f"  |G'| = {d['derived_order']}"
        ]
        for r in d["rows"]:
            lines.append(
                f"phi {r['phi']} (degree {r['phi_degree']}):"
                f" U order {r['U_order']},"
                f" |U:G'| = {r['index_over_derived']},"
                f" irreducibles over phi: {r['num_chars_over_phi']}"
            )
        return "\n".join(lines) + "\n"

    _print_payload(payload, ns.format, pretty)
    return 0


_FAMILY_ALIASES = {
    "extraspecial_group": "extraspecial",
    "named_group": "named",
}


def _cmd_families(ns: argparse.Namespace, caps: Caps) -> int:
    family = _FAMILY_ALIASES.get(ns.family, ns.family)
    spec = FamilySpec(family=family, parameters=tuple(ns.params))
    G = build_family(spec, caps=caps)
    _emit(group_json_text(G), ns.out)
    return 0


def _cmd_sweep(ns: argparse.Namespace, caps: Caps) -> int:
    options = SweepOptions(
        theorem=ns.theorem,
        lemmas=ns.lemmas,
        open_questions=ns.open_questions,
        jobs=ns.jobs,
        caps=caps,
    )
    report = sweep_corpus(ns.paths, options)

    if ns.format == "json":
        _emit(report.to_json(), ns.out)
    elif ns.format == "csv":
        _emit(report.to_csv(), ns.out)
    elif ns.format == "jsonl":
        if ns.out == "-":
            for g in report.per_group:
                sys.stdout.write(
                    json.dumps(g.to_dict(), separators=(",", ":")) + "\n"
                )
                sys.stdout.flush()
            sys.stdout.write(
                json.dumps(
                    {
                        "summary": report.summary,
                        "skipped": [
                            {"source": s.source, "reason": s.reason}
                            for s in report.skipped
                        ],
                    },
                    separators=(",", ":"),
                )
                + "\n"
            )
            sys.stdout.flush()
        else:
            lines = [
                json.dumps(g.to_dict(), separators=(",", ":"))
                for g in report.per_group
            ]
            lines.append(
                json.dumps(
                    {
                        "summary": report.summary,
                        "skipped": [
                            {"source": s.source, "reason": s.reason}
                            for s in report.skipped
                        ],
                    },
                    separators=(",", ":"),
                )
            )
            _emit("\n".join(lines) + "\n", ns.out)
    else:
        lines = []
        for g in report.per_group:
            d = g.to_dict()
            bits = [f"{d['name']} (order {d['order']}): anz = {d['anz']}"]
            pa = d["predicted"]["theorem_a"]
            if pa is not None:
                bits.append("A: " + ("+".join(pa) if pa else "none"))
            pb = d["predicted"]["theorem_b"]
            if pb is not None:
                bits.append(f"B: {str(pb).lower()}")
            if d.get("lemma_results") is not None:
                fails = [
                    r["lemma"] for r in d["lemma_results"] if r["status"] == "fail"
                ]
                if fails:
                    bits.append("lemma failures: " + ",".join(fails))
            bits.append("ok" if d["consistent"] else "INCONSISTENT")
            lines.append("  ".join(bits))
        for s in report.skipped:
            lines.append(f"skipped {s.source}: {s.reason}")
        summary = report.summary
        lemma_fail_groups = sum(
            1
            for g in report.per_group
            if any(r.status == "fail" for r in (g.lemma_results or ()))
        )
        lines.append(
            f"groups: {summary['groups']}  consistent: {summary['consistent']}"
            f"  inconsistent: {summary['inconsistent']}"
            f"  lemma-failing: {lemma_fail_groups}"
            f"  skipped: {summary['skipped']}"
        )
        _emit("\n".join(lines) + "\n", ns.out)

    lemma_failures = any(
        r.status == "fail"
        for g in report.per_group
        for r in (g.lemma_results or ())
    )
    return 1 if report.summary["inconsistent"] or lemma_failures else 0


# ---------------------------------------------------------------------------
# selftest

def _selftest_checks(caps: Caps):
    """Golden checks for the bundled reference values. Each yields
    (description, thunk); the thunk returns None on success and a detail
    string on mismatch."""
    from .families import (
        extraspecial_group,
        named_group,
        singer_frobenius,
    )
    from .zerostats import m_max

    tables: dict[str, CharacterTable] = {}

    def table_of(G: FiniteGroup) -> CharacterTable:
        t = tables.get(G.name)
        if t is None:
            t = character_table(G, caps=caps)
            tables[G.name] = t
        return t

    def expect_anz(G: FiniteGroup, expected: Fraction) -> Optional[str]:
        got = zero_stats(table_of(G)).anz
        if got != expected:
            return f"anz = {frac_str(got)}, expected {frac_str(expected)}"
        return None

    def check_a5() -> Optional[str]:
        G = named_group("A5")
        err = expect_anz(G, Fraction(1))
        if err:
            return err
        rendered = stats_to_dict(table_of(G))["anz"]
        if rendered != "1/1":
            return f'anz renders as {rendered!r}, expected "1/1"'
        return None

    yield ('anz(A5) = 1, rendered "1/1"', check_a5)

    yield (
        "anz(PSL(2,7)) = 4/3",
        lambda: expect_anz(named_group("PSL(2,7)"), Fraction(4, 3)),
    )

    def check_f75() -> Optional[str]:
        G = singer_frobenius(5, 2, 3, caps=caps)
        if G.order != 75:
            return f"order {G.order}, expected 75"
        err = expect_anz(G, Fraction(16, 11))
        if err:
            return err
        rendered = stats_to_dict(table_of(G))["anz"]
        if rendered != "16/11":
            return f'anz renders as {rendered!r}, expected "16/11"'
        return None

    yield ("singer_frobenius(5,2,3): order 75, anz = 16/11", check_f75)

    def check_f21() -> Optional[str]:
        G = singer_frobenius(7, 1, 3, caps=caps)
        if G.order != 21:
            return f"order {G.order}, expected 21"
        case = dark_scoppola_case(G, caps=caps)
        if case != "frobenius-cyclic":
            return f"case {case!r}, expected 'frobenius-cyclic'"
        return None

    yield (
        "singer_frobenius(7,1,3) = F21; Camina case frobenius-cyclic",
        check_f21,
    )

    def check_f55() -> Optional[str]:
        G = singer_frobenius(11, 1, 5, caps=caps)
        if G.order != 55:
            return f"order {G.order}, expected 55"
        v = verify_theorem_b(G, table=table_of(G), caps=caps)
        if not (v.predicted and v.consistent):
            return f"predicted={v.predicted} consistent={v.consistent}"
        return None

    yield ("singer_frobenius(11,1,5) = F55 satisfies the odd-order bound", check_f55)

    def check_es(p: int, n: int, variant: str) -> Optional[str]:
        G = extraspecial_group(p, n, variant, caps=caps)
        formula = Fraction((p - 1) * (p ** (2 * n) - 1), p ** (2 * n) + p - 1)
        return expect_anz(G, formula)

    yield (
        "extraspecial(2,1,plus) = D8: anz = 3/5 = closed form",
        lambda: check_es(2, 1, "plus"),
    )
    yield (
        "extraspecial(2,2,plus): anz = 15/17 = closed form",
        lambda: check_es(2, 2, "plus"),
    )
    yield (
        "extraspecial(2,2,minus): anz = 15/17 = closed form",
        lambda: check_es(2, 2, "minus"),
    )
    yield (
        "extraspecial(3,1,exponent_p): anz = 16/11 = closed form",
        lambda: check_es(3, 1, "exponent_p"),
    )

    def check_m27() -> Optional[str]:
        G = named_group("M27")
        es = extraspecial_parameters(G)
        if es != (3, 1):
            return f"extraspecial_parameters = {es}, expected (3, 1)"
        return expect_anz(G, Fraction(16, 11))

    yield ("M27 (exponent 9) is extraspecial with anz = 16/11", check_m27)

    def check_s3() -> Optional[str]:
        G = named_group("S3")
        if m_max(table_of(G)) != 1:
            return f"m(S3) = {m_max(table_of(G))}, expected 1"
        data = frobenius_structure(G, caps=caps)
        if data is None or data.complement_order != 2:
            return "expected Frobenius with complement of order 2"
        if data.kernel.order % 2 == 0 or not data.kernel.as_group.is_abelian:
            return "expected odd abelian kernel"
        return None

    yield ("m(S3) = 1 with complement-2 Frobenius structure", check_s3)

    def check_s4() -> Optional[str]:
        G = named_group("S4")
        v = verify_theorem_a(G, table=table_of(G), caps=caps)
        cls = v.predicted
        if cls.tags != ("s4",):
            return f"tags {cls.tags}, expected ('s4',)"
        if v.anz != Fraction(4, 5) or not v.consistent:
            return f"anz={frac_str(v.anz)} consistent={v.consistent}"
        return None

    yield ("S4 carries exactly the s4 tag; anz = 4/5 < 1", check_s4)

    def check_a5_class() -> Optional[str]:
        G = named_group("A5")
        cls = theorem_a_class(G, table=table_of(G), caps=caps)
        if cls.tags:
            return f"tags {cls.tags}, expected none"
        v = verify_theorem_a(G, table=table_of(G), caps=caps)
        if v.anz < 1 or not v.consistent:
            return f"anz={frac_str(v.anz)} consistent={v.consistent}"
        return None

    yield ("A5: no class tag and anz = 1 is not below 1 (boundary)", check_a5_class)

    def check_f75_b() -> Optional[str]:
        G = singer_frobenius(5, 2, 3, caps=caps)
        v = verify_theorem_b(G, table=table_of(G), caps=caps)
        if v.predicted:
            return "predicted True, expected False"
        if v.anz != Fraction(16, 11) or not v.consistent:
            return f"anz={frac_str(v.anz)} consistent={v.consistent}"
        return None

    yield ("F75: predicted outside the bound, anz exactly 16/11", check_f75_b)

    def check_d12() -> Optional[str]:
        from .classify import lemma_suite

        G = named_group("D12")
        results = {r.lemma: r for r in lemma_suite(G, table_of(G), caps=caps)}
        dichotomy = results["wolf-dichotomy-anz1"]
        if dichotomy.status != "skipped":
            return f"wolf-dichotomy-anz1 status {dichotomy.status}, expected skipped"
        counter = results["wolf-dichotomy-counterexample"]
        if counter.status != "pass":
            return (
                f"wolf-dichotomy-counterexample status {counter.status}:"
                f" {counter.witness}"
            )
        failures = [r.lemma for r in results.values() if r.status == "fail"]
        if failures:
            return f"lemma failures: {failures}"
        return None

    yield (
        "D12 is excluded from the dichotomy and witnesses G' < U < G",
        check_d12,
    )

    def check_sigma_prime() -> Optional[str]:
        s = zero_stats(table_of(named_group("A5")))
        if s.sigma_prime != Fraction(1, 5):
            return f"sigma' = {frac_str(s.sigma_prime)}, expected 1/5"
        return None

    yield ("sigma'(A5) = 1/5", check_sigma_prime)


def _cmd_selftest(ns: argparse.Namespace, caps: Caps) -> int:
    failures = 0
    total = 0
    for description, thunk in _selftest_checks(caps):
        total += 1
        try:
            detail = thunk()
        except Exception as exc:  # noqa: BLE001 - report, keep testing
            detail = f"{type(exc).__name__}: {exc}"
        if detail is None:
            sys.stdout.write(f"ok   - {description}\n")
        else:
            failures += 1
            sys.stdout.write(f"FAIL - {description} ({detail})\n")
    sys.stdout.write(f"selftest: {total - failures}/{total} ok\n")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# entry point

_COMMANDS = {
    "table": _cmd_table,
    "stats": _cmd_stats,
    "classify": _cmd_classify,
    "camina": _cmd_camina,
    "frobenius": _cmd_frobenius,
    "extraspecial": _cmd_extraspecial,
    "wolf": _cmd_wolf,
    "families": _cmd_families,
    "sweep": _cmd_sweep,
    "selftest": _cmd_selftest,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        caps = _resolve_caps(ns)
        return _COMMANDS[ns.command](ns, caps)
    except BrokenPipeError:
        return 0
    except CharzeroError as exc:
        print(f"charzero: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
