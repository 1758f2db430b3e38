"""charzero: exact character tables for finite groups and the statistics of
their zeros.

Everything numeric in the core is exact: group elements are indices into a
validated finite group, character values are cyclotomic integers with
rational (in fact integral) coordinates, and all averages are
`fractions.Fraction`. Floating point appears only in advisory decimal
renderings.

Quick start::

    from charzero import named_group, character_table, zero_stats

    G = named_group("A5")
    table = character_table(G)
    print(zero_stats(table).anz)      # Fraction(1, 1)
"""

from .caps import Caps, caps_from_env
from .chartab import Character, CharacterTable, character_table
from .classify import (
    LEMMA_IDS,
    GroupReport,
    LemmaResult,
    Report,
    SweepOptions,
    TheoremAClass,
    Verdict,
    analyze_group,
    fingerprint,
    fingerprint_str,
    lemma_suite,
    sweep_corpus,
    theorem_a_class,
    verify_theorem_a,
    verify_theorem_b,
)
from .errors import (
    AbelianInput,
    CapExceeded,
    CharzeroError,
    ClosureCapExceeded,
    DegenerateDerived,
    EvenOrder,
    ParseError,
)
from .families import (
    FamilySpec,
    build_family,
    extraspecial_group,
    generalized_dihedral,
    named_group,
    singer_frobenius,
)
from .groupio import (
    frac_str,
    group_json_text,
    group_to_dict,
    load_group_file,
    parse_group_json,
    stats_to_dict,
    table_to_dict,
    write_group_file,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    conjugacy_classes,
    derived_subgroup,
    direct_product,
    group_from_generators,
    group_from_table,
    normal_subgroups,
    quotient_group,
)
from .structure import (
    FrobeniusData,
    WolfData,
    dark_scoppola_case,
    extraspecial_parameters,
    frobenius_structure,
    is_camina,
    is_camina_by_characters,
    is_extraspecial,
    wolf_subgroup,
)
from .zerostats import ZeroStats, anz, anz_subset, m_max, zero_count, zero_stats

__version__ = "0.1.0"

__all__ = [
    "AbelianInput",
    "CapExceeded",
    "Caps",
    "Character",
    "CharacterTable",
    "CharzeroError",
    "ClosureCapExceeded",
    "DegenerateDerived",
    "EvenOrder",
    "FamilySpec",
    "FiniteGroup",
    "FrobeniusData",
    "GroupReport",
    "LEMMA_IDS",
    "LemmaResult",
    "ParseError",
    "Report",
    "Subgroup",
    "SweepOptions",
    "TheoremAClass",
    "Verdict",
    "WolfData",
    "ZeroStats",
    "analyze_group",
    "anz",
    "anz_subset",
    "build_family",
    "caps_from_env",
    "character_table",
    "conjugacy_classes",
    "dark_scoppola_case",
    "derived_subgroup",
    "direct_product",
    "extraspecial_group",
    "extraspecial_parameters",
    "fingerprint",
    "fingerprint_str",
    "frac_str",
    "frobenius_structure",
    "generalized_dihedral",
    "group_from_generators",
    "group_from_table",
    "group_json_text",
    "group_to_dict",
    "is_camina",
    "is_camina_by_characters",
    "is_extraspecial",
    "lemma_suite",
    "load_group_file",
    "m_max",
    "named_group",
    "normal_subgroups",
    "parse_group_json",
    "quotient_group",
    "singer_frobenius",
    "stats_to_dict",
    "sweep_corpus",
    "table_to_dict",
    "theorem_a_class",
    "verify_theorem_a",
    "verify_theorem_b",
    "write_group_file",
    "zero_count",
    "zero_stats",
]
