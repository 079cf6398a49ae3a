"""Finite-field brute-force oracle for the torus-link counts."""

from .census import (
    STAB_LABELS,
    CensusEntry,
    OrbitCensus,
    centralizer,
    classify_stab_pair,
    count_solutions,
    irreducible_pair_count,
    lambda_orbit_count,
    lambda_orbit_count_bruteforce,
    link_solutions,
    orbit_census,
    power_index,
    stab_label,
    support_components,
    support_histogram,
    thread_count,
)
from .fqmat import (
    BUDGET,
    BudgetExceeded,
    algebra_dim,
    commutant_dim,
    commutant_units,
    enum_group,
    group_order,
    is_semisimple,
)
from .verify import CHECKS, DEFAULT_CHECKS, Row, VerificationReport, verify

__all__ = [
    "BUDGET",
    "BudgetExceeded",
    "CHECKS",
    "DEFAULT_CHECKS",
    "STAB_LABELS",
    "CensusEntry",
    "OrbitCensus",
    "Row",
    "VerificationReport",
    "algebra_dim",
    "centralizer",
    "classify_stab_pair",
    "commutant_dim",
    "commutant_units",
    "count_solutions",
    "enum_group",
    "group_order",
    "irreducible_pair_count",
    "is_semisimple",
    "lambda_orbit_count",
    "lambda_orbit_count_bruteforce",
    "link_solutions",
    "orbit_census",
    "power_index",
    "stab_label",
    "support_components",
    "support_histogram",
    "thread_count",
    "verify",
]
