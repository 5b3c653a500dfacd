"""Clique immersions in graphs of independence number two: constructions,
certificates, verification, exhaustive search, and instance generators."""

from __future__ import annotations

from .analysis import (
    chromatic_number,
    find_hole_in_range,
    find_induced,
    find_induced_embedding,
    independence_number,
    independent_triple,
    max_clique,
)
from .certificates import (
    ImmersionCertificate,
    PatternImmersion,
    Verdict,
    certificate_from_json,
    certificate_to_json,
    compose_certificates,
    direct_clique_certificate,
    extend_with_universal,
    lift_certificate,
    trim_certificate,
    verify_certificate,
    verify_pattern_immersion,
)
from .construct import (
    auto_immersion,
    extend_over_dominating_c4,
    extend_over_dominating_c5,
    extend_over_dominating_p4,
    half_ceil,
    hole_free_immersion,
    house_free_immersion,
    k4_free_immersion,
    k4minus_free_clique,
    owh_free_immersion,
    pattern_free_immersion,
)
from .errors import BudgetExceeded, ClaimViolation, PreconditionError
from .gen import (
    Rng,
    dominating_c4_family,
    dominating_c5_family,
    dominating_p4_family,
    forbholes_family,
    random_alpha2,
    random_hfree_alpha2,
    random_inflation,
)
from .graphs import (
    FOUR_VERTEX_PATTERNS,
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    graph_from_json,
    graph_from_text,
    path_graph,
    pattern,
)
from .inflation import (
    InflationSpec,
    cycle_inflation_chromatic,
    inflate,
    inflate_cycle,
    inflate_path,
    inflation_from_json,
    inflation_to_json,
)
from .oracle import OracleBudget, brute_force_immersion, max_immersion_order

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "ClaimViolation",
    "FOUR_VERTEX_PATTERNS",
    "Graph",
    "ImmersionCertificate",
    "InflationSpec",
    "OracleBudget",
    "PatternImmersion",
    "PreconditionError",
    "Rng",
    "Verdict",
    "auto_immersion",
    "brute_force_immersion",
    "certificate_from_json",
    "certificate_to_json",
    "chromatic_number",
    "complete_graph",
    "compose_certificates",
    "cycle_graph",
    "cycle_inflation_chromatic",
    "direct_clique_certificate",
    "dominating_c4_family",
    "dominating_c5_family",
    "dominating_p4_family",
    "empty_graph",
    "extend_over_dominating_c4",
    "extend_over_dominating_c5",
    "extend_over_dominating_p4",
    "extend_with_universal",
    "find_hole_in_range",
    "find_induced",
    "find_induced_embedding",
    "forbholes_family",
    "graph_from_json",
    "graph_from_text",
    "half_ceil",
    "hole_free_immersion",
    "house_free_immersion",
    "independence_number",
    "independent_triple",
    "inflate",
    "inflate_cycle",
    "inflate_path",
    "inflation_from_json",
    "inflation_to_json",
    "k4_free_immersion",
    "k4minus_free_clique",
    "lift_certificate",
    "max_clique",
    "max_immersion_order",
    "owh_free_immersion",
    "path_graph",
    "pattern",
    "pattern_free_immersion",
    "random_alpha2",
    "random_hfree_alpha2",
    "random_inflation",
    "trim_certificate",
    "verify_certificate",
    "verify_pattern_immersion",
]
