"""Regularity of edge ideals of edge-weighted trees, verified two ways:
closed-form formulas from the graph data, and an independent Betti-number
oracle on the monomial-ideal side."""

from .errors import (
    InfeasibleConstraints,
    LatticeTooLarge,
    NonTrivialWeights,
    NotAPath,
    NotATree,
    NotIntegrallyClosed,
    PartitionInvalid,
    PowerTooLarge,
    TooManyGenerators,
    TrivialWeights,
    UndefinedRegularity,
    UnknownEdge,
    UnknownVertex,
    WtreeregError,
)
from .wgraph import (
    SpineData,
    WeightedGraph,
    delete,
    distance_profile,
    edge_key,
    is_caterpillar,
    is_integrally_closed,
    non_trivial_spine,
)
from .matchings import MatchingResult, constrained_matching_number, induced_matching_number
from .monomial import Monomial, MonomialIdeal, edge_ideal, minimalize
from .betti import (
    BettiTable,
    RegularityValue,
    betti_splitting_check,
    betti_table,
    lcm_lattice,
    regularity,
)
from .formulas import (
    PowerRegResult,
    RegFormulaResult,
    power_reg_result,
    reg_closed_form,
    reg_path_closed_form,
    reg_power_exact,
    reg_power_trivial,
    reg_power_upper_bound,
)
from .harness import (
    SuiteConfig,
    VerificationReport,
    enumerate_corpus,
    generate_instance,
    golden_instances,
    run_suite,
    verify_instance,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "InfeasibleConstraints",
    "LatticeTooLarge",
    "MatchingResult",
    "Monomial",
    "MonomialIdeal",
    "NonTrivialWeights",
    "NotAPath",
    "NotATree",
    "NotIntegrallyClosed",
    "PartitionInvalid",
    "PowerRegResult",
    "PowerTooLarge",
    "RegFormulaResult",
    "RegularityValue",
    "SpineData",
    "SuiteConfig",
    "TooManyGenerators",
    "TrivialWeights",
    "UndefinedRegularity",
    "UnknownEdge",
    "UnknownVertex",
    "VerificationReport",
    "WeightedGraph",
    "WtreeregError",
    "betti_splitting_check",
    "betti_table",
    "constrained_matching_number",
    "delete",
    "distance_profile",
    "edge_ideal",
    "edge_key",
    "enumerate_corpus",
    "generate_instance",
    "golden_instances",
    "induced_matching_number",
    "is_caterpillar",
    "is_integrally_closed",
    "lcm_lattice",
    "minimalize",
    "non_trivial_spine",
    "power_reg_result",
    "reg_closed_form",
    "reg_path_closed_form",
    "reg_power_exact",
    "reg_power_trivial",
    "reg_power_upper_bound",
    "regularity",
    "run_suite",
    "verify_instance",
]
