"""Graded sets, granular sets, fault-tolerant interval fusion, and
rough-set analysis of information tables.

The core objects are chains: fused intervals nested by fault budget,
set families nested by inclusion, and partitions nested by refinement.
Everything here is deterministic and value-semantic.
"""

from .chains import GradedFamily, is_rough_family, validate_graded
from .errors import DomainError, ParseError
from .infosys import (
    ApproximationPair,
    InformationTable,
    SensitivityRecord,
    approximation_pair,
    graded_approximations,
    granular_from_chain,
    indiscernibility_partition,
    lower_approx,
    sensitivity_profile,
    upper_approx,
)
from .intervals import (
    FaultDistribution,
    FusionResult,
    GradedIntervals,
    Interval,
    IntervalDistribution,
    as_rough_pair,
    fuse,
    fused_subset,
    graded_fusion,
    random_graded,
    sample,
)
from .partitions import GranularSet, Partition, refines, validate_granular
from .simulate import SimConfig, SimOutcome, simulate_round, simulate_rounds

__version__ = "0.1.0"

__all__ = [
    "ApproximationPair",
    "DomainError",
    "FaultDistribution",
    "FusionResult",
    "GradedFamily",
    "GradedIntervals",
    "GranularSet",
    "InformationTable",
    "Interval",
    "IntervalDistribution",
    "ParseError",
    "Partition",
    "SensitivityRecord",
    "SimConfig",
    "SimOutcome",
    "approximation_pair",
    "as_rough_pair",
    "fuse",
    "fused_subset",
    "graded_approximations",
    "graded_fusion",
    "granular_from_chain",
    "indiscernibility_partition",
    "is_rough_family",
    "lower_approx",
    "random_graded",
    "refines",
    "sample",
    "sensitivity_profile",
    "simulate_round",
    "simulate_rounds",
    "upper_approx",
    "validate_graded",
    "validate_granular",
]
