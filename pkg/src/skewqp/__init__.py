"""Skew group quivers with potential for cyclic group actions."""

from .action import (ArrowImage, AssumptionError, CyclicAction, check_type3_coefficients,
                     choose_representatives, classify_arrow, classify_cycle, validate_action)
from .cyclo import Cyclotomic, OrderMismatchError, zeta_pow
from .qp import (Arrow, Path, PathCombination, Potential, Quiver, canonical_cycle, cyclic_derivative,
                 jacobian_relations, potential_equal, scaled_derivative)
from .skew import SkewQP, build_skew_qp, dual_action, roundtrip

__all__ = [
    "Arrow", "ArrowImage", "AssumptionError", "Cyclotomic", "CyclicAction", "OrderMismatchError",
    "Path", "PathCombination", "Potential", "Quiver", "SkewQP", "build_skew_qp",
    "canonical_cycle", "check_type3_coefficients", "choose_representatives", "classify_arrow",
    "classify_cycle", "cyclic_derivative", "dual_action", "jacobian_relations", "potential_equal",
    "roundtrip", "scaled_derivative", "validate_action", "zeta_pow",
]
