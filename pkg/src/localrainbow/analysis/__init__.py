"""Verification of local colorings and constructive refutations."""

__all__ = [
    "ATTACK_PATTERNS",
    "Clash",
    "ViolationWitness",
    "attack",
    "extract_from_monochromatic",
    "four_edge_configuration",
    "lower_bound_exponent",
    "parse_attack_pattern",
    "verify_local",
    "witness_from_copy",
]

from .attacks import ATTACK_PATTERNS, attack, parse_attack_pattern
from .bounds import four_edge_configuration, lower_bound_exponent
from .extraction import extract_from_monochromatic
from .verify import verify_local
from .witness import Clash, ViolationWitness, witness_from_copy
