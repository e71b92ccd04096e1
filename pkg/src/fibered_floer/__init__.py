"""
Perturbed Heegaard Floer ranks for mapping tori of Dehn-twist words.

The pipeline runs: classify the word, build the point-set model of its
special Heegaard diagram, enumerate generators at spin^c level g-2, split
them into spin^c structures, and pin each rank between the Euler
characteristic and the count of essential generator pairs.
"""
from .errors import (
    FloerError,
    GenusTooSmall,
    InconclusiveSandwich,
    LevelOutOfRange,
    ParseError,
    UnsupportedLevel,
    UnsupportedMappingClass,
    ZeroExponent,
)
from .generator_enum import enumerate_level
from .heegaard_model import build_diagram, simplify_isotopy
from .mapping_class import (
    DELTA,
    GAMMA,
    DehnTwist,
    TwistWord,
    abs_trace,
    classify,
    gamma_i,
    h1_action,
    lefschetz,
    symmetric_lefschetz,
    turaev_torsion_level,
)
from .rank_engine import compare_unperturbed, compute_rank, sandwich_rank
from .cli import parse_word

__all__ = [
    "DELTA", "GAMMA", "DehnTwist", "TwistWord", "gamma_i", "parse_word",
    "classify", "h1_action", "abs_trace", "lefschetz", "symmetric_lefschetz",
    "turaev_torsion_level", "build_diagram", "simplify_isotopy", "enumerate_level",
    "compute_rank", "compare_unperturbed", "sandwich_rank",
    "FloerError", "GenusTooSmall", "InconclusiveSandwich", "LevelOutOfRange",
    "ParseError", "UnsupportedLevel", "UnsupportedMappingClass", "ZeroExponent",
]

__version__ = "0.1.0"
