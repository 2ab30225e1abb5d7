"""Exact incidence algebras of cobweb posets.

A cobweb poset is the layered order designated by a sequence of level sizes:
level s holds F_s pairwise-incomparable elements and every element of a lower
level lies below every element of any higher level.  This package
materializes the finite truncations, runs their incidence algebra and the
rank-indexed reduced algebra in exact arithmetic, and ships a brute-force
enumeration oracle that every closed form is checked against.
"""

from .incidence import FULL_NAMES, IncidenceFunction, mobius_closed_form, standard_full
from .poset import FinitePoset, Vertex, build_poset
from .reduced import (
    REDUCED_NAMES,
    RankDependenceError,
    ReducedFunction,
    incidence_coefficient,
    project,
    rank_triangle,
    standard_reduced,
)
from .sequences import FSequence, make_sequence
from .verify import CheckResult, run_checks

__version__ = "0.1.0"

__all__ = [
    "FULL_NAMES",
    "REDUCED_NAMES",
    "CheckResult",
    "FSequence",
    "FinitePoset",
    "IncidenceFunction",
    "RankDependenceError",
    "ReducedFunction",
    "Vertex",
    "build_poset",
    "incidence_coefficient",
    "make_sequence",
    "mobius_closed_form",
    "project",
    "rank_triangle",
    "run_checks",
    "standard_full",
    "standard_reduced",
]
