"""Staircase calculus for monomial ideals over chain Artinian rings.

Graded families of ideals, their length functions, and empirical checks
of length growth, volume and asymptotic multiplicity.
"""

from gradfam.lattice import (
    count_degree_below,
    deglex_cmp,
    deglex_key,
    deglex_succ,
    total_degree,
)
from gradfam.ideals import (
    FIELD,
    INFINITE,
    ChainRing,
    LevelGenerator,
    MonomialIdeal,
    brute_colength,
    colength,
    contains,
    level_of,
    minimalize,
    nilpotency_bound,
    format_ideal,
    parse_ideal,
    power,
    product,
)
from gradfam.families import (
    GradedFamily,
    Scale,
    check_axioms,
    oscillating_family,
    power_family,
    scaled_power_family,
    table_family,
)
from gradfam.asymptotics import (
    growth_report,
    hilbert_samuel_multiplicity,
    length_sequence,
    multiplicity_estimate,
    prop42_check,
    volume_report,
    volume_vs_multiplicity,
)

__version__ = "0.1.0"
