"""Exact closed-orbit bookkeeping for systems folded by an involution.

The package realizes finite permutation systems from per-length orbit
behavior counts, folds them by a commuting involution, and checks the
simulated closed-orbit statistics against the closed-form counting
identities.  An exact power-series engine drives the associated
dynamical zeta functions, and a Berlekamp-Massey probe gathers heuristic
evidence about their rationality.
"""

from .arith import (
    CountSequence,
    euler_congruence_holds,
    fixed_points_from_orbits,
    mobius,
    orbits_from_fixed_points,
    sigma,
)
from .combinatorics import (
    BehaviorDecomposition,
    GrowthSpec,
    RawBehaviorCounts,
    Violation,
    big_system_counts,
    check_bounds,
    check_constraints,
    decompose,
    existence_hypothesis_violations,
    growth_sequences,
    quotient_counts,
)
from .probe import (
    NO_SHORT_RECURRENCE,
    RECURRENCE_FOUND,
    RationalityReport,
    berlekamp_massey,
    rationality_probe,
)
from .series import FormalPowerSeries, rational_series, series_exp
from .simulator import (
    FiniteSystem,
    Point,
    QuotientSystem,
    build_system,
    classify_orbits,
    count_orbits,
    double_system,
    dump_system,
    parse_system,
    quotient,
)
from .zeta import (
    AuxiliarySequence,
    c_sequence,
    doubled_fixed_point_counts,
    doubling_zeta_identity_check,
    euler_product,
    log_derivative_counts,
    natural_boundary_sequences,
    pentagonal_signs,
    phi_series,
    theta_series,
    zeta_from_fixed_points,
    zeta_from_orbits,
)

__version__ = "0.1.0"

__all__ = [
    "AuxiliarySequence",
    "BehaviorDecomposition",
    "CountSequence",
    "FiniteSystem",
    "FormalPowerSeries",
    "GrowthSpec",
    "NO_SHORT_RECURRENCE",
    "Point",
    "QuotientSystem",
    "RECURRENCE_FOUND",
    "RationalityReport",
    "RawBehaviorCounts",
    "Violation",
    "berlekamp_massey",
    "big_system_counts",
    "build_system",
    "c_sequence",
    "check_bounds",
    "check_constraints",
    "classify_orbits",
    "count_orbits",
    "decompose",
    "double_system",
    "doubled_fixed_point_counts",
    "doubling_zeta_identity_check",
    "dump_system",
    "euler_congruence_holds",
    "euler_product",
    "existence_hypothesis_violations",
    "fixed_points_from_orbits",
    "growth_sequences",
    "log_derivative_counts",
    "mobius",
    "natural_boundary_sequences",
    "orbits_from_fixed_points",
    "parse_system",
    "pentagonal_signs",
    "phi_series",
    "quotient",
    "quotient_counts",
    "rational_series",
    "rationality_probe",
    "series_exp",
    "sigma",
    "theta_series",
    "zeta_from_fixed_points",
    "zeta_from_orbits",
]
