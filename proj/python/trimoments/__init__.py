"""Exact moments of the triangular operator T.

Rationals are returned as fractions.Fraction, big integers as int and
polynomials as ascending coefficient lists.
"""

from ._core import (
    BoundError,
    ParseError,
    abel_expectation,
    abel_polynomial,
    admissible_partitions,
    expectation,
    expectation_via_integration,
    identity_from_moments,
    identity_lhs,
    identity_rhs,
    main_formula,
    mixed_moment_closed,
    mixed_moment_word,
    multinomial,
    noncrossing_pair_partitions,
    parse_word,
    phi,
    power_word,
    sample_moment,
    signed_word_top_derivative,
    volume_exact,
    volume_montecarlo,
    volume_polynomial,
)

__all__ = [
    "BoundError",
    "ParseError",
    "abel_expectation",
    "abel_polynomial",
    "admissible_partitions",
    "expectation",
    "expectation_via_integration",
    "identity_from_moments",
    "identity_lhs",
    "identity_rhs",
    "main_formula",
    "mixed_moment_closed",
    "mixed_moment_word",
    "multinomial",
    "noncrossing_pair_partitions",
    "parse_word",
    "phi",
    "power_word",
    "sample_moment",
    "signed_word_top_derivative",
    "volume_exact",
    "volume_montecarlo",
    "volume_polynomial",
]
