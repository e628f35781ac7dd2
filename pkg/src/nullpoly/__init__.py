"""Null polynomials modulo prime powers and composites.

Exact construction of least-degree (monic) null polynomials, the least
degrees omega0/omega1 and Kempner's mu, null-ness and equivalence testing,
and enumeration/counting of all null polynomials of bounded degree — with
closed forms cross-checked against brute-force oracles.
"""
from .canonical import CanonicalForm, canonical_form, equivalent, reduce_degree
from .construct import (
    DigitVector,
    Tower,
    build_tower,
    digit_vector,
    falling_factorial,
    kempner_basis,
    kempner_mu,
    least_monic_null,
    offset_product,
    omega0_prime_power,
    omega1_prime_power,
    repunit,
    scaled_tower_value,
)
from .counting import (
    CountResult,
    NullBasis,
    NullLayer,
    count_monic,
    count_monic_le,
    count_null_le,
    enumerate_null,
    null_basis,
    threshold_count_exponent,
    tower_block_exponent,
    tower_threshold_exponent,
)
from .modulus import (
    FactoredModulus,
    PrimePower,
    crt_combine_poly,
    factor,
    is_null_composite,
    least_monic_null_composite,
    omega0_composite,
    omega1_composite,
)
from .oracle import (
    brute_least_monic_degree,
    equivalent_eval,
    is_null_binomial,
    is_null_eval,
    newton_coefficients,
    null_order,
    null_witness,
)
from .polys import (
    ParseError,
    Polynomial,
    deg_mod,
    divmod_monic,
    format_csv,
    format_human,
    is_monic_mod,
    parse_polynomial,
    poly_congruent,
    reduce_coeffs,
)
from .primes import is_prime

__all__ = [
    "CanonicalForm",
    "CountResult",
    "DigitVector",
    "FactoredModulus",
    "NullBasis",
    "NullLayer",
    "ParseError",
    "Polynomial",
    "PrimePower",
    "Tower",
    "brute_least_monic_degree",
    "build_tower",
    "canonical_form",
    "count_monic",
    "count_monic_le",
    "count_null_le",
    "crt_combine_poly",
    "deg_mod",
    "digit_vector",
    "divmod_monic",
    "enumerate_null",
    "equivalent",
    "equivalent_eval",
    "factor",
    "falling_factorial",
    "format_csv",
    "format_human",
    "is_monic_mod",
    "is_null_binomial",
    "is_null_composite",
    "is_null_eval",
    "is_prime",
    "kempner_basis",
    "kempner_mu",
    "least_monic_null",
    "least_monic_null_composite",
    "newton_coefficients",
    "null_basis",
    "null_order",
    "null_witness",
    "offset_product",
    "omega0_composite",
    "omega0_prime_power",
    "omega1_composite",
    "omega1_prime_power",
    "parse_polynomial",
    "poly_congruent",
    "reduce_coeffs",
    "reduce_degree",
    "repunit",
    "scaled_tower_value",
    "threshold_count_exponent",
    "tower_block_exponent",
    "tower_threshold_exponent",
]
