"""Certified lower bounds for deg gcd(a^n - 1, b^n - 1) over finite fields.

The package splits into:

- ffield        exact F_p / F_{p^m} arithmetic and subfield embeddings
- fqpoly        dense polynomials over a field context
- irreducibles  enumeration, counting, progressions, factorization
- residue       r-th power residue symbols and the reciprocity check
- gcdlab        exponent plans, witness certificates, degree scans
- cli           the ffgcd command-line front end
"""

from .errors import FFGcdError
from .ffield import (
    Embedding,
    FieldCtx,
    FqElem,
    apply_embedding,
    elem_arith,
    elem_pow,
    make_embedding,
    make_field,
    multiplicative_order,
)
from .fqpoly import (
    Poly,
    derivative,
    format_poly,
    lift_poly,
    parse_poly,
    poly_arith,
    poly_gcd,
    poly_lcm,
    poly_pow_sub1,
    poly_powmod,
)
from .gcdlab import (
    Example1Report,
    ExponentPlan,
    FrobeniusReport,
    GcdCertificate,
    example1_identity,
    frobenius_scaling,
    gcd_degree_direct,
    integer_gcd_table,
    lower_bound_constant,
    multiplicative_independence,
    plan_exponents,
    scan_degrees,
    witness_certificate,
)
from .irreducibles import (
    CountReport,
    Factorization,
    count_irreducibles_exact,
    count_progression,
    enumerate_irreducibles,
    enumerate_progression,
    euler_phi_int,
    factorize,
    is_irreducible,
    phi_q,
)
from .residue import (
    ReciprocityReport,
    check_reciprocity,
    is_rth_power_mod,
    is_rth_power_mod_bruteforce,
    residue_symbol,
)

__version__ = "0.1.0"

__all__ = [
    "FFGcdError",
    "FieldCtx", "FqElem", "Embedding",
    "make_field", "elem_arith", "elem_pow", "multiplicative_order",
    "make_embedding", "apply_embedding",
    "Poly", "poly_arith", "poly_gcd", "poly_lcm", "poly_powmod",
    "poly_pow_sub1", "derivative", "lift_poly", "parse_poly", "format_poly",
    "is_irreducible", "enumerate_irreducibles", "count_irreducibles_exact",
    "enumerate_progression", "count_progression", "CountReport",
    "factorize", "Factorization", "phi_q", "euler_phi_int",
    "residue_symbol", "is_rth_power_mod", "is_rth_power_mod_bruteforce",
    "check_reciprocity", "ReciprocityReport",
    "ExponentPlan", "plan_exponents", "GcdCertificate", "witness_certificate",
    "gcd_degree_direct", "lower_bound_constant",
    "Example1Report", "example1_identity",
    "FrobeniusReport", "frobenius_scaling",
    "multiplicative_independence", "scan_degrees", "integer_gcd_table",
]
