"""Exact desk-scale verification of a tridiagonal determinant identity, the
graded cokernel components it controls, and the growth of their irreducible
prime witnesses over Q and over prime fields."""

from .arith import (
    Field,
    FieldMismatchError,
    Monomial,
    MultiPoly,
    UniPoly,
    dehomogenize,
    exact_divide,
    gcd_univariate,
    homogenize,
    parse_poly,
    sigma,
    tau,
)
from .cohomology import (
    Bidegree,
    Generator,
    InverseElement,
    InverseMonomial,
    Presentation,
    PrimeWitness,
    TorsionWitness,
    bidegree,
    component_dd,
    in_irrelevant_ideal,
    inverse_basis,
    matrix_of_f,
    mult_by_f,
    multiplier_f,
    prime_witnesses,
    tau_in_irrelevant_ideal,
    torsion_witness,
)
from .factor import (
    FactorReport,
    GrowthReport,
    SeparabilityCertificate,
    accumulate_distinct,
    cyclotomic,
    factor_homogeneous_st,
    factor_over_prime_field,
    factor_sigma_rational,
    factor_tau,
    separability_check,
    totient,
)
from .frobenius import (
    FrobeniusComponent,
    component_t,
    defining_quartic,
    witness_growth,
)
from .matrices import (
    MembershipCertificate,
    PolyMatrix,
    adjugate,
    adjugate_column,
    build_a,
    build_abar,
    build_b,
    build_m,
    det,
    solve_square,
)

__version__ = "0.1.0"

__all__ = [
    "Bidegree",
    "FactorReport",
    "Field",
    "FieldMismatchError",
    "FrobeniusComponent",
    "Generator",
    "GrowthReport",
    "InverseElement",
    "InverseMonomial",
    "MembershipCertificate",
    "Monomial",
    "MultiPoly",
    "PolyMatrix",
    "Presentation",
    "PrimeWitness",
    "SeparabilityCertificate",
    "TorsionWitness",
    "UniPoly",
    "accumulate_distinct",
    "adjugate",
    "adjugate_column",
    "bidegree",
    "build_a",
    "build_abar",
    "build_b",
    "build_m",
    "component_dd",
    "component_t",
    "cyclotomic",
    "defining_quartic",
    "dehomogenize",
    "det",
    "exact_divide",
    "factor_homogeneous_st",
    "factor_over_prime_field",
    "factor_sigma_rational",
    "factor_tau",
    "gcd_univariate",
    "homogenize",
    "in_irrelevant_ideal",
    "inverse_basis",
    "matrix_of_f",
    "mult_by_f",
    "multiplier_f",
    "parse_poly",
    "prime_witnesses",
    "separability_check",
    "sigma",
    "solve_square",
    "tau",
    "tau_in_irrelevant_ideal",
    "torsion_witness",
    "totient",
    "witness_growth",
]
