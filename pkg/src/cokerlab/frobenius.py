"""Graded components of the quotient by x^n, y^n over the quartic hypersurface.

For 4 < d < n the degree-d component is presented by the tall relation
matrix; at d = n the first and last generator rows drop, and at d = n + 1
two rows drop at each end and the presentation collapses onto the square
tridiagonal matrix, whose determinant drives the distinct-witness growth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .arith import Field, Monomial, MultiPoly
from .cohomology import Generator, Presentation
from .factor import GrowthReport, accumulate_reports, factor_homogeneous_st
from .matrices import build_b, build_m, det

CASE_BELOW = "below"
CASE_AT_N = "at_n"
CASE_AT_N_PLUS_1 = "at_n_plus_1"


def defining_quartic(field: Field) -> MultiPoly:
    """x*y*(x-y)*(s*x-t*y), expanded: s*x^3*y - (t+s)*x^2*y^2 + t*x*y^3."""
    x = MultiPoly.variable(field, "x")
    y = MultiPoly.variable(field, "y")
    s = MultiPoly.variable(field, "s")
    t = MultiPoly.variable(field, "t")
    return x * y * (x - y) * (s * x - t * y)


@dataclass(frozen=True)
class FrobeniusComponent:
    """One graded component, its presentation, and which truncation case
    produced it."""

    n: int
    d: int
    case: str
    presentation: Presentation

    def __post_init__(self) -> None:
        rows = self.presentation.relations.rows
        cols = self.presentation.relations.cols
        expected = {
            CASE_BELOW: (self.d + 1, self.d - 3),
            CASE_AT_N: (self.n - 1, self.n - 3),
            CASE_AT_N_PLUS_1: (self.n - 2, self.n - 2),
        }[self.case]
        if (rows, cols) != expected:
            raise ValueError(f"presentation shape {(rows, cols)} does not "
                             f"match case {self.case}")


def _monomial_generators(d: int, j_range) -> tuple:
    # Generator j is x^(j-1) * y^(d-j+1); the component grading lives on the
    # component itself, so no bidegree is attached.
    return tuple(
        Generator(Monomial.from_dict({"x": j - 1, "y": d - j + 1}), 1, None)
        for j in j_range)


def component_t(n: int, d: int, field: Field) -> FrobeniusComponent:
    """Degree-d component of the quotient by x^n, y^n, for 4 < d <= n+1.

    Below n the presentation is the full tall matrix; at d = n the rows of
    y^n and x^n are deleted; at d = n + 1 the four boundary rows are deleted
    and the result is checked against the square tridiagonal matrix.
    """
    if n <= 5:
        raise ValueError("component_t requires n >= 6")
    if d <= 4 or d > n + 1:
        raise ValueError("component_t requires 4 < d <= n+1")
    m = build_m(d, field)
    if d < n:
        case = CASE_BELOW
        generators = _monomial_generators(d, range(1, d + 2))
        relations = m
    elif d == n:
        case = CASE_AT_N
        generators = _monomial_generators(d, range(2, d + 1))
        relations = m.without_rows([0, d])
    else:
        case = CASE_AT_N_PLUS_1
        generators = _monomial_generators(d, range(3, d))
        relations = m.without_rows([0, 1, d - 1, d])
        if relations != build_b(n - 2, field):
            raise ArithmeticError("row deletion did not collapse onto the "
                                  "square tridiagonal matrix")
    return FrobeniusComponent(n=n, d=d, case=case,
                              presentation=Presentation(generators, relations))


def witness_growth(n_set: Sequence[int], field: Field,
                   seed: Optional[int] = None) -> GrowthReport:
    """Distinct irreducible factors of the collapsed determinants, accumulated
    across the given n values in order."""
    values = list(n_set)
    if any(n < 6 for n in values):
        raise ValueError("witness_growth requires every n >= 6")
    reports = []
    for n in values:
        component = component_t(n, n + 1, field)
        determinant = det(component.presentation.relations)
        reports.append(factor_homogeneous_st(determinant, seed=seed))
    return accumulate_reports(values, reports)
