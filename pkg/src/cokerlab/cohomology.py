"""Inverse-polynomial model of the graded pieces and its certificates.

The degree -d piece of the ambient module is free over k[x,y,s,t] on the
inverse monomials u^-a * v^-b with a, b >= 1 and a + b = d; multiplication
by the defining quadric maps the degree -(d+2) piece to the degree -d
piece, and its matrix in the ordered bases reproduces the tridiagonal
builder exactly.  From the square truncation of that matrix we extract the
bidegree-(d,d) cokernel component, a torsion certificate for the first
generator, and irreducible prime witnesses from the determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .arith import Field, Monomial, MultiPoly, exact_divide, tau
from .factor import FactorReport, factor_tau
from .matrices import (
    MembershipCertificate,
    PolyMatrix,
    adjugate_column,
    build_a,
    build_b,
    solve_square,
)

_R0_VARIABLES = {"x", "y", "s", "t"}


def multiplier_f(field: Field) -> MultiPoly:
    """The defining quadric s*x^2*v^2 - (t+s)*x*y*u*v + t*y^2*u^2."""
    terms = {
        Monomial.from_dict({"s": 1, "x": 2, "v": 2}): field.one,
        Monomial.from_dict({"t": 1, "x": 1, "y": 1, "u": 1, "v": 1}): field.minus_one,
        Monomial.from_dict({"s": 1, "x": 1, "y": 1, "u": 1, "v": 1}): field.minus_one,
        Monomial.from_dict({"t": 1, "y": 2, "u": 2}): field.one,
    }
    return MultiPoly(field, terms)


@lru_cache(maxsize=None)
def _multiplier_action(field: Field) -> tuple:
    # The quadric split by its (u, v) exponents: [(coefficient in R0, a, b)].
    grouped: dict = {}
    for mono, coeff in multiplier_f(field).items():
        a = mono.exponent("u")
        b = mono.exponent("v")
        rest = Monomial.from_dict({name: e for name, e in mono.exponents.items()
                                   if name not in ("u", "v")})
        part = grouped.setdefault((a, b), {})
        part[rest] = field.add(part.get(rest, field.zero), coeff)
    return tuple((MultiPoly(field, part), a, b) for (a, b), part in sorted(grouped.items()))


@dataclass(frozen=True)
class InverseMonomial:
    """u^-alpha * v^-beta, stored through its positive exponent parts."""

    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.alpha < 1 or self.beta < 1:
            raise ValueError("inverse monomial exponents must be >= 1")

    @property
    def degree(self) -> int:
        return -(self.alpha + self.beta)

    def __str__(self) -> str:
        return f"u^-{self.alpha}*v^-{self.beta}"


class InverseElement:
    """Finite combination of inverse monomials with coefficients in k[x,y,s,t]."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms=None):
        cleaned = {}
        for im, poly in (terms or {}).items():
            if poly.field != field:
                raise ValueError("coefficient over the wrong field")
            if not poly.variables() <= _R0_VARIABLES:
                raise ValueError("coefficients must avoid u and v")
            if not poly.is_zero():
                cleaned[im] = poly
        self.field = field
        self.terms = cleaned

    @classmethod
    def basis_element(cls, field: Field, im: InverseMonomial) -> InverseElement:
        return cls(field, {im: MultiPoly.one(field)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: InverseElement) -> InverseElement:
        acc = dict(self.terms)
        for im, poly in other.terms.items():
            total = acc.get(im)
            acc[im] = poly if total is None else total + poly
        return InverseElement(self.field, acc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InverseElement):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"({poly})*{im}" for im, poly in sorted(
            self.terms.items(), key=lambda kv: kv[0].alpha)]
        return " + ".join(parts)


def mult_by_f(element: InverseElement) -> InverseElement:
    """Multiply by the defining quadric.

    A quadric term with u-exponent a and v-exponent b sends u^-p * v^-q to
    u^(a-p) * v^(b-q); the product is discarded whenever either exponent
    leaves the strictly negative region.
    """
    field = element.field
    acc: dict = {}
    for im, poly in element.terms.items():
        for coeff, a, b in _multiplier_action(field):
            new_alpha = im.alpha - a
            new_beta = im.beta - b
            if new_alpha < 1 or new_beta < 1:
                continue
            target = InverseMonomial(new_alpha, new_beta)
            contribution = coeff * poly
            total = acc.get(target)
            acc[target] = contribution if total is None else total + contribution
    return InverseElement(field, acc)


def inverse_basis(d: int) -> list:
    """Ordered basis of the degree -d piece: ascending stored u-exponent.

    (On the true negative exponents this is the descending order, matching
    the convention that u^-1*v^-(d-1) comes first.)
    """
    if d < 2:
        raise ValueError("the module vanishes above degree -2")
    return [InverseMonomial(alpha, d - alpha) for alpha in range(1, d)]


def matrix_of_f(d: int, field: Field) -> PolyMatrix:
    """Matrix of multiplication by the quadric from degree -(d+2) to degree -d,
    in the ordered inverse-monomial bases."""
    if d < 2:
        raise ValueError("matrix_of_f requires d >= 2")
    source = inverse_basis(d + 2)
    target = inverse_basis(d)
    position = {im: r for r, im in enumerate(target)}
    zero = MultiPoly.zero(field)
    entries = [[zero] * len(source) for _ in range(len(target))]
    for c, im in enumerate(source):
        image = mult_by_f(InverseElement.basis_element(field, im))
        for im2, poly in image.terms.items():
            entries[position[im2]][c] = poly
    return PolyMatrix(entries)


# ----------------------------------------------------------------------------
# Bigrading.


@dataclass(frozen=True)
class Bidegree:
    total: int
    weight: int

    def as_pair(self) -> tuple:
        return (self.total, self.weight)


def bidegree(mono: Monomial, j: int) -> Bidegree:
    """Bidegree of x^a * y^b * s^* * t^* against basis slot j: (a+b, b+j)."""
    if j < 1:
        raise ValueError("basis index must be >= 1")
    if mono.exponent("u") or mono.exponent("v"):
        raise ValueError("bidegree is defined on monomials in x, y, s, t")
    a = mono.exponent("x")
    b = mono.exponent("y")
    return Bidegree(a + b, b + j)


def poly_bidegree(poly: MultiPoly, j: int) -> Bidegree:
    """Common bidegree of all terms; raises when the terms disagree."""
    if poly.is_zero():
        raise ValueError("the zero polynomial has no bidegree")
    degrees = {bidegree(mono, j) for mono, _ in poly.items()}
    if len(degrees) != 1:
        raise ValueError("polynomial is not bihomogeneous")
    return degrees.pop()


def column_bidegree(matrix: PolyMatrix, col: int) -> Bidegree:
    """Common bidegree of a matrix column, reading entry rows as basis slots."""
    degrees = set()
    for r in range(matrix.rows):
        entry = matrix[r, col]
        if not entry.is_zero():
            degrees.add(poly_bidegree(entry, r + 1))
    if len(degrees) != 1:
        raise ValueError("column is not bihomogeneous")
    return degrees.pop()


# ----------------------------------------------------------------------------
# The (d,d) component.


@dataclass(frozen=True)
class Generator:
    monomial: Monomial
    index: int
    bidegree: Optional[Bidegree]


@dataclass(frozen=True)
class Presentation:
    """Ordered generators together with the relation matrix among them."""

    generators: tuple
    relations: PolyMatrix

    def __post_init__(self) -> None:
        if self.relations.rows != len(self.generators):
            raise ValueError("relation rows must match the generator count")
        marked = {g.bidegree for g in self.generators if g.bidegree is not None}
        if len(marked) > 1:
            raise ValueError("component generators must share one bidegree")


def component_dd(d: int, field: Field) -> Presentation:
    """The bidegree-(d,d) component of the cokernel of the tridiagonal map.

    Generators are x^j * y^(d-j) in slots j = 1..d-1; the relations are the
    middle columns of the rectangular matrix scaled into bidegree (d,d) with
    the x,y content stripped, leaving a square matrix over k[s,t].
    """
    if d < 2:
        raise ValueError("component_dd requires d >= 2")
    a = build_a(d - 1, field)
    generators = tuple(
        Generator(Monomial.from_dict({"x": j, "y": d - j}), j, Bidegree(d, d))
        for j in range(1, d))
    rows = d - 1
    zero = MultiPoly.zero(field)
    relations = [[zero] * (d - 1) for _ in range(rows)]
    for k in range(2, d + 1):
        scale = MultiPoly.term(field, 1,
                               Monomial.from_dict({"x": k - 2, "y": d - k}))
        for r in range(rows):
            scaled = a[r, k - 1] * scale
            if scaled.is_zero():
                continue
            gen_mono = MultiPoly.term(field, 1, generators[r].monomial)
            coefficient = exact_divide(scaled, gen_mono)
            if coefficient is None or not coefficient.variables() <= {"s", "t"}:
                raise ArithmeticError("relation column does not land on the generators")
            relations[r][k - 2] = coefficient
    return Presentation(generators, PolyMatrix(relations))


# ----------------------------------------------------------------------------
# Certificates.


@dataclass(frozen=True)
class TorsionWitness:
    """Certifies that the class of e_1 in the square cokernel is nonzero
    torsion: the annihilator times e_1 is hit exactly, while e_1 itself is
    certified outside the image."""

    d: int
    annihilator: MultiPoly
    solution: tuple
    nonmembership: MembershipCertificate

    def __post_init__(self) -> None:
        if self.nonmembership.is_solution:
            raise ValueError("nonmembership certificate must be a NoSolution outcome")


def torsion_witness(d: int, field: Field) -> TorsionWitness:
    """Build and re-verify the torsion certificate for the degree -d piece."""
    if d < 2:
        raise ValueError("torsion_witness requires d >= 2")
    b = build_b(d - 1, field)
    annihilator = tau(d - 1, field)
    solution = adjugate_column(b, 0)
    achieved = b.mul_vector(solution)
    expected = [annihilator] + [MultiPoly.zero(field)] * (d - 2)
    if achieved != expected:
        raise ArithmeticError("torsion solution verification failed")
    e1 = [MultiPoly.one(field)] + [MultiPoly.zero(field)] * (d - 2)
    nonmembership = solve_square(b, e1)
    if nonmembership.is_solution:
        raise ArithmeticError("e_1 unexpectedly lies in the image")
    return TorsionWitness(d=d, annihilator=annihilator,
                          solution=tuple(solution), nonmembership=nonmembership)


@dataclass(frozen=True)
class PrimeWitness:
    """An irreducible homogeneous divisor of the determinant, generating a
    minimal prime of the component's support."""

    generator: MultiPoly
    source_d: int
    avoids_s: bool


def prime_witnesses(d: int, field: Field, seed: Optional[int] = None) -> list:
    """Irreducible factors of det(B_(d-1)) = tau_(d-1), as prime witnesses."""
    if d < 2:
        raise ValueError("prime_witnesses requires d >= 2")
    t_poly = tau(d - 1, field)
    s_poly = MultiPoly.variable(field, "s")
    if exact_divide(t_poly, s_poly) is not None:
        raise ArithmeticError("s unexpectedly divides the determinant")
    report = factor_tau(d - 1, field, seed=seed)
    witnesses = []
    for poly, _ in report.factors:
        if exact_divide(t_poly, poly) is None:
            raise ArithmeticError("witness does not divide the determinant")
        witnesses.append(PrimeWitness(generator=poly, source_d=d,
                                      avoids_s=(poly != s_poly)))
    return witnesses


def factor_report_for(d: int, field: Field, seed: Optional[int] = None) -> FactorReport:
    """Factor report of the annihilator tau_(d-1) attached to degree -d."""
    return factor_tau(d - 1, field, seed=seed)


# ----------------------------------------------------------------------------
# Membership of tau in the irrelevant maximal ideal.


def in_irrelevant_ideal(poly: MultiPoly) -> bool:
    """True when the polynomial lies in <s,t,x,y,u,v>, i.e. has no constant term."""
    return poly.constant_term() == 0


def tau_in_irrelevant_ideal(i: int, field: Field = Field.rationals()) -> bool:
    """Whether tau_i sits inside the irrelevant maximal ideal (always true:
    tau_i is homogeneous of positive degree)."""
    return in_irrelevant_ideal(tau(i, field))
