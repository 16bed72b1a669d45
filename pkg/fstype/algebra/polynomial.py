"""
Polynomials over the rationals in the commuting variables x_ij(-n).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Union

from fstype.common.base import Grade, Monomial, WeightVector

Scalar = Union[int, Fraction]


class Polynomial:
    """
    A finite map from monomials to nonzero rational coefficients.

    Arithmetic is exact and keeps the true coefficients. The canonical
    representative of the line spanned by a polynomial is `normalized()`:
    coprime integer coefficients, positive on the minimal monomial.
    Instances are treated as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        self.terms: dict[Monomial, Fraction] = {
            m: Fraction(c) for m, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def zero(cls) -> Polynomial:
        return cls()

    @classmethod
    def from_monomial(cls, m: Monomial, coefficient: Scalar = 1) -> Polynomial:
        return cls({m: coefficient})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def support(self) -> list[Monomial]:
        """
        The monomials with nonzero coefficient, ascending in the monomial order.
        """
        return sorted(self.terms, key=lambda m: m.sort_key)

    def grades(self, ell: int) -> set[Grade]:
        return {m.grade(ell) for m in self.terms}

    def is_homogeneous(self, ell: int) -> bool:
        """
        Whether all monomials share one (degree, weight); the zero polynomial counts as homogeneous.
        """
        return len(self.grades(ell)) <= 1

    def grade(self, ell: int) -> Grade:
        grades = self.grades(ell)
        if len(grades) != 1:
            raise ValueError(f"Polynomial is not homogeneous (or is zero): {self}")
        return next(iter(grades))

    def degree(self) -> int:
        degrees = {m.degree() for m in self.terms}
        if len(degrees) != 1:
            raise ValueError(f"Polynomial has no single degree: {self}")
        return degrees.pop()

    def weight(self, ell: int) -> WeightVector:
        return self.grade(ell)[1]

    def normalized(self) -> Polynomial:
        if not self.terms:
            return self
        denominator = math.lcm(*(c.denominator for c in self.terms.values()))
        numerators = {m: int(c * denominator) for m, c in self.terms.items()}
        content = math.gcd(*numerators.values())
        if numerators[leading_term(self)] < 0:
            content = -content
        return Polynomial({m: c // content for m, c in numerators.items()})

    def integer_terms(self) -> dict[Monomial, int]:
        """
        The coefficients as ints; only valid for polynomials with integer coefficients.
        """
        if any(c.denominator != 1 for c in self.terms.values()):
            raise ValueError(f"Polynomial has non-integer coefficients: {self}")
        return {m: int(c) for m, c in self.terms.items()}

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Polynomial(terms)

    def __neg__(self) -> Polynomial:
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Polynomial | Monomial | Scalar) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial({m: c * other for m, c in self.terms.items()})
        if isinstance(other, Monomial):
            return Polynomial({m * other: c for m, c in self.terms.items()})
        if isinstance(other, Polynomial):
            terms: dict[Monomial, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = m1 * m2
                    terms[m] = terms.get(m, 0) + c1 * c2
            return Polynomial(terms)
        return NotImplemented

    def __rmul__(self, other: Monomial | Scalar) -> Polynomial:
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return False
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for m in self.support():
            c = self.terms[m]
            sign = "-" if c < 0 else "+"
            body = f"{abs(c)}*{m}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


def leading_term(p: Polynomial) -> Monomial:
    """
    The minimal monomial of p's support.

    Parameters:
    p (Polynomial): A nonzero polynomial.

    Returns:
    Monomial: The leading term.
    """
    if p.is_zero():
        raise ValueError("The zero polynomial has no leading term")
    return min(p.terms, key=lambda m: m.sort_key)
