"""
Exact row echelon bases pivoting on the minimal column.

Rows are sparse maps from column labels to integers. Elimination is fraction-free:
a row is combined with a pivot row by cross-multiplying the two pivot entries and
the result is divided by its content, so coefficients stay small integers.
"""

from __future__ import annotations

import math
from typing import Generic, TypeVar

from fstype.common.base import Monomial
from fstype.algebra.polynomial import Polynomial

# Column labels: hashable and totally ordered (ints, or monomials in the monomial order).
K = TypeVar("K")


def primitive(row: dict[K, int]) -> dict[K, int]:
    """
    Divide a row by its content and make the entry at its minimal column positive.
    """
    if not row:
        return row
    content = math.gcd(*row.values())
    if row[min(row)] < 0:
        content = -content
    if content == 1:
        return row
    return {col: c // content for col, c in row.items()}


class EchelonBasis(Generic[K]):
    """
    An echelon basis of a row space, one row per pivot column.

    Each stored row has a distinct minimal column (its pivot), so the pivot set is
    exactly the set of minimal columns occurring in the row space, whatever the
    order in which rows were added.
    """

    def __init__(self) -> None:
        self.rows: dict[K, dict[K, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list[K]:
        return sorted(self.rows)

    def reduce(self, row: dict[K, int]) -> dict[K, int]:
        """
        Reduce a row until its minimal column is not a pivot; returns {} for rows in the span.
        """
        row = primitive({col: c for col, c in row.items() if c})
        while row:
            lead = min(row)
            pivot_row = self.rows.get(lead)
            if pivot_row is None:
                return row
            g = math.gcd(pivot_row[lead], row[lead])
            a, b = pivot_row[lead] // g, row[lead] // g
            combined = {col: a * c for col, c in row.items()}
            for col, c in pivot_row.items():
                value = combined.get(col, 0) - b * c
                if value:
                    combined[col] = value
                else:
                    combined.pop(col, None)
            row = primitive(combined)
        return row

    def add(self, row: dict[K, int]) -> dict[K, int] | None:
        """
        Add a row; returns the reduced row when it enlarged the span, None otherwise.
        """
        reduced = self.reduce(row)
        if not reduced:
            return None
        self.rows[min(reduced)] = reduced
        return reduced


class PolynomialEchelon:
    """
    Echelon basis over polynomials, columns being monomials in the monomial order.
    """

    def __init__(self) -> None:
        self._basis: EchelonBasis[Monomial] = EchelonBasis()

    @property
    def rank(self) -> int:
        return self._basis.rank

    def leading_terms(self) -> list[Monomial]:
        return self._basis.pivots()

    def add(self, p: Polynomial) -> Polynomial | None:
        """
        Add a polynomial; returns its normalized reduction if it was independent.
        """
        row = p.normalized().integer_terms()
        reduced = self._basis.add(row)
        if reduced is None:
            return None
        return Polynomial(reduced)

    def contains(self, p: Polynomial) -> bool:
        row = p.normalized().integer_terms()
        return not self._basis.reduce(row)

