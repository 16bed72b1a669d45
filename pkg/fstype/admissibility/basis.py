"""
The admissible-monomial basis of W(L) and its graded character.
"""

import logging
from collections import Counter

from fstype.common.base import Grade, HighestWeight, Monomial, grade_key
from fstype.algebra.monomials import iter_monomials
from fstype.admissibility.chains import AdmissibilityChecker

logger = logging.getLogger(__name__)

Basis = dict[int, list[Monomial]]


def enumerate_basis(highest_weight: HighestWeight, d_max: int) -> Basis:
    """
    Enumerate the monomials satisfying the difference and initial conditions.

    Admissibility is closed under taking divisors, so the backtracking search
    abandons a branch as soon as one exponent fails.

    Parameters:
    highest_weight (HighestWeight): The highest weight; fixes the rank and the level.
    d_max (int): Largest degree to enumerate.

    Returns:
    Basis: For each degree 0..d_max, the admissible monomials ascending in the monomial order.
    """
    if d_max < 0:
        raise ValueError(f"Degree bound must be nonnegative, got {d_max=}")
    checker = AdmissibilityChecker(highest_weight)
    basis: Basis = {d: [] for d in range(d_max + 1)}
    for m in iter_monomials(highest_weight.ell, d_max, checker):
        basis[m.degree()].append(m)
    for d in basis:
        basis[d].sort(key=lambda m: m.sort_key)
    logger.debug(f"Enumerated {sum(len(ms) for ms in basis.values())} admissible monomials for {highest_weight} up to degree {d_max}")
    return basis


def character(highest_weight: HighestWeight, d_max: int, refined: bool = False) -> list[int] | dict[Grade, int]:
    """
    Coefficients c_0..c_{d_max} of the graded character, c_d = number of admissible monomials of degree d.

    With refined=True, counts per (degree, weight) instead.
    """
    if refined:
        return refined_character(highest_weight, d_max)
    return [len(ms) for ms in enumerate_basis(highest_weight, d_max).values()]


def refined_character(highest_weight: HighestWeight, d_max: int) -> dict[Grade, int]:
    """
    Counts of admissible monomials per (degree, weight).
    """
    ell = highest_weight.ell
    counts: Counter[Grade] = Counter()
    for d, ms in enumerate_basis(highest_weight, d_max).items():
        for m in ms:
            counts[(d, m.weight(ell))] += 1
    return dict(sorted(counts.items(), key=lambda item: grade_key(item[0])))


def q_series(coefficients: list[int]) -> str:
    """
    Render coefficients as a truncated power series in q, e.g. "1 + q + 2q^4 + O(q^9)".
    """
    terms: list[str] = []
    for d, c in enumerate(coefficients):
        if c == 0:
            continue
        power = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
        if d == 0:
            terms.append(str(c))
        else:
            terms.append(power if c == 1 else f"{c}{power}")
    terms.append(f"O(q^{len(coefficients)})")
    return " + ".join(terms)
