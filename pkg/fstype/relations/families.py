"""
Seed relations and the relation families generating J_L.
"""

from collections import Counter
from itertools import combinations
from typing import Iterable

from fstype.common.base import HighestWeight, Monomial, x
from fstype.algebra.polynomial import Polynomial
from fstype.relations.base import FamilyKind, Provenance, RelationFamily


def seed_dc(N: int, k: int) -> Polynomial:
    """
    The degree-N coefficient of x_theta(z)^{k+1} = 0 in the modes x_11(-n).

    Sums x_11(-n_1)...x_11(-n_{k+1}) over ordered compositions n_1 + ... + n_{k+1} = N
    with all n_i >= 1, so equal monomials accumulate multinomial coefficients.

    Parameters:
    N (int): Degree, at least k + 1.
    k (int): Level, at least 1.

    Returns:
    Polynomial: Homogeneous of degree N and weight 2(k+1) e_1.
    """
    if k < 1 or N < k + 1:
        raise ValueError(f"Need N >= k + 1 >= 2, got {N=}, {k=}")
    counts: Counter[Monomial] = Counter()
    # Compositions of N into k + 1 parts correspond to k cut points in 1..N-1.
    for cuts in combinations(range(1, N), k):
        bounds = (0,) + cuts + (N,)
        parts = [b - a for a, b in zip(bounds, bounds[1:])]
        counts[Monomial.of(*(x(1, 1, n) for n in parts))] += 1
    return Polynomial(counts)


def seed_ic(r: int, highest_weight: HighestWeight) -> Polynomial:
    """
    x_11(-1)^{k_0 + ... + k_{r-1} + 1}; for r = 1 this is x_11(-1)^{k_0 + 1}.
    """
    if not 1 <= r <= highest_weight.ell:
        raise ValueError(f"Initial-condition index must be in 1..{highest_weight.ell}, got {r=}")
    exponent = highest_weight.partial(r) + 1
    return Polynomial.from_monomial(Monomial(((x(1, 1, 1), exponent),)))


class DifferenceConditionFamily(RelationFamily):
    """
    U(g_0) applied to the coefficients of x_theta(z)^{k+1} = 0, for N >= k + 1.
    """

    def seeds(self, d_max: int) -> Iterable[tuple[Provenance, Polynomial]]:
        k = self.highest_weight.level
        for N in range(k + 1, d_max + 1):
            yield Provenance(FamilyKind.DC_FAMILY, N), seed_dc(N, k)

    def operators(self, provenance: Provenance) -> frozenset[int]:
        return frozenset(range(1, self.highest_weight.ell))


class InitialConditionFamily(RelationFamily):
    """
    For r = 2..ell, the subalgebra g_(r) generated by x_{+-alpha_t}, t < r, applied
    to x_11(-1)^{k^(r)+1}, where k^(r) is the level of the first part of the split at r.
    """

    def seeds(self, d_max: int) -> Iterable[tuple[Provenance, Polynomial]]:
        for r in range(2, self.highest_weight.ell + 1):
            upper, _ = self.highest_weight.split(r)
            level = upper.level if upper is not None else 0
            if level + 1 <= d_max:
                yield Provenance(FamilyKind.IC_FAMILY, r), seed_ic(r, self.highest_weight)

    def operators(self, provenance: Provenance) -> frozenset[int]:
        if provenance.index is None:
            raise ValueError(f"Initial-condition provenance needs an index, got {provenance}")
        return frozenset(range(1, provenance.index))


class TopInitialCondition(RelationFamily):
    """
    The single relation x_11(-1)^{k_0 + 1}.
    """

    def seeds(self, d_max: int) -> Iterable[tuple[Provenance, Polynomial]]:
        if self.highest_weight.k[0] + 1 <= d_max:
            yield Provenance(FamilyKind.IC_TOP), seed_ic(1, self.highest_weight)

    def operators(self, provenance: Provenance) -> frozenset[int]:
        return frozenset()


def relation_families(highest_weight: HighestWeight) -> list[RelationFamily]:
    return [
        DifferenceConditionFamily(highest_weight),
        InitialConditionFamily(highest_weight),
        TopInitialCondition(highest_weight),
    ]
