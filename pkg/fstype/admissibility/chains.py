"""
Difference conditions and initial conditions on monomials.

A chain is a list of distinct colors whose intervals [i, j] are strictly nested,
outermost first. Difference conditions bound, for every depth n, the exponent
sum over a chain at depth n + 1 followed by a chain at depth n lying to its
right (j_1 <= i_{t+1}) by the level k. Initial conditions bound the exponent sum
of a depth-1 chain with outermost color (i_1, j_1) by k_0 + ... + k_{j_1 - 1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from fstype.common.base import Color, HighestWeight, Monomial, Variable

# Exponents of the colors at one depth.
ColorWeights = Mapping[Color, int]
Interval = tuple[int, int]


class WitnessKind(Enum):
    DIFFERENCE = "difference"
    INITIAL = "initial"


@dataclass(frozen=True)
class ChainWitness:
    """
    A chain configuration whose exponent sum exceeds its bound.

    Attributes:
        kind (WitnessKind): Which family of conditions is violated.
        n (int): Depth of the shallow chain; the deep chain sits at depth n + 1. Always 1 for initial conditions.
        deep (tuple[Color, ...]): Nested chain at depth n + 1, outermost first (empty for initial conditions).
        shallow (tuple[Color, ...]): Nested chain at depth n, outermost first.
        total (int): Sum of the exponents over both chains.
        bound (int): The bound that total exceeds.
    """
    kind: WitnessKind
    n: int
    deep: tuple[Color, ...]
    shallow: tuple[Color, ...]
    total: int
    bound: int

    def as_json(self) -> dict[str, object]:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "deep": [str(c) for c in self.deep],
            "shallow": [str(c) for c in self.shallow],
            "total": self.total,
            "bound": self.bound,
        }


@dataclass
class _ChainTable:
    """
    Best nested-chain sums for every sub-interval of [lo, hi].

    best[(i, j)] is the largest chain sum among chains inside [i, j]; when
    w[(i, j)] > 0 it is also the best chain with outermost color exactly (i, j).
    """
    weights: ColorWeights
    best: dict[Interval, int] = field(default_factory=dict)
    inner: dict[Interval, Interval | None] = field(default_factory=dict)

    def chain(self, outer: Interval) -> list[Color]:
        chain: list[Color] = []
        at: Interval | None = outer if self.best.get(outer, 0) > 0 else None
        while at is not None:
            color = Color(*at)
            if self.weights.get(color, 0) > 0:
                chain.append(color)
            at = self.inner[at]
        return chain


def _chain_table(w: ColorWeights, lo: int, hi: int) -> _ChainTable:
    table = _ChainTable(w)
    for span in range(hi - lo + 1):
        for i in range(lo, hi - span + 1):
            j = i + span
            inner_value, inner_at = 0, None
            if span > 0:
                # Ties go to the shrink on the right, i.e. toward greater colors.
                for candidate in ((i, j - 1), (i + 1, j)):
                    if table.best[candidate] > inner_value:
                        inner_value, inner_at = table.best[candidate], candidate
            table.best[(i, j)] = w.get(Color(i, j), 0) + inner_value
            table.inner[(i, j)] = inner_at
    return table


def max_nested_chain(w: ColorWeights, lo: int, hi: int) -> tuple[int, list[Color]]:
    """
    Maximum weight of a strictly nested chain of colors contained in [lo, hi].

    Parameters:
    w (ColorWeights): Nonnegative weight per color; missing colors weigh 0.
    lo (int): Left end of the bounding interval.
    hi (int): Right end of the bounding interval.

    Returns:
    tuple[int, list[Color]]: The maximum and one maximizing chain, outermost first.
    """
    if not 1 <= lo <= hi:
        raise ValueError(f"Invalid bounding interval [{lo},{hi}]")
    table = _chain_table(w, lo, hi)
    return table.best[(lo, hi)], table.chain((lo, hi))


def depth_weights(exponents: Mapping[Variable, int], depth: int) -> dict[Color, int]:
    return {v.color: e for v, e in exponents.items() if v.depth == depth and e > 0}


def _difference_violation(deep: ColorWeights, shallow: ColorWeights, n: int, k: int, ell: int) -> ChainWitness | None:
    if not deep and not shallow:
        return None
    deep_table = _chain_table(deep, 1, ell)
    shallow_table = _chain_table(shallow, 1, ell)
    best_total, best_c = -1, 1
    for c in range(1, ell + 1):
        total = deep_table.best[(1, c)] + shallow_table.best[(c, ell)]
        if total > best_total:
            best_total, best_c = total, c
    if best_total <= k:
        return None
    return ChainWitness(
        kind=WitnessKind.DIFFERENCE,
        n=n,
        deep=tuple(deep_table.chain((1, best_c))),
        shallow=tuple(shallow_table.chain((best_c, ell))),
        total=best_total,
        bound=k,
    )


def _initial_violation(first: ColorWeights, highest_weight: HighestWeight) -> ChainWitness | None:
    if not first:
        return None
    ell = highest_weight.ell
    table = _chain_table(first, 1, ell)
    for j in range(1, ell + 1):
        bound = highest_weight.partial(j)
        for i in range(1, j + 1):
            if first.get(Color(i, j), 0) > 0 and table.best[(i, j)] > bound:
                return ChainWitness(
                    kind=WitnessKind.INITIAL,
                    n=1,
                    deep=(),
                    shallow=tuple(table.chain((i, j))),
                    total=table.best[(i, j)],
                    bound=bound,
                )
    return None


def _require_rank(m: Monomial, ell: int) -> None:
    if m.max_index() > ell:
        raise ValueError(f"Monomial {m} has a color index above rank {ell}")


def dc_check(m: Monomial, k: int, ell: int | None = None) -> tuple[bool, ChainWitness | None]:
    """
    Check the difference conditions for level k.

    Parameters:
    m (Monomial): The monomial to check.
    k (int): The level, at least 1.
    ell (int | None): The rank; defaults to the largest index occurring in m.

    Returns:
    tuple[bool, ChainWitness | None]: Whether m satisfies the conditions, and a
    violating configuration at the smallest offending depth when it does not.
    """
    if k < 1:
        raise ValueError(f"Level must be positive, got {k=}")
    if ell is None:
        ell = max(m.max_index(), 1)
    _require_rank(m, ell)
    exponents = m.as_dict()
    for n in range(1, m.max_depth() + 1):
        witness = _difference_violation(depth_weights(exponents, n + 1), depth_weights(exponents, n), n, k, ell)
        if witness is not None:
            return False, witness
    return True, None


def ic_check(m: Monomial, highest_weight: HighestWeight) -> tuple[bool, ChainWitness | None]:
    """
    Check the initial conditions for the given highest weight; only depth-1 factors take part.
    """
    _require_rank(m, highest_weight.ell)
    witness = _initial_violation(depth_weights(m.as_dict(), 1), highest_weight)
    return witness is None, witness


class AdmissibilityChecker:
    """
    Incremental DC and IC test for backtracking enumeration.

    After the exponent of a variable at depth n changes, only the depth pairs
    (n, n - 1) and (n + 1, n), and for n = 1 the initial conditions, can change.
    """

    def __init__(self, highest_weight: HighestWeight):
        self.highest_weight = highest_weight
        self.level = highest_weight.level
        self.ell = highest_weight.ell

    def __call__(self, exponents: dict[Variable, int], changed: Variable) -> bool:
        n = changed.depth
        here = depth_weights(exponents, n)
        if n == 1 and _initial_violation(here, self.highest_weight) is not None:
            return False
        if n > 1 and _difference_violation(here, depth_weights(exponents, n - 1), n - 1, self.level, self.ell) is not None:
            return False
        return _difference_violation(depth_weights(exponents, n + 1), here, n, self.level, self.ell) is None

    def check(self, m: Monomial) -> bool:
        return dc_check(m, self.level, self.ell)[0] and ic_check(m, self.highest_weight)[0]
