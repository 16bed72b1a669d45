"""
Common data models and types used throughout the fstype package.

Colors, variables and monomials of the polynomial algebra C[x_ij(-n)], the
linear order on them, and the highest weight of a standard module.
"""

from __future__ import annotations

import argparse
import functools
import re
from dataclasses import dataclass
from enum import Enum
from typing import Any, Mapping

# Type aliases for improved code readability
WeightVector = tuple[int, ...]
Grade = tuple[int, WeightVector]


class Ordering(Enum):
    """
    Result of comparing two elements in a total order.
    """
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, a: Any, b: Any) -> Ordering:
        if a < b:
            return cls.LESS
        if a == b:
            return cls.EQUAL
        return cls.GREATER


@functools.total_ordering
@dataclass(frozen=True)
class Color:
    """
    A color (i, j), 1 <= i <= j, standing for the root e_i + e_j.

    Colors are ordered so that (1, 1) is the greatest: (i', j') < (i, j) if i' > i,
    or i' = i and j' > j.
    """
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i <= self.j:
            raise ValueError(f"Color indices must satisfy 1 <= i <= j, got ({self.i},{self.j})")

    @property
    def key(self) -> tuple[int, int]:
        return (-self.i, -self.j)

    def contains(self, other: Color) -> bool:
        """
        Whether the interval [i, j] contains the interval of other.
        """
        return self.i <= other.i and other.j <= self.j

    def __lt__(self, other: Color) -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def all_colors(ell: int) -> list[Color]:
    """
    All colors for rank ell, listed by (i, j).

    Parameters:
    ell (int): The rank.

    Returns:
    list[Color]: ell(ell+1)/2 colors.
    """
    if ell < 1:
        raise ValueError(f"Rank must be positive, got {ell=}")
    return [Color(i, j) for i in range(1, ell + 1) for j in range(i, ell + 1)]


@functools.total_ordering
@dataclass(frozen=True)
class Variable:
    """
    The variable x_color(-depth).

    Deeper variables are smaller; at equal depth the color order decides.
    """
    color: Color
    depth: int

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError(f"Variable depth must be at least 1, got {self.depth}")

    @property
    def key(self) -> tuple[int, int, int]:
        return (-self.depth, -self.color.i, -self.color.j)

    def __lt__(self, other: Variable) -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        return f"x[{self.color.i},{self.color.j}](-{self.depth})"


def x(i: int, j: int, depth: int) -> Variable:
    """
    Shorthand for the variable x_ij(-depth).
    """
    return Variable(Color(i, j), depth)


# Appended after the factor keys of every monomial. It is larger than any
# variable key, so a monomial whose factors are a proper prefix of another's
# compares as the greater one.
_END_OF_FACTORS = (0,)

_FACTOR_PATTERN = re.compile(r"x\[(\d+),(\d+)\]\(-(\d+)\)(?:\^(\d+))?")


@functools.total_ordering
@dataclass(frozen=True)
class Monomial:
    """
    A monomial in the variables x_ij(-n), stored as (variable, exponent) pairs
    ascending in the variable order. The empty monomial is 1.
    """
    exponents: tuple[tuple[Variable, int], ...] = ()

    def __post_init__(self):
        for v, e in self.exponents:
            if e <= 0:
                raise ValueError(f"Monomial exponents must be positive, got {v}^{e}")
        for (a, _), (b, _) in zip(self.exponents, self.exponents[1:]):
            if not a.key < b.key:
                raise ValueError(f"Monomial variables must be distinct and ascending, got {a} before {b}")

    @classmethod
    def from_exponents(cls, exponents: Mapping[Variable, int]) -> Monomial:
        items = sorted((v, e) for v, e in exponents.items() if e != 0)
        return cls(tuple(items))

    @classmethod
    def of(cls, *variables: Variable) -> Monomial:
        """
        The product of the given variables, with repetition.
        """
        counts: dict[Variable, int] = {}
        for v in variables:
            counts[v] = counts.get(v, 0) + 1
        return cls.from_exponents(counts)

    @classmethod
    def parse(cls, text: str) -> Monomial:
        """
        Parse the canonical text form, e.g. "x[1,1](-2) x[2,2](-1)^3", or "1".
        """
        text = text.strip()
        if text == "1":
            return cls()
        counts: dict[Variable, int] = {}
        for token in text.split():
            match = _FACTOR_PATTERN.fullmatch(token)
            if match is None:
                raise ValueError(f"Not a monomial factor: '{token}'")
            i, j, depth, e = match.groups()
            v = x(int(i), int(j), int(depth))
            counts[v] = counts.get(v, 0) + int(e or 1)
        return cls.from_exponents(counts)

    def as_dict(self) -> dict[Variable, int]:
        return dict(self.exponents)

    def exponent(self, v: Variable) -> int:
        for w, e in self.exponents:
            if w == v:
                return e
        return 0

    def variables(self) -> list[Variable]:
        return [v for v, _ in self.exponents]

    def factors(self) -> list[Variable]:
        """
        The factors with repetition, greatest first.
        """
        return [v for v, e in reversed(self.exponents) for _ in range(e)]

    def factor_count(self) -> int:
        return sum(e for _, e in self.exponents)

    def degree(self) -> int:
        return sum(v.depth * e for v, e in self.exponents)

    def weight(self, ell: int) -> WeightVector:
        """
        Number of occurrences of each index 1..ell across the colors, with multiplicity.
        """
        w = [0] * ell
        for v, e in self.exponents:
            if v.color.j > ell:
                raise ValueError(f"Variable {v} does not exist for rank {ell}")
            w[v.color.i - 1] += e
            w[v.color.j - 1] += e
        return tuple(w)

    def grade(self, ell: int) -> Grade:
        return (self.degree(), self.weight(ell))

    def max_index(self) -> int:
        return max((v.color.j for v, _ in self.exponents), default=0)

    def max_depth(self) -> int:
        return max((v.depth for v, _ in self.exponents), default=0)

    def is_unit(self) -> bool:
        return not self.exponents

    def divides(self, other: Monomial) -> bool:
        mine = other.as_dict()
        return all(mine.get(v, 0) >= e for v, e in self.exponents)

    def shifted(self, by: int = 1) -> Monomial:
        """
        The monomial with every depth increased by the given amount.
        """
        return Monomial(tuple((Variable(v.color, v.depth + by), e) for v, e in self.exponents))

    @functools.cached_property
    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        keys = [v.key for v, e in reversed(self.exponents) for _ in range(e)]
        return tuple(keys) + (_END_OF_FACTORS,)

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        counts = self.as_dict()
        for v, e in other.exponents:
            counts[v] = counts.get(v, 0) + e
        return Monomial.from_exponents(counts)

    def __lt__(self, other: Monomial) -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return " ".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self.exponents)


UNIT = Monomial()


def multiply(m1: Monomial, m2: Monomial) -> Monomial:
    return m1 * m2


def compare_colors(a: Color, b: Color) -> Ordering:
    return Ordering.of(a.key, b.key)


def compare_variables(u: Variable, v: Variable) -> Ordering:
    return Ordering.of(u.key, v.key)


def compare_monomials(m1: Monomial, m2: Monomial) -> Ordering:
    """
    Compare monomials by their descending factor sequences, greatest factor first.

    When one sequence is a proper prefix of the other, the monomial with more
    factors is the smaller one.
    """
    return Ordering.of(m1.sort_key, m2.sort_key)


@dataclass(frozen=True)
class HighestWeight:
    """
    Highest weight k_0 L_0 + k_1 L_1 + ... + k_ell L_ell of a standard module.

    Attributes:
        k (tuple[int, ...]): The coefficients (k_0, ..., k_ell), nonnegative, at least one positive.
    """
    k: tuple[int, ...]

    def __post_init__(self):
        if len(self.k) < 2:
            raise ValueError(f"Highest weight needs k_0..k_ell with ell >= 1, got {self.k}")
        if any(c < 0 for c in self.k):
            raise ValueError(f"Highest weight coefficients must be nonnegative, got {self.k}")
        if sum(self.k) < 1:
            raise ValueError(f"Highest weight must have positive level, got {self.k}")

    @classmethod
    def of(cls, *k: int) -> HighestWeight:
        return cls(tuple(k))

    @classmethod
    def fundamental(cls, ell: int, r: int) -> HighestWeight:
        """
        The fundamental weight L_r for rank ell, 0 <= r <= ell.
        """
        if not 0 <= r <= ell:
            raise ValueError(f"Fundamental weight index must be in 0..{ell}, got {r=}")
        return cls(tuple(1 if s == r else 0 for s in range(ell + 1)))

    @property
    def ell(self) -> int:
        return len(self.k) - 1

    @property
    def level(self) -> int:
        return sum(self.k)

    def partial(self, r: int) -> int:
        """
        k_0 + ... + k_{r-1}, the level of the first part of split(r).
        """
        if not 1 <= r <= self.ell:
            raise ValueError(f"Partial level index must be in 1..{self.ell}, got {r=}")
        return sum(self.k[:r])

    def copartial(self, r: int) -> int:
        """
        k_r + ... + k_ell, the level of the second part of split(r).
        """
        if not 1 <= r <= self.ell:
            raise ValueError(f"Partial level index must be in 1..{self.ell}, got {r=}")
        return sum(self.k[r:])

    def split(self, r: int) -> tuple[HighestWeight | None, HighestWeight | None]:
        """
        Split into (k_0 L_0 + ... + k_{r-1} L_{r-1}, k_r L_r + ... + k_ell L_ell).

        A part of level zero is returned as None.
        """
        upper = tuple(c if s < r else 0 for s, c in enumerate(self.k))
        lower = tuple(c if s >= r else 0 for s, c in enumerate(self.k))
        return (
            HighestWeight(upper) if self.partial(r) else None,
            HighestWeight(lower) if self.copartial(r) else None,
        )

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.k)


def parse_weights(s: str) -> tuple[int, ...]:
    """
    Parse a comma-separated list of nonnegative integers, k_0 first.

    Parameters:
    s (str): Text such as "1,0,0".

    Returns:
    tuple[int, ...]: Parsed coefficients.
    """
    try:
        values = tuple(int(part) for part in s.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"Not a comma-separated list of integers: '{s}'")
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"Weights must be nonnegative: '{s}'")
    return values


def to_json_default(o: Any) -> Any:
    """
    Custom JSON serializer for fstype types.

    Parameters:
    o (Any): Object to serialize

    Returns:
    Any: JSON-serializable representation
    """
    if isinstance(o, (Monomial, Variable, Color)):
        return str(o)
    elif isinstance(o, HighestWeight):
        return list(o.k)
    elif hasattr(o, "as_json"):
        return o.as_json()
    elif isinstance(o, (set, frozenset)):
        return sorted(o)
    else:
        return o.__dict__


def grade_key(grade: Grade) -> tuple[int, tuple[int, ...]]:
    """
    Sort key placing grades by degree, then by weight with the heaviest first index first.
    """
    degree, weight = grade
    return (degree, tuple(-w for w in weight))
