"""
Base relation-family interface and the generator set of the ideal J_L.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from fstype.common.base import Grade, HighestWeight, Monomial, grade_key
from fstype.algebra.polynomial import Polynomial, leading_term


class FamilyKind(Enum):
    """
    The three generator families of J_L.
    """
    DC_FAMILY = "dcFamily"
    IC_FAMILY = "icFamily"
    IC_TOP = "icTop"


@dataclass(frozen=True)
class Provenance:
    """
    Which family, and which member of it, produced a generator.

    index is N for the difference family and r for the initial-condition family.
    """
    kind: FamilyKind
    index: int | None = None

    def __str__(self) -> str:
        if self.index is None:
            return self.kind.value
        return f"{self.kind.value}({self.index})"


@dataclass(frozen=True)
class GeneratorEntry:
    polynomial: Polynomial
    provenance: Provenance
    grade: Grade

    @property
    def degree(self) -> int:
        return self.grade[0]

    def leading_term(self) -> Monomial:
        return leading_term(self.polynomial)

    def as_json(self) -> dict[str, object]:
        return {
            "provenance": str(self.provenance),
            "degree": self.degree,
            "weight": list(self.grade[1]),
            "leadingTerm": str(self.leading_term()),
            "polynomial": str(self.polynomial),
        }


@dataclass
class GeneratorSet:
    """
    Homogeneous, normalized generators of J_L, linearly independent within each (degree, weight) block.
    """
    highest_weight: HighestWeight
    max_degree: int
    entries: list[GeneratorEntry] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def by_grade(self) -> dict[Grade, list[GeneratorEntry]]:
        blocks: dict[Grade, list[GeneratorEntry]] = defaultdict(list)
        for entry in self.entries:
            blocks[entry.grade].append(entry)
        return {g: blocks[g] for g in sorted(blocks, key=grade_key)}

    def polynomials(self) -> list[Polynomial]:
        return [entry.polynomial for entry in self.entries]

    def to_lines(self) -> list[str]:
        return [f"{entry.provenance}: {entry.polynomial}" for entry in self.entries]


class RelationFamily(ABC):
    """
    Abstract base class for a family of relations on W(L).

    A family supplies highest-weight seed relations together with the lowering
    operators whose action on the seeds generates the whole family.
    """

    def __init__(self, highest_weight: HighestWeight) -> None:
        self.highest_weight = highest_weight

    @abstractmethod
    def seeds(self, d_max: int) -> Iterable[tuple[Provenance, Polynomial]]:
        """
        Seed relations of degree at most d_max.

        Parameters:
        d_max (int): Degree truncation.

        Returns:
        Iterable[tuple[Provenance, Polynomial]]: Tagged seeds.
        """
        pass

    @abstractmethod
    def operators(self, provenance: Provenance) -> frozenset[int]:
        """
        Indices t of the lowering operators x_{-alpha_t} acting on the given seed.
        """
        pass
