"""
Truncated verification of the presentation W(L) = C[x_ij(-n)] / J_L.

For each degree and weight, the graded piece of J_L is spanned by products of
generators with monomials; eliminating on the minimal monomial gives the leading
terms of that piece, and the remaining (standard) monomials must be exactly the
monomials satisfying the difference and initial conditions.
"""

from __future__ import annotations

import functools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from tqdm import tqdm

from fstype.common.base import HighestWeight, Monomial, WeightVector
from fstype.algebra.echelon import EchelonBasis
from fstype.algebra.monomials import monomials_of_grade, weight_blocks
from fstype.algebra.polynomial import Polynomial
from fstype.admissibility.basis import enumerate_basis
from fstype.relations.base import GeneratorSet
from fstype.relations.generators import generators

logger = logging.getLogger(__name__)


@dataclass
class BlockReport:
    """
    Outcome for one (degree, weight) block.
    """
    weight: WeightVector
    num_monomials: int
    ideal_rank: int
    pivots: list[Monomial]
    standard: list[Monomial]
    basis: list[Monomial]
    spanning_count: int = 0

    @property
    def match(self) -> bool:
        return self.standard == self.basis

    @property
    def missing(self) -> list[Monomial]:
        """
        Admissible monomials that are not standard.
        """
        standard = set(self.standard)
        return [m for m in self.basis if m not in standard]

    @property
    def unexpected(self) -> list[Monomial]:
        """
        Standard monomials that are not admissible.
        """
        basis = set(self.basis)
        return [m for m in self.standard if m not in basis]

    def as_json(self) -> dict[str, object]:
        return {
            "weight": list(self.weight),
            "numMonomials": self.num_monomials,
            "idealRank": self.ideal_rank,
            "pivots": [str(m) for m in self.pivots],
            "standard": [str(m) for m in self.standard],
            "basis": [str(m) for m in self.basis],
            "match": self.match,
        }


@dataclass
class GradedReport:
    """
    All weight blocks of one degree.
    """
    highest_weight: HighestWeight
    degree: int
    blocks: list[BlockReport] = field(default_factory=list)

    @property
    def match(self) -> bool:
        return all(b.match for b in self.blocks)

    @property
    def num_standard(self) -> int:
        return sum(len(b.standard) for b in self.blocks)

    @property
    def num_basis(self) -> int:
        return sum(len(b.basis) for b in self.blocks)

    def as_json(self) -> dict[str, object]:
        return {"degree": self.degree, "blocks": self.blocks, "match": self.match}


@dataclass
class VerificationSummary:
    """
    Aggregate of the per-degree reports of one verification run.
    """
    highest_weight: HighestWeight
    max_degree: int
    degrees: list[GradedReport] = field(default_factory=list)

    @property
    def match(self) -> bool:
        return all(r.match for r in self.degrees)

    def as_json(self) -> dict[str, object]:
        return {
            "ell": self.highest_weight.ell,
            "weights": list(self.highest_weight.k),
            "maxDegree": self.max_degree,
            "degrees": self.degrees,
            "match": self.match,
        }


def graded_component(generator_set: GeneratorSet, d: int, weight: WeightVector | None = None) -> list[Polynomial]:
    """
    Spanning products m * p of the degree-d (and weight-mu) piece of the ideal.

    Parameters:
    generator_set (GeneratorSet): Homogeneous generators.
    d (int): Degree.
    weight (WeightVector | None): Optional weight filter.

    Returns:
    list[Polynomial]: One product per generator and multiplier monomial of the complementary grade.
    """
    ell = generator_set.highest_weight.ell
    products: list[Polynomial] = []
    for entry in generator_set:
        degree, gen_weight = entry.grade
        if degree > d:
            continue
        if weight is None:
            multipliers = monomials_of_grade(ell, d - degree)
        else:
            rest = tuple(a - b for a, b in zip(weight, gen_weight))
            if any(r < 0 for r in rest):
                continue
            multipliers = monomials_of_grade(ell, d - degree, rest)
        products.extend(entry.polynomial * m for m in multipliers)
    return products


def standard_monomials(polys: list[Polynomial], d: int, ell: int, weight: WeightVector | None = None) -> tuple[list[Monomial], list[Monomial]]:
    """
    Pivots and standard monomials of the span of homogeneous polynomials of one grade.

    Columns are the monomials of the grade, ascending; each row pivots on its
    minimal monomial. The result depends only on the row space.

    Parameters:
    polys (list[Polynomial]): Polynomials of degree d (and weight mu when given).
    d (int): Degree.
    ell (int): The rank.
    weight (WeightVector | None): Optional weight.

    Returns:
    tuple[list[Monomial], list[Monomial]]: (pivots, standard), both ascending.
    """
    columns = monomials_of_grade(ell, d, weight)
    index = {m: i for i, m in enumerate(columns)}
    rows: list[dict[int, int]] = []
    for p in polys:
        if p.is_zero():
            continue
        row: dict[int, int] = {}
        for m, c in p.normalized().integer_terms().items():
            col = index.get(m)
            if col is None:
                raise ValueError(f"Polynomial is not of degree {d} and weight {weight}: {p}")
            row[col] = c
        rows.append(row)
    echelon: EchelonBasis[int] = EchelonBasis()
    for row in rows:
        echelon.add(row)
        if echelon.rank == len(columns):
            break
    pivot_cols = set(echelon.pivots())
    pivots = [columns[i] for i in sorted(pivot_cols)]
    standard = [m for i, m in enumerate(columns) if i not in pivot_cols]
    return pivots, standard


def spanning_monomials(generator_set: GeneratorSet, d: int, weight: WeightVector | None = None) -> list[Monomial]:
    """
    Monomials of the grade not divisible by any generator's leading term.

    These are what remains of the spanning set after excluding multiples of
    leading terms; the standard monomials are always among them.
    """
    ell = generator_set.highest_weight.ell
    lts = [e.leading_term() for e in generator_set if e.degree <= d]
    return [m for m in monomials_of_grade(ell, d, weight) if not any(lt.divides(m) for lt in lts)]


def verify_block(generator_set: GeneratorSet, d: int, weight: WeightVector, basis: list[Monomial]) -> BlockReport:
    ell = generator_set.highest_weight.ell
    rows = graded_component(generator_set, d, weight)
    pivots, standard = standard_monomials(rows, d, ell, weight)
    report = BlockReport(
        weight=weight,
        num_monomials=len(monomials_of_grade(ell, d, weight)),
        ideal_rank=len(pivots),
        pivots=pivots,
        standard=standard,
        basis=basis,
        spanning_count=len(spanning_monomials(generator_set, d, weight)),
    )
    if not report.match:
        logger.warning(
            f"Mismatch at degree {d}, weight {weight}: "
            f"admissible but not standard {[str(m) for m in report.missing]}, "
            f"standard but not admissible {[str(m) for m in report.unexpected]}"
        )
    return report


def verify_presentation(highest_weight: HighestWeight, d_max: int, workers: int = 1, progress: bool = False) -> list[GradedReport]:
    """
    Compare standard monomials of C[x_ij(-n)]/J_L with admissible monomials, degree by degree.

    Parameters:
    highest_weight (HighestWeight): The highest weight.
    d_max (int): Degree truncation.
    workers (int): Worker processes for block verification; 1 runs in-process.
    progress (bool): Show a progress bar over degrees.

    Returns:
    list[GradedReport]: One report per degree 0..d_max.
    """
    if d_max < 0:
        raise ValueError(f"Degree bound must be nonnegative, got {d_max=}")
    ell = highest_weight.ell
    generator_set = generators(highest_weight, max(d_max, 1))
    basis = enumerate_basis(highest_weight, d_max)
    reports: list[GradedReport] = []
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for d in tqdm(range(d_max + 1), desc="degrees", disable=not progress):
            basis_by_weight: dict[WeightVector, list[Monomial]] = {}
            for m in basis[d]:
                basis_by_weight.setdefault(m.weight(ell), []).append(m)
            weights = list(weight_blocks(ell, d))
            slices = [basis_by_weight.get(w, []) for w in weights]
            task = functools.partial(verify_block, generator_set, d)
            if executor is None:
                blocks = list(map(task, weights, slices))
            else:
                blocks = list(executor.map(task, weights, slices))
            report = GradedReport(highest_weight, d, blocks)
            logger.info(f"Degree {d}: {report.num_standard} standard, {report.num_basis} admissible, match={report.match}")
            reports.append(report)
    finally:
        if executor is not None:
            executor.shutdown()
    return reports


def aggregate_reports(highest_weight: HighestWeight, d_max: int, reports: list[GradedReport]) -> VerificationSummary:
    return VerificationSummary(highest_weight=highest_weight, max_degree=d_max, degrees=reports)
