"""
Lowering orbits of seed relations and the assembled generator set of J_L.
"""

import logging
from collections import defaultdict
from typing import Iterable

from fstype.common.base import Grade, HighestWeight, Monomial
from fstype.algebra.echelon import PolynomialEchelon
from fstype.algebra.lowering import lower
from fstype.algebra.polynomial import Polynomial
from fstype.relations.base import GeneratorEntry, GeneratorSet, Provenance
from fstype.relations.families import relation_families

logger = logging.getLogger(__name__)


def lowering_orbit(seed: Polynomial, allowed: Iterable[int], ell: int, max_steps: int | None = None) -> list[Polynomial]:
    """
    A linearly independent spanning list of the closure of seed under the lowering operators.

    Breadth-first: every vector found independent is lowered by each allowed
    operator in the next layer; images already in the span are not expanded,
    which loses nothing because the operators are linear. Each lowering moves
    one unit of weight from index t to t + 1, so no word is longer than
    (number of factors) * 2 * (ell - 1); that is the default step cap.

    Parameters:
    seed (Polynomial): A nonzero homogeneous polynomial.
    allowed (Iterable[int]): Operator indices in 1..ell-1, applied in the given order within each layer.
    ell (int): The rank.
    max_steps (int | None): Cap on the number of breadth-first layers.

    Returns:
    list[Polynomial]: Normalized orbit vectors, the seed first, all of the seed's degree.
    """
    if seed.is_zero() or not seed.is_homogeneous(ell):
        raise ValueError(f"Orbit seed must be nonzero and homogeneous, got {seed}")
    operators = list(dict.fromkeys(allowed))
    if any(not 1 <= t <= ell - 1 for t in operators):
        raise ValueError(f"Lowering operators must be in 1..{ell - 1}, got {operators}")
    if max_steps is None:
        factors = next(iter(seed.terms)).factor_count()
        max_steps = factors * 2 * max(ell - 1, 0)

    echelon = PolynomialEchelon()
    start = seed.normalized()
    echelon.add(start)
    orbit = [start]
    frontier = [start]
    steps = 0
    while frontier and operators and steps < max_steps:
        next_frontier: list[Polynomial] = []
        for p in frontier:
            for t in operators:
                image = lower(t, p, ell)
                if image.is_zero():
                    continue
                image = image.normalized()
                if echelon.add(image) is not None:
                    orbit.append(image)
                    next_frontier.append(image)
        logger.debug(f"Orbit layer {steps + 1}: {len(next_frontier)} new vectors")
        frontier = next_frontier
        steps += 1
    return orbit


def generators(highest_weight: HighestWeight, d_max: int) -> GeneratorSet:
    """
    Generators of J_L of degree at most d_max.

    The difference family first, then the initial-condition families, then
    x_11(-1)^{k_0+1}. Within each (degree, weight) block generators are kept in
    echelon-reduced normalized form; a vector already in the block's span is
    dropped, so the first family to reach a relation keeps its provenance.

    Parameters:
    highest_weight (HighestWeight): The highest weight.
    d_max (int): Degree truncation, at least 1.

    Returns:
    GeneratorSet: The tagged generators.
    """
    if d_max < 1:
        raise ValueError(f"Degree truncation must be at least 1, got {d_max=}")
    ell = highest_weight.ell
    blocks: dict[Grade, PolynomialEchelon] = defaultdict(PolynomialEchelon)
    result = GeneratorSet(highest_weight=highest_weight, max_degree=d_max)
    for family in relation_families(highest_weight):
        for provenance, seed in family.seeds(d_max):
            added = 0
            for p in lowering_orbit(seed, sorted(family.operators(provenance)), ell):
                grade = p.grade(ell)
                reduced = blocks[grade].add(p)
                if reduced is None:
                    logger.debug(f"{provenance}: dropped dependent relation {p}")
                    continue
                if any(c < 0 for c in reduced.terms.values()):
                    logger.debug(f"{provenance}: echelon representative has negative coefficients: {reduced}")
                result.entries.append(GeneratorEntry(reduced, provenance, grade))
                added += 1
            logger.debug(f"{provenance}: {added} generators")
    logger.info(f"Assembled {len(result)} generators for {highest_weight} up to degree {d_max}")
    return result


def leading_terms(generator_set: GeneratorSet) -> list[tuple[Monomial, Provenance]]:
    """
    Leading terms of the generators with their provenance, duplicates collapsed to the first.
    """
    seen: set[Monomial] = set()
    terms: list[tuple[Monomial, Provenance]] = []
    for entry in generator_set:
        lt = entry.leading_term()
        if lt not in seen:
            seen.add(lt)
            terms.append((lt, entry.provenance))
    return terms
