"""
Enumeration of monomials by degree.
"""

import functools
from collections import defaultdict
from typing import Callable, Iterator

from fstype.common.base import Monomial, Variable, WeightVector, all_colors

# Called after an exponent is raised; returning False prunes that exponent and every larger one.
Admissible = Callable[[dict[Variable, int], Variable], bool]


def variables_up_to(ell: int, max_depth: int) -> list[Variable]:
    """
    All variables of depth at most max_depth, greatest first.
    """
    variables = [Variable(c, n) for n in range(1, max_depth + 1) for c in all_colors(ell)]
    return sorted(variables, reverse=True)


def iter_monomials(ell: int, max_degree: int, admissible: Admissible | None = None) -> Iterator[Monomial]:
    """
    Backtracking enumeration of monomials of degree at most max_degree.

    Variables are tried in decreasing order and each exponent is raised until the
    degree bound or the admissibility predicate stops it. The predicate must be
    closed under taking divisors, otherwise pruning would drop valid monomials.

    Parameters:
    ell (int): The rank.
    max_degree (int): Largest degree to produce.
    admissible (Admissible | None): Optional incremental filter.

    Returns:
    Iterator[Monomial]: Every accepted monomial exactly once, the unit first.
    """
    if max_degree < 0:
        raise ValueError(f"Degree bound must be nonnegative, got {max_degree=}")
    variables = variables_up_to(ell, max_degree)
    exponents: dict[Variable, int] = {}

    def extend(start: int, remaining: int) -> Iterator[Monomial]:
        yield Monomial.from_exponents(exponents)
        for idx in range(start, len(variables)):
            v = variables[idx]
            e = 1
            while v.depth * e <= remaining:
                exponents[v] = e
                if admissible is not None and not admissible(exponents, v):
                    break
                yield from extend(idx + 1, remaining - v.depth * e)
                e += 1
            exponents.pop(v, None)

    yield from extend(0, max_degree)


@functools.lru_cache(maxsize=None)
def monomials_of_degree(ell: int, degree: int) -> tuple[Monomial, ...]:
    """
    All monomials of exactly the given degree, ascending in the monomial order.
    """
    found = [m for m in iter_monomials(ell, degree) if m.degree() == degree]
    return tuple(sorted(found, key=lambda m: m.sort_key))


@functools.lru_cache(maxsize=None)
def weight_blocks(ell: int, degree: int) -> dict[WeightVector, tuple[Monomial, ...]]:
    """
    The monomials of a degree grouped by weight, each group ascending.
    """
    blocks: dict[WeightVector, list[Monomial]] = defaultdict(list)
    for m in monomials_of_degree(ell, degree):
        blocks[m.weight(ell)].append(m)
    return {w: tuple(ms) for w, ms in sorted(blocks.items(), reverse=True)}


def monomials_of_grade(ell: int, degree: int, weight: WeightVector | None = None) -> tuple[Monomial, ...]:
    if degree < 0:
        return ()
    if weight is None:
        return monomials_of_degree(ell, degree)
    return weight_blocks(ell, degree).get(tuple(weight), ())
