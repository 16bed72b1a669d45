"""
Adjoint action of the lowering elements x_{-alpha_t} on C[x_ij(-n)].

On generators the action is given by the bracket table

    [x_{-alpha_i}, x_ij] = x_{i+1,j},  [x_{-alpha_j}, x_ij] = x_{i,j+1},  [x_{-alpha_i}, x_ii] = 2 x_{i,i+1},

and it extends to products as a derivation because the variables commute.
"""

from fractions import Fraction

from fstype.common.base import Color, Monomial, Variable
from fstype.algebra.polynomial import Polynomial


def lower_variable(t: int, v: Variable) -> list[tuple[Variable, int]]:
    """
    Image of a single variable under x_{-alpha_t}, as (variable, coefficient) pairs.

    Depth is preserved. Empty when t is not one of the color's indices.
    """
    i, j = v.color.i, v.color.j
    if t == i == j:
        return [(Variable(Color(t, t + 1), v.depth), 2)]
    image: list[tuple[Variable, int]] = []
    if t == i:
        image.append((Variable(Color(i + 1, j), v.depth), 1))
    if t == j:
        image.append((Variable(Color(i, j + 1), v.depth), 1))
    return image


def lower(t: int, p: Polynomial, ell: int) -> Polynomial:
    """
    Apply x_{-alpha_t} to a polynomial.

    Parameters:
    t (int): Simple root index, 1 <= t <= ell - 1.
    p (Polynomial): The polynomial to act on.
    ell (int): The rank.

    Returns:
    Polynomial: The image; each monomial has the input's degree and its weight
    with one index t moved to t + 1.
    """
    if not 1 <= t <= ell - 1:
        raise ValueError(f"Lowering index must be in 1..{ell - 1}, got {t=}")
    terms: dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        exponents = m.as_dict()
        for v, e in m.exponents:
            image = lower_variable(t, v)
            if not image:
                continue
            rest = dict(exponents)
            rest[v] = e - 1
            for w, bracket in image:
                out = dict(rest)
                out[w] = out.get(w, 0) + 1
                n = Monomial.from_exponents(out)
                terms[n] = terms.get(n, 0) + c * e * bracket
    return Polynomial(terms)
