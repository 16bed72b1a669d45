"""
fstype - bases and relations of W(L) in C_l^(1) standard modules.

Enumerates the admissible-monomial basis of W(L), generates the relations of
its presentation C[x_ij(-n)] / J_L, and checks degree by degree that the
standard monomials of the quotient are exactly the admissible monomials.
"""

__version__ = "0.1.0"
