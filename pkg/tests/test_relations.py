import unittest
from collections import defaultdict
from math import comb

from test_utils import L0_RANK1, L0_RANK2, L2_RANK2, X11, X12, X22, X11_2, X11_3, mono, poly
from fstype.common.base import Grade, HighestWeight, Monomial, x
from fstype.algebra.echelon import PolynomialEchelon
from fstype.algebra.polynomial import Polynomial, leading_term
from fstype.relations.base import FamilyKind, Provenance
from fstype.relations.families import (
    DifferenceConditionFamily,
    InitialConditionFamily,
    TopInitialCondition,
    relation_families,
    seed_dc,
    seed_ic,
)
from fstype.relations.generators import generators, leading_terms, lowering_orbit

DEPTH_ONE_SQUARES = [
    mono(X11, X11),
    mono(X11, X12),
    mono(X12, X12),
    mono(X12, X22),
    mono(X22, X22),
]


def _by_grade(polys: list[Polynomial], ell: int) -> dict[Grade, list[Polynomial]]:
    grouped: dict[Grade, list[Polynomial]] = defaultdict(list)
    for p in polys:
        grouped[p.grade(ell)].append(p)
    return grouped


def _echelon(polys: list[Polynomial]) -> PolynomialEchelon:
    echelon = PolynomialEchelon()
    for p in polys:
        echelon.add(p)
    return echelon


class TestSeeds(unittest.TestCase):

    def test_seed_dc_small(self):
        self.assertEqual(seed_dc(2, 1), poly((1, mono(X11, X11))))
        self.assertEqual(seed_dc(3, 1), poly((2, mono(X11_2, X11))))
        self.assertEqual(seed_dc(4, 1), poly((2, mono(X11_3, X11)), (1, mono(X11_2, X11_2))))

    def test_seed_dc_invalid(self):
        with self.assertRaises(ValueError):
            seed_dc(1, 1)
        with self.assertRaises(ValueError):
            seed_dc(3, 0)

    def test_seed_dc_mass_and_grade(self):
        for k in range(1, 4):
            for N in range(k + 1, 13):
                p = seed_dc(N, k)
                self.assertEqual(sum(p.terms.values()), comb(N - 1, k))
                self.assertEqual(p.grade(1), (N, (2 * (k + 1),)))

    def test_seed_dc_leading_term(self):
        self.assertEqual(leading_term(seed_dc(5, 1)), mono(X11_3, X11_2))
        for k in range(1, 4):
            for N in range(k + 1, 13):
                q, s = divmod(N, k + 1)
                expected = Monomial.from_exponents({x(1, 1, q + 1): s, x(1, 1, q): k + 1 - s})
                self.assertEqual(leading_term(seed_dc(N, k)), expected, f"N={N} k={k}")

    def test_seed_ic(self):
        self.assertEqual(seed_ic(1, L0_RANK1), poly((1, mono(X11, X11))))
        self.assertEqual(seed_ic(2, L0_RANK2), poly((1, mono(X11, X11))))
        self.assertEqual(seed_ic(2, HighestWeight.of(0, 1, 0)), poly((1, mono(X11, X11))))
        self.assertEqual(seed_ic(3, HighestWeight.of(1, 1, 1, 0)), poly((1, Monomial(((X11, 4),)))))

    def test_seed_ic_invalid(self):
        with self.assertRaises(ValueError):
            seed_ic(0, L0_RANK2)
        with self.assertRaises(ValueError):
            seed_ic(3, L0_RANK2)


class TestFamilies(unittest.TestCase):

    def test_family_order(self):
        families = relation_families(L0_RANK2)
        self.assertEqual(
            [type(f) for f in families],
            [DifferenceConditionFamily, InitialConditionFamily, TopInitialCondition],
        )

    def test_difference_family_seeds(self):
        family = DifferenceConditionFamily(HighestWeight.of(1, 1, 0))
        self.assertEqual([p.index for p, _ in family.seeds(5)], [3, 4, 5])
        self.assertEqual(family.operators(Provenance(FamilyKind.DC_FAMILY, 3)), frozenset({1}))

    def test_initial_family_respects_degree(self):
        hw = HighestWeight.of(1, 1, 0, 0)
        family = InitialConditionFamily(hw)
        self.assertEqual([p.index for p, _ in family.seeds(2)], [])
        self.assertEqual([p.index for p, _ in family.seeds(3)], [2, 3])
        self.assertEqual(family.operators(Provenance(FamilyKind.IC_FAMILY, 3)), frozenset({1, 2}))

    def test_top_condition(self):
        family = TopInitialCondition(HighestWeight.of(2, 0))
        self.assertEqual(list(family.seeds(2)), [])
        self.assertEqual(list(family.seeds(3)), [(Provenance(FamilyKind.IC_TOP), poly((1, Monomial(((X11, 3),)))))])

    def test_provenance_text(self):
        self.assertEqual(str(Provenance(FamilyKind.DC_FAMILY, 3)), "dcFamily(3)")
        self.assertEqual(str(Provenance(FamilyKind.IC_TOP)), "icTop")


class TestLoweringOrbit(unittest.TestCase):

    def test_square_of_top_variable(self):
        orbit = lowering_orbit(poly((1, mono(X11, X11))), {1}, 2)
        self.assertEqual(orbit, [
            poly((1, mono(X11, X11))),
            poly((1, mono(X11, X12))),
            poly((2, mono(X12, X12)), (1, mono(X11, X22))),
            poly((1, mono(X12, X22))),
            poly((1, mono(X22, X22))),
        ])
        echelon = PolynomialEchelon()
        for p in orbit:
            echelon.add(p)
        self.assertEqual(echelon.leading_terms(), sorted(DEPTH_ONE_SQUARES))

    def test_no_operators(self):
        p = poly((2, mono(X11_2, X11)))
        self.assertEqual(lowering_orbit(p, set(), 2), [p.normalized()])

    def test_single_variable(self):
        orbit = lowering_orbit(poly((1, mono(X11))), {1}, 2)
        self.assertEqual(orbit, [poly((1, mono(X11))), poly((1, mono(X12))), poly((1, mono(X22)))])

    def test_invalid_seed(self):
        with self.assertRaises(ValueError):
            lowering_orbit(poly((1, mono(X11)), (1, mono(X22))), {1}, 2)
        with self.assertRaises(ValueError):
            lowering_orbit(Polynomial.zero(), {1}, 2)
        with self.assertRaises(ValueError):
            lowering_orbit(poly((1, mono(X11))), {2}, 2)

    def test_dc_family_weight_law(self):
        for k in (1, 2):
            for N in range(k + 1, k + 4):
                for p in lowering_orbit(seed_dc(N, k), {1, 2}, 3):
                    degree, weight = p.grade(3)
                    self.assertEqual(degree, N)
                    self.assertEqual(sum(weight), 2 * (k + 1))

    def test_orbit_of_top_square_rank_three(self):
        # one vector per composition of 4 into 3 parts
        orbit = lowering_orbit(poly((1, mono(X11, X11))), {1, 2}, 3)
        self.assertEqual(len(orbit), 15)
        self.assertTrue(all(p.degree() == 2 for p in orbit))
        self.assertEqual(len({p.weight(3) for p in orbit}), 15)

    def test_independent_of_operator_order(self):
        cases = [(seed_dc(N, k), range(1, 3), 3) for k in (1, 2) for N in range(k + 1, k + 4)]
        hw = HighestWeight.of(1, 0, 1, 1)
        cases += [(seed_ic(r, hw), range(1, r), hw.ell) for r in range(2, hw.ell + 1)]
        for seed, operators, ell in cases:
            forward = _by_grade(lowering_orbit(seed, list(operators), ell), ell)
            backward = _by_grade(lowering_orbit(seed, list(reversed(operators)), ell), ell)
            self.assertEqual(forward.keys(), backward.keys())
            for grade, polys in forward.items():
                echelon = _echelon(backward[grade])
                self.assertEqual(_echelon(polys).leading_terms(), echelon.leading_terms(), f"{seed} {grade}")
                for p in polys:
                    self.assertTrue(echelon.contains(p))

    def test_ic_support_law(self):
        hw = HighestWeight.of(1, 0, 1, 1)
        for r in range(2, hw.ell + 1):
            for p in lowering_orbit(seed_ic(r, hw), range(1, r), hw.ell):
                for m in p.terms:
                    self.assertTrue(all(v.depth == 1 and v.color.j <= r for v in m.variables()), f"{m} r={r}")


class TestGenerators(unittest.TestCase):

    def test_rank_one(self):
        gs = generators(L0_RANK1, 3)
        self.assertEqual(gs.polynomials(), [poly((1, mono(X11, X11))), poly((1, mono(X11_2, X11)))])
        self.assertEqual([str(e.provenance) for e in gs], ["dcFamily(2)", "dcFamily(3)"])

    def test_top_node_kills_depth_one(self):
        gs = generators(L2_RANK2, 1)
        self.assertEqual(len(gs), 3)
        self.assertEqual([lt for lt, _ in leading_terms(gs)], [mono(X11), mono(X12), mono(X22)])
        self.assertTrue(all(e.provenance == Provenance(FamilyKind.IC_FAMILY, 2) for e in gs))

    def test_rank_two_degree_two(self):
        gs = generators(L0_RANK2, 2)
        self.assertEqual(len(gs), 5)
        self.assertEqual([lt for lt, _ in leading_terms(gs)], DEPTH_ONE_SQUARES)
        self.assertTrue(all(e.provenance == Provenance(FamilyKind.DC_FAMILY, 2) for e in gs))

    def test_degree_bound(self):
        with self.assertRaises(ValueError):
            generators(L0_RANK1, 0)

    def test_entries_homogeneous_normalized_and_independent(self):
        for hw in (HighestWeight.of(1, 0, 1), HighestWeight.of(0, 1, 1), HighestWeight.of(1, 1, 0, 0)):
            gs = generators(hw, 4)
            self.assertGreater(len(gs), 0)
            for entry in gs:
                self.assertEqual(entry.polynomial.grade(hw.ell), entry.grade)
                self.assertEqual(entry.polynomial.normalized(), entry.polynomial)
                self.assertLessEqual(entry.degree, 4)
            for block in gs.by_grade().values():
                echelon = PolynomialEchelon()
                for entry in block:
                    self.assertIsNotNone(echelon.add(entry.polynomial))

    def test_leading_terms_distinct_within_block(self):
        gs = generators(HighestWeight.of(1, 0, 1), 4)
        for block in gs.by_grade().values():
            lts = [e.leading_term() for e in block]
            self.assertEqual(len(set(lts)), len(lts))

    def test_export_lines(self):
        gs = generators(L0_RANK1, 3)
        self.assertEqual(gs.to_lines(), [
            "dcFamily(2): 1*x[1,1](-1)^2",
            "dcFamily(3): 1*x[1,1](-2) x[1,1](-1)",
        ])
        self.assertEqual(
            gs.entries[1].as_json(),
            {
                "provenance": "dcFamily(3)",
                "degree": 3,
                "weight": [4],
                "leadingTerm": "x[1,1](-2) x[1,1](-1)",
                "polynomial": "1*x[1,1](-2) x[1,1](-1)",
            },
        )


if __name__ == '__main__':
    unittest.main()
