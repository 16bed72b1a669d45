import json
import random
import unittest

from test_utils import (
    L0_RANK1,
    L0_RANK2,
    L1_RANK1,
    L2_RANK2,
    RR_COUNTS,
    X11,
    X12,
    X22,
    X11_2,
    mono,
    poly,
    rr_partition_count,
)
from fstype.common.base import UNIT, HighestWeight, Monomial, to_json_default, x
from fstype.algebra.monomials import monomials_of_grade, weight_blocks
from fstype.algebra.polynomial import leading_term
from fstype.relations.generators import generators
from fstype.evaluation.presentation import (
    BlockReport,
    aggregate_reports,
    graded_component,
    spanning_monomials,
    standard_monomials,
    verify_block,
    verify_presentation,
)

VERIFICATION_GRID = [
    (HighestWeight.of(1, 0), 10),
    (HighestWeight.of(0, 1), 10),
    (HighestWeight.of(1, 1), 10),
    (HighestWeight.of(2, 0), 10),
    (HighestWeight.of(1, 0, 0), 6),
    (HighestWeight.of(0, 1, 0), 6),
    (HighestWeight.of(0, 0, 1), 6),
    (HighestWeight.of(1, 0, 1), 6),
    (HighestWeight.of(2, 0, 0), 6),
    (HighestWeight.of(1, 0, 0, 0), 5),
    (HighestWeight.of(0, 1, 0, 0), 5),
    (HighestWeight.of(0, 0, 1, 0), 5),
    (HighestWeight.of(0, 0, 0, 1), 5),
]


class TestGradedComponent(unittest.TestCase):

    def test_below_generator_degrees(self):
        self.assertEqual(graded_component(generators(L0_RANK1, 3), 1), [])

    def test_rank_one_degree_three(self):
        products = graded_component(generators(L0_RANK1, 3), 3)
        self.assertEqual(len(products), 2)
        self.assertEqual({leading_term(p) for p in products}, {Monomial(((X11, 3),)), mono(X11_2, X11)})

    def test_weight_filter(self):
        products = graded_component(generators(L0_RANK2, 2), 2, (2, 2))
        self.assertEqual(products, [poly((2, mono(X12, X12)), (1, mono(X11, X22)))])

    def test_products_have_requested_grade(self):
        gs = generators(HighestWeight.of(1, 0, 1), 4)
        for weight in ((3, 3), (4, 2), (2, 4)):
            for p in graded_component(gs, 4, weight):
                self.assertEqual(p.grade(2), (4, weight))


class TestStandardMonomials(unittest.TestCase):

    def test_rank_two_degree_two(self):
        rows = graded_component(generators(L0_RANK2, 2), 2)
        pivots, standard = standard_monomials(rows, 2, 2)
        self.assertEqual(pivots, sorted([
            mono(X11, X11), mono(X11, X12), mono(X12, X12), mono(X12, X22), mono(X22, X22),
        ]))
        self.assertEqual(standard, sorted([
            mono(X11, X22), mono(X11_2), mono(x(1, 2, 2)), mono(x(2, 2, 2)),
        ]))

    def test_depth_one_weight_block(self):
        rows = graded_component(generators(L0_RANK2, 2), 2, (2, 2))
        self.assertEqual(standard_monomials(rows, 2, 2, (2, 2)), ([mono(X12, X12)], [mono(X11, X22)]))

    def test_empty_span(self):
        pivots, standard = standard_monomials([], 2, 2)
        self.assertEqual(pivots, [])
        self.assertEqual(standard, list(monomials_of_grade(2, 2)))

    def test_rank_one_degree_three(self):
        rows = graded_component(generators(L0_RANK1, 3), 3)
        pivots, standard = standard_monomials(rows, 3, 1)
        self.assertEqual(pivots, [mono(X11_2, X11), Monomial(((X11, 3),))])
        self.assertEqual(standard, [mono(x(1, 1, 3))])

    def test_rejects_wrong_grade(self):
        with self.assertRaises(ValueError):
            standard_monomials([poly((1, mono(X11)), (1, mono(X22)))], 1, 2, (2, 0))
        with self.assertRaises(ValueError):
            standard_monomials([poly((1, mono(X11, X11)))], 1, 2)

    def test_invariant_under_change_of_spanning_set(self):
        rng = random.Random(41)
        blocks = []
        for hw in (HighestWeight.of(1, 0, 1), HighestWeight.of(2, 0, 0), HighestWeight.of(1, 1)):
            gs = generators(hw, 3)
            for d in (2, 3):
                for weight in weight_blocks(hw.ell, d):
                    rows = graded_component(gs, d, weight)
                    if rows:
                        blocks.append((rows, d, hw.ell, weight, standard_monomials(rows, d, hw.ell, weight)))
        for _ in range(10_000):
            rows, d, ell, weight, expected = rng.choice(blocks)
            changed = [rng.choice([1, -2, 3]) * p for p in rows]
            rng.shuffle(changed)
            if len(changed) > 1:
                changed[0] = changed[0] + rng.randint(1, 3) * changed[1]
            self.assertEqual(standard_monomials(changed, d, ell, weight), expected)


class TestBlockReport(unittest.TestCase):

    def test_mismatch_details(self):
        a, b, c = mono(X22), mono(X12), mono(X11)
        report = BlockReport(weight=(1, 1), num_monomials=3, ideal_rank=1, pivots=[c], standard=[a, b], basis=[b, c])
        self.assertFalse(report.match)
        self.assertEqual(report.missing, [c])
        self.assertEqual(report.unexpected, [a])

    def test_mismatch_logged(self):
        gs = generators(L0_RANK2, 2)
        with self.assertLogs("fstype.evaluation.presentation", level="WARNING") as logs:
            report = verify_block(gs, 2, (2, 2), [])
        self.assertFalse(report.match)
        self.assertEqual(report.unexpected, [mono(X11, X22)])
        self.assertIn("Mismatch at degree 2", logs.output[0])


class TestVerifyPresentation(unittest.TestCase):

    def test_rogers_ramanujan(self):
        reports = verify_presentation(L0_RANK1, 6)
        self.assertEqual([r.num_standard for r in reports], [1, 1, 1, 1, 2, 2, 3])
        self.assertTrue(all(r.match for r in reports))

    def test_rogers_ramanujan_to_degree_twelve(self):
        reports = verify_presentation(L0_RANK1, 12)
        self.assertEqual([r.num_standard for r in reports], RR_COUNTS)
        self.assertTrue(all(r.match for r in reports))
        reports = verify_presentation(L1_RANK1, 12)
        self.assertEqual([r.num_standard for r in reports], [rr_partition_count(d, min_part=2) for d in range(13)])
        self.assertTrue(all(r.match for r in reports))

    def test_top_node_rank_two(self):
        reports = verify_presentation(L2_RANK2, 1)
        self.assertEqual(sum(b.ideal_rank for b in reports[1].blocks), 3)
        self.assertEqual(reports[1].num_standard, 0)
        self.assertEqual(reports[1].num_basis, 0)
        self.assertTrue(reports[1].match)

    def test_degree_zero(self):
        for hw in (L0_RANK1, L1_RANK1, L0_RANK2, L2_RANK2):
            reports = verify_presentation(hw, 0)
            self.assertEqual(len(reports), 1)
            self.assertEqual(reports[0].blocks[0].standard, [UNIT])
            self.assertTrue(reports[0].match)

    def test_negative_degree(self):
        with self.assertRaises(ValueError):
            verify_presentation(L0_RANK1, -1)

    def test_standard_equals_admissible(self):
        for hw, d_max in VERIFICATION_GRID:
            reports = verify_presentation(hw, d_max)
            for report in reports:
                for block in report.blocks:
                    self.assertEqual(block.standard, block.basis, f"{hw} d={report.degree} weight={block.weight}")
            self.assertTrue(aggregate_reports(hw, d_max, reports).match)

    def test_block_properties(self):
        hw = HighestWeight.of(1, 0, 1)
        gs = generators(hw, 4)
        standard_by_degree: dict[int, set[Monomial]] = {}
        for report in verify_presentation(hw, 4):
            standard_by_degree[report.degree] = {m for b in report.blocks for m in b.standard}
            for block in report.blocks:
                self.assertEqual(block.num_monomials, block.ideal_rank + len(block.standard))
                self.assertTrue(set(block.standard) <= set(spanning_monomials(gs, report.degree, block.weight)))
                pivots = set(block.pivots)
                for entry in gs:
                    if entry.grade == (report.degree, block.weight):
                        self.assertIn(entry.leading_term(), pivots)
        # standard monomials are closed under division
        for standard in standard_by_degree.values():
            for m in standard:
                for v in m.variables():
                    divisor = Monomial.from_exponents({**m.as_dict(), v: m.exponent(v) - 1})
                    self.assertIn(divisor, standard_by_degree[divisor.degree()])

    def test_deterministic_across_workers(self):
        hw = HighestWeight.of(1, 0, 1)
        serial = aggregate_reports(hw, 3, verify_presentation(hw, 3))
        parallel = aggregate_reports(hw, 3, verify_presentation(hw, 3, workers=2))
        self.assertEqual(
            json.dumps(serial, default=to_json_default),
            json.dumps(parallel, default=to_json_default),
        )

    def test_summary_schema(self):
        summary = aggregate_reports(L0_RANK2, 2, verify_presentation(L0_RANK2, 2))
        data = json.loads(json.dumps(summary, default=to_json_default))
        self.assertEqual(data["ell"], 2)
        self.assertEqual(data["weights"], [1, 0, 0])
        self.assertEqual(data["maxDegree"], 2)
        self.assertTrue(data["match"])
        self.assertEqual([d["degree"] for d in data["degrees"]], [0, 1, 2])
        block = data["degrees"][2]["blocks"][0]
        self.assertEqual(
            set(block),
            {"weight", "numMonomials", "idealRank", "pivots", "standard", "basis", "match"},
        )
        standard = [m for b in data["degrees"][2]["blocks"] for m in b["standard"]]
        self.assertIn("x[2,2](-1) x[1,1](-1)", standard)


if __name__ == '__main__':
    unittest.main()
