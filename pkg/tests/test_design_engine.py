"""Unit tests for design extraction, t-design verification and the Assmus-Mattson audit."""

import os
import unittest
from itertools import combinations
from unittest import mock

from analysis.design_engine import (Design, assmus_mattson_audit, closed_form_lambda, colex_rank,
                                    divisibility_check, lambda_from_count, supports_to_design, verify_t_design)
from analysis.weight_enum import (double_dual_closed_form, dual_closed_form, extended_dual_closed_form,
                                  table1_distribution)
from config.settings import DESIGN_CONFIG
from core.bch_construct import build_C_m
from core.errors import DesignError, FormulaInconsistencyError, VerificationBudgetError
from core.linear_code import double_dual_generator, dual, extend
from families.registry import get_family

SLOW = os.environ.get('DESIGNCRAFT_SLOW') == '1'


class TestDesignBasics(unittest.TestCase):
    def test_complete_design(self):
        design = Design.from_blocks(5, list(combinations(range(5), 3)))
        self.assertEqual(verify_t_design(design, 2).lam, 3)

    def test_not_a_design(self):
        design = Design.from_blocks(4, [[0, 1], [0, 2]])
        check = verify_t_design(design, 1)
        self.assertFalse(check.holds)
        self.assertIsNone(check.lam)
        self.assertEqual((check.min_count, check.max_count), (0, 2))

    def test_not_uniform(self):
        with self.assertRaisesRegex(DesignError, 'not uniform'):
            Design.from_blocks(5, [[0, 1], [0, 1, 2]])

    def test_repeated_block_rejected(self):
        with self.assertRaisesRegex(DesignError, 'duplicate block'):
            Design.from_blocks(5, [[0, 1, 2], [0, 1, 2], [1, 2, 3]])

    def test_empty_block_list(self):
        with self.assertRaisesRegex(DesignError, 'at least one block'):
            Design.from_blocks(5, [])

    def test_verification_budget(self):
        design = Design.from_blocks(5, list(combinations(range(5), 3)))
        with mock.patch.dict(DESIGN_CONFIG, {'counter_budget': 5}):
            with self.assertRaisesRegex(VerificationBudgetError, 'verification too large'):
                verify_t_design(design, 2)

    def test_colex_rank_is_dense(self):
        subsets = sorted(combinations(range(6), 3), key=lambda s: s[::-1])
        self.assertEqual([colex_rank(s) for s in subsets], list(range(20)))

    def test_sorted_blocks(self):
        design = Design.from_blocks(6, [[2, 3], [0, 5], [0, 1]])
        self.assertEqual(design.sorted_blocks().tolist(), [[0, 1], [0, 5], [2, 3]])


class TestArithmetic(unittest.TestCase):
    def test_divisibility(self):
        self.assertTrue(divisibility_check(2, 31, 8, 28))
        self.assertTrue(divisibility_check(3, 32, 8, 7))
        self.assertFalse(divisibility_check(2, 31, 8, 1))

    def test_lambda_from_count(self):
        self.assertEqual(lambda_from_count(465, 2, 31, 8), 28)
        self.assertEqual(lambda_from_count(620, 3, 32, 8), 7)
        self.assertEqual(lambda_from_count(13888, 3, 32, 12), 616)
        with self.assertRaisesRegex(FormulaInconsistencyError, 'not design-consistent'):
            lambda_from_count(1, 2, 31, 8)

    def test_closed_form_lambda(self):
        self.assertEqual(closed_form_lambda(5, 'dual', 7), 7)
        self.assertEqual(closed_form_lambda(5, 'double_dual', 8), 7)
        self.assertEqual(closed_form_lambda(5, 'double_dual', 12), 616)
        self.assertEqual(closed_form_lambda(5, 'extended_dual', 12), 616)
        self.assertEqual(closed_form_lambda(7, 'primal', 48), 3760)
        self.assertEqual(closed_form_lambda(7, 'double_dual', 48), 2162)
        self.assertGreater(closed_form_lambda(7, 'dual', 9), 0)
        for family, k in (('dual', 9), ('extended_dual', 10)):
            with self.assertRaisesRegex(DesignError, 'unsupported case'):
                closed_form_lambda(5, family, k)

    def test_published_weight8_block_count(self):
        # 公式给出的值是穷举结果的 16 倍
        self.assertEqual(get_family('extended_dual').block_count_formula(5, 8), 9920)
        self.assertEqual(get_family('extended_dual').block_count_formula(5, 12), 13888)
        self.assertEqual(get_family('dual').block_count_formula(5, 7), 155)


class TestAssmusMattson(unittest.TestCase):
    def test_primal_pair(self):
        report = assmus_mattson_audit(table1_distribution(5), dual_closed_form(5), 2)
        self.assertEqual((report.s, report.d, report.d_perp), (5, 8, 7))
        self.assertTrue(report.passes)
        self.assertEqual(report.orientation, 'swapped')
        self.assertEqual(report.design_weights, (8, 12, 16, 20, 24))
        self.assertEqual(report.dual_design_weights[:2], (7, 8))

    def test_extended_pair(self):
        report = assmus_mattson_audit(double_dual_closed_form(5), extended_dual_closed_form(5), 3)
        self.assertEqual((report.s, report.d), (5, 8))
        self.assertTrue(report.passes)

    def test_t_too_large(self):
        with self.assertRaisesRegex(DesignError, 't too large'):
            assmus_mattson_audit(table1_distribution(5), dual_closed_form(5), 7)

    def test_not_a_dual_pair(self):
        with self.assertRaises(FormulaInconsistencyError):
            assmus_mattson_audit(table1_distribution(5), table1_distribution(5), 2)


class TestDesignsFromCodes(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.code = build_C_m(5)
        cls.dual = dual(cls.code)
        cls.extended = extend(cls.dual)
        cls.double = double_dual_generator(cls.code)

    def test_extraction(self):
        design = supports_to_design(self.code, 24)
        self.assertEqual((design.v, design.k, design.block_count), (31, 24, 155))
        self.assertEqual(supports_to_design(self.dual, 7).block_count, 155)
        self.assertEqual(supports_to_design(self.extended, 8).block_count, 620)
        with self.assertRaisesRegex(DesignError, 'no blocks at weight'):
            supports_to_design(self.code, 10)

    def test_primal_2_designs(self):
        expected = {8: 28, 12: 1232, 16: 4712, 20: 2128, 24: 92}
        for k, lam in expected.items():
            check = verify_t_design(supports_to_design(self.code, k), 2)
            self.assertEqual(check.lam, lam, msg=f"k={k}")
            self.assertEqual(closed_form_lambda(5, 'primal', k), lam)
            self.assertTrue(divisibility_check(2, 31, k, lam))

    def test_dual_2_designs(self):
        for k, lam in {7: 7, 8: 28}.items():
            self.assertEqual(verify_t_design(supports_to_design(self.dual, k), 2).lam, lam)

    def test_double_dual_3_designs(self):
        expected = {8: 7, 12: 616, 16: 4123, 20: 3192, 24: 253}
        for k, lam in expected.items():
            check = verify_t_design(supports_to_design(self.double, k), 3, threads=2)
            self.assertEqual(check.lam, lam, msg=f"k={k}")
            self.assertEqual(closed_form_lambda(5, 'double_dual', k), lam)
            self.assertEqual(lambda_from_count(check.block_count, 3, 32, k), lam)

    def test_extended_dual_3_designs(self):
        for k, lam in {8: 7, 12: 616}.items():
            self.assertEqual(verify_t_design(supports_to_design(self.extended, k), 3).lam, lam)


class TestDesignsM7(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.code = build_C_m(7)

    def test_primal_weight48(self):
        design = supports_to_design(self.code, 48)
        self.assertEqual(design.block_count, 26670)
        self.assertEqual(verify_t_design(design, 2).lam, 3760)

    @unittest.skipUnless(SLOW, "set DESIGNCRAFT_SLOW=1 to run the m=7 3-design check")
    def test_double_dual_weight48(self):
        design = supports_to_design(double_dual_generator(self.code), 48)
        self.assertEqual(design.block_count, 42672)
        self.assertEqual(verify_t_design(design, 3).lam, 2162)


if __name__ == '__main__':
    unittest.main()
