"""Tests for the click command line."""

import os
import tempfile
import unittest

from click.testing import CliRunner

from cli import cli
from core.bch_construct import build_C_m
from core.linear_code import dual, extend
from data.code_io import write_code


class TestCli(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        code = build_C_m(5)
        cls.c5 = os.path.join(cls.tmp.name, 'c5.code')
        cls.c5_dual = os.path.join(cls.tmp.name, 'c5_dual.code')
        cls.c5_ext = os.path.join(cls.tmp.name, 'c5_ext.code')
        write_code(code, cls.c5)
        write_code(dual(code), cls.c5_dual)
        write_code(extend(dual(code)), cls.c5_ext)

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def setUp(self):
        self.runner = CliRunner()

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    # ================== code build ==================
    def test_code_build(self):
        for variant in ('bch0', 'dual-narrow7'):
            out = self.path(f'{variant}.code')
            result = self.runner.invoke(cli, ['code', 'build', '--m', '5', '--variant', variant, '--out', out])
            self.assertEqual(result.exit_code, 0, result.output)
            self.assertIn('[31,15]', result.output)
            with open(out, encoding='utf-8') as fh:
                self.assertEqual(fh.read().split('\n')[:2], ['n=31', 'k=15'])

    def test_code_build_generic_bch(self):
        out = self.path('bch.code')
        result = self.runner.invoke(cli, ['code', 'build', '--m', '5', '--delta', '7', '--offset', '1', '--out', out])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('[31,16]', result.output)

    def test_code_build_even_m(self):
        result = self.runner.invoke(cli, ['code', 'build', '--m', '4', '--variant', 'bch0'])
        self.assertEqual(result.exit_code, 2)
        self.assertIn('m must be odd', result.output)

    def test_code_build_construction_failure(self):
        result = self.runner.invoke(cli, ['code', 'build', '--m', '5', '--delta', '1', '--out', self.path('x.code')])
        self.assertEqual(result.exit_code, 3)

    # ================== wdist ==================
    def test_wdist_enum(self):
        result = self.runner.invoke(cli, ['wdist', '--code', self.c5, '--method', 'enum'])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.output.split(),
                         ['weight,count', '0,1', '8,465', '12,8680', '16,18259', '20,5208', '24,155'])

    def test_wdist_closed_form(self):
        result = self.runner.invoke(cli, ['wdist', '--method', 'closed-form', '--family', 'dual', '--m', '7'])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('7,48387', result.output.split())

    def test_wdist_macwilliams(self):
        missing = self.runner.invoke(cli, ['wdist', '--code', self.c5, '--method', 'macwilliams'])
        self.assertEqual(missing.exit_code, 2)
        self.assertIn('--dim-dual', missing.output)
        result = self.runner.invoke(cli, ['wdist', '--code', self.c5, '--method', 'macwilliams', '--dim-dual', '16'])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('8,465', result.output.split())

    def test_wdist_macwilliams_dual_target(self):
        result = self.runner.invoke(cli, ['wdist', '--code', self.c5, '--method', 'macwilliams', '--dim-dual', '16',
                                          '--target', 'dual'])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('7,155', result.output.split())
        self.assertIn('8,465', result.output.split())
        mismatched = self.runner.invoke(cli, ['wdist', '--code', self.c5, '--method', 'macwilliams', '--dim-dual', '15',
                                              '--target', 'dual'])
        self.assertEqual(mismatched.exit_code, 2)

    def test_wdist_macwilliams_dual_of_c7(self):
        c7 = self.path('c7.code')
        write_code(build_C_m(7), c7)
        result = self.runner.invoke(cli, ['wdist', '--code', c7, '--method', 'macwilliams', '--dim-dual', '106',
                                          '--target', 'dual'])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('7,48387', result.output.split())

    def test_wdist_over_budget(self):
        env = {'DESIGNCRAFT_BUDGET': '10'}
        result = self.runner.invoke(cli, ['wdist', '--code', self.c5], env=env)
        self.assertEqual(result.exit_code, 4)
        fallback = self.runner.invoke(cli, ['wdist', '--code', self.c5, '--m', '5', '--family', 'table1'], env=env)
        self.assertEqual(fallback.exit_code, 0, fallback.output)
        self.assertIn('24,155', fallback.output.split())

    # ================== designs ==================
    def test_dual_weight7_design(self):
        blocks = self.path('dual7.blocks')
        extract = self.runner.invoke(cli, ['designs', 'extract', '--code', self.c5_dual, '--weight', '7',
                                           '--out', blocks])
        self.assertEqual(extract.exit_code, 0, extract.output)
        self.assertIn('blocks=155', extract.output)
        verify = self.runner.invoke(cli, ['designs', 'verify', '--blocks', blocks, '--t', '2'])
        self.assertEqual(verify.exit_code, 0, verify.output)
        self.assertIn('lambda=7', verify.output)

    def test_extended_weight8_design(self):
        blocks = self.path('ext8.blocks')
        self.runner.invoke(cli, ['designs', 'extract', '--code', self.c5_ext, '--weight', '8', '--out', blocks])
        verify = self.runner.invoke(cli, ['designs', 'verify', '--blocks', blocks, '--t', '3'])
        self.assertEqual(verify.exit_code, 0, verify.output)
        self.assertIn('lambda=7', verify.output)

    def test_verify_t_zero(self):
        blocks = self.path('dummy.blocks')
        with open(blocks, 'w', encoding='utf-8') as fh:
            fh.write("v=4 k=2\n0 1\n")
        result = self.runner.invoke(cli, ['designs', 'verify', '--blocks', blocks, '--t', '0'])
        self.assertEqual(result.exit_code, 2)
        self.assertIn('t must be positive', result.output)

    def test_not_a_design(self):
        blocks = self.path('bad.blocks')
        with open(blocks, 'w', encoding='utf-8') as fh:
            fh.write("v=4 k=2\n0 1\n0 2\n")
        result = self.runner.invoke(cli, ['designs', 'verify', '--blocks', blocks, '--t', '1'])
        self.assertEqual(result.exit_code, 5)
        self.assertIn('NOT A 1-DESIGN (min=0, max=2)', result.output)

    def test_verify_t_not_below_k(self):
        blocks = self.path('small.blocks')
        with open(blocks, 'w', encoding='utf-8') as fh:
            fh.write("v=4 k=2\n0 1\n2 3\n")
        result = self.runner.invoke(cli, ['designs', 'verify', '--blocks', blocks, '--t', '2'])
        self.assertEqual(result.exit_code, 2)
        self.assertIn('below the block size', result.output)

    def test_verify_repeated_blocks(self):
        blocks = self.path('repeated.blocks')
        with open(blocks, 'w', encoding='utf-8') as fh:
            fh.write("v=5 k=3\n0 1 2\n0 1 3\n0 1 2\n")
        result = self.runner.invoke(cli, ['designs', 'verify', '--blocks', blocks, '--t', '1'])
        self.assertEqual(result.exit_code, 2)
        self.assertIn('repeats the block', result.output)

    def test_verify_header_only(self):
        blocks = self.path('empty.blocks')
        with open(blocks, 'w', encoding='utf-8') as fh:
            fh.write("v=5 k=3\n")
        result = self.runner.invoke(cli, ['designs', 'verify', '--blocks', blocks, '--t', '1'])
        self.assertEqual(result.exit_code, 2)
        self.assertIn('no blocks', result.output)

    def test_extract_empty_weight(self):
        result = self.runner.invoke(cli, ['designs', 'extract', '--code', self.c5, '--weight', '10',
                                          '--out', self.path('none.blocks')])
        self.assertEqual(result.exit_code, 5)

    # ================== 报告命令 ==================
    def test_report_command_formulas(self):
        json_path = self.path('report.json')
        result = self.runner.invoke(cli, ['paper', 'verify', '--m', '5', '--level', 'formulas', '--json', json_path])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('[MISMATCH-KNOWN] extended_dual.block_count.k8', result.output)
        self.assertTrue(os.path.exists(json_path))

    def test_report_command_even_m(self):
        result = self.runner.invoke(cli, ['paper', 'verify', '--m', '6'])
        self.assertEqual(result.exit_code, 2)


if __name__ == '__main__':
    unittest.main()
