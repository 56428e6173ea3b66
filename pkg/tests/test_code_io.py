"""Unit tests for the code, weight and blocks file formats."""

import os
import tempfile
import unittest

from analysis.design_engine import Design
from analysis.weight_enum import WeightDistribution, table1_distribution
from core.bch_construct import build_C_m
from core.errors import CodeFormatError, DesignError
from core.linear_code import LinearCode, spans_equal
from data.code_io import (format_code, read_blocks, read_code, read_weights, write_blocks, write_code,
                          write_weights)


class TestCodeIO(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmp.name, 'code.txt')

    def tearDown(self):
        self.tmp.cleanup()

    def _write_raw(self, text):
        with open(self.path, 'w', encoding='utf-8', newline='') as fh:
            fh.write(text)

    def test_format(self):
        code = LinearCode(n=4, k=2, rows=(0b0011, 0b1100))
        self.assertEqual(format_code(code), "n=4\nk=2\n1100\n0011\n")

    def test_code_file(self):
        code = build_C_m(5)
        write_code(code, self.path)
        loaded = read_code(self.path)
        self.assertEqual(loaded, code)
        self.assertTrue(spans_equal(loaded, code))

    def test_malformed_code_file(self):
        for text in ("n=3\nk=1\n11\n", "n=3\nk=2\n111\n", "k=1\nn=3\n111\n", "n=3\nk=1\n1x1\n", "n=3\r\nk=1\r\n111\r\n"):
            self._write_raw(text)
            with self.assertRaises(CodeFormatError, msg=repr(text)):
                read_code(self.path)


class TestWeightsIO(unittest.TestCase):
    def test_csv_text(self):
        wd = WeightDistribution.from_dict(3, {0: 1, 3: 1})
        self.assertEqual(write_weights(wd), "weight,count\n0,1\n3,1\n")

    def test_read_back(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'weights.csv')
            wd = table1_distribution(7)
            write_weights(wd, path)
            self.assertEqual(read_weights(path, 127), wd)

    def test_large_counts_stay_exact(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'weights.csv')
            wd = table1_distribution(13)
            write_weights(wd, path)
            self.assertEqual(read_weights(path, wd.n), wd)

    def test_bad_header(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'weights.csv')
            with open(path, 'w', encoding='utf-8') as fh:
                fh.write("w,c\n0,1\n")
            with self.assertRaises(CodeFormatError):
                read_weights(path, 3)


class TestBlocksIO(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmp.name, 'blocks.txt')

    def tearDown(self):
        self.tmp.cleanup()

    def test_lexicographic_output(self):
        design = Design.from_blocks(6, [[3, 4], [0, 5], [0, 2]])
        write_blocks(design, self.path)
        with open(self.path, encoding='utf-8') as fh:
            self.assertEqual(fh.read(), "v=6 k=2\n0 2\n0 5\n3 4\n")
        self.assertEqual(read_blocks(self.path).blocks.tolist(), [[0, 2], [0, 5], [3, 4]])

    def test_not_uniform(self):
        with open(self.path, 'w', encoding='utf-8') as fh:
            fh.write("v=6 k=2\n0 1\n0 1 2\n")
        with self.assertRaisesRegex(DesignError, 'not uniform'):
            read_blocks(self.path)

    def test_bad_header(self):
        with open(self.path, 'w', encoding='utf-8') as fh:
            fh.write("6 2\n0 1\n")
        with self.assertRaises(CodeFormatError):
            read_blocks(self.path)

    def test_header_only(self):
        with open(self.path, 'w', encoding='utf-8') as fh:
            fh.write("v=5 k=3\n")
        with self.assertRaisesRegex(CodeFormatError, 'no blocks'):
            read_blocks(self.path)

    def test_repeated_block(self):
        with open(self.path, 'w', encoding='utf-8') as fh:
            fh.write("v=5 k=3\n0 1 2\n0 1 3\n0 1 2\n")
        with self.assertRaisesRegex(CodeFormatError, ':4: repeats the block on line 2'):
            read_blocks(self.path)


if __name__ == '__main__':
    unittest.main()
