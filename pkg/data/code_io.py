"""Code IO module.

Readers and writers for the three text formats of the workbench:

- code file: ``n=<int>``, ``k=<int>``, then k rows of n characters from {0,1}
  with coordinate 0 leftmost;
- weight file: CSV with header ``weight,count``, nonzero rows, weights ascending;
- blocks file: ``v=<int> k=<int>``, then one block per line as space-separated
  ascending indices, blocks in lexicographic order.
"""

import logging
import re

import pandas as pd

from analysis.design_engine import Design
from analysis.weight_enum import WeightDistribution
from core.errors import CodeFormatError, DesignCraftError
from core.linear_code import LinearCode

logger = logging.getLogger(__name__)

_HEADER = re.compile(r'^(n|k)=(\d+)$')
_BLOCKS_HEADER = re.compile(r'^v=(\d+) k=(\d+)$')


def _read_lines(file_path):
    with open(file_path, 'r', encoding='utf-8', newline='') as fh:
        text = fh.read()
    if '\r' in text:
        raise CodeFormatError(f"{file_path}: expected LF line endings")
    lines = text.split('\n')
    if lines and lines[-1] == '':
        lines.pop()
    return lines


def _header_value(line, key, file_path):
    match = _HEADER.match(line)
    if not match or match.group(1) != key:
        raise CodeFormatError(f"{file_path}: expected '{key}=<int>', got {line!r}")
    return int(match.group(2))


# ================== 码文件 ==================

def format_code(code: LinearCode) -> str:
    lines = [f"n={code.n}", f"k={code.k}"]
    for row in code.rows:
        lines.append(''.join('1' if (row >> j) & 1 else '0' for j in range(code.n)))
    return '\n'.join(lines) + '\n'


def write_code(code: LinearCode, file_path):
    with open(file_path, 'w', encoding='utf-8', newline='\n') as fh:
        fh.write(format_code(code))
    logger.info(f"写入码文件 {file_path}: {code}")


def read_code(file_path) -> LinearCode:
    try:
        lines = _read_lines(file_path)
        if len(lines) < 2:
            raise CodeFormatError(f"{file_path}: missing n/k header")
        n = _header_value(lines[0], 'n', file_path)
        k = _header_value(lines[1], 'k', file_path)
        body = lines[2:]
        if len(body) != k:
            raise CodeFormatError(f"{file_path}: header says k={k} but {len(body)} rows follow")
        rows = []
        for number, line in enumerate(body, start=3):
            if len(line) != n or set(line) - {'0', '1'}:
                raise CodeFormatError(f"{file_path}:{number}: expected {n} characters from {{0,1}}")
            rows.append(sum(1 << j for j, ch in enumerate(line) if ch == '1'))
        return LinearCode(n=n, k=k, rows=tuple(rows))
    except (OSError, DesignCraftError) as e:
        logger.error(f"读取码文件时出错: {e}")
        raise


# ================== 重量分布 ==================

def write_weights(wd: WeightDistribution, file_path=None):
    """Write the CSV to ``file_path``; return the CSV text when no path is given."""
    frame = wd.to_frame()
    frame['count'] = frame['count'].map(str)
    return frame.to_csv(file_path, index=False, lineterminator='\n')


def read_weights(file_path, n: int) -> WeightDistribution:
    try:
        frame = pd.read_csv(file_path, dtype=str)
        if list(frame.columns) != ['weight', 'count']:
            raise CodeFormatError(f"{file_path}: expected header 'weight,count', got {list(frame.columns)}")
        weights = [int(w) for w in frame['weight']]
        if weights != sorted(set(weights)):
            raise CodeFormatError(f"{file_path}: weights must be strictly ascending")
        return WeightDistribution.from_dict(n, dict(zip(weights, (int(c) for c in frame['count']))))
    except (OSError, ValueError) as e:
        logger.error(f"读取重量分布时出错: {e}")
        if isinstance(e, CodeFormatError):
            raise
        raise CodeFormatError(f"{file_path}: {e}") from e


# ================== 区组文件 ==================

def format_blocks(design: Design) -> str:
    lines = [f"v={design.v} k={design.k}"]
    lines.extend(' '.join(str(int(p)) for p in block) for block in design.sorted_blocks())
    return '\n'.join(lines) + '\n'


def write_blocks(design: Design, file_path):
    with open(file_path, 'w', encoding='utf-8', newline='\n') as fh:
        fh.write(format_blocks(design))
    logger.info(f"写入区组文件 {file_path}: {design.block_count} 个区组")


def read_blocks(file_path) -> Design:
    try:
        lines = _read_lines(file_path)
        match = _BLOCKS_HEADER.match(lines[0]) if lines else None
        if not match:
            raise CodeFormatError(f"{file_path}: expected 'v=<int> k=<int>' header")
        v, k = int(match.group(1)), int(match.group(2))
        if len(lines) == 1:
            raise CodeFormatError(f"{file_path}: no blocks after the header")
        blocks, seen = [], {}
        for number, line in enumerate(lines[1:], start=2):
            try:
                block = [int(p) for p in line.split(' ')]
            except ValueError:
                raise CodeFormatError(f"{file_path}:{number}: malformed block {line!r}")
            if block != sorted(set(block)):
                raise CodeFormatError(f"{file_path}:{number}: block indices must be strictly ascending")
            first = seen.setdefault(tuple(block), number)
            if first != number:
                raise CodeFormatError(f"{file_path}:{number}: repeats the block on line {first}")
            blocks.append(block)
        design = Design.from_blocks(v, blocks)
        if design.k != k:
            raise CodeFormatError(f"{file_path}: header says k={k}, blocks have size {design.k}")
        return design
    except (OSError, DesignCraftError) as e:
        logger.error(f"读取区组文件时出错: {e}")
        raise
