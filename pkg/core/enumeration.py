"""Exhaustive codeword enumeration kernel.

Codewords are packed little-endian into rows of uint64 words. The 2^k index
space is split into a base table spanned by the low ``base_table_bits``
generator rows and a prefix table spanned by the remaining rows; every
prefix XORs one offset into the base table, so each vectorised step visits
2^base_table_bits codewords. Contiguous prefix ranges go to independent
worker threads whose partial results are merged by addition (counts) or
concatenation in prefix order (codewords).
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from config.settings import ENUMERATION_CONFIG
from core.errors import EnumerationBudgetError

logger = logging.getLogger(__name__)

WORD_BITS = 64
_WORD_MASK = (1 << WORD_BITS) - 1


def enumeration_budget() -> int:
    """Budget exponent: DESIGNCRAFT_BUDGET if set, else the configured default."""
    raw = os.environ.get(ENUMERATION_CONFIG['budget_env_var'])
    if raw is None or raw.strip() == '':
        return ENUMERATION_CONFIG['budget_exponent']
    try:
        exponent = int(raw)
    except ValueError:
        raise EnumerationBudgetError(f"{ENUMERATION_CONFIG['budget_env_var']}={raw!r} is not a decimal exponent")
    if exponent < 0:
        raise EnumerationBudgetError(f"{ENUMERATION_CONFIG['budget_env_var']}={raw!r} is negative")
    return exponent


def within_budget(k: int) -> bool:
    return k <= enumeration_budget()


def check_budget(k: int):
    budget = enumeration_budget()
    if k > budget:
        raise EnumerationBudgetError(f"enumeration too large: 2^{k} codewords exceeds budget 2^{budget}")


def resolve_threads(threads: Optional[int] = None) -> int:
    if threads is None:
        threads = ENUMERATION_CONFIG['threads']
    if threads is None:
        threads = os.cpu_count() or 1
    return max(1, int(threads))


def words_per_row(n: int) -> int:
    return max(1, (n + WORD_BITS - 1) // WORD_BITS)


def pack_rows(rows: Sequence[int], n: int) -> np.ndarray:
    width = words_per_row(n)
    packed = np.zeros((len(rows), width), dtype='<u8')
    for i, row in enumerate(rows):
        for w in range(width):
            packed[i, w] = (row >> (WORD_BITS * w)) & _WORD_MASK
    return packed


def span_table(packed: np.ndarray) -> np.ndarray:
    """All 2^r XOR combinations of r packed rows; index bit j selects row j."""
    table = np.zeros((1, packed.shape[1]), dtype='<u8')
    for row in packed:
        table = np.concatenate([table, table ^ row])
    return table


def supports_from_words(words: np.ndarray, n: int, w: int) -> np.ndarray:
    """Ascending support coordinates of packed codewords that all have weight w."""
    if w == 0 or len(words) == 0:
        return np.zeros((len(words), w), dtype=np.int16)
    as_bytes = np.ascontiguousarray(words, dtype='<u8').view(np.uint8)
    bits = np.unpackbits(as_bytes, axis=1, bitorder='little')[:, :n]
    _, cols = np.nonzero(bits)
    return cols.reshape(-1, w).astype(np.int16)


class CodewordSweep:
    """One pass over all 2^k codewords of the span of ``rows``."""

    def __init__(self, rows: Sequence[int], n: int, threads: Optional[int] = None,
                 base_bits: Optional[int] = None):
        k = len(rows)
        check_budget(k)
        self.n = n
        self.k = k
        self.threads = resolve_threads(threads)
        base_bits = ENUMERATION_CONFIG['base_table_bits'] if base_bits is None else base_bits
        split = min(k, base_bits)
        packed = pack_rows(rows, n)
        self.base = span_table(packed[:split])
        self.prefixes = span_table(packed[split:])

    def _ranges(self) -> List[Tuple[int, int]]:
        total = len(self.prefixes)
        workers = min(self.threads, total)
        step, extra = divmod(total, workers)
        ranges, start = [], 0
        for i in range(workers):
            stop = start + step + (1 if i < extra else 0)
            ranges.append((start, stop))
            start = stop
        return ranges

    def _blocks(self, start: int, stop: int) -> Iterator[np.ndarray]:
        for p in range(start, stop):
            yield self.base ^ self.prefixes[p]

    def _run(self, job: Callable[[int, int], object]) -> list:
        ranges = self._ranges()
        logger.debug(f"枚举 2^{self.k} 个码字，{len(ranges)} 个工作线程")
        if len(ranges) == 1:
            return [job(*ranges[0])]
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            return list(pool.map(lambda r: job(*r), ranges))

    def _weights(self, block: np.ndarray) -> np.ndarray:
        return np.bitwise_count(block).sum(axis=1, dtype=np.int64)

    def weight_counts(self) -> np.ndarray:
        def job(start: int, stop: int) -> np.ndarray:
            counts = np.zeros(self.n + 1, dtype=np.int64)
            for block in self._blocks(start, stop):
                counts += np.bincount(self._weights(block), minlength=self.n + 1)
            return counts
        return np.sum(self._run(job), axis=0)

    def supports_of_weight(self, w: int) -> np.ndarray:
        def job(start: int, stop: int) -> np.ndarray:
            parts = []
            for block in self._blocks(start, stop):
                hits = block[self._weights(block) == w]
                if len(hits):
                    parts.append(supports_from_words(hits, self.n, w))
            if not parts:
                return np.zeros((0, w), dtype=np.int16)
            return np.concatenate(parts)
        return np.concatenate(self._run(job))
