"""Binary linear codes: generator rows as int bitsets, duals, extensions and enumeration.

Coordinate j of a codeword is bit j of its integer. The extension
coordinate is appended at index n.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from analysis.weight_enum import WeightDistribution
from core.enumeration import CodewordSweep
from core.errors import ConstructionError

logger = logging.getLogger(__name__)

SupportSet = Tuple[int, ...]


def gf2_rank(rows: Sequence[int], n_cols: int) -> int:
    """Rank over GF(2) via Gaussian elimination."""
    return len(reduced_row_echelon(rows, n_cols)[1])


def reduced_row_echelon(rows: Sequence[int], n_cols: int) -> Tuple[List[int], List[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot column of each row)."""
    work = [r for r in rows]
    pivots = []
    row_idx = 0
    for col in range(n_cols):
        pivot = None
        for r in range(row_idx, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for r in range(len(work)):
            if r != row_idx and (work[r] >> col) & 1:
                work[r] ^= work[row_idx]
        pivots.append(col)
        row_idx += 1
        if row_idx == len(work):
            break
    return work[:row_idx], pivots


@dataclass(frozen=True)
class LinearCode:
    n: int
    k: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if not 0 < self.k <= self.n:
            raise ConstructionError(f"dimension must satisfy 0 < k <= n, got [{self.n}, {self.k}]")
        if len(self.rows) != self.k:
            raise ConstructionError(f"expected {self.k} generator rows, got {len(self.rows)}")
        if any(r < 0 or r >> self.n for r in self.rows):
            raise ConstructionError(f"generator row wider than n={self.n}")
        if gf2_rank(self.rows, self.n) != self.k:
            raise ConstructionError(f"generator rows are linearly dependent (n={self.n}, k={self.k})")

    @classmethod
    def from_rows(cls, rows: Sequence[int], n: int) -> 'LinearCode':
        """Code spanned by ``rows`` (dependent and zero rows are dropped)."""
        basis, _ = reduced_row_echelon(rows, n)
        return cls(n=n, k=len(basis), rows=tuple(basis))

    def __str__(self) -> str:
        return f"[{self.n},{self.k}]"


def dual(code: LinearCode) -> LinearCode:
    """Null space of the generator rows via the reduced row-echelon form."""
    if code.k == code.n:
        raise ConstructionError(f"zero dual: [{code.n}, {code.k}] code is the full space")
    rref, pivots = reduced_row_echelon(code.rows, code.n)
    pivot_set = set(pivots)
    basis = []
    for free in range(code.n):
        if free in pivot_set:
            continue
        vec = 1 << free
        for row, p in zip(rref, pivots):
            if (row >> free) & 1:
                vec |= 1 << p
        basis.append(vec)
    return LinearCode(n=code.n, k=code.n - code.k, rows=tuple(basis))


def extend(code: LinearCode) -> LinearCode:
    """Append an overall parity coordinate at index n."""
    rows = tuple(r | ((r.bit_count() & 1) << code.n) for r in code.rows)
    return LinearCode(n=code.n + 1, k=code.k, rows=rows)


def double_dual_generator(code: LinearCode) -> LinearCode:
    """Dual of the extended dual, built directly from [1 | 1 ; G | 0]."""
    all_one = (1 << (code.n + 1)) - 1
    rows = (all_one,) + tuple(code.rows)
    if gf2_rank(rows, code.n + 1) != code.k + 1:
        raise ConstructionError(f"rank defect: all-one row is dependent on the generator of {code}")
    return LinearCode(n=code.n + 1, k=code.k + 1, rows=rows)


def is_orthogonal(a: LinearCode, b: LinearCode) -> bool:
    """Every generator row of ``a`` has even overlap with every row of ``b``."""
    return all(((r & s).bit_count() & 1) == 0 for r in a.rows for s in b.rows)


def spans_equal(a: LinearCode, b: LinearCode) -> bool:
    if a.n != b.n or a.k != b.k:
        return False
    return gf2_rank(a.rows + b.rows, a.n) == a.k


def weight_counts(code: LinearCode, threads: Optional[int] = None) -> List[int]:
    counts = CodewordSweep(code.rows, code.n, threads=threads).weight_counts()
    return [int(c) for c in counts]


def weight_distribution(code: LinearCode, threads: Optional[int] = None) -> WeightDistribution:
    """Exact A_0..A_n by full enumeration (raises EnumerationBudgetError over budget)."""
    logger.info(f"穷举 {code} 的重量分布 (2^{code.k} 个码字)")
    counts = weight_counts(code, threads=threads)
    if sum(counts) != 1 << code.k:
        raise ConstructionError(f"enumeration visited {sum(counts)} codewords, expected 2^{code.k}")
    return WeightDistribution.from_counts(counts)


def support_matrix(code: LinearCode, w: int, threads: Optional[int] = None) -> np.ndarray:
    """Supports of all weight-w codewords, one ascending row per codeword."""
    return CodewordSweep(code.rows, code.n, threads=threads).supports_of_weight(w)


def codewords_of_weight(code: LinearCode, w: int, threads: Optional[int] = None) -> Iterator[SupportSet]:
    supports = support_matrix(code, w, threads=threads)
    return (tuple(int(i) for i in row) for row in supports)


def minimum_distance(code: LinearCode, threads: Optional[int] = None) -> int:
    counts = weight_counts(code, threads=threads)
    for w in range(1, code.n + 1):
        if counts[w]:
            return w
    raise ConstructionError(f"{code} has no nonzero codeword")  # pragma: no cover
