"""Exact binomial coefficients and checked integer division.

All closed forms in the workbench are evaluated with Python integers; the
divisions they contain are correctness checks in their own right, so they go
through :func:`exact_div` instead of ``//``.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import List

from core.errors import FormulaInconsistencyError

logger = logging.getLogger(__name__)


def exact_div(numerator: int, denominator: int, what: str = 'value',
              error: type = FormulaInconsistencyError,
              message: str = 'formula inconsistency') -> int:
    """Return numerator / denominator, raising if the division is not exact."""
    if denominator == 0:
        raise error(f"{message}: {what} divides by zero")
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise error(f"{message}: {what} = {numerator}/{denominator} is not an integer")
    return quotient


class BinomialTable:
    """Memoised rows C(top, 0..top) built by the multiplicative recurrence.

    Rows are extended lazily, so asking for C(8191, 7) only materialises the
    first eight entries of that row.
    """

    def __init__(self):
        self._rows = {}

    def row(self, top: int, upto: int | None = None) -> List[int]:
        if top < 0:
            raise ValueError(f"binomial row of negative top {top}")
        limit = top if upto is None else min(upto, top)
        row = self._rows.setdefault(top, [1])
        while len(row) <= limit:
            j = len(row) - 1
            row.append(row[j] * (top - j) // (j + 1))
        return row[:limit + 1]

    def comb(self, top: int, k: int) -> int:
        if k < 0 or top < 0 or k > top:
            return 0
        # C(top, k) = C(top, top-k)，取较短的一侧
        k = min(k, top - k)
        return self.row(top, k)[k]

    def signed_convolution(self, neg_top: int, pos_top: int, k: int) -> int:
        """Coefficient of z^k in (1-z)^neg_top (1+z)^pos_top."""
        lo = max(0, k - pos_top)
        hi = min(k, neg_top)
        total = 0
        for i in range(lo, hi + 1):
            term = self.comb(neg_top, i) * self.comb(pos_top, k - i)
            total += -term if i & 1 else term
        return total

    def signed_convolution_row(self, neg_top: int, pos_top: int) -> List[int]:
        """All coefficients of (1-z)^neg_top (1+z)^pos_top, lowest degree first.

        Uses the three-term recurrence
        (j+1) c_{j+1} = (pos-neg) c_j - (neg+pos-j+1) c_{j-1},
        so a full row costs one exact division per coefficient.
        """
        if neg_top < 0 or pos_top < 0:
            raise ValueError(f"negative exponent in (1-z)^{neg_top} (1+z)^{pos_top}")
        length = neg_top + pos_top
        out = [1]
        prev = 0
        for j in range(length):
            nxt, rem = divmod((pos_top - neg_top) * out[j] - (length - j + 1) * prev, j + 1)
            if rem:  # pragma: no cover
                raise FormulaInconsistencyError(f"recurrence broke at coefficient {j + 1} of (1-z)^{neg_top}(1+z)^{pos_top}")
            prev = out[j]
            out.append(nxt)
        return out


@lru_cache(maxsize=1)
def shared_table() -> BinomialTable:
    return BinomialTable()
