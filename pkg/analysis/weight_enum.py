"""
Weight-enumerator calculus.

提供：
- WeightDistribution（精确整数计数）
- MacWilliams 变换
- 五重量码 C_m 及其对偶、扩展对偶、双重对偶的闭式重量分布
- Pless 幂矩与对称性检查

All arithmetic is exact integer arithmetic; every division in a closed form
goes through ``exact_div`` so an inexact quotient surfaces as an error.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from core.binomials import exact_div, shared_table
from core.errors import ConstructionError, FormulaInconsistencyError

logger = logging.getLogger(__name__)


def check_odd_m(m: int):
    """The five-weight family exists for odd m >= 5 only."""
    if m % 2 == 0:
        raise ConstructionError(f"m must be odd, got {m}")
    if m < 5:
        raise ConstructionError(f"m must be at least 5, got {m}")


@dataclass(frozen=True)
class WeightDistribution:
    """Exact count per weight 0..n."""
    n: int
    counts: Tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} counts for length {self.n}, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError("weight counts must be nonnegative")

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> 'WeightDistribution':
        return cls(n=len(counts) - 1, counts=tuple(int(c) for c in counts))

    @classmethod
    def from_dict(cls, n: int, counts: Dict[int, int]) -> 'WeightDistribution':
        full = [0] * (n + 1)
        for weight, count in counts.items():
            if not 0 <= weight <= n:
                raise ValueError(f"weight {weight} outside 0..{n}")
            full[weight] = int(count)
        return cls(n=n, counts=tuple(full))

    def total(self) -> int:
        return sum(self.counts)

    def nonzero_weights(self) -> List[int]:
        """Weights i > 0 with A_i != 0."""
        return [i for i in range(1, self.n + 1) if self.counts[i]]

    def minimum_distance(self) -> Optional[int]:
        weights = self.nonzero_weights()
        return weights[0] if weights else None

    def as_dict(self) -> Dict[int, int]:
        return {i: c for i, c in enumerate(self.counts) if c}

    def to_frame(self) -> pd.DataFrame:
        """Nonzero rows as a (weight, count) frame; counts stay Python ints."""
        rows = self.as_dict()
        return pd.DataFrame({
            'weight': list(rows.keys()),
            'count': pd.Series(list(rows.values()), dtype=object),
        })

    def __getitem__(self, weight: int) -> int:
        return self.counts[weight] if 0 <= weight <= self.n else 0


# ================== MacWilliams 变换 ==================

def krawtchouk_row(i: int, n: int, q: int = 2) -> List[int]:
    """Coefficients of (1-z)^i (1+(q-1)z)^(n-i), lowest degree first."""
    table = shared_table()
    if q == 2:
        return table.signed_convolution_row(i, n - i)
    neg = [(-c if j & 1 else c) for j, c in enumerate(table.row(i))]
    pos = [c * (q - 1) ** j for j, c in enumerate(table.row(n - i))]
    out = [0] * (n + 1)
    for a, x in enumerate(neg):
        for b, y in enumerate(pos):
            out[a + b] += x * y
    return out


def macwilliams(wd: WeightDistribution, k_dim: int, q: int = 2) -> WeightDistribution:
    """Dual distribution A^perp_j = q^-k sum_i A_i K_j(i), evaluated exactly."""
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got {q}")
    scale = q ** k_dim
    if wd.total() != scale:
        raise FormulaInconsistencyError(
            f"not a valid code distribution: total {wd.total()} != {q}^{k_dim}")
    acc = [0] * (wd.n + 1)
    for i, count in enumerate(wd.counts):
        if not count:
            continue
        for j, coeff in enumerate(krawtchouk_row(i, wd.n, q)):
            acc[j] += count * coeff
    out = [exact_div(c, scale, what=f"dual count at weight {j}",
                     message='not a valid code distribution') for j, c in enumerate(acc)]
    if any(c < 0 for c in out):
        raise FormulaInconsistencyError("not a valid code distribution: negative dual count")
    return WeightDistribution.from_counts(out)


# ================== C_m 的参数 ==================

@dataclass(frozen=True)
class Table1Params:
    """Weights and frequencies of the five-weight code C_m.

    ``weights`` and ``frequencies`` are listed in increasing weight order, so
    frequencies[0..4] are the a, b, c, d, e of the dual-distribution formula.
    """
    m: int
    weights: Tuple[int, ...]
    frequencies: Tuple[int, ...]
    x: int
    eps: int
    h: int

    @property
    def n(self) -> int:
        return (1 << self.m) - 1

    @property
    def a(self) -> int:
        return self.frequencies[0]

    @property
    def b(self) -> int:
        return self.frequencies[1]

    @property
    def c(self) -> int:
        return self.frequencies[2]

    @property
    def d(self) -> int:
        return self.frequencies[3]

    @property
    def e(self) -> int:
        return self.frequencies[4]


def table1_params(m: int) -> Table1Params:
    check_odd_m(m)
    n = (1 << m) - 1
    half = 1 << (m - 1)
    lo = 1 << ((m - 1) // 2)   # 2^((m-1)/2)
    hi = 1 << ((m + 1) // 2)   # 2^((m+1)/2)
    r5 = 1 << ((m - 5) // 2)
    r3 = 1 << ((m - 3) // 2)
    what = f"five-weight frequency at m={m}"
    a = exact_div(n * r5 * (r3 + 1) * (half - 1), 3, what=what)
    b = exact_div(n * r3 * (lo + 1) * (5 * half + 4), 3, what=what)
    c = n * (9 * (1 << (2 * m - 4)) + 3 * (1 << (m - 3)) + 1)
    d = exact_div(n * r3 * (lo - 1) * (5 * half + 4), 3, what=what)
    e = exact_div(n * r5 * (r3 - 1) * (half - 1), 3, what=what)
    frequencies = (a, b, c, d, e)
    if 1 + sum(frequencies) != 1 << (3 * m):
        raise FormulaInconsistencyError(f"formula inconsistency: five-weight frequencies at m={m} do not sum to 2^{3 * m}")
    weights = (half - hi, half - lo, half, half + lo, half + hi)
    return Table1Params(m=m, weights=weights, frequencies=frequencies, x=lo, eps=lo, h=m - 1)


def table1_distribution(m: int) -> WeightDistribution:
    params = table1_params(m)
    return WeightDistribution.from_dict(params.n, {0: 1, **dict(zip(params.weights, params.frequencies))})


# ================== 对偶码 C_m^perp ==================

def dual_count_at(m: int, k: int, params: Optional[Table1Params] = None) -> int:
    """A^perp_k from the U-sum closed form, evaluated at a single weight."""
    params = params or table1_params(m)
    n = params.n
    if not 0 <= k <= n:
        return 0
    table = shared_table()
    total = table.comb(n, k)
    for weight, freq in zip(params.weights, params.frequencies):
        total += freq * table.signed_convolution(weight, n - weight, k)
    return exact_div(total, 1 << (3 * m), what=f"2^{3 * m} A^perp_{k} at m={m}")


def dual_closed_form(m: int) -> WeightDistribution:
    params = table1_params(m)
    n = params.n
    table = shared_table()
    acc = table.row(n)[:]
    for weight, freq in zip(params.weights, params.frequencies):
        for k, coeff in enumerate(table.signed_convolution_row(weight, n - weight)):
            acc[k] += freq * coeff
    counts = [exact_div(c, 1 << (3 * m), what=f"2^{3 * m} A^perp_{k} at m={m}") for k, c in enumerate(acc)]
    logger.debug(f"对偶码闭式分布 m={m}: 最小重量 {next(k for k in range(1, n + 1) if counts[k])}")
    return WeightDistribution.from_counts(counts)


# ================== 双重对偶码 ==================

@dataclass(frozen=True)
class DoubleDualParams:
    m: int
    u: int
    freq_v: int
    w: int

    @property
    def length(self) -> int:
        return 1 << self.m


def double_dual_params(m: int) -> DoubleDualParams:
    check_odd_m(m)
    what = f"double-dual frequency at m={m}"
    u = exact_div((1 << (3 * m - 4)) - 3 * (1 << (2 * m - 4)) + (1 << (m - 3)), 3, what=what)
    v = exact_div(5 * (1 << (3 * m - 2)) + 3 * (1 << (2 * m - 2)) - (1 << (m + 1)), 3, what=what)
    w = 2 * ((1 << m) - 1) * (9 * (1 << (2 * m - 4)) + 3 * (1 << (m - 3)) + 1)
    if 2 + 2 * u + 2 * v + w != 1 << (3 * m + 1):
        raise FormulaInconsistencyError(f"formula inconsistency: double-dual frequencies at m={m} do not sum to 2^{3 * m + 1}")
    return DoubleDualParams(m=m, u=u, freq_v=v, w=w)


def double_dual_weights(m: int) -> Tuple[int, ...]:
    """The five middle weights of the double dual, increasing."""
    half = 1 << (m - 1)
    lo = 1 << ((m - 1) // 2)
    hi = 1 << ((m + 1) // 2)
    return (half - hi, half - lo, half, half + lo, half + hi)


def double_dual_closed_form(m: int) -> WeightDistribution:
    params = double_dual_params(m)
    weights = double_dual_weights(m)
    freqs = (params.u, params.freq_v, params.w, params.freq_v, params.u)
    return WeightDistribution.from_dict(params.length, {0: 1, params.length: 1, **dict(zip(weights, freqs))})


# ================== 扩展对偶码 ==================

def _e0(m: int, k: int) -> int:
    if k & 1:
        return 0
    value = shared_table().comb(1 << (m - 1), k // 2)
    return -value if (k // 2) & 1 else value


def extended_dual_count_at(m: int, k: int, params: Optional[DoubleDualParams] = None) -> int:
    """Extended-dual count at weight k from the E-sum closed form."""
    params = params or double_dual_params(m)
    length = params.length
    if not 0 <= k <= length:
        return 0
    table = shared_table()
    total = (2 if k % 2 == 0 else 0) * table.comb(length, k) + params.w * _e0(m, k)
    weights = double_dual_weights(m)
    for weight, freq in ((weights[0], params.u), (weights[1], params.freq_v),
                         (weights[3], params.freq_v), (weights[4], params.u)):
        total += freq * table.signed_convolution(weight, length - weight, k)
    return exact_div(total, 1 << (3 * m + 1), what=f"2^{3 * m + 1} extended A^perp_{k} at m={m}")


def extended_dual_closed_form(m: int) -> WeightDistribution:
    params = double_dual_params(m)
    length = params.length
    table = shared_table()
    acc = [(2 if k % 2 == 0 else 0) * c for k, c in enumerate(table.row(length))]
    for k in range(0, length + 1, 2):
        acc[k] += params.w * _e0(m, k)
    weights = double_dual_weights(m)
    for weight, freq in ((weights[0], params.u), (weights[1], params.freq_v),
                         (weights[3], params.freq_v), (weights[4], params.u)):
        for k, coeff in enumerate(table.signed_convolution_row(weight, length - weight)):
            acc[k] += freq * coeff
    counts = [exact_div(c, 1 << (3 * m + 1), what=f"2^{3 * m + 1} extended A^perp_{k} at m={m}")
              for k, c in enumerate(acc)]
    return WeightDistribution.from_counts(counts)


# ================== 一致性检查 ==================

def pless_check(wd: WeightDistribution, m: int) -> bool:
    """First and third Pless power moments of the double dual."""
    length = 1 << m
    if wd.n != length:
        raise ValueError(f"distribution has length {wd.n}, expected 2^{m} = {length}")
    first = wd.total() == 1 << (3 * m + 1)
    second_moment = sum(i * i * c for i, c in enumerate(wd.counts))
    third = second_moment == (1 << (3 * m - 1)) * length * (length + 1)
    return first and third


def weight_symmetry(wd: WeightDistribution) -> bool:
    return all(wd.counts[i] == wd.counts[wd.n - i] for i in range(wd.n + 1))
