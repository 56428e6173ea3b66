"""
Design engine.

提供：
- 从固定重量码字的支撑集提取区组设计
- 穷举验证 t-设计性质（按组合 colex 排名计数）
- 可除性必要条件、由区组数推出 lambda
- Assmus-Mattson 定理审计
- 各族已发表的 lambda 闭式
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence, Tuple

import numpy as np

from analysis.weight_enum import WeightDistribution, macwilliams
from config.settings import DESIGN_CONFIG
from core.binomials import exact_div, shared_table
from core.enumeration import resolve_threads
from core.errors import DesignError, FormulaInconsistencyError, VerificationBudgetError
from core.linear_code import LinearCode, support_matrix
from families.registry import get_family

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Design:
    """Simple block design: ``blocks`` is a (block_count, k) array of ascending point indices."""
    v: int
    blocks: np.ndarray

    def __post_init__(self):
        if self.blocks.ndim != 2 or len(self.blocks) == 0:
            raise DesignError("a design needs at least one block")
        if self.k >= self.v:
            raise DesignError(f"trivial design: block size {self.k} is not below v={self.v}")
        if self.blocks.min() < 0 or self.blocks.max() >= self.v:
            raise DesignError(f"block entry outside 0..{self.v - 1}")
        if self.k > 1 and not np.all(np.diff(self.blocks, axis=1) > 0):
            raise DesignError("block entries must be strictly increasing")
        if len(np.unique(self.blocks, axis=0)) != len(self.blocks):
            raise DesignError("duplicate block: a simple design has no repeated blocks")

    @classmethod
    def from_blocks(cls, v: int, blocks: Sequence[Sequence[int]]) -> 'Design':
        if len(blocks) == 0:
            raise DesignError("a design needs at least one block")
        sizes = {len(b) for b in blocks}
        if len(sizes) > 1:
            raise DesignError(f"not uniform: block sizes {sorted(sizes)}")
        rows = [sorted(int(p) for p in b) for b in blocks]
        return cls(v=v, blocks=np.array(rows, dtype=np.int16).reshape(len(rows), -1))

    @property
    def k(self) -> int:
        return self.blocks.shape[1]

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def sorted_blocks(self) -> np.ndarray:
        """Blocks in lexicographic order of their index sequences."""
        order = np.lexsort(self.blocks.T[::-1])
        return self.blocks[order]


@dataclass(frozen=True)
class DesignCheck:
    t: int
    v: int
    k: int
    block_count: int
    min_count: int
    max_count: int

    @property
    def holds(self) -> bool:
        return self.min_count == self.max_count

    @property
    def lam(self) -> Optional[int]:
        return self.min_count if self.holds else None


@dataclass(frozen=True)
class AMReport:
    t: int
    d: int
    d_perp: int
    s: int
    passes: bool
    orientation: str  # 'given' 或 'swapped'
    design_weights: Tuple[int, ...] = field(default_factory=tuple)
    dual_design_weights: Tuple[int, ...] = field(default_factory=tuple)


# ================== 提取 ==================

def supports_to_design(code: LinearCode, w: int, threads: Optional[int] = None) -> Design:
    blocks = support_matrix(code, w, threads=threads)
    if len(blocks) == 0 or w == 0:
        raise DesignError(f"no blocks at weight {w} in {code}")
    design = Design(v=code.n, blocks=blocks)
    logger.info(f"提取区组设计: v={design.v}, k={design.k}, 区组数 {design.block_count}")
    return design


# ================== t-设计验证 ==================

def colex_rank_table(v: int, t: int) -> np.ndarray:
    """table[c, j] = C(c, j) for 0 <= c < v, 0 <= j <= t."""
    table = shared_table()
    return np.array([[table.comb(c, j) for j in range(t + 1)] for c in range(v)], dtype=np.int64)


def colex_rank(subset: Sequence[int]) -> int:
    """Rank of an ascending subset in colexicographic order: sum_i C(c_i, i+1)."""
    table = shared_table()
    return sum(table.comb(c, i + 1) for i, c in enumerate(subset))


def _count_shard(blocks: np.ndarray, combos: np.ndarray, ranks: np.ndarray, counters: int) -> np.ndarray:
    counts = np.zeros(counters, dtype=np.int64)
    batch = max(1, DESIGN_CONFIG['batch_entries'] // len(combos))
    t = combos.shape[1]
    for start in range(0, len(blocks), batch):
        subsets = blocks[start:start + batch][:, combos]  # (batch, C(k,t), t)
        rank = np.zeros(subsets.shape[:2], dtype=np.int64)
        for i in range(t):
            rank += ranks[subsets[..., i], i + 1]
        counts += np.bincount(rank.ravel(), minlength=counters)
    return counts


def verify_t_design(design: Design, t: int, threads: Optional[int] = None) -> DesignCheck:
    """Count every t-subset of every block and compare the counters."""
    if t < 1:
        raise DesignError(f"t must be positive, got {t}")
    if not t < design.k < design.v:
        raise DesignError(f"need t < k < v, got t={t}, k={design.k}, v={design.v}")
    counters = shared_table().comb(design.v, t)
    if counters > DESIGN_CONFIG['counter_budget']:
        raise VerificationBudgetError(
            f"verification too large: C({design.v},{t}) = {counters} counters exceeds {DESIGN_CONFIG['counter_budget']}")
    combos = np.array(list(combinations(range(design.k), t)), dtype=np.intp)
    ranks = colex_rank_table(design.v, t)
    blocks = design.blocks

    workers = min(resolve_threads(threads), design.block_count)
    shards = np.array_split(blocks, workers)
    logger.info(f"验证 {t}-({design.v},{design.k}) 设计: {design.block_count} 个区组, {counters} 个计数器, {workers} 个线程")
    if workers == 1:
        counts = _count_shard(blocks, combos, ranks, counters)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partial = list(pool.map(lambda shard: _count_shard(shard, combos, ranks, counters), shards))
        counts = np.sum(partial, axis=0)

    result = DesignCheck(t=t, v=design.v, k=design.k, block_count=design.block_count,
                         min_count=int(counts.min()), max_count=int(counts.max()))
    if result.holds:
        logger.info(f"{t}-({design.v},{design.k},{result.lam}) 设计成立")
    else:
        logger.warning(f"不是 {t}-设计: min={result.min_count}, max={result.max_count}")
    return result


def verification_work(block_count: int, k: int, t: int) -> int:
    """Rank operations needed by verify_t_design: blocks x C(k, t)."""
    return block_count * shared_table().comb(k, t)


# ================== 算术条件 ==================

def divisibility_check(t: int, v: int, k: int, lam: int) -> bool:
    table = shared_table()
    if not 0 < t <= k <= v:
        raise DesignError(f"need 0 < t <= k <= v, got t={t}, k={k}, v={v}")
    return all((lam * table.comb(v - i, t - i)) % table.comb(k - i, t - i) == 0 for i in range(t + 1))


def lambda_from_count(block_count: int, t: int, v: int, k: int) -> int:
    table = shared_table()
    return exact_div(block_count * table.comb(k, t), table.comb(v, t),
                     what=f"lambda of {block_count} blocks as a {t}-({v},{k}) design",
                     message='not design-consistent')


def closed_form_lambda(m: int, family: str, k: int) -> int:
    """Published lambda of the t-design held by the weight-k codewords of ``family``."""
    return get_family(family).design_lambda(m, k)


# ================== Assmus-Mattson ==================

def _count_dual_weights(wd_dual: WeightDistribution, t: int) -> int:
    return sum(1 for i in range(1, wd_dual.n - t + 1) if wd_dual.counts[i])


def _holding_weights(wd: WeightDistribution, distance: int, t: int) -> Tuple[int, ...]:
    # 只保留非平凡区组大小 t < k < v
    return tuple(i for i in range(max(distance, t + 1), wd.n) if wd.counts[i])


def assmus_mattson_audit(wd: WeightDistribution, wd_dual: WeightDistribution, t: int) -> AMReport:
    """Check the Assmus-Mattson hypothesis for a dual pair, trying both roles."""
    if wd.n != wd_dual.n:
        raise DesignError(f"lengths differ: {wd.n} vs {wd_dual.n}")
    total = wd.total()
    if total & (total - 1):
        raise FormulaInconsistencyError(f"not a valid code distribution: total {total} is not a power of 2")
    if macwilliams(wd, total.bit_length() - 1) != wd_dual:
        raise FormulaInconsistencyError("distributions do not form a MacWilliams dual pair")
    d = wd.minimum_distance()
    d_perp = wd_dual.minimum_distance()
    if t < 1:
        raise DesignError(f"t must be positive, got {t}")
    if d is None or d_perp is None or t >= min(d, d_perp):
        raise DesignError(f"t too large: t={t}, d={d}, d_perp={d_perp}")

    s_given = _count_dual_weights(wd_dual, t)
    if s_given <= d - t:
        orientation, s, passes = 'given', s_given, True
    else:
        s_swapped = _count_dual_weights(wd, t)
        if s_swapped <= d_perp - t:
            orientation, s, passes = 'swapped', s_swapped, True
        else:
            orientation, s, passes = 'given', s_given, False

    report = AMReport(
        t=t, d=d, d_perp=d_perp, s=s, passes=passes, orientation=orientation,
        design_weights=_holding_weights(wd, d, t) if passes else (),
        dual_design_weights=_holding_weights(wd_dual, d_perp, t) if passes else (),
    )
    logger.info(f"Assmus-Mattson (t={t}): s={s}, d={d}, d_perp={d_perp}, 方向 {orientation}, 通过={passes}")
    return report
