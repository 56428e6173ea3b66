"""Primitive BCH generator polynomials and the two constructions of the five-weight code C_m."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import List, Optional

from analysis.weight_enum import check_odd_m
from core.errors import ConstructionError
from core.finite_field import FieldSpec, cyclotomic_coset, field_new, minimal_polynomial
from core.linear_code import LinearCode, dual
from core.polynomial import BinaryPolynomial, x_power_minus_one

logger = logging.getLogger(__name__)


class Variant(Enum):
    BCH_B0 = 'bch0'  # C_(2, n, delta, 0), delta = 2^(m-1) - 1 - 2^((m+1)/2)
    DUAL_NARROW_7 = 'dual-narrow7'  # dual of the narrow-sense BCH code C_(2, n, 7, 1)


@dataclass(frozen=True)
class BchSpec:
    m: int
    delta: int
    offset: int = 0

    @property
    def n(self) -> int:
        return (1 << self.m) - 1

    def __post_init__(self):
        if self.delta < 2:
            raise ConstructionError(f"designed distance too small: delta={self.delta}")
        if self.delta > self.n:
            raise ConstructionError(f"designed distance {self.delta} exceeds length {self.n}")
        if not 0 <= self.offset < self.n:
            raise ConstructionError(f"offset {self.offset} outside 0..{self.n - 1}")


def coset_leaders_in_window(spec: BchSpec) -> List[int]:
    """Distinct coset leaders hit by the exponents offset .. offset+delta-2 (mod n)."""
    leaders = set()
    for j in range(spec.delta - 1):
        leaders.add(cyclotomic_coset((spec.offset + j) % spec.n, spec.n)[0])
    return sorted(leaders)


def bch_generator(spec: BchSpec, ctx: FieldSpec) -> BinaryPolynomial:
    """lcm of the minimal polynomials M_offset .. M_(offset+delta-2).

    Minimal polynomials of distinct cosets are coprime, so the lcm is the
    product over distinct coset leaders.
    """
    if ctx.m != spec.m:
        raise ConstructionError(f"field degree {ctx.m} does not match BCH m={spec.m}")
    leaders = coset_leaders_in_window(spec)
    generator = reduce(lambda acc, i: acc * minimal_polynomial(i, ctx), leaders, BinaryPolynomial(1))
    if not generator.divides(x_power_minus_one(spec.n)):
        raise ConstructionError(f"generator {generator} does not divide x^{spec.n} + 1")
    logger.debug(f"BCH 生成多项式 delta={spec.delta} offset={spec.offset}: 陪集首 {leaders}, 次数 {generator.degree}")
    return generator


def cyclic_code(generator: BinaryPolynomial, n: int) -> LinearCode:
    """Rows x^i g(x) for 0 <= i < n - deg g; coefficient j sits at coordinate j."""
    k = n - generator.degree
    if k <= 0:
        raise ConstructionError(f"generator of degree {generator.degree} leaves no dimension at length {n}")
    return LinearCode(n=n, k=k, rows=tuple(generator.bits << i for i in range(k)))


def designed_distance_bch0(m: int) -> int:
    return (1 << (m - 1)) - 1 - (1 << ((m + 1) // 2))


def bch_code(spec: BchSpec, ctx: Optional[FieldSpec] = None) -> LinearCode:
    ctx = ctx or field_new(spec.m)
    return cyclic_code(bch_generator(spec, ctx), spec.n)


def build_C_m(m: int, variant: Variant = Variant.BCH_B0, ctx: Optional[FieldSpec] = None) -> LinearCode:
    """The [2^m - 1, 3m] five-weight code, by either of the two constructions."""
    check_odd_m(m)
    ctx = ctx or field_new(m)
    if variant is Variant.BCH_B0:
        code = bch_code(BchSpec(m=m, delta=designed_distance_bch0(m), offset=0), ctx)
    elif variant is Variant.DUAL_NARROW_7:
        code = dual(bch_code(BchSpec(m=m, delta=7, offset=1), ctx))
    else:
        raise ConstructionError(f"unknown variant {variant}")
    if code.k != 3 * m:
        raise ConstructionError(f"construction failed dimension check: got k={code.k}, expected {3 * m}")
    logger.info(f"构造 C_{m} ({variant.value}): [{code.n}, {code.k}]")
    return code
