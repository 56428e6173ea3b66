"""3-designs held by the low-weight codewords of the extended dual of C_m."""

from __future__ import annotations

from typing import Optional, Tuple

from analysis.weight_enum import WeightDistribution, extended_dual_closed_form, extended_dual_count_at
from core.binomials import exact_div
from core.linear_code import LinearCode, dual, extend
from families.base_family import BaseFamily
from families.dual_family import DualFamily, _dual_weight7_quartic, _dual_weight9_quartic

# 权重 12 公式中的六次多项式系数（按 2^h 的降幂排列）
WEIGHT12_SEXTIC = (2, -55, 647, -2727, 11541, -47208)


def _sextic(base: int) -> int:
    value = 0
    for coeff in WEIGHT12_SEXTIC:
        value = value * base + coeff
    return value


class ExtendedDualFamily(BaseFamily):
    strength = 3

    def __init__(self):
        super().__init__('extended_dual')
        self._dual = DualFamily()

    def point_count(self, m: int) -> int:
        return 1 << m

    def dimension(self, m: int) -> int:
        return (1 << m) - 1 - 3 * m

    def build(self, primal: LinearCode) -> LinearCode:
        return extend(dual(primal))

    def closed_form(self, m: int) -> WeightDistribution:
        return extended_dual_closed_form(m)

    def count_at(self, m: int, k: int) -> int:
        return extended_dual_count_at(m, k)

    def tabulated_weights(self, m: int) -> Tuple[int, ...]:
        return (8, 10, 12) if m >= 7 else (8, 12)

    def design_lambda(self, m: int, k: int) -> int:
        self.check_weight(m, k)
        if k == 8:
            return self._dual.design_lambda(m, 7)
        if k == 10:
            return self._dual.design_lambda(m, 9)
        h = m - 1
        return exact_div(((1 << (h - 2)) - 1) * _sextic(1 << h), 2835,
                         what=f"extended-dual lambda at m={m}, k=12")

    def block_count_formula(self, m: int, k: int) -> Optional[int]:
        self.check_weight(m, k)
        x = 1 << (m - 1)
        what = f"extended-dual block count at m={m}, k={k}"
        if k == 8:
            return exact_div((1 << m) * (x - 1) * (2 * x - 1) * _dual_weight7_quartic(x), 315, what=what)
        if k == 10:
            return exact_div(x * (x - 1) * (2 * x - 1) * (x - 4) * (x - 16) * _dual_weight9_quartic(x),
                             4 * 14175, what=what)
        eps2 = x  # eps^2 = 2^(m-1)
        return exact_div(eps2 * (eps2 - 1) * (eps2 - 4) * (2 * eps2 - 1) * _sextic(eps2),
                         8 * 467775, what=what)
