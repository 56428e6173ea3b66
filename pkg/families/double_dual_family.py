"""3-designs held by the double dual, the dual of the extended dual of C_m."""

from __future__ import annotations

from typing import Optional, Tuple

from analysis.weight_enum import (WeightDistribution, double_dual_closed_form, double_dual_params,
                                  double_dual_weights)
from core.binomials import exact_div
from core.linear_code import LinearCode, double_dual_generator
from families.base_family import BaseFamily


class DoubleDualFamily(BaseFamily):
    strength = 3

    def __init__(self):
        super().__init__('double_dual')

    def point_count(self, m: int) -> int:
        return 1 << m

    def dimension(self, m: int) -> int:
        return 3 * m + 1

    def build(self, primal: LinearCode) -> LinearCode:
        return double_dual_generator(primal)

    def closed_form(self, m: int) -> WeightDistribution:
        return double_dual_closed_form(m)

    def tabulated_weights(self, m: int) -> Tuple[int, ...]:
        return double_dual_weights(m)

    def design_lambda(self, m: int, k: int) -> int:
        self.check_weight(m, k)
        k1, k2, k3, k4, k5 = self.tabulated_weights(m)
        lo = 1 << ((m - 1) // 2)
        what = f"double-dual lambda at m={m}, k={k}"
        if k in (k1, k5):
            return exact_div(k * (k - 1) * (k - 2), 48, what=what)
        if k == k2:
            return exact_div(lo * (k2 - 1) * (lo - 2) * (5 * (1 << (m - 3)) + 1), 3, what=what)
        if k == k3:
            return ((1 << (m - 2)) - 1) * (9 * (1 << (2 * m - 4)) + 3 * (1 << (m - 3)) + 1)
        return exact_div(lo * (k4 - 1) * (lo + 2) * (5 * (1 << (m - 3)) + 1), 3, what=what)

    def block_count_formula(self, m: int, k: int) -> Optional[int]:
        self.check_weight(m, k)
        params = double_dual_params(m)
        freqs = (params.u, params.freq_v, params.w, params.freq_v, params.u)
        return freqs[self.tabulated_weights(m).index(k)]
