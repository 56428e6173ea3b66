"""2-designs held by the codewords of C_m itself."""

from __future__ import annotations

from typing import Tuple

from analysis.weight_enum import WeightDistribution, table1_distribution, table1_params
from core.binomials import exact_div
from core.linear_code import LinearCode
from families.base_family import BaseFamily


class PrimalFamily(BaseFamily):
    strength = 2

    def __init__(self):
        super().__init__('primal')

    def point_count(self, m: int) -> int:
        return (1 << m) - 1

    def dimension(self, m: int) -> int:
        return 3 * m

    def build(self, primal: LinearCode) -> LinearCode:
        return primal

    def closed_form(self, m: int) -> WeightDistribution:
        return table1_distribution(m)

    def tabulated_weights(self, m: int) -> Tuple[int, ...]:
        return table1_params(m).weights

    def design_lambda(self, m: int, k: int) -> int:
        self.check_weight(m, k)
        k1, k2, k3, k4, k5 = self.tabulated_weights(m)
        r5 = 1 << ((m - 5) // 2)
        r3 = 1 << ((m - 3) // 2)
        quarter = 1 << (m - 2)
        what = f"primal lambda at m={m}, k={k}"
        if k == k1:
            return exact_div(r5 * (r3 + 1) * k1 * (k1 - 1), 6, what=what)
        if k == k2:
            return exact_div(quarter * (k2 - 1) * (5 * (1 << (m - 1)) + 4), 6, what=what)
        if k == k3:
            return quarter * (9 * (1 << (2 * m - 4)) + 3 * (1 << (m - 3)) + 1)
        if k == k4:
            return exact_div(quarter * (k4 - 1) * (5 * (1 << (m - 1)) + 4), 6, what=what)
        return exact_div(r5 * (r3 - 1) * k5 * (k5 - 1), 6, what=what)

    def block_count_formula(self, m: int, k: int) -> int:
        params = table1_params(m)
        self.check_weight(m, k)
        return params.frequencies[params.weights.index(k)]
