"""2-designs held by the low-weight codewords of the dual code C_m^perp."""

from __future__ import annotations

from typing import Optional, Tuple

from analysis.weight_enum import WeightDistribution, dual_closed_form, dual_count_at
from core.binomials import exact_div
from core.linear_code import LinearCode, dual
from families.base_family import BaseFamily


def _dual_weight7_quartic(x: int) -> int:
    return x * x - 5 * x + 34


def _dual_weight9_quartic(x: int) -> int:
    return x * x - x + 28


class DualFamily(BaseFamily):
    strength = 2

    def __init__(self):
        super().__init__('dual')

    def point_count(self, m: int) -> int:
        return (1 << m) - 1

    def dimension(self, m: int) -> int:
        return (1 << m) - 1 - 3 * m

    def build(self, primal: LinearCode) -> LinearCode:
        return dual(primal)

    def closed_form(self, m: int) -> WeightDistribution:
        return dual_closed_form(m)

    def count_at(self, m: int, k: int) -> int:
        return dual_count_at(m, k)

    def tabulated_weights(self, m: int) -> Tuple[int, ...]:
        return (7, 8, 9) if m >= 7 else (7, 8)

    def design_lambda(self, m: int, k: int) -> int:
        self.check_weight(m, k)
        x = 1 << (m - 1)
        what = f"dual lambda at m={m}, k={k}"
        if k == 7:
            return exact_div(_dual_weight7_quartic(x), 30, what=what)
        if k == 8:
            return exact_div((x - 4) * _dual_weight7_quartic(x), 90, what=what)
        return exact_div((x - 4) * (x - 16) * _dual_weight9_quartic(x), 315, what=what)

    def block_count_formula(self, m: int, k: int) -> Optional[int]:
        self.check_weight(m, k)
        x = 1 << (m - 1)
        what = f"dual block count at m={m}, k={k}"
        if k == 7:
            return exact_div((x - 1) * (2 * x - 1) * _dual_weight7_quartic(x), 630, what=what)
        if k == 8:
            return exact_div((x - 1) * (x - 4) * (2 * x - 1) * _dual_weight7_quartic(x), 2520, what=what)
        return exact_div((x - 1) * (x - 4) * (x - 16) * (2 * x - 1) * _dual_weight9_quartic(x), 11340, what=what)
