"""Base Family module.

This module contains the base class for the code families built from the
five-weight code C_m.
"""

from __future__ import annotations

from typing import Optional, Tuple

from analysis.weight_enum import WeightDistribution, check_odd_m
from core.errors import DesignError
from core.linear_code import LinearCode


class BaseFamily:
    """Base class for code families.

    A family knows how to derive its code from C_m, its closed-form weight
    distribution, and the published lambda / block-count formulas of the
    designs held by its codewords.
    """

    strength = 0  # t of the designs held by the family

    def __init__(self, name: str):
        self.name = name

    def point_count(self, m: int) -> int:
        raise NotImplementedError("point_count method must be implemented in subclass")

    def dimension(self, m: int) -> int:
        raise NotImplementedError("dimension method must be implemented in subclass")

    def build(self, primal: LinearCode) -> LinearCode:
        """Derive this family's code from C_m."""
        raise NotImplementedError("build method must be implemented in subclass")

    def closed_form(self, m: int) -> WeightDistribution:
        raise NotImplementedError("closed_form method must be implemented in subclass")

    def count_at(self, m: int, k: int) -> int:
        return self.closed_form(m)[k]

    def tabulated_weights(self, m: int) -> Tuple[int, ...]:
        """Block sizes with a published lambda formula at this m."""
        raise NotImplementedError("tabulated_weights method must be implemented in subclass")

    def design_lambda(self, m: int, k: int) -> int:
        raise NotImplementedError("design_lambda method must be implemented in subclass")

    def block_count_formula(self, m: int, k: int) -> Optional[int]:
        """Published closed block count at weight k, or None when none is stated."""
        return None

    def check_weight(self, m: int, k: int):
        check_odd_m(m)
        if k not in self.tabulated_weights(m):
            raise DesignError(f"unsupported case: {self.name} has no tabulated design at m={m}, k={k}")

    def __str__(self) -> str:
        return self.name
