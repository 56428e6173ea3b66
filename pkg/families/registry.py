"""Family lookup by name."""

from __future__ import annotations

from typing import Dict, Tuple

from core.errors import DesignError
from families.base_family import BaseFamily
from families.double_dual_family import DoubleDualFamily
from families.dual_family import DualFamily
from families.extended_dual_family import ExtendedDualFamily
from families.primal_family import PrimalFamily

FAMILIES: Dict[str, BaseFamily] = {
    family.name: family
    for family in (PrimalFamily(), DualFamily(), DoubleDualFamily(), ExtendedDualFamily())
}

# CLI 使用 table1 / extended-dual 这类写法
_ALIASES = {'table1': 'primal'}

# Assmus-Mattson 配对：(C 的族, C^perp 的族)
AM_PAIRS: Tuple[Tuple[str, str], ...] = (('primal', 'dual'), ('double_dual', 'extended_dual'))


def get_family(name: str) -> BaseFamily:
    key = name.replace('-', '_').lower()
    key = _ALIASES.get(key, key)
    try:
        return FAMILIES[key]
    except KeyError:
        raise DesignError(f"unknown family {name!r}; expected one of {sorted(FAMILIES)}")
