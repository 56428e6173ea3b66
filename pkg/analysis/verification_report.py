"""
Verification report.

每条检查记录：名称、期望值（及来源）、观测值、状态。
状态: MATCH / MISMATCH / MISMATCH-KNOWN / SKIPPED-budget
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import pandas as pd

from config.settings import REPORT_CONFIG

logger = logging.getLogger(__name__)

ASSUMPTIONS = (
    "beta = alpha: minimal polynomials M_i are taken over powers of the primitive element alpha (class of x).",
    "Default field modulus: smallest-integer primitive polynomial of degree m.",
    "Enumeration is ground truth wherever a closed form and an enumeration disagree.",
)


class CheckStatus(Enum):
    MATCH = 'MATCH'
    MISMATCH = 'MISMATCH'
    MISMATCH_KNOWN = 'MISMATCH-KNOWN'
    SKIPPED_BUDGET = 'SKIPPED-budget'


def render_value(value: Any):
    """Decimal strings for integers, recursively for sequences and mappings."""
    if value is None:
        return None
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): render_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render_value(v) for v in value]
    return str(value)


def _text(value: Any) -> str:
    rendered = render_value(value)
    if rendered is None:
        return '-'
    if isinstance(rendered, (list, dict)):
        return json.dumps(rendered, separators=(',', ':'))
    return rendered


@dataclass(frozen=True)
class CheckRecord:
    name: str
    expected: Any
    observed: Any
    provenance: str
    status: CheckStatus
    note: str = ''

    def to_dict(self) -> Dict[str, Any]:
        out = {
            'name': self.name,
            'expected': render_value(self.expected),
            'observed': render_value(self.observed),
            'provenance': self.provenance,
            'status': self.status.value,
        }
        if self.note:
            out['note'] = self.note
        return out

    def to_line(self) -> str:
        line = (f"[{self.status.value}] {self.name}: expected={_text(self.expected)} ({self.provenance}) "
                f"observed={_text(self.observed)}")
        return f"{line}  # {self.note}" if self.note else line


@dataclass
class VerificationReport:
    m: int
    level: str
    records: List[CheckRecord] = field(default_factory=list)

    # ================== 记录 ==================
    def compare(self, name: str, expected: Any, observed: Any, provenance: str, note: str = '') -> CheckRecord:
        if expected == observed:
            status = CheckStatus.MATCH
        elif name in REPORT_CONFIG['known_discrepancies']:
            status = CheckStatus.MISMATCH_KNOWN
            logger.warning(f"已知不一致 {name}: 期望 {expected}, 实际 {observed}")
        else:
            status = CheckStatus.MISMATCH
            logger.error(f"不一致 {name}: 期望 {expected}, 实际 {observed}")
        return self._add(CheckRecord(name, expected, observed, provenance, status, note))

    def skip(self, name: str, expected: Any, provenance: str, reason: str) -> CheckRecord:
        logger.warning(f"跳过 {name}: {reason}")
        return self._add(CheckRecord(name, expected, None, provenance, CheckStatus.SKIPPED_BUDGET, reason))

    def _add(self, record: CheckRecord) -> CheckRecord:
        self.records.append(record)
        return record

    # ================== 汇总 ==================
    def summary(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in CheckStatus}
        for record in self.records:
            counts[record.status.value] += 1
        return counts

    def summary_frame(self) -> pd.DataFrame:
        return pd.DataFrame(list(self.summary().items()), columns=['status', 'checks'])

    def unexpected_mismatches(self) -> List[CheckRecord]:
        return [r for r in self.records if r.status is CheckStatus.MISMATCH]

    def exit_code(self) -> int:
        return 1 if self.unexpected_mismatches() else 0

    def find(self, name: str) -> Optional[CheckRecord]:
        return next((r for r in self.records if r.name == name), None)

    # ================== 输出 ==================
    def to_text(self, timestamp: Optional[str] = None) -> str:
        if timestamp is None:
            timestamp = pd.Timestamp.now().strftime(REPORT_CONFIG['timestamp_format'])
        report = [f"# generated {timestamp}"]
        report.append(f"=== Verification report m={self.m} level={self.level} ===")
        report.extend(record.to_line() for record in self.records)
        report.append("")
        report.append("=== Summary ===")
        for status, count in self.summary().items():
            report.append(f"{status}: {count}")
        report.append("")
        report.append("=== Assumptions ===")
        report.extend(ASSUMPTIONS)
        return '\n'.join(report) + '\n'

    def to_json(self) -> str:
        payload = {
            'm': str(self.m),
            'level': self.level,
            'checks': [record.to_dict() for record in self.records],
            'summary': {status: str(count) for status, count in self.summary().items()},
            'assumptions': list(ASSUMPTIONS),
        }
        return json.dumps(payload, indent=2, ensure_ascii=False) + '\n'
