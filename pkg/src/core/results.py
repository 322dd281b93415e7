"""
results.py
----------
Shared result records: NotApplicable outcomes, inequality rows and the
diagnostics report used by verification passes.

A rule that cannot fire returns NotApplicable instead of raising, so a
certificate can still list it with the precondition that failed.

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np


def jsonable(value: Any) -> Any:
    """Convert Fractions, numpy scalars, tuples and sets into plain JSON values."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value.numerator)
        return str(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return [jsonable(v) for v in sorted(value)]
    if hasattr(value, "to_dict"):
        return jsonable(value.to_dict())
    return value


class NotApplicable:
    """A rule whose precondition failed; carries both sides of the failed check."""

    def __init__(self, rule: str, condition: str, lhs: Any = None, rhs: Any = None):
        self.rule = rule
        self.condition = condition
        self.lhs = lhs
        self.rhs = rhs

    def to_dict(self) -> Dict:
        return {
            "rule": self.rule,
            "not_applicable": self.condition,
            "lhs": jsonable(self.lhs),
            "rhs": jsonable(self.rhs),
        }

    def __repr__(self) -> str:
        return f"NotApplicable({self.rule}: {self.condition}, lhs={self.lhs}, rhs={self.rhs})"


class Inequality:
    """One evaluated inequality lhs <= rhs (or the relation named in `name`)."""

    def __init__(self, name: str, lhs: Any, rhs: Any, holds: bool):
        self.name = name
        self.lhs = lhs
        self.rhs = rhs
        self.holds = bool(holds)

    def to_dict(self) -> Dict:
        result = {
            "name": self.name,
            "lhs": jsonable(self.lhs),
            "rhs": jsonable(self.rhs),
            "holds": self.holds,
        }
        for side in ("lhs", "rhs"):
            value = getattr(self, side)
            if isinstance(value, Fraction) and value.denominator != 1:
                result[f"{side}_float"] = float(value)
        return result

    def __repr__(self) -> str:
        mark = "ok" if self.holds else "VIOLATED"
        return f"Inequality({self.name}: {self.lhs} vs {self.rhs} {mark})"


class DiagnosticsReport:
    """Container for verification results."""

    def __init__(self, title: str = "DIAGNOSTICS"):
        self.title = title
        self.errors: List[Dict] = []
        self.warnings: List[Dict] = []
        self.info: List[Dict] = []
        self.stats: Dict = {}

    def add_error(self, check: str, message: str, witness: Optional[Any] = None):
        self.errors.append({
            'severity': 'ERROR',
            'check': check,
            'message': message,
            'witness': jsonable(witness),
        })

    def add_warning(self, check: str, message: str, witness: Optional[Any] = None):
        self.warnings.append({
            'severity': 'WARNING',
            'check': check,
            'message': message,
            'witness': jsonable(witness),
        })

    def add_info(self, check: str, message: str, witness: Optional[Any] = None):
        self.info.append({
            'severity': 'INFO',
            'check': check,
            'message': message,
            'witness': jsonable(witness),
        })

    def is_valid(self) -> bool:
        """Return True if no errors found."""
        return len(self.errors) == 0

    def __len__(self) -> int:
        return len(self.errors)

    def summary(self) -> str:
        """Generate summary string."""
        lines = [
            "=" * 60,
            self.title,
            "=" * 60,
            f"Errors:   {len(self.errors)}",
            f"Warnings: {len(self.warnings)}",
            f"Info:     {len(self.info)}",
            "-" * 60,
        ]
        for key, value in self.stats.items():
            lines.append(f"{key}: {value}")
        for entry in self.errors[:20]:
            lines.append(f"[ERROR] {entry['check']}: {entry['message']} {entry['witness']}")
        if len(self.errors) > 20:
            lines.append(f"... and {len(self.errors) - 20} more errors")
        for entry in self.warnings[:10]:
            lines.append(f"[WARN]  {entry['check']}: {entry['message']}")
        lines.append("=" * 60)
        return "\n".join(lines)

    def to_dict(self) -> Dict:
        return {
            "valid": self.is_valid(),
            "errors": self.errors,
            "warnings": self.warnings,
            "info": self.info,
            "stats": jsonable(self.stats),
        }
