"""
Identity checks and verification reports.

A suite is a list of IdentityCheck items. Each check evaluates one identity and
returns None when it holds, or a witness string (the nonzero residual in element
grammar) when it does not. The runner turns checks into IdentityRecords and
collects them into a Report sorted by identity id.
"""

import json
from dataclasses import asdict, dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional

TOOL_VERSION = "1.0.0"


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class IdentityCheck:
    """
    One checkable identity.

    Attributes:
        identity_id: Stable id, e.g. "presentation.reflection.n1"
        citation: Plain description of the identity being checked
        inputs: Parameters echoed in the report (n, l, site, ...)
        evaluate: Returns None when the identity holds, else a witness string
        skip_reason: When set the check is reported as skipped without running
    """
    identity_id: str
    citation: str
    inputs: Mapping[str, Any]
    evaluate: Callable[[], Optional[str]]
    skip_reason: Optional[str] = None


@dataclass
class IdentityRecord:
    identity_id: str
    citation: str
    inputs: Dict[str, Any]
    status: Status
    witness: Optional[str] = None
    wall_time: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["status"] = self.status.value
        data["wall_time"] = round(self.wall_time, 4)
        return data


@dataclass
class Report:
    suite: str
    records: List[IdentityRecord] = field(default_factory=list)
    config_echo: Dict[str, Any] = field(default_factory=dict)
    tool_version: str = TOOL_VERSION

    def __post_init__(self):
        self.records = sorted(self.records, key=lambda record: record.identity_id)

    @property
    def summary(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in Status}
        for record in self.records:
            counts[record.status.value] += 1
        counts["total"] = len(self.records)
        return counts

    @property
    def passed(self) -> bool:
        """True when no identity failed (skipped entries do not count as failures)."""
        return all(record.status is not Status.FAIL for record in self.records)

    def failures(self) -> List[IdentityRecord]:
        return [record for record in self.records if record.status is Status.FAIL]

    def record(self, identity_id: str) -> IdentityRecord:
        for entry in self.records:
            if entry.identity_id == identity_id:
                return entry
        raise KeyError(identity_id)

    def merged(self, other: "Report", suite: str = None) -> "Report":
        return Report(suite or self.suite, self.records + other.records,
                      {**self.config_echo, **other.config_echo}, self.tool_version)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "tool_version": self.tool_version,
            "config": self.config_echo,
            "summary": self.summary,
            "records": [record.to_dict() for record in self.records],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False, default=str)

    def write(self, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json(), encoding="utf-8")
        return path


# ----------------------------------------------------------------------
# witnesses
# ----------------------------------------------------------------------
def witness_of(residual) -> Optional[str]:
    """
    None when the residual is zero (or True), else its text.

    Understands algebra elements, AlgebraMatrix residuals (reports the first
    nonzero entry), scalars, booleans and mappings/lists of residuals.
    """
    if residual is None or residual is True:
        return None
    if residual is False:
        return "identity does not hold"
    if isinstance(residual, Mapping):
        for name, value in residual.items():
            text = witness_of(value)
            if text is not None:
                return f"{name}: {text}"
        return None
    if isinstance(residual, (list, tuple)):
        for index, value in enumerate(residual):
            text = witness_of(value)
            if text is not None:
                return f"[{index}]: {text}"
        return None
    if hasattr(residual, "is_zero") and hasattr(residual, "entries"):
        for i, j, entry in residual.entries():
            return f"entry ({i + 1},{j + 1}) = {entry}"
        return None
    if not residual:
        return None
    return str(residual)


def equality_witness(left, right) -> Optional[str]:
    """None when left == right, else both sides."""
    if left == right:
        return None
    return f"left = {left} ; right = {right}"
