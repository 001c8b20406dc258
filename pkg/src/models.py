"""
Report models for foliation-kit.

Every script run produces a Report; each command statement contributes a
CommandReport carrying its verdict, the certificates that back it and the
bounds it ran under.
"""

from datetime import datetime, timezone
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

REPORT_VERSION = "1.0"


class OutputFormat(str, Enum):
    """Report output format."""
    TEXT = "text"
    JSON = "json"


class StatementStatus(str, Enum):
    """Outcome of one statement."""
    COMPLETED = "completed"
    FAILED = "failed"


class RunOptions(BaseModel):
    """Effective analysis options of a run (configuration plus CLI overrides)."""
    truncation_order: int = 8
    resonance_bound: int = 50
    sample_count: int = 20
    seed: int = 0
    exceptional_cap: int = 2
    parameter_range: int = 9
    surface_degree_cap: int = 2
    output: OutputFormat = OutputFormat.TEXT


class ErrorInfo(BaseModel):
    """Error recorded for a failed statement."""
    kind: str
    message: str
    exit_code: int
    identity: Optional[str] = None  # failing identity of a certificate check
    line: Optional[int] = None
    column: Optional[int] = None


class Certificate(BaseModel):
    """An object backing a verdict, pretty-printed, with the identity it satisfies."""
    name: str
    value: str
    identity: Optional[str] = None


class Timing(BaseModel):
    """Wall-clock data; excluded from reproducibility comparisons."""
    started_at: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))
    elapsed_ms: float = 0.0


class CommandReport(BaseModel):
    """Result of one script statement."""
    index: int
    line: int
    command: str  # statement echo, normalized
    status: StatementStatus = StatementStatus.COMPLETED
    verdict: Optional[str] = None
    summary: str = ""
    certificates: List[Certificate] = Field(default_factory=list)
    data: Dict[str, Any] = Field(default_factory=dict)
    bound: Optional[int] = None
    order: Optional[int] = None
    error: Optional[ErrorInfo] = None
    timing: Optional[Timing] = None


class Report(BaseModel):
    """Full report of a script run."""
    version: str = REPORT_VERSION
    tool: str = "foliation-kit"
    script: str
    field: str = "Q"
    nvars: int = 3
    options: RunOptions = Field(default_factory=RunOptions)
    results: List[CommandReport] = Field(default_factory=list)
    exit_code: int = 0
    timing: Optional[Timing] = None

    def verdicts(self) -> List[Optional[str]]:
        return [r.verdict for r in self.results]

    def to_json(self, include_timing: bool = True) -> str:
        """JSON dump; without timing the output is reproducible byte for byte."""
        if include_timing:
            return self.model_dump_json(indent=2)
        exclude: Dict[str, Any] = {"timing": True, "results": {"__all__": {"timing"}}}
        return self.model_dump_json(indent=2, exclude=exclude)
