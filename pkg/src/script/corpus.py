"""
Regression corpus.

`corpus/manifest.yaml` lists each script with its expected exit code and
the verdicts of its commands, in order. Running the corpus checks both and
optionally re-runs every script to compare the timing-free JSON output.
"""

from pathlib import Path
from typing import List, Optional

import structlog
import yaml
from pydantic import BaseModel, Field

from ..config import get_config
from ..errors import UsageError
from ..models import Report, RunOptions
from .interpreter import get_interpreter

logger = structlog.get_logger()

MANIFEST = "manifest.yaml"


class CorpusEntry(BaseModel):
    """One manifest entry."""
    script: str
    description: str = ""
    exit_code: int = 0
    verdicts: List[Optional[str]] = Field(default_factory=list)


class CorpusOutcome(BaseModel):
    """Result of checking one script."""
    script: str
    passed: bool
    exit_code: int
    verdicts: List[Optional[str]] = Field(default_factory=list)
    mismatches: List[str] = Field(default_factory=list)


def load_manifest(corpus_dir: Path) -> List[CorpusEntry]:
    path = corpus_dir / MANIFEST
    if not path.exists():
        raise UsageError(f"no corpus manifest at {path}")
    with open(path, encoding="utf-8") as fh:
        raw = yaml.safe_load(fh) or {}
    return [CorpusEntry(**item) for item in raw.get("scripts", [])]


def run_script_file(path: Path, options: Optional[RunOptions] = None) -> Report:
    source = path.read_text(encoding="utf-8")
    return get_interpreter().run_source(source, options, name=path.name)


def check_entry(corpus_dir: Path, entry: CorpusEntry, options: RunOptions, check_determinism: bool) -> CorpusOutcome:
    report = run_script_file(corpus_dir / entry.script, options)
    mismatches: List[str] = []
    if report.exit_code != entry.exit_code:
        mismatches.append(f"exit code {report.exit_code}, expected {entry.exit_code}")
    verdicts = report.verdicts()
    if entry.verdicts and verdicts != entry.verdicts:
        mismatches.append(f"verdicts {verdicts}, expected {entry.verdicts}")
    if check_determinism:
        again = run_script_file(corpus_dir / entry.script, options)
        if again.to_json(include_timing=False) != report.to_json(include_timing=False):
            mismatches.append("second run produced different JSON")
    return CorpusOutcome(
        script=entry.script,
        passed=not mismatches,
        exit_code=report.exit_code,
        verdicts=verdicts,
        mismatches=mismatches,
    )


def run_corpus(
    corpus_dir: Optional[Path] = None,
    options: Optional[RunOptions] = None,
    check_determinism: bool = True,
) -> List[CorpusOutcome]:
    """Run every manifest script and compare with its expectations."""
    corpus_dir = Path(corpus_dir or get_config().corpus_dir)
    options = options or RunOptions()
    outcomes = []
    for entry in load_manifest(corpus_dir):
        outcome = check_entry(corpus_dir, entry, options, check_determinism)
        logger.info("Corpus script checked", script=entry.script, passed=outcome.passed)
        outcomes.append(outcome)
    logger.info(
        "Corpus completed",
        scripts=len(outcomes),
        failed=sum(1 for o in outcomes if not o.passed),
    )
    return outcomes
