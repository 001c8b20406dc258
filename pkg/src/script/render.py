"""
Text rendering of reports with rich.
"""

import io
from typing import Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from ..models import CommandReport, Report, StatementStatus

_VERDICT_STYLE = {
    "true": "green",
    "false": "red",
    "none-within-bound": "yellow",
}


def _options_line(report: Report) -> str:
    o = report.options
    return (
        f"field {report.field}, {report.nvars} variables | order {o.truncation_order}, "
        f"bound {o.resonance_bound}, samples {o.sample_count}, seed {o.seed}"
    )


def _entry(result: CommandReport) -> Panel:
    body = Text()
    if result.status == StatementStatus.FAILED and result.error is not None:
        body.append(f"{result.error.kind} (exit {result.error.exit_code}): ", style="bold red")
        body.append(result.error.message)
        if result.error.identity:
            body.append(f"\nfailing identity: {result.error.identity}", style="red")
    else:
        style = _VERDICT_STYLE.get(result.verdict or "", "bold cyan")
        body.append("verdict: ", style="bold")
        body.append(result.verdict or "-", style=style)
        qualifiers = []
        if result.bound is not None:
            qualifiers.append(f"bound {result.bound}")
        if result.order is not None:
            qualifiers.append(f"order {result.order}")
        if qualifiers:
            body.append(f"  ({', '.join(qualifiers)})", style="dim")
        if result.summary:
            body.append(f"\n{result.summary}")
        for cert in result.certificates:
            body.append(f"\n  {cert.name}: ", style="dim")
            body.append(cert.value)
            if cert.identity:
                body.append(f"   [{cert.identity}]", style="dim")
    title = f"[{result.index}] line {result.line}: {result.command}" if result.command else f"line {result.line}"
    return Panel(body, title=title, title_align="left")


def render_report(report: Report, console: Optional[Console] = None) -> None:
    """Print a report: one panel per statement, then a verdict table."""
    console = console or Console()
    console.print(Text(f"{report.tool} {report.version}: {report.script}", style="bold"))
    console.print(Text(_options_line(report), style="dim"))
    for result in report.results:
        console.print(_entry(result))

    table = Table(title="Verdicts")
    table.add_column("#", justify="right")
    table.add_column("Line", justify="right")
    table.add_column("Command")
    table.add_column("Verdict")
    for result in report.results:
        verdict = result.verdict if result.status == StatementStatus.COMPLETED else f"error: {result.error.kind}"
        table.add_row(str(result.index), str(result.line), result.command.split(" ", 1)[0], verdict or "-")
    console.print(table)
    console.print(Text(f"exit code {report.exit_code}", style="bold red" if report.exit_code else "bold green"))


def render_to_text(report: Report, width: int = 120) -> str:
    """Render into a string, without colour."""
    console = Console(record=True, width=width, color_system=None, file=io.StringIO())
    render_report(report, console)
    return console.export_text()
