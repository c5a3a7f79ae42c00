"""Run reports: one self-describing document per invocation.

The ``payload`` section is a pure function of the parameters; wall time and
version live in ``meta`` so payloads diff cleanly between runs.
"""

import json
import time
from typing import Any, Dict, List

from pydantic_core import to_jsonable_python

from expdiophantine import __version__
from expdiophantine.models import OutputFormat, RunMeta, RunReport


def build_report(command: str, parameters: Dict[str, Any], payload: Any, started: float, exit_code: int) -> RunReport:
    return RunReport(
        command=command,
        parameters=to_jsonable_python(parameters),
        payload=to_jsonable_python(payload),
        meta=RunMeta(
            version=__version__,
            elapsed_seconds=round(time.perf_counter() - started, 6),
            exit_code=exit_code,
        ),
    )


def render(report: RunReport, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return render_json(report)
    return render_plain(report)


def render_json(report: RunReport) -> str:
    return json.dumps(report.model_dump(mode="json"), indent=2, sort_keys=True)


def parse_json(text: str) -> RunReport:
    return RunReport.model_validate(json.loads(text))


def _cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    if value is None:
        return "-"
    return str(value)


def table(rows: List[Dict[str, Any]]) -> List[str]:
    """Aligned columns keyed by the first row."""
    if not rows:
        return ["(none)"]
    columns = list(rows[0])
    cells = [[_cell(row.get(c)) for c in columns] for row in rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells)
    return lines


def _plain_lines(value: Any, indent: str = "") -> List[str]:
    if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        return [indent + line for line in table(value)]
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item and not _is_flat_list(item):
                lines.append(f"{indent}{key}:")
                lines.extend(_plain_lines(item, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {_cell(item)}")
        return lines
    if isinstance(value, list):
        return [indent + _cell(value)] if value else [indent + "(none)"]
    return [indent + _cell(value)]


def _is_flat_list(value: Any) -> bool:
    return isinstance(value, list) and not any(isinstance(v, (dict, list)) for v in value)


def render_plain(report: RunReport) -> str:
    lines = [f"command: {report.command}"]
    lines += [f"  {k} = {_cell(v)}" for k, v in report.parameters.items()]
    lines.append("")
    lines += _plain_lines(report.payload)
    lines.append("")
    lines.append(f"exit {report.meta.exit_code}  ({report.meta.elapsed_seconds:.3f}s, v{report.meta.version})")
    return "\n".join(lines)

