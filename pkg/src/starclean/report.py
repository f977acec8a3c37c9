"""Report assembly and serialization (JSON, fixed-width text, CSV).

JSON output is canonical: keys sorted, two-space indent, no trailing spaces.
Suite and matrix reports contain no timing fields, so identical inputs
produce byte-identical bytes regardless of parallelism.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field

import numpy as np

from .involutions import StarRing
from .properties import PROPERTIES, Verdict, ring_property
from .suites import SuiteResult


def jsonable(obj):
    """Recursively convert numpy scalars and containers to plain Python."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def json_dumps(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2)


@dataclass
class PropertyReport:
    label: str
    size: int
    verdicts: dict[str, Verdict]
    timings_ms: dict[str, float] = field(default_factory=dict)

    def to_dict(self, include_timings: bool = False) -> dict:
        payload = {
            "label": self.label,
            "size": self.size,
            "properties": {name: v.to_dict() for name, v in self.verdicts.items()},
        }
        if include_timings:
            payload["timings_ms"] = {k: round(v, 3) for k, v in self.timings_ms.items()}
        return payload


def evaluate_properties(S: StarRing, props: tuple[str, ...] = PROPERTIES) -> PropertyReport:
    verdicts: dict[str, Verdict] = {}
    timings: dict[str, float] = {}
    for prop in props:
        start = time.perf_counter()
        verdicts[prop] = ring_property(S, prop)
        timings[prop] = (time.perf_counter() - start) * 1000.0
    return PropertyReport(S.label, S.ring.size, verdicts, timings)


def corpus_matrix(
    corpus: list[StarRing], props: tuple[str, ...] = PROPERTIES, jobs: int = 1
):
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda S: evaluate_properties(S, props), corpus))
    return [evaluate_properties(S, props) for S in corpus]


def matrix_to_csv(reports: list[PropertyReport], props: tuple[str, ...] = PROPERTIES) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["label", "size", *props])
    for report in reports:
        writer.writerow(
            [report.label, report.size]
            + [str(report.verdicts[p].value) for p in props]
        )
    return out.getvalue()


def matrix_to_text(reports: list[PropertyReport], props: tuple[str, ...] = PROPERTIES) -> str:
    label_w = max(5, max((len(r.label) for r in reports), default=5))
    lines = [f"{'ring':<{label_w}}  " + "  ".join(f"{p:>24}" for p in props)]
    for report in reports:
        cells = "  ".join(f"{str(report.verdicts[p].value):>24}" for p in props)
        lines.append(f"{report.label:<{label_w}}  {cells}")
    return "\n".join(lines) + "\n"


def suites_to_text(results: list[SuiteResult]) -> str:
    rows = []
    for result in results:
        for row in result.rows:
            rows.append((result.tag, row.label, "PASS" if row.ok else "VIOLATION", row.note))
    tag_w = max(len(r[0]) for r in rows)
    label_w = max(len(r[1]) for r in rows)
    lines = [
        f"{tag:<{tag_w}}  {label:<{label_w}}  {status:<9}  {note}".rstrip()
        for tag, label, status, note in rows
    ]
    overall = all(result.passed for result in results)
    lines.append(f"overall: {'PASS' if overall else 'VIOLATION'}")
    return "\n".join(lines) + "\n"


def suites_to_dict(results: list[SuiteResult], corpus: list[StarRing]) -> dict:
    return {
        "command": "suite",
        "corpus": [S.label for S in corpus],
        "suites": [result.to_dict() for result in results],
        "pass": all(result.passed for result in results),
    }
