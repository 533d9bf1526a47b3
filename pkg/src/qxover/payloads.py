"""Payload builders and renderers shared by the CLI and the HTTP API.

Every command and endpoint funnels through the same dict builders and the
same canonical JSON encoder, so identical parameters produce bytewise
identical JSON on both surfaces. Markdown, CSV, and SVG renderers wrap
the same dicts for human and plotting output.
"""
from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass

from .analyzer import (
    AdvantageReport,
    AlgorithmPair,
    QapsInterval,
    convert_size_semantics,
)
from .catalog import CatalogEntry, entry_to_dict
from .exprs import DomainError, Expr, eval_log10_float, render
from .hardware import (
    GrowthModel,
    HardwareScenario,
    RoadmapPoint,
    scenario_constant,
)
from .magnitude import EXACT_INT_LIMIT, LogMagnitude
from .solver import (
    DOMAIN_FLOOR,
    CellClass,
    GridCell,
    ProblemSize,
    Threshold,
    classify,
    solve_threshold,
)

CROSSOVER_POINTS = 160


def canonical_json(payload: dict) -> str:
    """The one JSON encoding both surfaces emit: sorted keys, no spaces."""
    return json.dumps(
        payload,
        sort_keys=True,
        separators=(",", ":"),
        ensure_ascii=False,
        allow_nan=False,
    ) + "\n"


def _size_fields(size: ProblemSize | None) -> dict:
    if size is None:
        return {"exact": None, "log10": None}
    return {"exact": size.exact, "log10": size.log10}


def _threshold_core(threshold: Threshold) -> dict:
    core = {
        "threshold": threshold.display(),
        "log10_root": threshold.log10_root,
        "cell_class": classify(threshold).value,
    }
    core.update(_size_fields(threshold.size))
    return core


# ---------------------------------------------------------------------------
# threshold


def threshold_payload(
    classical: Expr,
    quantum: Expr,
    c: LogMagnitude,
    scenario_name: str | None = None,
    series_points: int | None = None,
) -> dict:
    threshold = solve_threshold(classical, quantum, c)
    payload = {
        "classical": render(classical),
        "quantum": render(quantum),
        "c_log10": c.log10,
        "scenario": scenario_name,
    }
    payload.update(_threshold_core(threshold))
    if series_points is not None:
        payload["series"] = crossover_series(
            classical, quantum, c, threshold, series_points
        )
    return payload


def crossover_series(
    classical: Expr,
    quantum: Expr,
    c: LogMagnitude,
    threshold: Threshold,
    points: int,
) -> dict:
    """Sampled log-log curves: classical vs C-scaled quantum runtime."""
    if points < 2:
        raise ValueError("a series needs at least two points")
    if threshold.log10_root is not None:
        span_end = max(threshold.log10_root * 1.25, threshold.log10_root + 1.0)
    else:
        span_end = 10.0
    xs = [
        DOMAIN_FLOOR + (span_end - DOMAIN_FLOOR) * i / (points - 1)
        for i in range(points)
    ]
    return {
        "log10_n": xs,
        "classical_log10": _sample(classical, xs),
        "quantum_scaled_log10": _sample(quantum, xs, shift=c.log10),
    }


def _sample(expr: Expr, xs: list[float], shift: float = 0.0) -> list:
    """Pointwise log10 values; null where the expression is undefined."""
    values = []
    for x in xs:
        try:
            values.append(eval_log10_float(expr, x) + shift)
        except DomainError:
            values.append(None)
    return values


def threshold_markdown(payload: dict) -> str:
    lines = [
        "| n* | log10(n*) | log10 root | class |",
        "| --- | --- | --- | --- |",
        "| {} | {} | {} | {} |".format(
            payload["threshold"],
            _cell_number(payload["log10"]),
            _cell_number(payload["log10_root"]),
            payload["cell_class"],
        ),
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# grid


def grid_payload(
    runtimes: list[tuple[str, Expr]],
    cells: list[list[GridCell]],
    c: LogMagnitude,
    scenario_name: str | None = None,
) -> dict:
    return {
        "c_log10": c.log10,
        "scenario": scenario_name,
        "runtimes": [text for text, _ in runtimes],
        "cells": [
            [_threshold_core(cell.threshold) for cell in row] for row in cells
        ],
    }


def grid_markdown(payload: dict) -> str:
    names = payload["runtimes"]
    header = "| classical \\ quantum | " + " | ".join(names) + " |"
    rule = "| --- " * (len(names) + 1) + "|"
    lines = [header, rule]
    for name, row in zip(names, payload["cells"]):
        cells = " | ".join(cell["threshold"] for cell in row)
        lines.append(f"| {name} | {cells} |")
    return "\n".join(lines) + "\n"


def grid_csv(payload: dict) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    names = payload["runtimes"]
    writer.writerow(["classical", "quantum", "threshold", "log10_root",
                     "cell_class"])
    for name, row in zip(names, payload["cells"]):
        for quantum_name, cell in zip(names, row):
            writer.writerow([
                name,
                quantum_name,
                cell["threshold"],
                _cell_number(cell["log10_root"]),
                cell["cell_class"],
            ])
    return out.getvalue()


# ---------------------------------------------------------------------------
# analyze and qaps


def _interval_fields(interval: QapsInterval | None) -> dict:
    if interval is None:
        return {"empty": True, "lower": None, "upper": None}
    upper = None
    if interval.upper is not None:
        upper = {"display": interval.upper.display(),
                 **_size_fields(interval.upper)}
    return {
        "empty": False,
        "lower": {"display": interval.lower.display(),
                  **_size_fields(interval.lower)},
        "upper": upper,
    }


def _model_fields(model: GrowthModel) -> dict:
    return {
        "provider": model.provider,
        "reference_year": model.reference_year,
        "slope": model.slope,
        "intercept": model.intercept,
        "r_squared": model.r_squared,
    }


def analyze_payload(
    pair: AlgorithmPair,
    report: AdvantageReport,
    scenario: HardwareScenario,
    model: GrowthModel,
    entry_id: str | None = None,
    scenario_name: str | None = None,
) -> dict:
    payload = {
        "id": entry_id,
        "problem_name": pair.problem_name,
        "classical": render(pair.classical_runtime),
        "quantum": render(pair.quantum_runtime),
        "qubit_requirement": render(pair.qubit_requirement),
        "data_loading": None if pair.data_loading is None
        else render(pair.data_loading),
        "size_semantics": pair.size_semantics.value,
        "scenario": scenario_name,
        "c_log10": scenario_constant(scenario).log10,
        "ec_qubit_ratio": scenario.ec_qubit_ratio,
        "provider": model.provider,
        "model": _model_fields(model),
        "loading_bound_applied": report.loading_bound_applied,
        "logical_qubits": None,
        "logical_qubits_log10": None,
        "logical_qubits_whole": None,
        "physical_qubits_log10": None,
        "first_advantage_year": report.first_advantage_year,
        "first_advantage_range": None,
        "converted_threshold": None,
        "qaps": [
            {"year": year, **_interval_fields(interval)}
            for year, interval in report.qaps_by_year
        ],
    }
    payload.update(_threshold_core(report.threshold))
    if report.logical_qubits_at_threshold is not None:
        logical = report.logical_qubits_at_threshold
        payload["logical_qubits_log10"] = logical.log10
        if logical.log10 < EXACT_INT_LIMIT:
            payload["logical_qubits"] = logical.value
            payload["logical_qubits_whole"] = logical.to_int()
        payload["physical_qubits_log10"] = (
            report.physical_qubits_at_threshold.log10
        )
    if report.first_advantage_year is not None:
        year = report.first_advantage_year
        payload["first_advantage_range"] = [math.floor(year), math.ceil(year)]
    if report.threshold.is_finite:
        payload["converted_threshold"] = _converted_fields(
            report.threshold.size, pair
        )
    return payload


def _converted_fields(size: ProblemSize, pair: AlgorithmPair) -> dict | None:
    try:
        converted = convert_size_semantics(size, pair.size_semantics)
    except ValueError:
        return None
    return {
        "semantics": pair.size_semantics.value,
        "display": converted.display(),
        **_size_fields(converted),
    }


def analyze_markdown(payload: dict) -> str:
    lines = [
        f"# {payload['problem_name']}",
        "",
        f"- classical: `{payload['classical']}`",
        f"- quantum: `{payload['quantum']}`"
        + (" (data loading bound applied)"
           if payload["loading_bound_applied"] else ""),
        f"- overhead constant: 10^{_cell_number(payload['c_log10'])}",
        f"- threshold n*: **{payload['threshold']}**",
    ]
    if payload["log10_root"] is not None:
        lines.append(
            f"- log10 root: {_cell_number(payload['log10_root'])}"
        )
    if payload["logical_qubits_log10"] is not None:
        lines.append(
            "- logical qubits at n*: {}".format(
                payload["logical_qubits_whole"]
                if payload["logical_qubits_whole"] is not None
                else _magnitude_text(payload["logical_qubits_log10"])
            )
        )
        lines.append(
            f"- physical qubits at n*: {_magnitude_text(payload['physical_qubits_log10'])}"
        )
    if payload["first_advantage_year"] is not None:
        low, high = payload["first_advantage_range"]
        span = str(low) if low == high else f"{low}-{high}"
        lines.append(
            "- first advantage year: {:.1f} ({})".format(
                payload["first_advantage_year"], span
            )
        )
    else:
        lines.append("- no quantum advantage under this scenario")
    lines.append("")
    lines.append("| year | advantaged sizes |")
    lines.append("| --- | --- |")
    for row in payload["qaps"]:
        lines.append(
            f"| {_cell_number(row['year'])} | {_interval_text(row)} |"
        )
    return "\n".join(lines) + "\n"


def _magnitude_text(log10: float) -> str:
    """Plain integer while it fits, 10^x beyond."""
    if log10 < 15.0:
        return str(round(10.0 ** log10))
    return f"10^{_cell_number(log10)}"


def _interval_text(row: dict) -> str:
    if row["empty"]:
        return "none"
    upper = "unbounded" if row["upper"] is None else row["upper"]["display"]
    return f"{row['lower']['display']} to {upper}"


def qaps_payload(
    pair: AlgorithmPair,
    report: AdvantageReport,
    scenario: HardwareScenario,
    model: GrowthModel,
    entry_id: str | None = None,
    scenario_name: str | None = None,
) -> dict:
    return {
        "id": entry_id,
        "classical": render(pair.classical_runtime),
        "quantum": render(pair.quantum_runtime),
        "qubit_requirement": render(pair.qubit_requirement),
        "scenario": scenario_name,
        "c_log10": scenario_constant(scenario).log10,
        "ec_qubit_ratio": scenario.ec_qubit_ratio,
        "provider": model.provider,
        "model": _model_fields(model),
        "threshold": report.threshold.display(),
        "log10_root": report.threshold.log10_root,
        "first_advantage_year": report.first_advantage_year,
        "intervals": [
            {"year": year, **_interval_fields(interval)}
            for year, interval in report.qaps_by_year
        ],
    }


def qaps_csv(payload: dict) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["year", "empty", "lower_log10", "upper_log10"])
    for row in payload["intervals"]:
        writer.writerow([
            _cell_number(row["year"]),
            str(row["empty"]).lower(),
            "" if row["empty"] else _cell_number(row["lower"]["log10"]),
            "" if row["empty"] or row["upper"] is None
            else _cell_number(row["upper"]["log10"]),
        ])
    return out.getvalue()


def qaps_markdown(payload: dict) -> str:
    lines = [
        "| year | advantaged sizes |",
        "| --- | --- |",
    ]
    for row in payload["intervals"]:
        lines.append(
            f"| {_cell_number(row['year'])} | {_interval_text(row)} |"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# roadmap


def roadmap_payload(
    provider: str,
    points: list[RoadmapPoint],
    model: GrowthModel,
    year: float | None = None,
    qubits: float | None = None,
    projected_log10: float | None = None,
    year_for: float | None = None,
) -> dict:
    payload = {
        "provider": provider,
        "points": [
            {
                "year": int(p.year) if p.year.is_integer() else p.year,
                "physical_qubits": p.physical_qubits,
                "status": p.status.value,
            }
            for p in points
        ],
        "model": _model_fields(model),
        "projection": None,
        "year_for": None,
    }
    if year is not None:
        payload["projection"] = {
            "year": year,
            "physical_qubits_log10": projected_log10,
        }
    if qubits is not None:
        payload["year_for"] = {"physical_qubits": qubits, "year": year_for}
    return payload


def roadmap_markdown(payload: dict) -> str:
    model = payload["model"]
    lines = [
        "| year | physical qubits | status |",
        "| --- | --- | --- |",
    ]
    for point in payload["points"]:
        lines.append(
            "| {} | {} | {} |".format(
                point["year"], point["physical_qubits"], point["status"]
            )
        )
    lines.append("")
    r2 = model["r_squared"]
    lines.append(
        "Fit: log10(qubits) = {:.4f} + {:.4f} (year - {:g}), r^2 = {}".format(
            model["intercept"],
            model["slope"],
            model["reference_year"],
            "n/a" if r2 is None else f"{r2:.4f}",
        )
    )
    if payload["projection"] is not None:
        lines.append(
            "Projected 10^{:.3f} physical qubits in {:g}.".format(
                payload["projection"]["physical_qubits_log10"],
                payload["projection"]["year"],
            )
        )
    if payload["year_for"] is not None:
        lines.append(
            "{:g} physical qubits reached in {:.1f}.".format(
                payload["year_for"]["physical_qubits"],
                payload["year_for"]["year"],
            )
        )
    return "\n".join(lines) + "\n"


def roadmap_csv(payload: dict) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["year", "physical_qubits", "status", "fit_log10"])
    model = payload["model"]
    for point in payload["points"]:
        fit = model["intercept"] + model["slope"] * (
            point["year"] - model["reference_year"]
        )
        writer.writerow([
            point["year"],
            point["physical_qubits"],
            point["status"],
            _cell_number(fit),
        ])
    return out.getvalue()


# ---------------------------------------------------------------------------
# catalog


def catalog_payload(
    entries: list[CatalogEntry],
    classified: list[tuple[CatalogEntry, CellClass, Threshold]] | None = None,
    scenario_name: str | None = None,
    c_log10: float | None = None,
) -> dict:
    payload = {
        "entries": [entry_to_dict(entry) for entry in entries],
        "classification": None,
        "scenario": scenario_name,
        "c_log10": c_log10,
    }
    if classified is not None:
        payload["classification"] = [
            {"id": entry.id, **_threshold_core(threshold)}
            for entry, _, threshold in classified
        ]
    return payload


def catalog_markdown(payload: dict) -> str:
    if payload["classification"] is not None:
        by_id = {row["id"]: row for row in payload["classification"]}
        lines = [
            "| id | problem | classical | n* | class |",
            "| --- | --- | --- | --- | --- |",
        ]
        for entry in payload["entries"]:
            row = by_id.get(entry["id"])
            if row is None:
                continue
            lines.append(
                "| {} | {} | `{}` | {} | {} |".format(
                    entry["id"],
                    entry["problem_name"],
                    entry["runtime_class_label"],
                    row["threshold"],
                    row["cell_class"],
                )
            )
        return "\n".join(lines) + "\n"
    lines = [
        "| id | problem | classical | quantum |",
        "| --- | --- | --- | --- |",
    ]
    for entry in payload["entries"]:
        lines.append(
            "| {} | {} | `{}` | {} |".format(
                entry["id"],
                entry["problem_name"],
                entry["runtime_class_label"],
                f"`{entry['quantum_runtime']}`"
                if "quantum_runtime" in entry else "",
            )
        )
    return "\n".join(lines) + "\n"


def catalog_csv(payload: dict) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if payload["classification"] is not None:
        by_id = {row["id"]: row for row in payload["classification"]}
        writer.writerow(["id", "problem_name", "classical_runtime",
                         "threshold", "log10_root", "cell_class"])
        for entry in payload["entries"]:
            row = by_id.get(entry["id"])
            if row is None:
                continue
            writer.writerow([
                entry["id"],
                entry["problem_name"],
                entry["classical_runtime"],
                row["threshold"],
                _cell_number(row["log10_root"]),
                row["cell_class"],
            ])
        return out.getvalue()
    writer.writerow(["id", "problem_name", "classical_runtime",
                     "quantum_runtime", "runtime_class_label", "tags"])
    for entry in payload["entries"]:
        writer.writerow([
            entry["id"],
            entry["problem_name"],
            entry["classical_runtime"],
            entry.get("quantum_runtime", ""),
            entry["runtime_class_label"],
            " ".join(entry["tags"]),
        ])
    return out.getvalue()


# ---------------------------------------------------------------------------
# plot series


def crossover_csv(payload: dict) -> str:
    series = payload["series"]
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["log10_n", "classical_log10", "quantum_scaled_log10"])
    rows = zip(
        series["log10_n"],
        series["classical_log10"],
        series["quantum_scaled_log10"],
    )
    for x, f, g in rows:
        writer.writerow([_cell_number(x), _cell_number(f), _cell_number(g)])
    return out.getvalue()


def crossover_svg(payload: dict) -> str:
    series = payload["series"]
    xs = series["log10_n"]
    curves = [series["classical_log10"], series["quantum_scaled_log10"]]
    finite = [
        v for curve in curves for v in curve
        if v is not None and math.isfinite(v)
    ]
    frame = _SvgFrame(min(xs), max(xs), min(finite), max(finite))
    parts = [frame.open_tag(), frame.axes()]
    for curve, color in zip(curves, ("#1f77b4", "#d62728")):
        parts.append(frame.polyline(xs, curve, color))
    if payload["log10_root"] is not None:
        parts.append(frame.vertical_marker(payload["log10_root"], "n*"))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def wedge_svg(payload: dict) -> str:
    rows = [row for row in payload["intervals"] if not row["empty"]]
    years = [row["year"] for row in payload["intervals"]]
    if not rows:
        frame = _SvgFrame(min(years), max(years), 0.0, 1.0)
        return "\n".join(
            [frame.open_tag(), frame.axes(), frame.note("no advantaged sizes"),
             "</svg>"]
        ) + "\n"
    uppers = [
        row["upper"]["log10"] for row in rows if row["upper"] is not None
    ]
    lowers = [row["lower"]["log10"] for row in rows]
    top = max(uppers) if uppers else max(lowers) + 1.0
    top = max(top, max(lowers)) * 1.05
    frame = _SvgFrame(min(years), max(years), 0.0, top)
    points = []
    for row in rows:
        upper = top if row["upper"] is None else row["upper"]["log10"]
        points.append((row["year"], min(upper, top)))
    for row in reversed(rows):
        points.append((row["year"], row["lower"]["log10"]))
    path = " ".join(f"{frame.x(x):.1f},{frame.y(y):.1f}" for x, y in points)
    return "\n".join([
        frame.open_tag(),
        frame.axes(),
        f'<polygon points="{path}" fill="#2ca02c" fill-opacity="0.35" '
        'stroke="#2ca02c"/>',
        "</svg>",
    ]) + "\n"


def roadmap_svg(payload: dict) -> str:
    model = payload["model"]
    points = payload["points"]
    years = [p["year"] for p in points]
    logs = [math.log10(p["physical_qubits"]) for p in points]
    frame = _SvgFrame(min(years) - 0.5, max(years) + 0.5,
                      min(logs) - 0.5, max(logs) + 0.5)
    fit_y = [
        model["intercept"] + model["slope"] * (x - model["reference_year"])
        for x in (min(years), max(years))
    ]
    parts = [
        frame.open_tag(),
        frame.axes(),
        frame.polyline([min(years), max(years)], fit_y, "#1f77b4"),
    ]
    for year, log in zip(years, logs):
        parts.append(
            f'<circle cx="{frame.x(year):.1f}" cy="{frame.y(log):.1f}" '
            'r="4" fill="#d62728"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


class _SvgFrame:
    """Maps data space onto a fixed 640x400 chart box."""

    WIDTH = 640
    HEIGHT = 400
    MARGIN = 40

    def __init__(self, x0: float, x1: float, y0: float, y1: float):
        self.x0, self.y0 = x0, y0
        self.xspan = (x1 - x0) or 1.0
        self.yspan = (y1 - y0) or 1.0

    def x(self, value: float) -> float:
        inner = self.WIDTH - 2 * self.MARGIN
        return self.MARGIN + (value - self.x0) / self.xspan * inner

    def y(self, value: float) -> float:
        inner = self.HEIGHT - 2 * self.MARGIN
        return self.HEIGHT - self.MARGIN - (value - self.y0) / self.yspan * inner

    def open_tag(self) -> str:
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.WIDTH}" '
            f'height="{self.HEIGHT}" viewBox="0 0 {self.WIDTH} {self.HEIGHT}">'
        )

    def axes(self) -> str:
        left = self.MARGIN
        bottom = self.HEIGHT - self.MARGIN
        return (
            f'<path d="M {left} {self.MARGIN} L {left} {bottom} '
            f'L {self.WIDTH - self.MARGIN} {bottom}" fill="none" '
            'stroke="#444" stroke-width="1"/>'
        )

    def polyline(self, xs, ys, color: str) -> str:
        pairs = [
            f"{self.x(x):.1f},{self.y(y):.1f}"
            for x, y in zip(xs, ys)
            if y is not None and math.isfinite(y)
        ]
        return (
            f'<polyline points="{" ".join(pairs)}" fill="none" '
            f'stroke="{color}" stroke-width="2"/>'
        )

    def vertical_marker(self, x: float, label: str) -> str:
        px = self.x(x)
        bottom = self.HEIGHT - self.MARGIN
        return (
            f'<line x1="{px:.1f}" y1="{self.MARGIN}" x2="{px:.1f}" '
            f'y2="{bottom}" stroke="#444" stroke-dasharray="4 3"/>'
            f'<text x="{px + 4:.1f}" y="{self.MARGIN + 12}" '
            f'font-size="12">{label}</text>'
        )

    def note(self, text: str) -> str:
        return (
            f'<text x="{self.WIDTH / 2:.0f}" y="{self.HEIGHT / 2:.0f}" '
            f'font-size="14" text-anchor="middle">{text}</text>'
        )


def _cell_number(value: float | None) -> str:
    """Six significant digits, empty for missing values."""
    if value is None:
        return ""
    return f"{value:.6g}"


# ---------------------------------------------------------------------------
# Document assembly


class OutputFormat(enum.Enum):
    MARKDOWN_TABLE = "markdown-table"
    CSV = "csv"
    JSON = "json"
    SVG_PLOT_DATA = "svg-plot-data"


@dataclass(frozen=True)
class OutputDocument:
    """A rendered payload, ready to write to a terminal or a file."""

    format: OutputFormat
    payload: bytes

    @property
    def text(self) -> str:
        return self.payload.decode("utf-8")


_MARKDOWN_RENDERERS = {
    "threshold": threshold_markdown,
    "grid": grid_markdown,
    "analyze": analyze_markdown,
    "qaps": qaps_markdown,
    "roadmap": roadmap_markdown,
    "catalog": catalog_markdown,
}

_CSV_RENDERERS = {
    "grid": grid_csv,
    "qaps": qaps_csv,
    "roadmap": roadmap_csv,
    "catalog": catalog_csv,
    "plot-crossover": crossover_csv,
    "plot-wedge": qaps_csv,
    "plot-roadmap": roadmap_csv,
}

_SVG_RENDERERS = {
    "plot-crossover": crossover_svg,
    "plot-wedge": wedge_svg,
    "plot-roadmap": roadmap_svg,
}


def render_document(
    kind: str, payload: dict, fmt: OutputFormat
) -> OutputDocument:
    """Render a payload dict into the requested format.

    JSON is available for every kind and uses the canonical encoder, so
    CLI JSON output is bytewise identical to the HTTP API's.
    """
    if fmt is OutputFormat.JSON:
        return OutputDocument(fmt, canonical_json(payload).encode("utf-8"))
    table = {
        OutputFormat.MARKDOWN_TABLE: _MARKDOWN_RENDERERS,
        OutputFormat.CSV: _CSV_RENDERERS,
        OutputFormat.SVG_PLOT_DATA: _SVG_RENDERERS,
    }[fmt]
    renderer = table.get(kind)
    if renderer is None:
        raise ValueError(f"{fmt.value} output is not available for {kind}")
    return OutputDocument(fmt, renderer(payload).encode("utf-8"))
