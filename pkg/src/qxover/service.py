"""Request handling shared by the CLI and the HTTP API.

Both surfaces hand their parameters over as the raw strings they
received; everything below parses, validates, and builds payload dicts
in one place. That is what makes `qx ... --format json` and the
corresponding GET /api/... response bytewise identical.
"""
from __future__ import annotations

import math
from functools import cached_property
from pathlib import Path

from .analyzer import (
    AlgorithmPair,
    NonMonotoneQubitRequirementError,
    SizeSemantics,
    analyze,
    effective_quantum_runtime,
)
from .catalog import CatalogEntry, classify_catalog
from .exprs import Expr, ExprError, ExprSyntaxError, parse
from .hardware import (
    DegenerateDataError,
    GrowthModel,
    HardwareScenario,
    InsufficientDataError,
    fit_growth,
    project_qubits,
    scenario_constant,
    year_for_qubits,
)
from .magnitude import LogMagnitude
from .payloads import (
    analyze_payload,
    catalog_payload,
    grid_payload,
    qaps_payload,
    roadmap_payload,
    threshold_payload,
)
from .solver import (
    CANONICAL_RUNTIMES,
    InvalidConstantError,
    RootSearchError,
    canonical_grid,
)
from .store import (
    UnknownProviderError,
    load_catalog,
    load_roadmap,
    load_scenarios,
)

DEFAULT_SCENARIO = "base"
DEFAULT_PROVIDER = "ibm"
DEFAULT_YEARS = "2024-2035"
DEFAULT_SERIES_POINTS = 160

MAX_YEARS = 500
MAX_SERIES_POINTS = 5000


class RequestError(ValueError):
    """Invalid request parameters; rendered as HTTP 400."""

    status = 400

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class UnknownNameError(RequestError):
    """A named resource (catalog id, provider) does not exist: HTTP 404."""

    status = 404


class DataContext:
    """Data files loaded once per CLI invocation or server lifetime."""

    def __init__(self, data_dir: Path | None = None):
        self.data_dir = data_dir
        self._models: dict[str, GrowthModel] = {}

    @cached_property
    def scenarios(self) -> dict[str, HardwareScenario]:
        return load_scenarios(self.data_dir)

    @cached_property
    def catalog(self) -> list[CatalogEntry]:
        return load_catalog(self.data_dir)

    def entry(self, entry_id: str) -> CatalogEntry:
        for entry in self.catalog:
            if entry.id == entry_id:
                return entry
        raise UnknownNameError(f"unknown catalog id: {entry_id}")

    def roadmap(self, provider: str):
        try:
            return load_roadmap(provider, self.data_dir)
        except UnknownProviderError:
            raise UnknownNameError(f"unknown provider: {provider}") from None

    def model(self, provider: str) -> GrowthModel:
        if provider not in self._models:
            points = self.roadmap(provider)
            try:
                self._models[provider] = fit_growth(points)
            except (InsufficientDataError, DegenerateDataError) as exc:
                raise RequestError(f"provider {provider}: {exc}") from exc
        return self._models[provider]


# ---------------------------------------------------------------------------
# Parameter parsing


def _parse_expr(text: str | None, name: str) -> Expr:
    if text is None or text == "":
        raise RequestError(f"missing required parameter: {name}")
    try:
        return parse(text)
    except ExprSyntaxError as exc:
        raise RequestError(f"{name}: {exc}", offset=exc.offset) from exc
    except ExprError as exc:
        raise RequestError(f"{name}: {exc}") from exc


def _parse_float(text: str, name: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise RequestError(f"{name} must be a number, got {text!r}") from None
    if not math.isfinite(value):
        raise RequestError(f"{name} must be finite")
    return value


def _parse_int(text: str, name: str, low: int, high: int) -> int:
    try:
        value = int(text)
    except ValueError:
        raise RequestError(
            f"{name} must be an integer, got {text!r}"
        ) from None
    if not low <= value <= high:
        raise RequestError(f"{name} must be between {low} and {high}")
    return value


def resolve_scenario(
    ctx: DataContext, c: str | None, scenario: str | None
) -> tuple[HardwareScenario, str | None]:
    """One of C or scenario selects the gap constant; default is 'base'.

    A bare C builds an anonymous scenario around it so downstream code
    still sees an error-correction ratio; its name is reported as null.
    """
    if c is not None and scenario is not None:
        raise RequestError("give either C or scenario, not both")
    if c is not None:
        value = _parse_float(c, "C")
        if value < 1.0:
            raise RequestError("C must be at least 1")
        return HardwareScenario("custom", value, 1.0, 1.0), None
    name = scenario or DEFAULT_SCENARIO
    if name not in ctx.scenarios:
        raise RequestError(f"unknown scenario: {name}")
    return ctx.scenarios[name], name


def _parse_years(text: str | None) -> list[float]:
    """Comma list ('2024,2026.5') or inclusive range ('2024-2035')."""
    raw = text or DEFAULT_YEARS
    if "," not in raw and "-" in raw and not raw.startswith("-"):
        start_text, _, end_text = raw.partition("-")
        start = _parse_float(start_text, "years")
        end = _parse_float(end_text, "years")
        if end < start:
            raise RequestError("years range must run forward")
        if end - start > MAX_YEARS:
            raise RequestError(f"years range longer than {MAX_YEARS}")
        years = []
        year = start
        while year <= end + 1e-9:
            years.append(year)
            year += 1.0
        return years
    years = [_parse_float(part, "years") for part in raw.split(",")]
    if len(years) > MAX_YEARS:
        raise RequestError(f"more than {MAX_YEARS} years requested")
    if not years:
        raise RequestError("years must not be empty")
    return years


def _parse_semantics(text: str | None) -> SizeSemantics:
    if text is None:
        return SizeSemantics.ELEMENTS
    try:
        return SizeSemantics(text)
    except ValueError:
        choices = ", ".join(s.value for s in SizeSemantics)
        raise RequestError(
            f"size semantics must be one of: {choices}"
        ) from None


def resolve_pair(
    ctx: DataContext,
    entry_id: str | None,
    classical: str | None,
    quantum: str | None,
    qubits: str | None,
    loading: str | None,
    semantics: str | None,
) -> tuple[AlgorithmPair, str | None]:
    """A catalog entry by id, or an ad-hoc pair from expression strings."""
    if entry_id is not None:
        if any(p is not None for p in (classical, quantum, qubits, loading)):
            raise RequestError("give either id or expressions, not both")
        entry = ctx.entry(entry_id)
        if not entry.has_quantum:
            raise RequestError(f"{entry_id} has no quantum pairing")
        return entry.to_pair(), entry_id
    pair_args = {
        "classical": _parse_expr(classical, "classical"),
        "quantum": _parse_expr(quantum, "quantum"),
        "qubit_requirement": _parse_expr(qubits, "qubits"),
    }
    loading_expr = None
    if loading is not None:
        loading_expr = _parse_expr(loading, "loading")
    try:
        pair = AlgorithmPair(
            id="custom",
            problem_name="Custom pair",
            classical_runtime=pair_args["classical"],
            quantum_runtime=pair_args["quantum"],
            qubit_requirement=pair_args["qubit_requirement"],
            data_loading=loading_expr,
            size_semantics=_parse_semantics(semantics),
        )
    except ValueError as exc:
        raise RequestError(str(exc)) from exc
    return pair, None


# ---------------------------------------------------------------------------
# Builders, one per command and endpoint


def build_threshold(
    ctx: DataContext,
    classical: str | None,
    quantum: str | None,
    c: str | None = None,
    scenario: str | None = None,
    points: str | None = None,
) -> dict:
    classical_expr = _parse_expr(classical, "classical")
    quantum_expr = _parse_expr(quantum, "quantum")
    scenario_obj, name = resolve_scenario(ctx, c, scenario)
    series_points = None
    if points is not None:
        series_points = _parse_int(points, "points", 2, MAX_SERIES_POINTS)
    try:
        return threshold_payload(
            classical_expr,
            quantum_expr,
            scenario_constant(scenario_obj),
            scenario_name=name,
            series_points=series_points,
        )
    except (InvalidConstantError, RootSearchError) as exc:
        raise RequestError(str(exc)) from exc


def build_crossover(
    ctx: DataContext,
    entry_id: str | None = None,
    classical: str | None = None,
    quantum: str | None = None,
    c: str | None = None,
    scenario: str | None = None,
    points: str | None = None,
) -> dict:
    """Threshold payload with curve series, by catalog id or expressions.

    An id resolves to the entry's classical runtime against its
    loading-adjusted quantum runtime, matching what analyze would solve.
    """
    if entry_id is not None:
        if classical is not None or quantum is not None:
            raise RequestError("give either id or expressions, not both")
        entry = ctx.entry(entry_id)
        if not entry.has_quantum:
            raise RequestError(f"{entry_id} has no quantum pairing")
        pair = entry.to_pair()
        classical_expr = pair.classical_runtime
        quantum_expr = effective_quantum_runtime(pair)
    else:
        classical_expr = _parse_expr(classical, "classical")
        quantum_expr = _parse_expr(quantum, "quantum")
    scenario_obj, name = resolve_scenario(ctx, c, scenario)
    series_points = DEFAULT_SERIES_POINTS
    if points is not None:
        series_points = _parse_int(points, "points", 2, MAX_SERIES_POINTS)
    try:
        payload = threshold_payload(
            classical_expr,
            quantum_expr,
            scenario_constant(scenario_obj),
            scenario_name=name,
            series_points=series_points,
        )
    except (InvalidConstantError, RootSearchError) as exc:
        raise RequestError(str(exc)) from exc
    payload["id"] = entry_id
    return payload


def build_grid(
    ctx: DataContext, c: str | None = None, scenario: str | None = None
) -> dict:
    scenario_obj, name = resolve_scenario(ctx, c, scenario)
    constant = scenario_constant(scenario_obj)
    try:
        cells = canonical_grid(constant)
    except (InvalidConstantError, RootSearchError) as exc:
        raise RequestError(str(exc)) from exc
    return grid_payload(
        list(CANONICAL_RUNTIMES), cells, constant, scenario_name=name
    )


def _run_analysis(
    ctx: DataContext,
    pair: AlgorithmPair,
    scenario_obj: HardwareScenario,
    provider: str,
    years: list[float],
):
    model = ctx.model(provider)
    try:
        report = analyze(pair, scenario_obj, model, years)
    except NonMonotoneQubitRequirementError as exc:
        raise RequestError(str(exc)) from exc
    except (InvalidConstantError, RootSearchError, ValueError) as exc:
        raise RequestError(str(exc)) from exc
    return report, model


def build_analyze(
    ctx: DataContext,
    entry_id: str | None = None,
    classical: str | None = None,
    quantum: str | None = None,
    qubits: str | None = None,
    loading: str | None = None,
    semantics: str | None = None,
    c: str | None = None,
    scenario: str | None = None,
    provider: str | None = None,
    years: str | None = None,
) -> dict:
    pair, payload_id = resolve_pair(
        ctx, entry_id, classical, quantum, qubits, loading, semantics
    )
    scenario_obj, name = resolve_scenario(ctx, c, scenario)
    year_list = _parse_years(years)
    report, model = _run_analysis(
        ctx, pair, scenario_obj, provider or DEFAULT_PROVIDER, year_list
    )
    return analyze_payload(
        pair, report, scenario_obj, model, payload_id, scenario_name=name
    )


def build_qaps(
    ctx: DataContext,
    entry_id: str | None = None,
    classical: str | None = None,
    quantum: str | None = None,
    qubits: str | None = None,
    loading: str | None = None,
    semantics: str | None = None,
    c: str | None = None,
    scenario: str | None = None,
    provider: str | None = None,
    years: str | None = None,
) -> dict:
    pair, payload_id = resolve_pair(
        ctx, entry_id, classical, quantum, qubits, loading, semantics
    )
    scenario_obj, name = resolve_scenario(ctx, c, scenario)
    year_list = _parse_years(years)
    report, model = _run_analysis(
        ctx, pair, scenario_obj, provider or DEFAULT_PROVIDER, year_list
    )
    return qaps_payload(
        pair, report, scenario_obj, model, payload_id, scenario_name=name
    )


def build_roadmap(
    ctx: DataContext,
    provider: str | None = None,
    year: str | None = None,
    qubits: str | None = None,
) -> dict:
    name = provider or DEFAULT_PROVIDER
    points = ctx.roadmap(name)
    model = ctx.model(name)
    year_value = projected = None
    if year is not None:
        year_value = _parse_float(year, "year")
        projected = project_qubits(model, year_value).log10
    qubits_value = reached = None
    if qubits is not None:
        qubits_value = _parse_float(qubits, "qubits")
        if qubits_value < 1:
            raise RequestError("qubits must be at least 1")
        reached = year_for_qubits(
            model, LogMagnitude.from_value(qubits_value)
        )
    return roadmap_payload(
        name,
        points,
        model,
        year=year_value,
        qubits=qubits_value,
        projected_log10=projected,
        year_for=reached,
    )


def build_catalog(
    ctx: DataContext,
    c: str | None = None,
    scenario: str | None = None,
    fallback: str | None = None,
    classify: bool = False,
) -> dict:
    entries = ctx.catalog
    if not (classify or c is not None or scenario is not None):
        return catalog_payload(entries)
    scenario_obj, name = resolve_scenario(ctx, c, scenario)
    fallback_expr = None
    if fallback is not None:
        fallback_expr = _parse_expr(fallback, "fallback")
    try:
        classified = classify_catalog(entries, scenario_obj, fallback_expr)
    except (InvalidConstantError, RootSearchError) as exc:
        raise RequestError(str(exc)) from exc
    return catalog_payload(
        entries,
        classified,
        scenario_name=name,
        c_log10=scenario_constant(scenario_obj).log10,
    )
