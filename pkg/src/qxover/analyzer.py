"""Joining thresholds with hardware feasibility.

An algorithm pair crosses into quantum economic advantage at its
threshold size; the machine must also hold enough logical qubits for
that size. The overlap of the two conditions over time is the per-year
interval of advantaged problem sizes, empty until the projected qubit
count catches up with the requirement at the threshold.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .exprs import (
    Const,
    DomainError,
    Expr,
    Ordering,
    asymptotic_compare,
    eval_log10_float,
    parse,
)
from .hardware import (
    GrowthModel,
    HardwareScenario,
    logical_qubits_available,
    scenario_constant,
    year_for_qubits,
)
from .magnitude import EXACT_INT_LIMIT, LogMagnitude, snap_floor, snap_int
from .solver import (
    DOMAIN_FLOOR,
    ProblemSize,
    RootSearchError,
    Threshold,
    solve_threshold,
)

_LOG10_2 = math.log10(2.0)

# Sampling grid for the monotonicity check on qubit requirements.
_MONOTONE_PROBES = (0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0)

_EVAL_TOL = 1e-9


class SizeSemantics(enum.Enum):
    """What one unit of n means for a catalog problem."""

    ELEMENTS = "elements"
    BITS = "bits"
    VARIABLES_LOG2 = "variables_log2"


class NonMonotoneQubitRequirementError(ValueError):
    """Feasibility inversion needs a nondecreasing qubit requirement."""


@dataclass(frozen=True)
class AlgorithmPair:
    """Classical/quantum runtime pair plus the quantum resource needs."""

    id: str
    problem_name: str
    classical_runtime: Expr
    quantum_runtime: Expr
    qubit_requirement: Expr
    data_loading: Expr | None = None
    size_semantics: SizeSemantics = SizeSemantics.ELEMENTS
    citation: str = ""

    def __post_init__(self):
        try:
            at_floor = eval_log10_float(self.qubit_requirement, DOMAIN_FLOOR)
        except DomainError as exc:
            raise ValueError(
                f"{self.id}: qubit requirement undefined at n = 2: {exc}"
            ) from exc
        if at_floor < -_EVAL_TOL:
            raise ValueError(
                f"{self.id}: qubit requirement must be at least 1 for n >= 2"
            )

    @classmethod
    def from_strings(
        cls,
        id: str,
        problem_name: str,
        classical: str,
        quantum: str,
        qubits: str,
        data_loading: str | None = None,
        size_semantics: SizeSemantics = SizeSemantics.ELEMENTS,
        citation: str = "",
    ) -> "AlgorithmPair":
        return cls(
            id=id,
            problem_name=problem_name,
            classical_runtime=parse(classical),
            quantum_runtime=parse(quantum),
            qubit_requirement=parse(qubits),
            data_loading=None if data_loading is None else parse(data_loading),
            size_semantics=size_semantics,
            citation=citation,
        )


@dataclass(frozen=True)
class QapsInterval:
    """Advantaged problem sizes for one year: [lower, upper].

    upper is None when the qubit requirement never outgrows the machine,
    leaving no ceiling below the search horizon.
    """

    lower: ProblemSize
    upper: ProblemSize | None


@dataclass(frozen=True)
class AdvantageReport:
    threshold: Threshold
    loading_bound_applied: bool
    logical_qubits_at_threshold: LogMagnitude | None
    physical_qubits_at_threshold: LogMagnitude | None
    first_advantage_year: float | None
    qaps_by_year: tuple[tuple[float, QapsInterval | None], ...]


def _loading_applies(pair: AlgorithmPair) -> bool:
    if pair.data_loading is None:
        return False
    verdict = asymptotic_compare(pair.quantum_runtime, pair.data_loading)
    return verdict is Ordering.LESS


def effective_quantum_runtime(pair: AlgorithmPair) -> Expr:
    """Quantum runtime with the data-loading floor applied.

    Loading every input element dominates whenever it grows faster than
    the computation itself, erasing the algorithmic speedup.
    """
    return pair.data_loading if _loading_applies(pair) else pair.quantum_runtime


def pair_threshold(
    pair: AlgorithmPair, scenario: HardwareScenario
) -> tuple[Threshold, bool]:
    """Threshold for the pair under the scenario, and the loading flag."""
    applied = _loading_applies(pair)
    effective = pair.data_loading if applied else pair.quantum_runtime
    threshold = solve_threshold(
        pair.classical_runtime, effective, scenario_constant(scenario)
    )
    return threshold, applied


def analyze(
    pair: AlgorithmPair,
    scenario: HardwareScenario,
    model: GrowthModel,
    years: list[float],
) -> AdvantageReport:
    """Full advantage picture: threshold, feasibility, first year, wedge."""
    if not years:
        raise ValueError("years must be nonempty")
    if any(b < a for a, b in zip(years, years[1:])):
        raise ValueError("years must be ascending")

    threshold, loading_applied = pair_threshold(pair, scenario)
    if not threshold.is_finite:
        return AdvantageReport(
            threshold=threshold,
            loading_bound_applied=loading_applied,
            logical_qubits_at_threshold=None,
            physical_qubits_at_threshold=None,
            first_advantage_year=None,
            qaps_by_year=tuple((year, None) for year in years),
        )

    logical = LogMagnitude(
        eval_log10_float(pair.qubit_requirement, threshold.size.log10)
    )
    # Qubits come whole: round the requirement up before scaling to
    # physical, so the feasibility year matches the first year whose
    # machine actually fits the threshold problem.
    if logical.log10 < EXACT_INT_LIMIT:
        physical = LogMagnitude.from_value(
            logical.to_int() * scenario.ec_qubit_ratio
        )
    else:
        physical = logical * LogMagnitude.from_value(scenario.ec_qubit_ratio)
    first_year = year_for_qubits(model, physical)

    intervals = tuple(
        (year, _qaps(pair, threshold, scenario, model, year)) for year in years
    )
    return AdvantageReport(
        threshold=threshold,
        loading_bound_applied=loading_applied,
        logical_qubits_at_threshold=logical,
        physical_qubits_at_threshold=physical,
        first_advantage_year=first_year,
        qaps_by_year=intervals,
    )


def qaps(
    pair: AlgorithmPair,
    scenario: HardwareScenario,
    model: GrowthModel,
    year: float,
) -> QapsInterval | None:
    """Interval of advantaged problem sizes in a year; None when empty."""
    threshold, _ = pair_threshold(pair, scenario)
    if not threshold.is_finite:
        raise ValueError("QAPS needs a finite threshold")
    return _qaps(pair, threshold, scenario, model, year)


def _qaps(
    pair: AlgorithmPair,
    threshold: Threshold,
    scenario: HardwareScenario,
    model: GrowthModel,
    year: float,
) -> QapsInterval | None:
    _require_monotone(pair.qubit_requirement)
    available = logical_qubits_available(model, year, scenario.ec_qubit_ratio)
    if available.log10 < EXACT_INT_LIMIT:
        whole = snap_floor(available.value)
        if whole < 1:
            return None
        available_log10 = math.log10(whole)
    else:
        available_log10 = available.log10

    lower = threshold.size
    required = eval_log10_float(pair.qubit_requirement, lower.log10)
    if required > available_log10 + _EVAL_TOL:
        return None
    return QapsInterval(lower, _feasible_upper(pair, available_log10))


def _feasible_upper(pair: AlgorithmPair, available_log10: float) -> ProblemSize | None:
    """Largest size whose qubit requirement fits, None if none exists."""
    try:
        crossing = solve_threshold(
            pair.qubit_requirement, Const(Fraction(1)), LogMagnitude(available_log10)
        )
    except RootSearchError:
        return None  # requirement stays within budget across the search range
    if not crossing.is_finite:
        return None  # requirement plateaus below the available count
    first_exceeding = crossing.size
    at_crossing = eval_log10_float(pair.qubit_requirement, first_exceeding.log10)
    if at_crossing <= available_log10 + _EVAL_TOL:
        return first_exceeding
    if first_exceeding.exact is not None:
        return ProblemSize.from_int(first_exceeding.exact - 1)
    return first_exceeding  # magnitude scale: the -1 is not representable


def _require_monotone(req: Expr) -> None:
    previous = None
    for x in _MONOTONE_PROBES:
        try:
            value = eval_log10_float(req, x)
        except DomainError:
            continue
        if previous is not None and value < previous - _EVAL_TOL:
            raise NonMonotoneQubitRequirementError(
                "qubit requirement decreases with problem size"
            )
        previous = value


def convert_size_semantics(
    n_star: ProblemSize, semantics: SizeSemantics
) -> ProblemSize:
    """Restate a threshold in the problem's own size unit.

    elements is the identity; variables_log2 counts the variables of a
    problem whose instance space has n points; bits restates a bit-length
    threshold as the magnitude of the value those bits encode.
    """
    if semantics is SizeSemantics.ELEMENTS:
        return n_star
    if semantics is SizeSemantics.VARIABLES_LOG2:
        variables = max(1, snap_int(n_star.log10 / _LOG10_2))
        return ProblemSize(math.log10(variables), variables)
    # bits: the value encoded by an n*-bit input
    if n_star.exact is not None and n_star.exact < 50:
        return ProblemSize.from_int(2 ** n_star.exact)
    try:
        value_log10 = 10.0 ** n_star.log10 * _LOG10_2
    except OverflowError:
        value_log10 = math.inf
    if math.isinf(value_log10):
        raise ValueError("bit length too large to express as a value")
    return ProblemSize(value_log10, None)
