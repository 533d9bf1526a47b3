"""Hardware scenarios and qubit growth models.

The classical-over-quantum performance gap is a single multiplicative
constant C assembled from a speed (or cost) ratio, the error-correction
gate overhead, and the ratio of algorithmic constants. Qubit counts over
time follow an exponential growth model fitted by ordinary least squares
in log10 space, which is then inverted to ask when a given machine size
arrives.
"""
from __future__ import annotations

import csv
import enum
import json
import math
from dataclasses import dataclass
from typing import Iterable, TextIO

from .magnitude import LogMagnitude

# Gate and CPU op rates behind the serial presets: 555ns two-qubit gates
# against 5 GHz cores.
QUANTUM_GATE_OPS_PER_SECOND = 2e6
CLASSICAL_OPS_PER_SECOND = 5e9

# Midpoint of the 10^24 to 10^25 factoring-ops-per-cpu-year band.
CLASSICAL_OPS_PER_CPU_YEAR = 10.0 ** 24.5

SECONDS_PER_DAY = 86_400.0


class Basis(enum.Enum):
    """Whether the speed factor is a serial-op or a cost-per-op ratio."""

    SERIAL = "serial"
    COST_PARALLEL = "cost_parallel"


class Machine(enum.Enum):
    CLASSICAL = "classical"
    QUANTUM = "quantum"


@dataclass(frozen=True)
class HardwareScenario:
    """Named bundle of gap factors plus the error-correction qubit ratio.

    c_speed counts classical ops per quantum gate op, c_gate_overhead the
    physical gate ops spent per logical gate op, and c_alg_constant the
    ratio of the algorithms' constant factors.
    """

    name: str
    c_speed: float
    c_gate_overhead: float
    c_alg_constant: float
    ec_qubit_ratio: float = 1000.0
    basis: Basis = Basis.SERIAL

    def __post_init__(self):
        if min(self.c_speed, self.c_gate_overhead, self.c_alg_constant) <= 0:
            raise ValueError("scenario factors must be positive")
        if self.ec_qubit_ratio < 1:
            raise ValueError("ec_qubit_ratio must be at least 1")


def scenario_constant(s: HardwareScenario) -> LogMagnitude:
    """The gap constant C: the product of the three scenario factors."""
    return LogMagnitude(
        math.log10(s.c_speed)
        + math.log10(s.c_gate_overhead)
        + math.log10(s.c_alg_constant)
    )


# 2 MHz gates vs 5 GHz cores give the serial speed band; the dollar-for-
# dollar comparison (10^14 classical FLOPS vs 10^8 gate ops) gives the
# cost band. Error correction multiplies both by about 100.
PRESET_SCENARIOS: dict[str, HardwareScenario] = {
    s.name: s
    for s in (
        HardwareScenario("base", 1e4, 100.0, 1.0),
        HardwareScenario("optimistic", 100.0, 100.0, 1.0),
        HardwareScenario(
            "pessimistic", 1e6, 100.0, 1.0, basis=Basis.COST_PARALLEL
        ),
        HardwareScenario("appendix", 10.0, 100.0, 1.0),
        HardwareScenario("serial", 2500.0, 100.0, 1.0),
        HardwareScenario("cost", 1e6, 100.0, 1.0, basis=Basis.COST_PARALLEL),
    )
}


class PointStatus(enum.Enum):
    REALIZED = "realized"
    ROADMAP = "roadmap"
    EXTRAPOLATED = "extrapolated"


@dataclass(frozen=True)
class RoadmapPoint:
    """One machine on a provider's timeline, built or merely announced."""

    year: float
    physical_qubits: int
    status: PointStatus
    provider: str

    def __post_init__(self):
        if self.physical_qubits < 1:
            raise ValueError("physical_qubits must be at least 1")
        if not 1990.0 <= self.year <= 2100.0:
            raise ValueError(f"year {self.year} outside the plausible range")


@dataclass(frozen=True)
class GrowthModel:
    """Exponential qubit growth: log10 qubits linear in the year."""

    reference_year: float
    intercept: float  # log10 qubits at the reference year
    slope: float      # log10 qubits gained per year
    r_squared: float | None
    provider: str


class InsufficientDataError(ValueError):
    """Fewer than two fittable roadmap points."""


class DegenerateDataError(ValueError):
    """The points admit no positive growth slope."""


def fit_growth(points: Iterable[RoadmapPoint]) -> GrowthModel:
    """Least-squares fit of log10(physical_qubits) against the year.

    Extrapolated points are ignored; realized and announced ones weigh
    equally. The reference year is the earliest fitted point, r_squared
    is reported only when three or more points constrain it.
    """
    fitted = [p for p in points if p.status is not PointStatus.EXTRAPOLATED]
    if len(fitted) < 2:
        raise InsufficientDataError(
            f"need at least 2 fittable points, got {len(fitted)}"
        )
    years = [p.year for p in fitted]
    logs = [math.log10(p.physical_qubits) for p in fitted]
    mean_year = sum(years) / len(years)
    mean_log = sum(logs) / len(logs)
    sxx = sum((y - mean_year) ** 2 for y in years)
    if sxx == 0.0:
        raise DegenerateDataError("all points share one year")
    sxy = sum((y - mean_year) * (v - mean_log) for y, v in zip(years, logs))
    slope = sxy / sxx
    if slope <= 0.0:
        raise DegenerateDataError("qubit counts show no growth over time")

    reference_year = min(years)
    intercept = mean_log + slope * (reference_year - mean_year)
    r_squared = None
    if len(fitted) >= 3:
        sst = sum((v - mean_log) ** 2 for v in logs)
        ssr = sum(
            (v - (intercept + slope * (y - reference_year))) ** 2
            for y, v in zip(years, logs)
        )
        r_squared = 1.0 - ssr / sst
    return GrowthModel(
        reference_year=reference_year,
        intercept=intercept,
        slope=slope,
        r_squared=r_squared,
        provider=fitted[0].provider,
    )


def project_qubits(m: GrowthModel, year: float) -> LogMagnitude:
    """Physical qubits the model expects in the given year."""
    return LogMagnitude(m.intercept + m.slope * (year - m.reference_year))


def year_for_qubits(m: GrowthModel, physical_qubits: LogMagnitude) -> float:
    """The (fractional) year the model first reaches the given count."""
    return m.reference_year + (physical_qubits.log10 - m.intercept) / m.slope


def logical_qubits_available(
    m: GrowthModel, year: float, ec_qubit_ratio: float
) -> LogMagnitude:
    """Projected physical qubits divided by the error-correction ratio."""
    if ec_qubit_ratio < 1:
        raise ValueError("ec_qubit_ratio must be at least 1")
    return project_qubits(m, year) / LogMagnitude.from_value(ec_qubit_ratio)


def estimate_runtime(
    ops: LogMagnitude,
    s: HardwareScenario,
    machine: Machine,
    rate: float,
) -> LogMagnitude:
    """Wall time in seconds (or in the rate's own time unit) for a job.

    Quantum ops count logical gate ops, so the scenario's gate overhead
    inflates them before dividing by the physical rate.
    """
    if rate <= 0:
        raise ValueError("rate must be positive")
    if machine is Machine.QUANTUM:
        ops = ops * LogMagnitude.from_value(s.c_gate_overhead)
    return ops / LogMagnitude.from_value(rate)


# ---------------------------------------------------------------------------
# Data files

ROADMAP_FIELDS = ("provider", "year", "physical_qubits", "status")

_SCENARIO_REQUIRED = ("name", "c_speed", "c_gate_overhead", "c_alg_constant")
_SCENARIO_OPTIONAL = ("ec_qubit_ratio", "basis")


def read_roadmap(fp: TextIO) -> list[RoadmapPoint]:
    """Parse roadmap CSV with header provider,year,physical_qubits,status."""
    reader = csv.DictReader(fp)
    if reader.fieldnames is None or tuple(reader.fieldnames) != ROADMAP_FIELDS:
        raise ValueError(
            f"roadmap header must be {','.join(ROADMAP_FIELDS)}, "
            f"got {reader.fieldnames}"
        )
    points = []
    for row_number, row in enumerate(reader, start=2):
        try:
            points.append(
                RoadmapPoint(
                    year=float(row["year"]),
                    physical_qubits=int(row["physical_qubits"]),
                    status=PointStatus(row["status"]),
                    provider=row["provider"],
                )
            )
        except ValueError as exc:
            raise ValueError(f"roadmap row {row_number}: {exc}") from exc
    return points


def write_roadmap(fp: TextIO, points: Iterable[RoadmapPoint]) -> None:
    writer = csv.writer(fp)
    writer.writerow(ROADMAP_FIELDS)
    for p in points:
        year = int(p.year) if float(p.year).is_integer() else p.year
        writer.writerow([p.provider, year, p.physical_qubits, p.status.value])


def read_scenarios(fp: TextIO) -> dict[str, HardwareScenario]:
    """Parse a JSON list of scenario objects; unknown fields are errors."""
    raw = json.load(fp)
    if not isinstance(raw, list):
        raise ValueError("scenario file must hold a JSON list")
    scenarios: dict[str, HardwareScenario] = {}
    for item in raw:
        unknown = set(item) - set(_SCENARIO_REQUIRED) - set(_SCENARIO_OPTIONAL)
        if unknown:
            raise ValueError(
                f"unknown scenario field(s): {', '.join(sorted(unknown))}"
            )
        missing = set(_SCENARIO_REQUIRED) - set(item)
        if missing:
            raise ValueError(
                f"scenario missing field(s): {', '.join(sorted(missing))}"
            )
        kwargs = dict(item)
        if "basis" in kwargs:
            kwargs["basis"] = Basis(kwargs["basis"])
        scenario = HardwareScenario(**kwargs)
        scenarios[scenario.name] = scenario
    return scenarios


def write_scenarios(
    fp: TextIO, scenarios: Iterable[HardwareScenario]
) -> None:
    payload = [
        {
            "name": s.name,
            "c_speed": s.c_speed,
            "c_gate_overhead": s.c_gate_overhead,
            "c_alg_constant": s.c_alg_constant,
            "ec_qubit_ratio": s.ec_qubit_ratio,
            "basis": s.basis.value,
        }
        for s in scenarios
    ]
    json.dump(payload, fp, indent=2)
    fp.write("\n")
