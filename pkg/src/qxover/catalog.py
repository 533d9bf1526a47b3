"""The shipped algorithm catalog: classical runtimes and quantum pairs.

The catalog is a JSON array of entries, each naming a problem, its best
known classical runtime, and (for the handful of problems with a studied
quantum algorithm) the quantum runtime, qubit requirement, and optional
data-loading cost. Expressions are stored in DSL text form; loading
validates every row and re-saving produces byte-identical canonical
output.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .analyzer import AlgorithmPair, SizeSemantics, effective_quantum_runtime
from .exprs import (
    Expr,
    ExprError,
    InconclusiveComparisonError,
    Ordering,
    asymptotic_compare,
    parse,
    render,
)
from .hardware import HardwareScenario, scenario_constant
from .solver import CellClass, Threshold, classify, solve_threshold


class SchemaError(ValueError):
    """A catalog row violates the schema; the message names the row."""


class ExpressionError(ValueError):
    """A catalog expression failed to parse; the message names the row."""


@dataclass(frozen=True)
class CatalogEntry:
    """One problem: a classical runtime, optionally a quantum pairing."""

    id: str
    problem_name: str
    classical_runtime: Expr
    runtime_class_label: str
    quantum_runtime: Expr | None = None
    qubit_requirement: Expr | None = None
    data_loading: Expr | None = None
    size_semantics: SizeSemantics = SizeSemantics.ELEMENTS
    tags: tuple[str, ...] = ()
    citation: str = ""

    def __post_init__(self):
        if (self.quantum_runtime is None) != (self.qubit_requirement is None):
            raise ValueError(
                f"{self.id}: quantum_runtime and qubit_requirement "
                "must be given together"
            )
        if self.data_loading is not None and self.quantum_runtime is None:
            raise ValueError(
                f"{self.id}: data_loading is meaningless without a "
                "quantum runtime"
            )

    @property
    def has_quantum(self) -> bool:
        return self.quantum_runtime is not None

    def to_pair(self) -> AlgorithmPair:
        """The entry as an algorithm pair; requires the quantum fields."""
        if not self.has_quantum:
            raise ValueError(f"{self.id} has no quantum pairing")
        return AlgorithmPair(
            id=self.id,
            problem_name=self.problem_name,
            classical_runtime=self.classical_runtime,
            quantum_runtime=self.quantum_runtime,
            qubit_requirement=self.qubit_requirement,
            data_loading=self.data_loading,
            size_semantics=self.size_semantics,
            citation=self.citation,
        )


_EXPR_FIELDS = ("quantum_runtime", "qubit_requirement", "data_loading")
_REQUIRED_FIELDS = (
    "id",
    "problem_name",
    "classical_runtime",
    "size_semantics",
    "runtime_class_label",
    "tags",
    "citation",
)
_ALL_FIELDS = frozenset(_REQUIRED_FIELDS) | frozenset(_EXPR_FIELDS)


def load_catalog(path: str | Path) -> list[CatalogEntry]:
    """Read and validate a catalog file.

    Every row is checked: field names and types, expression syntax, the
    quantum-field pairing rule, and that runtime_class_label denotes the
    same asymptotic class as the classical runtime.
    """
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(raw, list):
        raise SchemaError("catalog must be a JSON array of entries")
    entries = []
    seen_ids: set[str] = set()
    for index, row in enumerate(raw, start=1):
        entry = _entry_from_dict(row, index)
        if entry.id in seen_ids:
            raise SchemaError(f"row {index}: duplicate id {entry.id!r}")
        seen_ids.add(entry.id)
        entries.append(entry)
    return entries


def save_catalog(entries: list[CatalogEntry], path: str | Path) -> None:
    """Write entries in canonical form: fixed field order, rendered DSL."""
    Path(path).write_text(dumps_catalog(entries), encoding="utf-8")


def dumps_catalog(entries: list[CatalogEntry]) -> str:
    return json.dumps(
        [entry_to_dict(entry) for entry in entries],
        indent=2,
        ensure_ascii=False,
    ) + "\n"


def classify_catalog(
    entries: list[CatalogEntry],
    scenario: HardwareScenario,
    fallback_quantum: Expr | None = None,
) -> list[tuple[CatalogEntry, CellClass, Threshold]]:
    """Traffic-light classification of each entry under a scenario.

    Entries with a quantum pairing are solved against their own
    (loading-adjusted) quantum runtime. Entries without one are solved
    against fallback_quantum when given and skipped otherwise.
    """
    c = scenario_constant(scenario)
    results = []
    for entry in entries:
        if entry.has_quantum:
            quantum = effective_quantum_runtime(entry.to_pair())
        elif fallback_quantum is not None:
            quantum = fallback_quantum
        else:
            continue
        threshold = solve_threshold(entry.classical_runtime, quantum, c)
        results.append((entry, classify(threshold), threshold))
    return results


def _entry_from_dict(row, index: int) -> CatalogEntry:
    if not isinstance(row, dict):
        raise SchemaError(f"row {index}: entry must be an object")
    unknown = sorted(set(row) - _ALL_FIELDS)
    if unknown:
        raise SchemaError(f"row {index}: unknown fields {', '.join(unknown)}")
    missing = [name for name in _REQUIRED_FIELDS if name not in row]
    if missing:
        raise SchemaError(f"row {index}: missing fields {', '.join(missing)}")

    for name in ("id", "problem_name", "classical_runtime",
                 "size_semantics", "runtime_class_label", "citation"):
        if not isinstance(row[name], str):
            raise SchemaError(f"row {index}: {name} must be a string")
    tags = row["tags"]
    if not isinstance(tags, list) or not all(isinstance(t, str) for t in tags):
        raise SchemaError(f"row {index}: tags must be a list of strings")
    try:
        semantics = SizeSemantics(row["size_semantics"])
    except ValueError:
        raise SchemaError(
            f"row {index}: unknown size_semantics {row['size_semantics']!r}"
        ) from None

    classical = _parse_field(row["classical_runtime"], "classical_runtime", index)
    optional: dict[str, Expr | None] = {}
    for name in _EXPR_FIELDS:
        text = row.get(name)
        if text is None:
            optional[name] = None
        elif not isinstance(text, str):
            raise SchemaError(f"row {index}: {name} must be a string")
        else:
            optional[name] = _parse_field(text, name, index)

    label_expr = _parse_field(
        row["runtime_class_label"], "runtime_class_label", index
    )
    try:
        verdict = asymptotic_compare(label_expr, classical)
    except InconclusiveComparisonError:
        verdict = None
    if verdict is not Ordering.EQUAL:
        raise SchemaError(
            f"row {index}: runtime_class_label "
            f"{row['runtime_class_label']!r} is not asymptotically equal "
            "to the classical runtime"
        )

    try:
        return CatalogEntry(
            id=row["id"],
            problem_name=row["problem_name"],
            classical_runtime=classical,
            runtime_class_label=row["runtime_class_label"],
            quantum_runtime=optional["quantum_runtime"],
            qubit_requirement=optional["qubit_requirement"],
            data_loading=optional["data_loading"],
            size_semantics=semantics,
            tags=tuple(tags),
            citation=row["citation"],
        )
    except ValueError as exc:
        raise SchemaError(f"row {index}: {exc}") from exc


def _parse_field(text: str, name: str, index: int) -> Expr:
    try:
        return parse(text)
    except ExprError as exc:
        raise ExpressionError(f"row {index}: {name}: {exc}") from exc


def entry_to_dict(entry: CatalogEntry) -> dict:
    out: dict = {
        "id": entry.id,
        "problem_name": entry.problem_name,
        "classical_runtime": render(entry.classical_runtime),
    }
    for name in _EXPR_FIELDS:
        expr = getattr(entry, name)
        if expr is not None:
            out[name] = render(expr)
    out["size_semantics"] = entry.size_semantics.value
    out["runtime_class_label"] = entry.runtime_class_label
    out["tags"] = list(entry.tags)
    out["citation"] = entry.citation
    return out
