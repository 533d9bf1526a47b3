"""Locating bundled and user-supplied data files.

Roadmap CSVs and scenario JSON resolve against an optional data
directory (a CLI flag or the QX_DATA_DIR environment variable); the
files bundled with the package are the fallback.
"""
from __future__ import annotations

import json
import os
from importlib import resources
from pathlib import Path

from .catalog import CatalogEntry
from .catalog import load_catalog as _read_catalog_file
from .hardware import (
    PRESET_SCENARIOS,
    HardwareScenario,
    RoadmapPoint,
    read_roadmap,
    read_scenarios,
)

ENV_DATA_DIR = "QX_DATA_DIR"


class UnknownProviderError(KeyError):
    """No roadmap file exists for the requested provider."""


def resolve_data_dir(override: str | None = None) -> Path | None:
    """Explicit override beats the environment; None means bundled data."""
    if override:
        return Path(override)
    env = os.environ.get(ENV_DATA_DIR)
    return Path(env) if env else None


def _bundled(relative: str):
    node = resources.files("qxover").joinpath("data")
    for part in relative.split("/"):
        node = node.joinpath(part)
    return node


def load_roadmap(
    provider: str, data_dir: Path | None = None
) -> list[RoadmapPoint]:
    if data_dir is not None:
        local = data_dir / "roadmaps" / f"{provider}.csv"
        if local.exists():
            with local.open() as fp:
                return read_roadmap(fp)
    bundled = _bundled(f"roadmaps/{provider}.csv")
    if not bundled.is_file():
        raise UnknownProviderError(provider)
    with bundled.open() as fp:
        return read_roadmap(fp)


def list_providers(data_dir: Path | None = None) -> list[str]:
    names = {
        entry.name.removesuffix(".csv")
        for entry in _bundled("roadmaps").iterdir()
        if entry.name.endswith(".csv")
    }
    if data_dir is not None and (data_dir / "roadmaps").is_dir():
        names.update(
            path.stem for path in (data_dir / "roadmaps").glob("*.csv")
        )
    return sorted(names)


def load_scenarios(
    data_dir: Path | None = None,
) -> dict[str, HardwareScenario]:
    """Built-in presets, extended or overridden by the directory's file."""
    scenarios = dict(PRESET_SCENARIOS)
    if data_dir is not None:
        local = data_dir / "scenarios.json"
        if local.exists():
            with local.open() as fp:
                scenarios.update(read_scenarios(fp))
    return scenarios


def load_catalog(data_dir: Path | None = None) -> list[CatalogEntry]:
    """The directory's catalog.json if present, else the bundled one."""
    if data_dir is not None:
        local = data_dir / "catalog.json"
        if local.exists():
            return _read_catalog_file(local)
    with resources.as_file(_bundled("catalog.json")) as path:
        return _read_catalog_file(path)


def load_schema(name: str) -> dict:
    """A bundled response schema ('threshold', 'grid', ...) as a dict."""
    node = resources.files("qxover").joinpath("schemas")
    node = node.joinpath(f"{name}.json")
    if not node.is_file():
        raise KeyError(f"no schema named {name}")
    return json.loads(node.read_text(encoding="utf-8"))
