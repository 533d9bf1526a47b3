"""The qx command line tool.

Subcommands mirror the HTTP API endpoints and share their parameter
parsing, so `qx threshold ... --format json` emits the same bytes as
GET /api/threshold with the same parameters.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .payloads import OutputDocument, OutputFormat, render_document
from .service import (
    DataContext,
    RequestError,
    build_analyze,
    build_catalog,
    build_crossover,
    build_grid,
    build_qaps,
    build_roadmap,
    build_threshold,
)
from .store import resolve_data_dir

_FORMATS = [f.value for f in OutputFormat]


def _add_format(parser: argparse.ArgumentParser, default: str) -> None:
    parser.add_argument(
        "--format", choices=_FORMATS, default=default,
        help=f"output format (default: {default})",
    )


def _add_constant(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--C", dest="c", metavar="LITERAL",
        help="gap constant as a number like 1e6 (excludes --scenario)",
    )
    parser.add_argument(
        "--scenario", help="named hardware scenario (default: base)"
    )


def _add_pair(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--id", help="catalog entry id")
    parser.add_argument("--classical", help="classical runtime expression")
    parser.add_argument("--quantum", help="quantum runtime expression")
    parser.add_argument("--qubits", help="logical qubit requirement")
    parser.add_argument("--loading", help="data loading lower bound")
    parser.add_argument(
        "--semantics", help="size semantics: elements, bits, variables_log2"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qx",
        description="Economic crossover points for quantum algorithms.",
    )
    parser.add_argument(
        "--data-dir",
        help="directory overriding bundled data files (env: QX_DATA_DIR)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser(
        "threshold", help="smallest n where quantum wins economically"
    )
    p.add_argument("--classical", required=True)
    p.add_argument("--quantum", required=True)
    _add_constant(p)
    p.add_argument("--points", help="sample the runtime curves too")
    _add_format(p, "markdown-table")
    p.set_defaults(handler=cmd_threshold)

    p = commands.add_parser(
        "grid", help="threshold matrix over the canonical runtimes"
    )
    _add_constant(p)
    _add_format(p, "markdown-table")
    p.set_defaults(handler=cmd_grid)

    p = commands.add_parser(
        "analyze", help="threshold, qubit needs, and first advantage year"
    )
    _add_pair(p)
    _add_constant(p)
    p.add_argument("--provider", help="roadmap provider (default: ibm)")
    p.add_argument("--years", help="'2024-2035' or '2024,2026,2028'")
    _add_format(p, "markdown-table")
    p.set_defaults(handler=cmd_analyze)

    p = commands.add_parser(
        "qaps", help="advantaged problem sizes per year"
    )
    _add_pair(p)
    _add_constant(p)
    p.add_argument("--provider", help="roadmap provider (default: ibm)")
    p.add_argument("--years", help="'2024-2035' or '2024,2026,2028'")
    _add_format(p, "markdown-table")
    p.set_defaults(handler=cmd_qaps)

    p = commands.add_parser("roadmap", help="qubit growth models")
    actions = p.add_subparsers(dest="action", required=True)
    fit = actions.add_parser("fit", help="fit a provider's growth model")
    project = actions.add_parser("project", help="qubits expected in a year")
    project.add_argument("--year", required=True)
    year_for = actions.add_parser(
        "year-for", help="year a qubit count arrives"
    )
    year_for.add_argument("--qubits", required=True)
    for sub in (fit, project, year_for):
        sub.add_argument("--provider", help="roadmap provider (default: ibm)")
        _add_format(sub, "markdown-table")
        sub.set_defaults(handler=cmd_roadmap)

    p = commands.add_parser("catalog", help="the algorithm catalog")
    actions = p.add_subparsers(dest="action", required=True)
    listing = actions.add_parser("list", help="list catalog entries")
    classify = actions.add_parser(
        "classify", help="traffic-light classification under a scenario"
    )
    _add_constant(classify)
    classify.add_argument(
        "--fallback", help="quantum runtime assumed for unpaired entries"
    )
    for sub in (listing, classify):
        _add_format(sub, "markdown-table")
        sub.set_defaults(handler=cmd_catalog)

    p = commands.add_parser("plot", help="chart-ready series data")
    actions = p.add_subparsers(dest="action", required=True)
    crossover = actions.add_parser(
        "crossover", help="runtime curves around the threshold"
    )
    crossover.add_argument("--id", help="catalog entry id")
    crossover.add_argument("--classical")
    crossover.add_argument("--quantum")
    _add_constant(crossover)
    crossover.add_argument("--points", help="samples per curve")
    wedge = actions.add_parser(
        "wedge", help="advantaged size region over time"
    )
    _add_pair(wedge)
    _add_constant(wedge)
    wedge.add_argument("--provider")
    wedge.add_argument("--years")
    roadmap_plot = actions.add_parser(
        "roadmap", help="roadmap points with the fitted line"
    )
    roadmap_plot.add_argument("--provider")
    for sub in (crossover, wedge, roadmap_plot):
        _add_format(sub, "svg-plot-data")
        sub.set_defaults(handler=cmd_plot)

    p = commands.add_parser("serve", help="run the HTTP API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", help="directory of web explorer files")
    p.set_defaults(handler=cmd_serve)

    return parser


def _ctx(args: argparse.Namespace) -> DataContext:
    return DataContext(resolve_data_dir(args.data_dir))


def _format(args: argparse.Namespace) -> OutputFormat:
    return OutputFormat(args.format)


def cmd_threshold(args: argparse.Namespace) -> OutputDocument:
    payload = build_threshold(
        _ctx(args),
        classical=args.classical,
        quantum=args.quantum,
        c=args.c,
        scenario=args.scenario,
        points=args.points,
    )
    return render_document("threshold", payload, _format(args))


def cmd_grid(args: argparse.Namespace) -> OutputDocument:
    payload = build_grid(_ctx(args), c=args.c, scenario=args.scenario)
    return render_document("grid", payload, _format(args))


def cmd_analyze(args: argparse.Namespace) -> OutputDocument:
    payload = build_analyze(
        _ctx(args),
        entry_id=args.id,
        classical=args.classical,
        quantum=args.quantum,
        qubits=args.qubits,
        loading=args.loading,
        semantics=args.semantics,
        c=args.c,
        scenario=args.scenario,
        provider=args.provider,
        years=args.years,
    )
    return render_document("analyze", payload, _format(args))


def cmd_qaps(args: argparse.Namespace) -> OutputDocument:
    payload = build_qaps(
        _ctx(args),
        entry_id=args.id,
        classical=args.classical,
        quantum=args.quantum,
        qubits=args.qubits,
        loading=args.loading,
        semantics=args.semantics,
        c=args.c,
        scenario=args.scenario,
        provider=args.provider,
        years=args.years,
    )
    return render_document("qaps", payload, _format(args))


def cmd_roadmap(args: argparse.Namespace) -> OutputDocument:
    payload = build_roadmap(
        _ctx(args),
        provider=args.provider,
        year=getattr(args, "year", None),
        qubits=getattr(args, "qubits", None),
    )
    return render_document("roadmap", payload, _format(args))


def cmd_catalog(args: argparse.Namespace) -> OutputDocument:
    classify = args.action == "classify"
    payload = build_catalog(
        _ctx(args),
        c=getattr(args, "c", None),
        scenario=getattr(args, "scenario", None),
        fallback=getattr(args, "fallback", None),
        classify=classify,
    )
    return render_document("catalog", payload, _format(args))


def cmd_plot(args: argparse.Namespace) -> OutputDocument:
    ctx = _ctx(args)
    if args.action == "crossover":
        payload = build_crossover(
            ctx,
            entry_id=args.id,
            classical=args.classical,
            quantum=args.quantum,
            c=args.c,
            scenario=args.scenario,
            points=args.points,
        )
        kind = "plot-crossover"
    elif args.action == "wedge":
        payload = build_qaps(
            ctx,
            entry_id=args.id,
            classical=args.classical,
            quantum=args.quantum,
            qubits=args.qubits,
            loading=args.loading,
            semantics=args.semantics,
            c=args.c,
            scenario=args.scenario,
            provider=args.provider,
            years=args.years,
        )
        kind = "plot-wedge"
    else:
        payload = build_roadmap(ctx, provider=args.provider)
        kind = "plot-roadmap"
    return render_document(kind, payload, _format(args))


def cmd_serve(args: argparse.Namespace) -> None:
    import uvicorn

    from .api import create_app

    static = Path(args.static) if args.static else None
    app = create_app(resolve_data_dir(args.data_dir), static_dir=static)
    uvicorn.run(app, host=args.host, port=args.port)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        document = args.handler(args)
    except (RequestError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if document is not None:
        sys.stdout.buffer.write(document.payload)
        sys.stdout.buffer.flush()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
