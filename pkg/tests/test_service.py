"""Request parsing, the HTTP API, the CLI, and their byte-level parity."""
from __future__ import annotations

import json
import math

import pytest
from fastapi.testclient import TestClient
from jsonschema import Draft202012Validator

from qxover.api import create_app
from qxover.cli import main
from qxover.hardware import year_for_qubits
from qxover.magnitude import LogMagnitude
from qxover.service import (
    DataContext,
    RequestError,
    UnknownNameError,
    build_analyze,
    build_catalog,
    build_crossover,
    build_grid,
    build_qaps,
    build_roadmap,
    build_threshold,
    resolve_pair,
    resolve_scenario,
)
from qxover.store import load_schema


@pytest.fixture(scope="module")
def ctx():
    return DataContext()


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def validate(kind: str, payload: dict) -> None:
    Draft202012Validator(load_schema(kind)).validate(payload)


class TestResolveScenario:
    def test_default_is_base(self, ctx):
        scenario, name = resolve_scenario(ctx, None, None)
        assert name == "base"
        assert scenario.ec_qubit_ratio == 1000.0

    def test_raw_constant_is_anonymous(self, ctx):
        scenario, name = resolve_scenario(ctx, "1e6", None)
        assert name is None
        assert math.log10(scenario.c_speed) == pytest.approx(6.0)
        assert scenario.ec_qubit_ratio == 1000.0

    def test_both_rejected(self, ctx):
        with pytest.raises(RequestError, match="not both"):
            resolve_scenario(ctx, "1e6", "base")

    def test_unknown_scenario(self, ctx):
        with pytest.raises(RequestError, match="unknown scenario"):
            resolve_scenario(ctx, None, "bogus")

    @pytest.mark.parametrize("bad", ["abc", "inf", "nan", "0.5", "-3"])
    def test_bad_constants(self, ctx, bad):
        with pytest.raises(RequestError):
            resolve_scenario(ctx, bad, None)


class TestResolvePair:
    def test_by_id(self, ctx):
        pair, entry_id = resolve_pair(
            ctx, "grover", None, None, None, None, None
        )
        assert entry_id == "grover"
        assert pair.problem_name == "Unstructured Search"

    def test_unknown_id_is_404(self, ctx):
        with pytest.raises(UnknownNameError) as info:
            resolve_pair(ctx, "bogus", None, None, None, None, None)
        assert info.value.status == 404

    def test_id_without_quantum_pairing(self, ctx):
        with pytest.raises(RequestError, match="no quantum pairing"):
            resolve_pair(
                ctx, "matrix-multiplication", None, None, None, None, None
            )

    def test_id_and_expressions_conflict(self, ctx):
        with pytest.raises(RequestError, match="not both"):
            resolve_pair(ctx, "grover", "n", None, None, None, None)

    def test_ad_hoc_pair(self, ctx):
        pair, entry_id = resolve_pair(
            ctx, None, "n", "n^(1/2)", "log(n) / log(2)", None, None
        )
        assert entry_id is None
        assert pair.id == "custom"

    def test_missing_expression(self, ctx):
        with pytest.raises(RequestError, match="missing required parameter"):
            resolve_pair(ctx, None, "n", None, "log(n)", None, None)

    def test_sub_unit_qubit_requirement(self, ctx):
        with pytest.raises(RequestError):
            resolve_pair(ctx, None, "n", "n^(1/2)", "1/2", None, None)

    def test_bad_semantics(self, ctx):
        with pytest.raises(RequestError, match="elements, bits"):
            resolve_pair(
                ctx, None, "n", "n^(1/2)", "log(n)", None, "qubits"
            )


class TestBuilders:
    def test_threshold_worked_example(self, ctx):
        payload = build_threshold(ctx, "n^3", "n", c="1e6")
        assert payload["threshold"] == "1000"
        assert payload["log10_root"] == 3.0
        assert payload["scenario"] is None
        validate("threshold", payload)

    def test_threshold_named_scenario(self, ctx):
        payload = build_threshold(ctx, "n^3", "n", scenario="optimistic")
        assert payload["exact"] == 100
        assert payload["scenario"] == "optimistic"

    def test_threshold_series_length(self, ctx):
        payload = build_threshold(ctx, "n^3", "n", c="1e6", points="12")
        assert len(payload["series"]["log10_n"]) == 12
        validate("threshold", payload)

    def test_threshold_bad_points(self, ctx):
        with pytest.raises(RequestError, match="points"):
            build_threshold(ctx, "n^3", "n", c="1e6", points="1")

    def test_threshold_parse_error_carries_offset(self, ctx):
        with pytest.raises(RequestError) as info:
            build_threshold(ctx, "n^^2", "n", c="1e6")
        assert info.value.offset == 2
        assert info.value.status == 400

    def test_grid_base_row(self, ctx):
        payload = build_grid(ctx)
        assert payload["scenario"] == "base"
        assert payload["runtimes"][0] == "exp(n)"
        n3_row = payload["cells"][1]
        assert [cell["threshold"] for cell in n3_row] == [
            "no-advantage", "no-advantage", "10^6", "2819", "1000", "173",
        ]
        validate("grid", payload)

    def test_grid_pessimistic_exp_cell(self, ctx):
        payload = build_grid(ctx, scenario="pessimistic")
        assert payload["cells"][0][1]["exact"] == 29

    def test_analyze_grover_chain(self, ctx):
        payload = build_analyze(ctx, entry_id="grover", years="2024-2035")
        assert payload["id"] == "grover"
        assert payload["threshold"] == "10^12"
        assert payload["logical_qubits_whole"] == 40
        assert payload["physical_qubits_log10"] == pytest.approx(
            math.log10(40000.0)
        )
        assert 2026.0 < payload["first_advantage_year"] < 2028.0
        assert payload["first_advantage_range"] == [2026, 2027]
        assert len(payload["qaps"]) == 12
        assert payload["qaps"][0]["empty"] is True
        assert payload["qaps"][-1]["empty"] is False
        validate("analyze", payload)

    def test_analyze_ad_hoc_matches_catalog_entry(self, ctx):
        by_id = build_analyze(ctx, entry_id="grover", years="2024,2030")
        ad_hoc = build_analyze(
            ctx,
            classical="n",
            quantum="n^(1/2)",
            qubits="log(n) / log(2)",
            years="2024,2030",
        )
        assert ad_hoc["id"] is None
        assert ad_hoc["log10_root"] == by_id["log10_root"]
        assert ad_hoc["logical_qubits_whole"] == by_id["logical_qubits_whole"]
        assert (
            ad_hoc["first_advantage_year"] == by_id["first_advantage_year"]
        )

    def test_analyze_no_advantage_validates(self, ctx):
        payload = build_analyze(
            ctx, classical="n", quantum="n^2", qubits="n", years="2024,2030"
        )
        assert payload["threshold"] == "no-advantage"
        assert payload["first_advantage_year"] is None
        assert all(row["empty"] for row in payload["qaps"])
        validate("analyze", payload)

    def test_analyze_converted_semantics_validates(self, ctx):
        payload = build_analyze(
            ctx, entry_id="shor", scenario="base", years="2024,2030"
        )
        assert payload["size_semantics"] == "bits"
        converted = payload["converted_threshold"]
        assert converted["semantics"] == "bits"
        assert converted["log10"] > 20
        validate("analyze", payload)

    def test_analyze_bad_years(self, ctx):
        with pytest.raises(RequestError):
            build_analyze(ctx, entry_id="grover", years="2030,2024")

    def test_qaps_matches_analyze(self, ctx):
        qaps = build_qaps(ctx, entry_id="grover", years="2024-2035")
        analysis = build_analyze(ctx, entry_id="grover", years="2024-2035")
        assert qaps["first_advantage_year"] == (
            analysis["first_advantage_year"]
        )
        assert qaps["intervals"] == analysis["qaps"]
        validate("qaps", qaps)

    def test_roadmap_fit_only(self, ctx):
        payload = build_roadmap(ctx, provider="ibm")
        assert payload["projection"] is None
        assert payload["year_for"] is None
        assert payload["model"]["slope"] == pytest.approx(0.406, abs=1e-3)
        validate("roadmap", payload)

    def test_roadmap_projection_and_inverse(self, ctx):
        payload = build_roadmap(ctx, provider="ibm", year="2030",
                                qubits="40000")
        model = ctx.model("ibm")
        expected = model.intercept + model.slope * (2030 - 2019)
        assert payload["projection"]["physical_qubits_log10"] == (
            pytest.approx(expected)
        )
        assert payload["year_for"]["year"] == pytest.approx(
            year_for_qubits(model, LogMagnitude.from_value(40000.0))
        )
        validate("roadmap", payload)

    def test_roadmap_bad_qubits(self, ctx):
        with pytest.raises(RequestError, match="at least 1"):
            build_roadmap(ctx, provider="ibm", qubits="0")

    def test_catalog_list(self, ctx):
        payload = build_catalog(ctx)
        assert len(payload["entries"]) == 105
        assert payload["classification"] is None
        assert payload["scenario"] is None
        validate("catalog", payload)

    def test_catalog_classify_default_scenario(self, ctx):
        payload = build_catalog(ctx, classify=True)
        assert payload["scenario"] == "base"
        assert payload["c_log10"] == pytest.approx(6.0)
        rows = {row["id"]: row for row in payload["classification"]}
        assert len(rows) == 4
        assert rows["shor"]["cell_class"] == "green"
        assert rows["grover"]["threshold"] == "10^12"
        validate("catalog", payload)

    def test_catalog_classify_with_fallback(self, ctx):
        payload = build_catalog(ctx, scenario="base", fallback="n^3")
        assert len(payload["classification"]) == 105
        validate("catalog", payload)

    def test_crossover_by_id(self, ctx):
        payload = build_crossover(ctx, entry_id="grover")
        assert payload["id"] == "grover"
        assert payload["quantum"] == "n^(1/2)"
        assert len(payload["series"]["log10_n"]) == 160
        validate("threshold", payload)

    def test_crossover_conflicting_inputs(self, ctx):
        with pytest.raises(RequestError, match="not both"):
            build_crossover(ctx, entry_id="grover", classical="n")


class TestApi:
    def test_threshold_worked_example(self, client):
        response = client.get(
            "/api/threshold",
            params={"classical": "n^3", "quantum": "n", "C": "1e6"},
        )
        assert response.status_code == 200
        assert response.headers["content-type"] == "application/json"
        payload = json.loads(response.content)
        assert payload["threshold"] == "1000"
        assert payload["log10_root"] == 3.0

    def test_parse_error_shape(self, client):
        response = client.get(
            "/api/threshold",
            params={"classical": "n^^2", "quantum": "n", "C": "1e6"},
        )
        assert response.status_code == 400
        body = json.loads(response.content)
        assert set(body) == {"error", "offset"}
        assert body["offset"] == 2
        validate("error", body)

    def test_validation_error_has_no_offset(self, client):
        response = client.get(
            "/api/threshold",
            params={"classical": "n^3", "quantum": "n", "C": "1e6",
                    "scenario": "base"},
        )
        assert response.status_code == 400
        body = json.loads(response.content)
        assert "offset" not in body
        validate("error", body)

    def test_unknown_catalog_id_404(self, client):
        response = client.get("/api/analyze", params={"id": "bogus"})
        assert response.status_code == 404
        validate("error", json.loads(response.content))

    def test_unknown_provider_404(self, client):
        response = client.get("/api/roadmap", params={"provider": "acme"})
        assert response.status_code == 404

    def test_grid_endpoint(self, client, ctx):
        response = client.get("/api/grid", params={"scenario": "pessimistic"})
        assert response.status_code == 200
        payload = json.loads(response.content)
        assert payload["cells"][0][1]["threshold"] == "29"
        validate("grid", payload)

    def test_qaps_endpoint(self, client):
        response = client.get(
            "/api/qaps", params={"id": "grover", "years": "2024-2030"}
        )
        payload = json.loads(response.content)
        assert payload["first_advantage_year"] == pytest.approx(
            2026.9, abs=0.1
        )
        validate("qaps", payload)

    def test_catalog_endpoint_list_and_classify(self, client):
        listing = json.loads(client.get("/api/catalog").content)
        assert len(listing["entries"]) == 105
        assert listing["classification"] is None
        classified = json.loads(
            client.get("/api/catalog", params={"scenario": "base"}).content
        )
        assert len(classified["classification"]) == 4

    def test_unknown_path_404(self, client):
        assert client.get("/api/bogus").status_code == 404

    def test_static_mount(self, tmp_path):
        (tmp_path / "index.html").write_text("<h1>explorer</h1>")
        app = create_app(static_dir=tmp_path)
        local = TestClient(app)
        assert "explorer" in local.get("/").text
        assert local.get(
            "/api/threshold",
            params={"classical": "n^3", "quantum": "n", "C": "1e6"},
        ).status_code == 200

    def test_data_dir_provider(self, tmp_path):
        roadmaps = tmp_path / "roadmaps"
        roadmaps.mkdir()
        (roadmaps / "acme.csv").write_text(
            "provider,year,physical_qubits,status\n"
            "acme,2020,10,realized\n"
            "acme,2021,100,realized\n"
            "acme,2022,1000,roadmap\n"
        )
        local = TestClient(create_app(data_dir=tmp_path))
        payload = json.loads(
            local.get("/api/roadmap", params={"provider": "acme"}).content
        )
        assert payload["model"]["slope"] == pytest.approx(1.0)
        assert local.get(
            "/api/roadmap", params={"provider": "ibm"}
        ).status_code == 200


class TestCli:
    def test_threshold_markdown(self, capsysbinary):
        assert main(["threshold", "--classical", "n^3", "--quantum", "n",
                     "--C", "1e6"]) == 0
        out = capsysbinary.readouterr().out.decode()
        assert "| 1000 | 3 | 3 | green |" in out

    def test_analyze_markdown(self, capsysbinary):
        assert main(["analyze", "--id", "grover"]) == 0
        out = capsysbinary.readouterr().out.decode()
        assert "first advantage year: 2026.9 (2026-2027)" in out

    def test_grid_csv(self, capsysbinary):
        assert main(["grid", "--scenario", "base", "--format", "csv"]) == 0
        out = capsysbinary.readouterr().out.decode()
        assert out.splitlines()[0] == (
            "classical,quantum,threshold,log10_root,cell_class"
        )

    def test_roadmap_year_for(self, capsysbinary):
        assert main(["roadmap", "year-for", "--qubits", "40000"]) == 0
        out = capsysbinary.readouterr().out.decode()
        assert "40000 physical qubits reached in 2026.9." in out

    def test_catalog_list_rows(self, capsysbinary):
        assert main(["catalog", "list"]) == 0
        out = capsysbinary.readouterr().out.decode()
        assert len(out.splitlines()) == 2 + 105

    def test_plot_crossover_svg(self, capsysbinary):
        assert main(["plot", "crossover", "--id", "grover"]) == 0
        out = capsysbinary.readouterr().out.decode()
        assert out.startswith("<svg")

    def test_plot_wedge_csv(self, capsysbinary):
        assert main(["plot", "wedge", "--id", "grover", "--format",
                     "csv"]) == 0
        out = capsysbinary.readouterr().out.decode()
        assert out.splitlines()[0] == "year,empty,lower_log10,upper_log10"

    def test_parse_error_exits_1(self, capsysbinary):
        assert main(["threshold", "--classical", "n^^2", "--quantum",
                     "n"]) == 1
        err = capsysbinary.readouterr().err.decode()
        assert err.startswith("error: ")
        assert len(err.strip().splitlines()) == 1

    def test_unknown_id_exits_1(self, capsysbinary):
        assert main(["analyze", "--id", "bogus"]) == 1
        assert "unknown catalog id" in capsysbinary.readouterr().err.decode()

    def test_missing_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 2

    def test_data_dir_flag(self, tmp_path, capsysbinary):
        roadmaps = tmp_path / "roadmaps"
        roadmaps.mkdir()
        (roadmaps / "acme.csv").write_text(
            "provider,year,physical_qubits,status\n"
            "acme,2020,10,realized\n"
            "acme,2021,100,realized\n"
        )
        assert main(["--data-dir", str(tmp_path), "roadmap", "fit",
                     "--provider", "acme", "--format", "json"]) == 0
        payload = json.loads(capsysbinary.readouterr().out)
        assert payload["model"]["slope"] == pytest.approx(1.0)

    def test_data_dir_env(self, tmp_path, monkeypatch, capsysbinary):
        roadmaps = tmp_path / "roadmaps"
        roadmaps.mkdir()
        (roadmaps / "zeta.csv").write_text(
            "provider,year,physical_qubits,status\n"
            "zeta,2020,10,realized\n"
            "zeta,2022,1000,realized\n"
        )
        monkeypatch.setenv("QX_DATA_DIR", str(tmp_path))
        assert main(["roadmap", "fit", "--provider", "zeta"]) == 0
        assert "zeta" not in capsysbinary.readouterr().err.decode()


PARITY_CASES = [
    ("threshold", ["--classical", "n^3", "--quantum", "n", "--C", "1e6"],
     "/api/threshold", {"classical": "n^3", "quantum": "n", "C": "1e6"}),
    ("threshold",
     ["--classical", "n^2 * log(n)", "--quantum", "n", "--scenario",
      "pessimistic", "--points", "40"],
     "/api/threshold",
     {"classical": "n^2 * log(n)", "quantum": "n",
      "scenario": "pessimistic", "points": "40"}),
    ("grid", ["--scenario", "optimistic"], "/api/grid",
     {"scenario": "optimistic"}),
    ("analyze", ["--id", "grover", "--years", "2024-2030"], "/api/analyze",
     {"id": "grover", "years": "2024-2030"}),
    ("analyze",
     ["--classical", "exp(n)", "--quantum", "n^3", "--qubits", "n",
      "--C", "1e6", "--years", "2024,2026"],
     "/api/analyze",
     {"classical": "exp(n)", "quantum": "n^3", "qubits": "n", "C": "1e6",
      "years": "2024,2026"}),
    ("qaps", ["--id", "qft", "--provider", "ionq"], "/api/qaps",
     {"id": "qft", "provider": "ionq"}),
    ("roadmap", ["year-for", "--qubits", "40000"], "/api/roadmap",
     {"qubits": "40000"}),
    ("catalog", ["classify", "--fallback", "n^3"], "/api/catalog",
     {"scenario": "base", "fallback": "n^3", "classify": "1"}),
]


class TestParity:
    @pytest.mark.parametrize(
        "command,flags,path,params", PARITY_CASES,
        ids=[f"{case[0]}-{i}" for i, case in enumerate(PARITY_CASES)],
    )
    def test_cli_bytes_equal_api_bytes(
        self, client, capsysbinary, command, flags, path, params
    ):
        assert main([command, *flags, "--format", "json"]) == 0
        cli_bytes = capsysbinary.readouterr().out
        response = client.get(path, params=params)
        assert response.status_code == 200
        assert cli_bytes == response.content
