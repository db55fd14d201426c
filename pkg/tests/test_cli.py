"""End-to-end runs of the ``tss-geo`` command line."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import pytest

from tss_geo.cli.main import run
from tss_geo.formats import (
    ArtifactModel,
    EmbeddingModel,
    GraphModel,
    InstanceModel,
    dump_model,
    load_model,
    parse_model,
)
from tss_geo.harness import checks
from tss_geo.harness.generators import k4_embedding

PATH3 = {"graph": {"n": 3, "edges": [[0, 1], [1, 2]]}}


def _write(tmp_path: Path, name: str, payload: Any) -> Path:
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


def _cli(*argv: str) -> int:
    return run(["--workers", "1", "--log-level", "WARNING", *argv])


def test_solve_writes_the_optimum(tmp_path: Path) -> None:
    inst = _write(tmp_path, "path3.json", PATH3)
    out = tmp_path / "solved.json"

    assert _cli("solve", "--in", str(inst), "--out", str(out)) == 0

    result = json.loads(out.read_text(encoding="utf-8"))
    assert result == {"k_min": 1, "witness": [1], "method": "brute", "feasible": True}


def test_solve_prints_json_without_out(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    inst = _write(tmp_path, "path3.json", PATH3)

    assert _cli("solve", "--in", str(inst), "--mode", "bb", "--preprocess") == 0

    result = json.loads(capsys.readouterr().out)
    assert result["k_min"] == 1
    assert result["method"] == "preprocess+bb"


def test_solve_poly_uses_the_interval_certificate(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    payload = dict(PATH3, intervals=[[0, 1], [1, 2], [2, 3]])
    inst = _write(tmp_path, "path3.json", payload)

    assert _cli("solve", "--in", str(inst), "--mode", "poly") == 0

    assert json.loads(capsys.readouterr().out)["k_min"] == 1


def test_solve_reports_infeasible_bounds(tmp_path: Path) -> None:
    inst = _write(tmp_path, "path3.json", PATH3)
    out = tmp_path / "solved.json"

    code = _cli("solve", "--in", str(inst), "--k-max", "0", "--out", str(out))

    assert code == 1
    result = json.loads(out.read_text(encoding="utf-8"))
    assert result["feasible"] is False
    assert result["k_min"] is None


def test_solve_small_mode_rejects_large_thresholds(tmp_path: Path) -> None:
    inst = _write(tmp_path, "path3.json", PATH3)

    assert _cli("solve", "--in", str(inst), "--mode", "small") == 2


def test_simulate_exit_code_follows_completeness(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    inst = _write(tmp_path, "path3.json", PATH3)

    assert _cli("simulate", "--in", str(inst), "--seed-set", "1") == 0
    trace = json.loads(capsys.readouterr().out)
    assert trace["complete"] is True

    assert _cli("simulate", "--in", str(inst), "--seed-set", "0") == 1
    assert _cli("simulate", "--in", str(inst), "--seed-set", "a") == 2


def test_reduce_is2udg_writes_artifact_and_drawing(tmp_path: Path) -> None:
    g, emb = k4_embedding()
    graph = tmp_path / "k4.json"
    graph.write_text(dump_model(GraphModel.from_domain(g)), encoding="utf-8")
    emb_path = tmp_path / "k4-emb.json"
    emb_path.write_text(dump_model(EmbeddingModel.from_domain(emb)), encoding="utf-8")
    out = tmp_path / "udg.json"
    svg = tmp_path / "udg.svg"

    code = _cli(
        "reduce", "is2udg", "--in", str(graph), "--emb", str(emb_path),
        "--r", "3", "--k", "1", "--out", str(out), "--svg", str(svg),
    )  # fmt: skip

    assert code == 0
    art = load_model(out, ArtifactModel).to_domain()
    assert art.reduction == "is2udg"
    assert art.source == g
    assert svg.read_text(encoding="utf-8").startswith("<svg")


def test_reduce_sat2tss_reads_dimacs(tmp_path: Path) -> None:
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 1 1\n1 0\n", encoding="utf-8")

    # one clause with one occurrence is not restricted 3-SAT
    assert _cli("reduce", "sat2tss", "--in", str(cnf)) == 1


def test_embed_command(tmp_path: Path) -> None:
    c4 = {"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]}
    graph = _write(tmp_path, "c4.json", c4)
    out = tmp_path / "emb.json"

    assert _cli("embed", "--in", str(graph), "--out", str(out)) == 0

    assert len(load_model(out, EmbeddingModel).to_domain().vpoint) == 4


@pytest.mark.parametrize("kind", ["er", "grid", "interval", "planar"])
def test_gen_writes_loadable_instances(tmp_path: Path, kind: str) -> None:
    out = tmp_path / f"{kind}.json"

    assert _cli("gen", kind, "--n", "6", "--seed", "2", "--out", str(out)) == 0

    assert load_model(out, InstanceModel).to_domain().n >= 1


def test_gen_sat_as_dimacs(capsys: pytest.CaptureFixture[str]) -> None:
    assert _cli("gen", "sat", "--n", "2", "--dimacs") == 0
    assert capsys.readouterr().out.startswith("p cnf 2")

    assert _cli("gen", "er", "--n", "3", "--dimacs") == 2


def test_gen_is_deterministic(capsys: pytest.CaptureFixture[str]) -> None:
    _cli("gen", "er", "--n", "7", "--seed", "4", "--thresholds", "random")
    first = capsys.readouterr().out
    _cli("gen", "er", "--n", "7", "--seed", "4", "--thresholds", "random")

    assert parse_model(first, InstanceModel) == parse_model(
        capsys.readouterr().out, InstanceModel
    )


def test_verify_mod6_and_gadgets(tmp_path: Path) -> None:
    report = tmp_path / "mod6.json"

    assert _cli("verify", "mod6", "--g-max", "30", "--out", str(report)) == 0
    assert json.loads(report.read_text(encoding="utf-8"))["ok"] is True
    assert _cli("verify", "gadgets") == 0


def test_verify_failure_exits_one_and_replays(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    def broken(
        self: checks.UnanimousVcCheck, case: object, ctx: checks.CheckContext
    ) -> list[str]:
        return ["deliberately broken"]

    monkeypatch.setattr(checks.UnanimousVcCheck, "check", broken)
    repro_dir = tmp_path / "repro"

    code = _cli(
        "verify", "equivalence", "unanimous_vc", "--trials", "1", "--size", "4",
        "--journal", "--repro-dir", str(repro_dir),
    )  # fmt: skip

    assert code == 1
    repro = repro_dir / "unanimous_vc-case0.json"
    assert repro.is_file()
    assert (repro_dir / "equivalence-unanimous_vc.jsonl").is_file()

    monkeypatch.undo()
    monkeypatch.chdir(tmp_path)
    assert _cli("verify", "replay", "--case", str(repro)) == 0


def test_missing_input_file_is_a_usage_error(tmp_path: Path) -> None:
    assert _cli("solve", "--in", str(tmp_path / "missing.json")) == 2


def test_malformed_input_is_a_usage_error(tmp_path: Path) -> None:
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")

    assert _cli("solve", "--in", str(bad)) == 2


def test_argument_errors_exit_two() -> None:
    assert run(["frobnicate"]) == 2
    assert run([]) == 2
    assert run(["--workers", "-1", "gen", "er", "--n", "3"]) == 2


def test_version_exits_zero(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["--version"]) == 0
    assert capsys.readouterr().out.strip()


def test_invalid_environment_exits_two(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("TSS_EMBED_ATTEMPTS", "0")

    assert run(["gen", "er", "--n", "3"]) == 2
