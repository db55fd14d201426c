"""Verification campaigns, repro files and the case journal."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from tss_geo.errors import EmbeddingError, InputError, ParseError
from tss_geo.harness import checks
from tss_geo.harness.campaigns import (
    case_seed,
    replay,
    run_case,
    verify_equivalence,
    verify_gadgets,
    verify_mod6,
)
from tss_geo.harness.checks import CHECK_IDS, CheckContext, create_check
from tss_geo.services.journal import CaseJournal
from tss_geo.services.storage import ArtifactStore

FAST_CHECKS = [
    ("unanimous_vc", 6),
    ("preprocess", 5),
    ("subdivide", 5),
    ("majority", 4),
    ("sat2tss", 2),
    ("sat2majority", 1),
    ("exact2", 5),
    ("grid_vc", 8),
    ("interval_vc", 8),
    ("mis_bb", 10),
]


def _break_unanimous_check(monkeypatch: pytest.MonkeyPatch) -> None:
    def broken(
        self: checks.UnanimousVcCheck, case: object, ctx: CheckContext
    ) -> list[str]:
        return ["deliberately broken"]

    monkeypatch.setattr(checks.UnanimousVcCheck, "check", broken)


def test_check_registry() -> None:
    assert set(CHECK_IDS) == {
        "unanimous_vc",
        "preprocess",
        "subdivide",
        "majority",
        "planar2grid",
        "sat2tss",
        "sat2majority",
        "exact2",
        "interval_vc",
        "grid_vc",
        "mis_bb",
        "is2udg",
    }
    for check_id in CHECK_IDS:
        check = create_check(check_id)
        assert check.name == check_id
        assert 1 <= check.default_size <= check.max_size
    with pytest.raises(ValueError, match="Unsupported check"):
        create_check("nope")


@pytest.mark.parametrize(("check_id", "size"), FAST_CHECKS)
def test_equivalence_campaigns_pass(check_id: str, size: int) -> None:
    report = verify_equivalence(check_id, seed=1, trials=3, size=size)

    assert report.ok, [f.message for f in report.failures]
    assert report.cases == 3
    assert report.passed + report.skipped == 3


def test_planar_to_grid_campaign_on_the_fixed_case() -> None:
    # case 0 always uses the handmade K4 embedding
    report = verify_equivalence("planar2grid", trials=1)

    assert report.ok, [f.message for f in report.failures]


def test_planar_to_grid_campaign_fails_when_the_embedder_fails(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    def no_embedding(g: object, **kwargs: object) -> None:
        raise EmbeddingError("router gave up", code="routing_failed")

    monkeypatch.setattr(checks, "compute_embedding", no_embedding)

    report = verify_equivalence(
        "planar2grid", seed=3, trials=4, size=4, store=ArtifactStore(tmp_path)
    )

    # case 0 uses the handmade K4 embedding and never calls the embedder
    assert not report.ok
    assert report.passed == 1
    assert [f.case for f in report.failures] == [1, 2, 3]
    assert all("EmbeddingError: router gave up" in f.message for f in report.failures)
    repro = report.failures[0].repro_path
    payload = json.loads(repro.read_text(encoding="utf-8"))
    assert "embedding" not in payload["input"]
    assert not replay(repro).ok

    monkeypatch.undo()
    monkeypatch.chdir(tmp_path)
    fixed = replay(repro)
    assert fixed.cases == 1
    assert not any("router gave up" in f.message for f in fixed.failures)


@pytest.mark.slow
def test_disk_campaign_on_both_fixed_graphs() -> None:
    report = verify_equivalence("is2udg", trials=2)

    assert report.ok, [f.message for f in report.failures]


def test_size_outside_oracle_range_is_rejected() -> None:
    with pytest.raises(InputError, match="oracle range"):
        verify_equivalence("sat2majority", size=3)
    with pytest.raises(InputError, match="oracle range"):
        verify_equivalence("mis_bb", size=0)


def test_cases_depend_only_on_seed_and_index() -> None:
    first = verify_equivalence("preprocess", seed=7, trials=4, size=4)
    second = verify_equivalence("preprocess", seed=7, trials=4, size=4)

    assert first.to_dict()["failures"] == second.to_dict()["failures"]
    assert case_seed(7, 3) == 7 * 1_000_003 + 3
    assert case_seed(7, 3) != case_seed(8, 3)


def test_failing_cases_write_repro_files_and_replay(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    _break_unanimous_check(monkeypatch)
    store = ArtifactStore(tmp_path)

    report = verify_equivalence("unanimous_vc", seed=3, trials=2, size=4, store=store)

    assert not report.ok
    assert [f.case for f in report.failures] == [0, 1]
    repro = report.failures[0].repro_path
    assert repro == tmp_path / "unanimous_vc-case0.json"
    payload = json.loads(repro.read_text(encoding="utf-8"))
    assert payload["check"] == "unanimous_vc"
    assert payload["case_seed"] == case_seed(3, 0)

    assert not replay(repro).ok
    monkeypatch.undo()
    replayed = replay(repro)
    assert replayed.ok
    assert replayed.campaign == "replay:unanimous_vc"
    assert replayed.cases == 1


def test_replay_rejects_foreign_files(tmp_path: Path) -> None:
    bogus = tmp_path / "bogus.json"
    bogus.write_text('{"check": "nope", "input": {}}', encoding="utf-8")
    with pytest.raises(ParseError, match="Unsupported check"):
        replay(bogus)

    bogus.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(ParseError, match="JSON object"):
        replay(bogus)

    with pytest.raises(InputError, match="cannot read"):
        replay(tmp_path / "missing.json")


def test_run_case_reports_malformed_payloads_as_failures() -> None:
    outcome = run_case("unanimous_vc", {"graph": {"n": -1}}, None)

    assert outcome.status == "failed"
    assert "ParseError" in outcome.problems[0]


def test_journal_records_every_case(tmp_path: Path) -> None:
    journal = CaseJournal(tmp_path, "equivalence-grid_vc")

    verify_equivalence("grid_vc", trials=3, size=5, journal=journal)

    entries = journal.entries()
    assert [e["case"] for e in entries] == [0, 1, 2]
    assert journal.counts() == {"passed": 3}
    assert journal.entries(limit=1)[0]["case"] == 2
    assert "seed" in entries[0]


def test_journal_skips_garbage_lines(tmp_path: Path) -> None:
    journal = CaseJournal(tmp_path, "demo")
    journal.append(0, "passed")
    with journal.path.open("a", encoding="utf-8") as f:
        f.write("not json\n\n")
    journal.append(1, "failed", code="x")

    assert journal.counts() == {"passed": 1, "failed": 1}


def test_gadget_properties_hold() -> None:
    report = verify_gadgets()

    assert report.ok, [f.message for f in report.failures]
    # five gadget properties, four chain lengths, three cherry instances
    assert report.cases == 12


def test_mod6_campaign_covers_every_length() -> None:
    report = verify_mod6(1000)

    assert report.ok
    assert report.cases == 999
    with pytest.raises(InputError, match="g_max"):
        verify_mod6(1)


def test_report_serialization() -> None:
    report = verify_mod6(10)

    data = report.to_dict()

    assert data["campaign"] == "mod6"
    assert data["ok"] is True
    assert data["cases"] == 9
    assert report.summary().startswith("mod6: PASS cases=9")
