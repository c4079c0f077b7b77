import json

import pytest

from truthbench import artifacts
from truthbench.bridge.corpus import TransportMismatch, TransportReport
from truthbench.errors import ArtifactError, VersionMismatch
from truthbench.proofs import eliminate_cuts_with_stats
from truthbench.proofs.fixtures import by_name
from truthbench.reports import parse_report, render_machine, render_report, table
from truthbench.schemes import consistency_probe
from truthbench.truth import verify_ct


def test_envelope_round_trip(tmp_path):
    payload = {"a": [1, 2, 3], "b": "x"}
    path = tmp_path / "x.json"
    artifacts.write(path, "report", payload)
    assert artifacts.read(path, "report") == payload
    doc = json.loads(path.read_text())
    assert doc["format"] == "truthbench" and doc["version"] == artifacts.VERSION
    assert doc["digest"] == artifacts.digest(payload)


def test_envelope_checks():
    text = artifacts.dumps("proof", {"goal": "(in (c 0) (c 1))"})
    with pytest.raises(ArtifactError):
        artifacts.loads(text, "tower")
    doc = json.loads(text)
    doc["payload"]["goal"] = "(in (c 1) (c 0))"
    with pytest.raises(ArtifactError):
        artifacts.loads(json.dumps(doc))
    doc = json.loads(text)
    doc["version"] = 99
    with pytest.raises(VersionMismatch):
        artifacts.loads(json.dumps(doc))
    with pytest.raises(ArtifactError):
        artifacts.loads("[1, 2]")
    with pytest.raises(ArtifactError):
        artifacts.dumps("picture", {})


def test_reports_round_trip_through_json(tower6):
    reports = [
        verify_ct(tower6, budget_nodes=4),
        eliminate_cuts_with_stats(by_name("stacked-cuts").proof)[1],
        consistency_probe(size=4),
        TransportReport("x", "y", 2, 1, [TransportMismatch("(= v0 v0)", True, False)]),
    ]
    for rep in reports:
        text, machine = render_report(rep)
        assert isinstance(text, str) and text
        assert parse_report(machine) == rep


def test_big_integers_survive_json():
    stats = eliminate_cuts_with_stats(by_name("modus-ponens").proof)[1]
    again = parse_report(render_machine(stats))
    assert again.supexp_curve == stats.supexp_curve


def test_table_layout():
    out = table([(1, "a"), (22, "bb")], ["n", "name"])
    lines = out.splitlines()
    assert lines[0].split() == ["n", "name"]
    assert len(lines) == 4
