import io
import json
import shutil
import subprocess

import pytest

from truthbench.cli import run


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def workdir(tmp_path_factory):
    d = tmp_path_factory.mktemp("cli")
    assert cli("truth", "build", "--domain", "rank:4", "--depth", "6", "--out", str(d / "tower.json"))[0] == 0
    assert cli("proof", "fixtures", "--out", str(d / "fx"))[0] == 0
    assert cli("schemes", "samples", "--out", str(d / "s"))[0] == 0
    return d


def test_hf_commands():
    assert cli("hf", "encode", "{{},{{}}}")[:2] == (0, "3\n")
    assert cli("hf", "decode", "11")[1] == "{{},{{}},{{},{{}}}}\n"
    assert cli("hf", "rank", "11")[1] == "3\n"
    assert cli("hf", "tc", "4")[1] == "7\n"


def test_eval_exit_codes():
    assert cli("eval", "--domain", "rank:3", "(in (c 0) (c 1))")[:2] == (0, "true\n")
    assert cli("eval", "(in (c 1) (c 0))")[:2] == (1, "false\n")
    assert cli("eval", "--term", "(* (num 2) (num 3))")[1] == "6\n"
    assert cli("eval", "--arith", "8", "(forall v0 (not (= (S v0) (num 0))))")[0] == 0


def test_error_exit_codes(workdir):
    assert cli("frob")[0] == 4
    assert cli("hf", "zap", "1")[0] == 4
    assert cli("eval", "(in (c 0)")[0] == 7
    assert cli("eval", "(in (num 0) v0)")[0] == 7
    assert cli("eval", "(in (c 0) (c 99))")[0] == 3
    assert cli("proof", "check", str(workdir / "missing.json"))[0] == 5
    assert cli("proof", "search", "--goal", "(in (c 0) (c 1))", "--size", "99")[0] == 8
    assert cli("hf", "decode")[0] == 3


def test_corrupted_and_versioned_artifacts(workdir):
    src = workdir / "fx" / "modus-ponens.json"
    doc = json.loads(src.read_text())
    doc["payload"]["goal"] = "(in (c 1) (c 3))"
    (workdir / "tampered.json").write_text(json.dumps(doc))
    assert cli("proof", "check", str(workdir / "tampered.json"))[0] == 5
    doc = json.loads(src.read_text())
    doc["version"] = 2
    (workdir / "v2.json").write_text(json.dumps(doc))
    assert cli("proof", "check", str(workdir / "v2.json"))[0] == 6
    (workdir / "cut.json").write_text(src.read_text()[:100])
    assert cli("proof", "check", str(workdir / "cut.json"))[0] >= 3


def test_truth_commands(workdir):
    tower = str(workdir / "tower.json")
    assert cli("truth", "query", tower, "(exists v0 (in v0 (c 1)))")[0] == 0
    assert cli("truth", "query", tower, "(in (c 1) (c 0))")[0] == 1
    assert cli("truth", "verify-ct", tower, "--nodes", "5")[0] == 0
    assert cli("truth", "faces", tower)[0] == 0
    assert cli("truth", "defset", tower, "(in (c 0) v0)")[1].split() == [str(a) for a in range(1, 16, 2)]
    code, out, _ = cli("truth", "verify-ct", tower, "--nodes", "4", "--json")
    assert code == 0 and json.loads(out)["type"] == "CtReport"


def test_report_out_file(workdir):
    tower = str(workdir / "tower.json")
    dest = workdir / "ct.json"
    assert cli("truth", "verify-ct", tower, "--nodes", "4", "--out", str(dest))[0] == 0
    doc = json.loads(dest.read_text())
    assert doc["kind"] == "report" and doc["payload"]["type"] == "CtReport"


def test_proof_commands(workdir):
    fx = workdir / "fx"
    assert cli("proof", "check", str(fx / "exists-cut.json"))[0] == 0
    out = workdir / "ce.json"
    code, text, _ = cli("proof", "cutelim", str(fx / "exists-cut.json"), "--stats", "--out", str(out))
    assert code == 0 and "supexp" in text
    code, text, _ = cli("proof", "check", str(out))
    assert code == 0 and "0 cuts" in text
    phi = workdir / "phi.txt"
    phi.write_text("; two premises\n(in (c 0) (c 1))\n(imp (in (c 0) (c 1)) (in (c 1) (c 2)))\n")
    assert cli("proof", "search", "--phi", str(phi), "--goal", "(in (c 1) (c 2))", "--size", "8")[0] == 0
    assert cli("proof", "search", "--phi", str(phi), "--goal", "(in (c 1) (c 3))", "--size", "6")[0] == 1


def test_schemes_commands(workdir):
    s = workdir / "s"
    assert cli("schemes", "repl", "(= v1 v0)")[0] == 0
    assert cli("schemes", "repl", "(= v0 v0)")[0] == 3
    assert cli("schemes", "ind", "(= (+ v0 (num 0)) v0)")[0] == 0
    assert cli("schemes", "ref", "--theory", str(s / "theory-PA-fragment.json"))[0] == 0
    code, out, _ = cli("schemes", "ref", "--theory", str(s / "theory-BAD.json"))
    assert code == 2 and "fail" in out
    phi = workdir / "ax.txt"
    phi.write_text("(forall v0 (= v0 v0))\n")
    code, out, _ = cli("proof", "search", "--phi", str(s / "theory-ID.json"), "--goal", "(= (num 2) (num 2))", "--size", "6")
    assert code == 0


def test_global_flags_before_or_after_the_command():
    assert cli("--seed", "3", "hf", "rank", "3")[0] == 0
    assert cli("hf", "rank", "3", "--seed", "3")[0] == 0


@pytest.mark.skipif(shutil.which("truthbench") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["truthbench", "eval", "--domain", "rank:3", "(in (c 0) (c 1))"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "true"
    proc = subprocess.run(["truthbench", "nope"], capture_output=True, text=True)
    assert proc.returncode == 4
