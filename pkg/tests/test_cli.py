import json
import shutil

import pytest

from curvekit.cli import main
from curvekit.data import data_dir

import worlds


@pytest.fixture()
def sandbox(tmp_path, monkeypatch, capsys):
    """A private copy of the data tree, so cache writes stay in the test."""
    root = tmp_path / "data"
    shutil.copytree(data_dir(), root)
    monkeypatch.setenv("CURVEKIT_DATA_DIR", str(root))

    def run(*argv):
        code = main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err

    return run


def test_enumerate_text_output_lists_ids_and_weights(sandbox):
    code, out, err = sandbox("enumerate", "--surface", "S0_5", "--bound", "6",
                             "--format", "text")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == len(worlds.universe("S0_5", 6))
    assert lines[0].split()[0] == "0"
    assert err.strip() == "count %d" % len(lines)


def test_enumerate_json_output_round_trips(sandbox):
    code, out, _ = sandbox("enumerate", "--surface", "S1_2", "--bound", "6")
    assert code == 0
    lines = out.strip().split("\n")
    header = json.loads(lines[0])
    assert header["format"] == "curve-universe"
    assert header["count"] == len(lines) - 1
    first = json.loads(lines[1])
    assert first["id"] == 0


def test_enumerate_is_deterministic_across_reruns_and_workers(sandbox):
    outputs = set()
    for workers in ("1", "1", "2", "3"):
        _, out, _ = sandbox("enumerate", "--surface", "S0_6", "--bound", "8",
                            "--workers", workers)
        outputs.add(out)
    assert len(outputs) == 1


def test_enumerate_writes_the_universe_cache(sandbox, tmp_path):
    sandbox("enumerate", "--surface", "S0_5", "--bound", "6")
    cache = tmp_path / "data" / "universes" / "S0_5_L6.jsonl"
    assert cache.exists()


def test_enumerate_dot_output_is_a_graph(sandbox):
    _, out, _ = sandbox("enumerate", "--surface", "S0_4", "--bound", "4",
                        "--format", "dot")
    assert out.startswith("graph S0_4 {")
    assert out.rstrip().endswith("}")


def test_out_flag_redirects_stdout(sandbox, tmp_path):
    target = tmp_path / "u.jsonl"
    code, out, _ = sandbox("enumerate", "--surface", "S0_5", "--bound", "6",
                           "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.exists() and target.read_text().strip()


def test_explicit_triangulation_path_needs_a_bound(sandbox, tmp_path):
    source = tmp_path / "data" / "triangulations" / "S0_5.json"
    code, out, _ = sandbox("enumerate", "--triangulation", str(source),
                           "--bound", "6", "--format", "text")
    assert code == 0
    assert len(out.strip().split("\n")) == len(worlds.universe("S0_5", 6))
    with pytest.raises(SystemExit) as err:
        sandbox("enumerate", "--triangulation", str(source))
    assert err.value.code == 2


def test_classify_requires_an_enumerated_cache(sandbox):
    with pytest.raises(SystemExit) as err:
        sandbox("classify", "--surface", "S0_5", "--bound", "7")
    assert err.value.code == 2


def test_classify_reports_agreement_everywhere(sandbox):
    sandbox("enumerate", "--surface", "S0_5", "--bound", "8")
    code, out, _ = sandbox("classify", "--surface", "S0_5", "--bound", "8")
    assert code == 0
    doc = json.loads(out)
    assert doc["surface"] == "S0_5" and doc["bound"] == 8
    assert len(doc["rows"]) == len(worlds.universe("S0_5", 8))
    for row in doc["rows"]:
        assert row["agreement"] in (True, None)
    code, text, _ = sandbox("classify", "--surface", "S0_5", "--bound", "8",
                            "--format", "text")
    assert code == 0
    assert "NO" not in text


def test_verify_single_surface_passes(sandbox):
    code, out, err = sandbox("verify", "--surface", "S1_2")
    assert code == 0
    doc = json.loads(out)
    assert all(r["status"] == "pass" for r in doc["records"])
    assert err.strip().startswith("verify:")


def test_verify_everything_twice_is_byte_identical(sandbox):
    code1, out1, _ = sandbox("verify", "--all")
    code2, out2, _ = sandbox("verify", "--all")
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_raw_fixture_reports_designed_violations(sandbox):
    code, out, _ = sandbox("verify", "--fixture", "edge_swap_S0_6")
    assert code == 1
    doc = json.loads(out)
    (record,) = doc["records"]
    assert record["status"] == "fail"
    assert record["details"][0] == "edge-preservation"


def test_usage_errors_exit_with_code_two(sandbox):
    for argv in (("enumerate",),
                 ("enumerate", "--surface", "S9_9"),
                 ("enumerate", "--surface", "S0_5", "--bound", "0"),
                 ("verify", "--surface", "X"),
                 ("verify", "--fixture", "no_such_fixture")):
        with pytest.raises(SystemExit) as err:
            sandbox(*argv)
        assert err.value.code == 2
