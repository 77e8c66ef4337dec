import io
import json
import os
import subprocess
import sys

import jsonschema
import pytest

from ucycles.cli import JSON_SCHEMA, format_word, main, parse_word


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    status = main(argv)
    out, err = capsys.readouterr()
    return status, out, err


def test_gen_plain(capsys):
    status, out, _ = run(["gen", "--n", "3", "--word"], capsys)
    assert status == 0
    assert out == "7 8 6 1 3 2 4 5\n"
    assert run(["gen", "--n", "3", "--cycle"], capsys)[1] == "5 6 4 1 3 2\n"


def test_gen_trace_json(capsys):
    status, out, _ = run(["gen", "--n", "3", "--trace", "--format", "json"], capsys)
    doc = json.loads(out)
    jsonschema.validate(doc, JSON_SCHEMA)
    assert [t["i"] for t in doc["trace"]] == [1, 1, 2, 2, 3, 3]
    assert doc["trace"][0]["sigma"] is None


def test_verify_cycle_stdin(capsys, monkeypatch):
    status, out, _ = run(["verify", "--n", "3", "--cycle", "--input", "-"], capsys, "5 6 4 1 3 2", monkeypatch)
    assert status == 0
    doc = json.loads(out)
    jsonschema.validate(doc, JSON_SCHEMA)
    assert doc["verdict"] is True


def test_verify_false_exit_1(capsys, monkeypatch):
    status, out, _ = run(["verify", "--n", "3", "--input", "-"], capsys, "1 2 3 4 5", monkeypatch)
    assert status == 1
    doc = json.loads(out)
    assert doc["duplicated"] == [{"pattern": [1, 2, 3], "positions": [1, 2, 3]}]
    assert len(doc["missing"]) == 5


def test_verify_relabeled(capsys, monkeypatch):
    args = ["verify", "--n", "3", "--input", "-"]
    status, _, err = run(args, capsys, "5 6 4 1 3 2 4 5", monkeypatch)
    assert status == 2 and "repeated" in err
    status, _, _ = run(args + ["--relabeled"], capsys, "5 6 4 1 3 2 4 5", monkeypatch)
    assert status == 0


def test_verify_malformed_window(capsys, monkeypatch):
    status, _, err = run(["verify", "--n", "3", "--relabeled", "--input", "-"], capsys, "1 2 1 3", monkeypatch)
    assert status == 2 and "position 1" in err


def test_bad_input(capsys, monkeypatch, tmp_path):
    assert run(["verify", "--n", "3", "--input", "-"], capsys, "1 x 2", monkeypatch)[0] == 2
    assert run(["verify", "--n", "3", "--input", str(tmp_path / "nope")], capsys)[0] == 2


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen"])
    assert exc.value.code == 2


def test_max_n_guard(capsys, monkeypatch):
    assert run(["gen", "--n", "9"], capsys)[0] == 2
    monkeypatch.setenv("UCYCLE_MAX_N", "2")
    assert run(["gen", "--n", "3"], capsys)[0] == 2
    assert run(["gen", "--n", "3", "--max-n", "3"], capsys)[0] == 0


def test_debruijn(capsys):
    assert run(["debruijn", "--k", "3", "--len", "2"], capsys)[1] == "200102112\n"
    assert run(["debruijn", "--k", "3", "--len", "2", "--lyndon"], capsys)[1] == "001021122\n"
    out = run(["debruijn", "--k", "11", "--len", "1"], capsys)[1]
    assert out == " ".join(map(str, range(11))) + "\n"


def test_props(capsys, tmp_path):
    fig = tmp_path / "half.png"
    status, out, _ = run(["props", "--n", "4", "--figure", str(fig)], capsys)
    assert status == 0
    doc = json.loads(out)
    jsonschema.validate(doc, JSON_SCHEMA)
    assert all(doc["properties"]["flags"].values())
    assert doc["properties"]["sigma_mid"] == [4, 1, 2, 3]
    assert fig.stat().st_size > 0


def test_props_on_non_u_word(capsys, tmp_path):
    p = tmp_path / "w.txt"
    p.write_text("1 2 3 4 5 6 7 8\n")
    assert run(["props", "--n", "3", "--input", str(p)], capsys)[0] == 2


def test_alphabet(capsys, tmp_path):
    edges = tmp_path / "edges.txt"
    fig = tmp_path / "poset.png"
    status, out, _ = run(
        ["alphabet", "--n", "3", "--edges", str(edges), "--figure", str(fig)], capsys
    )
    doc = json.loads(out)
    jsonschema.validate(doc, JSON_SCHEMA)
    assert doc["height"] == 6
    assert doc["heights"] == [5, 6, 4, 1, 3, 2, 4, 5]
    lines = edges.read_text().splitlines()
    assert all(len(line.split()) == 2 for line in lines)
    assert fig.stat().st_size > 0
    assert run(["alphabet", "--n", "3", "--relabel", "--format", "plain"], capsys)[1] == "5 6 4 1 3 2 4 5\n"


def test_scan_starts(capsys):
    status, out, _ = run(["scan-starts", "--n", "3"], capsys)
    doc = json.loads(out)
    jsonschema.validate(doc, JSON_SCHEMA)
    assert [s["verdict"] for s in doc["starts"]] == [True, False]
    assert doc["starts"][1]["missing"] == [[1, 2, 3]]


def test_out_roundtrip(capsys, tmp_path):
    path = tmp_path / "pi7.txt"
    assert run(["gen", "--n", "7", "--out", str(path)], capsys)[0] == 0
    assert run(["verify", "--n", "7", "--input", str(path), "--format", "plain"], capsys)[1].startswith("true")


def test_gen_figure(capsys, tmp_path):
    fig = tmp_path / "w.png"
    assert run(["gen", "--n", "4", "--figure", str(fig)], capsys)[0] == 0
    assert fig.read_bytes()[:4] == b"\x89PNG"


def test_format_parse_roundtrip():
    w = (7, 8, 6, 1, 3, 2, 4, 5)
    assert parse_word(format_word(w)) == w
    assert parse_word("1,2, 3") == (1, 2, 3)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ucycles", "gen", "--n", "2"], capture_output=True, text=True, check=True
    )
    assert proc.stdout == "3 1 2\n"
