"""Corpus loading, the removal pipeline, report emission, and the CLI."""

import csv
import io
import json
import subprocess
import sys

import pytest

from addbasis.cli import main
from addbasis.corpus import (
    corpus_to_json,
    emit_report,
    gen_corpus,
    golden_corpus_path,
    load_corpus,
    run_corpus,
    run_entry,
    EntrySkip,
    REPORT_COLUMNS,
)
from addbasis.errors import ParseError, UnknownFormat, ValidationError

MICRO_ENTRY = {
    "name": "micro",
    "basis": {"exceptional": [0, 1], "threshold": 2, "modulus": 2, "residues": [0]},
    "remove": [2],
}


def write_corpus(tmp_path, entries, fname="corpus.json"):
    p = tmp_path / fname
    p.write_text(json.dumps({"entries": entries}), encoding="utf-8")
    return str(p)


def test_golden_corpus_loads():
    entries = load_corpus(golden_corpus_path())
    assert len(entries) >= 50
    assert len({e.name for e in entries}) == len(entries)
    assert all(e.window >= 512 for e in entries)


def test_golden_corpus_round_trips(tmp_path):
    entries = load_corpus(golden_corpus_path())
    p = tmp_path / "again.json"
    p.write_text(corpus_to_json(entries), encoding="utf-8")
    again = load_corpus(str(p))
    assert again == entries


def test_load_accepts_bare_list(tmp_path):
    p = tmp_path / "bare.json"
    p.write_text(json.dumps([MICRO_ENTRY]), encoding="utf-8")
    assert len(load_corpus(str(p))) == 1


def test_parse_errors(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json", encoding="utf-8")
    with pytest.raises(ParseError):
        load_corpus(str(p))
    with pytest.raises(ParseError):
        load_corpus(str(tmp_path / "missing.json"))

    cases = [
        {"entries": [17]},
        {"entries": [{"basis": MICRO_ENTRY["basis"], "remove": [2]}]},
        {"entries": [{"name": "x", "remove": [2]}]},
        {"entries": [{**MICRO_ENTRY, "basis": {**MICRO_ENTRY["basis"], "threshold": "2"}}]},
        {"entries": [{**MICRO_ENTRY, "remove": [True]}]},
        {"entries": [{**MICRO_ENTRY, "remove": 2}]},
        {"entries": [{**MICRO_ENTRY, "ap_flag": "yes"}]},
        {"entries": "nope"},
    ]
    for i, doc in enumerate(cases):
        q = tmp_path / f"parse{i}.json"
        q.write_text(json.dumps(doc), encoding="utf-8")
        with pytest.raises(ParseError):
            load_corpus(str(q))


def test_validation_errors(tmp_path):
    with pytest.raises(ValidationError, match="remove must list at least one"):
        load_corpus(write_corpus(tmp_path, [{**MICRO_ENTRY, "remove": []}], "v0.json"))
    with pytest.raises(ValidationError, match="removed element 3"):
        load_corpus(write_corpus(tmp_path, [{**MICRO_ENTRY, "remove": [3]}], "v1.json"))
    with pytest.raises(ValidationError, match="order_cap"):
        load_corpus(write_corpus(tmp_path, [{**MICRO_ENTRY, "order_cap": 0}], "v2.json"))
    with pytest.raises(ValidationError, match="window"):
        load_corpus(write_corpus(tmp_path, [{**MICRO_ENTRY, "window": 1}], "v3.json"))
    with pytest.raises(ValidationError, match="duplicate entry name"):
        load_corpus(write_corpus(tmp_path, [MICRO_ENTRY, MICRO_ENTRY], "v4.json"))
    with pytest.raises(ValidationError, match="arithmetic progression"):
        bad_flag = {**MICRO_ENTRY, "remove": [0, 1, 4], "ap_flag": True}
        load_corpus(write_corpus(tmp_path, [bad_flag], "v5.json"))
    with pytest.raises(ValidationError, match="bad basis literal"):
        hole = {**MICRO_ENTRY, "basis": {"exceptional": [1], "threshold": 0,
                                         "modulus": 2, "residues": [0]}}
        load_corpus(write_corpus(tmp_path, [hole], "v6.json"))
    with pytest.raises(ValidationError, match="bad basis literal"):
        badmod = {**MICRO_ENTRY, "basis": {"exceptional": [], "threshold": 0,
                                           "modulus": 0, "residues": [0]}}
        load_corpus(write_corpus(tmp_path, [badmod], "v7.json"))


def test_run_entry_micro(tmp_path):
    entries = load_corpus(write_corpus(tmp_path, [MICRO_ENTRY]))
    rep = run_entry(entries[0])
    assert rep.h == 2 and rep.exact == 2
    assert (rep.params.k, rep.params.d, rep.params.eta, rep.params.mu) == (1, 0, 1, 1)
    assert rep.decomposition_ok and rep.construction_ok
    assert rep.violations() == []
    assert rep.min_bound() == 5 and rep.min_slack() == 3


def test_run_entry_skips(tmp_path):
    finite = {"name": "finite",
              "basis": {"exceptional": [3, 5], "threshold": 6, "modulus": 1,
                        "residues": []},
              "remove": [3]}
    evens = {"name": "evens",
             "basis": {"exceptional": [], "threshold": 0, "modulus": 2,
                       "residues": [0]},
             "remove": [2]}
    capped = {"name": "capped",
              "basis": {"exceptional": [1], "threshold": 40, "modulus": 40,
                        "residues": [0]},
              "remove": [1], "order_cap": 5}
    entries = load_corpus(write_corpus(tmp_path, [finite, evens, capped]))
    results = {e.name: run_entry(e) for e in entries}
    assert isinstance(results["finite"], EntrySkip)
    assert "not a basis" in results["finite"].reason
    assert not results["finite"].cap_related
    assert "factor 2" in results["evens"].reason
    assert results["capped"].cap_related
    assert "cap 5" in results["capped"].reason


def test_emit_report_formats(tmp_path):
    entries = load_corpus(write_corpus(tmp_path, [MICRO_ENTRY]))
    reports, skips = run_corpus(entries)
    assert not skips

    text = emit_report(reports, "csv")
    lines = text.splitlines()
    assert lines[0] == ",".join(REPORT_COLUMNS)
    assert len(lines) == 2
    assert emit_report(reports, "csv") == text

    assert emit_report([], "csv") == ",".join(REPORT_COLUMNS) + "\n"

    md = emit_report(reports, "md")
    assert md.splitlines()[0].startswith("| name |")
    assert "---" in md.splitlines()[1]

    doc = json.loads(emit_report(reports, "json"))
    row = doc["reports"][0]
    assert list(row) == REPORT_COLUMNS
    csvrow = next(csv.DictReader(io.StringIO(text)))
    for col in REPORT_COLUMNS:
        if row[col] is None:
            assert csvrow[col] == ""
        elif col == "name":
            assert csvrow[col] == row[col]
        else:
            assert int(csvrow[col]) == row[col]

    with pytest.raises(UnknownFormat):
        emit_report(reports, "yaml")


def test_report_deterministic_under_input_order(tmp_path):
    entries = load_corpus(golden_corpus_path())[:6]
    fwd, _ = run_corpus(entries)
    rev, _ = run_corpus(list(reversed(entries)))
    assert emit_report(fwd, "csv") == emit_report(rev, "csv")


def test_cli_report_json(tmp_path, capsys):
    assert main(["report", str(golden_corpus_path()), "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["reports"]) >= 50


def test_cli_report_out_file(tmp_path, capsys):
    path = write_corpus(tmp_path, [MICRO_ENTRY])
    out = tmp_path / "rep.csv"
    assert main(["report", path, "--out", str(out)]) == 0
    assert out.read_text(encoding="utf-8").splitlines()[0] == ",".join(REPORT_COLUMNS)


def test_cli_analyze_micro(tmp_path, capsys):
    path = write_corpus(tmp_path, [MICRO_ENTRY])
    assert main(["analyze", path]) == 0
    out = capsys.readouterr().out
    assert "canonical:" in out and "order 2" in out


def test_cli_remove_micro(tmp_path, capsys):
    path = write_corpus(tmp_path, [MICRO_ENTRY])
    assert main(["remove", path]) == 0
    out = capsys.readouterr().out
    assert "h=2 exact=2 k=1 d=0 eta=1 mu=1" in out
    assert "decomposition ok, construction ok" in out
    assert "VIOLATIONS" not in out


def test_cli_bounds_micro(capsys):
    assert main(["bounds", "--h", "2", "--k", "1", "--d", "0",
                 "--eta", "1", "--mu", "1", "--ap"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "bound,value"
    assert lines[1:] == ["cor2,5", "farhi_d,5", "farhi_mu,5", "nash,5",
                         "farhi_eta,6"]


def test_cli_bounds_json(capsys):
    assert main(["bounds", "--h", "3", "--k", "2", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"nash": 16}


def test_cli_gen_deterministic(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert main(["gen", "--seed", "7", "--count", "3", "--out", str(a)]) == 0
    assert main(["gen", "--seed", "7", "--count", "3", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text(encoding="utf-8") == corpus_to_json(gen_corpus(7, 3))
    assert len(load_corpus(str(a))) == 3


def test_cli_verify_single_suite(capsys):
    assert main(["verify", "--suite", "bounds_identities"]) == 0
    out = capsys.readouterr().out
    assert "PASS bounds_identities" in out
    assert "1/1 suites passed" in out


def test_cli_kneser(capsys):
    assert main(["kneser", "--modulus", "6", "--exhaustive"]) == 0
    assert "0 violations" in capsys.readouterr().out
    assert main(["kneser", "--modulus", "5", "--samples", "200"]) == 0
    assert main(["kneser", "--modulus", "0"]) == 2
    assert main(["kneser", "--modulus", "20", "--exhaustive"]) == 2


def test_cli_exit_input_error(tmp_path, capsys):
    assert main(["report", str(tmp_path / "nope.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    assert main(["analyze", str(bad)]) == 2


def test_cli_exit_cap(tmp_path, capsys):
    capped = {"name": "capped",
              "basis": {"exceptional": [1], "threshold": 40, "modulus": 40,
                        "residues": [0]},
              "remove": [1], "order_cap": 5}
    path = write_corpus(tmp_path, [capped, MICRO_ENTRY])
    assert main(["report", path]) == 3
    err = capsys.readouterr().err
    assert "skipped capped" in err


def test_cli_cap_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("ADDBASIS_CAP", "1")
    path = write_corpus(tmp_path, [MICRO_ENTRY])
    assert main(["report", path]) == 3


def test_cli_subprocess_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "addbasis.cli", "report",
         str(golden_corpus_path()), "--format", "csv"],
        capture_output=True, text=True,
    )
    assert r.returncode == 0, r.stderr
    assert r.stdout.splitlines()[0] == ",".join(REPORT_COLUMNS)
