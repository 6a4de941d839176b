import json

from sameorder import export, symmetric
from sameorder.cli import cli_dispatch


def test_tau_command(capsys):
    assert cli_dispatch(["tau", "Sym(3)"]) == 0
    out = capsys.readouterr().out
    assert "order 6" in out
    assert "same-order type: {1, 2, 3}" in out
    assert "ratio 1" in out


def test_tau_non_progression(capsys):
    assert cli_dispatch(["tau", "C(8)"]) == 0
    out = capsys.readouterr().out
    assert "arithmetic progression: no" in out


def test_info_command(capsys):
    assert cli_dispatch(["info", "Q(8)"]) == 0
    out = capsys.readouterr().out
    assert "nilpotent: yes" in out
    assert "p-group: yes (p = 2)" in out
    assert "involutions: 1" in out


def test_usage_errors_exit_two(capsys):
    assert cli_dispatch(["tau", "Q(12)"]) == 2
    assert cli_dispatch(["tau", "C(7 x"]) == 2
    assert cli_dispatch(["nonsense"]) == 2
    assert cli_dispatch([]) == 2
    assert cli_dispatch(["verify", "--suite", "bogus"]) == 2
    assert cli_dispatch(["verify", "--max-order", "4096"]) == 2
    capsys.readouterr()


def test_verify_writes_deterministic_json(tmp_path, capsys):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    assert cli_dispatch(["verify", "--suite", "audit", "--max-order", "32", "--json", str(first)]) == 0
    assert cli_dispatch(["verify", "--suite", "audit", "--max-order", "32", "--json", str(second)]) == 0
    out = capsys.readouterr().out
    assert "suite audit" in out and "0 failure(s)" in out
    a = json.loads(first.read_text())
    b = json.loads(second.read_text())
    assert set(a) == {"suite", "groupsChecked", "findings", "failures", "wallTimeMs"}
    a.pop("wallTimeMs"), b.pop("wallTimeMs")
    assert a == b
    assert a["failures"] == []
    assert a["groupsChecked"] == len(a["findings"])


def test_verify_all_exits_zero_at_256(capsys):
    assert cli_dispatch(["verify", "--suite", "all", "--max-order", "256"]) == 0
    out = capsys.readouterr().out
    assert "0 failure(s)" in out


def test_search_finds_no_four_term_progressions(capsys):
    assert cli_dispatch(["search", "--max-order", "64", "--tau-size", "4", "--ap"]) == 0
    out = capsys.readouterr().out
    assert "0 group(s) matched" in out


def test_search_lists_matches(capsys):
    assert cli_dispatch(["search", "--max-order", "32", "--tau-size", "3", "--ap"]) == 0
    out = capsys.readouterr().out
    assert "Sym(3)" in out and "Hol(8)" in out
    assert "AP ratio" in out


def test_ingest_and_reexport(tmp_path, capsys):
    src = tmp_path / "s3.txt"
    dst = tmp_path / "copy.txt"
    export(symmetric(3), src)
    assert cli_dispatch(["ingest", str(src), "--export", str(dst)]) == 0
    out = capsys.readouterr().out
    assert "same-order type: {1, 2, 3}" in out
    assert dst.read_bytes() == src.read_bytes()


def test_ingest_rejects_bad_file(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("3\n0 1 2\n")
    assert cli_dispatch(["ingest", str(path)]) == 2
    err = capsys.readouterr().err
    assert "error:" in err
