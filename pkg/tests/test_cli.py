from __future__ import annotations

import json

import pytest

from eigenperm import parse_pattern, parse_perm_list
from eigenperm.cli import main, run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_seq_eigen_plain(capsys):
    code, out, err = invoke(capsys, "seq", "eigen", "--n", "7")
    assert (code, err) == (0, "")
    assert out == "1 1 2 6 23 104 531\n"


def test_seq_variants(capsys):
    expected = {
        "a": "1 2 6 23 104",
        "catalan": "1 2 5 14 42",
        "bell": "1 2 5 15 52",
        "a051295": "1 2 5 15 54",
        "new4": "1 2 5 15 55",
    }
    for name, line in expected.items():
        code, out, err = invoke(capsys, "seq", name, "--n", "5")
        assert (code, out, err) == (0, line + "\n", "")


def test_seq_bfile_format(capsys):
    code, out, _ = invoke(capsys, "seq", "eigen", "--n", "4", "--bfile")
    assert code == 0
    assert out == "1 1\n2 1\n3 2\n4 6\n"


def test_seq_json_records(capsys):
    code, out, _ = invoke(capsys, "seq", "bell", "--n", "3", "--json")
    assert code == 0
    assert json.loads(out) == [
        {"n": 1, "value": 1}, {"n": 2, "value": 2}, {"n": 3, "value": 5},
    ]


def test_seq_rejects_bad_n(capsys):
    code, out, err = invoke(capsys, "seq", "eigen", "--n", "0")
    assert code == 2 and out == "" and "invalid input" in err


def test_count_brute_and_fast_agree(capsys):
    code, out, _ = invoke(capsys, "count", "--pattern", "3(5)241", "--n", "4")
    assert (code, out) == (0, "23\n")
    code, out, _ = invoke(
        capsys, "count", "--pattern", "3(5)241", "--n", "9", "--fast"
    )
    assert (code, out) == (0, "117545\n")
    code, out, _ = invoke(
        capsys, "count", "--pattern", "32(4)1", "--n", "5", "--brute"
    )
    assert (code, out) == (0, "52\n")


def test_count_fast_needs_supported_pattern(capsys):
    code, out, err = invoke(
        capsys, "count", "--pattern", "32(4)1", "--n", "5", "--fast"
    )
    assert code == 2 and out == ""
    assert "no fast counting route" in err


def test_count_census_limit(capsys):
    code, out, err = invoke(capsys, "count", "--pattern", "3(5)241", "--n", "12")
    assert code == 3 and out == ""
    assert "limit exceeded" in err


def test_count_malformed_pattern(capsys):
    code, out, err = invoke(capsys, "count", "--pattern", "34(2)", "--n", "3")
    assert code == 2 and "invalid input" in err


def test_classify4_json_round_trips(capsys):
    code, out, err = invoke(capsys, "classify4", "--max-n", "5", "--json")
    assert (code, err) == (0, "")
    records = json.loads(out)
    assert len(records) == 16
    assert sum(len(r["members"]) for r in records) == 96
    for r in records:
        parse_pattern(r["representative"])
        assert r["label"] in {"catalan", "bell", "a051295", "new4"}
        assert isinstance(r["trivial"], bool)
        assert len(r["counts"]) == 6
        for member in r["members"]:
            parse_pattern(member)


def test_classify4_table(capsys):
    code, out, err = invoke(capsys, "classify4", "--max-n", "4")
    assert code == 0
    assert "16 orbits" in out and "64 trivial" in out


def test_biject_round_trip(capsys):
    code, out, _ = invoke(
        capsys, "biject", "forward", "--input", "5 1 2 8^ 3 6 4 9^ 7 10"
    )
    assert code == 0
    items = parse_perm_list(out.strip())
    assert len(items) == 3
    code, back, _ = invoke(capsys, "biject", "inverse", "--input", out.strip())
    assert code == 0
    assert back.strip() == "5 1 2 8^ 3 6 4 9^ 7 10"


def test_biject_rejects_bad_text(capsys):
    code, _, err = invoke(capsys, "biject", "forward", "--input", "1 2 x")
    assert code == 2 and "invalid input" in err
    code, _, err = invoke(capsys, "biject", "inverse", "--input", "2 1 /")
    assert code == 2 and "invalid input" in err


def test_eigen_round_trip(capsys):
    code, out, _ = invoke(capsys, "eigen", "decompose", "--input", "4 1 3 2 5 7 6")
    assert code == 0
    code, back, _ = invoke(capsys, "eigen", "compose", "--input", out.strip())
    assert code == 0
    assert back.strip() == "4 1 3 2 5 7 6"


def test_eigen_compose_needs_semicolon(capsys):
    code, _, err = invoke(capsys, "eigen", "compose", "--input", "1 2 3")
    assert code == 2 and "invalid input" in err


def test_verify_suite_passes(capsys):
    code, out, err = invoke(capsys, "verify", "--suite", "recurrences", "--max-n", "6")
    assert (code, err) == (0, "")
    lines = out.strip().splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_unknown_flag_exits_nonzero(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["seq", "eigen", "--n", "3", "--frobnicate"])
    assert exc.value.code == 2
    assert "frobnicate" in capsys.readouterr().err


def test_main_wraps_run(capsys):
    assert main(["seq", "eigen", "--n", "1"]) == 0
    assert capsys.readouterr().out == "1\n"
