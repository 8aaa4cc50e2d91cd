import pytest

from pmspec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eta_command(capsys):
    code, out, _ = run(capsys, "eta", "--partition", "3+2+1")
    assert code == 0
    assert "eta: -14" in out and "f: 14" in out and "sign-pattern: ok" in out


def test_eta_empty_partition(capsys):
    code, out, _ = run(capsys, "eta", "--partition", "0")
    assert code == 0 and "eta: 1" in out


def test_eta_parse_error(capsys):
    code, _, err = run(capsys, "eta", "--partition", "2+3")
    assert code == 2 and "error" in err


def test_xi_command(capsys):
    code, out, _ = run(capsys, "xi", "--partition", "2+1")
    assert code == 0 and "xi: -1" in out


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--n", "3", "--family", "pm", "--format", "csv")
    assert code == 0
    assert out.splitlines() == [
        "partition,eigenvalue,multiplicity",
        "3,8,1",
        "2+1,-2,9",
        "1+1+1,2,5",
    ]
    code, out, _ = run(capsys, "table", "--n", "3", "--family", "sym", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == ["3,2,1", "2+1,-1,4", "1+1+1,2,1"]


def test_table_rejects_bad_n(capsys):
    code, _, err = run(capsys, "table", "--n", "0", "--family", "pm", "--format", "csv")
    assert code == 2


def test_verify_pass_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dualpath", "--n-max", "8", "--format", "json")
    assert code == 0 and '"failure_count":0' in out
    code, _, err = run(capsys, "verify", "--suite", "signs", "--n-max", "1")
    assert code == 2


def test_verify_unknown_suite_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus", "--n-max", "5"])
    assert exc.value.code == 2


def test_verify_json_deterministic(capsys):
    args = ("verify", "--suite", "thm6", "--n-max", "7", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "--family", "pm", "--n", "4")
    assert code == 0 and "PASS" in out and "105 vertices" in out
    code, out, _ = run(capsys, "oracle", "--family", "sym", "--n", "5")
    assert code == 0 and "120 vertices" in out


def test_oracle_cap_refusal(capsys):
    code, _, err = run(capsys, "oracle", "--family", "pm", "--n", "9")
    assert code == 2 and "cap" in err


def test_scan_command(capsys):
    code, out, _ = run(capsys, "scan", "--n-max", "8")
    assert code == 0 and "0 violations" in out


def test_scan_progress_goes_to_stderr(capsys):
    code, out, err = run(capsys, "scan", "--n-max", "6", "--progress")
    assert code == 0
    assert "finished n=6" in err and "finished" not in out
