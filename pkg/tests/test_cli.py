import json

import pytest

from bchbound import cli, tables


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cosets_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "cosets", "--n", "21", "--q", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["a_set"] == [1, 5]
    assert payload["order"] == 6
    assert payload["representatives"] == [0, 1, 3, 5, 7, 9]
    # parse -> re-emit -> byte equality
    assert json.dumps(payload, indent=2, sort_keys=True) + "\n" == out


def test_factor_text(capsys):
    code, out, _ = run_cli(capsys, "factor", "--n", "15", "--q", "2",
                           "--field-poly", "4,1,0")
    assert code == 0
    assert "5 irreducible factors" in out


def test_factor_json_echoes_field_poly(capsys):
    code, out, _ = run_cli(capsys, "factor", "--n", "15", "--q", "2",
                           "--field-poly", "4,1,0", "--json")
    payload = json.loads(out)
    assert payload["field_poly"] == [4, 1, 0]
    assert payload["alpha"] == {"min_poly": [4, 1, 0]}
    assert len(payload["factors"]) == 5


def test_analyze_remark_n41(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--n", "41", "--q", "2",
                           "--defining-set", "coset:1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["bch_bound"] == 6
    assert payload["optimal_reps"] == [3]
    assert payload["dimension"] == 21


def test_analyze_certify(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--n", "21", "--q", "2",
                           "--defining-set", "coset:1,3,7", "--certify",
                           "--json")
    payload = json.loads(out)
    assert payload["bch_bound"] == 5
    assert payload["bose_distance"] == 4
    assert payload["certificate"] is not None


def test_analyze_rejects_open_set(capsys):
    code, _, err = run_cli(capsys, "analyze", "--n", "21", "--q", "2",
                           "--defining-set", "1,2")
    assert code == cli.EXIT_COMPUTE
    assert "NotCosetClosed" in err


def test_mindist(capsys):
    code, out, _ = run_cli(capsys, "mindist", "--n", "15", "--q", "2",
                           "--defining-set", "coset:1,3", "--json")
    payload = json.loads(out)
    assert payload["dimension"] == 7
    assert payload["min_distance"] == 5
    assert payload["exhaustive"] is True


def test_forge_divisor(capsys):
    code, out, _ = run_cli(capsys, "forge", "--n", "15", "--q", "2",
                           "--field-poly", "4,1,0", "--mode", "divisor",
                           "--quotient", "5", "--verify", "--json")
    payload = json.loads(out)
    rec = payload["records"][0]
    assert rec["dimension"] == 10
    assert rec["bch_bound"] == 2
    assert rec["generator_word"] == [5, 10]
    assert rec["verified"] is True
    assert rec["min_distance"] == 2


def test_forge_primitive(capsys):
    code, out, _ = run_cli(capsys, "forge", "--n", "15", "--q", "2",
                           "--mode", "primitive", "--json")
    payload = json.loads(out)
    assert len(payload["records"]) == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["analyze", "--n", "21"])
    assert excinfo.value.code == cli.EXIT_USAGE
    capsys.readouterr()


def test_reproduce_all_tables(capsys):
    for table in tables.TABLE_IDS:
        code, out, _ = run_cli(capsys, "reproduce", table)
        assert code == 0, f"{table} mismatched:\n{out}"
        assert "0 mismatch(es)" in out


def test_reproduce_emit_csv_matches_golden(capsys):
    code, out, _ = run_cli(capsys, "reproduce", "n45", "--emit", "csv")
    assert code == 0
    golden = tables.golden_rows("n45")
    lines = [ln for ln in out.splitlines() if ln and not ln.startswith("#")]
    assert len(lines) == len(golden) + 1  # header plus one line per row


def test_reproduce_emit_json(capsys):
    code, out, _ = run_cli(capsys, "reproduce", "n33", "--emit", "json")
    payload = json.loads(out)
    assert [r["dimension"] for r in payload] == [11, 23]
    assert json.dumps(payload, indent=2, sort_keys=True) + "\n" == out


def test_unknown_table_is_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["reproduce", "nope"])
    assert excinfo.value.code == cli.EXIT_USAGE
    capsys.readouterr()
