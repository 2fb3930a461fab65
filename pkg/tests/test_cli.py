import csv
import io
import json

import pytest

from circmd.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


def test_envelope_shape(capsys):
    code, payload = run_json(capsys, "dim", "--n", "13", "--t", "4")
    assert code == 0
    assert payload["command"] == "dim"
    assert payload["version"]
    assert payload["timing_seconds"] >= 0
    assert payload["result"]["dim"] == 5


def test_dim_formula_attaches_verifiable_basis(capsys):
    code, payload = run_json(capsys, "dim", "--n", "21", "--t", "4")
    assert code == 0
    result = payload["result"]
    assert result["method"] == "formula"
    basis = ",".join(str(v) for v in result["basis"])
    verify_code, verify_payload = run_json(
        capsys, "verify", "--n", "21", "--t", "4", "--set", basis)
    assert verify_code == 0
    assert verify_payload["result"]["resolving"] is True


def test_dim_search_method(capsys):
    code, payload = run_json(capsys, "dim", "--n", "13", "--t", "4",
                             "--method", "search")
    assert code == 0
    assert payload["result"]["method"] == "search"
    assert payload["result"]["dim"] == 5


def test_dim_formula_abstains_with_exit_1(capsys):
    code, payload = run_json(capsys, "dim", "--n", "8", "--t", "4",
                             "--method", "formula")
    assert code == 1
    assert "error" in payload["result"]


def test_dim_auto_falls_through_to_search_on_fringe(capsys):
    code, payload = run_json(capsys, "dim", "--n", "8", "--t", "4")
    assert code == 0
    assert payload["result"]["dim"] == 7


def test_verify_failure_exits_1_with_witness(capsys):
    code, payload = run_json(capsys, "verify", "--n", "10", "--t", "4",
                             "--set", "0,1,2,3")
    assert code == 1
    result = payload["result"]
    assert result["resolving"] is False
    assert result["witness_pair"] == [4, 9]
    reps = result["representations"]
    assert reps["4"] == reps["9"]


def test_duplicate_vertices_mod_n_are_usage_error(capsys):
    # the published 4-element witness for n = 19 contains 19 = 0 (mod 19)
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--n", "19", "--t", "4", "--set", "0,2,7,19"])
    assert exc.value.code == 2


def test_usage_error_on_bad_flags():
    with pytest.raises(SystemExit) as exc:
        main(["dim", "--n", "13"])
    assert exc.value.code == 2


def test_budget_exceeded_exits_3(capsys):
    code, payload = run_json(capsys, "dim", "--n", "30", "--t", "4",
                             "--method", "search", "--budget", "10")
    assert code == 3
    assert "budget" in payload["result"]["error"]


def test_table_formats_agree(capsys):
    args = ("table", "--t", "4", "--n-min", "10", "--n-max", "14")
    code, payload = run_json(capsys, *args, "--format", "json")
    assert code == 0
    rows = payload["result"]["rows"]

    code, out = run_cli(capsys, *args, "--format", "csv")
    assert code == 0
    csv_rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["n"]) for r in csv_rows] == [r["n"] for r in rows]
    assert [int(r["formula_dim"]) for r in csv_rows] == [r["formula_dim"] for r in rows]

    code, out = run_cli(capsys, *args, "--format", "md")
    assert code == 0
    assert out.startswith("| n |")
    assert len(out.strip().splitlines()) == len(rows) + 2


def test_table_check_marks_fringe_divergence(capsys):
    code, payload = run_json(capsys, "table", "--t", "4", "--n-min", "8",
                             "--n-max", "12", "--check")
    assert code == 0
    by_n = {r["n"]: r for r in payload["result"]["rows"]}
    assert by_n[8]["formula_dim"] is None
    assert by_n[8]["searched_dim"] == 7
    assert by_n[8]["note"]
    assert by_n[12]["agreement"] is True


def test_construct_surfaces_19_anomaly(capsys):
    code, payload = run_json(capsys, "construct", "--n", "19")
    assert code == 0
    result = payload["result"]
    assert result["verified"] and len(result["basis"]) == 4
    assert "collapses" in result["note"]


def test_check_lemmas_single_id(capsys):
    code, payload = run_json(capsys, "check-lemmas", "--id", "Obs-0123",
                             "--k-max", "1")
    assert code == 0
    reports = payload["result"]["descriptors"]
    assert len(reports) == 1
    assert reports[0]["counts"]["fail"] == 0
    assert reports[0]["failures"] == []


def test_check_lemmas_unknown_id_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["check-lemmas", "--id", "no-such-lemma"])
    assert exc.value.code == 2
