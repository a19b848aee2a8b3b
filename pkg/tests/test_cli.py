# -*- coding: utf-8 -*-
import json

from core.complexes import koszul
from core.serialization import complex_to_json, dumps

# ----- #
# Verdicts and exit codes
# ----- #


def test_accepted_sequence(run_cli):
    code, payload, _ = run_cli("rs-check", "--m", 4, "--r", "1,4,4,1,0")
    assert code == 0
    assert payload == {"m": 4, "rank_sequence": [1, 4, 4, 1, 0], "verdict": "accepted"}


def test_rejected_sequence(run_cli):
    code, payload, _ = run_cli("rs-check", "--m", 3, "--r", "1,2,2,0")
    assert code == 1
    assert payload["verdict"] == "rejected"


def test_filter_rules_out(run_cli, contains):
    code, payload, _ = run_cli("en-filter", "--n", 3, "--d", 2, "--r", "1,5,5,3")
    assert code == 1
    contains(payload, {"verdict": "ruled-out", "reason": "sumset non-member", "n": 3, "d": 2})
    code, payload, _ = run_cli("en-filter", "--p", 2, "--q", 4, "--r", "1,5,5,3")
    assert code == 1
    contains(payload, {"verdict": "ruled-out", "p": 2, "q": 4})


def test_sumset_non_member(run_cli):
    code, payload, _ = run_cli("sumset", "--spec", "3x2,2x1,1x0", "--r", "5,5,3")
    assert code == 1
    assert payload["verdict"] == "non-member"


def test_budget_exhaustion_is_inconclusive(run_cli):
    code, payload, _ = run_cli("oracle-sub", "--koszul", 4, "--r", "1,2,3,2", "--budget", 5)
    assert code == 3
    assert payload["error"] == "BudgetExceededError"
    assert payload["advice"]


def test_input_errors(run_cli, tmp_path):
    code, payload, _ = run_cli("en-filter", "--n", 3, "--p", 2, "--r", "1")
    assert code == 2 and payload["error"] == "InvalidInputError"
    code, payload, _ = run_cli("no-such-command")
    assert code == 2 and payload["error"] == "InvalidInputError"
    code, payload, _ = run_cli("rs-check", "--m", 2, "--r", "1,a")
    assert code == 2 and payload["error"] == "InvalidInputError"
    code, payload, _ = run_cli("oracle-hf", "--nnd", "2,2", "--field", "QQ")
    assert code == 2 and payload["error"] == "FieldError"
    assert (tmp_path / "logs" / "errors.log").exists()


# ----- #
# Files and determinism
# ----- #


def test_verify_reads_a_complex_file(run_cli, tmp_path):
    path = tmp_path / "k0.json"
    path.write_text(dumps(complex_to_json(koszul(0))), encoding="utf-8")
    code, payload, _ = run_cli("verify", "--complex", path)
    assert code == 0
    assert payload["verified"] is True
    assert payload["ranks"] == [1]


def test_json_out_matches_stdout(run_cli, tmp_path):
    target = tmp_path / "out" / "k2.json"
    code, _, out = run_cli("koszul", "--n", 2, "--json-out", target)
    assert code == 0
    assert target.read_text(encoding="utf-8") == out


def test_same_arguments_same_bytes(run_cli):
    first = run_cli("en-filter", "--n", 3, "--d", 2, "--r", "1,3,6,3")[2]
    second = run_cli("en-filter", "--n", 3, "--d", 2, "--r", "1,3,6,3")[2]
    assert first == second
    assert json.loads(first)["verdict"] == "possibly-admissible"


# ----- #
# Fields
# ----- #


def test_field_flag_and_environment(run_cli, monkeypatch):
    assert run_cli("koszul", "--n", 2)[1]["field"] == "QQ"
    assert run_cli("koszul", "--n", 2, "--field", "GF(3)")[1]["field"] == "GF(3)"
    monkeypatch.setenv("SUBRANKS_FIELD", "GF(5)")
    assert run_cli("koszul", "--n", 2)[1]["field"] == "GF(5)"


def test_config_file_is_read(run_cli, tmp_path):
    cfg = tmp_path / "custom.json"
    cfg.write_text(json.dumps({"oracle": {"budget": 3}}), encoding="utf-8")
    code, payload, _ = run_cli("--config", cfg, "oracle-sub", "--koszul", 3, "--r", "1,2,1,0")
    assert code == 3
    assert payload["error"] == "BudgetExceededError"


# ----- #
# Smaller subcommands
# ----- #


def test_macaulay(run_cli):
    assert run_cli("macaulay", "--a", 5, "--i", 2)[1] == {"a": 5, "i": 2, "expansion": [3, 2], "shift": 2}
    assert run_cli("macaulay", "--a", 0, "--i", 2)[1]["shift"] == 0


def test_rs_list(run_cli):
    code, payload, _ = run_cli("rs-list", "--m", 2)
    assert code == 0 and payload["count"] == 5


def test_weights(run_cli):
    payload = run_cli("weights", "--n", 3, "--d", 2)[1]
    assert payload["text"] == "3*RS(K_2) + 2*RS(K_1) + 1*RS(K_0)"
    assert payload["capacity"] == [6, 8, 3]


def test_bgg_commands(run_cli, contains):
    code, payload, _ = run_cli("bgg-r", "--n", 2, "--lo", 0, "--hi", 2)
    assert code == 0 and payload["composites_vanish"] is True
    code, payload, _ = run_cli("tate-n", "--n", 2, "--d", 2)
    assert code == 0 and payload["hilbert_function"] == [2, 3, 0]
    code, payload, _ = run_cli("bgg-l", "--quotient", "3,1", "--twist", -1)
    assert code == 0
    contains(payload, {"start": 0, "ranks": [1, 1]})
    code, payload, _ = run_cli("bgg-l", "--quotient", "3,1")
    assert code == 0
    contains(payload, {"start": -1, "rank_sequence_origin": -1, "rank_sequence": [1, 1]})


def test_complex_constructors(run_cli, contains):
    code, payload, _ = run_cli("koszul-gen", "--forms", "x1^2,x2^3", "--n", 2)
    assert code == 0
    contains(payload, {"terms": [{"rank": 1, "twist": 0}, {"rank": 2, "twists": [-2, -3]}, {"rank": 1, "twist": -5}]})
    code, payload, _ = run_cli("en", "--matrix", "x,y,z;y,z,w", "--vars", "x,y,z,w")
    assert code == 0
    assert payload["ranks"] == [1, 3, 2]
    assert payload["variables"] == ["x", "y", "z", "w"]
    code, payload, _ = run_cli("strand", "--n", 3, "--d", 2)
    assert payload["ranks"] == [6, 8, 3]


def test_oracle_commands(run_cli, contains):
    code, payload, _ = run_cli("oracle-sub", "--twisted-cubic", "--specialize", "x=0,w=0", "--r", "1,2,1")
    assert code == 0
    contains(payload, {"verdict": "found", "field": "GF(2)", "validated": True})
    code, payload, _ = run_cli("oracle-hf", "--nnd", "2,2")
    assert code == 0 and payload["count"] == 7
    code, payload, _ = run_cli("containment", "--n", 2, "--d", 2)
    assert code == 0 and payload["strict"] is True
