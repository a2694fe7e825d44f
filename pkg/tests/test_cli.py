"""End-to-end CLI behavior: output records, exit codes, batch mode."""

import json
import subprocess
import sys


def run_cli(*args, stdin=None):
    proc = subprocess.run(
        [sys.executable, "-m", "idealaut", *args],
        capture_output=True,
        text=True,
        input=stdin,
    )
    return proc


def run_json(*args, stdin=None):
    proc = run_cli(*args, "--format", "json", stdin=stdin)
    record = json.loads(proc.stdout) if proc.stdout else None
    return record, proc.returncode


def test_aut_text_output():
    proc = run_cli("aut", "--ring", "Q", "t^2-1")
    assert proc.returncode == 0
    assert "order 2, cyclic" in proc.stdout
    assert "(-1, 0)" in proc.stdout


def test_aut_json_schema():
    record, code = run_json("aut", "--ring", "F3", "t^3-t")
    assert code == 0
    assert record["schema"] == "ideal-aut/1"
    group = record["result"]["group"]
    assert group["kind"] == "finite"
    assert group["order"] == 6
    assert group["cyclic"] is False
    assert len(group["elements"]) == 6
    assert {"alpha": "2", "beta": "1"} in group["elements"]


def test_units_of_r_serialization():
    record, code = run_json("aut", "--ring", "Q", "(t-3)^4")
    assert code == 0
    assert record["result"]["group"] == {"kind": "units_of_R", "fixed_point": "3"}


def test_iso_witness_record():
    record, code = run_json("iso", "--ring", "Q", "t^2-1", "t^2-2*t")
    assert code == 0
    assert record["result"]["witness"] == {"alpha": "1", "beta": "-1", "lambda": "1"}


def test_iso_all_witnesses():
    record, code = run_json("iso", "--ring", "Q", "t^2-1", "t^2-2*t", "--all-witnesses")
    assert code == 0
    listed = record["result"]["all_witnesses"]
    assert listed["kind"] == "list"
    assert len(listed["witnesses"]) == 2
    record, code = run_json("iso", "--ring", "Q", "(t-3)^2", "(t-1)^2", "--all-witnesses")
    assert record["result"]["all_witnesses"]["kind"] == "units_of_R_family"


def test_factors_over_fp_and_q():
    record, code = run_json("factors", "--ring", "F3", "t^3-t")
    assert code == 0
    payload = record["result"]["factorization"]
    assert payload["kind"] == "irreducible"
    assert [item["poly"] for item in payload["factors"]] == ["t", "t + 1", "t + 2"]
    record, code = run_json("factors", "--ring", "Q", "(t-1)^2*(t+2)")
    assert code == 0
    payload = record["result"]["factorization"]
    assert payload["kind"] == "squarefree_layers"
    assert payload["factors"] == [
        {"poly": "t + 2", "multiplicity": 1},
        {"poly": "t - 1", "multiplicity": 2},
    ]


def test_verify_with_permutation_table():
    record, code = run_json("verify", "--ring", "F7", "t^3-3*t^2+2*t", "(-1,2)")
    assert code == 0
    assert record["result"]["holds"] is True
    assert record["result"]["lambda"] == "6"
    entries = record["result"]["permutation"]["entries"]
    assert {"root": "0", "multiplicity": 1, "image": "2"} in entries


def test_oracle_compare_agrees():
    record, code = run_json("oracle-compare", "--ring", "F5", "(t-2)^4")
    assert code == 0
    assert record["result"]["agree"] is True
    assert record["result"]["oracle"]["order"] == 4
    assert record["result"]["oracle"]["truncation_checked"] is True


def test_exit_code_2_on_syntax_error():
    record, code = run_json("aut", "--ring", "Q", "t +")
    assert code == 2
    assert record["status"] == "error"
    assert record["error"]["code"] == "syntax_error"
    assert record["error"]["position"] == 3


def test_exit_code_2_on_coefficient_error():
    record, code = run_json("aut", "--ring", "Z", "t/2")
    assert code == 2
    assert record["error"]["code"] == "coefficient_not_in_ring"


def test_exit_code_3_on_precondition():
    record, code = run_json("aut", "--ring", "Z", "2*t^2-1")
    assert code == 3
    assert record["error"]["code"] == "not_monic"
    record, code = run_json("aut", "--ring", "Q", "5")
    assert code == 3
    assert record["error"]["code"] == "constant_polynomial"
    record, code = run_json("oracle-compare", "--ring", "Q", "t^2-1")
    assert code == 3
    assert record["error"]["code"] == "wrong_ring"


def test_bad_ring_selector():
    record, code = run_json("aut", "--ring", "F9", "t^2-1")
    assert code == 2
    assert record["error"]["code"] == "syntax_error"


def test_stdin_polynomial():
    proc = run_cli("aut", "--ring", "Q", "-", stdin="t^2-1\n")
    assert proc.returncode == 0
    assert "order 2" in proc.stdout


def test_batch_mode_order_and_codes():
    lines = "\n".join(
        [
            json.dumps({"command": "aut", "ring": "F3", "inputs": ["t^3-t"]}),
            json.dumps({"command": "iso", "ring": "Q", "inputs": ["t^2-1", "t^2-2*t"]}),
            json.dumps({"command": "aut", "ring": "Q", "inputs": ["t +"]}),
            json.dumps({"command": "factors", "ring": "F5", "inputs": ["(t-2)^3"]}),
        ]
    )
    proc = run_cli("batch", "-", stdin=lines + "\n")
    records = [json.loads(line) for line in proc.stdout.splitlines()]
    assert len(records) == 4
    assert records[0]["result"]["group"]["order"] == 6
    assert records[1]["result"]["witness"]["beta"] == "-1"
    assert records[2]["status"] == "error"
    assert records[3]["result"]["factorization"]["factors"] == [
        {"poly": "t + 3", "multiplicity": 3}
    ]
    assert proc.returncode == 2  # first failing line wins


def test_json_echo_reparses_to_identical_record():
    record, code = run_json("aut", "--ring", "Q", "(t-1)^2*(t+2)")
    assert code == 0
    echoed = record["input"]["polynomials"][0]
    assert echoed == "t^3 - 3*t + 2"
    again, code = run_json("aut", "--ring", "Q", echoed)
    assert code == 0
    assert again == record


def test_seed_determinism():
    first, _ = run_json("factors", "--ring", "F13", "t^6+t^3+1", "--seed", "5")
    second, _ = run_json("factors", "--ring", "F13", "t^6+t^3+1", "--seed", "5")
    assert first == second


def test_version_flag():
    proc = run_cli("--version")
    assert proc.returncode == 0
    assert "ideal-aut" in proc.stdout
