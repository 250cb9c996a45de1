"""CLI: parsing, canonical output, exit codes, round trips."""

import json
import subprocess
import sys

from uglmn.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_act_series_e_on_identity(capsys):
    code, out = run_cli(
        capsys,
        "act", "--m", "1", "--n", "1", "--space", "series",
        "--gen", "E1", "--input", "[{\"coeff\": {\"num\": {\"0\": \"1\"}, \"den\": {\"0\": \"1\"}}, \"A\": {\"m\": 1, \"n\": 1, \"entries\": [[0, 0], [0, 0]]}, \"j\": [0, 0]}]",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj == [
        {
            "coeff": {"num": {"0": "1"}, "den": {"0": "1"}},
            "A": {"m": 1, "n": 1, "entries": [[0, 1], [0, 0]]},
            "j": [0, 0],
        }
    ]


def test_act_k_on_identity(capsys):
    elt = json.dumps(
        [{"coeff": {"num": {"0": "1"}, "den": {"0": "1"}},
          "A": {"m": 1, "n": 1, "entries": [[0, 0], [0, 0]]}, "j": [0, 0]}]
    )
    code, out = run_cli(
        capsys, "act", "--m", "1", "--n", "1", "--gen", "K1", "--input", elt
    )
    assert code == 0
    assert json.loads(out)[0]["j"] == [1, 0]


def test_act_empty_element(capsys):
    code, out = run_cli(
        capsys, "act", "--m", "1", "--n", "1", "--gen", "E1", "--input", "[]"
    )
    assert code == 0
    assert json.loads(out) == []


def test_act_factor_space(capsys):
    elt = json.dumps([{"coeff": {"num": {"0": "1"}, "den": {"0": "1"}}, "a": [0, 1]}])
    code, out = run_cli(
        capsys,
        "act", "--m", "1", "--n", "1", "--space", "factor", "--gen", "E1",
        "--flavor", "01", "--input", elt,
    )
    assert code == 0
    assert json.loads(out) == [
        {"coeff": {"num": {"0": "1"}, "den": {"0": "1"}}, "a": [1, 0]}
    ]


def test_multiply_identity(capsys):
    one = json.dumps(
        [{"coeff": {"num": {"0": "1"}, "den": {"0": "1"}},
          "A": {"m": 1, "n": 1, "entries": [[0, 0], [0, 0]]}, "j": [0, 0]}]
    )
    y = json.dumps(
        [{"coeff": {"num": {"1": "1"}, "den": {"0": "1"}},
          "A": {"m": 1, "n": 1, "entries": [[0, 1], [0, 0]]}, "j": [1, -1]}]
    )
    code, out = run_cli(capsys, "multiply", "--m", "1", "--n", "1", "--lhs", one, "--rhs", y)
    assert code == 0
    assert json.loads(out) == json.loads(y)


def test_multiply_matches_act(capsys):
    e_basis = json.dumps(
        [{"coeff": {"num": {"0": "1"}, "den": {"0": "1"}},
          "A": {"m": 1, "n": 1, "entries": [[0, 1], [0, 0]]}, "j": [0, 0]}]
    )
    y = json.dumps(
        [{"coeff": {"num": {"0": "1"}, "den": {"0": "1"}},
          "A": {"m": 1, "n": 1, "entries": [[0, 0], [1, 0]]}, "j": [0, 1]}]
    )
    code1, out1 = run_cli(capsys, "multiply", "--m", "1", "--n", "1", "--lhs", e_basis, "--rhs", y)
    code2, out2 = run_cli(capsys, "act", "--m", "1", "--n", "1", "--gen", "E1", "--input", y)
    assert code1 == code2 == 0
    assert out1 == out2


def test_expand_trivial(capsys):
    code, out = run_cli(capsys, "expand", "--m", "1", "--n", "1", "--A", "0,0;0,0", "--j", "0,0")
    assert code == 0
    assert json.loads(out) == [{"coeff": {"num": {"0": "1"}, "den": {"0": "1"}}, "word": ""}]


def test_expand_generator_label(capsys):
    code, out = run_cli(capsys, "expand", "--m", "1", "--n", "1", "--A", "0,1;0,0", "--j", "0,0")
    assert code == 0
    assert json.loads(out) == [{"coeff": {"num": {"0": "1"}, "den": {"0": "1"}}, "word": "E1"}]


def test_truncate_level_zero(capsys):
    code, out = run_cli(
        capsys, "truncate", "--m", "1", "--n", "1", "--A", "0,0;0,0", "--j", "0,0", "--L", "0"
    )
    assert code == 0
    obj = json.loads(out)
    assert len(obj) == 1
    assert obj[0]["A"]["entries"] == [[0, 0], [0, 0]]


def test_oracle_compare_pass(capsys):
    code, out = run_cli(
        capsys,
        "oracle-compare", "--m", "1", "--n", "1", "--gen", "E1",
        "--A", "0,0;0,0", "--j", "0,0", "--L", "3",
    )
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_verify_small_profile(capsys):
    code, out = run_cli(
        capsys, "verify", "--m", "1", "--n", "1", "--suite", "all", "--bound", "2"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["pass"] is True
    assert len(obj["suites"]) == 6


def test_verify_mutate_fails(capsys):
    code, out = run_cli(
        capsys,
        "verify", "--m", "1", "--n", "1", "--suite", "factor", "--bound", "2", "--mutate",
    )
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_verify_skips_odd_relations_without_odd_block(capsys):
    code, out = run_cli(
        capsys, "verify", "--m", "2", "--n", "0", "--suite", "factor", "--bound", "2"
    )
    assert code == 0
    obj = json.loads(out)
    statuses = {
        r["relation"]: r["status"] for s in obj["suites"] for r in s["reports"]
    }
    assert statuses["QG6-square(E)"] == "not-applicable"
    assert statuses["QG6-serre(F)"] == "not-applicable"


def test_highest_weight(capsys):
    code, out = run_cli(capsys, "highest-weight", "--m", "1", "--n", "1", "--r", "2", "--a", "1,1")
    assert code == 0
    obj = json.loads(out)
    assert obj["word"] == "F1"
    assert obj["result"] == [
        {"coeff": {"num": {"0": "1"}, "den": {"0": "1"}}, "a": [1, 1]}
    ]


def test_parse_errors_exit_2(capsys):
    code, _ = run_cli(capsys, "act", "--m", "1", "--n", "1", "--gen", "Q7", "--input", "[]")
    assert code == 2
    code, _ = run_cli(capsys, "expand", "--m", "1", "--n", "1", "--A", "junk", "--j", "0,0")
    assert code == 2
    code, _ = run_cli(capsys, "truncate", "--m", "1", "--n", "1", "--A", "0,0;0,0", "--j", "0", "--L", "1")
    assert code == 2


def test_output_is_byte_deterministic(capsys):
    args = ["expand", "--m", "2", "--n", "1", "--A", "0,0,1;0,0,0;0,0,0", "--j", "1,0,-1"]
    _, out1 = run_cli(capsys, *args)
    _, out2 = run_cli(capsys, *args)
    assert out1 == out2


def test_element_json_reparses_to_equal_element(capsys, tmp_path):
    code, out = run_cli(
        capsys, "act", "--m", "2", "--n", "1", "--gen", "F1",
        "--input", json.dumps(
            [{"coeff": {"num": {"0": "1"}, "den": {"0": "1"}},
              "A": {"m": 2, "n": 1, "entries": [[0, 1, 1], [0, 0, 0], [1, 0, 0]]},
              "j": [0, 1, -1]}]
        ),
    )
    assert code == 0
    path = tmp_path / "elt.json"
    path.write_text(out)
    code2, out2 = run_cli(capsys, "act", "--m", "2", "--n", "1", "--gen", "K2", "--input", str(path))
    assert code2 == 0
    json.loads(out2)


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "uglmn.cli", "expand", "--m", "1", "--n", "1",
         "--A", "0,1;0,0", "--j", "0,0"],
        capture_output=True, text=True,
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)[0]["word"] == "E1"
