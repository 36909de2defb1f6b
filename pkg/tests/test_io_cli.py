import io
import json
import subprocess
import sys

import numpy as np
import pytest

from nkappa import cli
from nkappa.errors import SchemaError
from nkappa.io import (
    decode_matrix,
    dumps,
    encode_matrix,
    fixture_path,
    load_fixture,
    realization_from_document,
    realization_to_document,
)

EX4 = str(fixture_path("example4"))
EX2 = str(fixture_path("example2"))


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def doc_for(J, A, Gamma):
    return {"schema_version": "1.0", "space": {"dim": len(J), "J": encode_matrix(J)},
            "A": encode_matrix(A), "Gamma": encode_matrix(Gamma)}


def run(argv):
    buf = io.StringIO()
    code, report = cli.run(argv, buf)
    return code, report, buf.getvalue()


def test_round_trip_is_byte_stable(ex4):
    text = dumps(realization_to_document(ex4, {"name": "example4"}))
    again = dumps(realization_to_document(realization_from_document(json.loads(text))))
    assert again == dumps(realization_to_document(ex4))
    assert dumps(json.loads(text)) == text


def test_matrix_encoding():
    M = np.array([[1 + 2j, -0.5], [0.1, 3j]])
    np.testing.assert_array_equal(decode_matrix(encode_matrix(M)), M)
    assert dumps(0.1) == "0.10000000000000001" and dumps(2.0) == "2.0"
    assert dumps({"b": 1, "a": [True, None]}) == '{"a":[true,null],"b":1}'


def test_schema_errors():
    with pytest.raises(SchemaError):
        realization_from_document({"schema_version": "1.0"})
    doc = doc_for(np.eye(2), np.eye(2), np.eye(2))
    doc["schema_version"] = "9"
    with pytest.raises(SchemaError):
        realization_from_document(doc)
    doc = doc_for(np.eye(2), np.eye(2), np.eye(3))
    with pytest.raises(SchemaError):
        realization_from_document(doc)


def test_fixtures_hold_printed_data():
    R = load_fixture("example4")
    np.testing.assert_array_equal(R.J.J, [[0, 1, 0], [1, 0, 0], [0, 0, -1]])
    np.testing.assert_array_equal(R.A, [[0, 1, 0], [0, 0, 0], [0, 0, -1]])
    np.testing.assert_array_equal(R.Gamma, [[0.5, -1], [1, 0], [0, -1]])
    R2 = load_fixture("example2")
    np.testing.assert_array_equal(R2.Gamma, np.eye(2))


def test_decompose_example4():
    code, report, _ = run(["decompose", "--input", EX4])
    out = report["outputs"]
    assert code == 0 and report["status"] == "ok"
    assert (out["kappa"], out["kappa1"], out["kappa2"]) == (2, 1, 1)
    S = decode_matrix(out["S_hat"])
    G = decode_matrix(out["G_hat"])
    np.testing.assert_allclose(S, [[-0.5, 0], [0, -0.5]], atol=1e-12)
    np.testing.assert_allclose(G, [[0.5, -0.5], [-0.5, -0.5]], atol=1e-12)
    assert all(c["passed"] for c in report["checks"])
    assert report["tolerance"] == {"relative_eps": 1e-9, "condition_cap": 1e8, "sign_eps": 1e-9}


def test_zeros_example4():
    code, report, _ = run(["zeros", "--input", EX4])
    assert code == 0
    (entry,) = report["outputs"]["zeros"]
    assert entry["multiplicity"] == 1
    np.testing.assert_allclose(entry["z"], [-1, 0], atol=1e-12)


def test_reports_are_byte_identical():
    argv = ["verify", "--input", EX4, "--seed", "3"]
    a, b = run(argv)[2], run(argv)[2]
    assert a == b
    assert json.loads(a)["status"] == "ok"


@pytest.mark.parametrize("argv", [
    ["validate", "--input", EX4],
    ["eval", "--z", "0,2", "--input", EX4],
    ["qprime-inf", "--input", EX2],
    ["minimal", "--input", EX2],
    ["invert", "--z=-0.5,1", "--input", EX4],
    ["indices", "--input", EX2],
    ["split", "--alpha", "0", "--input", EX4],
    ["verify", "--input", EX2],
    ["kernel", "--samples", "8", "--input", EX2],
])
def test_commands_succeed(argv):
    code, report, text = run(argv)
    assert code == 0, report
    assert json.loads(text) == json.loads(dumps(report))


def test_eval_value():
    _, report, _ = run(["eval", "--z", "0,2", "--input", EX4])
    np.testing.assert_allclose(decode_matrix(report["outputs"]["Q"]),
                               [[0.25 + 0.5j, -0.5j], [-0.5j, 0.2 - 0.4j]], atol=1e-15)


def test_text_format():
    code, _, text = run(["decompose", "--input", EX4, "--format", "text"])
    assert code == 0 and "kappa: 2" in text and "check decomposition_matches_inverse: PASS" in text


def test_exit_code_validation(tmp_path):
    bad_j = write(tmp_path, "j.json", doc_for([[0, 1], [-1, 0]], np.eye(2), np.eye(2)))
    code, report, _ = run(["validate", "--input", bad_j])
    assert code == 2 and report["error"]["type"] == "NotHermitianError"
    bad_a = write(tmp_path, "a.json", doc_for(np.eye(2), [[0, 1], [0, 0]], np.eye(2)))
    code, report, _ = run(["validate", "--input", bad_a])
    assert code == 2 and report["error"]["invariant"]
    code, _, _ = run(["validate", "--input", str(tmp_path / "missing.json")])
    assert code == 2


def test_exit_code_assumption(tmp_path):
    bad = write(tmp_path, "bad.json", doc_for([[0, 1], [1, 0]], [[0, 1], [0, 0]], [[1], [0]]))
    code, report, _ = run(["invert", "--z", "0,1", "--input", bad])
    assert code == 4 and report["error"]["type"] == "GramNotInvertibleError"
    code, report, _ = run(["eval", "--z", "0", "--input", EX2])
    assert code == 4 and report["error"]["type"] == "PoleError"


def test_condition_cap(tmp_path):
    # Gamma^+ Gamma invertible but with condition 1e10
    J, A = np.eye(2), np.diag([1.0, 2.0])
    path = write(tmp_path, "ill.json", doc_for(J, A, np.diag([1.0, 1e-5])))
    code, report, _ = run(["decompose", "--input", path])
    assert code == 4 and "condition" in report["error"]["message"]
    code, _, _ = run(["decompose", "--input", path, "--cond-cap", "1e12"])
    assert code == 0


def test_failed_check_exits_3(monkeypatch):
    monkeypatch.setitem(cli.VERIFY_THRESHOLDS, "inverse_product", -1.0)
    code, report, _ = run(["invert", "--z", "0,1", "--input", EX4])
    assert code == 3 and report["status"] == "check_failed"


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "nkappa", "indices", "--input", EX4],
                         capture_output=True, text=True, check=False)
    assert out.returncode == 0
    assert json.loads(out.stdout)["outputs"]["kappa2"] == 1
