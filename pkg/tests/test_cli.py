import io
import json
import subprocess
import sys

import pytest

from cyclinv.cli import RunConfig, UsageError, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_hilbert_text():
    code, out, _ = call("hilbert", "--d", "3", "--terms", "5")
    assert code == 0
    assert "coefficients: 1 1 3 9 27" in out


def test_hilbert_json_and_positional_order():
    code, out, _ = call("hilbert", "d=4", "--terms", "4", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["coeffs"] == ["1", "1", "4", "16"]
    assert data["num"] == ["1", "-3"] and data["den"] == ["1", "-4"]


@pytest.mark.parametrize("source", ["nc-molien", "comm-molien"])
def test_hilbert_molien_sources(source):
    code, out, _ = call("hilbert", "3", "--source", source, "--terms", "5", "--format", "json")
    assert code == 0
    want = ["1", "1", "3", "9", "27"] if source == "nc-molien" else ["1", "1", "2", "4", "5"]
    assert json.loads(out)["coeffs"] == want


def test_basis_and_freegens_json():
    code, out, _ = call("basis", "--d", "3", "--degree", "2", "--format", "json")
    assert json.loads(out) == [{"count": 3, "d": 3, "degree": 2, "items": ["y0^2", "y1*y2", "y2*y1"]}]
    code, out, _ = call("freegens", "--d", "3", "--max-degree", "3", "--format", "json")
    assert [row["count"] for row in json.loads(out)] == [1, 2, 4]


def test_commgens_d4():
    code, out, _ = call("commgens", "--d", "4", "--format", "json")
    assert code == 0
    assert json.loads(out)["generators"] == ["y0", "y1*y3", "y2^2", "y1^2*y2", "y2*y3^2", "y1^4", "y3^4"]
    code, out, _ = call("commgens", "4")
    assert "deg=2: y1*y3 y2^2" in out and "7 generators" in out


def test_verify_commands():
    code, out, _ = call("verify-comm", "4")
    assert code == 0 and out.count("PASS") == 7
    code, out, _ = call("verify-s", "d=3")
    assert code == 0 and out.count("PASS") == 3
    assert call("verify-s", "4")[0] == 2
    assert call("verify-comm", "7")[0] == 2


def test_s_generators():
    code, out, _ = call("s-generators", "3", "--basis", "x", "--field", "Qe", "--format", "json")
    data = json.loads(out)
    assert data["field"] == "Q(e_3)" and data["names"] == ["v1", "v2", "v31", "v32"]
    code, out, _ = call("s-generators", "3")
    assert out.split() == ["y0", "y1*y2", "y1^3", "y2^3"]


def test_s_member(tmp_path):
    path = tmp_path / "gens.json"
    path.write_text(json.dumps({"field": "Q(e_3)", "d": 3, "generators": ["x1 + x2 + x3", "x1*x2 + x2*x3 + x3*x1"]}))
    code, out, _ = call("s-member", "--gens", str(path), "--target", "x1*x2", "--format", "json")
    assert code == 0 and json.loads(out) == {"member": False, "target": "x1*x2"}
    code, out, _ = call("s-member", "--gens", str(path), "--target", "x1^2 + x2^2 + x3^2 + x1*x2 + x1*x3"
                        " + x2*x1 + x2*x3 + x3*x1 + x3*x2", "--format", "json")
    data = json.loads(out)
    assert data["member"] and data["terms"][0]["product"] == ["x1 + x2 + x3", "x1 + x2 + x3"]


def test_s_deficiency():
    code, out, _ = call("s-deficiency", "3", "--max-degree", "4", "--format", "json")
    assert code == 0
    assert [r["generators_needed"] for r in json.loads(out)["degrees"]] == [1, 1, 2, 0]


def test_exit_codes():
    assert call("bogus")[0] == 2
    assert call("hilbert", "--d", "one")[0] == 2
    assert call("hilbert", "--d", "1")[0] == 2
    assert call("hilbert", "--terms", "0")[0] == 2
    assert call("s-member", "--gens", "/nonexistent.json", "--target", "x1")[0] == 2
    code, _, err = call("basis", "--d", "9", "--degree", "6")
    assert code == 3 and "ambient cap" in err
    code, _, err = call("s-deficiency", "3", "--max-degree", "7")
    assert code == 3 and "s-degree cap" in err


def test_env_cap(monkeypatch):
    monkeypatch.setenv("CYCLINV_CAP_AMBIENT", "5")
    assert call("basis", "--d", "3", "--degree", "2")[0] == 3
    assert call("basis", "--d", "3", "--degree", "2", "--cap-ambient", "100")[0] == 0


def test_output_is_deterministic():
    runs = {call("s-deficiency", "3", "--basis", "x", "--format", "json")[1] for _ in range(2)}
    assert len(runs) == 1


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig(d=1)
    with pytest.raises(UsageError):
        RunConfig(fmt="xml")


def test_selftest():
    code, out, _ = call("selftest")
    assert code == 0
    assert "KNOWN monoid generators d=5" in out
    code, _, _ = call("selftest", "--strict")
    assert code == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cyclinv", "hilbert", "--d", "2", "--terms", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "1 1 2 4 8" in proc.stdout
