import json
import subprocess
import sys

import pytest

from k3fib import catalog as cat
from k3fib.cli import dumps, main
from k3fib.sixlines import SixLinesConfig
from k3fib.weierstrass import WeierstrassModel

SPEC_210 = {
    "case": "2O",
    "A": "(-a(ad-bc+b-d)t+a(c+b-1)(ad-bc+b-d)t^2)/(t((ad-bc)t+1)((b+c-1)t-1))",
    "B": "(ad-bc)/(t((ad-bc)t+1)((b+c-1)t-1))",
}


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def model_file(tmp_path, cid="2.7", source="table", params="2,3,5,7"):
    cfg = SixLinesConfig.parse(params)
    variants = {v.label: v for v in cat.CATALOG[cid].models}
    return write(tmp_path, f"{cid}-{source}.json", variants[source].build(cfg).to_json())


# ---------------------------------------------------------------- classify


def test_classify_27(tmp_path, capsys):
    code, out, _ = run(capsys, "classify", "--model", model_file(tmp_path), "--json", "-")
    assert code == 0
    rep = json.loads(out)
    assert rep["configuration"] == "I2*+8I2" and rep["euler"] == 24 and rep["rank"] == 0
    assert [f["place"] for f in rep["fibers"] if f["type"] == "I2*"] == ["t=0"]
    assert sum(f["type"] == "I2" for f in rep["fibers"]) == 8


def test_classify_cusp_family(tmp_path, capsys):
    path = write(tmp_path, "m.json", {"n": 1, "a": [[], [], [], [], ["0", "1"]]})
    code, out, _ = run(capsys, "classify", "--model", path)
    assert code == 0
    assert out.strip().splitlines()[-1] == "configuration II*+II, euler 12"


def test_classify_writes_file(tmp_path, capsys):
    dest = tmp_path / "out.json"
    code, out, _ = run(capsys, "classify", "--model", model_file(tmp_path), "--json", str(dest))
    assert code == 0 and json.loads(dest.read_text())["euler"] == 24


def test_classify_singular_exit_3(tmp_path, capsys):
    path = write(tmp_path, "m.json", {"a": [[], [], [], [], []]})
    code, _, err = run(capsys, "classify", "--model", path)
    assert code == 3 and "SingularSurface" in err


@pytest.mark.parametrize("content", ["{not json", '{"a": [[1]]}', '{"b": 1}'])
def test_classify_parse_errors_exit_2(tmp_path, capsys, content):
    code, _, err = run(capsys, "classify", "--model", write(tmp_path, "bad.json", content))
    assert code == 2 and "ParseError" in err


def test_missing_subcommand_exit_2(capsys):
    assert main([]) == 2


# ---------------------------------------------------------------- model export


def test_model_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "model", "--class", "2.12", "--params", "3,5,7,11", "--json", "-")
    assert code == 0
    data = json.loads(out)
    m = WeierstrassModel.from_json(data)
    assert m.to_json() == data
    assert dumps(m.to_json()) == out.strip()


def test_model_unknown_source(capsys):
    code, _, err = run(capsys, "model", "--class", "2.7", "--params", "2,3,5,7", "--source", "nope")
    assert code == 2 and "resolved" in err


def test_bad_params_exit_2(capsys):
    code, _, _ = run(capsys, "model", "--class", "2.7", "--params", "2,3")
    assert code == 2


# ---------------------------------------------------------------- neighbor


def test_neighbor_27_to_210(tmp_path, capsys):
    target = model_file(tmp_path, "2.10", "target")
    code, out, _ = run(capsys, "neighbor", "--model", model_file(tmp_path), "--spec",
                       write(tmp_path, "s.json", SPEC_210), "--params", "2,3,5,7", "--target", target)
    assert code == 0
    rep = json.loads(out)
    assert rep["configuration"] == "I2*+2I0*+4I1"
    assert rep["isomorphic_to_target"] is False
    assert WeierstrassModel.from_json(rep["model"]).to_json() == rep["model"]


def test_neighbor_params_inside_spec(tmp_path, capsys):
    spec = dict(SPEC_210, params="2,3,5,7")
    code, out, _ = run(capsys, "neighbor", "--model", model_file(tmp_path), "--spec",
                       write(tmp_path, "s.json", spec))
    assert code == 0 and json.loads(out)["euler"] == 24


def test_neighbor_degree_overflow_exit_5(tmp_path, capsys):
    spec = {"case": "2O", "A": "0", "B": "1/t^3"}
    code, _, err = run(capsys, "neighbor", "--model", model_file(tmp_path), "--spec", write(tmp_path, "s.json", spec))
    assert code == 5 and "DegreeOverflow" in err


@pytest.mark.parametrize("spec", [{"case": "2O", "A": "0"}, {"case": "4O", "A": "0", "B": "1"},
                                  {"case": "2O", "A": "t/(", "B": "1"}])
def test_neighbor_malformed_spec_exit_2(tmp_path, capsys, spec):
    code, _, _ = run(capsys, "neighbor", "--model", model_file(tmp_path), "--spec", write(tmp_path, "s.json", spec))
    assert code == 2


# ---------------------------------------------------------------- derive-classical


def test_derive_classical_27(capsys):
    code, out, _ = run(capsys, "derive-classical", "--params", "2,3,5,7", "--class", "2.7", "--json", "-")
    assert code == 0
    rep = json.loads(out)
    assert rep["configuration"] == "I2*+8I2" and len(rep["quartic"]) == 5


def test_derive_classical_free_parameter(capsys):
    code, out, _ = run(capsys, "derive-classical", "--params", "2,3,5,7", "--num", "u(v-1)",
                       "--den", "cu+dv-1", "--solve", "v")
    assert code == 0 and '"configuration": "I2*+I0*+4I2+2I1"' in out


def test_derive_classical_requires_parameter(capsys):
    assert run(capsys, "derive-classical", "--params", "2,3,5,7")[0] == 2
    assert run(capsys, "derive-classical", "--params", "2,3,5,7", "--class", "2.10")[0] == 2


# ---------------------------------------------------------------- verify-catalog


def test_verify_single_class(capsys):
    code, out, _ = run(capsys, "verify-catalog", "--class", "2.7", "--params", "2,3,5,7", "--json", "-")
    assert code == 0
    rep = json.loads(out)
    assert rep["class"] == "2.7" and rep["expected"] == "I2*+8I2" and rep["torsion"] == "(Z/2)^2"
    assert rep["anomalies"] == []


def test_verify_mismatch_exit_1(capsys):
    code, out, _ = run(capsys, "verify-catalog", "--class", "2.10", "--params", "3,5,7,11")
    assert code == 1 and out.startswith("[FAIL] class 2.10")


def test_verify_non_generic_exit_4(capsys):
    code, _, err = run(capsys, "verify-catalog", "--params", "1,1,1,1")
    assert code == 4 and "concurrent" in err


def test_verify_all_at_colliding_tuple_exit_4(capsys):
    code, _, err = run(capsys, "verify-catalog", "--class", "all", "--params", "2,3,5,7")
    assert code == 4 and "ab-ad+b^2c-2bc-bd+b+c+d-1 = 0" in err


def test_verify_unknown_class_exit_2(capsys):
    assert run(capsys, "verify-catalog", "--class", "9.9")[0] == 2


def test_verify_json_is_byte_stable(capsys):
    outs = [run(capsys, "verify-catalog", "--class", "2.12", "--params", "3,5,7,11", "--json", "-")[1]
            for _ in range(2)]
    assert outs[0] == outs[1]
    assert outs[0] == dumps(json.loads(outs[0])) + "\n"


# ---------------------------------------------------------------- divisor


def test_divisor_check(capsys):
    code, out, _ = run(capsys, "divisor", "--check", "div-t-2.7")
    assert code == 0 and "zero part I2*" in out


def test_divisor_expression(capsys):
    code, out, _ = run(capsys, "divisor", "--expr", "l1 . l13")
    assert code == 0 and out.strip() == "1"


def test_divisor_type(capsys):
    code, out, _ = run(capsys, "divisor", "--expr", "2*l1 + l12 + l13 + l14 + l15", "--type")
    assert code == 0 and out.strip().endswith(": I0*")


def test_divisor_opaque_exit_1(capsys):
    code, _, err = run(capsys, "divisor", "--expr", "eta[(12)(34)] . l1")
    assert code == 1 and "OpaquePairing" in err


def test_divisor_parse_error_exit_2(capsys):
    assert run(capsys, "divisor", "--expr", "l1 +")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "k3fib", "divisor", "--expr", "l1 . l1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "-2"
