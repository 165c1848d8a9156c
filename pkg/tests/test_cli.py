import json
from pathlib import Path

import pytest

from liessence import catalog
from liessence.cli import ParseError, main, parse_element

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name,argv", [
    ("essential_so13_m01.json",
     ["essential", "--algebra", "so:1,3", "--element", "m01", "--crosscheck", "--output", "json"]),
    ("temperature_sl3_e1.json",
     ["temperature", "--algebra", "sl:3", "--element", "e1", "--output", "json"]),
    ("killing_so12.json", ["killing", "--algebra", "so:1,2", "--output", "json"]),
    ("export_sl2.json", ["export", "--algebra", "sl:2"]),
])
def test_golden_outputs(capsys, name, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / name).read_text(encoding="utf-8")


def test_parse_element():
    a = catalog.build("so:1,3").algebra
    x = parse_element(a, "m01 + 1/2*m02 − 3*m12")
    assert x == a["m01"] + a["m02"] / 2 - a["m12"] * 3
    assert parse_element(a, "-m23") == -a["m23"]
    with pytest.raises(ParseError) as err:
        parse_element(a, "m01 + zz")
    assert "position" in str(err.value)
    with pytest.raises(ParseError):
        parse_element(a, "m01 +")
    with pytest.raises(ParseError):
        parse_element(a, "3 m12")


def test_exit_codes(capsys):
    assert run(capsys, "essential", "--algebra", "so:3,0", "--element", "m12")[0] == 0
    code, _, err = run(capsys, "essential", "--algebra", "so:3,0", "--element", "zz")
    assert code == 2 and "unknown basis label" in err
    assert run(capsys, "essential", "--algebra", "nope:3", "--element", "x")[0] == 2
    assert run(capsys, "temperature", "--algebra", "so:3,0", "--element", "m12")[0] == 2
    code, _, err = run(capsys, "temperature", "--algebra", "gl:2", "--element", "e11 + e12 + e21")
    assert code == 3


def test_json_file_algebra_and_export(capsys, tmp_path):
    path = tmp_path / "so13.json"
    assert run(capsys, "export", "--algebra", "so:1,3", "--out", str(path))[0] == 0
    code, out, _ = run(capsys, "essential", "--algebra", str(path), "--element", "m02",
                       "--output", "json")
    assert code == 0 and json.loads(out)["verdict"] == "essential"


def test_closure_and_catalog(capsys):
    code, out, _ = run(capsys, "closure", "--algebra", "so:1,3", "--element", "m01",
                       "--invariance", "--output", "json")
    data = json.loads(out)
    assert code == 0 and data["dim"] == 6
    code, out, _ = run(capsys, "catalog", "--output", "json")
    names = json.dumps(json.loads(out))
    assert code == 0 and "poincare:3" in names


def test_sl2_and_modular_demo(capsys):
    code, out, _ = run(capsys, "sl2", "--algebra", "so:1,3", "--element", "m01", "--output", "json")
    data = json.loads(out)
    assert code == 0 and data["triples"]
    assert all(c["rep_periodic"] for c in data["rotation_checks"])
    code, out, _ = run(capsys, "modular-demo", "--n", "2", "--trials", "50", "--output", "json")
    data = json.loads(out)
    assert code == 0 and data["passivity"]["violations"] == 0
    assert data["kms_residual_max"] < 1e-9


def test_text_output_is_stable(capsys):
    first = run(capsys, "temperature", "--algebra", "so:1,3", "--element", "m01")[1]
    second = run(capsys, "temperature", "--algebra", "so:1,3", "--element", "m01")[1]
    assert first == second and "beta = 2π/1" in first
