import json

import pytest

from fnlab.cli import main
from fnlab.forms import identity_one_form, vector_field_form
from fnlab.poly import Poly, PolyMap
from fnlab.serialize import form_to_json, polymap_to_json


@pytest.fixture
def files(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)
    return write


def test_weil_dimensions(capsys):
    assert main(["weil", '{"n":3,"p":[[1,3],[2,3]]}']) == 0
    assert "dim      5" in capsys.readouterr().out
    assert main(["weil", '{"n":2,"p":[[1,2]]}', "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dim"] == 3 and data["monomials"] == ["1", "d1", "d2"]


def test_weil_rejects_malformed(capsys):
    assert main(["weil", '{"n":2,"p":[[2,1]]}']) == 2
    assert main(["weil", '{"n":2,"p":']) == 2
    assert main(["weil", "no-such-file.json"]) == 2


def test_bracket_vector_fields(files, capsys):
    x = files("x.json", form_to_json(vector_field_form(PolyMap(1, [Poly.var(1, 0)]))))
    y = files("y.json", form_to_json(vector_field_form(PolyMap(1, [Poly.one(1)]))))
    assert main(["bracket", x, y, "--level", "L1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["p"] == 0 and out["coeffs"]["[1]"]["components"] == [[{"c": "1", "e": [0]}]]


def test_bracket_levels_and_preconditions(files, capsys):
    ident = files("id.json", form_to_json(identity_one_form(1)))
    assert main(["bracket", ident, ident, "--level", "FN123"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["class"] == "omega123" and out["p"] == 2
    # an alternating but non-multilinear form trips FN123's precondition
    from fnlab.forms import Kernel, cube_dim, cube_var, form_from_kernel
    n = cube_dim(1, 1)
    sq = form_from_kernel(Kernel(1, 1, PolyMap(n, [
        Poly.var(n, cube_var(1, 1, {1}, 0)) ** 2])))
    bad = files("sq.json", form_to_json(sq))
    assert main(["bracket", bad, ident, "--level", "FN123"]) == 3
    capsys.readouterr()


def test_bracket_dimension_mismatch(files, capsys):
    x = files("x.json", form_to_json(vector_field_form(PolyMap(1, [Poly.var(1, 0)]))))
    y2 = files("y2.json", form_to_json(vector_field_form(
        PolyMap(2, [Poly.var(2, 0), Poly.var(2, 1)]))))
    assert main(["bracket", x, y2]) == 2
    capsys.readouterr()


def test_verify_small_pass(capsys):
    assert main(["verify", "--cases", "2", "--suites", "weil,conv", "--seed", "5"]) == 0
    out = capsys.readouterr().out
    assert "result: PASS" in out


def test_verify_json_deterministic(capsys):
    args = ["verify", "--cases", "2", "--suites", "microcalc", "--json", "--seed", "9"]
    assert main(args) == 0
    first = json.loads(capsys.readouterr().out)
    assert main(args) == 0
    second = json.loads(capsys.readouterr().out)
    for report in (first, second):
        for entry in report["properties"]:
            entry.pop("time_s")
    assert first == second


def test_verify_rejects_bad_config(capsys):
    assert main(["verify", "--config", '{"cases_per_property":0}']) == 2
    assert main(["verify", "--suites", "weil,bogus"]) == 2


def test_jacobi3_fields(files, capsys):
    x = files("vx.json", polymap_to_json(PolyMap(1, [Poly.var(1, 0)])))
    y = files("vy.json", polymap_to_json(PolyMap(1, [Poly.one(1)])))
    z = files("vz.json", polymap_to_json(PolyMap(1, [Poly.zero(1)])))
    assert main(["jacobi3", "--fields", x, y, z, "--point", "1/2"]) == 0
    assert "result: PASS" in capsys.readouterr().out
    assert main(["jacobi3", "--fields", x, y, z, "--point", "1,2"]) == 2
    capsys.readouterr()


def test_jacobi3_dimension_mismatch(files, capsys):
    x = files("vx.json", polymap_to_json(PolyMap(1, [Poly.var(1, 0)])))
    w = files("vw.json", polymap_to_json(PolyMap(2, [Poly.var(2, 0), Poly.var(2, 1)])))
    assert main(["jacobi3", "--fields", x, x, w]) == 2
    capsys.readouterr()


def test_jacobi3_random(capsys):
    assert main(["jacobi3", "--random", "4", "--seed", "7", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["all_zero"] and len(data["cases"]) == 4
