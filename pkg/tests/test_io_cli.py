import io as stdio
import json
import subprocess
import sys

import pytest

from tropcsm import io
from tropcsm.bergman import bergman_fan
from tropcsm.cli import run
from tropcsm.fan import cycles_equal
from tropcsm.matroid import fano, uniform
from tropcsm.noether import simplex, staircase_simplex


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


def call(argv):
    buf = stdio.StringIO()
    code = run(argv, buf)
    return code, (json.loads(buf.getvalue()) if buf.getvalue() else None)


@pytest.fixture
def u23(tmp_path):
    return write(tmp_path, "u23.json", io.matroid_to_json(uniform(2, 3)))


@pytest.fixture
def simplex4(tmp_path):
    return write(tmp_path, "simplex4.json", simplex(4).to_json())


# -- serialization ------------------------------------------------------------------

def test_matroid_roundtrip():
    for M in (uniform(3, 5), fano()):
        assert io.matroid_from_json(json.loads(json.dumps(io.matroid_to_json(M)))) == M


def test_fan_roundtrip():
    F = bergman_fan(uniform(3, 4))
    G = io.fan_from_json(json.loads(json.dumps(F.to_json())))
    assert cycles_equal(F, G)


def test_cycle_with_rational_vertices():
    doc = {"ambient_dim": 2, "dim": 1, "cells": [
        {"apex": ["1/2", 0], "rays": [[1, 0]]},
        {"vertices": [["1/2", 0], [0, 0]], "rays": []}]}
    A = io.cycle_from_json(doc)
    again = io.cycle_from_json(io.cycle_to_json(A))
    assert again.cells == A.cells
    assert io.cycle_to_json(A)["cells"][0]["vertices"] == [["1/2", "0"]]


def test_fan_reader_rejects_translated_cells():
    doc = {"ambient_dim": 1, "cells": [{"apex": [1], "rays": [[1]]}]}
    with pytest.raises(io.InputError) as e:
        io.fan_from_json(doc)
    assert e.value.code == "not-a-fan"
    assert not io.is_fan_document(doc)


@pytest.mark.parametrize("doc,code", [
    ({"bases": [[0]]}, "missing-n"),
    ({"n": 2, "bases": [[0, 5]]}, "element-out-of-range"),
    ({"n": 2, "bases": [[0, 1], [0]]}, "UnequalCardinality"),
    ({"n": 2, "bases": [["a"]]}, "not-integer-vector"),
])
def test_matroid_reader_codes(doc, code):
    with pytest.raises(io.InputError) as e:
        io.matroid_from_json(doc)
    assert e.value.code == code


def test_triangulation_reader_checks_indices():
    with pytest.raises(io.InputError):
        io.triangulation_from_json({"points": [[0, 0, 0]], "tets": [[0, 0, 0, 0]]})


def test_rational_parsing():
    assert io.format_rational(io.rational("6/4")) == "3/2"
    with pytest.raises(io.InputError):
        io.rational("x")


# -- commands -----------------------------------------------------------------------

def test_csm_compute_origin_weight(u23):
    code, rep = call(["csm", "compute", u23, "-k", "0"])
    assert code == 0 and rep["schema"] == 1 and rep["verdict"] == "pass"
    cells = rep["results"]["cycles"][0]["cycle"]["cells"]
    assert cells == [{"rays": [], "lineality": [], "weight": -1}]


def test_noether_staircase(simplex4):
    code, rep = call(["noether", "check", simplex4, "--staircase"])
    r = rep["results"]
    assert code == 0 and r["noether"]["lhs"] == r["noether"]["rhs"] == 24
    assert r["census"]["lhs"] == r["census"]["rhs"] == 24 and r["ledgers_agree"]


def test_noether_explicit_triangulation(tmp_path, simplex4):
    tri = write(tmp_path, "tri.json", staircase_simplex(4).to_json())
    code, rep = call(["noether", "check", simplex4, "--triangulation", tri])
    assert code == 0 and rep["results"]["validity"].startswith("unimodular")


def test_noether_without_triangulation_is_labelled(simplex4):
    code, rep = call(["noether", "check", simplex4])
    assert code == 0 and rep["results"]["validity"].startswith("outside guaranteed validity")


def test_malformed_json_exits_2(tmp_path, capsys):
    bad = write(tmp_path, "malformed.json", "{\"n\": 3, ")
    assert run(["matroid", "info", bad], stdio.StringIO()) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "json-parse" and err["schema"] == 1


def test_missing_file_and_usage_errors(capsys):
    assert run(["matroid", "info", "/nonexistent.json"], stdio.StringIO()) == 2
    assert json.loads(capsys.readouterr().err)["error"] == "io-error"
    assert run(["matroid"], stdio.StringIO()) == 2
    assert run(["bogus"], stdio.StringIO()) == 2


def test_matroid_info(u23):
    code, rep = call(["matroid", "info", u23])
    r = rep["results"]
    assert code == 0 and r["characteristic_coefficients"] == [2, -3, 1] and r["beta"] == 1
    assert r["reduced_coefficients"] == [-2, 1]
    assert [len(level) for level in r["flats_by_rank"]] == [1, 3, 1]


def test_bergman_build_has_chains(u23):
    code, rep = call(["bergman", "build", u23])
    assert code == 0 and len(rep["results"]["cells"]) == 3
    assert all(len(c["chain"]) == 1 for c in rep["results"]["cells"])


def test_csm_verify(u23):
    code, rep = call(["csm", "verify", u23, "--seed", "3", "--transforms", "5"])
    r = rep["results"]
    assert code == 0 and r["def_equals_psi"] and r["exponent_equals_dim"]
    assert r["gl_invariance"]["ok"] and rep["inputs"]["seed"] == 3


def test_fan_commands(tmp_path):
    tripod = {"ambient_dim": 2, "cells": [{"rays": [r]} for r in ([1, 0], [0, 1], [-1, -1])]}
    good = write(tmp_path, "tripod.json", tripod)
    code, rep = call(["fan", "balance", good])
    assert code == 0 and rep["results"]["balanced"]
    tripod["cells"][2]["weight"] = 2
    bad = write(tmp_path, "heavy.json", tripod)
    code, rep = call(["fan", "balance", bad])
    assert code == 1 and rep["verdict"] == "fail" and rep["results"]["residual"] == [-1, -1]
    code, rep = call(["fan", "intersect", good, good])
    assert code == 0 and rep["results"]["intersection"]["cells"][0]["weight"] == 1


def test_fan_recession(tmp_path):
    F = bergman_fan(uniform(2, 3)).to_json()
    for c in F["cells"]:
        c["apex"] = [1, 1]
    code, rep = call(["fan", "recession", write(tmp_path, "shifted.json", F)])
    assert code == 0 and len(rep["results"]["recession"]["cells"]) == 3


def test_paperchecks():
    code, rep = call(["paperchecks"])
    statuses = [c["status"] for c in rep["results"]["checks"]]
    assert code == 0 and "fail" not in statuses and statuses.count("expected-fail") == 2


def test_reports_are_byte_identical(u23):
    outs = []
    for _ in range(2):
        buf = stdio.StringIO()
        run(["csm", "verify", u23, "--transforms", "5"], buf)
        outs.append(buf.getvalue())
    assert outs[0] == outs[1]


def test_timing_goes_to_stderr(u23, capsys):
    run(["--timing", "matroid", "info", u23], stdio.StringIO())
    assert "wall_time_s" in json.loads(capsys.readouterr().err)


def test_module_entry_point(u23):
    p = subprocess.run([sys.executable, "-m", "tropcsm", "matroid", "info", u23],
                       capture_output=True, text=True)
    assert p.returncode == 0 and json.loads(p.stdout)["command"] == "matroid info"
