import json
import subprocess
import sys

import pytest

from kext import serialize as S
from kext.cli import main
from kext.properties import instances as C


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# --- serialization ----------------------------------------------------------

@pytest.mark.parametrize("name", ["Q[C3]", "H(-1,-1)/Q", "T2(GF3)", "GF4/GF2", "Q[C2]xT2(Q)"])
def test_algebra_round_trip(name):
    E = C.get_algebra(name)
    E2 = S.load_algebra(json.loads(json.dumps(S.algebra_to_json(E))))
    assert E2.dim == E.dim and E2.field is E.field
    assert [[list(c) for c in row] for row in E2.sc] == [[list(c) for c in row] for row in E.sc]


def test_module_round_trip():
    M = C.simples("Q[S3]")[2]
    M2 = S.load_module(json.loads(json.dumps(S.module_to_json(M))))
    assert M2.dim == 2
    assert [X.rows for X in M2.action] == [X.rows for X in M.action]


def test_shorthands():
    E = S.load_algebra({"group": "S3", "field": "GF3"})
    assert E.dim == 6
    assert S.load_algebra({"quaternion": [-1, -1], "field": "Q"}).dim == 4
    assert S.load_algebra({"triangular": 3, "field": "Q", "lower": True}).dim == 6
    M = S.load_module({"permutation": ["(0 1 2)", "(0 1)"], "degree": 3}, C.get_algebra("Q[S3]"))
    assert M.dim == 3
    QI = S.load_field({"base": "Q", "steps": [{"algebraic": {"var": "i", "minpoly": ["1", "0", "1"]}}]})
    assert QI is C.lookup("QI")


def test_bundled_catalog_files():
    assert S.load_algebra("catalog:q_c3").dim == 3
    assert S.load_module("catalog:gf2c3_simple2").dim == 2


# --- command line -----------------------------------------------------------

def test_homdim(capsys):
    code, out, _ = run(capsys, "homdim", "--algebra", "q_c3.json",
                       "--source", "reg.json", "--target", "reg.json")
    assert code == 0 and json.loads(out) == {"dim": 3}


def test_algebra_info_text(capsys):
    code, out, _ = run(capsys, "algebra-info", "--algebra", "catalog:GF2[S3]", "--format", "text")
    assert code == 0
    assert "radical_dim" in out and "1" in out


def test_split_command(capsys):
    code, out, _ = run(capsys, "split", "--simple", "gf2c3_simple2.json", "--extend", "GF4")
    obj = json.loads(out)
    assert code == 0 and [s["dim"] for s in obj["summands"]] == [1, 1]


def test_module_info_and_decompose(capsys):
    code, out, _ = run(capsys, "module-info", "--module", "catalog:T2(Q)/reg")
    obj = json.loads(out)
    assert code == 0 and obj["socle_dims"] == [0, 2, 3] and not obj["semisimple"]
    code, out, _ = run(capsys, "decompose", "--module", "catalog:Q[C3]/reg")
    assert code == 0 and [s["dim"] for s in json.loads(out)["summands"]] == [1, 2]


def test_check_lines(capsys):
    code, out, _ = run(capsys, "check", "--check", "INSEP_COUNTEREXAMPLE", "--seed", "1")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(lines) == 2
    assert lines[-1]["pass"] is True and "wall_time" not in lines[-1]


def test_usage_errors(capsys):
    assert run(capsys, "homdim")[0] == 2
    assert run(capsys, "check", "--check", "NOPE")[0] == 2
    assert run(capsys, "radical", "--algebra", "{not json")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_unsupported_field(capsys):
    code, _, err = run(capsys, "radical", "--algebra", "catalog:GF2T[C2]")
    assert code == 3 and "unsupported" in err


def test_failing_split_exits_one(capsys, monkeypatch):
    from kext import scalarext as SX
    monkeypatch.setattr(SX.SplitReport, "consistent", property(lambda self: False))
    code, _, _ = run(capsys, "split", "--simple", "gf2c3_simple2.json", "--extend", "GF4")
    assert code == 1


def test_catalog_dir_override(tmp_path, monkeypatch, capsys):
    (tmp_path / "mine.json").write_text(json.dumps({"group": "C5", "field": "GF2"}))
    monkeypatch.setenv("KEXT_CATALOG_DIR", str(tmp_path))
    code, out, _ = run(capsys, "algebra-info", "--algebra", "catalog:mine")
    assert code == 0 and json.loads(out)["dim"] == 5


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "kext.cli", "radical", "--algebra",
                          "catalog:GF2[C2]"], capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["dim"] == 1
