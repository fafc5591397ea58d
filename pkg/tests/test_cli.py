import json

import pytest

from curvelegendrian.cli import REPORT_BEGIN, REPORT_END, main
from curvelegendrian.curve import curve_from_json
from curvelegendrian.front import front_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_invariants_cstar(capsys):
    got = run_json(capsys, "invariants", "--corpus", "cstar")
    assert {k: got[k] for k in ("tb", "rot", "winding", "jplus")} == {"tb": -3, "rot": 0, "winding": 0, "jplus": -2}


def test_invariants_square(capsys):
    got = run_json(capsys, "invariants", "--corpus", "square")
    assert {k: got[k] for k in ("tb", "rot", "winding", "jplus")} == {"tb": 0, "rot": 0, "winding": 1, "jplus": 0}


def test_poincare_cstar(capsys):
    got = run_json(capsys, "poincare", "--corpus", "cstar", "--satellite", "stab-unknot")
    assert got["set"] == [[[1, 2], [-1, 1]]]


def test_poincare_other_sign(capsys):
    got = run_json(capsys, "poincare", "--corpus", "cstar", "--satellite", "stab-unknot:-1")
    assert got["set_text"] == ["t^3 + t + t^-3"]


def test_distinguish(capsys, tmp_path):
    got = run_json(capsys, "distinguish", "cstar", "fig2_row,iv,right")
    assert got["verdict"] == "distinct"
    got = run_json(capsys, "distinguish", "c_rs,1,0", "cstar")
    assert got["verdict"] == "indistinguishable-by-this-invariant"


def test_front_and_satellite_round_trip(capsys, tmp_path):
    front = run_json(capsys, "front", "--corpus", "fig8")
    assert front_from_json(front).to_json() == front
    path = tmp_path / "fig8.json"
    path.write_text(json.dumps({"type": "rect", "corners": [[0, 0], [2, 0], [2, 3], [4, 3], [4, 1], [1, 1],
                                                            [1, 2], [0, 2]]}))
    out = tmp_path / "sat.json"
    code, _, err = run(capsys, "satellite", "--pattern", str(path), "--companion", "stab-unknot:+1", "-o", str(out))
    assert code == 0, err
    sat = json.loads(out.read_text())
    assert front_from_json(sat).to_json() == sat
    dga = run_json(capsys, "dga", str(out))
    assert {g["name"] for g in dga["generators"]} == set(dga["differential"])


def test_outputs_are_byte_identical(capsys):
    a = run(capsys, "poincare", "--corpus", "c_rs,1,1")
    b = run(capsys, "poincare", "--corpus", "c_rs,1,1")
    assert a == b
    a = run(capsys, "render", "--corpus", "cstar")
    b = run(capsys, "render", "--corpus", "cstar")
    assert a == b and a[1].lstrip().startswith("<?xml")


def test_report(capsys, tmp_path):
    code, out, err = run(capsys, "report", "--corpus", "cstar", "-o", str(tmp_path))
    assert code == 0, err
    lines = out.splitlines()
    assert lines[0] == REPORT_BEGIN and lines[-1] == REPORT_END
    summary = json.loads("\n".join(lines[1:-1]))
    assert summary["poincare"]["set_text"] == ["2t + t^-1"]
    assert summary["graded_rulings"] >= 1
    for name in ("curve.svg", "front.svg", "satellite.svg", "report.json"):
        assert (tmp_path / name).stat().st_size > 0
    assert json.loads((tmp_path / "report.json").read_text()) == summary


def test_corpus_list(capsys):
    got = run_json(capsys, "corpus-list")
    assert "cstar" in got["curves"] and got["fig2_rows"] == ["i", "ii", "iii", "iv"]


@pytest.mark.parametrize("argv, code", [
    (["bogus"], 1),
    (["invariants"], 1),
    (["invariants", "/no/such/file.json"], 1),
    (["invariants", "--corpus", "heart"], 2),
    (["invariants", "--corpus", "c_rs,0,0"], 2),
    (["poincare", "--corpus", "cstar", "--satellite", "trefoil"], 1),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_validation_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"type": "rect", "corners": [[0, 0], [1, 1]]}))
    assert run(capsys, "invariants", str(bad))[0] == 2
    garbled = tmp_path / "garbled.json"
    garbled.write_text("{not json")
    assert run(capsys, "invariants", str(garbled))[0] == 1


def test_internal_error_exit_code(capsys, monkeypatch):
    import curvelegendrian.cli as cli
    from curvelegendrian.dga import DifferentialError

    def broken(dga):
        raise DifferentialError("d^2 != 0 on ['a1']")

    monkeypatch.setattr(cli, "check", broken)
    code, _, err = run(capsys, "dga", "--corpus", "cstar")
    assert code == 3 and "d^2" in err


def test_curve_json_schema():
    c = curve_from_json({"type": "rect", "corners": [[0, 0], [2, 0], [2, 2], [0, 2]]})
    assert curve_from_json(c.to_json()) == c
