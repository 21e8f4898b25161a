import json
import subprocess
import sys

import pytest

from lagmat.cli import main
from lagmat.matfile import figure_text


@pytest.fixture
def files(tmp_path):
    out = {}
    for name in ("fig1", "fig2_gf2", "fig3_left", "fig3_right", "lsquare"):
        p = tmp_path / f"{name}.mat"
        p.write_text(figure_text(name))
        out[name] = str(p)
    return out


def run(capsys, *args):
    code = main(list(args))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_bases(files, capsys):
    code, out, _ = run(capsys, "bases", files["fig1"])
    assert code == 0
    assert set(json.loads(out)) == {"1*2*3*", "12*3*", "1*23*", "1*2*3", "123*", "12*3"}


def test_index(files, capsys):
    code, out, _ = run(capsys, "index", files["fig3_right"], "--fundamental", "123")
    d = json.loads(out)
    assert code == 0 and d["index"] == 0 and d["max_height"] == 1
    code, out, _ = run(capsys, "index", files["fig3_right"], "--fundamental", "1*23", "--verify-paths")
    d = json.loads(out)
    assert d["index"] == 1 and d["well_defined"] and d["path_sign_changes"] == [1]


def test_check_and_signs(files, capsys):
    _, out, _ = run(capsys, "check", files["fig2_gf2"])
    d = json.loads(out)
    assert d["maximality"] and d["even"] and d["field"] == "GF2"
    _, out, _ = run(capsys, "signs", files["fig3_left"], "--fundamental", "123")
    d = json.loads(out)
    assert d["signs"] == {"1*23": -1, "12*3": -1, "123": 1, "123*": -1} and d["violations"] == []


def test_orientations(files, capsys):
    _, out, _ = run(capsys, "orientations", "--bases", "1*23 12*3 123* 123")
    assert json.loads(out)["count"] == 2
    _, out, _ = run(capsys, "orientations", files["fig2_gf2"], "--full")
    d = json.loads(out)
    assert d["count"] == 1 and "table" in d["orientations"][0]


def test_crosscheck_polytope_isomorphic(files, capsys):
    _, out, _ = run(capsys, "crosscheck", files["fig1"])
    assert json.loads(out)["agree"]
    _, out, _ = run(capsys, "polytope", files["lsquare"], "--json")
    assert [f["kind"] for f in json.loads(out)["faces"]] == ["lSquare"]
    _, out, _ = run(capsys, "polytope", files["fig3_right"], "--oriented", "--fundamental", "123")
    d = json.loads(out)
    assert all(v["sign_rel"] == 1 for v in d["vertices"])
    _, out, _ = run(capsys, "polytope", files["fig3_left"], "--oriented", "--dot")
    assert out.startswith("digraph")
    _, out, _ = run(capsys, "isomorphic", files["fig3_left"], files["fig3_right"])
    assert json.loads(out)["isomorphic"]
    _, out, _ = run(capsys, "isomorphic", files["fig3_left"], files["fig3_right"], "--oriented")
    assert not json.loads(out)["isomorphic"]


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--n", "2")
    assert code == 0 and json.loads(out)["matroids"] == 15


def test_pretty(files, capsys):
    _, out, _ = run(capsys, "index", files["fig3_right"], "--fundamental", "123", "--pretty")
    assert "index: 0" in out and "path: 123 1*23" in out


@pytest.mark.parametrize("args,code,needle", [
    (["signs", "FIG1", "--fundamental", "123"], 1, "not a basis"),
    (["signs", "FIG1", "--fundamental", "12*"], 2, "index 3 unassigned"),
    (["bases", "/no/such/file.mat"], 2, "cannot read"),
    (["bases", "FIG1", "--rank", "2"], 1, "minors"),
    (["census", "--n", "7"], 1, "census supports"),
])
def test_error_codes(files, capsys, args, code, needle):
    args = [files["fig1"] if a == "FIG1" else a for a in args]
    got, _, err = run(capsys, *args)
    assert got == code and needle in err


def test_non_symmetric_file(tmp_path, capsys):
    p = tmp_path / "bad.mat"
    p.write_text("field Q\nn 2\nleft\n1 2\n3 4\n")
    code, _, err = run(capsys, "bases", str(p))
    assert code == 1 and "symmetric" in err


def test_byte_stable(files, capsys):
    outs = []
    for _ in range(2):
        run(capsys, "polytope", files["fig1"], "--oriented")
    for _ in range(2):
        _, out, _ = run(capsys, "polytope", files["fig1"], "--oriented")
        outs.append(out)
    assert outs[0] == outs[1]


def test_module_entry_point(files):
    res = subprocess.run([sys.executable, "-m", "lagmat", "bases", files["fig2_gf2"]],
                         capture_output=True, text=True, check=True)
    assert len(json.loads(res.stdout)) == 4


def test_selftest_reports_each_criterion(monkeypatch, capsys):
    import lagmat.acceptance as acc
    monkeypatch.setattr(acc, "CRITERIA", acc.CRITERIA[:4])
    code, out, _ = run(capsys, "selftest", "--pretty")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 4 and all(x.startswith("[PASS]") for x in lines)
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and json.loads(out)["passed"]
