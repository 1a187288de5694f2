import io
import json

import fillscope as fs
from fillscope import formats
from fillscope.cli import EXIT_BUDGET, EXIT_INVARIANT, EXIT_OK, EXIT_PARSE, main
from fillscope.spaces import builtin_simplicial


def run(argv):
    out = io.StringIO()
    err = io.StringIO()
    code = main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_complex_check_builtin():
    code, out, _ = run(["complex", "check", "tetra-boundary"])
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["result"]["cells"] == [4, 6, 4]
    assert doc["result"]["euler_characteristic"] == 2


def test_complex_homology():
    code, out, _ = run(["complex", "homology", "torus-1vertex"])
    assert code == EXIT_OK
    hom = json.loads(out)["result"]["homology"]
    assert hom["1"] == {"betti": 2, "torsion": []}


def test_complex_check_rejects_bad_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"format": "fillscope-complex/1", "cells": 3}')
    code, _, err = run(["complex", "check", str(bad)])
    assert code == EXIT_PARSE
    assert "parse error" in err


def test_complex_check_rejects_invariant_violation(tmp_path):
    doc = {
        "format": "fillscope-complex/1",
        "cells": {"0": ["v", "w"], "1": ["e"], "2": ["f"]},
        "boundary": {
            "1": [["e", [["1", "w"], ["-1", "v"]]]],
            "2": [["f", [["1", "e"]]]],
        },
    }
    bad = tmp_path / "dd.json"
    bad.write_text(json.dumps(doc))
    code, _, err = run(["complex", "check", str(bad)])
    assert code == EXIT_INVARIANT
    assert "invariant violation" in err


def test_missing_file_is_parse_error():
    code, _, err = run(["complex", "check", "no-such-thing"])
    assert code == EXIT_PARSE


def test_usage_error_exit_code():
    assert main(["fill"], out=io.StringIO(), err=io.StringIO()) == EXIT_PARSE


def test_fill_command_exact():
    chain = json.dumps({"1,2": 1, "0,2": -1, "0,1": 1})
    code, out, _ = run(["fill", "tetra-boundary", "--dim", "2", "--chain", chain])
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["result"]["status"] == "Exact"
    assert doc["result"]["value"] == "1"
    assert doc["result"]["witness"] == {"0,1,2": "1"}


def test_fill_command_infinite():
    code, out, _ = run(["fill", "torus-1vertex", "--dim", "2", "--chain", '{"a": 1}'])
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["result"]["status"] == "Infinite"
    assert doc["result"]["witness"] is None


def test_fill_command_budget_exit(tmp_path):
    # a subdivided-sphere equator needs real branch and bound, so a zero
    # budget must exit with the partial-result code and carry a caveat
    cc = fs.to_chain_complex(fs.barycentric_subdivide(builtin_simplicial("tetra-boundary")))
    spec = json.dumps(
        {
            "0,b(0,1)": 1,
            "1,b(0,1)": -1,
            "1,b(1,2,3)": 1,
            "b(2,3),b(1,2,3)": -1,
            "b(2,3),b(0,2,3)": 1,
            "0,b(0,2,3)": -1,
        }
    )
    path = tmp_path / "sd.json"
    path.write_text(formats.emit_complex(cc))
    code, out, _ = run(
        ["fill", str(path), "--dim", "2", "--chain", spec, "--budget", "0"]
    )
    assert code == EXIT_BUDGET
    doc = json.loads(out)
    assert doc["result"]["status"] == "LowerBound"
    assert doc["caveats"]
    full_code, full_out, _ = run(["fill", str(path), "--dim", "2", "--chain", spec])
    assert full_code == EXIT_OK
    full_doc = json.loads(full_out)
    assert full_doc["result"]["status"] == "Exact"
    assert int(full_doc["result"]["value"]) >= int(doc["result"]["value"])


def test_profile_chain_csv_and_report(tmp_path):
    report_path = tmp_path / "report.json"
    code, out, _ = run(
        ["profile", "chain", "cp2", "--dim", "3", "--nmax", "5", "--report", str(report_path)]
    )
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "n,value,status"
    assert lines[1:] == [f"{n},0,Exact" for n in range(6)]
    doc = json.loads(report_path.read_text())
    assert doc["caveats"] == []


def test_profile_dehn_csv():
    code, out, _ = run(
        ["profile", "dehn", "pres-trivial", "--nmax", "6", "--maxlen", "12", "--maxcost", "12"]
    )
    assert code == EXIT_OK
    rows = out.strip().splitlines()[1:]
    assert rows == [f"{n},{n},Exact" for n in range(7)]


def test_profile_dehn_budget_exit():
    code, out, _ = run(
        ["profile", "dehn", "pres-z2", "--nmax", "4", "--maxlen", "8", "--maxcost", "0"]
    )
    assert code == EXIT_BUDGET
    assert "LowerBound" in out


def test_cover_build_and_subdivide(tmp_path):
    assignment = {
        "format": "fillscope-assignment/1",
        "fiber_size": 2,
        "edges": [[["1", "2"], [1, 0]]],
    }
    apath = tmp_path / "swap.json"
    apath.write_text(json.dumps(assignment))
    code, out, _ = run(["cover", "build", "circle-3", "--assignment", str(apath)])
    assert code == EXIT_OK
    cover = formats.parse_simplicial(out)
    assert [cover.n_simplices(d) for d in range(2)] == [6, 6]
    assert fs.is_connected(cover)

    code, out, _ = run(["subdivide", "tetra-boundary"])
    assert code == EXIT_OK
    sd = formats.parse_simplicial(out)
    assert [sd.n_simplices(d) for d in range(3)] == [14, 36, 24]


def test_cover_inconsistent_assignment_exit(tmp_path):
    assignment = {
        "format": "fillscope-assignment/1",
        "fiber_size": 2,
        "edges": [[["0", "1"], [1, 0]]],
    }
    apath = tmp_path / "bad.json"
    apath.write_text(json.dumps(assignment))
    code, _, err = run(["cover", "build", "tetra-boundary", "--assignment", str(apath)])
    assert code == EXIT_INVARIANT
    assert "2-simplex" in err


def test_fit_qequiv_roundtrip(tmp_path):
    t1 = fs.ProfileTable([(0, fs.EXACT), (0, fs.EXACT), (1, fs.EXACT), (2, fs.EXACT)])
    t2 = fs.ProfileTable([(0, fs.EXACT), (1, fs.EXACT), (2, fs.EXACT), (4, fs.EXACT)])
    p1 = tmp_path / "a.csv"
    p2 = tmp_path / "b.csv"
    p1.write_text(formats.emit_profile_csv(t1))
    p2.write_text(formats.emit_profile_csv(t2))
    code, out, _ = run(["fit", "qequiv", str(p1), str(p2), "--grid", "8"])
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["result"]["found"] is True
    assert doc["result"]["forward"]["A"]


def test_fit_qequiv_none_carries_caveat(tmp_path):
    quad = fs.ProfileTable([(n * n, fs.EXACT) for n in range(9)])
    lin = fs.ProfileTable([(n, fs.EXACT) for n in range(9)])
    p1 = tmp_path / "q.csv"
    p2 = tmp_path / "l.csv"
    p1.write_text(formats.emit_profile_csv(quad))
    p2.write_text(formats.emit_profile_csv(lin))
    code, out, _ = run(
        ["fit", "qequiv", str(p1), str(p2), "--grid", "amax=1;b=1;c=0;d=0"]
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["result"]["found"] is False
    assert doc["caveats"]


def test_example_command():
    for name in ("cp2", "torus7", "pres-z2", "circle-5"):
        code, out, _ = run(["example", name])
        assert code == EXIT_OK
        assert json.loads(out)["format"].startswith("fillscope-")
    code, _, err = run(["example", "wat"])
    assert code == EXIT_PARSE
