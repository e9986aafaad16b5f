import csv
import io
import json
import subprocess
import sys

import pytest

from crosslemma import constructions as C
from crosslemma.cli import main
from crosslemma.drawing import crossing_number
from crosslemma.io import parse_drawing, save_drawing


@pytest.fixture
def write(tmp_path):
    def _write(d, name="d.tmgd"):
        path = tmp_path / name
        save_drawing(d, path)
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_stats_on_x(write, capsys):
    code, out, _ = run(capsys, "stats", write(C.x_drawing()))
    assert code == 0
    assert out.startswith("n=4 e=2 cr=1 ")


def test_validate_ok_and_violation(tmp_path, write, capsys):
    assert run(capsys, "validate", write(C.convex_complete(5)))[0] == 0
    bad = tmp_path / "bad.tmgd"
    bad.write_text("TMGD 1\nV a 0 0\nV b 2 0\nV c 1 0\nV z 5 5\nE e a b 0 0 2 0\nE f c z 1 0 5 5\n")
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 1 and "VertexOnEdgeInterior" in out


def test_usage_and_input_errors(tmp_path, capsys):
    assert run(capsys, "stats")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "stats", str(tmp_path / "missing.tmgd"))[0] == 2
    junk = tmp_path / "junk.tmgd"
    junk.write_text("TMGD 1\nV a 0.5 0\n")
    code, _, err = run(capsys, "stats", str(junk))
    assert code == 2 and "line 2" in err
    assert run(capsys, "--help")[0] == 0


def test_style_check_reports_witness(write, capsys):
    path = write(C.empty_lens_gadget("full-parallel-pair"))
    code, out, _ = run(capsys, "style-check", path, "--style", "separated")
    assert code == 1
    assert "fails" in out and "witness" in out and "e1" in out
    assert run(capsys, "style-check", path, "--style", "multiplicity", "--m", "2")[0] == 0
    assert run(capsys, "style-check", path, "--style", "multiplicity")[0] == 2


def test_construct_round_trips(tmp_path, capsys):
    code, out, _ = run(capsys, "construct", "--family", "convex-complete", "--n", "6")
    assert code == 0
    d = parse_drawing(out)
    assert crossing_number(d) == 15
    target = tmp_path / "arc.tmgd"
    assert run(capsys, "construct", "--family", "separated-arc", "--n", "4", "-o", str(target))[0] == 0
    assert parse_drawing(target.read_text()).e == 12


def test_transform_chain(tmp_path, write, capsys):
    src = write(C.empty_lens_gadget("between-crossings"))
    rerouted = tmp_path / "r.tmgd"
    code, _, err = run(capsys, "transform", "reroute", src, "-o", str(rerouted))
    assert code == 0 and "cr 4->2" in err
    code, out, _ = run(capsys, "transform", "planarize", write(C.convex_complete(5), "k5.tmgd"))
    flat = parse_drawing(out)
    assert (flat.n, flat.e, crossing_number(flat)) == (10, 20, 0)
    code, out, _ = run(capsys, "transform", "split", write(C.convex_complete(6), "k6.tmgd"), "--degree", "3")
    assert code == 0 and parse_drawing(out).max_degree() <= 3


def test_render(write, tmp_path, capsys):
    code, out, _ = run(capsys, "render", write(C.x_drawing()))
    assert code == 0 and out.count('class="crossing"') == 1
    code, out, _ = run(capsys, "render", write(C.x_drawing()), "--no-crossings", "--width", "200")
    assert 'class="crossing"' not in out and 'width="200"' in out


def test_bisect(write, capsys):
    path = write(C.two_cliques(5))
    code, out, _ = run(capsys, "bisect", path, "--style", "multiplicity", "--m", "1")
    assert code == 0 and "method=oracle width=1" in out and "holds" in out
    code, out, _ = run(capsys, "bisect", path, "--heuristic", "--style", "multiplicity", "--m", "1")
    assert code == 0 and "method=heuristic width=1" in out
    code, out, _ = run(capsys, "bisect", write(C.empty_lens_gadget("full-parallel-pair"), "g.tmgd"))
    assert code == 1 and "not separated" in out


def test_decompose(write, capsys):
    code, out, _ = run(capsys, "decompose", write(C.convex_complete(7)), "--style", "multiplicity", "--m", "1")
    assert code == 0
    assert out.startswith("# decomposition") and "step 0:" in out


def test_bound_check(write, capsys):
    code, out, _ = run(capsys, "bound-check", write(C.convex_complete(8)), "--style", "multiplicity", "--m", "1")
    assert code == 0 and "verdict=n/a" in out
    code, out, _ = run(capsys, "bound-check", write(C.empty_lens_gadget("full-parallel-pair"), "g.tmgd"))
    assert code == 1 and "not separated" in out


def test_report_table(capsys):
    code, out, _ = run(capsys, "report", "--family", "convex-complete", "--n-range", "5..7",
                       "--style", "multiplicity", "--m", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split()[:4] == ["style", "n", "e", "cr"]
    assert len([ln for ln in lines[1:] if not ln.startswith("#")]) == 3
    assert any(ln.startswith("# general bound") for ln in lines)
    assert any(ln.startswith("# headline bound") for ln in lines)


def test_report_csv_and_json(capsys):
    args = ("report", "--family", "even-cycle", "--n-range", "4..6", "--style", "girth", "--r", "1")
    code, out, _ = run(capsys, *args, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["n"] for r in rows] == ["4", "4", "6"]
    code, out, _ = run(capsys, *args, "--format", "json")
    data = json.loads(out)
    assert all(row["verdict"] == "n/a" for row in data)


def test_report_bad_range(capsys):
    assert run(capsys, "report", "--family", "convex-complete", "--n-range", "7..5")[0] == 2


def test_module_entry_point(write):
    res = subprocess.run([sys.executable, "-m", "crosslemma", "stats", write(C.x_drawing())],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.startswith("n=4 e=2 cr=1")
