import json
import subprocess
import sys
import time

import pytest

from cubelines.cli import main, read_labeled_graph
from cubelines.coloring import Coloring, apply_to_coloring
from cubelines.cube import CubeParams
from cubelines.group import (enumerate_group, parse_automorphism, point_map,
                             rotation_generator)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lines(capsys):
    assert run(capsys, "lines", "--n", "3", "--d", "2", "--count-only") == (0, "8\n", "")
    code, out, _ = run(capsys, "lines", "--n", "3", "--d", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1 and data["count"] == 8
    assert data["lines"][0]["type"] == [0, "+"]
    code, out, _ = run(capsys, "lines", "--n", "3", "--d", "2")
    assert len(out.splitlines()) == 8


def test_group_order(capsys):
    assert run(capsys, "group", "order", "--n", "4", "--d", "3")[:2] == (0, "192\n")
    assert run(capsys, "group", "order", "--n", "2", "--d", "3")[:2] == (0, "40320\n")
    code, out, _ = run(capsys, "group", "order", "--n", "4", "--d", "3", "--json")
    assert json.loads(out) == {"schema": 1, "n": 4, "d": 3, "order": 192}


def test_group_enumerate(capsys, tmp_path):
    out_file = tmp_path / "g.txt"
    assert run(capsys, "group", "enumerate", "--n", "3", "--d", "3", "--out", str(out_file))[0] == 0
    rows = out_file.read_text().splitlines()
    cube = CubeParams(3, 3)
    assert [parse_automorphism(r, cube) for r in rows] == list(enumerate_group(cube))
    code, _, err = run(capsys, "group", "enumerate", "--n", "4", "--d", "3", "--cap", "10")
    assert code == 2 and "192" in err
    code, _, err = run(capsys, "group", "enumerate", "--n", "2", "--d", "3")
    assert code == 2


def test_degree(capsys):
    code, out, _ = run(capsys, "degree", "--n", "5", "--d", "3", "--point", "2,2,0", "--json")
    data = json.loads(out)
    assert code == 0 and data["degree"] == 5
    assert sorted(b["active_lines"] for b in data["blocks"]) == [1, 4]
    assert run(capsys, "degree", "--n", "5", "--d", "3", "--point", "2,9,0")[0] == 2
    assert run(capsys, "degree", "--n", "5", "--d", "3", "--point", "a,b")[0] == 2


def test_canon(capsys, tmp_path):
    code, out, _ = run(capsys, "canon", "--ttt", "x........", "--n", "3", "--d", "2")
    assert code == 0 and out.splitlines()[0] == "........x"
    s = Coloring.from_ttt("xo.......", CubeParams(3, 2))
    path = tmp_path / "s.json"
    path.write_text(s.to_json())
    code, out, _ = run(capsys, "canon", "--in", str(path), "--json", "--threads", "2")
    data = json.loads(out)
    witness = parse_automorphism(data["witness"], s.cube)
    assert apply_to_coloring(witness, s).colors == tuple(data["colors"])
    # JSON output is itself a valid coloring document
    assert Coloring.from_json(json.dumps({k: data[k] for k in ("n", "d", "k", "colors")}))
    assert run(capsys, "canon", "--ttt", "x")[0] == 2
    assert run(capsys, "canon")[0] == 2


def test_iso(capsys, tmp_path):
    cube = CubeParams(4, 3)
    s1 = Coloring(cube, 3, tuple((i * 7) % 3 if i % 5 else 0 for i in range(64)))
    s2 = apply_to_coloring(rotation_generator(0, 1, cube), s1)
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    a.write_text(s1.to_json())
    b.write_text(s2.to_json())
    code, out, _ = run(capsys, "iso", "--a", str(a), "--b", str(b))
    assert code == 0
    assert apply_to_coloring(parse_automorphism(out.strip(), cube), s1) == s2
    b.write_text(Coloring(cube, 3, (0,) * 63 + (1,)).to_json())
    assert run(capsys, "iso", "--a", str(a), "--b", str(b))[:2] == (1, "not isomorphic\n")
    b.write_text("{not json")
    assert run(capsys, "iso", "--a", str(a), "--b", str(b))[0] == 2
    assert run(capsys, "iso", "--a", str(a), "--b", str(tmp_path / "missing.json"))[0] == 2


def test_reduce_and_graph_iso(capsys, tmp_path):
    g1, g2, g3 = tmp_path / "g1", tmp_path / "g2", tmp_path / "g3"
    g1.write_text("# path\n0 1\n1 2\n")
    g2.write_text("b c\na c\n")
    g3.write_text("0 1\n1 2\n0 2\n")
    out_file = tmp_path / "s.json"
    assert run(capsys, "reduce", "--graph", str(g1), "--out", str(out_file))[0] == 0
    s = Coloring.from_json(out_file.read_text())
    assert s.cube == CubeParams(10, 2) and sum(s.colors) == 6
    code, out, _ = run(capsys, "graph-iso", "--a", str(g1), "--b", str(g2), "--json")
    data = json.loads(out)
    assert code == 0 and data["isomorphic"]
    assert data["bijection"]["1"] == "c"
    for mode in ("fast", "full"):
        assert run(capsys, "graph-iso", "--a", str(g1), "--b", str(g3), "--mode", mode)[0] == 1
    iso = tmp_path / "iso"
    iso.write_text("p 3\n0 1\n")
    code, _, err = run(capsys, "reduce", "--graph", str(iso))
    assert code == 2 and "isolated" in err


def test_read_labeled_graph():
    g, labels = read_labeled_graph("10 2\n2 7\n")
    assert labels == ["2", "7", "10"]
    assert g.edges == {(0, 2), (0, 1)}


def test_factor(capsys, tmp_path):
    cube = CubeParams(4, 3)
    a = list(enumerate_group(cube))[77]
    path = tmp_path / "m.txt"
    path.write_text("\n".join(map(str, point_map(a))) + "\n")
    code, out, _ = run(capsys, "factor", "--map", str(path), "--n", "4", "--d", "3")
    assert code == 0 and parse_automorphism(out.strip(), cube) == a
    m = list(range(64))
    m[0], m[1] = 1, 0
    path.write_text("\n".join(map(str, m)))
    assert run(capsys, "factor", "--map", str(path), "--n", "4", "--d", "3")[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--d", "2", "--suite", "lines")
    assert code == 0 and out.startswith("PASS lines")
    code, out, _ = run(capsys, "verify", "--n", "3", "--d", "3", "--suite", "group", "--json")
    assert code == 0 and json.loads(out)["suites"][0]["pass"]


@pytest.mark.parametrize("n,d", [(3, 2), (4, 2), (3, 3)])
def test_verify_all_suites(capsys, n, d):
    start = time.perf_counter()
    code, out, _ = run(capsys, "verify", "--n", str(n), "--d", str(d))
    assert time.perf_counter() - start < 60
    assert code == 0
    assert [line.split()[:2] for line in out.splitlines()] == \
        [["PASS", s + ":"] for s in ("lines", "group", "degrees", "reduction")]


def test_usage_errors(capsys):
    assert run(capsys, "lines", "--n", "1", "--d", "2")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "lines")[0] == 2
    assert main(["--help"]) == 0


def test_module_entry_point():
    done = subprocess.run([sys.executable, "-m", "cubelines.cli", "group", "order", "--n", "3", "--d", "2"],
                          capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.strip() == "8"
