import json
import shutil
import subprocess

import pytest

from acyclic_coloring.cli import main
from acyclic_coloring.engine import run
from acyclic_coloring.graph import complete_bipartite_graph, cycle_graph, format_graph, read_graph
from acyclic_coloring.palette import parse_coloring


@pytest.fixture
def k33_file(tmp_path):
    path = tmp_path / "k33.txt"
    path.write_text(format_graph(complete_bipartite_graph(3, 3)))
    return str(path)


@pytest.fixture
def c6_file(tmp_path):
    path = tmp_path / "c6.txt"
    path.write_text(format_graph(cycle_graph(6)))
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_color_and_verify(capsys, tmp_path, k33_file):
    col = str(tmp_path / "col.txt")
    code, out, _ = run_cli(capsys, "color", k33_file, "--seed", "4", "-o", col)
    assert code == 0
    stats = json.loads(out)
    assert stats["verified"] and (stats["N"], stats["K"]) == (9, 5)
    assert (stats["n"], stats["m"], stats["seed"]) == (6, 9, 4)
    colors = parse_coloring(open(col).read(), 9)
    assert max(colors) <= 9
    code, out, _ = run_cli(capsys, "verify", k33_file, col)
    assert code == 0 and "acyclic" in out


def test_color_deterministic(capsys, k33_file):
    a = run_cli(capsys, "color", k33_file, "--seed", "11")
    b = run_cli(capsys, "color", k33_file, "--seed", "11")
    assert a == b


def test_color_step_cap_exit(capsys, c6_file):
    g = cycle_graph(6)
    seed = next(s for s in range(10_000) if run(g, 1.569, s)[1].steps)
    code, out, _ = run_cli(capsys, "color", c6_file, "--seed", str(seed), "--step-cap", "0")
    assert code == 2
    stats = json.loads(out)
    assert not stats["terminated"] and not stats["verified"]


def test_color_instrumented(capsys, k33_file):
    code, out, _ = run_cli(capsys, "color", k33_file, "--seed", "1", "--gamma", "0.3", "--instrumented")
    assert code == 0 and json.loads(out)["verified"]


def test_colors_override(capsys, k33_file):
    code, out, err = run_cli(capsys, "color", k33_file, "--seed", "1", "--colors", "12")
    assert code == 0 and json.loads(out)["N"] == 12 and "warning" in err
    code, _, err = run_cli(capsys, "color", k33_file, "--seed", "1", "--colors", "8")
    assert code == 1 and "below" in err


def test_matching_uses_one_color(capsys, tmp_path):
    path = tmp_path / "matching.txt"
    path.write_text("0 1\n2 3\n")
    code, out, _ = run_cli(capsys, "color", str(path), "--seed", "0")
    assert code == 0 and json.loads(out)["verified"]


def test_verify_reports_cycle(capsys, tmp_path, c6_file):
    g = read_graph(c6_file)
    walk = [g.edge_id(i, (i + 1) % 6) for i in range(6)]
    col = tmp_path / "bad.txt"
    col.write_text("".join(f"{e} {1 + i % 2}\n" for i, e in enumerate(walk)))
    code, out, _ = run_cli(capsys, "verify", c6_file, str(col))
    assert code == 1 and "bichromatic cycle" in out


def test_verify_reports_cherry(capsys, tmp_path, c6_file):
    col = tmp_path / "cherry.txt"
    col.write_text("".join(f"{e} 1\n" for e in range(6)))
    code, out, _ = run_cli(capsys, "verify", c6_file, str(col))
    assert code == 1 and "cherry" in out


def test_verify_missing_edge(capsys, tmp_path, c6_file):
    col = tmp_path / "short.txt"
    col.write_text("0 1\n1 2\n")
    code, _, err = run_cli(capsys, "verify", c6_file, str(col))
    assert code == 1 and "misses" in err


def test_bad_graph_input(capsys, tmp_path):
    path = tmp_path / "loop.txt"
    path.write_text("0 1\n1 1\n")
    code, _, err = run_cli(capsys, "color", str(path), "--seed", "0")
    assert code == 1 and "line 2" in err
    code, _, err = run_cli(capsys, "color", str(tmp_path / "absent.txt"), "--seed", "0")
    assert code == 1


def test_bound(capsys):
    code, out, _ = run_cli(capsys, "bound", "--gamma", "1.569")
    res = json.loads(out)
    assert code == 0 and res["rho"] < 1 and (res["N"], res["K"]) == (9, 5)
    code, out, _ = run_cli(capsys, "bound", "--gamma", "1.5")
    assert json.loads(out)["rho"] > 1
    code, out, _ = run_cli(capsys, "bound", "--threshold", "--tol", "1e-4")
    res = json.loads(out)
    assert res["gamma_threshold"] <= 1.569 and res["constant"] <= 3.569
    code, _, _ = run_cli(capsys, "bound", "--gamma", "-1")
    assert code == 1


def test_colorval_mc(capsys, k33_file):
    argv = ("colorval-mc", k33_file, "--triple", "0,3,3", "--trials", "500", "--seed", "2")
    code, out, _ = run_cli(capsys, *argv)
    res = json.loads(out)
    assert code == 0 and res["triples"] == [[0, 3, 3]] and res["trials"] == 500
    assert res["bound"] == pytest.approx(0.0093312)
    assert run_cli(capsys, *argv)[1] == out
    code, _, err = run_cli(capsys, "colorval-mc", k33_file, "--triple", "0,3,4", "--seed", "2")
    assert code == 1 and "not admissible" in err
    code, _, err = run_cli(capsys, "colorval-mc", k33_file, "--triple", "0,1,3", "--seed", "2")
    assert code == 1


def test_forest(capsys, k33_file):
    code, out, _ = run_cli(capsys, "forest", k33_file, "--seed", "77", "--gamma", "0.3")
    res = json.loads(out)
    assert code == 0 and res["m"] == 9 and res["n_internal"] >= 1
    assert bytes.fromhex(res["encoding"]).startswith(b"9 ")
    code, text, _ = run_cli(capsys, "forest", k33_file, "--seed", "77", "--gamma", "0.3", "--text")
    assert text.rstrip().endswith(res["encoding"])


def test_gen(capsys, tmp_path):
    out_path = tmp_path / "g.txt"
    code, _, _ = run_cli(capsys, "gen", "--n", "20", "--d", "3", "--seed", "5", "-o", str(out_path))
    g = read_graph(str(out_path))
    assert code == 0 and g.n == 20 and all(g.degree(v) == 3 for v in range(20))
    code, _, err = run_cli(capsys, "gen", "--n", "5", "--d", "3", "--seed", "5")
    assert code == 1 and "even" in err


@pytest.mark.skipif(shutil.which("acyclic-coloring") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["acyclic-coloring", "bound", "--gamma", "1.569"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["rho"] < 1
