import io
import subprocess
import sys

import pytest

from dubrovnik.cli import main, run

UNKNOT = "X 1 1 2 2\n"
HOPF = "X 1 3 2 4\nX 3 1 4 2\n"


@pytest.fixture
def pd_file(tmp_path):
    def make(text, name="d.pd"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return make


def test_compute_unknot(pd_file):
    r = run(["compute", "--input", pd_file("O 1\n")])
    assert r.code == 0
    assert r.lines == ["1 l^0 z^0", "zdeg=0 zmin=0 components=1"]


def test_compute_ambient_curl(pd_file):
    r = run(["compute", "--input", pd_file(UNKNOT), "--ambient"])
    assert r.lines[0] == "1 l^0 z^0"


def test_compute_hopf(pd_file):
    r = run(["compute", "--input", pd_file(HOPF)])
    assert r.code == 0
    assert r.lines[1] == "zdeg=1 zmin=-1 components=2"


def test_compute_errors(pd_file):
    assert run(["compute", "--input", pd_file("X 1 2 3\n")]).code == 2
    tangle = pd_file("X 1 3 4 2\nE 1 NW\nE 2 NE\nE 3 SW\nE 4 SE\n")
    assert run(["compute", "--input", tangle]).code == 1
    assert run(["compute", "--input", pd_file("X 1 2 1 2\n")]).code == 1
    assert run(["compute", "--input", "/nonexistent/file.pd"]).code == 1


def test_decompose(pd_file):
    tangle = pd_file("X 1 3 4 2\nE 1 NW\nE 2 NE\nE 3 SW\nE 4 SE\n")
    r = run(["decompose", "--input", tangle])
    assert r.code == 0
    assert r.lines[:4] == ["P: 0", "Q: 0", "R1: 0", "R2: 1 l^0 z^0"]
    r3 = run(["decompose", "--input", tangle, "--basis3"])
    assert r3.lines[:3] == ["P: 1 l^0 z^1", "Q: -1 l^0 z^1", "R1: 1 l^0 z^0"]
    assert run(["decompose", "--input", pd_file(HOPF)]).code == 1


def test_bound(pd_file):
    w = pd_file("SLOTS 1\nJOIN 1.NW 1.NE\nJOIN 1.SW 1.SE\n", "w.txt")
    t = pd_file("X 1 3 4 2\nE 1 NW\nE 2 NE\nE 3 SW\nE 4 SE\n", "t.pd")
    r = run(["bound", "--wiring", w, "--tangles", t])
    assert (r.code, r.lines) == (0, ["bound=0 actual=0 slack=0"])
    assert run(["bound", "--wiring", w, "--tangles", t, t]).code == 1
    bad = pd_file("SLOTS 1\nJOIN 1.NW 1.SE\nJOIN 1.NE 1.SW\n", "bad.txt")
    assert run(["bound", "--wiring", bad, "--tangles", t]).code == 1
    junk = pd_file("SLOTS x\n", "junk.txt")
    assert run(["bound", "--wiring", junk, "--tangles", t]).code == 2


def test_family_errors():
    assert run(["family", "chain", "--twists", "3,2"]).code == 2
    assert run(["family", "chain", "--twists", "a,b"]).code == 2
    assert run(["family", "rational", "--sign", "*", "--word", "V"]).code == 2
    assert run(["family", "rational", "--sign", "+", "--word", "VQ"]).code == 2


def test_family_pipe(monkeypatch, capsys):
    r = run(["family", "chain", "--twists", "2", "--open"])
    assert r.code == 0
    monkeypatch.setattr(sys, "stdin", io.StringIO("\n".join(r.lines) + "\n"))
    assert main(["compute", "--input", "-"]) == 0
    assert capsys.readouterr().out.splitlines()[1] == "zdeg=1 zmin=-1 components=2"


def test_rational_pipe(monkeypatch):
    r = run(["family", "rational", "--sign", "+", "--word", "VH"])
    monkeypatch.setattr(sys, "stdin", io.StringIO("\n".join(r.lines) + "\n"))
    out = run(["decompose", "--input", "-"])
    assert out.code == 0 and out.lines[4] == "N=3 B=1 bound=2"


def test_verify_deterministic():
    a = run(["verify", "--suite", "skein", "--max", "6", "--seed", "4", "--cases", "10"])
    b = run(["verify", "--suite", "skein", "--max", "6", "--seed", "4", "--cases", "10"])
    assert a.code == 0 and a.lines == b.lines
    assert a.lines[0] == "suite=skein seed=4"
    assert a.lines[-1] == "summary: 10/10 passed"


def test_verify_rational():
    r = run(["verify", "--suite", "rational", "--max", "4"])
    assert r.code == 0
    assert all(line.startswith("PASS") for line in r.lines[1:-1])


def test_console_script():
    out = subprocess.run(
        [sys.executable, "-m", "dubrovnik.cli", "family", "chain", "--twists", "2,2"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.count("X ") == 4
