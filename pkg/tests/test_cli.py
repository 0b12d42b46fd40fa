"""
Tests for the command-line interface, driven through cli.main.
"""
from tetrachrome.cli import main
from tetrachrome.detectors import is_free
from tetrachrome.dimacs import read_dimacs, write_dimacs
from tests.conftest import build


def _write(tmp_path, name, g):
    path = tmp_path / name
    path.write_text(write_dimacs(g))
    return str(path)


# ============================================================================
# SOLVE / CHECK-COLORING
# ============================================================================

def test_solve_antihole7(tmp_path, capsys, c7bar):
    assert main(["solve", _write(tmp_path, "c7.col", c7bar)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "s colorable"
    assert len([line for line in out if line.startswith("v ")]) == 7


def test_solve_output_feeds_check_coloring(tmp_path, capsys, twins_dirty):
    graph = _write(tmp_path, "twins.col", twins_dirty)
    coloring = str(tmp_path / "twins.sol")
    assert main(["solve", graph, "--trace", "-o", coloring]) == 0
    text = (tmp_path / "twins.sol").read_text()
    assert "c phase1.step" in text
    assert main(["check-coloring", graph, coloring]) == 0
    assert capsys.readouterr().out == "ok\n"


def test_solve_k5(tmp_path, capsys, k5):
    assert main(["solve", _write(tmp_path, "k5.col", k5)]) == 1
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "s not-colorable"
    assert out[1].startswith("c evidence K5")


def test_solve_rejects_p6(tmp_path, capsys):
    path = _write(tmp_path, "p6.col", build(6, [(i, i + 1) for i in range(5)]))
    assert main(["solve", path]) == 2
    assert "P6" in capsys.readouterr().err


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.col"
    path.write_text("p edge 2 1\nx 1 2\n")
    assert main(["solve", str(path)]) == 2
    assert "unknown line type" in capsys.readouterr().err


def test_missing_file(tmp_path, capsys):
    assert main(["solve", str(tmp_path / "nope.col")]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_check_coloring_failures(tmp_path, capsys):
    graph = _write(tmp_path, "k3.col", build(3, [(0, 1), (1, 2), (0, 2)]))
    same = tmp_path / "same.sol"
    same.write_text("v 1 1\nv 2 1\nv 3 2\n")
    assert main(["check-coloring", graph, str(same)]) == 1
    assert capsys.readouterr().out == "monochromatic edge 1 2\n"
    partial = tmp_path / "partial.sol"
    partial.write_text("v 1 1\nv 2 2\n")
    assert main(["check-coloring", graph, str(partial)]) == 1
    assert capsys.readouterr().out == "uncolored vertex 3\n"


# ============================================================================
# INSPECTION COMMANDS
# ============================================================================

def test_analyze(tmp_path, capsys, c7bar):
    assert main(["analyze", _write(tmp_path, "c7.col", c7bar)]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "n 7",
        "m 14",
        "P6 0",
        "witness P6 -",
        "C5 0",
        "witness C5 -",
        "K5 0",
        "witness K5 -",
        "antihole7 1",
        "witness antihole7 1,2,3,4,5,6,7",
        "antihole9 0",
        "witness antihole9 -",
        "connected true",
        "verdict 1,2,3,4,5,6,7 clean",
    ]


def test_analyze_reports_witnesses_and_dirty_verdicts(tmp_path, capsys, twins_dirty):
    path = tmp_path / "twins.col"
    path.write_text(write_dimacs(twins_dirty))
    assert main(["analyze", str(path)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "verdict 1,2,3,4,5,6,7 dirty 10,11" in out
    assert "witness K5 -" in out


def test_analyze_counts_forbidden_subgraphs(tmp_path, capsys):
    path = tmp_path / "p6.col"
    path.write_text(write_dimacs(build(6, [(i, i + 1) for i in range(5)])))
    assert main(["analyze", str(path)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "P6 1" in out
    assert "witness P6 1,2,3,4,5,6" in out


def test_decompose_bowtie(tmp_path, capsys):
    bowtie = build(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert main(["decompose", _write(tmp_path, "bowtie.col", bowtie)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 2
    assert any("separator=3 " in line for line in out)


def test_clean_writes_reduced_graph(tmp_path, capsys, twins_dirty):
    reduced = tmp_path / "reduced.col"
    assert main(["clean", _write(tmp_path, "twins.col", twins_dirty), "-o", str(reduced)]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "s clean n=10 contractions=1"
    assert read_dimacs(reduced.read_text()).n == 10


def test_phase2_dump(tmp_path, capsys, c7bar):
    path = _write(tmp_path, "c7.col", c7bar)
    assert main(["phase2", path, "--antihole", "1,2,3,4,5,6,7"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[-1] == "s good-coloring"
    assert len([line for line in out if line.startswith("base ")]) == 7


def test_phase2_bad_antihole(tmp_path, capsys, c7bar):
    path = _write(tmp_path, "c7.col", c7bar)
    assert main(["phase2", path, "--antihole", "1,2,3"]) == 2


# ============================================================================
# GENERATION AND DIFFERENTIAL TESTING
# ============================================================================

def test_gen(capsys):
    assert main(["gen", "-n", "10", "--seed", "3"]) == 0
    text = capsys.readouterr().out
    assert text.startswith("c gen n=10 p=0.5 seed=3 repair=chord preset=-")
    assert is_free(read_dimacs(text))


def test_gen_rejects_bad_settings(capsys):
    assert main(["gen", "-n", "10", "-p", "1.5"]) == 2
    assert main(["gen", "-n", "10", "--preset", "petersen"]) == 2
    assert main(["gen", "-n", "0"]) == 2


def test_difftest(tmp_path, capsys, k4, c9bar):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    _write(corpus, "k4.col", k4)
    _write(corpus, "c9.col", c9bar)
    report = tmp_path / "report.txt"
    assert main(["difftest", "--corpus", str(corpus), "--report", str(report)]) == 0
    assert capsys.readouterr().out == "checked=2 mismatches=0\n"
    assert report.read_text().splitlines()[0] == "ok c9.col n=9 oracle=false solve=false"


def test_oversized_header_needs_force(tmp_path, capsys, monkeypatch, c7bar):
    path = _write(tmp_path, "c7.col", c7bar)
    monkeypatch.setattr("tetrachrome.config.MAX_VERTICES", 5)
    assert main(["solve", path]) == 2
    assert "above the limit of 5" in capsys.readouterr().err
    assert main(["--force", "solve", path]) == 0
