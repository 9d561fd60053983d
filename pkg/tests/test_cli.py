import csv
import subprocess
import sys

import pytest

from sparseclique.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def mm10(tmp_path, capsys):
    path = tmp_path / "mm10.edges"
    assert run_cli(capsys, "gen", "moon-moser", "10", "--output", str(path))[0] == 0
    return path


def field(out, key):
    for token in out.split():
        if token.startswith(key + "="):
            return token.split("=", 1)[1]
    raise AssertionError(f"{key} missing in {out!r}")


@pytest.mark.parametrize("algorithm", ["tomita", "maxdegree", "hybrid", "degen"])
def test_run_count_only(capsys, mm10, algorithm):
    code, out, _ = run_cli(capsys, "run", "--algorithm", algorithm, "--input", str(mm10), "--count-only")
    assert code == 0
    assert field(out, "mu") == "59049"
    assert (field(out, "n"), field(out, "m"), field(out, "d")) == ("30", "405", "27")
    assert float(field(out, "seconds")) >= 0


def test_run_collect_matches_count(capsys, tmp_path):
    g = tmp_path / "g.edges"
    run_cli(capsys, "gen", "gnp", "25", "0.4", "7", "--output", str(g))
    out_file = tmp_path / "cliques.txt"
    code, out, _ = run_cli(capsys, "run", "--algorithm", "degen", "--input", str(g), "--output", str(out_file))
    assert code == 0
    lines = out_file.read_text().splitlines()
    assert len(lines) == int(field(out, "mu"))
    _, counted, _ = run_cli(capsys, "run", "--algorithm", "hybrid", "--input", str(g), "--count-only")
    assert field(counted, "mu") == field(out, "mu")


def test_run_writes_original_labels(capsys, tmp_path):
    g = tmp_path / "labels.edges"
    g.write_text("100 200\n200 300\n")
    out_file = tmp_path / "c.txt"
    assert run_cli(capsys, "run", "--algorithm", "maxdegree", "--input", str(g), "--output", str(out_file))[0] == 0
    assert sorted(out_file.read_text().splitlines()) == ["100 200", "200 300"]


def test_run_dimacs(capsys, tmp_path):
    g = tmp_path / "g.col"
    g.write_text("p edge 3 2\ne 1 2\ne 2 3\n")
    code, out, _ = run_cli(capsys, "run", "--algorithm", "tomita", "--input", str(g), "--format", "dimacs", "--count-only")
    assert code == 0 and field(out, "mu") == "2" and field(out, "n") == "3"


def test_run_matrix_cap(capsys, mm10):
    code, _, err = run_cli(capsys, "run", "--algorithm", "tomita", "--input", str(mm10), "--matrix-cap", "10")
    assert code == 1
    assert "adjacency matrix cap exceeded" in err


def test_run_malformed_input(capsys, tmp_path):
    bad = tmp_path / "bad.edges"
    bad.write_text("0 1\nzero two\n")
    code, _, err = run_cli(capsys, "run", "--algorithm", "degen", "--input", str(bad))
    assert code == 1 and "line 2" in err


def test_run_missing_file(capsys, tmp_path):
    assert run_cli(capsys, "run", "--algorithm", "degen", "--input", str(tmp_path / "nope"))[0] == 1


def test_usage_errors(capsys, mm10):
    with pytest.raises(SystemExit) as exc:
        main(["run", "--algorithm", "quantum", "--input", str(mm10)])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    assert run_cli(capsys, "gen", "petersen", "10")[0] == 2
    assert run_cli(capsys, "gen", "gnp", "10", "0.5")[0] == 2
    assert run_cli(capsys, "gen", "gnp", "10", "2.0", "1")[0] == 2
    args = ("run", "--algorithm", "degen", "--input", str(mm10), "--count-only", "--output", "x")
    assert run_cli(capsys, *args)[0] == 2


@pytest.mark.parametrize("family,params", [
    ("complete", ["5"]), ("path", ["4"]), ("cycle", ["6"]), ("star", ["5"]),
    ("empty", ["3"]), ("gnm", ["50", "60", "1"]), ("grid", ["4", "5", "2"]),
])
def test_gen_families(capsys, tmp_path, family, params):
    path = tmp_path / "g.edges"
    assert run_cli(capsys, "gen", family, *params, "--output", str(path))[0] == 0
    assert path.read_text().startswith("# vertices")


def test_gen_to_stdout(capsys):
    code, out, _ = run_cli(capsys, "gen", "path", "3")
    assert code == 0
    assert out.splitlines()[-2:] == ["0 1", "1 2"]


def test_validate_agreement(capsys, tmp_path):
    g = tmp_path / "g.edges"
    run_cli(capsys, "gen", "gnp", "15", "0.5", "42", "--output", str(g))
    code, out, _ = run_cli(capsys, "validate", "--input", str(g))
    assert code == 0
    assert "4 variants + oracle agree" in out
    assert "FAIL" not in out


def test_validate_malformed(capsys, tmp_path):
    bad = tmp_path / "bad.edges"
    bad.write_text("1 2 3\n")
    code, out, _ = run_cli(capsys, "validate", "--input", str(bad))
    assert code == 1 and "FAIL" in out


def test_validate_without_oracle_on_larger_graph(capsys, tmp_path):
    g = tmp_path / "g.edges"
    run_cli(capsys, "gen", "gnp", "150", "0.05", "1", "--output", str(g))
    code, out, _ = run_cli(capsys, "validate", "--input", str(g), "--matrix-cap", "100")
    assert code == 0
    assert "SKIP tomita" in out and "3 variants agree" in out


def test_bench_table(capsys, tmp_path, mm10):
    small = tmp_path / "small.edges"
    run_cli(capsys, "gen", "gnp", "12", "0.4", "3", "--output", str(small))
    table = tmp_path / "bench.csv"
    code, _, _ = run_cli(
        capsys, "bench", "--inputs", str(mm10), str(small), "--repeat", "2",
        "--table", str(table), "--matrix-cap", "20",
    )
    assert code == 0
    rows = list(csv.DictReader(table.open()))
    assert len(rows) == 8
    assert list(rows[0]) == ["graph", "n", "m", "d", "mu", "algorithm", "seconds"]
    refused = [r for r in rows if r["graph"] == "mm10" and r["algorithm"] == "tomita"][0]
    assert refused["mu"] == "NA" and refused["seconds"] == "NA"
    assert {r["mu"] for r in rows if r["graph"] == "mm10" and r["algorithm"] != "tomita"} == {"59049"}


def test_bench_bad_arguments(capsys, mm10, tmp_path):
    table = str(tmp_path / "t.csv")
    assert run_cli(capsys, "bench", "--inputs", str(mm10), "--algorithms", "fast", "--table", table)[0] == 2
    assert run_cli(capsys, "bench", "--inputs", str(mm10), "--repeat", "0", "--table", table)[0] == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "sparseclique", "gen", "complete", "4"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "# edges 6" in proc.stdout


def test_gen_examples(capsys, tmp_path):
    path = tmp_path / "g.edges"
    run_cli(capsys, "gen", "gnp", "10", "0", "7", "--output", str(path))
    code, out, _ = run_cli(capsys, "run", "--algorithm", "degen", "--input", str(path), "--count-only")
    assert (field(out, "n"), field(out, "m"), field(out, "mu")) == ("10", "0", "10")
    run_cli(capsys, "gen", "complete", "5", "--output", str(path))
    assert path.read_text().count("\n") == 2 + 10


def test_validate_moon_moser(capsys, mm10):
    code, out, _ = run_cli(capsys, "validate", "--input", str(mm10))
    assert code == 0
    assert "4 variants + oracle agree: mu=59049" in out


def test_tomita_refuses_large_graph_with_default_cap(capsys, tmp_path):
    path = tmp_path / "long.edges"
    run_cli(capsys, "gen", "path", "60000", "--output", str(path))
    code, _, err = run_cli(capsys, "run", "--algorithm", "tomita", "--input", str(path), "--count-only")
    assert code == 1 and "adjacency matrix cap exceeded" in err


def test_bench_moon_moser_all_algorithms(capsys, tmp_path, mm10):
    table = tmp_path / "mm.csv"
    assert run_cli(capsys, "bench", "--inputs", str(mm10), "--repeat", "3", "--table", str(table))[0] == 0
    rows = list(csv.DictReader(table.open()))
    assert [r["algorithm"] for r in rows] == ["tomita", "maxdegree", "hybrid", "degen"]
    assert {r["mu"] for r in rows} == {"59049"} and {r["d"] for r in rows} == {"27"}
