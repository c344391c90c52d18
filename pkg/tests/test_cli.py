import json

import pytest

from sympcap.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_orbit_dim(capsys):
    code, out, _ = run(capsys, "orbit", "dim", "--partition", "2,2,2")
    assert code == 0 and out.strip() == "12"


def test_orbit_dim_json(capsys):
    code, out, _ = run(capsys, "orbit", "dim", "--partition", "2,2,2", "--json")
    data = json.loads(out)
    assert data["schema"] == "sympcap/1" and data["dim"] == 12


def test_orbit_bad_partition_exit2(capsys):
    code, _, err = run(capsys, "orbit", "dim", "--partition", "3,1")
    assert code == 2 and "symplectic" in err


def test_poset_json(capsys):
    code, out, _ = run(capsys, "poset", "--two-r", "6", "--json")
    data = json.loads(out)
    assert code == 0 and len(data["nodes"]) == 8


def test_orbit_not_below(capsys):
    code, out, _ = run(capsys, "orbit", "not-below", "--partition", "2,2,2")
    assert code == 0
    assert out.splitlines() == ["(6)", "(4,2)", "(4,1,1)", "(3,3)"]


def test_filtration_grade(capsys):
    code, out, _ = run(capsys, "filtration", "grade", "--partition", "2,2", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["levels"]["2"] == sorted([[0, 2], [1, 1], [2, 0]])


def test_filtration_heisenberg(capsys):
    code, out, _ = run(capsys, "filtration", "heisenberg", "--m", "2", "--r", "3")
    assert code == 0 and "2" in out and "[0,2,0]" in out


def test_character_commands(capsys):
    code, out, _ = run(capsys, "character", "stabilizer", "--partition", "2,2", "--data", "1,1")
    assert code == 0 and out.strip() == "1"
    code, _, _ = run(capsys, "character", "generic", "--partition", "2,2", "--data", "1,1")
    assert code == 0
    code, _, _ = run(capsys, "character", "generic", "--partition", "2,2", "--data", "1,0")
    assert code == 1
    code, out, _ = run(capsys, "character", "split", "--eps", "1,-1")
    assert code == 0 and out.strip() == "split"
    code, out, _ = run(capsys, "character", "split", "--eps", "1,1")
    assert code == 1 and out.strip() == "nonsplit"


def test_exchange_triple_pass_and_fail(capsys):
    base = [
        "exchange",
        "triple",
        "--rank",
        "2",
        "--c",
        "{[1,-1],[2,0]}",
        "--psi",
        "[1,-1]: 1",
        "--alpha",
        "[0,-2]",
        "--gamma",
        "[1,1]",
    ]
    code, out, _ = run(capsys, *base, "--beta", "[1,-1]")
    assert code == 0 and out.startswith("pass")
    # wrong beta that still carries the character on a bigger state
    code, out, _ = run(
        capsys,
        "exchange",
        "triple",
        "--rank",
        "2",
        "--c",
        "{[1,-1],[1,1],[2,0],[0,2]}",
        "--psi",
        "[1,-1]: 1\n[0,2]: 1",
        "--alpha",
        "[0,-2]",
        "--gamma",
        "[1,1]",
        "--beta",
        "[0,2]",
    )
    assert code == 1


def test_exchange_malformed_dsl_exit2(capsys):
    code, _, err = run(
        capsys,
        "exchange",
        "triple",
        "--rank",
        "2",
        "--c",
        "{a1,a2}",
        "--psi",
        "a1: 1",
        "--alpha",
        "[0,-2]",
        "--gamma",
        "[1,1]",
        "--beta",
        "[1,-1]",
    )
    assert code == 2 and "closed" in err


def test_corpus_runs_green(capsys):
    code, out, _ = run(capsys, "corpus")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.strip().splitlines())
    code, out, _ = run(capsys, "exchange", "corpus", "--name", "fj-base-sp6")
    assert code == 0 and "fj-base-sp6" in out
    code, _, err = run(capsys, "corpus", "--name", "no-such-entry")
    assert code == 2


def test_cover_commands(capsys):
    code, out, _ = run(capsys, "cover", "dual", "--rank", "3", "--n", "4")
    assert code == 0 and out.strip() == "C3"
    code, out, _ = run(capsys, "cover", "dual", "--rank", "3", "--n", "1")
    assert out.strip() == "B3"
    code, out, _ = run(capsys, "cover", "hilbert", "--x", "p^1*1", "--y", "p^1*1", "--q", "5", "--n", "4")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "cover", "lattice", "--rank", "2", "--n", "4", "--json")
    data = json.loads(out)
    assert data["index"] == 2
    code, _, _ = run(capsys, "cover", "cocycle", "--q", "5", "--trials", "20")
    assert code == 0
    code, out, _ = run(capsys, "cover", "distinguished", "--sign", "-", "--index", "2", "--rank", "2", "--a", "3", "--q", "5")
    assert code == 0 and out.strip() == "2"


def test_lift_commands(capsys):
    params = json.dumps({"sign": "+", "entries": [{"s": "1/3", "u": "1"}]})
    code, out, _ = run(capsys, "lift", "theta", "--m", "1", "--n", "3", "--params", params, "--json")
    data = json.loads(out)
    assert code == 0
    assert sorted(e["s"] for e in data["entries"]) == ["1/3", "1/4", "3/4"]
    code, _, _ = run(capsys, "lift", "tempered", "--params", params)
    assert code == 1
    tempered = json.dumps({"sign": "+", "entries": [{"s": "0", "u": "1"}]})
    code, _, _ = run(capsys, "lift", "tempered", "--params", tempered)
    assert code == 0
    code, out, _ = run(capsys, "lift", "chi-theta", "--rank", "3")
    assert out.strip() == "5/4,3/4,1/4"
    code, _, _ = run(capsys, "lift", "exceptional", "--rank", "5")
    assert code == 0
    code, _, _ = run(capsys, "lift", "exceptional", "--rank", "3", "--exponents", "1,1,1")
    assert code == 1
    code, out, _ = run(capsys, "lift", "cap", "--m", "2", "--n-pi", "5", "--n", "3")
    assert code == 0 and "Q_{2,3}" in out
    a = json.dumps({"sign": "+", "entries": [{"s": "1/4", "u": "1"}]})
    b = json.dumps({"sign": "+", "entries": [{"s": "-1/4", "u": "1"}]})
    code, _, _ = run(capsys, "lift", "near", "--a", a, "--b", b)
    assert code == 0


def test_dimeq(capsys):
    code, out, _ = run(capsys, "dimeq", "--m", "2", "--dim-pi", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["solutions"] == [2, 3]


def test_unknown_subcommand_exit2(capsys):
    assert main(["frobnicate"]) == 2


def test_bad_params_json_exit2(capsys):
    code, _, err = run(capsys, "lift", "tempered", "--params", "{not json")
    assert code == 2


def test_report_writes_files(tmp_path, capsys):
    code, out, _ = run(capsys, "report", "poset", "--two-r", "6", "--out", str(tmp_path))
    assert code == 0
    assert (tmp_path / "poset_6.csv").exists()
    assert (tmp_path / "poset_6.png").exists()
    code, _, _ = run(capsys, "report", "gk", "--max-r", "6", "--out", str(tmp_path))
    assert code == 0
    assert (tmp_path / "gk_dimensions.csv").exists()
    assert (tmp_path / "gk_dimensions.png").exists()


def test_report_corpus(tmp_path, capsys):
    code, _, _ = run(capsys, "report", "corpus", "--out", str(tmp_path))
    assert code == 0
    lines = (tmp_path / "corpus_results.csv").read_text().strip().splitlines()
    assert len(lines) >= 20
    assert all(",pass," in line or line.startswith("name") for line in lines)
    assert (tmp_path / "corpus_results.png").exists()
