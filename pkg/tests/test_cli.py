import json
import subprocess
import sys
from pathlib import Path

import pytest

from mild4.cli import main, parse_matrix_text
from mild4.errors import ValidationError

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_primes_json(capsys):
    code, out, _ = run(capsys, "classify", "--p", "3", "--primes", "31,37,43,67", "--json")
    d = json.loads(out)
    assert code == 0 and d["orbit"] == 1 and d["mild"] is True
    assert d["methods"]["agree"] is True


def test_classify_primes_text(capsys):
    code, out, _ = run(capsys, "classify", "--p", "3", "--primes", "67,79,97,127")
    assert code == 0 and "orbit: 2" in out and "mild: no" in out


def test_classify_cycle_file(capsys):
    code, out, _ = run(capsys, "classify", "--matrix", str(SAMPLES / "cycle.txt"), "--verify", "--json")
    d = json.loads(out)
    assert code == 0 and d["orbit"] == 1
    assert set(d["methods"]) == {"quadric", "reduction", "invariants", "agree"}
    assert d["dims"] == [4, 2, 4, 6] and d["witness"]


def test_classify_rank_deficient_exits_zero(capsys, tmp_path):
    f = tmp_path / "zero.txt"
    f.write_text("p 3\n" + "0 0 0 0 0 0\n" * 4)
    code, out, _ = run(capsys, "classify", "--matrix", str(f), "--json")
    d = json.loads(out)
    assert code == 0 and d["orbit"] is None and d["mild"] is False
    assert d["notes"][0].startswith("CupProductNotSurjective")


@pytest.mark.parametrize("argv", [
    ["classify", "--p", "3", "--primes", "31,37,41,67"],
    ["classify", "--p", "3", "--primes", "31,31,43,67"],
    ["classify", "--p", "4", "--primes", "31,37,43,67"],
    ["classify"],
    ["classify", "--matrix", "/nonexistent/file.txt"],
    ["dims", "--matrix", str(SAMPLES / "cycle.txt"), "--max-degree", "9"],
    ["enumerate", "--p", "9", "--dim", "1"],
    ["search", "--p", "3", "--max-prime", "200000"],
])
def test_input_errors_exit_one(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err


def test_argparse_errors_use_exit_one():
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 1


def test_internal_violation_exits_two(capsys, monkeypatch):
    from mild4 import classifier
    from mild4.reduction import OrbitLabel
    monkeypatch.setattr(classifier, "classify_by_quadric", lambda q: OrbitLabel.O3)
    code, _, err = run(capsys, "classify", "--p", "3", "--primes", "31,37,43,67", "--verify")
    assert code == 2 and "disagree" in err


@pytest.mark.parametrize("name,c,want,verdict", [
    ("orbit1", 4, "4 2 4 6", "yes"),
    ("orbit3", 4, "4 2 4 7", "no"),
    ("orbit2", 3, "4 2 5", "no"),
])
def test_dims(capsys, name, c, want, verdict):
    code, out, _ = run(capsys, "dims", "--matrix", str(SAMPLES / f"{name}.txt"), "--max-degree", str(c))
    lines = out.splitlines()
    assert code == 0 and lines[0] == want and lines[1] == f"strongly-free: {verdict}"


def test_poincare(capsys):
    code, out, _ = run(capsys, "poincare", "--matrix", str(SAMPLES / "orbit1.txt"), "--max-degree", "5", "--json")
    assert code == 0 and not any(json.loads(out)["residual"])
    _, out, _ = run(capsys, "poincare", "--matrix", str(SAMPLES / "orbit2.txt"), "--max-degree", "3", "--json")
    res = json.loads(out)["residual"]
    assert res[:3] == [0, 0, 0] and res[3] != 0
    _, out, _ = run(capsys, "poincare", "--matrix", str(SAMPLES / "orbit3.txt"), "--max-degree", "4", "--json")
    res = json.loads(out)["residual"]
    assert res[:4] == [0, 0, 0, 0] and res[4] != 0


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--p", "3", "--max-prime", "70", "--orbit", "4")
    assert code == 0 and "31,37,61,67 orbit 4" in out.splitlines()
    code, out, _ = run(capsys, "search", "--p", "3", "--max-prime", "20")
    assert code == 0 and out == ""
    code, out, _ = run(capsys, "search", "--p", "3", "--max-prime", "100", "--orbit", "3", "--json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert {"p": 3, "primes": [61, 73, 79, 97], "orbit": 3} in rows
    code, out, _ = run(capsys, "search", "--p", "3", "--max-prime", "100", "--limit", "2")
    assert len(out.splitlines()) == 2


@pytest.mark.parametrize("p,dim,count", [(3, 2, 4), (3, 1, 2), (5, 1, 2)])
def test_enumerate(capsys, p, dim, count):
    code, out, _ = run(capsys, "enumerate", "--p", str(p), "--dim", str(dim), "--json")
    d = json.loads(out)
    assert code == 0 and d["count"] == count and sum(o["size"] for o in d["orbits"]) == d["total"]


def test_json_is_byte_identical_across_processes():
    argv = [sys.executable, "-m", "mild4", "classify", "--p", "3", "--primes", "61,73,79,97", "--verify", "--json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["orbit"] == 3


def test_matrix_parsing():
    q = parse_matrix_text("# hi\np 5\n\n1 0 0 0 0 7  # reduced\n0 1 0 0 0 0\n0 0 1 0 0 0\n0 0 0 1 0 0\n")
    assert q.p == 5 and q.rel[0] == (1, 0, 0, 0, 0, 2)
    for bad in ("", "q 5\n", "p 5\n1 2 3\n", "p 5\n" + "1 x 0 0 0 0\n" * 4, "p 6\n" + "1 0 0 0 0 0\n" * 4):
        with pytest.raises(ValidationError):
            parse_matrix_text(bad)
