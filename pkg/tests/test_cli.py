import json
import subprocess
import sys


from weylpol.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_term_set(capsys):
    code, out, _ = run(capsys, "term-set", "--n", "3", "--i", "1", "--j", "3", "--r", "1")
    assert code == 0 and json.loads(out)["outputs"]["count"] == 2
    code, out, _ = run(capsys, "term-set", "--n", "4", "--i", "2", "--j", "4", "--r", "2")
    assert json.loads(out)["outputs"]["count"] == 3
    code, _, err = run(capsys, "term-set", "--n", "3", "--i", "3", "--j", "1", "--r", "1")
    assert code == 2 and "i < j" in err


def test_vs(capsys):
    code, out, _ = run(capsys, "vs", "--n", "3", "--root", "1,3", "--r", "1", "--lambda", "3,5,4", "--check")
    rep = json.loads(out)
    assert code == 0 and rep["ok"]
    coeffs = sorted(t["coeff"] for t in rep["outputs"]["combo"]["terms"])
    assert coeffs == ["-1", "1"]
    code, out, _ = run(capsys, "vs", "--n", "4", "--root", "2,4", "--r", "2", "--lambda", "3,5,7,5", "--check", "--pbw")
    rep = json.loads(out)
    assert code == 0 and [t["coeff"] for t in rep["outputs"]["combo"]["terms"]] == ["4", "-2", "4"]
    code, _, err = run(capsys, "vs", "--n", "3", "--root", "1,2", "--r", "2", "--lambda", "1,1,0")
    assert code == 2 and "l_i - l_j - i + j = r" in err
    code, out, _ = run(capsys, "vs", "--n", "3", "--root", "1,2", "--r", "2", "--lambda", "1/2,1/2,0", "--no-check", "--check")
    assert code == 1 and not json.loads(out)["ok"]


def test_zel(capsys, tmp_path):
    dest = tmp_path / "z.json"
    code, out, _ = run(capsys, "zel", "--n", "3", "--alpha", "2,1,0", "--dim", "3", "--check-dd", "--homology",
                       "--json", str(dest))
    rep = json.loads(out)
    assert code == 0 and rep["outputs"]["dd_zero"] and rep["outputs"]["homology"] == [8, 0, 0, 0]
    assert json.loads(dest.read_text())["homology"] == [8, 0, 0, 0]
    code, out, _ = run(capsys, "zel", "--n", "3", "--alpha", "0,2,1", "--dim", "2", "--check-dd")
    assert code == 0 and json.loads(out)["outputs"]["dd_zero"]
    code, out, _ = run(capsys, "zel", "--n", "1", "--alpha", "5", "--dim", "2")
    rep = json.loads(out)
    assert code == 0 and len(rep["outputs"]["levels"]) == 1 and rep["verdicts"] == []
    code, _, _ = run(capsys, "zel", "--n", "2", "--alpha", "5", "--dim", "2")
    assert code == 2


def test_amplitude_and_signatures(capsys):
    code, out, _ = run(capsys, "amplitude", "--n", "4", "--root", "2,4", "--perm", "2341")
    amps = [r["amplitude"] for r in json.loads(out)["outputs"]["amplitudes"]]
    assert code == 0 and amps == ["4", "-2", "4"]
    code, out, _ = run(capsys, "amplitude", "--n", "3", "--root", "1,3", "--r", "1", "--lambda", "3,5,4")
    assert [r["amplitude"] for r in json.loads(out)["outputs"]["amplitudes"]] == ["-1", "1"]
    code, out, _ = run(capsys, "signatures", "--n", "3")
    rep = json.loads(out)
    assert code == 0 and rep["ok"] and len(rep["outputs"]["arrows"]) == 8


def test_pbw_and_apply(capsys, tmp_path):
    shift = tmp_path / "s.json"
    shift.write_text(json.dumps({"n": 3, "entries": [[0, 0, 0], [1, 0, 0], [0, 1, 0]]}))
    code, out, _ = run(capsys, "pbw", "--shift", str(shift), "--order", "reversed")
    assert code == 0 and json.loads(out)["outputs"]["text"] == "-1*E3,1 + 1*E3,2E2,1"
    tensor = tmp_path / "t.json"
    tensor.write_text(json.dumps({"n": 2, "m": 2, "terms": [{"coeff": "1", "exponents": [[1, 0], [0, 1]]}]}))
    combo = tmp_path / "c.json"
    combo.write_text(json.dumps({"n": 2, "terms": [{"coeff": "1/2", "shift": [[0, 0], [1, 0]]}]}))
    code, out, _ = run(capsys, "apply", "--tensor", str(tensor), "--combo", str(combo))
    terms = json.loads(out)["outputs"]["result"]["terms"]
    assert code == 0 and terms == [{"coeff": "1/2", "exponents": [[0, 0], [1, 1]]}]
    word = tmp_path / "w.json"
    word.write_text(json.dumps({"n": 2, "factors": [[1, 2]]}))
    code, out, _ = run(capsys, "apply", "--tensor", str(tensor), "--word", str(word))
    assert json.loads(out)["outputs"]["result"]["terms"][0]["exponents"] == [[1, 1], [0, 0]]
    code, _, err = run(capsys, "pbw", "--shift", str(tmp_path / "missing.json"))
    assert code == 2 and "cannot read" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "signatures", "--n", "3")
    rep = json.loads(out)
    assert code == 0 and any(v["name"].endswith("n3_sign_table") and v["ok"] for v in rep["verdicts"])
    code, out, _ = run(capsys, "verify", "--suite", "equivalence", "--seed", "42")
    assert code == 0
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2
    code, out, _ = run(capsys, "--pretty", "verify", "--suite", "signatures", "--n", "2")
    assert "[PASS]" in out


def test_argparse_errors_exit_2():
    proc = subprocess.run([sys.executable, "-m", "weylpol", "term-set", "--n", "3"], capture_output=True)
    assert proc.returncode == 2


def test_determinism(capsys):
    a = run(capsys, "verify", "--suite", "recurrences", "--seed", "7")[1]
    b = run(capsys, "verify", "--suite", "recurrences", "--seed", "7")[1]
    assert a == b
