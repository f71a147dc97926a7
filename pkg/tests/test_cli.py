import csv
import io
import json
import subprocess
import sys

import pytest

from hyperzfr import polynomial, selftest
from hyperzfr.cli import main
from hyperzfr.hypergraph import Hypergraph, parse_hypergraph, serialize_hypergraph
from hyperzfr.polynomial import IntPolynomial

TRIANGLE = '{"n":3,"edges":[[0,1],[0,2],[1,2]]}'


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.fixture
def tri_file(tmp_path):
    p = tmp_path / "tri.json"
    p.write_text(TRIANGLE)
    return str(p)


def test_gen_h_roundtrip(capsys):
    rc, out, _ = run(capsys, "gen-h", "--k", "3", "--delta", "5")
    assert rc == 0
    H = parse_hypergraph(out)
    doc = json.loads(out)
    assert doc["meta"] == {"k": 3, "delta": 5, "p": 5}
    assert H.n == 15 and H.num_edges == 25
    assert serialize_hypergraph(H) == serialize_hypergraph(parse_hypergraph(serialize_hypergraph(H)))


def test_gen_h_deterministic(capsys):
    a = run(capsys, "gen-h", "--k", "4", "--delta", "7")[1]
    b = run(capsys, "gen-h", "--k", "4", "--delta", "7")[1]
    assert a == b


def test_gen_h_usage(capsys):
    assert run(capsys, "gen-h", "--k", "3", "--delta", "2")[0] == 1


def test_missing_argument_exit_1():
    with pytest.raises(SystemExit) as ei:
        main(["gen-h", "--k", "3"])
    assert ei.value.code == 1


def test_counterexample(capsys):
    rc, out, _ = run(capsys, "counterexample", "--k", "3", "--delta", "4")
    assert rc == 0
    doc = json.loads(out)
    assert doc["meta"]["n_H"] == 9 and doc["meta"]["p"] == 5
    assert parse_hypergraph(out).n == doc["meta"]["n_SG"]


def test_transform(capsys, tri_file):
    rc, out, _ = run(capsys, "transform", "--input", tri_file)
    assert rc == 0
    assert parse_hypergraph(out) == Hypergraph(6, [(0, 1, 3), (0, 2, 4), (1, 2, 5)])


def test_transform_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO('{"n":2,"edges":[[0,1]]}'))
    rc, out, _ = run(capsys, "transform", "--input", "-")
    assert rc == 0 and json.loads(out) == {"n": 3, "edges": [[0, 1, 2]]}


@pytest.mark.parametrize("flag", [[], ["--closed-form"], ["--bruteforce"]])
def test_poly(capsys, tri_file, flag):
    rc, out, _ = run(capsys, "poly", "--input", tri_file, *flag)
    assert rc == 0 and json.loads(out) == {"coeffs": ["1", "6", "15", "17", "6"]}


def test_poly_direct(capsys, tri_file):
    rc, out, _ = run(capsys, "poly", "--input", tri_file, "--direct")
    assert json.loads(out) == {"coeffs": ["1", "3"]}


@pytest.mark.parametrize("x,val", [("-1/2", "0"), ("-1", "-1"), ("1", "45")])
def test_eval(capsys, tri_file, x, val):
    rc, out, _ = run(capsys, "eval", "--input", tri_file, "--at", x)
    assert rc == 0
    doc = json.loads(out)
    assert doc["value"] == val and doc["rigorous"] is True


def test_eval_float(capsys, tri_file):
    rc, out, _ = run(capsys, "eval", "--input", tri_file, "--at", "1", "--float")
    doc = json.loads(out)
    assert float(doc["value"]) == 45.0 and doc["rigorous"] is False


def test_roots(capsys, tri_file):
    rc, out, _ = run(capsys, "roots", "--input", tri_file, "--complex", "--real-interval", "-1", "0")
    assert rc == 0
    doc = json.loads(out)
    assert doc["real"]["exact_root"] == "-1/2"
    assert len(doc["complex"]["roots"]) == 4
    assert doc["zfr"]["passed"] and doc["delta"] == 2


def test_roots_default_interval(capsys, tri_file):
    doc = json.loads(run(capsys, "roots", "--input", tri_file)[1])
    assert doc["real_interval"] == ["-1", "0"] and "complex" not in doc


def test_malformed_input(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"n":2,"edges":[[0,5]]}')
    rc, _, err = run(capsys, "poly", "--input", str(p))
    assert rc == 1 and "vertex id out of range" in err
    p.write_text("not json")
    assert run(capsys, "poly", "--input", str(p))[0] == 1
    assert run(capsys, "poly", "--input", str(tmp_path / "missing.json"))[0] == 1


def test_size_guard(capsys, tmp_path):
    p = tmp_path / "big.json"
    p.write_text(serialize_hypergraph(Hypergraph(40)))
    rc, _, err = run(capsys, "poly", "--input", str(p))
    assert rc == 1 and "guard" in err


def test_certify_ok_and_verify(capsys, tmp_path):
    rc, out, _ = run(capsys, "certify", "--k", "3", "--delta", "1000")
    assert rc == 0
    doc = json.loads(out)
    assert doc["status"] == "certified" and doc["n"] == 2017 and doc["alpha"] == "999/2"
    p = tmp_path / "cert.json"
    p.write_text(out)
    rc, vout, _ = run(capsys, "verify", "--input", str(p))
    assert rc == 0 and json.loads(vout)["valid"]
    doc["lambda0"] = "-1/1000"
    doc["interval"] = ["-1/1000", "0"]
    p.write_text(json.dumps(doc))
    assert run(capsys, "verify", "--input", str(p))[0] == 2


def test_certify_failure_exit_2(capsys):
    rc, out, _ = run(capsys, "certify", "--k", "3", "--delta", "10")
    assert rc == 2
    doc = json.loads(out)
    assert doc["status"] == "hypothesis-failure" and "alpha < 3 ln n" in doc["reasons"]


def test_certify_usage(capsys):
    assert run(capsys, "certify", "--k", "2", "--delta", "1000")[0] == 1


def test_certify_deterministic(capsys):
    a = run(capsys, "certify", "--k", "3", "--delta", "500", "--mode", "explicit")[1]
    b = run(capsys, "certify", "--k", "3", "--delta", "500", "--mode", "explicit")[1]
    assert a == b


def test_sweep(capsys):
    rc, out, _ = run(capsys, "sweep", "--k", "3", "--deltas", "10000", "100000", "--C", "1")
    assert rc == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["falsified"] for r in rows] == ["false", "true"]
    assert [r["p"] for r in rows] == ["10007", "100003"]


def test_sweep_bad_C(capsys):
    assert run(capsys, "sweep", "--k", "3", "--deltas", "10000", "--C", "0")[0] == 1


def test_sweep_hypothesis_failure(capsys):
    assert run(capsys, "sweep", "--k", "3", "--deltas", "10")[0] == 2


def test_selftest_passes(capsys):
    rc, out, _ = run(capsys, "selftest")
    assert rc == 0 and "selftest: all passed" in out


def test_selftest_catches_broken_closed_form(capsys, monkeypatch):
    real = polynomial.z_sg_closed_form

    def broken(G, workers=1):
        c = list(real(G, workers).coeffs)
        c[-1] += 1
        return IntPolynomial(c)

    monkeypatch.setattr(polynomial, "z_sg_closed_form", broken)
    rc, out, _ = run(capsys, "selftest")
    assert rc == 1
    assert "FAIL triangle" in out and "FAIL oracle_equivalence" in out


def test_selftest_catches_broken_kernel(monkeypatch):
    lines = []
    monkeypatch.setattr(selftest, "CHECKS", [("oracle_equivalence", selftest.check_oracle)])
    monkeypatch.setattr(polynomial, "independence_poly_bruteforce", lambda H: IntPolynomial([1]))
    assert not selftest.run(out=lines.append)
    assert lines[0].startswith("FAIL")


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "hyperzfr", "eval", "--input", "-", "--at", "-1/2"],
                         input=TRIANGLE, capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["value"] == "0"
