import json
import subprocess
import sys
from fractions import Fraction as F
from pathlib import Path

import pytest
from hypothesis import given, settings

from egfbern import bernoulli, cli, verify
from egfbern.discrepancies import REGISTRY
from egfbern.errors import ParseError
from egfbern.qseries import EgfSeries

from .strategies import series

ROOT = Path(__file__).resolve().parents[1]


def run(*argv):
    return cli.run(list(argv))


def write(tmp_path, coeffs, order=None, name="s.json"):
    p = tmp_path / name
    p.write_text(json.dumps({"kind": "egf", "order": len(coeffs) - 1 if order is None else order,
                             "coeffs": coeffs}))
    return str(p)


def test_table_csv_classical():
    code, out, _ = run("table", "--kind", "bernoulli", "--series", "exp", "--N", "1", "--max-n", "14",
                       "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,value" and len(lines) == 16
    assert lines[-3:] == ["12,-691/2730", "13,0", "14,7/6"]


def test_table_row_examples():
    assert run("table", "--kind", "comp", "--series", "exp", "--N", "2", "--max-n", "4")[1] == "1,-2/3,5/6,-68/45\n"
    assert run("table", "--kind", "bernoulli", "--series", "zeta:1", "--N", "1", "--max-n", "3")[1] == "1,-1/4,1/72,1/96\n"


def test_table_md_and_json():
    md = run("table", "--kind", "bernoulli", "--series", "exp", "--N", "2", "--max-n", "2", "--format", "md")[1]
    assert md.splitlines() == ["| n | 0 | 1 | 2 |", "|---|---|---|---|", "| value | 1 | -1/3 | 1/18 |"]
    js = json.loads(run("table", "--kind", "bernoulli", "--series", "exp", "--N", "1", "--max-n", "1",
                        "--format", "json")[1])
    assert js == [{"n": 0, "value": "1"}, {"n": 1, "value": "-1/2"}]


def test_table_from_file(tmp_path):
    path = write(tmp_path, ["1"] * 12)
    assert run("table", "--kind", "bernoulli", "--series", path, "--N", "1", "--max-n", "4")[1] == "1,-1/2,1/6,0,-1/30\n"


def test_poly_examples():
    assert run("poly", "--kind", "bernoulli", "--series", "sfac2", "--N", "1", "--n", "1")[1].splitlines()[-1] == "x - 1/4"
    assert run("poly", "--kind", "comp", "--series", "exp", "--N", "1", "--n", "3")[1].splitlines()[-1] == "x^3 - 3*x^2 + 2*x"
    assert run("poly", "--kind", "comp", "--series", "exp", "--N", "1", "--n", "1")[1] == "x\n"


def test_series_op_examples(tmp_path):
    em1 = write(tmp_path, ["0"] + ["1"] * 6)
    out = json.loads(run("series-op", "invert", "--in", em1, "-T", "6")[1])
    assert out == {"kind": "egf", "order": 6, "coeffs": ["0", "1", "-1", "2", "-6", "24", "-120"]}
    out = json.loads(run("series-op", "hypergeom", "--p", "1/1", "--q", "1/1", "--r", "1/1", "-T", "4")[1])
    assert out["coeffs"] == ["1", "1", "2", "6", "24"]
    out = json.loads(run("series-op", "mul", "--in", "exp", "--with", "exp", "-T", "3")[1])
    assert out["coeffs"] == ["1", "2", "4", "8"]


def test_series_op_other_ops():
    assert json.loads(run("series-op", "reciprocal", "--in", "exp", "-T", "3")[1])["coeffs"] == ["1", "-1", "1", "-1"]
    assert json.loads(run("series-op", "add", "--in", "sin", "--with", "cos", "-T", "3")[1])["coeffs"] == ["1", "1", "-1", "-1"]
    assert json.loads(run("series-op", "compose", "--in", "sin", "--with", "sin", "-T", "3")[1])["coeffs"][3] == "-2"


@pytest.mark.parametrize("argv", [
    ("table", "--kind", "nope", "--series", "exp", "--N", "1", "--max-n", "3"),
    ("table", "--kind", "bernoulli", "--series", "no-such-thing", "--N", "1", "--max-n", "3"),
    ("series-op", "mul", "--in", "exp", "-T", "3"),
    ("series-op", "hypergeom", "--p", "0/1", "--q", "1", "--r", "1"),
    ("frobnicate",),
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(*argv)[0] == cli.EXIT_USAGE


@pytest.mark.parametrize("argv,code_name", [
    (("table", "--kind", "bernoulli", "--series", "sin", "--N", "2", "--max-n", "3"), "zero-pivot"),
    (("series-op", "reciprocal", "--in", "sin", "-T", "3"), "zero-constant-term"),
    (("series-op", "invert", "--in", "exp", "-T", "3"), "not-invertible"),
    (("series-op", "compose", "--in", "exp", "--with", "cos", "-T", "3"), "nonzero-constant-inner"),
    (("series-op", "hypergeom", "--p", "1", "--q", "1", "--r", "-2", "-T", "5"), "pochhammer-zero-denominator"),
])
def test_precondition_errors_exit_3(argv, code_name):
    code, out, err = run(*argv)
    assert code == cli.EXIT_PRECONDITION and out == "" and code_name in err


@pytest.mark.parametrize("doc", [
    '{"kind": "egf", "order": 1, "coeffs": ["1", "2/4"]}',
    '{"kind": "egf", "order": 1, "coeffs": ["1", "1/-2"]}',
    '{"kind": "egf", "order": 2, "coeffs": ["1", "1"]}',
    '{"kind": "ogf", "order": 0, "coeffs": ["1"]}',
    '{"kind": "egf", "order": 0, "coeffs": [1]}',
    '{"kind": "egf", "order": 0, "coeffs": ["0.5"]}',
    '{"kind": "egf", "order": 0, "coeffs": ["1"], "extra": 1}',
    'not json',
])
def test_series_file_strictness(doc, tmp_path):
    with pytest.raises(ParseError):
        cli.parse_series_file(doc)
    p = tmp_path / "bad.json"
    p.write_text(doc)
    assert run("series-op", "reciprocal", "--in", str(p))[0] == cli.EXIT_USAGE


@settings(max_examples=50, deadline=None)
@given(series(order=6))
def test_series_file_roundtrip(f):
    s = cli.SeriesFile.from_series(f)
    assert cli.parse_series_file(cli.render_series_file(s)) == s


def test_output_is_deterministic():
    argv = ("table", "--kind", "comp", "--series", "zeta:2", "--N", "1", "--max-n", "9", "--format", "json")
    assert run(*argv) == run(*argv)


def test_verify_tables_exit_0_with_known_discrepancies():
    code, out, _ = run("verify", "--suite", "tables", "--format", "json")
    checks = json.loads(out)
    assert code == 0
    statuses = {c["id"]: c["status"] for c in checks}
    assert statuses["table:bernoulli-exp-1"] == "PASS"
    assert statuses["table:bernoulli-zeta2-1[2]"] == "KNOWN-DISCREPANCY"
    assert statuses["poly:comp-exp-1[3]"] == "KNOWN-DISCREPANCY"
    assert statuses["pin:chain-sum-comp[3,4]"] == "KNOWN-DISCREPANCY"
    assert all(set(c) >= {"id", "status", "expected", "actual", "source"} for c in checks)


def test_verify_oracles_max_n_7():
    checks = verify.run("oracles", 7)
    assert checks and all(c.status == "PASS" for c in checks)


def test_seeded_sign_bug_is_caught(monkeypatch):
    real = bernoulli.reciprocal

    def buggy(f):
        r = real(f)
        return EgfSeries(tuple(c if n != 1 else -c for n, c in enumerate(r.coeffs)))

    monkeypatch.setattr(bernoulli, "reciprocal", buggy)
    code, out, _ = run("verify", "--suite", "tables")
    assert code == cli.EXIT_VERIFY
    line = next(l for l in out.splitlines() if l.startswith("FAIL") and "table:bernoulli-exp-1 " in l + " ")
    assert "first mismatch at n=1: expected -1/2, got 1/2" in line


def test_known_ids_are_documented():
    text = (ROOT / "DISCREPANCIES.md").read_text(encoding="utf-8")
    for reg_id in REGISTRY:
        assert reg_id in text
    cited = {c.registry for c in verify.tables_suite() if c.registry}
    assert cited <= set(REGISTRY)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "egfbern", "table", "--kind", "bernoulli", "--series", "exp",
                           "--N", "1", "--max-n", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1,-1/2,1/6\n"
