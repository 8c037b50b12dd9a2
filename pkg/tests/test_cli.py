import io
import json
import subprocess
import sys


from equiknot.cli import run
from equiknot.serialize import DATA_DIR


def call(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        code = run(list(argv), out, err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def test_profile_document():
    code, out, _ = call("profile", str(DATA_DIR / "k13n1496.json"))
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"breakpoints", "interval_values", "jumps", "sigma", "sigma_tilde", "max_jump", "g4_lower"}
    assert doc["breakpoints"] == [{"poly": "s - 1", "interval": ["1", "1"]}]


def test_shipped_fixture_name_resolves():
    code, out, _ = call("validate", "k13n1496.json")
    assert code == 0 and json.loads(out) == {"valid": True, "violations": []}


def test_fox_milnor():
    code, out, _ = call("fox-milnor", "--p", "5", "--q", "2")
    assert code == 0 and json.loads(out)["is_square"] is False
    code, out, _ = call("fox-milnor", "--poly", "t^2 - 2*t + 3 - 2*t^-1 + t^-2")
    assert json.loads(out) == {"is_square": True}


def test_delta_commands():
    assert json.loads(call("delta-inverse", "--poly", "s - 10")[1]) == {"delta_inverse": "-9/4*t - 11/2 - 9/4*t^-1"}
    assert json.loads(call("delta", "--poly", "-t + 3 - t^-1")[1]) == {"delta": "-5*s + 1"}


def test_table_exit_codes(tmp_path):
    code, out, _ = call("table")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 86 and doc["mismatches"] == 0
    bad = tmp_path / "bad.csv"
    bad.write_text("name,p,q,order,J\nx,5,2,?,0\n")
    code, out, _ = call("table", "--catalog", str(bad), "--csv")
    assert code == 3
    assert out.splitlines()[0] == "name,p,q,q_prime,det,alexander,J,catalog_J,order,match"


def test_errors_are_structured():
    code, _, err = call("delta", "--poly", "t + 1")
    assert code == 1 and json.loads(err) == {"error": "NotSymmetric", "detail": "t + 1 is not invariant under t -> 1/t"}
    code, _, err = call("profile", "--bogus-flag", "x.json")
    assert code == 2 and json.loads(err)["error"] == "UsageError"
    code, _, err = call("profile", "does-not-exist.json")
    assert code == 2
    code, _, err = call("validate", stdin="{not json")
    assert code == 2
    code, _, err = call("delta", "--poly", "t^")
    assert code == 2 and json.loads(err)["error"] == "InvalidInput"


def test_stdin_and_round_trip():
    doc = (DATA_DIR / "unknot_g.json").read_text()
    code, out, _ = call("inverse", stdin=doc)
    assert code == 0
    code, out2, _ = call("inverse", stdin=out)
    again = json.loads(out2)
    original = json.loads(doc)
    assert again["A"] == original["A"] and again["lk"] == original["lk"]


def test_sum_and_metabolizer(tmp_path):
    path = str(DATA_DIR / "k13n1496.json")
    inv = tmp_path / "inv.json"
    inv.write_text(call("inverse", path)[1])
    total = tmp_path / "sum.json"
    total.write_text(call("sum", path, str(inv))[1])
    code, out, _ = call("complexity", str(total))
    assert code == 0 and json.loads(out)["ac_upper"] == 0
    w = tmp_path / "w.json"
    w.write_text(json.dumps({"generators": [[1, 0, 0, 1], [-1, 2, -2, 1]], "full": True}))
    assert json.loads(call("metabolizer-verify", path, str(w))[1])["metabolizer"] is False
    assert json.loads(call("metabolizer-verify", path, str(w), "--reduced")[1])["metabolizer"] is True
    found = json.loads(call("metabolizer-search", path, "--rank", "2")[1])
    assert found["generators"] is None


def test_other_commands_run():
    path = str(DATA_DIR / "k13n1496.json")
    for cmd in ("structure", "witt", "jumps", "genus-bound"):
        code, out, _ = call(cmd, path)
        assert code == 0, cmd
        json.loads(out)
    code, out, _ = call("two-bridge", "--p", "5", "--q", "2")
    assert json.loads(out)["J"] == 1
    code, out, _ = call("--format", "text", "fox-milnor", "--p", "5", "--q", "2")
    assert out.startswith("is_square: false")


def test_deterministic_output():
    path = str(DATA_DIR / "k13n1496.json")
    assert call("profile", path)[1] == call("profile", path)[1]


def test_console_script_help():
    r = subprocess.run([sys.executable, "-m", "equiknot", "--help"], capture_output=True, text=True)
    assert r.returncode == 0
    for cmd in ("validate", "metabolizer-search", "delta-inverse", "table"):
        assert cmd in r.stdout
