import io
import json

import pytest

from braidkit.cli import run
from braidkit.diagram import FIVE_TWO


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_nf_example():
    code, out, _ = call("nf", "4: 1 3 2 2 1 3 3 2 3 2")
    assert code == 0
    assert out == "D^0 | 4 2 1 3 | 3 4 1 2 | 1 3 2 4 | 1 3 2 4\n"


def test_homfly_example():
    assert call("invariant", "homfly", "2: 1 1 1")[1] == "2*l^2 - l^4 + l^2*m^2\n"
    assert call("invariant", "homfly", "2: 1 1 1", "--method", "skein")[1] == \
        "2*l^2 - l^4 + l^2*m^2\n"


def test_eq_example():
    assert call("eq", "3: 1 2 1", "3: 2 1 2") == (0, "true\n", "")
    assert call("eq", "3: 1", "3: 2")[1] == "false\n"


def test_other_invariants():
    assert call("invariant", "jones", "2: 1 1 1")[1] == "t + t^3 - t^4\n"
    assert call("invariant", "alexander", "3: 1 -2 1 -2")[1] == "1 - 3*t + t^2\n"
    assert call("invariant", "mfw", "3: 1 -2 1 -2")[1] == "3\n"
    assert call("--var", "l=a", "invariant", "homfly", "2: 1 1 1")[1] == \
        "2*a^2 - a^4 + a^2*m^2\n"


def test_word_from_file(tmp_path):
    f = tmp_path / "w.txt"
    f.write_text("3: 1 2 1\n")
    assert call("eq", str(f), "3: 2 1 2")[1] == "true\n"


def test_diagram_commands(tmp_path):
    f = tmp_path / "52.pd"
    f.write_text(FIVE_TWO.to_text())
    code, out, _ = call("fromdiagram", str(f))
    assert code == 0 and out == "4: 3 2 -1 2 -3 2 2 1 2\n"
    want = "l^2 + l^4 - l^6 + l^2*m^2 + l^4*m^2\n"
    assert call("invariant", "homfly", "--diagram", str(f))[1] == want
    assert call("invariant", "homfly", "--diagram", str(f), "--method", "trace")[1] == want
    code, out, _ = call("closure", "2: 1 1 1")
    assert out.splitlines()[0] == "diagram 3"


def test_conjugacy_commands():
    code, out, _ = call("conj", "3: 1", "3: 2")
    assert code == 0 and out.splitlines()[0] == "true"
    assert call("conj", "3: 1", "3: -1")[1] == "false\n"
    assert call("uss", "3: 1")[1].splitlines() == ["D^0 | 2 1 3", "D^0 | 1 3 2"]
    assert call("geodesic", "3: -1")[1] == "1\n"


def test_misc_commands():
    assert call("stabilize", "2: 1")[1] == "3: 1 2\n"
    assert call("stabilize", "--negative", "2: 1")[1] == "3: 1 -2\n"
    assert call("destabilize", "3: 1 2")[1] == "2: 1\n"
    assert call("destabilize", "3: 1 1 2 2")[1] == "none\n"
    assert call("order", "3: 2", "3: 1")[1] == "<\n"
    assert call("singular-eq", "3: 1 t1", "3: t1 1")[1] == "true\n"
    assert call("dual-nf", "4: (4,3) (3,1)")[1].splitlines()[0] == "D^0 | (4 3 1)"
    # s2 s1 is the dual Garside element itself
    assert call("nf", "--dual", "3: 2 1")[1] == "D^1\n"
    out = call("rep", "burau", "2: 1")[1]
    assert out == "[1 - t, t]\n[1, 0]\n"


def test_json_output():
    code, out, _ = call("--format", "json", "--no-timing", "nf", "3: 1 2")
    doc = json.loads(out)
    assert doc["command"] == "nf"
    assert doc["input"] == {"word": "3: 1 2", "dual": False}
    assert doc["result"] == {"kind": "classical", "n": 3, "inf": 0, "factors": [[2, 3, 1]]}
    assert doc["stats"]["elapsed_ms"] == 0
    assert set(doc["stats"]) == {"elapsed_ms", "cache_hits"}


def test_json_is_deterministic_without_timing():
    args = ("--format", "json", "--no-timing", "conj", "4: 1 2 3", "4: 3 2 1")
    first = call(*args)[1]
    doc = json.loads(first)
    doc["stats"]["cache_hits"] = 0
    again = json.loads(call(*args)[1])
    again["stats"]["cache_hits"] = 0
    assert doc == again


def test_config_file(tmp_path, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"format": "json", "var_names": {"m": "z"}}))
    code, out, _ = call("--config", str(cfg), "--no-timing", "invariant", "homfly", "2: 1 1 1")
    assert json.loads(out)["result"] == "2*l^2 - l^4 + l^2*z^2"
    monkeypatch.setenv("BRAID_CONFIG", str(cfg))
    assert json.loads(call("eq", "3: 1", "3: 1")[1])["result"] is True


@pytest.mark.parametrize("cfg", ['{"bogus": 1}', '{"uss_cap": 0}', "not json"])
def test_bad_config_is_usage_error(tmp_path, cfg):
    f = tmp_path / "cfg.json"
    f.write_text(cfg)
    assert call("--config", str(f), "eq", "3: 1", "3: 1")[0] == 2


def test_exit_codes():
    assert call()[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("--var", "oops", "eq", "3: 1", "3: 1")[0] == 2
    code, _, err = call("eq", "3: 1", "4: 1")
    assert code == 1 and err.startswith("error:")
    assert call("nf", "3: 7")[0] == 1
    code, _, err = call("--uss-cap", "1", "uss", "5: 1 2 3 4 -1 3")
    assert code == 3 and "cap" in err
    assert call("--skein-budget", "1", "invariant", "homfly", "3: 1 -2 1 -2",
                "--method", "skein")[0] == 3


def test_selftest_subset():
    code, out, _ = call("selftest", "--only", "1", "--only", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "2/2 criteria passed"
    assert lines[0].startswith("criterion  1 PASS")
