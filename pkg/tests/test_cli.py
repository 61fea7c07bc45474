import io
import json

import pytest

from noether3 import __version__
from noether3.cli import run


def call(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def body(text):
    return json.loads(text)["body"]


def test_decide_example():
    code, out, _ = call("decide", "--group", "3.1.2.1", "--coeffs", "a1=2,a2=3,a3=5")
    assert code == 0
    v = body(out)["verdict"]
    assert v["outcome"] == "negative" and "(3,1,2,1)" in v["reason"]


def test_decide_with_signs():
    code, out, _ = call("decide", "--group", "3.3.1.1", "--signs", "e1=-1,e2=-1,e3=-1", "--coeffs", "a=2,b=3,c=5")
    assert code == 0 and body(out)["verdict"]["outcome"] == "negative"


def test_tate_example():
    code, out, _ = call("tate", "--module", "registry:paper.s3.M")
    assert code == 0 and body(out)["tate_minus1"]["invariant_factors"] == [2]


@pytest.mark.parametrize(
    "argv, needle",
    [
        (["decide", "--group", "9.9.9.9"], "unknown group id"),
        (["decide", "--group", "R", "--coeffs", "a=1,b=2"], "coefficients"),
        (["decide", "--group", "R", "--coeffs", "a=0,b=2,c=3"], "zero"),
        (["tate", "--module", "registry:paper.bogus"], "unknown registry module"),
        (["tate", "--module", "/nonexistent.json"], "cannot read"),
        (["certify", "--case", "nope"], "unknown case"),
        (["test", "parity-refined", "--module", "registry:paper.s12.Mp"], "needs"),
        (["frobnicate"], "invalid choice"),
        ([], "required"),
    ],
)
def test_usage_errors_exit_2_with_one_line(argv, needle):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert err.count("\n") == 1 and needle in err


def test_version(capsys):
    assert run(["--version"]) == 0
    assert __version__ in capsys.readouterr().out


def test_test_exit_codes():
    code, out, _ = call("test", "nonvanishing", "--module", "registry:paper.s3.Mp")
    assert code == 0 and body(out)["outcome"]["status"] == "certified"
    code, out, _ = call("test", "nonvanishing", "--module", "registry:paper.s3.M")
    assert code == 1 and body(out)["outcome"]["status"] == "inconclusive"
    code, out, _ = call(
        "test", "parity-refined", "--module", "registry:paper.s12.Mp",
        "--invariant", "u", "--flip", "w", "--tau-star", "t3",
    )
    assert code == 0


def test_certify():
    code, out, _ = call("certify", "--case", "N3121.deg8")
    assert code == 0 and body(out)["certificate"]["status"] == "certified"


def test_registry_round_trip(tmp_path):
    code, out, _ = call("registry", "show", "paper.s5.M")
    assert code == 0
    f = tmp_path / "m.json"
    f.write_text(out)
    a = body(call("cohomology", "--module", str(f), "--all-subgroups")[1])
    b = body(call("cohomology", "--module", "registry:paper.s5.M", "--all-subgroups")[1])
    assert a["h1"] == b["h1"]
    assert body(call("tate", "--module", str(f))[1])["tate_minus1"] == body(call("tate", "--module", "registry:paper.s5.M")[1])["tate_minus1"]


def test_report_body_is_deterministic():
    argv = ("cohomology", "--module", "registry:paper.s8.M", "--all-subgroups")
    first, second = call(*argv)[1], call(*argv)[1]
    assert body(first) == body(second)
    assert "wall_clock_seconds" in json.loads(first)["meta"]


def test_pretty_summary():
    code, out, _ = call("decide", "--group", "R", "--coeffs", "a=2,b=3,c=6", "--pretty")
    assert code == 0 and out.startswith("negative:")
    code, out, _ = call("registry", "list", "--pretty")
    assert "paper.s12.Mp" in out


def test_batch_preserves_order(tmp_path):
    jobs = [
        {"argv": ["cohomology", "--module", "registry:paper.s5.Mpp", "--all-subgroups"]},
        {"argv": ["decide", "--group", "R", "--coeffs", "a=2,b=2,c=7"]},
        {"argv": ["decide", "--group", "9.9.9.9"]},
        ["tate", "--module", "registry:paper.s3.M"],
    ]
    f = tmp_path / "jobs.json"
    f.write_text(json.dumps(jobs))
    code, out, _ = call("batch", "--file", str(f), "--jobs", "4")
    results = body(out)["results"]
    assert [r["argv"][0] for r in results] == ["cohomology", "decide", "decide", "tate"]
    assert [r["exit_code"] for r in results] == [0, 0, 2, 0]
    assert code == 2
    assert results[1]["body"]["verdict"]["outcome"] == "affirmative"


def test_group_cap_from_environment(monkeypatch, tmp_path):
    code, out, _ = call("registry", "show", "paper.s5.M")
    f = tmp_path / "m.json"
    f.write_text(out)
    monkeypatch.setenv("NOETHER_MAX_GROUP_ORDER", "4")
    code, _, err = call("tate", "--module", str(f))
    assert code == 2 and "exceeded" in err
    monkeypatch.setenv("NOETHER_MAX_GROUP_ORDER", "x")
    code, _, err = call("tate", "--module", "registry:paper.s3.M")
    assert code == 2 and "NOETHER_MAX_GROUP_ORDER" in err
