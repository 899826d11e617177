import json

import pytest

from app import run
from models.errors import InvariantViolation

UNIFORM_54 = "54,54,54,54,54,54,54,54"


def test_resolve_json(capsys, config):
    assert run(["resolve", UNIFORM_54, "--format", "json"], config) == 0
    out = capsys.readouterr().out
    payload = json.loads(out)
    assert payload["generators"] == {"153": 55, "154": 48}
    assert payload["syzygies"] == {"154": 3, "155": 99}

    assert run(["resolve", UNIFORM_54, "--format", "json"], config) == 0
    assert capsys.readouterr().out == out


def test_resolve_text_with_expected(capsys, config):
    assert run(["resolve", UNIFORM_54, "--expected"], config) == 0
    out = capsys.readouterr().out.splitlines()
    assert "generators: 153:55 154:48" in out
    assert "syzygies: 154:3 155:99" in out
    assert "expected generators: 153:55 154:45" in out


@pytest.mark.parametrize("args", [["resolve", "1,2,3,4,5,6,7,8,9"], ["resolve", "a,b"], ["resolve"], ["h0"], ["nope"]])
def test_usage_errors(capsys, config, args):
    assert run(args, config) == 1


def test_batch(tmp_path, capsys, config):
    batch = tmp_path / "schemes.csv"
    batch.write_text("# one vector per line\n2\n1,1\na,b\n")
    assert run(["resolve", "--batch", str(batch)], config) == 1
    lines = capsys.readouterr().out.splitlines()
    assert [json.loads(line).get("alpha") for line in lines] == [2, 1, None]

    batch.write_text("1,1,1,1,1,1,1,1,1\n")
    assert run(["resolve", "--batch", str(batch)], config) == 1


def test_hilbert(capsys, config):
    assert run(["hilbert", "2", "--from", "0", "--to", "3"], config) == 0
    assert capsys.readouterr().out.splitlines() == ["0 0", "1 0", "2 3", "3 7"]


def test_mu_of_anticanonical(capsys, config):
    assert run(["mu", "3", "1", "1", "1", "1", "1", "1", "1", "1"], config) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "ker = 0, cok = 1"
    assert "case_b_step" in lines[1]
    assert "h0_zero" in lines[-1]


def test_cohomology_commands(capsys, config):
    assert run(["h0", "9", "3", "3", "3", "3", "3", "3", "3", "3"], config) == 0
    assert capsys.readouterr().out.strip() == "h0(9 3 3 3 3 3 3 3 3) = 7"
    assert run(["h2", "-3", "-1", "-1", "-1", "-1", "-1", "-1", "-1", "-1"], config) == 0
    assert capsys.readouterr().out.strip().endswith("= 1")
    assert run(["h1", "0", "2", "-1", "-1", "-1", "-1", "-1", "-1", "-1", "--format", "json"], config) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["h1"] == 2
    assert payload["special"] == {"r": 3, "curve": "1 1 0 0 0 0 0 0 0"}


def test_divisor_arguments_use_the_class_text_form(capsys, config):
    assert run(["h0", "9, 3 3,3"], config) == 0
    assert capsys.readouterr().out.strip() == "h0(9 3 3 3 0 0 0 0 0) = 37"
    assert run(["h0", "9", "3", "x"], config) == 1
    assert "not an integer sequence" in capsys.readouterr().err


def test_ql(capsys, config):
    assert run(["ql", "4", "2", "2", "1", "1", "1", "1", "1", "1"], config) == 0
    assert capsys.readouterr().out.startswith("q=0 l=0")
    assert run(["ql", "5", "1", "2"], config) == 1


def test_curves(capsys, config):
    assert run(["curves", "--kind", "exceptional"], config) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 241
    assert lines[-1] == "# count: 240"
    assert run(["curves", "--kind", "square-zero", "--format", "json"], config) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["count"] == 2160
    assert payload["kind"] == "square_zero"


def test_cone(capsys, config):
    assert run(["cone", "--list"], config) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "17 6 6"
    assert run(["cone", "--contains", "17", "6", "6"], config) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert run(["cone", "--decompose", "16", "6", "6"], config) == 0
    assert capsys.readouterr().out.strip() == "none"
    assert run(["cone", "--list", "--contains", "1", "0", "0"], config) == 1


def test_oracle_check(capsys, config):
    assert run(["oracle-check", "--mults", "2", "--tmax", "4", "--seed", "0"], config) == 0
    lines = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert len(lines) == 6
    assert all(line["match"] for line in lines[:-1])


def test_oracle_mismatch_exit_code(monkeypatch, capsys, config):
    monkeypatch.setattr("services.oracle_service.EngineAdapter.hilbert", lambda self, mults, t: -1)
    assert run(["oracle-check", "--mults", "1", "--tmax", "2", "--seed", "0"], config) == 3


def test_invariant_violation_exit_code(monkeypatch, config):
    def broken(self, F):
        raise InvariantViolation("broken")

    monkeypatch.setattr("services.cohomology_service.CohomologyService.chi", broken)
    assert run(["h0", "1"], config) == 2


def test_cli_matches_library(capsys, config, mu_rank_service):
    assert run(["mu", "11", "4", "4", "4", "4", "4", "4", "4", "1", "--format", "json"], config) == 0
    payload, _ = mu_rank_service.mu_payload({"d": 11, "m": [4] * 7 + [1]})
    assert json.loads(capsys.readouterr().out) == payload
