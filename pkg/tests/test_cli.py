import json
import pathlib

import pytest
from click.testing import CliRunner

from dlash.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args, env=None):
    return runner.invoke(main, list(args), env=env or {})


def test_adem_text(runner):
    r = invoke(runner, "adem", "6", "2")
    assert r.exit_code == 0
    assert r.output == "Q^6 Q^2 = Q^5 Q^3\n"


def test_adem_zero_rhs(runner):
    r = invoke(runner, "adem", "5", "2")
    assert r.output == "Q^5 Q^2 = 0\n"


def test_adem_admissible_pair(runner):
    r = invoke(runner, "adem", "4", "2")
    assert r.exit_code == 0
    assert "already admissible" in r.output


def test_adem_json(runner):
    r = invoke(runner, "--json", "adem", "6", "2")
    payload = json.loads(r.output)
    assert payload["schema"] == 1
    assert payload["rhs"] == [[5, 3]]


def test_reduce(runner):
    r = invoke(runner, "reduce", "Q^6 Q^2 x[2]")
    assert r.exit_code == 0
    assert r.output.strip() == "Q^5 Q^3 x[2]"


def test_reduce_parse_error_exits_1(runner):
    r = invoke(runner, "reduce", "Q^x")
    assert r.exit_code == 1
    assert "syntax error" in r.output


def test_usage_error_exits_2(runner):
    r = invoke(runner, "adem", "six", "2")
    assert r.exit_code == 2


def test_unknown_command_exits_2(runner):
    r = invoke(runner, "bogus")
    assert r.exit_code == 2


def test_determinism(runner):
    a = invoke(runner, "--degree-bound", "10", "symmetry", "1", "8")
    b = invoke(runner, "--degree-bound", "10", "symmetry", "1", "8")
    assert a.output == b.output
    assert a.output  # non-empty


def test_quiet_suppresses_output(runner):
    r = invoke(runner, "--quiet", "adem", "6", "2")
    assert r.exit_code == 0
    assert r.output == ""


def test_degree_bound_env_var(runner):
    r = invoke(runner, "zeta-action", "1", env={"DLASH_DEGREE_BOUND": "4"})
    assert "e_s+e_t<=4" in r.output


def test_window_printed_with_series(runner):
    r = invoke(runner, "--degree-bound", "6", "zeta-action", "2")
    assert "e_t>=3" in r.output  # instability line is part of the window


@pytest.mark.parametrize("n", [1, 2, 3])
def test_zeta_action_golden(runner, n):
    r = invoke(runner, "--degree-bound", "32", "zeta-action", str(n))
    assert r.exit_code == 0
    golden = (GOLDEN / f"zeta_action_n{n}.txt").read_text()
    assert r.output == golden


def test_conjugate(runner):
    r = invoke(runner, "conjugate", "2")
    assert "zbar2 = z1^3 + z2" in r.output


def test_steinberger_passes(runner):
    r = invoke(runner, "steinberger", "3")
    assert r.exit_code == 0
    assert "passed" in r.output


def test_nishida_json(runner):
    r = invoke(runner, "--json", "--degree-bound", "8", "nishida")
    assert r.exit_code == 0
    payload = json.loads(r.output)
    assert payload["report"]["passed"] is True


def test_verify_all_small_bound(runner):
    # the full suite is exercised in the acceptance tests; here just the
    # plumbing, at the cheapest meaningful bound
    r = invoke(runner, "--degree-bound", "8", "verify-all")
    assert r.exit_code == 0
    assert "all suites passed" in r.output
