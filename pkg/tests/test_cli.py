import json

import pytest
from toric_pseudoindex import cli
from toric_pseudoindex.verifyUtils import VerificationReport


def _json_out(capsys):
	return json.loads(capsys.readouterr().out)


@pytest.fixture
def p2_path(tmp_path):
	path = tmp_path / "p2.json"
	assert cli.run(["construct", "pspace", "--n", "2", "-o", str(path)]) == cli.EXIT_OK
	return str(path)


def test_construct_then_validate(p2_path, capsys):
	capsys.readouterr()
	assert cli.run(["validate", p2_path]) == cli.EXIT_OK
	out = capsys.readouterr().out
	assert "complete: True" in out


def test_invariants_json(p2_path, capsys):
	capsys.readouterr()
	assert cli.run(["invariants", p2_path, "--json"]) == cli.EXIT_OK
	report = _json_out(capsys)
	assert (report["pseudo_index"], report["fano_index"], report["picard_rank"]) == (3, 3, 1)
	assert report["wall_degrees"] == {"3": 3}


def test_global_option_before_command(p2_path, capsys):
	capsys.readouterr()
	assert cli.run(["--json", "invariants", p2_path]) == cli.EXIT_OK
	assert _json_out(capsys)["is_fano"] is True


def test_validate_incomplete_fan(tmp_path, capsys):
	path = tmp_path / "bad.json"
	path.write_text(json.dumps({"dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1], [1, 2]]}))
	assert cli.run(["validate", str(path), "--json"]) == cli.EXIT_BAD_INPUT
	assert _json_out(capsys)["complete"] is False


@pytest.mark.parametrize("content", [
	"{not json",
	json.dumps({"dim": 2, "rays": [[1, 0]], "max_cones": [[0]], "extra": 1}),
	json.dumps({"dim": 2, "rays": [[2, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1], [1, 2], [0, 2]]}),
])
def test_invariants_bad_input(tmp_path, content):
	path = tmp_path / "fan.json"
	path.write_text(content)
	assert cli.run(["invariants", str(path)]) == cli.EXIT_BAD_INPUT


def test_missing_file(tmp_path):
	assert cli.run(["invariants", str(tmp_path / "nope.json")]) == cli.EXIT_BAD_INPUT


@pytest.mark.parametrize("argv", [
	[],
	["validate"],
	["verify", "nothing"],
	["construct", "pspace", "--n", "2", "--bogus"],
])
def test_bad_arguments(argv):
	assert cli.run(argv) == cli.EXIT_BAD_INPUT


def test_construct_pspace_zero():
	assert cli.run(["construct", "pspace", "--n", "0"]) == cli.EXIT_BAD_INPUT


def test_construct_pbundle(tmp_path, capsys):
	path = tmp_path / "f1.json"
	assert cli.run(["construct", "pbundle", "--base", "1", "--twists", "0;1", "-o", str(path)]) == cli.EXIT_OK
	capsys.readouterr()
	assert cli.run(["invariants", str(path), "--json"]) == cli.EXIT_OK
	assert _json_out(capsys)["wall_degrees"] == {"1": 1, "2": 2, "3": 1}


def test_construct_pbundle_from_spec(tmp_path, capsys):
	spec = tmp_path / "spec.json"
	spec.write_text(json.dumps({"base_dims": [1, 2], "twists": [[0, 0], [1, 1]]}))
	assert cli.run(["construct", "pbundle", "--spec", str(spec), "--json"]) == cli.EXIT_OK
	fan = _json_out(capsys)
	assert fan["dim"] == 4
	assert len(fan["max_cones"]) == 12


def test_construct_pbundle_bad_twists():
	assert cli.run(["construct", "pbundle", "--base", "1", "--twists", "1;0"]) == cli.EXIT_BAD_INPUT
	assert cli.run(["construct", "pbundle", "--base", "1"]) == cli.EXIT_BAD_INPUT


def test_construct_product(tmp_path, capsys):
	p1 = tmp_path / "p1.json"
	assert cli.run(["construct", "pspace", "--n", "1", "-o", str(p1)]) == cli.EXIT_OK
	capsys.readouterr()
	assert cli.run(["construct", "product", str(p1), str(p1), "--json"]) == cli.EXIT_OK
	fan = _json_out(capsys)
	assert (fan["dim"], len(fan["rays"]), len(fan["max_cones"])) == (2, 4, 4)


def test_blowup_point_of_p3(tmp_path, capsys):
	p3 = tmp_path / "p3.json"
	x = tmp_path / "x.json"
	assert cli.run(["construct", "pspace", "--n", "3", "-o", str(p3)]) == cli.EXIT_OK
	capsys.readouterr()
	assert cli.run(["blowup", str(p3), "--cone", "0,1,2", "-o", str(x), "--emit-pullback", "--json"]) == cli.EXIT_OK
	summary = _json_out(capsys)
	assert summary["discrepancy"] == 2
	assert summary["pullback_anticanonical"] == [1, 1, 1, 1, 3]
	assert summary["exceptional"] == [0, 0, 0, 0, 1]
	assert cli.run(["validate", str(x)]) == cli.EXIT_OK
	capsys.readouterr()
	assert cli.run(["invariants", str(x), "--json"]) == cli.EXIT_OK
	report = _json_out(capsys)
	assert (report["pseudo_index"], report["fano_index"], report["picard_rank"]) == (2, 2, 2)


def test_blowup_divisorial_center(p2_path, tmp_path):
	assert cli.run(["blowup", p2_path, "--cone", "0", "-o", str(tmp_path / "x.json")]) == cli.EXIT_BAD_INPUT


def test_verify_prop1(capsys):
	assert cli.run(["verify", "prop1", "--m-max", "3", "--json"]) == cli.EXIT_OK
	report = _json_out(capsys)
	assert report["suite"] == "prop1"
	assert report["failed"] == 0
	assert [row["i_y"] for row in report["rows"]] == [1, 1]


def test_verify_human_output(capsys):
	assert cli.run(["verify", "family", "--max", "2"]) == cli.EXIT_OK
	out = capsys.readouterr().out
	assert "suite: family" in out
	assert "failed: 0" in out


@pytest.mark.parametrize("suite", ["theorem1", "theorem2", "corollaries", "identities"])
def test_verify_catalog_suites(suite, capsys):
	assert cli.run(["verify", suite, "--catalog", "3,2,4", "--json"]) == cli.EXIT_OK
	assert _json_out(capsys)["violations"] == []


def test_verify_baselines_and_cross():
	assert cli.run(["verify", "baselines", "--seed", "7"]) == cli.EXIT_OK
	assert cli.run(["verify", "cross", "--m-max", "3"]) == cli.EXIT_OK


def test_verify_violation_exit_code(monkeypatch, capsys):
	failing = VerificationReport(suite="prop1", checked=1, violations=[{"label": "prop1/m=02", "check": "i_y"}])
	monkeypatch.setattr(cli.vu, "check_prop1", lambda m_max, workers=1: failing)
	assert cli.run(["verify", "prop1"]) == cli.EXIT_VIOLATIONS
	assert "prop1/m=02" in capsys.readouterr().out


def test_catalog_command_is_deterministic(tmp_path):
	a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
	for path in (a, b):
		assert cli.run(["catalog", "--m-max", "2", "--max", "2", "--n-max", "3", "-o", str(path)]) == cli.EXIT_OK
	assert a.read_bytes() == b.read_bytes()
	assert len(a.read_text().splitlines()) == 12


def test_catalog_command_truncated(tmp_path, capsys):
	path = tmp_path / "cat.jsonl"
	argv = ["catalog", "--m-max", "2", "--max", "2", "--n-max", "3", "--max-entries", "3", "--validate",
			"-o", str(path), "--json"]
	assert cli.run(argv) == cli.EXIT_OK
	summary = _json_out(capsys)
	assert summary["truncated"] is True
	assert summary["kinds"] == {"family": 3}
	assert summary["invalid_fans"] == []
	assert "__truncated__" in path.read_text().splitlines()[-1]


@pytest.mark.parametrize("option, value", [
	("--max-entries", "-1"),
	("--max-entries", "0"),
	("--m-max", "-2"),
	("--n-max", "-1"),
])
def test_catalog_command_rejects_bad_limits(tmp_path, capsys, option, value):
	path = tmp_path / "cat.jsonl"
	argv = ["catalog", "--m-max", "2", "--max", "2", "--n-max", "3", option, value, "-o", str(path)]
	assert cli.run(argv) == cli.EXIT_BAD_INPUT
	assert not path.exists()
	assert "error:" in capsys.readouterr().err


def test_catalog_command_parquet(tmp_path):
	path = tmp_path / "cat.parquet"
	assert cli.run(["catalog", "--m-max", "2", "--max", "2", "--n-max", "2", "-o", str(path)]) == cli.EXIT_OK
	assert path.exists()
