import json

import pytest
from click.testing import CliRunner

from cantorlab.cli import cli


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def specs(tmp_path):
    paths = {}
    paths["mt"] = tmp_path / "middle_thirds.toml"
    paths["mt"].write_text('type = "cantor"\nlambdas = ["1/3"]\n')
    paths["pair"] = tmp_path / "pair44.toml"
    paths["pair"].write_text('type = "pair"\nq = "1/4"\nrule = "lemma44"\nbeta = "1/2"\n')
    paths["f1"] = tmp_path / "f1.toml"
    paths["f1"].write_text('type = "sequence_set"\nalpha = "1"\n')
    paths["bad_lambda"] = tmp_path / "bad_lambda.toml"
    paths["bad_lambda"].write_text('type = "cantor"\nlambdas = ["1/2"]\n')
    paths["bad_rule"] = tmp_path / "bad_rule.toml"
    paths["bad_rule"].write_text(
        'type = "pair"\nq = "1/4"\nrule = "lemma45"\nbeta = "1/4"\ngamma = "1/2"\n')
    return paths


def test_cover_csv_counts(runner, specs):
    result = runner.invoke(cli, ["cover", "--set", str(specs["mt"]),
                                 "--scales", "3^-1..3^-6"])
    assert result.exit_code == 0, result.output
    lines = result.output.strip().splitlines()
    assert lines[0] == "scale,countD,countN,countP"
    counts = [int(line.split(",")[1]) for line in lines[1:]]
    assert counts == [2, 4, 8, 16, 32, 64]


def test_cover_json_pair_side(runner, specs):
    result = runner.invoke(cli, ["cover", "--set", str(specs["pair"]), "--side", "D",
                                 "--scales", "q^2..6", "--format", "json"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["config"]["side"] == "D"
    assert len(report["profile"]) == 5


def test_describe_pair(runner, specs):
    result = runner.invoke(cli, ["describe", "--set", str(specs["pair"])])
    assert result.exit_code == 0
    info = json.loads(result.output)
    assert info["a_prefix"][:4] == [1, 1, 1, 1]
    assert info["lambda_prefix_C"][0] == "1/16"


def test_boxdim_requires_scales(runner, specs):
    result = runner.invoke(cli, ["boxdim", "--set", str(specs["mt"]), "--scales", ""])
    assert result.exit_code == 2


def test_boxdim_formula(runner, specs):
    result = runner.invoke(cli, ["boxdim", "--set", str(specs["pair"]),
                                 "--method", "formula", "--nmax", "200"])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert abs(report["upper"] - 0.25) < 0.05


def test_boxdim_exponents_irrational_base(runner, specs):
    result = runner.invoke(cli, ["boxdim", "--set", str(specs["pair"]),
                                 "--method", "exponents", "--alpha", "2/3",
                                 "--nmax", "400", "--side", "C"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert abs(report["lower"] - 1 / 3) < 1e-9


def test_boxdim_exponents_needs_alpha(runner, specs):
    result = runner.invoke(cli, ["boxdim", "--set", str(specs["pair"]),
                                 "--method", "exponents"])
    assert result.exit_code == 2


def test_spec_error_names_field(runner, specs):
    result = runner.invoke(cli, ["describe", "--set", str(specs["bad_lambda"])])
    assert result.exit_code == 2
    assert "lambda[1]" in result.output


def test_spec_error_beta_gamma(runner, specs):
    result = runner.invoke(cli, ["describe", "--set", str(specs["bad_rule"])])
    assert result.exit_code == 2
    assert "beta + gamma" in result.output


def test_spec_error_missing_field(runner, tmp_path):
    path = tmp_path / "incomplete.toml"
    path.write_text('type = "pair"\nq = "1/4"\nrule = "lemma44"\n')
    result = runner.invoke(cli, ["describe", "--set", str(path)])
    assert result.exit_code == 2
    assert "beta" in result.output


def test_verify_theorem41(runner):
    result = runner.invoke(cli, ["verify", "theorem41", "--q", "1/4",
                                 "--rule", "lemma44", "--beta", "1/2", "--jmax", "16"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["pass"] is True
    assert report["check"] == "theorem41"
    assert "claim" in report
    tested = [e for e in report["entries"] if not e.get("skipped")]
    assert all(e["pass"] for e in tested)


def test_verify_theorem42(runner):
    result = runner.invoke(cli, ["verify", "theorem42", "--q", "1/4",
                                 "--rule", "lemma44", "--beta", "1/2",
                                 "--kmax", "200", "--tol", "0.01"])
    assert result.exit_code == 0, result.output


def test_verify_theorem42_lemma45(runner):
    result = runner.invoke(cli, ["verify", "theorem42", "--q", "1/5",
                                 "--rule", "lemma45", "--beta", "3/5",
                                 "--gamma", "3/5", "--kmax", "50", "--tol", "0.05"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    targets = {e["side"]: e["target"] for e in report["entries"]}
    assert targets == {"C": "3/5", "D": "3/5"}


def test_verify_theorem42_rejects_custom_rule(runner):
    result = runner.invoke(cli, ["verify", "theorem42", "--q", "1/4",
                                 "--rule", "constant", "--value", "2"])
    assert result.exit_code == 2


def test_verify_lemma35(runner):
    result = runner.invoke(cli, ["verify", "lemma35", "--q", "1/4",
                                 "--rule", "lemma44", "--beta", "1/2", "--mmax", "5"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert all(e["pass"] for e in report["entries"] if not e.get("skipped"))


def test_verify_chain(runner, specs):
    result = runner.invoke(cli, ["verify", "chain", "--instances", "40",
                                 "--set", str(specs["mt"])])
    assert result.exit_code == 0, result.output


def test_verify_equihom6(runner, specs):
    result = runner.invoke(cli, ["verify", "equihom6", "--set", str(specs["pair"]),
                                 "--side", "C", "--samples", "16"])
    assert result.exit_code == 0, result.output


def test_verify_appendix(runner, specs):
    result = runner.invoke(cli, ["verify", "appendix", "--set", str(specs["mt"])])
    assert result.exit_code == 0, result.output


def test_verify_needs_pair_flags(runner):
    result = runner.invoke(cli, ["verify", "theorem41"])
    assert result.exit_code == 2


def test_pair_emission(runner):
    result = runner.invoke(cli, ["pair", "--q", "1/4", "--rule", "custom",
                                 "--a", "1,2", "--repeat", "--terms", "5"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["C"]["lambdas"] == ["1/64"] * 5
    assert report["D"]["lambdas"] == ["1/4", "1/4", "1/16", "1/4", "1/16"]


def test_oracle_selftest(runner):
    result = runner.invoke(cli, ["oracle-selftest", "--instances", "80"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["pass"] is True


def test_sequence_set_cli_paths(runner, specs):
    result = runner.invoke(cli, ["describe", "--set", str(specs["f1"])])
    assert result.exit_code == 0
    assert json.loads(result.output)["first_points"][:3] == ["1", "1/2", "1/3"]

    result = runner.invoke(cli, ["cover", "--set", str(specs["f1"]),
                                 "--scales", "1/12,1/2"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[1] == "1/2,2,1,1"
    assert lines[2] == "1/12,6,4,4"

    result = runner.invoke(cli, ["verify", "chain", "--instances", "10",
                                 "--set", str(specs["f1"])])
    assert result.exit_code == 0, result.output


def test_assouad_cantor_grid(runner, specs):
    result = runner.invoke(cli, ["assouad", "--set", str(specs["pair"]),
                                 "--side", "C", "--levels", "2,4",
                                 "--ks", "2,4", "--samples", "8"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert len(report["windows"]) == 4
    assert report["upper_bound_from_lambda"] == pytest.approx(0.5)


def test_assouad_sequence_set(runner, specs):
    result = runner.invoke(cli, ["assouad", "--set", str(specs["f1"]),
                                 "--kmax", "16", "--samples", "8"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["best_slope"] > 0
    assert report["upper_bound_from_lambda"] is None


def test_report_determinism(runner, specs, tmp_path):
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    args = ["equihom", "--set", str(specs["pair"]), "--side", "C",
            "--levels", "1,2,3", "--ks", "1,2", "--samples", "32", "--seed", "5"]
    assert runner.invoke(cli, args + ["--output", str(out1)]).exit_code == 0
    assert runner.invoke(cli, args + ["--output", str(out2)]).exit_code == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_scale_list_forms(runner, specs):
    result = runner.invoke(cli, ["cover", "--set", str(specs["mt"]),
                                 "--scales", "1/3,1/9,1/27"])
    assert result.exit_code == 0
    assert len(result.output.strip().splitlines()) == 4


def test_missing_spec_file(runner):
    result = runner.invoke(cli, ["describe", "--set", "/nonexistent.toml"])
    assert result.exit_code == 2


def test_depth_cap_exit_names_scale(runner, specs):
    # jump 1/4 strands the sweep on a set point that never resolves
    result = runner.invoke(cli, ["cover", "--set", str(specs["mt"]),
                                 "--scales", "1/4"])
    assert result.exit_code == 1
    assert "1/4" in result.output


def test_threaded_run_is_identical(runner, specs, tmp_path, monkeypatch):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["cover", "--set", str(specs["mt"]), "--scales", "3^-1..3^-8"]
    assert runner.invoke(cli, args + ["--output", str(out1)]).exit_code == 0
    monkeypatch.setenv("CANTORLAB_THREADS", "4")
    assert runner.invoke(cli, args + ["--output", str(out2)]).exit_code == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_verify_theorem41_threaded(runner, monkeypatch):
    monkeypatch.setenv("CANTORLAB_THREADS", "2")
    result = runner.invoke(cli, ["verify", "theorem41", "--q", "1/4",
                                 "--rule", "lemma44", "--beta", "1/2", "--jmax", "10"])
    assert result.exit_code == 0, result.output
