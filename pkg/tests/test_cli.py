"""End-to-end CLI behaviour via click's test runner."""

import json
import os

import pytest
from click.testing import CliRunner

from csmflag.cli import main
from csmflag.polynomial import poly_from_json, poly_from_text
from csmflag.weights import restriction, weight_function
from csmflag.flags import IndexTuple, Shape


@pytest.fixture
def runner():
    return CliRunner()


def test_enumerate_counts_and_dims(runner):
    res = runner.invoke(main, ["enumerate", "--lambda", "1,1"])
    assert res.exit_code == 0
    assert len(res.output.strip().splitlines()) == 2

    res = runner.invoke(main, ["enumerate", "--lambda", "3"])
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert len(lines) == 1 and "dim 0" in lines[0]

    res = runner.invoke(main, ["enumerate", "--lambda", "2,2", "--format", "json"])
    records = json.loads(res.output)
    assert len(records) == 6
    assert sorted(r["dimension"] for r in records) == [0, 1, 2, 2, 3, 4]


def test_enumerate_rejects_bad_shape(runner):
    res = runner.invoke(main, ["enumerate", "--lambda", "1,x"])
    assert res.exit_code != 0


def test_weight_examples(runner):
    res = runner.invoke(main, ["weight", "--lambda", "1,2",
                               "--index", "{1};{2,3}"])
    assert res.exit_code == 0
    w_line = next(l for l in res.output.splitlines() if l.startswith("W = "))
    sh = Shape((1, 2))
    I = IndexTuple.parse("{1};{2,3}", sh)
    assert poly_from_text(w_line[4:]) == weight_function(I)

    res = runner.invoke(main, ["weight", "--lambda", "4", "--index", "{1,2,3,4}"])
    assert res.output.splitlines()[0] == "W = 1"


def test_weight_show_tables(runner):
    res = runner.invoke(main, ["weight", "--lambda", "1,1,1",
                               "--index", "{2};{1};{3}", "--show-tables"])
    assert res.exit_code == 0
    # two fillings: the same grid with t2_1 and t2_2 exchanged
    assert res.output.count("+------+------+------+") == 8
    assert "| t1_1 | t2_2 | z2   |" in res.output
    assert "| t1_1 | t2_1 | z2   |" in res.output


def test_weight_json_round_trips(runner):
    res = runner.invoke(main, ["weight", "--lambda", "1,1",
                               "--index", "{2};{1}", "--format", "json"])
    payload = json.loads(res.output)
    I = IndexTuple.parse("{2};{1}", Shape((1, 1)))
    assert poly_from_json(json.dumps(payload["weight"])) == weight_function(I)


def test_weight_latex(runner):
    res = runner.invoke(main, ["weight", "--lambda", "1,1",
                               "--index", "{2};{1}", "--format", "latex"])
    assert res.exit_code == 0
    assert "z_{1}" in res.output


def test_restrict_single_and_all(runner):
    res = runner.invoke(main, ["restrict", "--lambda", "1,1,1",
                               "--index", "{2};{1};{3}",
                               "--at", "{2};{1};{3}"])
    sh = Shape((1, 1, 1))
    I = IndexTuple.parse("{2};{1};{3}", sh)
    assert poly_from_text(res.output.strip()) == restriction(I, I)

    res = runner.invoke(main, ["restrict", "--lambda", "1,1",
                               "--index", "{1};{2}", "--at", "{2};{1}"])
    assert res.output.strip() == "0"

    res = runner.invoke(main, ["restrict", "--lambda", "1,1",
                               "--index", "{2};{1}", "--at", "{1};{2}"])
    assert res.output.strip() == "1"

    res = runner.invoke(main, ["restrict", "--lambda", "1,1",
                               "--index", "{2};{1}", "--all"])
    assert res.output.splitlines() == ["{1};{2} -> 1", "{2};{1} -> z1 - z2 + 1"]


def test_restrict_requires_exactly_one_target(runner):
    base = ["restrict", "--lambda", "1,1", "--index", "{1};{2}"]
    assert runner.invoke(main, base).exit_code != 0
    assert runner.invoke(main, base + ["--at", "{1};{2}", "--all"]).exit_code != 0


def test_verify_passes_and_streams_json(runner, tmp_path):
    res = runner.invoke(main, ["verify", "--lambda", "1,1",
                               "--plot-dir", str(tmp_path / "figs")])
    assert res.exit_code == 0
    lines = [l for l in res.output.splitlines() if l.startswith("{")]
    assert lines and all(json.loads(l)["verdict"] == "pass" for l in lines)
    figures = os.listdir(tmp_path / "figs")
    assert any(f.endswith(".png") for f in figures)


def test_verify_no_plots(runner, tmp_path):
    res = runner.invoke(main, ["verify", "--lambda", "1,1", "--no-plots",
                               "--plot-dir", str(tmp_path / "figs")])
    assert res.exit_code == 0
    assert not (tmp_path / "figs").exists()


def test_verify_budget_refusal(runner):
    res = runner.invoke(main, ["verify", "--lambda", "1,1,1,1,1,1,1",
                               "--no-plots"])
    assert res.exit_code != 0
    assert "budget" in res.output


def test_verify_cache_hit_and_miss_are_byte_identical(runner, tmp_path):
    cache = str(tmp_path / "cache")
    args = ["verify", "--lambda", "1,1,1", "--no-plots", "--cache-dir", cache]
    miss = runner.invoke(main, args)
    assert miss.exit_code == 0
    assert os.listdir(cache)
    hit = runner.invoke(main, args)
    assert hit.exit_code == 0
    assert hit.output == miss.output


def test_verify_cache_dir_env_override(runner, tmp_path):
    cache = str(tmp_path / "envcache")
    res = runner.invoke(main, ["verify", "--lambda", "1,1", "--no-plots"],
                        env={"CSMFLAG_CACHE_DIR": cache, "CSMFLAG_JOBS": "1"})
    assert res.exit_code == 0
    assert os.listdir(cache)


def test_restrict_term_budget_flag(runner):
    res = runner.invoke(main, ["restrict", "--lambda", "1,1,1,1,1,1,1",
                               "--index", "{1};{2};{3};{4};{5};{6};{7}",
                               "--at", "{1};{2};{3};{4};{5};{6};{7}"])
    assert res.exit_code != 0
    assert "budget" in res.output
