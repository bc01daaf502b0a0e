"""Command-line interface: outputs, JSON schemas, exit codes, config resolution."""

import json

import pytest

from mzvlab import cli
from mzvlab.config import ConfigError, load_settings, read_config_file


def run(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


# -- algebra commands -------------------------------------------------------------------


def test_product_diamond(capsys):
    code, out, _ = run(capsys, "product", "--op", "diamond", "y", "y")
    assert code == 0
    assert out.strip() == "yy - yx"


def test_product_harmonic(capsys):
    code, out, _ = run(capsys, "product", "--op", "harmonic", "y", "y")
    assert code == 0
    assert out.strip() == "2*yy + yx"


def test_product_json_schema(capsys):
    code, doc, _ = run_json(capsys, "product", "--op", "diamond", "y", "y")
    assert code == 0
    assert doc == {"op": "diamond", "result": "yy - yx"}


def test_map_commands(capsys):
    code, out, _ = run(capsys, "map", "--name", "tau", "yx")
    assert code == 0 and out.strip() == "yx"
    code, out, _ = run(capsys, "map", "--name", "phi", "x")
    assert code == 0 and out.strip() == "y + x"
    code, out, _ = run(capsys, "map", "--name", "d1", "x")
    assert code == 0 and out.strip() == "yx"
    code, out, _ = run(capsys, "map", "--name", "smap", "yyx")
    assert code == 0 and out.strip() == "yyx + yxx"


def test_map_rejects_unknown_name(capsys):
    code, _, err = run(capsys, "map", "--name", "rho", "yx")
    assert code == 2 and "rho" in err


def test_reduce_euler_example(capsys):
    code, out, _ = run(capsys, "reduce", "--w1", "x", "--w2", "")
    assert code == 0
    assert out.strip() == "y"


def test_reduce_accepts_the_word_one(capsys):
    code, out, _ = run(capsys, "reduce", "--w1", "x", "--w2", "1")
    assert code == 0
    assert out.strip() == "y"


def test_span_text_output(capsys):
    code, out, _ = run(capsys, "span", "--set", "A2", "--weight", "3")
    assert code == 0
    assert "dim 1" in out
    assert "yxx" in out


def test_span_json_schema(capsys):
    code, doc, _ = run_json(capsys, "span", "--set", "A2", "--weight", "3")
    assert code == 0
    assert doc == {"set": "A2", "weight": 3, "dim": 1, "pivots": ["yxx"]}


def test_span_all_sets_one_weight(capsys):
    dims = {}
    for fam in ("A1", "A2", "A3", "A4"):
        code, doc, _ = run_json(capsys, "span", "--set", fam, "--weight", "4")
        assert code == 0
        dims[fam] = doc["dim"]
    assert dims["A1"] == dims["A2"] == dims["A3"] == dims["A4"]


# -- verification commands ---------------------------------------------------------------


def test_check_equality(capsys):
    code, doc, _ = run_json(capsys, "check", "equality", "--max-weight", "4")
    assert code == 0
    assert doc["equal"] is True
    assert all(entry["equal"] for entry in doc["weights"])


def test_check_duality(capsys):
    code, doc, _ = run_json(capsys, "check", "duality", "--weight", "4")
    assert code == 0
    assert doc["weight"] == 4 and doc["set"] == "A4"
    assert doc["ok"] is True
    assert all(r["member"] for r in doc["residuals"])
    # members come with explicit generator coordinates
    named = [r for r in doc["residuals"] if r["coordinates"]]
    assert named and all(g.startswith("A4(") for g, _ in named[0]["coordinates"])


def test_check_derivation(capsys):
    code, doc, _ = run_json(capsys, "check", "derivation", "--l", "1", "--weight", "4")
    assert code == 0
    assert doc["ok"] is True
    assert all(r["member"] for r in doc["residuals"])


def test_check_derivation_rejects_too_small_weight(capsys):
    code, _, err = run(capsys, "check", "derivation", "--l", "2", "--weight", "4")
    assert code == 2
    assert "weight" in err


def test_zeta_command(capsys):
    code, doc, _ = run_json(capsys, "zeta", "--index", "2", "--cutoff", "4096")
    assert code == 0
    assert abs(doc["value"] - 1.6449340668) < 1e-8
    assert doc["cutoff"] == 4096


def test_zeta_depth_two(capsys):
    code, doc, _ = run_json(capsys, "zeta", "--index", "1,2", "--cutoff", "4096")
    assert code == 0
    assert abs(doc["value"] - 1.2020569031595943) < 1e-10


def test_zeta_rejects_divergent_index(capsys):
    code, _, err = run(capsys, "zeta", "--index", "2,1")
    assert code == 2
    assert err


def test_zeta_rejects_garbage_index(capsys):
    code, _, err = run(capsys, "zeta", "--index", "a,b")
    assert code == 2
    assert err


def test_verify_kawashima_ok(capsys):
    code, doc, _ = run_json(
        capsys, "verify", "kawashima", "--max-weight", "4",
        "--cutoff", "4096", "--tol", "1e-4",
    )
    assert code == 0
    assert doc["pairs"]
    assert doc["failures"] == 0
    assert all(p["ok"] for p in doc["pairs"])


def test_verify_kawashima_failure_exit_code(capsys):
    # an absurd tolerance forces reported failures and exit status 1
    code, doc, _ = run_json(
        capsys, "verify", "kawashima", "--max-weight", "4",
        "--cutoff", "512", "--tol", "1e-18",
    )
    assert code == 1
    assert doc["failures"] > 0


def test_verify_interpolation(capsys):
    code, doc, _ = run_json(
        capsys, "verify", "interpolation", "--index", "2", "--smax", "2",
        "--cutoff", "4096", "--inner-cutoff", "4096",
    )
    assert code == 0
    assert doc["failures"] == 0
    assert [row["s"] for row in doc["rows"]] == [0, 1, 2]
    assert all(row["ok"] for row in doc["rows"])


def test_verify_interpolation_rejects_inadmissible(capsys):
    code, _, err = run(capsys, "verify", "interpolation", "--index", "2,1")
    assert code == 2 and "admissible" in err


def test_verify_c2(capsys):
    code, doc, _ = run_json(capsys, "verify", "c2", "--max-weight", "3", "--max-N", "12")
    assert code == 0
    assert doc["words"] and doc["failures"] == 0


# -- argument and config errors -----------------------------------------------------------


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as e:
        cli.run(["frobnicate"])
    assert e.value.code == 2


def test_bad_expression_is_usage_error(capsys):
    code, _, err = run(capsys, "product", "--op", "diamond", "y(", "y")
    assert code == 2
    assert err


def test_reduce_rejects_polynomial_argument(capsys):
    code, _, err = run(capsys, "reduce", "--w1", "x+y", "--w2", "")
    assert code == 2
    assert err


# -- configuration -------------------------------------------------------------------------


def test_config_file_parsing(tmp_path):
    f = tmp_path / "mzvlab.conf"
    f.write_text("# comment\ncutoff = 8192\ntol=1e-7\n\nmax_weight = 5\n")
    values = read_config_file(f)
    assert values == {"cutoff": 8192, "tol": 1e-7, "max_weight": 5}


def test_config_file_rejects_unknown_key(tmp_path):
    f = tmp_path / "mzvlab.conf"
    f.write_text("cutof = 10\n")
    with pytest.raises(ConfigError) as e:
        read_config_file(f)
    assert "cutof" in str(e.value)


def test_config_file_rejects_bad_value(tmp_path):
    f = tmp_path / "mzvlab.conf"
    f.write_text("cutoff = soon\n")
    with pytest.raises(ConfigError):
        read_config_file(f)


def test_settings_precedence(tmp_path):
    f = tmp_path / "mzvlab.conf"
    f.write_text("cutoff = 2048\n")
    # builtin default
    s = load_settings(None, env={})
    assert s["cutoff"] == 2**20
    # config file overrides builtin
    s = load_settings(f, env={})
    assert s["cutoff"] == 2048
    # environment overrides config file
    s = load_settings(f, env={"MZVLAB_CUTOFF": "4096"})
    assert s["cutoff"] == 4096


def test_cwd_config_is_picked_up(tmp_path, monkeypatch, capsys):
    (tmp_path / "mzvlab.conf").write_text("cutoff = 1024\n")
    monkeypatch.chdir(tmp_path)
    code, doc, _ = run_json(capsys, "zeta", "--index", "2")
    assert code == 0
    assert doc["cutoff"] == 1024


def test_flag_beats_env_and_config(tmp_path, monkeypatch, capsys):
    (tmp_path / "mzvlab.conf").write_text("cutoff = 1024\n")
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("MZVLAB_CUTOFF", "2048")
    code, doc, _ = run_json(capsys, "zeta", "--index", "2")
    assert doc["cutoff"] == 2048
    code, doc, _ = run_json(capsys, "zeta", "--index", "2", "--cutoff", "8192")
    assert doc["cutoff"] == 8192


def test_config_error_exits_2(tmp_path, capsys):
    f = tmp_path / "bad.conf"
    f.write_text("nope = 1\n")
    code, _, err = run(capsys, "zeta", "--index", "2", "--config", str(f))
    assert code == 2
    assert "nope" in err
