import json

import pytest

from cusploop.cli import Config, load_params, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_config_validation():
    Config(rel_tol=1e-10, expansion_order=4, output_format="json")
    with pytest.raises(ValueError):
        Config(rel_tol=1.0)
    with pytest.raises(ValueError):
        Config(expansion_order=-1)
    with pytest.raises(ValueError):
        Config(output_format="yaml")


def test_load_params(tmp_path):
    f = tmp_path / "p.cfg"
    f.write_text("# comment\np_101 = 3/7\nq_031 = 1  # inline\n\n")
    got = load_params(str(f))
    assert got == {"p_101": __import__("fractions").Fraction(3, 7),
                   "q_031": 1}
    bad = tmp_path / "bad.cfg"
    bad.write_text("nope = 1\n")
    with pytest.raises(ValueError):
        load_params(str(bad))


def test_reduce_command(capsys):
    code, out, _ = run(capsys, "reduce", "--i", "0", "--j", "3")
    assert code == 0
    data = json.loads(out)
    assert data == {"p1": "12/7 h", "p2": "0", "p3": "1/7"}


def test_expand_command(capsys):
    code, out, _ = run(capsys, "expand", "--which", "I01",
                       "--side", "+", "--order", "1")
    assert code == 0
    data = json.loads(out)
    assert data["side"] == "plus"
    first = data["terms"][0]
    assert first["exponent"] == "0"
    assert first["coefficient"] == {"sqrt2*pi": "4/27"}
    exps = [t["exponent"] for t in data["terms"]]
    assert "5/6" in exps and "7/6" in exps


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "--i", "0", "--j", "1",
                       "--h", "0.01", "--side", "+")
    assert code == 0
    assert json.loads(out)["value"] > 0


def test_melnikov_command_exit_codes(capsys):
    code, _, err = run(capsys, "melnikov", "--order", "2")
    assert code == 1
    assert "M1" in err
    code, out, _ = run(capsys, "melnikov", "--order", "3",
                       "--family", "thm3", "--coeffs", "7")
    assert code == 0
    data = json.loads(out)
    assert len(data["coefficients"]) == 7
    assert data["coefficients"][1]["exponent"] == "5/6"


def test_zeros_and_simulate_commands(capsys, tmp_path):
    f = tmp_path / "pt.cfg"
    f.write_text("p_101 = -1/100\nq_031 = 1\n")
    code, out, _ = run(capsys, "simulate", "--params", str(f),
                       "--eps", "1e-4", "--h", "0.004")
    assert code == 0
    assert "displacement" in json.loads(out)

    zf = tmp_path / "zeros.cfg"
    zf.write_text("p_021 = 1\np_031 = 1\np_111 = 1\nq_021 = 1\n")
    code, out, _ = run(capsys, "zeros", "--params", str(zf),
                       "--side", "+", "--family", "thm3")
    assert code == 0
    assert "count" in json.loads(out)


def test_scan_command(capsys, tmp_path):
    f = tmp_path / "pt.cfg"
    f.write_text("q_031 = 1\n")
    code, out, _ = run(capsys, "scan", "--params", str(f), "--eps", "1e-4",
                       "--hmin", "0.003", "--hmax", "0.005", "--n", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "h,displacement"
    assert len(lines) == 4


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["expand", "--which", "I99"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["--rel-tol", "1.0", "reduce", "--i", "0", "--j", "1"])
    assert exc.value.code == 2


def test_missing_params_file_is_a_runtime_error(capsys):
    code, _, err = run(capsys, "simulate", "--params", "/nonexistent",
                       "--eps", "1e-4", "--h", "0.004")
    assert code == 1
    assert "error" in err
