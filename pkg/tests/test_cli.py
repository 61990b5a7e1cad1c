"""End-to-end tests for the command-line interface."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from ebitcalc.cli import EXIT_DOMAIN, EXIT_OK, EXIT_PARSE, EXIT_USAGE, main

DATA = Path(__file__).parent / "data"

CORE_KEYS = {"command", "n", "generators", "ebits", "logical", "ancillas", "conjectured"}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == EXIT_OK, err
    return json.loads(out)


def test_ebits_command(capsys):
    code, out, _ = run(capsys, "ebits", str(DATA / "singlequbit.qcheck"))
    assert code == EXIT_OK
    assert out.strip() == "ebits: 1"


def test_ebits_rejects_wrong_header(capsys):
    code, out, err = run(capsys, "ebits", str(DATA / "conv5x5.conv"))
    assert code == EXIT_PARSE
    assert out == ""  # no partial output
    assert "expected header 'qcheck'" in err
    assert "'conv'" in err


def test_params_command(capsys):
    code, out, _ = run(capsys, "params", str(DATA / "fivequbit.qcheck"))
    assert code == EXIT_OK
    assert "parameters: [[5, 1; 0]]" in out
    assert "ancillas: 4" in out


def test_sgsop_command(capsys):
    code, out, _ = run(capsys, "sgsop", str(DATA / "singlequbit.qcheck"))
    assert code == EXIT_OK
    assert "pairs: (0,1)" in out
    assert "transform:" in out
    assert "transformed:" in out


def test_sgsop_json_fields(capsys):
    obj = run_json(capsys, "sgsop", str(DATA / "singlequbit.qcheck"))
    assert obj["pairs"] == [[0, 1]]
    assert obj["isotropic"] == []
    assert obj["transform"] == ["10", "01"]
    assert obj["transformed"] == ["1|0", "0|1"]


def test_css_command_hamming_import(capsys):
    f = str(DATA / "hamming74.gf2")
    obj = run_json(capsys, "css", f, f, "--d1", "3", "--d2", "3")
    assert obj["ebits"] == 0
    assert obj["logical"] == 1
    assert obj["n"] == 7
    assert obj["distance"] == 3
    assert obj["conjectured"] is False
    code, out, _ = run(capsys, "css", f, f, "--d1", "3", "--d2", "3")
    assert code == EXIT_OK
    assert "parameters: [[7, 1, 3; 0]]" in out


def test_css_distance_flags_must_pair(capsys):
    f = str(DATA / "hamming74.gf2")
    code, _, err = run(capsys, "css", f, f, "--d1", "3")
    assert code == EXIT_USAGE
    assert "--d1 and --d2" in err


def test_gf4_command(capsys):
    code, out, _ = run(capsys, "gf4", str(DATA / "example.gf4"))
    assert code == EXIT_OK
    assert "ebits: 2" in out
    assert "parameters: [[4, 2; 2]]" in out


def test_gf4_expand_feeds_ebits(capsys, tmp_path):
    code, out, _ = run(capsys, "gf4-expand", str(DATA / "example.gf4"))
    assert code == EXIT_OK
    assert out.startswith("qcheck 4 4")
    expanded = tmp_path / "expanded.qcheck"
    expanded.write_text(out)
    code, out2, _ = run(capsys, "ebits", str(expanded))
    assert code == EXIT_OK
    assert out2.strip() == "ebits: 2"


def test_qudit_command(capsys):
    code, out, _ = run(capsys, "qudit", str(DATA / "pair3.qcheckd"))
    assert code == EXIT_OK
    assert out.strip() == "edits: 1"
    obj = run_json(capsys, "qudit", str(DATA / "pair3.qcheckd"))
    assert obj["ebits"] == 1
    assert obj["modulus"] == 3


def test_qudit_composite_modulus_is_domain_error(capsys, tmp_path):
    bad = tmp_path / "bad.qcheckd"
    bad.write_text("qcheckd 4 1 1\n1 | 1\n")
    code, out, err = run(capsys, "qudit", str(bad))
    assert code == EXIT_DOMAIN
    assert "not prime" in err


def test_cv_command_with_tolerance(capsys):
    code, out, _ = run(capsys, "cv", str(DATA / "pair.cvcheck"))
    assert code == EXIT_OK
    assert out.strip() == "entangled modes: 1"
    obj = run_json(capsys, "cv", str(DATA / "pair.cvcheck"), "--tol", "1e-6")
    assert obj["ebits"] == 1
    assert obj["tolerance"] == 1e-6


def test_conv_command_prints_conjectured_count(capsys):
    code, out, _ = run(capsys, "conv", str(DATA / "conv5x5.conv"))
    assert code == EXIT_OK
    assert out.strip() == "ebits per frame: 2 (conjectured)"
    obj = run_json(capsys, "conv", str(DATA / "conv5x5.conv"))
    assert obj["conjectured"] is True
    assert obj["ebits"] == 2


def test_conv4_command(capsys):
    code, out, _ = run(capsys, "conv4", str(DATA / "hd.conv4"))
    assert code == EXIT_OK
    assert out.strip() == "ebits per frame: 1 (conjectured)"


def test_conv_css_command(capsys):
    code, out, _ = run(
        capsys, "conv-css", str(DATA / "h1mat.conv"), str(DATA / "h2mat.conv")
    )
    assert code == EXIT_OK
    assert out.strip() == "ebits per frame: 1 (conjectured)"
    obj = run_json(capsys, "conv-css", str(DATA / "h1mat.conv"), str(DATA / "h2mat.conv"))
    assert obj["conjectured"] is True


def test_conv_css_rejects_pair_form(capsys):
    code, _, err = run(
        capsys, "conv-css", str(DATA / "conv5x5.conv"), str(DATA / "h2mat.conv")
    )
    assert code == EXIT_PARSE
    assert "must not contain '|'" in err


def test_verify_file(capsys):
    obj = run_json(capsys, "verify", str(DATA / "fivequbit.qcheck"))
    assert obj["agreement"] is True
    assert obj["formula"] == obj["procedure"] == obj["enumeration"] == 0


def test_verify_random_sweep(capsys):
    code, out, _ = run(
        capsys, "verify", "--random", "40", "--max-n", "6", "--seed", "7"
    )
    assert code == EXIT_OK
    assert "cases: 40" in out
    assert "seed: 7" in out
    assert "failures: 0" in out
    assert "agreement: yes" in out


def test_verify_needs_file_or_random(capsys):
    code, _, err = run(capsys, "verify")
    assert code == EXIT_USAGE
    code, _, err = run(capsys, "verify", str(DATA / "fivequbit.qcheck"), "--random", "5")
    assert code == EXIT_USAGE
    code, _, err = run(capsys, "verify", "--random", "5")
    assert code == EXIT_USAGE
    assert "--max-n" in err


def test_dependent_rows_domain_error_and_reduce(capsys):
    f = str(DATA / "dependent.qcheck")
    code, out, err = run(capsys, "ebits", f)
    assert code == EXIT_DOMAIN
    assert "row 2" in err
    obj = run_json(capsys, "ebits", f, "--reduce")
    assert obj["generators"] == 2
    assert obj["ebits"] == 0


def test_quiet_prints_bare_value(capsys):
    code, out, _ = run(capsys, "ebits", str(DATA / "singlequbit.qcheck"), "--quiet")
    assert code == EXIT_OK
    assert out.strip() == "1"
    code, out, _ = run(capsys, "params", str(DATA / "fivequbit.qcheck"), "--quiet")
    assert out.strip() == "[[5, 1; 0]]"


def test_missing_file_is_parse_error(capsys):
    code, _, err = run(capsys, "ebits", "no-such-file.qcheck")
    assert code == EXIT_PARSE


@pytest.mark.parametrize(
    "command,wrong_file,expected_header",
    [
        ("ebits", "hamming74.gf2", "qcheck"),
        ("params", "example.gf4", "qcheck"),
        ("sgsop", "conv5x5.conv", "qcheck"),
        ("gf4", "singlequbit.qcheck", "gf4"),
        ("gf4-expand", "hamming74.gf2", "gf4"),
        ("qudit", "pair.cvcheck", "qcheckd"),
        ("cv", "pair3.qcheckd", "cvcheck"),
        ("conv", "fivequbit.qcheck", "conv"),
        ("conv4", "hamming74.gf2", "conv4"),
    ],
)
def test_wrong_header_exits_two_without_output(capsys, command, wrong_file, expected_header):
    code, out, err = run(capsys, command, str(DATA / wrong_file))
    assert code == EXIT_PARSE
    assert out == ""
    assert f"expected header '{expected_header}'" in err


def test_unknown_command_is_usage_error(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == EXIT_USAGE


def test_missing_argument_is_usage_error(capsys):
    code, _, err = run(capsys, "ebits")
    assert code == EXIT_USAGE


@pytest.mark.parametrize(
    "argv,fields",
    [
        (("ebits", "singlequbit.qcheck"), {"ebits": "ebits: {}"}),
        (
            ("params", "fivequbit.qcheck"),
            {
                "n": "n: {}",
                "generators": "generators: {}",
                "ebits": "ebits: {}",
                "logical": "logical: {}",
                "ancillas": "ancillas: {}",
            },
        ),
        (("conv", "conv5x5.conv"), {"ebits": "ebits per frame: {} (conjectured)"}),
        (("qudit", "pair3.qcheckd"), {"ebits": "edits: {}"}),
        (("cv", "pair.cvcheck"), {"ebits": "entangled modes: {}"}),
    ],
)
def test_json_round_trips_against_text(capsys, argv, fields):
    argv = (argv[0], str(DATA / argv[1]), *argv[2:])
    obj = run_json(capsys, *argv)
    assert CORE_KEYS <= obj.keys()
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    for key, template in fields.items():
        assert template.format(obj[key]) in out


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "ebitcalc", "conv", str(DATA / "conv5x5.conv")],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "ebits per frame: 2 (conjectured)" in result.stdout


def test_help_exits_zero():
    with pytest.raises(SystemExit) as exc:
        main(["--help"])
    assert exc.value.code == 0
