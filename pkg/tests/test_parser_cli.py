import json
import random

import pytest

from hopfkit.cli import load_config, main, run_suite
from hopfkit.errors import (
    ConfigError,
    ExprSyntaxError,
    ScalarDivisionOnly,
    UnknownGenerator,
    UnknownSuite,
)
from hopfkit.hopf import algebra_presentation
from hopfkit.parser import parse, print_element
from hopfkit.scalars import I, ONE, W, scalar


def test_parse_commutator_identity():
    got = parse("B*T - T*B", "uq-g1")
    expected = parse("i*(K - K^-1)/(2*w)", "uq-g1")
    assert got == expected


def test_parse_unit():
    for algebra in ("uq-g1", "fq-g1", "fq-j", "h0-irr"):
        assert parse("1", algebra) == algebra_presentation(algebra).one()


def test_parse_defining_relation_is_zero():
    assert parse("mu*x - x*mu - 2*i*w*mu", "fq-g1").is_zero()


def test_juxtaposition_multiplies_in_order():
    assert parse("B K", "uq-g1") == parse("B*K", "uq-g1")
    assert parse("2 i w mu", "fq-g1") == parse("2*i*w*mu", "fq-g1")


def test_negative_powers():
    p = algebra_presentation("uq-g1")
    assert parse("K^-2", "uq-g1") == p.gen("K", -2)
    assert parse("K^(-2)", "uq-g1") == p.gen("K", -2)


def test_scalar_division_only():
    with pytest.raises(ScalarDivisionOnly):
        parse("1/v", "fq-g1")
    v = algebra_presentation("fq-g1").gen("v")
    assert parse("v/2", "fq-g1") == v * (ONE / scalar(2))
    assert parse("v/(2*w)", "fq-g1") == v * (ONE / (2 * W))


def test_parse_errors_carry_position():
    with pytest.raises(ExprSyntaxError):
        parse("1 + ", "fq-g1")
    with pytest.raises(UnknownGenerator):
        parse("Q", "fq-g1")
    with pytest.raises(ExprSyntaxError):
        parse("v^w", "fq-g1")


def _random_element(pres, rng):
    window = pres.monomials_up_to(3, zrange=2)
    out = pres.zero()
    for _ in range(rng.randint(1, 4)):
        mon = rng.choice(window)
        coeff = scalar(rng.randint(-5, 5))
        if rng.random() < 0.4:
            coeff = coeff * I
        if rng.random() < 0.3:
            coeff = coeff * W
        out = out + pres.monomial(mon) * coeff
    return out


@pytest.mark.parametrize("algebra", ["uq-g1", "fq-g1", "fq-j", "h0-irr"])
def test_print_parse_round_trip(algebra):
    pres = algebra_presentation(algebra)
    rng = random.Random(hash(algebra) & 0xFFFF)
    for _ in range(50):
        e = _random_element(pres, rng)
        assert parse(print_element(e), algebra) == e


def test_run_suite_unknown():
    with pytest.raises(UnknownSuite):
        run_suite("no-such-suite")


def test_run_suite_hopf_axioms_degree_one():
    rep = run_suite("hopf-axioms", {"degree": 1})
    assert rep.passed


def test_run_suite_essential_invariance():
    rep = run_suite("essential-invariance", {"window": 3})
    assert rep.passed
    assert rep.params.get("certificate")


def test_report_determinism():
    r1 = run_suite("jform", {"window": 2}).to_json()
    r2 = run_suite("jform", {"window": 2}).to_json()
    assert r1 == r2


def test_config_parsing(tmp_path):
    cfg = tmp_path / "hopfkit.conf"
    cfg.write_text("# comment\nwindow = 3\ndegree=2\npreset=galilei\n")
    loaded = load_config(str(cfg))
    assert loaded == {"window": 3, "degree": 2, "preset": "galilei"}
    bad = tmp_path / "bad.conf"
    bad.write_text("nonsense = 1\n")
    with pytest.raises(ConfigError):
        load_config(str(bad))


def test_cli_eval(capsys):
    assert main(["eval", "--algebra", "uq-g1", "B*K"]) == 0
    out = capsys.readouterr().out.strip()
    assert parse(out, "uq-g1") == parse("K*B + i*w*M*K", "uq-g1")


def test_cli_pair(capsys):
    assert main(["pair", "B", "v"]) == 0
    assert capsys.readouterr().out.strip() == "i"


def test_cli_matrix(capsys, tmp_path):
    out_file = tmp_path / "b.json"
    assert main(["matrix", "--op", "B", "--window", "2",
                 "--out", str(out_file)]) == 0
    payload = json.loads(out_file.read_text())
    assert payload["operator"] == "B"
    assert len(payload["matrix"]) == 5
    # B is diagonal with entries iwm(l + 1/2)
    basis = payload["basis"]
    assert basis[2] == "phi*chi^0"
    diag = payload["matrix"][2][2]
    assert diag == str(scalar(1) / 2 * I * W * parse("m", "uq-g1").terms[(0, 0, 0, 0)])


def test_cli_homogeneous_space(capsys):
    assert main(["homogeneous-space", "--preset", "galilei",
                 "--degree", "3", "--side", "left"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["1", "v", "v^2", "v^3"]


def test_cli_verify_exit_codes(capsys, tmp_path):
    out_file = tmp_path / "rep.json"
    code = main(["verify", "jform", "--window", "2", "--out", str(out_file)])
    assert code == 0
    payload = json.loads(out_file.read_text())
    assert payload["status"] == "pass"
    assert "generated_at" in payload
    assert main(["verify", "no-such-suite"]) == 2
    capsys.readouterr()


def test_cli_induce(capsys):
    assert main(["induce", "--preset", "galilei", "--window", "2",
                 "--suite", "relations"]) == 0
    capsys.readouterr()
    assert main(["induce", "--generic", "--corep", "trivial",
                 "--degree", "2"]) == 0
    capsys.readouterr()
