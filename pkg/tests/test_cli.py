import json

import pytest

from qsphere.cli import main, parse_param_spec, CnSpec
from qsphere.scalars import CParam, qpow


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_param_spec():
    assert parse_param_spec("inf").is_infinity()
    c = parse_param_spec("s=1/(q-q^-1)")
    assert c.variant == "generic"
    c = parse_param_spec("exc:1")
    assert c.c_value() == (qpow(1) - qpow(-1)) ** -2
    spec = parse_param_spec("cn:2")
    assert isinstance(spec, CnSpec) and spec.n2 == 2
    with pytest.raises(ValueError):
        parse_param_spec("bogus")


def test_classify_generic(capsys):
    code, out = run_cli(capsys, "--format", "json", "classify", "--c", "s=1",
                        "--lmax", "4")
    assert code == 0
    doc = json.loads(out)
    comps = [tuple(e["component"]) for e in doc["components"]]
    assert comps == [(1, 0), (1, 2), (1, 4)]
    dims = [e["dim_calculus"] for e in doc["components"]]
    assert dims == [0, 3, 5]
    # emitted JSON parses back to the same document
    assert json.loads(json.dumps(doc)) == doc


def test_classify_rejects_cn(capsys):
    code = main(["classify", "--c", "cn:2", "--lmax", "2"])
    assert code == 2


def test_classify_rejects_zero_s(capsys):
    code = main(["classify", "--c", "s=0", "--lmax", "2"])
    assert code == 2


def test_de_generated_counts(capsys):
    code, out = run_cli(capsys, "--format", "json", "de-generated", "--c", "inf")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 3
    code, out = run_cli(capsys, "--format", "json", "de-generated", "--c", "exc:1")
    assert code == 0
    assert json.loads(out)["count"] == 2


def test_eigenvalues(capsys):
    code, out = run_cli(capsys, "--format", "json", "eigenvalues", "--c", "s=1",
                        "--l", "2", "--sign", "+")
    assert code == 0
    doc = json.loads(out)
    assert doc["zero_root_multiplicity"] == 1
    assert doc["kernel_dim"] == 1
    assert doc["certificates"][0]["pass"]


def test_tangent_space_command(capsys):
    code, out = run_cli(capsys, "--format", "json", "tangent-space", "--c", "s=1",
                        "--components", "+2,+4")
    assert code == 0
    doc = json.loads(out)
    assert doc["dim_Teps"] == 9


def test_mu_rep(capsys):
    code, out = run_cli(capsys, "--format", "json", "mu-rep", "--n", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["certificates"][0]["pass"]
    assert len(doc["matrices"]["A"]) == 2
    # the cn: spec is accepted here (and only here)
    code, out = run_cli(capsys, "--format", "json", "mu-rep", "--c", "cn:4")
    assert code == 0
    assert json.loads(out)["params"]["n"] == 2


def test_build_fodc(capsys):
    code, out = run_cli(capsys, "--format", "json", "build-fodc", "--n", "1",
                        "--leibniz-degree", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 3
    assert doc["schema"] == "qsphere-report/1"
    assert all(c["pass"] for c in doc["certificates"])


def test_selftest_single_criterion(capsys):
    code, out = run_cli(capsys, "selftest", "--only", "AC-2")
    assert code == 0
    assert "AC-2 PASS" in out


def test_text_format(capsys):
    code, out = run_cli(capsys, "eigenvalues", "--c", "s=1", "--l", "1",
                        "--sign", "-")
    assert code == 0
    assert "kernel dimension: 0" in out
