import json
import os
import pathlib

import pytest

import hmsl

CONFIGS = pathlib.Path(os.environ.get("HMSL_CONFIGS", pathlib.Path(__file__).parents[2] / "configs"))


def rho0_config(**overrides):
    config = json.loads((CONFIGS / "rho0_demo.json").read_text())
    config.update(overrides)
    return config


def test_reference_suite_passes():
    checks = hmsl.verify_paper()
    assert {c["criterion"] for c in checks} == {1, 2, 3, 4}
    assert all(c["pass"] for c in checks)


def test_galois_and_real_roots():
    # x^4 - x - 1, coefficients of t^0 .. t^4
    assert hmsl.galois_group([-1, -1, 0, 0, 1]) == ("S4", 24)
    assert hmsl.galois_group(["1", "1", "1", "1", "1"]) == ("C4", 4)
    assert hmsl.real_root_count([0, -6, 11, -6, 1]) == 4
    report = hmsl.solvability([6, 0, -5, 0, 1])
    assert [f["group"] for f in report["factors"]] == ["C2", "C2"]
    assert sum(f["degree"] for f in report["factors"]) == 4
    with pytest.raises(hmsl.DomainError):
        hmsl.solvability([0, 0, 1, -2, 1])


def test_find_and_recertify():
    config = rho0_config()
    report = hmsl.find_lines(config)
    assert report["schema"] == "hmsl.search/1"
    result = report["results"][0]
    cert = result["certificate"]
    assert cert["schema"] == hmsl.CERTIFICATE_SCHEMA
    assert cert["pass"] and cert["real_root_count"] == 4
    assert hmsl.certify(cert["line"], config) == cert
    assert hmsl.find_lines(json.dumps(config)) == report


def test_errors_map_to_exceptions():
    with pytest.raises(hmsl.ConfigError):
        hmsl.find_lines(rho0_config(colour="blue"))
    with pytest.raises(hmsl.ConfigError):
        hmsl.find_lines("{not json")
    assert issubclass(hmsl.SearchExhausted, hmsl.HmslError)
    report = hmsl.find_lines(rho0_config(height_bound=5))
    assert report["results"] == []
    assert report["statistics"]["stop"] == "height-bound"
    off = {"p": ["1", "0", "0", "0", "0", "0"], "q": ["0", "1", "0", "0", "0", "0"]}
    with pytest.raises(hmsl.DomainError):
        hmsl.certify(off, rho0_config())
