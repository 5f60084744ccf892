import json
import math
from fractions import Fraction

import pytest

import s5artin


def test_verify_sections_pass():
    reports = s5artin.verify()
    assert [r["lemma"] for r in reports] == list(s5artin.section_names())
    assert all(r["pass"] for r in reports)


def test_s5_table_row():
    table = s5artin.s5_table()
    assert list(table["rho6"].values()) == ["6", "0", "-2", "0", "0", "1", "0"]
    assert all(row["1"] == str(int(row["1"])) for row in table.values())


def test_local_factor_4a():
    # (1 + X^2)(1 - X)(1 + X)^2
    assert s5artin.local_factor("rho5", "4A") == [1, 1, 0, 0, -1, -1]
    assert s5artin.local_factor("trivial", "5A") == [1, -1]


def test_taylor():
    c = s5artin.taylor_coefficients(12)
    assert c[0] == 1 and all(c[n] == 4 * n for n in range(1, 13))


def test_field_data():
    p = s5artin.field_profile()
    assert p["disc"] == "1609"
    assert p["signature"] == [1, 2]
    assert p["conjugation"] == "2B"
    assert s5artin.frobenius(2)["class"] == "5A"
    assert s5artin.frobenius(1609)["ramified"]


def test_density_and_phi():
    assert s5artin.density_sum("psi-inv") == 0
    assert s5artin.density_sum("psi-eta") == Fraction(-1)
    assert s5artin.phi_average(10000, "psi-inv") == 0


def test_partial_l_and_mu():
    v = s5artin.partial_L("trivial", 2.0, 100000)
    assert abs(float(v["value"]) - math.pi ** 2 / 6) < 2e-6
    assert s5artin.mu_omega([2], 1.0).startswith("9")
    with pytest.raises(ValueError):
        s5artin.partial_L("trivial", 1.0, 1000)


def test_scenarios():
    rows = s5artin.satake_scenarios("2A", "psi-eta")
    assert {r["phi"] for r in rows} == {"-8"}


def test_cli_round_trip():
    code, out, err = s5artin.run_cli(["field", "profile", "--format", "json"])
    assert code == 0 and err == ""
    assert json.dumps(json.loads(out), indent=2, ensure_ascii=False) + "\n" == out
    assert s5artin.run_cli(["lfun", "value", "--s", "0.5"])[0] == 2
