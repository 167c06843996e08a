import math

import pytest

import resheight as rh


def test_quad_height_closed_form():
    q = rh.quad_height(34)
    assert q["A"] == 10
    assert q["height"] == 2778446
    assert q["extremal_exps"][0] == 10 and q["extremal_exps"][1] == 14
    assert rh.compute_A(3) == 1
    assert rh.compute_A(99) == 27


def test_quad_matches_expansion():
    for n in range(3, 13):
        assert rh.expand_summary(2, n)["height"] == rh.quad_height(n)["height"]


def test_cubic_layers():
    assert rh.hl_max(0, 12)["value"] == 252
    assert rh.hl_max(5, 7)["value"] == 13
    r = rh.hl_max(3, 12)
    assert r["value"] == 234 and (2, 3, 3, 4) in r["argmax"]
    assert rh.argmax_layers(5) == [1, 2]
    assert rh.argmax_layers(12) == [0]


def test_cubic_matches_expansion():
    for n in range(6, 13):
        full = rh.expand_summary(3, n)["height"]
        assert full == max(rh.hl_max(l, n)["value"] for l in range(n + 1))


def test_constants_and_identities():
    c = rh.constants()
    assert math.isclose(c["alpha_cubic"], 1.8392867552141612, rel_tol=1e-12)
    assert math.isclose(c["c"], 0.6184199223193926, rel_tol=1e-12)
    ids = rh.identity_checks()
    assert ids["pass"]
    assert abs(ids["ratio_cubed"] - 1) < 1e-9


def test_convergence():
    s = rh.measure_convergence("quad", 2000)
    assert abs(1 - s["rho_end"]) < 0.01
    s = rh.measure_convergence("cubic", 2000)
    assert -1.5 < s["slope"] < -0.5


def test_suites():
    assert len(rh.suite_names()) == 7
    rep = rh.run_suite("f-sweep")
    assert rep["passed"] and rep["cases_run"] > 0 and rep["failures"] == []


def test_conjecture_probe():
    assert rh.conjecture_probe(2, 7)["equal"]
    r = rh.conjecture_probe(3, 10)
    assert not r["equal"]
    assert r["full_height"] == 105 and r["binomial_height"] == 100
    with pytest.raises(rh.FeasibilityError):
        rh.conjecture_probe(5, 3)


def test_monotonic_probe():
    r = rh.monotonic_probe("cubic", 12)
    assert r["first_violation"] == 0
    assert r["heights"][0] == 3 and r["heights"][-1] == 252
    q = rh.monotonic_probe("quad", 25)
    assert q["first_violation"] == 0
