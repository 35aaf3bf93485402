import math

import pytest

import tridiag_hira as th


def test_first_experiment_matrix():
    M = th.Matrix.power_law(2.0, 100.0, 250)
    assert len(M) == 250
    lam = th.sturm_bisect(M, 173)
    assert abs(lam - 5.1665) < 5e-4
    v = th.hira_eigenvector(M, lam)
    assert not v.fallback
    assert v.partition.k == 108
    assert v.X[0] == pytest.approx(0.37636e-39, rel=1e-4)
    assert M.residual(lam, v.X) <= 1e-13 * (2.0 + 6.25)
    assert th.sign_agreements(v.X) == 172


def test_scaled_coordinates_match_plain_values():
    M = th.Matrix.power_law(2.0, 100.0, 250)
    v = th.hira_eigenvector(M, th.sturm_bisect(M, 173))
    for (m, e), x in zip(v.scaled, v.X):
        assert math.ldexp(m, e) == pytest.approx(x, rel=1e-15, abs=1e-300)


def test_methods_agree():
    M = th.Matrix.power_law(1.5, 20.0, 80)
    lam = th.sturm_bisect(M, 50)
    h = th.hira_eigenvector(M, lam).X
    s = th.simplified_eigenvector(M, lam).X
    _, y, _ = th.inverse_power(M, lam)
    for a, b, c in zip(h, s, y):
        assert a == pytest.approx(b, rel=1e-9, abs=1e-14)
        assert a == pytest.approx(c, rel=1e-9, abs=1e-14)


def test_bessel_routes():
    back = th.bessel_backward(100.0, 200, 215)
    viah = th.bessel_via_hira(100.0, 200, 215)
    assert back.values[0] == pytest.approx(0.19986e-01, rel=1e-4)
    for k in (0, 1, 2, 200):
        assert viah.values[k] == pytest.approx(back.values[k], rel=1e-11)
    assert th.choose_N(100.0, 200) >= 215


def test_experiment_helpers():
    r = th.experiment1(100.0)
    assert r["oracle_trusted"]
    assert r["hira"][0] == pytest.approx(r["reference"][0], rel=1e-11)
    row = th.experiment2(0)
    assert row["hira"][0] == pytest.approx(0.10809e-13, rel=1e-4)


def test_errors():
    with pytest.raises(Exception):
        th.Matrix.from_values([3.0, 1.0])
    with pytest.raises(IndexError):
        th.experiment2(14)
