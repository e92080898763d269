"""Smoke tests for the python module: the main operations round-trip and the
headline exact values match."""

import math
from fractions import Fraction

import pytest

import polyharm as ph


def test_bilaurent_algebra():
    z = ph.BiLaurent.z()
    zbar = ph.BiLaurent.zbar()
    u = z * z * zbar  # z^2 zbar
    assert ph.dz(u).terms() == [(1, 1, "2", "0")]
    assert ph.laplacian(z * zbar).terms() == [(0, 0, "4", "0")]
    assert ph.is_n_harmonic(z * zbar, 2)
    assert not ph.is_n_harmonic(z * zbar, 1)


def test_json_round_trip():
    u = ph.BiLaurent.monomial(1, 1, "-7/4")
    again = ph.BiLaurent.from_json(u.to_json())
    assert again == u


def test_apply_L_exact():
    one = ph.BiLaurent.one()
    assert ph.apply_L(one, "0").is_zero()
    assert ph.apply_L(one, "1").terms() == [(0, 0, "-4", "0")]


def test_cellular_decomposition_worked_case():
    f = ph.cellular_decompose(ph.BiLaurent.one(), 2)
    assert f.order == 2
    w0, w1 = f.pieces
    assert w0.terms() == [(0, 0, "1/2", "0"), (1, 1, "1/2", "0")]
    assert w1.terms() == [(0, 0, "1/2", "0")]
    assert ph.cellular_recompose(f) == ph.BiLaurent.one()


def test_almansi_and_extension():
    u = ph.BiLaurent.z() * ph.BiLaurent.zbar()
    f = ph.almansi_decompose(u, 2)
    assert f.pieces[0].is_zero()
    assert f.pieces[1] == ph.BiLaurent.one()
    coeffs = ph.extension(f)
    assert ph.extension_restrict(coeffs) == u


def test_beta_curve_sawtooth():
    d = ph.beta_curve(2)
    assert d["breakpoints"] == [
        ("1/4", "-7/4"),
        ("1/3", "-5/3"),
        ("1/2", "-2"),
        ("1", "-2"),
    ]
    assert d["slopes"] == ["-3", "1", "-2", "0", "-1"]
    assert Fraction(ph.beta_eval(1, "1/4")) == Fraction(-5, 4)


def test_classify():
    d = ph.classify(2, "1/5", "-3/2")
    assert d["admissible"] and d["entangled"] and d["j_set"] == [0]
    d2 = ph.classify(2, "1", "-2")
    assert not d2["admissible"]
    with pytest.raises(ph.BadIndexError):
        ph.classify(2, "-1", "0")


def test_cells():
    cells = ph.enumerate_cells(2, "3")
    assert len(cells) == 3
    assert sum(c["entangled"] for c in cells) == 1
    assert sum(c["principal"] for c in cells) == 1


def test_series_values():
    r = ph.I_series(1.0, 0.0, 1e-12)
    assert r["finite"] and math.isclose(r["series"]["value"], math.pi / 2, rel_tol=1e-12)
    r = ph.I_series(1.0, 1.0, 1e-10)
    assert r["finite"] and math.isclose(r["series"]["value"], math.pi, rel_tol=1e-9)
    assert not ph.I_series(0.0, 1.0, 1e-8)["finite"]
    avg = ph.circle_average(1.0, 0.5, 1e-12)
    assert math.isclose(avg["value"], 4.0 / 3.0, rel_tol=1e-12)


def test_kernel_norm_and_eval():
    assert math.isclose(ph.kernel_eval(2, 2, complex(0.5, 0.0)), 6.75, rel_tol=1e-12)
    v = ph.kernel_norm(0, 2, "1", "0", 1e-10, cross_validate=False)
    assert v["finite"] and math.isclose(v["value"], math.pi / 2, rel_tol=1e-10)
    d = ph.kernel_norm(2, 2, "1/4", "-7/4", 1e-8, cross_validate=False)
    assert not d["finite"]
    trace = d["trace"]
    assert all(b > a for (_, a), (_, b) in zip(trace, trace[1:]))


def test_lagrange_reconstruct():
    u = ph.BiLaurent.one() - ph.BiLaurent.z() * ph.BiLaurent.zbar()
    val = ph.lagrange_reconstruct(u, 2, ["1/2", "3/4"], complex(0.1, 0.2))
    assert math.isclose(val.real, 0.95, abs_tol=1e-10)
    assert abs(val.imag) < 1e-10


def test_quadrature_callable():
    value, err = ph.integrate(lambda r, eps, t: 1.0, 0.0, [], 0.0, 1e-10)
    assert math.isclose(value, math.pi, rel_tol=1e-9)
    assert err < 1e-8


def test_verify_suite():
    results = ph.verify_suite("curves", seed=7, trials=10)
    assert results and all(r["passed"] for r in results)
