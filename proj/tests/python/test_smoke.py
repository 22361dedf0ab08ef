import math

import numpy as np
import pytest

import fent


def test_closed_form_values():
    cf0 = fent.closed_form(0.0)
    assert cf0.f == 1.0
    assert cf0.c_site_spins == pytest.approx(-0.5, abs=1e-15)
    assert cf0.e_bonding_numbers == pytest.approx(0.0, abs=1e-15)
    assert cf0.c_site_numbers == pytest.approx(-0.5, abs=1e-15)

    cf1 = fent.closed_form(1.0)
    assert cf1.f == pytest.approx(math.sqrt(2.0) - 1.0, abs=1e-15)
    assert cf1.c_site_spins == pytest.approx(-(2.0 + math.sqrt(2.0)) / 4.0, abs=1e-15)
    assert cf1.e_bonding_numbers == pytest.approx(0.5, abs=1e-14)


def test_ground_state():
    gs = fent.ground_state(0.0)
    assert gs.energy == pytest.approx(-2.0, abs=1e-12)
    assert not gs.degenerate
    assert gs.residual <= 1e-10
    assert np.abs(np.linalg.norm(gs.amplitudes) - 1.0) <= 1e-12


def test_correlations_match_closed_forms():
    for x in (0.0, 0.7, 3.0):
        cf = fent.closed_form(x)
        c_spin = fent.correlation(x, fent.ObservablePair.electron_spins)
        assert c_spin.real == pytest.approx(-1.0, abs=1e-10)
        c_site = fent.correlation(x, fent.ObservablePair.site_spins)
        assert c_site.real == pytest.approx(cf.c_site_spins, abs=1e-10)
        c_num = fent.correlation(x, fent.ObservablePair.site_numbers)
        assert c_num.real == pytest.approx(cf.c_site_numbers, abs=1e-10)


def test_degree_and_maximum():
    result = fent.max_abs_correlation(
        fent.ObservablePair.bonding_numbers, seed=42, restarts=32, oracle_samples=20000
    )
    assert result.max_abs == pytest.approx(0.25, abs=1e-6)
    assert result.diagnostics.oracle_gap >= -1e-6

    e0 = fent.degree(0.0, fent.ObservablePair.bonding_numbers, oracle_samples=20000)
    assert e0 == pytest.approx(0.0, abs=1e-9)


def test_slater_rank_transition():
    assert fent.slater_analysis(0.0).rank == 1
    assert fent.slater_analysis(0.0).pfaffian_residual <= 1e-12
    assert fent.slater_analysis(1.0).rank == 2

    w = np.zeros((4, 4), dtype=complex)
    w[0, 1], w[1, 0] = 1.0 / math.sqrt(2.0), -1.0 / math.sqrt(2.0)
    assert fent.slater_rank(w).rank == 1


def test_epr_conditionals_pin_to_minus_one():
    conditionals = fent.epr_conditionals(8)
    assert len(conditionals) == 8 * 7
    assert max(abs(c + 1.0) for c in conditionals) <= 1e-10


def test_dense_maximizer_rejects_non_hermitian():
    a = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    b = np.eye(2, dtype=complex)
    with pytest.raises(fent.FentError):
        fent.max_abs_correlation_dense(a, b)
