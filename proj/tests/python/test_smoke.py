import numpy as np
import pytest

import qosc


def test_q_number_values():
    assert qosc.q_number(3.0, 0.5) == pytest.approx(3.5, rel=1e-13)
    assert qosc.q_number(2.0, 0.25) == pytest.approx(2.5, rel=1e-13)
    assert qosc.q_number(4.0, 1.0) == 4.0
    assert qosc.q_brace_number(3, 0.5) == pytest.approx(1.75, rel=1e-14)


def test_q_out_of_range_raises():
    with pytest.raises(Exception, match="symmetry"):
        qosc.position_spectrum(2, 1.5)


def test_position_spectrum():
    x = qosc.position_spectrum(2, 0.5)
    assert x == pytest.approx([-1.0606602, 0.0, 1.0606602], abs=1e-6)
    x1 = qosc.position_spectrum(3, 1.0)
    assert x1 == pytest.approx([-1.5, -0.5, 0.5, 1.5])


def test_wave_table_is_orthogonal():
    for q in (0.5, 0.9, 1.0):
        phi = qosc.wave_table(6, q)
        assert np.max(np.abs(phi @ phi.T - np.eye(7))) < 1e-12
        assert phi[0].min() > 0  # ground state has no nodes


def test_kernel_unitary_and_periodic():
    k = qosc.kernel(5, 0.7, 0.9)
    assert np.max(np.abs(k @ k.conj().T - np.eye(6))) < 1e-12
    k4 = np.linalg.matrix_power(qosc.kernel(5, 0.7, 1.0), 4)
    assert np.max(np.abs(k4 - np.eye(6))) < 1e-12


def test_closed_form_kernel_matches_spectral():
    ks = qosc.kernel(4, 0.5, 0.3, method="spectral")
    kc = qosc.kernel(4, 0.5, 0.3, method="closed")
    assert np.max(np.abs(ks - kc)) < 1e-10


def test_transform_roundtrip():
    rng = np.random.default_rng(7)
    sig = rng.normal(size=6) + 1j * rng.normal(size=6)
    out = sig
    for _ in range(4):
        out = qosc.transform(out, 1.0, 5, 0.8)
    assert np.max(np.abs(out - sig)) < 1e-12


def test_potential_consistency():
    v = qosc.equivalent_potential(6, 0.8)
    closed = [qosc.q_potential_closed_form(2 * i - 6, 6, 0.8) for i in range(7)]
    assert v == pytest.approx(closed, abs=1e-10)
    assert qosc.kravchuk_potential(0, 2) + 1.0 == pytest.approx(2 ** -0.5, rel=1e-12)


def test_verify_reports():
    for verify in (qosc.verify_algebra, qosc.verify_wavetable, qosc.verify_transform,
                   qosc.verify_potential):
        rep = verify(4, 0.5)
        assert rep["all_pass"], rep
    assert qosc.verify_algebra(4, 0.5)["info"]["fq_sign"] == 1.0


def test_contraction_report_shape():
    rep = qosc.contraction_report([8, 16], 0.5, 2)
    assert [r["twoj"] for r in rep["rows"]] == [8, 16]
    assert rep["rows"][1]["dev_asymptote"] < rep["rows"][0]["dev_asymptote"]
    assert rep["wx_limit"] == pytest.approx(2 ** -0.5, rel=1e-12)
