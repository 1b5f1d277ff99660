import math

import numpy as np
import pytest

from gaussian_eof import (Degenerate, DomainError, InvalidState,
                          StandardFormParams, critical_params, delta0,
                          delta_prime, entropy_of_spectrum, eof, eof_from_cm,
                          f_aux, g_kappa, giovannetti_family,
                          schmidt_coeffs_squeezed, solve_squeezings,
                          squeezed_thermal_eof, squeezed_vacuum_cm,
                          symmetric_eof)

from conftest import random_entangled_params, random_symmetric_entangled_params


def pure_entropy(r):
    """Exact entanglement of the two-mode squeezed vacuum, in bits."""
    if r == 0.0:
        return 0.0
    ch2, sh2 = math.cosh(r) ** 2, math.sinh(r) ** 2
    return ch2 * math.log2(ch2) - sh2 * math.log2(sh2)


def test_f_aux_endpoint():
    assert f_aux(1.0) == 0.0
    assert f_aux(1.0 + 1e-13) == 0.0  # clamped boundary


def test_f_aux_direct_evaluation():
    # independent route: the raw c_plus/c_minus formula
    for d in (0.25, 0.5, 0.9, 0.99):
        cp = (d ** -0.5 + d ** 0.5) ** 2 / 4.0
        cm = (d ** -0.5 - d ** 0.5) ** 2 / 4.0
        direct = cp * math.log2(cp) - cm * math.log2(cm)
        assert f_aux(d) == pytest.approx(direct, rel=1e-13)
    assert f_aux(0.25) == pytest.approx(1.4729424832117068, abs=1e-12)


@pytest.mark.parametrize("r", [0.2, 0.5, 1.0])
def test_f_aux_squeezed_state_identity(r):
    assert f_aux(math.exp(-2 * r)) == pytest.approx(pure_entropy(r), rel=1e-12)


def test_f_aux_domain():
    with pytest.raises(DomainError):
        f_aux(0.0)
    with pytest.raises(DomainError):
        f_aux(-0.3)
    with pytest.raises(DomainError):
        f_aux(1.01)


def test_f_aux_decreasing_and_convex():
    xs = np.linspace(0.01, 0.999, 1000)
    vals = np.array([f_aux(float(x)) for x in xs])
    d1 = np.diff(vals)
    d2 = np.diff(vals, 2)
    assert np.all(d1 < 0.0)
    assert np.all(d2 > 0.0)


def test_f_aux_no_precision_loss_near_one():
    # weakly entangled states: c_minus underflows in the naive formula
    d = 1.0 - 1e-9
    val = f_aux(d)
    s = (1.0 - d) ** 2 / (4.0 * d)
    assert val == pytest.approx(s * (math.log2(1.0 / s) + 1.0 / math.log(2.0)),
                                rel=1e-6)
    assert f_aux(1.0 - 1e-200) >= 0.0


def test_eof_benchmark_rows():
    assert eof(StandardFormParams(2.0, 1.5, 1.0, -1.0)).eof == pytest.approx(
        0.2022298409, abs=1e-7)
    assert eof(StandardFormParams(2.0, 1.5, 1.2, -1.0)).eof == pytest.approx(
        0.3784745926, abs=1e-7)


def test_eof_separable_symmetric_state():
    report = eof(StandardFormParams(1.5, 1.5, 0.2, -0.2))
    assert report.method == "separable"
    assert report.eof == 0.0
    # direct: Delta0 = sqrt(1.3 * 1.3) = 1.3 > 1
    assert math.sqrt((1.5 - 0.2) * (1.5 - 0.2)) == pytest.approx(1.3)


def test_eof_product_state():
    report = eof(StandardFormParams(2.0, 3.0, 0.0, 0.0))
    assert report.eof == 0.0 and report.method == "separable"


def test_eof_pure_state_dispatch():
    r = 0.7
    c, s = math.cosh(2 * r), math.sinh(2 * r)
    report = eof(StandardFormParams(c, c, s, -s))
    assert report.method == "pure"
    assert report.eof == pytest.approx(pure_entropy(r), rel=1e-12)


def test_eof_rejects_non_canonical():
    with pytest.raises(DomainError):
        eof(StandardFormParams(2.0, 2.0, 0.5, 0.4))
    with pytest.raises(DomainError):
        eof(StandardFormParams(2.0, 2.0, 0.3, -0.5))
    with pytest.raises(DomainError):
        eof(StandardFormParams(0.9, 2.0, 0.3, -0.2))


def test_eof_rejects_non_bona_fide():
    with pytest.raises(InvalidState):
        eof(StandardFormParams(1.5, 1.5, 1.2, -1.0))


def test_eof_from_cm_matches_params_route():
    p = StandardFormParams(2.0, 1.5, 1.0, -1.0)
    from gaussian_eof import standard_form_cm
    assert eof_from_cm(standard_form_cm(p, 1.0, 1.0)).eof == pytest.approx(
        eof(p).eof, abs=1e-12)


def test_symmetric_eof_pure_identity():
    for r in (0.2, 0.8):
        n, k = math.cosh(2 * r), math.sinh(2 * r)
        assert symmetric_eof(n, k, -k).eof == pytest.approx(
            pure_entropy(r), rel=1e-11)


def test_symmetric_eof_separable():
    report = symmetric_eof(2.15, 1.3, -0.9)
    assert report.eof == 0.0 and report.method == "separable"


def test_symmetric_eof_domain():
    with pytest.raises(DomainError):
        symmetric_eof(1.5, 1.6, -0.1)  # (n - kx) < 0 branch
    with pytest.raises(DomainError):
        symmetric_eof(0.8, 0.3, -0.2)


def test_symmetric_matches_general_pipeline():
    rng = np.random.default_rng(53)
    for _ in range(20):
        p = random_symmetric_entangled_params(rng)
        closed = symmetric_eof(p.n, p.kx, p.kp).eof
        sol = solve_squeezings(p, use_closed_forms=False)
        epr = delta0(p, sol, critical_params(p, sol))
        general = 0.0 if epr.separable else f_aux(
            delta_prime(epr.delta0, epr.b0))
        assert general == pytest.approx(closed, abs=1e-9)


def test_squeezed_thermal_closed_form_values():
    report = squeezed_thermal_eof(2.0, 1.5, 1.0)
    assert report.epr.delta0 == pytest.approx((2.5 - math.sqrt(2.0)) / 1.5,
                                              abs=1e-14)
    assert report.epr.delta0_prime == pytest.approx(0.70331, abs=5e-6)
    assert report.epr.b0 == pytest.approx(1.0 / 3.0, abs=1e-14)
    assert report.eof == pytest.approx(0.2022298409, abs=1e-7)


def test_squeezed_thermal_matches_general_pipeline():
    for (n, m, kx) in [(2.0, 1.5, 1.0), (3.0, 2.0, 1.2), (2.5, 2.5, 1.6)]:
        closed = squeezed_thermal_eof(n, m, kx).eof
        general = eof(StandardFormParams(n, m, kx, -kx)).eof
        assert closed == pytest.approx(general, abs=1e-10)


def test_squeezed_thermal_symmetric_degeneration():
    n, kx = 2.5, 1.6
    assert squeezed_thermal_eof(n, n, kx).eof == pytest.approx(
        symmetric_eof(n, kx, -kx).eof, abs=1e-12)


def test_squeezed_thermal_domain():
    with pytest.raises(DomainError):
        squeezed_thermal_eof(1.5, 2.0, 0.5)  # n < m
    with pytest.raises(DomainError):
        squeezed_thermal_eof(2.0, 1.5, -0.5)
    with pytest.raises(Degenerate):
        squeezed_thermal_eof(1.0, 1.0, 1e-13)
    with pytest.raises(InvalidState):
        squeezed_thermal_eof(2.0, 1.5, 1.7)  # beyond bona fide


def test_g_kappa():
    assert g_kappa(1.0) == 0.0
    assert g_kappa(2.0) == pytest.approx(2.0, abs=1e-14)
    with pytest.raises(DomainError):
        g_kappa(0.5)


def test_giovannetti_product_member():
    params, report, g = giovannetti_family(1.0, 3.0)
    assert params.kx == pytest.approx(0.0, abs=1e-12)
    assert report.eof == 0.0 and g == 0.0


def test_giovannetti_pure_member_reaches_the_gain_entropy():
    params, report, g = giovannetti_family(2.0, 0.0)
    assert (params.n, params.m) == (3.0, 3.0)
    assert report.eof == pytest.approx(2.0, abs=1e-9)
    assert g == pytest.approx(2.0, abs=1e-14)


def test_giovannetti_mixed_member_two_routes():
    params, report, _ = giovannetti_family(2.0, 1.0)
    assert report.eof == pytest.approx(eof(params).eof, abs=1e-10)
    assert report.eof == pytest.approx(1.703, abs=1e-3)
    assert report.eof == pytest.approx(1.702893188821817, abs=1e-12)


def test_giovannetti_below_gain_entropy():
    for nbar in (0.5, 2.0, 10.0, 50.0):
        _, report, g = giovannetti_family(2.0, nbar)
        assert report.eof < g


def test_eof_monotone_in_correlation():
    n, m, kp = 2.2, 1.6, -0.8
    vals = []
    for kx in np.linspace(0.8, 1.35, 25):
        vals.append(eof(StandardFormParams(n, m, float(kx), kp)).eof)
    assert all(b >= a - 1e-10 for a, b in zip(vals, vals[1:]))


def test_pure_pipeline_matches_fock_oracle():
    r = 0.8
    c, s = math.cosh(2 * r), math.sinh(2 * r)
    pipeline = eof(StandardFormParams(c, c, s, -s)).eof
    oracle = entropy_of_spectrum(schmidt_coeffs_squeezed(r, 400))
    assert pipeline == pytest.approx(oracle, abs=1e-10)


def test_report_serialization():
    d = eof(StandardFormParams(2.0, 1.5, 1.0, -1.0)).to_dict()
    assert set(d) == {"params", "a0", "b0", "delta0", "delta0_prime", "eof",
                      "method", "separable"}
    assert d["params"]["r1"] == 1.0
