"""Sphere zeta functions: certificates, closed forms, and domination."""

import math

import pytest

from spherezeta.truncation import TruncationPolicy
from spherezeta.zeta import (
    closed_form_Z,
    compare_zeta_pair,
    hurwitz_style_Z,
    regularized_zeta,
    spectral_zeta,
)
from _oracles import (
    ref_hurwitz,
    ref_regularized_zeta,
    ref_riemann,
    ref_spectral_zeta,
)

TIGHT = TruncationPolicy(max_k=400_000, tol=1e-12)

SGRID = [
    (n, n / 2.0 + ds) for n in (1, 2, 3, 4) for ds in (0.75, 1.5, 2.5)
]


@pytest.mark.parametrize("n,s", SGRID)
def test_spectral_zeta_certificate(n, s):
    r = spectral_zeta(s, n)
    assert r.tail_bound <= 1e-10
    assert abs(r.value - ref_spectral_zeta(s, n)) <= r.tail_bound


@pytest.mark.parametrize("n,s", SGRID)
def test_regularized_zeta_certificate(n, s):
    r = regularized_zeta(s, n)
    assert r.tail_bound <= 1e-10
    assert abs(r.value - ref_regularized_zeta(s, n)) <= r.tail_bound


def test_spectral_zeta_anchors():
    # circle: sum 2 k^-2s, so s = 1 gives pi^2 / 3
    r = spectral_zeta(1.0, 1, TIGHT)
    assert abs(r.value - math.pi**2 / 3) <= r.tail_bound
    # S^2 at s = 2 telescopes: sum (2k+1)/[k(k+1)]^2 = sum 1/k^2 - 1/(k+1)^2 = 1
    r = spectral_zeta(2.0, 2, TIGHT)
    assert abs(r.value - 1.0) <= r.tail_bound
    assert r.value == pytest.approx(1.0, abs=5e-13)


def test_regularized_zeta_anchors():
    tight = TIGHT
    # circle: shift is zero, so this is again 2 zeta_R(2s)
    r = regularized_zeta(1.0, 1, tight)
    assert abs(r.value - math.pi**2 / 3) <= r.tail_bound
    # S^2: sum (2k+1)(k+1/2)^-4 = 2 sum (k+1/2)^-3 = 14 zeta_R(3) - 16
    r = regularized_zeta(2.0, 2, tight)
    assert r.value == pytest.approx(14 * ref_riemann(3.0) - 16.0, abs=1e-11)
    # S^3: sum (k+1)^2 (k+1)^-4 = zeta_R(2) - 1
    r = regularized_zeta(2.0, 3, tight)
    assert r.value == pytest.approx(math.pi**2 / 6 - 1.0, abs=1e-12)


def test_zeta_domain_errors():
    for n in (1, 2, 3, 4):
        with pytest.raises(ValueError):
            spectral_zeta(n / 2.0, n)
        with pytest.raises(ValueError):
            regularized_zeta(n / 2.0, n)
    with pytest.raises(ValueError):
        spectral_zeta(2.0, 0)


@pytest.mark.parametrize("n,s", SGRID)
def test_closed_form_matches_high_precision(n, s):
    assert closed_form_Z(s, n) == pytest.approx(
        ref_regularized_zeta(s, n), abs=1e-10
    )


@pytest.mark.parametrize("n,s", SGRID)
def test_closed_form_matches_series(n, s):
    r = regularized_zeta(s, n)
    assert abs(closed_form_Z(s, n) - r.value) <= 1e-8


def test_closed_form_domain():
    with pytest.raises(ValueError):
        closed_form_Z(3.0, 5)
    with pytest.raises(ValueError):
        closed_form_Z(1.0, 2)


@pytest.mark.parametrize("s", [0.75, 1.0, 1.5, 2.0, 3.0])
def test_hurwitz_style_Z_at_unit_shift(s):
    r = hurwitz_style_Z(s, 1.0, TIGHT)
    assert abs(r.value - ref_riemann(2.0 * s)) <= r.tail_bound
    assert r.tail_bound <= 1e-12


@pytest.mark.parametrize("s,c", [(1.0, 0.5), (1.5, 0.25), (2.0, 0.9), (3.0, 2.5)])
def test_hurwitz_style_Z_general_shift(s, c):
    r = hurwitz_style_Z(s, c)
    assert abs(r.value - ref_hurwitz(2.0 * s, c)) <= r.tail_bound


def test_hurwitz_style_Z_domain():
    with pytest.raises(ValueError):
        hurwitz_style_Z(0.5, 1.0)
    with pytest.raises(ValueError):
        hurwitz_style_Z(2.0, 0.0)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("ds", [0.5, 1.0, 2.0])
def test_shifted_series_dominated(n, ds):
    s = n / 2.0 + ds if ds == 0.5 else (float(n) if ds == 1.0 else n + 1.0)
    pair = compare_zeta_pair(s, n, kmax=200)
    assert pair.dominated
    assert pair.first_violation is None
    # strict gap: the shift strictly enlarges every eigenvalue for n >= 2
    assert pair.zeta_shifted.value < pair.zeta_laplace.value


def test_circle_series_coincide():
    pair = compare_zeta_pair(1.5, 1, kmax=200)
    assert pair.dominated
    combined = pair.zeta_laplace.tail_bound + pair.zeta_shifted.tail_bound
    assert abs(pair.zeta_laplace.value - pair.zeta_shifted.value) <= combined


def test_compare_zeta_pair_domain():
    with pytest.raises(ValueError):
        compare_zeta_pair(2.0, 2, kmax=0)


def test_loose_policy_is_still_honest():
    loose = TruncationPolicy(max_k=200_000, tol=1e-6)
    for n, s in ((2, 2.0), (4, 3.25)):
        r = spectral_zeta(s, n, loose)
        assert abs(r.value - ref_spectral_zeta(s, n)) <= r.tail_bound
        assert r.tail_bound <= 1e-6
