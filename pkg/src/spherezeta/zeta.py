"""Spectral zeta functions of the unit n-sphere.

Two distinct objects, never conflated:

  spectral_zeta     zeta_{S^n}(s)  = sum_{k>=1} d_k(n) lambda_k^(-s)
  regularized_zeta  Z_{S^n}(s)     = sum_{k>=1} d_k(n) (k + rho_n)^(-2s)

with rho_n = (n-1)/2, both for s > n/2.  The additive shift rho_n^2 turns
lambda_k into the exact square (k + rho_n)^2, so Z is a multiplicity-
weighted Hurwitz-type sum.  ``hurwitz_style_Z`` is the multiplicity-free
cousin sum_{k>=0} (k + c)^(-2s) = zeta_H(2s, c).

Tails are certified by decomposing d_k exactly as a polynomial in
u = k + rho_n (see ``spectrum.mult_poly_coeffs``) and closing each monomial
sum with the midpoint-integral correction; spectral_zeta additionally
expands (u^2 - rho^2)^(-s) = u^(-2s) sum_j C(s+j-1, j) (rho/u)^(2j), whose
truncation error is controlled by a geometric-ratio bound.

``closed_form_Z`` carries the elementary reductions of Z to Riemann zeta
values for n <= 4.  Note for n = 3: the reduction often quoted as
zeta_R(2s-1) - 1 does not match the defining series; the series is
sum_{k>=1} (k+1)^2 (k+1)^(-2s) = zeta_R(2s-2) - 1, and that is what is
implemented (the grid tests against the direct summation pin this down).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .majorize import partial_sum_domination
from .spectrum import _spectral_arrays, mult_poly_coeffs, sphere_spec
from .truncation import (
    DEFAULT_POLICY,
    EvalResult,
    TruncationError,
    TruncationPolicy,
    _roundoff_allowance,
    power_tail,
    shifted_power_sum,
)

_TIGHT = TruncationPolicy(max_k=400_000, tol=1e-13)
_JMAX = 4  # binomial expansion depth for the unshifted tail


@dataclass(frozen=True)
class ZetaPair:
    """Side-by-side evaluation of the shifted and unshifted sphere zetas."""

    s: float
    n: int
    zeta_laplace: EvalResult   # sum d_k lambda_k^(-s)
    zeta_shifted: EvalResult   # sum d_k (k+rho)^(-2s)
    dominated: bool
    first_violation: int | None


def _pow(base: float, expo: float) -> float:
    # all real powers in the closed forms funnel through here
    if base <= 0.0:
        raise ValueError("positive base required")
    return math.exp(expo * math.log(base))


def _round_up_pow2(k: int) -> int:
    p = 1
    while p < k:
        p *= 2
    return p


def _regularized_tail(s: float, n: int, k_last: int) -> tuple[float, float]:
    """Estimate and bound for sum_{k > k_last} d_k (k+rho)^(-2s)."""
    rho = (n - 1) / 2.0
    est = 0.0
    bound = 0.0
    for m, a_m in enumerate(mult_poly_coeffs(n)):
        if a_m == 0.0:
            continue
        e, b = power_tail(2.0 * s - m, rho, k_last + 1)
        est += a_m * e
        bound += abs(a_m) * b
    return est, bound


def _spectral_tail(s: float, n: int, k_last: int) -> tuple[float, float]:
    """Estimate and bound for sum_{k > k_last} d_k lambda_k^(-s)."""
    rho = (n - 1) / 2.0
    coeffs = mult_poly_coeffs(n)
    est = 0.0
    bound = 0.0
    g = 1.0
    for j in range(_JMAX + 1):
        if j > 0:
            g *= (s + j - 1.0) / j
        w = g * rho ** (2 * j)
        if w == 0.0:
            break
        for m, a_m in enumerate(coeffs):
            if a_m == 0.0:
                continue
            e, b = power_tail(2.0 * s + 2 * j - m, rho, k_last + 1)
            est += w * a_m * e
            bound += w * abs(a_m) * b
    if rho > 0.0:
        # remainder of the j-expansion: next term over a geometric ratio
        g_next = g * (s + _JMAX) / (_JMAX + 1.0)
        w_next = g_next * rho ** (2 * (_JMAX + 1))
        rem = 0.0
        for m, a_m in enumerate(coeffs):
            if a_m == 0.0:
                continue
            e, b = power_tail(2.0 * s + 2 * (_JMAX + 1) - m, rho, k_last + 1)
            rem += abs(a_m) * (e + b)
        z = k_last + 0.5 + rho
        ratio = rho * rho * (s + _JMAX + 1.0) / ((_JMAX + 2.0) * z * z)
        if ratio >= 1.0:
            raise TruncationError("expansion ratio not contracting; raise k")
        bound += w_next * rem / (1.0 - ratio)
    return est, bound


def _summed_series(s, n, policy, tail_fn, term_exponent):
    """Shared driver: direct terms k = 1..K plus a certified monomial tail.

    term_exponent selects the summed quantity: "lam" for lambda_k^(-s),
    "mu" for (k+rho)^(-2s).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if not (s > n / 2.0):
        raise ValueError("need s > n/2 for convergence")
    k_used = 16
    while True:
        _, bound = tail_fn(s, n, k_used)
        if bound <= 0.5 * policy.tol or k_used >= policy.max_k:
            break
        k_used = min(2 * k_used, policy.max_k)
    est, bound = tail_fn(s, n, k_used)
    if bound > policy.tol:
        raise TruncationError(
            f"tail bound {bound:.3e} exceeds tol {policy.tol:.3e} "
            f"at max_k={policy.max_k}"
        )
    lam, u, d = _spectral_arrays(n, _round_up_pow2(k_used))
    lam, u, d = lam[:k_used], u[:k_used], d[:k_used]
    if term_exponent == "lam":
        terms = d * np.power(lam, -s)
    else:
        terms = d * np.power(u, -2.0 * s)
    partial = float(np.sum(terms))
    value = partial + est
    tail = bound + _roundoff_allowance(partial, k_used)
    return EvalResult(value=value, terms_used=k_used, tail_bound=tail)


def spectral_zeta(s: float, n: int,
                  policy: TruncationPolicy = DEFAULT_POLICY) -> EvalResult:
    """zeta_{S^n}(s) = sum_{k>=1} d_k(n) [k(k+n-1)]^(-s), s > n/2."""
    return _summed_series(s, n, policy, _spectral_tail, "lam")


def regularized_zeta(s: float, n: int,
                     policy: TruncationPolicy = DEFAULT_POLICY) -> EvalResult:
    """Z_{S^n}(s) = sum_{k>=1} d_k(n) (k + (n-1)/2)^(-2s), s > n/2."""
    return _summed_series(s, n, policy, _regularized_tail, "mu")


def hurwitz_style_Z(s: float, c: float,
                    policy: TruncationPolicy = DEFAULT_POLICY) -> EvalResult:
    """Multiplicity-free shifted sum: sum_{k>=0} (k+c)^(-2s) = zeta_H(2s, c).

    Defined for c > 0 and 2s > 1.  At c = 1 this is zeta_R(2s); it carries
    no sphere multiplicities and must not be compared termwise with
    regularized_zeta.
    """
    if not (c > 0.0):
        raise ValueError("shift c must be positive")
    if not (2.0 * s > 1.0):
        raise ValueError("need 2s > 1 for convergence")
    return shifted_power_sum(2.0 * s, c, policy)


def _closed_form_terms(s: float, n: int):
    """(value, certified bound, zeta terms used) for the n <= 4 reductions."""
    if n not in (1, 2, 3, 4):
        raise ValueError("closed forms implemented for n in {1, 2, 3, 4}")
    if not (s > n / 2.0):
        raise ValueError("need s > n/2")
    if n == 1:
        z = shifted_power_sum(2.0 * s, 1.0, _TIGHT)
        return 2.0 * z.value, 2.0 * z.tail_bound, z.terms_used
    if n == 2:
        z = shifted_power_sum(2.0 * s - 1.0, 1.0, _TIGHT)
        c1 = _pow(2.0, 2.0 * s) - 2.0
        return c1 * z.value - _pow(4.0, s), c1 * z.tail_bound, z.terms_used
    if n == 3:
        # sum (k+1)^(2-2s) over k >= 1: Riemann zeta minus the k=0 term
        z = shifted_power_sum(2.0 * s - 2.0, 1.0, _TIGHT)
        return z.value - 1.0, z.tail_bound, z.terms_used
    za = shifted_power_sum(2.0 * s - 3.0, 1.0, _TIGHT)
    zb = shifted_power_sum(2.0 * s - 1.0, 1.0, _TIGHT)
    pw = _pow(2.0, 2.0 * s - 3.0)
    value = (
        (pw - 1.0) / 3.0 * za.value
        - (pw - 0.25) / 3.0 * zb.value
        - _pow(2.0 / 3.0, 2.0 * s - 3.0) / 3.0
        + _pow(2.0 / 3.0, 2.0 * s) / 8.0
    )
    bound = abs(pw - 1.0) / 3.0 * za.tail_bound + abs(pw - 0.25) / 3.0 * zb.tail_bound
    return value, bound, za.terms_used + zb.terms_used


def closed_form_Z(s: float, n: int) -> float:
    """Elementary reduction of Z_{S^n}(s) to Riemann zeta values, n <= 4."""
    value, _, _ = _closed_form_terms(s, n)
    return value


def compare_zeta_pair(s: float, n: int, kmax: int,
                      policy: TruncationPolicy = DEFAULT_POLICY) -> ZetaPair:
    """Evaluate both zetas and check the shifted one is dominated.

    Since (k+rho)^2 = lambda_k + rho^2 >= lambda_k, each shifted term is at
    most the matching unshifted term; the report checks all partial sums of
    the first kmax terms (natural order) and the certified full sums.  For
    n = 1 the two series coincide exactly.
    """
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    zl = spectral_zeta(s, n, policy)
    zs = regularized_zeta(s, n, policy)
    lam, u, d = _spectral_arrays(n, _round_up_pow2(kmax))
    lam, u, d = lam[:kmax], u[:kmax], d[:kmax]
    shifted_terms = d * np.power(u, -2.0 * s)
    laplace_terms = d * np.power(lam, -s)
    dom = partial_sum_domination(shifted_terms, laplace_terms)
    full_ok = zs.value <= zl.value + zl.tail_bound + zs.tail_bound
    return ZetaPair(
        s=s,
        n=n,
        zeta_laplace=zl,
        zeta_shifted=zs,
        dominated=bool(dom.ok and full_ok),
        first_violation=dom.first_violation,
    )
