"""High-precision references shared across the test modules.

Everything here is recomputed from scratch, on purpose: mpmath for the
classical zeta and theta functions, exact integer binomials for sphere
multiplicities, and a rational expansion of the multiplicity in the shifted
variable u = k + (n-1)/2 that turns both sphere zetas into short
combinations of Hurwitz values at 40-digit working precision.  None of it
shares a code path with the library.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath as mp

DPS = 40


def ref_riemann(s: float) -> float:
    with mp.workdps(DPS):
        return float(mp.zeta(s))


def ref_hurwitz(s: float, a: float) -> float:
    with mp.workdps(DPS):
        return float(mp.zeta(s, a))


def ref_circle_heat(t: float, gamma: float) -> float:
    """Heat kernel on S^1 via the Jacobi theta function.

    (1/2pi) theta_3(gamma/2, e^{-t}) = (1/2pi)(1 + 2 sum e^{-k^2 t} cos k gamma).
    """
    with mp.workdps(DPS):
        q = mp.e ** (-mp.mpf(t))
        return float(mp.jtheta(3, mp.mpf(gamma) / 2, q) / (2 * mp.pi))


def ref_mult(k: int, n: int) -> int:
    """Multiplicity of the k-th sphere eigenvalue as a sum of two binomials.

    C(k+n-1, n-1) + C(k+n-2, n-1); a third formula, distinct from both the
    binomial-difference and the factorial-quotient routes in the library.
    """
    first = math.comb(k + n - 1, n - 1)
    second = math.comb(k + n - 2, n - 1) if k + n - 2 >= 0 else 0
    return first + second


def mult_u_poly(n: int) -> list[Fraction]:
    """Exact coefficients of d_k as a polynomial in u = k + (n-1)/2.

    d_k = 2u / (n-1)! * prod_{i=1}^{n-2} (u + i - rho) for n >= 2; the
    circle multiplicity is the constant 2.  Returned low degree first.
    Valid for k >= 1 (and for k = 0 except when n = 1).
    """
    if n == 1:
        return [Fraction(2)]
    rho = Fraction(n - 1, 2)
    poly = [Fraction(0), Fraction(2)]
    for i in range(1, n - 1):
        shift = Fraction(i) - rho
        out = [Fraction(0)] * (len(poly) + 1)
        for j, c in enumerate(poly):
            out[j] += c * shift
            out[j + 1] += c
        poly = out
    fact = math.factorial(n - 1)
    return [c / fact for c in poly]


def _reg_zeta_mp(s, n: int):
    # sum_{k>=1} d_k (k+rho)^(-2s) termwise through the u-polynomial:
    # each power of u contributes a Hurwitz zeta starting at u_1 = 1 + rho.
    rho = mp.mpf(n - 1) / 2
    total = mp.mpf(0)
    for j, c in enumerate(mult_u_poly(n)):
        if c == 0:
            continue
        cj = mp.mpf(c.numerator) / c.denominator
        total += cj * mp.zeta(2 * s - j, 1 + rho)
    return total


def ref_regularized_zeta(s: float, n: int) -> float:
    """sum_{k>=1} d_k (k + (n-1)/2)^(-2s) to 40 digits, for s > n/2."""
    with mp.workdps(DPS):
        return float(_reg_zeta_mp(mp.mpf(s), n))


def ref_spectral_zeta(s: float, n: int, jmax: int = 160) -> float:
    """sum_{k>=1} d_k [k(k+n-1)]^(-s) to high precision, for s > n/2.

    Expands lambda^(-s) = sum_j C(s+j-1, j) c^j mu^(-s-j) with c = rho^2,
    so every term is again a shifted sum; the ratio c/mu_1 is at most 9/25,
    giving geometric convergence.  Stops when terms drop below 10^-DPS.
    """
    if n == 1:
        return ref_regularized_zeta(s, 1)
    with mp.workdps(DPS):
        sv = mp.mpf(s)
        c = (mp.mpf(n - 1) / 2) ** 2
        total = mp.mpf(0)
        coef = mp.mpf(1)
        for j in range(jmax + 1):
            if j > 0:
                coef *= (sv + j - 1) / j
            term = coef * c**j * _reg_zeta_mp(sv + j, n)
            total += term
            if abs(term) < mp.mpf(10) ** (-DPS):
                break
        return float(total)


def tail_bracket(p: float, a: float, k_next: int) -> tuple[float, float]:
    """Rigorous [lo, hi] enclosure of sum_{k >= k_next} (k+a)^(-p), p > 1.

    Integral comparison for a decreasing positive summand; used to keep
    brute-force partial sums honest without trusting anybody's estimate.
    """
    lo = (k_next + a) ** (1.0 - p) / (p - 1.0)
    hi = (k_next - 1 + a) ** (1.0 - p) / (p - 1.0)
    return lo, hi
