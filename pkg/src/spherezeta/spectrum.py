"""Laplace-Beltrami spectrum of the unit n-sphere.

Eigenvalues lambda_k = k(k + n - 1) with multiplicities

    d_k(n) = (2k + n - 1) (k + n - 2)! / (k! (n-1)!)
           = C(k + n, n) - C(k + n - 2, n),

both computed in exact integer arithmetic.  The additive shift
c_n = ((n-1)/2)^2 completes the square: lambda_k + c_n = (k + (n-1)/2)^2,
exactly, which is what makes the shifted zeta functions collapse to
Hurwitz-type sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .specfun import gamma_fn


@dataclass(frozen=True)
class SphereSpec:
    """Dimension-dependent constants of the unit n-sphere."""

    n: int
    rho: float        # (n - 1) / 2
    shift: float      # rho^2, the square-completing constant
    volume: float     # 2 pi^((n+1)/2) / Gamma((n+1)/2)


@dataclass(frozen=True)
class SpectrumEntry:
    k: int
    lam: float        # k (k + n - 1)
    mu: float         # lam + shift = (k + rho)^2
    d: int            # multiplicity, exact


def sphere_spec(n: int) -> SphereSpec:
    if not isinstance(n, int) or n < 1:
        raise ValueError("sphere dimension n must be a positive integer")
    rho = (n - 1) / 2.0
    vol = 2.0 * math.pi ** ((n + 1) / 2.0) / gamma_fn((n + 1) / 2.0)
    return SphereSpec(n=n, rho=rho, shift=rho * rho, volume=vol)


def eigenvalue(k: int, n: int) -> int:
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    return k * (k + n - 1)


def shifted_eigenvalue(k: int, n: int) -> float:
    """(k + (n-1)/2)^2, exact in binary floating point for moderate k."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    # (2k + n - 1)^2 is an exact int; dividing by 4 is exact in binary.
    return (2 * k + n - 1) ** 2 / 4.0


def _comb0(m: int, r: int) -> int:
    # binomial with the usual convention C(m, r) = 0 for m < 0
    if m < 0:
        return 0
    return math.comb(m, r)


def multiplicity(k: int, n: int) -> int:
    """Multiplicity of lambda_k on S^n, via the exact binomial difference."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    return _comb0(k + n, n) - _comb0(k + n - 2, n)


def multiplicity_product_form(k: int, n: int) -> int:
    """Same multiplicity from (2k+n-1)(k+n-2)!/(k!(n-1)!), exact integers.

    At k = 0 the factorial form degenerates for n = 1; the value there is 1
    for every n, which is what the expression gives wherever it is defined.
    """
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    if k == 0:
        return 1
    num = (2 * k + n - 1) * math.factorial(k + n - 2)
    den = math.factorial(k) * math.factorial(n - 1)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("multiplicity formula did not divide evenly")
    return q


def spectrum_slice(n: int, kmax: int) -> list[SpectrumEntry]:
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    out = []
    for k in range(kmax + 1):
        out.append(
            SpectrumEntry(
                k=k,
                lam=float(eigenvalue(k, n)),
                mu=shifted_eigenvalue(k, n),
                d=multiplicity(k, n),
            )
        )
    return out


@lru_cache(maxsize=64)
def mult_poly_coeffs(n: int) -> tuple[float, ...]:
    """Coefficients a_m with d_k(n) = sum_m a_m (k + rho)^m, valid for k >= 1.

    Derived exactly: for n >= 2,

        d_k = 2u / (n-1)! * prod_{i=1}^{n-2} (u + i - rho),   u = k + rho,

    and the product's roots come in +/- pairs about zero, so the polynomial
    is odd or even in u.  For n = 1 the factorials cancel to the constant 2.
    Coefficients are computed in exact rational arithmetic and rounded once.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return (2.0,)
    rho = Fraction(n - 1, 2)
    poly = [Fraction(1)]
    for i in range(1, n - 1):
        shift = Fraction(i) - rho
        nxt = [Fraction(0)] * (len(poly) + 1)
        for j, cj in enumerate(poly):
            nxt[j] += cj * shift
            nxt[j + 1] += cj
        poly = nxt
    fact = math.factorial(n - 1)
    coeffs = [Fraction(0)] + [2 * c / fact for c in poly]
    return tuple(float(c) for c in coeffs)


@lru_cache(maxsize=64)
def _spectral_arrays(n: int, kmax: int):
    """Read-only float arrays (lam, mu_sqrt, d) for k = 1..kmax."""
    k = np.arange(1, kmax + 1, dtype=float)
    lam = k * (k + n - 1)
    u = k + (n - 1) / 2.0
    coeffs = mult_poly_coeffs(n)
    d = np.zeros_like(u)
    for c in reversed(coeffs):
        d = d * u + c
    for arr in (k, lam, u, d):
        arr.setflags(write=False)
    return lam, u, d
