"""
Spectral zeta values: raw series, shifted series, closed forms
==============================================================

Two zeta functions live on each sphere: the raw spectral series
zeta(s) = sum d_k lambda_k^(-s) and the regularized series
Z(s) = sum d_k (k + rho)^(-2s) built from the completed squares.  For
n <= 4 the regularized series collapses to combinations of the Riemann
zeta function; this demo evaluates both routes with certified tail
bounds and compares them.

Run from the repository root:

    python3 demos/02_closed_forms_and_series.py
"""

import math

from spherezeta.truncation import TruncationPolicy
from spherezeta.zeta import (
    closed_form_Z,
    hurwitz_style_Z,
    regularized_zeta,
    spectral_zeta,
)

TIGHT = TruncationPolicy(max_k=400_000, tol=1e-13)


def main() -> None:
    # ------------------------------------------------------------------
    # 1. Closed forms vs the summed series, with certified truncation tails
    # ------------------------------------------------------------------
    print("closed form vs regularized series (certified tail in parentheses)")
    for n in (1, 2, 3, 4):
        s = n / 2.0 + 1.5
        series = regularized_zeta(s, n, TIGHT)
        closed = closed_form_Z(s, n)
        print(f"  n={n}, s={s:.2f}: series {series.value:.12f} "
              f"(tail <= {series.tail_bound:.1e}), closed {closed:.12f}, "
              f"diff {abs(series.value - closed):.1e}")

    # ------------------------------------------------------------------
    # 2. Two exact anchors
    # ------------------------------------------------------------------
    print("\nexact anchors:")
    z1 = regularized_zeta(1.0, 1, TIGHT).value
    print(f"  circle Z(1) = {z1:.15f} vs pi^2/3 = {math.pi ** 2 / 3:.15f}")

    # on S^2 the raw series at s = 2 telescopes:
    # (2k+1)/[k(k+1)]^2 = 1/k^2 - 1/(k+1)^2, so the sum is exactly 1
    t = spectral_zeta(2.0, 2, TIGHT)
    print(f"  telescoping sum on S^2 at s=2: {t.value:.15f} "
          "(mathematical value: exactly 1)")

    # ------------------------------------------------------------------
    # 3. The S^3 reduction that looks right but is not
    # ------------------------------------------------------------------
    # On S^3 the multiplicity is (k+1)^2, so the regularized series is
    # sum_{k>=0} (k+1)^(2-2s) = zeta_R(2s-2) - 1.  A tempting slip
    # replaces the exponent 2s-2 by 2s-1; the numbers rule on which
    # reduction is correct:
    s = 2.0
    series = regularized_zeta(s, 3, TIGHT).value
    right = hurwitz_style_Z((2.0 * s - 2.0) / 2.0, 1.0).value - 1.0
    wrong = hurwitz_style_Z((2.0 * s - 1.0) / 2.0, 1.0).value - 1.0
    print("\nS^3 at s=2: which reduction matches the defining series?")
    print(f"  series               = {series:.12f}")
    print(f"  zeta_R(2s-2) - 1     = {right:.12f}   <- matches")
    print(f"  zeta_R(2s-1) - 1     = {wrong:.12f}   <- off by {series - wrong:.6f}")

    # ------------------------------------------------------------------
    # 4. The raw and shifted series on the circle are the same numbers
    # ------------------------------------------------------------------
    # n=1 has rho = 0: lambda_k = k^2 = mu_k, so the two series do not
    # merely agree in the limit, they produce identical floating-point
    # terms.
    a = spectral_zeta(1.5, 1, TIGHT)
    b = regularized_zeta(1.5, 1, TIGHT)
    print(f"\ncircle raw vs shifted at s=1.5: {a.value!r} vs {b.value!r} "
          f"(bitwise equal: {a.value == b.value})")


if __name__ == "__main__":
    main()
