"""
Tour of the Laplace spectrum on round spheres
=============================================

The Laplace-Beltrami operator on the unit n-sphere has eigenvalues
lambda_k = k (k + n - 1) with known multiplicities d_k.  Completing the
square, mu_k = lambda_k + ((n - 1) / 2)^2 = (k + (n - 1) / 2)^2 turns the
spectrum into perfect squares of shifted integers, which is what makes
the regularized zeta function a Hurwitz-type series.

Run from the repository root:

    python3 demos/01_sphere_spectrum_tour.py
"""

from spherezeta.spectrum import (
    mult_poly_coeffs,
    multiplicity,
    multiplicity_product_form,
    sphere_spec,
    spectrum_slice,
)


def main() -> None:
    # ------------------------------------------------------------------
    # 1. Geometry: volume and the spectral shift for each dimension
    # ------------------------------------------------------------------
    print("geometry of the first few spheres")
    print(f"{'n':>3s} {'volume':>14s} {'rho=(n-1)/2':>12s} {'shift=rho^2':>12s}")
    for n in range(1, 7):
        spec = sphere_spec(n)
        print(f"{n:>3d} {spec.volume:>14.8f} {spec.rho:>12.2f} {spec.shift:>12.4f}")

    # ------------------------------------------------------------------
    # 2. The spectrum itself: lambda_k, the completed square mu_k, and d_k
    # ------------------------------------------------------------------
    n = 3
    print(f"\nfirst eigenvalues on S^{n} (mu_k = lambda_k + shift exactly)")
    print(f"{'k':>3s} {'lambda_k':>10s} {'mu_k':>10s} {'d_k':>8s}")
    for entry in spectrum_slice(n, 8):
        print(f"{entry.k:>3d} {entry.lam:>10.1f} {entry.mu:>10.2f} {entry.d:>8d}")

    # ------------------------------------------------------------------
    # 3. Two multiplicity formulas agree exactly in integer arithmetic
    # ------------------------------------------------------------------
    print("\nbinomial-difference vs product-form multiplicities (n <= 6, k <= 40):")
    worst = max(
        abs(multiplicity(k, n) - multiplicity_product_form(k, n))
        for n in range(1, 7)
        for k in range(41)
    )
    print(f"  largest discrepancy = {worst} (exact integer agreement)")

    # closed families recovered from the general formula
    print("  circle     d_k = 2        for k >= 1:",
          all(multiplicity(k, 1) == 2 for k in range(1, 41)))
    print("  2-sphere   d_k = 2k + 1          :",
          all(multiplicity(k, 2) == 2 * k + 1 for k in range(41)))
    print("  3-sphere   d_k = (k + 1)^2       :",
          all(multiplicity(k, 3) == (k + 1) ** 2 for k in range(41)))

    # ------------------------------------------------------------------
    # 4. d_k as a polynomial in the shifted index u = k + rho
    # ------------------------------------------------------------------
    print("\nd_k as a polynomial in u = k + (n-1)/2 (low-degree coefficients first):")
    for n in (2, 3, 4, 5):
        print(f"  n={n}: {mult_poly_coeffs(n)}")
    print("  (odd powers vanish: the multiplicity is even in u, which is why")
    print("   the regularized series reduces to Hurwitz zeta values)")


if __name__ == "__main__":
    main()
