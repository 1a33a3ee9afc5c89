"""
Heat and zeta kernels on the sphere
===================================

The heat kernel K(t, gamma) and the zeta kernel Z_s(gamma) are both
eigenfunction expansions sum_k c_k d_k P_k(cos gamma) / Vol(S^n), with
Gaussian weights e^(-t lambda_k) for heat and power weights lambda_k^(-s)
for zeta.  This demo prints angular profiles, checks the circle case
against a theta-function oracle, and follows the heat trace as it decays
to the constant mode.

Run from the repository root:

    python3 demos/03_kernel_profiles.py
"""

import math

from spherezeta.kernels import (
    KernelQuery,
    circle_heat_oracle,
    heat_kernel,
    heat_trace,
    zeta_kernel,
)
from spherezeta.spectrum import sphere_spec
from spherezeta.truncation import TruncationPolicy

POLICY = TruncationPolicy(max_k=200_000, tol=1e-11)


def main() -> None:
    # ------------------------------------------------------------------
    # 1. Heat kernel profiles on S^2: diffusion flattens the bump
    # ------------------------------------------------------------------
    n = 2
    angles = [0.0, 0.5, 1.0, 1.5, 2.0, 2.5, math.pi]
    print("heat kernel on S^2 across the angle gamma (rows: time t)")
    header = "  t \\ gamma " + "".join(f"{g:>10.2f}" for g in angles)
    print(header)
    for t in (0.05, 0.25, 1.0, 4.0):
        row = []
        for g in angles:
            q = KernelQuery(n=n, cos_gamma=math.cos(g), policy=POLICY)
            row.append(heat_kernel(t, q).value)
        print(f"  t={t:<8.2f} " + "".join(f"{v:>10.6f}" for v in row))
    uniform = 1.0 / sphere_spec(n).volume
    print(f"  (long-time limit is the uniform density 1/Vol = {uniform:.6f})")

    # ------------------------------------------------------------------
    # 2. The circle case has an independent closed form: a theta function
    # ------------------------------------------------------------------
    print("\ncircle heat kernel vs wrapped-Gaussian/theta oracle:")
    for t, g in ((0.1, 0.7), (1.0, 2.0), (3.0, math.pi)):
        mine = heat_kernel(t, KernelQuery(n=1, cos_gamma=math.cos(g),
                                          policy=POLICY)).value
        ref = circle_heat_oracle(t, g)
        print(f"  t={t:.1f}, gamma={g:.3f}: series {mine:.15f}, "
              f"oracle {ref:.15f}, diff {abs(mine - ref):.1e}")

    # ------------------------------------------------------------------
    # 3. Zeta kernel: a stationary profile for each exponent s
    # ------------------------------------------------------------------
    print("\nzeta kernel on S^2 (larger s weights low modes, flatter profile)")
    # the certified tail shrinks like K^(n-2s), so small s needs a looser
    # tolerance to stay within the term budget
    for s, tol in ((1.5, 1e-5), (2.0, 1e-8), (3.0, 1e-8)):
        pol = TruncationPolicy(max_k=200_000, tol=tol)
        row = []
        for g in angles:
            q = KernelQuery(n=n, cos_gamma=math.cos(g), policy=pol)
            row.append(zeta_kernel(s, q).value)
        print(f"  s={s:<8.2f} " + "".join(f"{v:>10.6f}" for v in row))

    # ------------------------------------------------------------------
    # 4. Heat trace: sum of e^(-t lambda_k) with multiplicity
    # ------------------------------------------------------------------
    print("\nheat trace on S^3 (decays to 1, the constant mode)")
    for t in (0.1, 0.5, 1.0, 2.0, 4.0, 8.0):
        tr = heat_trace(t, 3, POLICY)
        print(f"  t={t:<5.1f} trace = {tr.value:.10f} "
              f"(terms used: {tr.terms_used}, tail <= {tr.tail_bound:.1e})")

    # the diagonal value times the volume reproduces the trace
    t = 0.5
    q = KernelQuery(n=3, cos_gamma=1.0, policy=POLICY)
    lhs = sphere_spec(3).volume * heat_kernel(t, q).value
    rhs = heat_trace(t, 3, POLICY).value
    print(f"\nVol * K(t, 0) vs trace at t={t}: {lhs:.12f} vs {rhs:.12f} "
          f"(diff {abs(lhs - rhs):.1e})")


if __name__ == "__main__":
    main()
