"""Exact finite-dimensional verification of Kato-type inequalities.

Everything here lives on real symmetric matrices, mostly graph Laplacians
(nonnegative diagonal, nonpositive off-diagonal, zero row sums), where the
distributional inequalities of the continuum theory become entrywise
statements that can be checked to machine precision:

  pointwise    Re( sgn(psi) * (L psi) ) >= L |psi|           entrywise
  pairing      < Re( sgn(psi) * (-L psi) ), phi >  <=  < |psi|, -L phi >
               for every phi >= 0
  positivity   |e^{-tL} psi|  <=  e^{-tL} |psi|              entrywise
  trace        Tr e^{-t(L+V)} <=  Tr e^{-tL}   for diagonal V >= 0,
               via eigenvalue-by-eigenvalue domination

together with the Duhamel identity

  e^{-t(X+Y)} = e^{-tX} - int_0^t e^{-(t-s)(X+Y)} Y e^{-sX} ds,

whose integral is evaluated by composite Simpson so the residual shrinks
at fourth order in the step.  sgn acts entrywise as conj(psi)/|psi| with
sgn(0) = 0; the regularized variant conj(psi)/sqrt(|psi|^2 + eps^2) is
smooth, bounded by 1, and recovers sgn as eps -> 0.

Semigroups are computed by spectral calculus (one symmetric
eigendecomposition), then explicitly re-symmetrized so the exact-symmetry
invariant survives roundoff.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_PSD_SLACK = 1e-10


@dataclass(frozen=True)
class SymmetricOperator:
    dim: int
    entries: np.ndarray
    psd: bool


@dataclass(frozen=True)
class Potential:
    dim: int
    diagonal: np.ndarray


@dataclass(frozen=True)
class EntrywiseReport:
    ok: bool
    min_slack: float
    first_violation: int | None
    slack: np.ndarray
    tol: float


@dataclass(frozen=True)
class PairingReport:
    ok: bool
    lhs: float
    rhs: float
    slack: float
    tol: float


@dataclass(frozen=True)
class TraceReport:
    ok: bool
    trace_full: float       # Tr e^{-t(L+V)}
    trace_free: float       # Tr e^{-tL}
    trace_gap: float        # trace_free - trace_full
    eig_min_gap: float      # min_k lambda_k(L+V) - lambda_k(L)
    tol: float


def symmetric_operator(entries, require_psd: bool = False) -> SymmetricOperator:
    """Wrap a matrix after validating exact symmetry (and PSD if asked)."""
    mat = np.asarray(entries, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("operator must be a square matrix")
    if not np.array_equal(mat, mat.T):
        raise ValueError("operator entries are not exactly symmetric")
    eigmin = float(np.linalg.eigvalsh(mat)[0])
    psd = eigmin >= -_PSD_SLACK
    if require_psd and not psd:
        raise ValueError(f"operator is not positive semidefinite (min eig {eigmin:.3e})")
    out = mat.copy()
    out.setflags(write=False)
    return SymmetricOperator(dim=mat.shape[0], entries=out, psd=psd)


def potential(diagonal) -> Potential:
    diag = np.asarray(diagonal, dtype=float)
    if diag.ndim != 1 or diag.size == 0:
        raise ValueError("potential must be a nonempty vector")
    if np.any(diag < 0.0):
        raise ValueError("potential entries must be nonnegative")
    out = diag.copy()
    out.setflags(write=False)
    return Potential(dim=diag.size, diagonal=out)


def cycle_laplacian(m: int) -> SymmetricOperator:
    """Laplacian of the m-cycle: 2 on the diagonal, -1 to both neighbours."""
    if m < 3:
        raise ValueError("cycle needs at least 3 vertices")
    mat = 2.0 * np.eye(m)
    idx = np.arange(m)
    mat[idx, (idx + 1) % m] = -1.0
    mat[idx, (idx - 1) % m] = -1.0
    return symmetric_operator(mat)


def complete_laplacian(m: int) -> SymmetricOperator:
    """Laplacian of the complete graph K_m."""
    if m < 2:
        raise ValueError("complete graph needs at least 2 vertices")
    mat = m * np.eye(m) - np.ones((m, m))
    return symmetric_operator(mat)


def random_graph_laplacian(m: int, p: float, seed: int) -> SymmetricOperator:
    """Laplacian of a random connected graph: a path plus density-p edges."""
    if m < 2:
        raise ValueError("need at least 2 vertices")
    if not (0.0 <= p <= 1.0):
        raise ValueError("edge probability must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    adj = np.zeros((m, m))
    for i in range(m - 1):
        adj[i, i + 1] = adj[i + 1, i] = 1.0
    for i in range(m):
        for j in range(i + 2, m):
            if rng.random() < p:
                adj[i, j] = adj[j, i] = 1.0
    lap = np.diag(adj.sum(axis=1)) - adj
    return symmetric_operator(lap)


def is_graph_laplacian(op: SymmetricOperator, tol: float = 0.0) -> bool:
    """Nonpositive off-diagonal entries; the class the pointwise bound needs."""
    off = op.entries - np.diag(np.diag(op.entries))
    return bool(np.all(off <= tol))


def sign_vector(psi, mode: str = "exact", eps: float | None = None) -> np.ndarray:
    """Entrywise sgn: conj(psi)/|psi| with sgn(0) = 0.

    mode="regularized" smooths through zeros: conj(psi)/sqrt(|psi|^2+eps^2).
    """
    v = np.asarray(psi, dtype=complex)
    if mode == "exact":
        mag = np.abs(v)
        out = np.zeros_like(v)
        nz = mag > 0.0
        out[nz] = np.conj(v[nz]) / mag[nz]
        return out
    if mode == "regularized":
        if eps is None or not (eps > 0.0):
            raise ValueError("regularized mode requires eps > 0")
        return np.conj(v) / np.sqrt(np.abs(v) ** 2 + eps * eps)
    raise ValueError("mode must be 'exact' or 'regularized'")


def regularized_abs(psi, eps: float) -> np.ndarray:
    """sqrt(|psi|^2 + eps^2): smooth, >= |psi|, -> |psi| as eps -> 0."""
    if not (eps >= 0.0):
        raise ValueError("eps must be nonnegative")
    v = np.asarray(psi, dtype=complex)
    return np.sqrt(np.abs(v) ** 2 + eps * eps)


def _entrywise(lhs: np.ndarray, rhs: np.ndarray, tol: float) -> EntrywiseReport:
    slack = lhs - rhs
    bad = np.nonzero(slack < -tol)[0]
    first = int(bad[0]) if bad.size else None
    return EntrywiseReport(
        ok=first is None,
        min_slack=float(np.min(slack)),
        first_violation=first,
        slack=slack,
        tol=tol,
    )


def kato_pointwise_check(op: SymmetricOperator, psi,
                         tol: float = 1e-12) -> EntrywiseReport:
    """Check Re(sgn(psi) * L psi) >= L |psi| entrywise.

    Requires L in the graph-Laplacian class (nonpositive off-diagonals);
    outside that class the inequality has no reason to hold and the check
    refuses to run rather than report a meaningless verdict.
    """
    if not is_graph_laplacian(op):
        raise ValueError("pointwise check requires nonpositive off-diagonals")
    v = np.asarray(psi, dtype=complex)
    if v.shape != (op.dim,):
        raise ValueError("vector length does not match operator dimension")
    lhs = np.real(sign_vector(v) * (op.entries @ v))
    rhs = op.entries @ np.abs(v)
    return _entrywise(lhs, rhs, tol)


def generator_pairing_check(op: SymmetricOperator, psi, phi,
                            tol: float = 1e-12) -> PairingReport:
    """Check <Re(sgn(psi) * A psi), phi> <= <|psi|, A phi> for A = -L.

    phi must be entrywise nonnegative (it plays the test-function role).
    """
    if not is_graph_laplacian(op):
        raise ValueError("pairing check requires nonpositive off-diagonals")
    v = np.asarray(psi, dtype=complex)
    f = np.asarray(phi, dtype=float)
    if v.shape != (op.dim,) or f.shape != (op.dim,):
        raise ValueError("vector length does not match operator dimension")
    if np.any(f < 0.0):
        raise ValueError("test vector phi must be nonnegative")
    lhs = float(np.dot(np.real(sign_vector(v) * (-(op.entries @ v))), f))
    rhs = float(np.dot(np.abs(v), -(op.entries @ f)))
    return PairingReport(ok=lhs <= rhs + tol, lhs=lhs, rhs=rhs,
                         slack=rhs - lhs, tol=tol)


def semigroup(op: SymmetricOperator, t: float) -> SymmetricOperator:
    """e^{-t L} by spectral calculus, re-symmetrized exactly."""
    if t < 0.0:
        raise ValueError("semigroup time must be nonnegative")
    w, u = np.linalg.eigh(op.entries)
    e = (u * np.exp(-t * w)) @ u.T
    e = 0.5 * (e + e.T)
    return symmetric_operator(e)


def positivity_domination_check(op: SymmetricOperator, t: float, psi,
                                tol: float = 1e-12) -> EntrywiseReport:
    """Check |e^{-tL} psi| <= e^{-tL} |psi| entrywise.

    Positivity preservation of the semigroup is what makes this valid, so
    the operator must again be of graph-Laplacian type.
    """
    if not is_graph_laplacian(op):
        raise ValueError("domination check requires nonpositive off-diagonals")
    v = np.asarray(psi, dtype=complex)
    if v.shape != (op.dim,):
        raise ValueError("vector length does not match operator dimension")
    e = semigroup(op, t).entries
    return _entrywise(e @ np.abs(v), np.abs(e @ v), tol)


def trace_domination_check(op: SymmetricOperator, pot: Potential, t: float,
                           tol: float = 1e-10) -> TraceReport:
    """Check Tr e^{-t(L+V)} <= Tr e^{-tL} and per-index eigenvalue domination."""
    if pot.dim != op.dim:
        raise ValueError("potential length does not match operator dimension")
    if t < 0.0:
        raise ValueError("time must be nonnegative")
    w_free = np.linalg.eigvalsh(op.entries)
    w_full = np.linalg.eigvalsh(op.entries + np.diag(pot.diagonal))
    tr_free = float(np.sum(np.exp(-t * w_free)))
    tr_full = float(np.sum(np.exp(-t * w_full)))
    eig_gap = float(np.min(w_full - w_free))
    ok = (tr_full <= tr_free + tol) and (eig_gap >= -tol)
    return TraceReport(ok=ok, trace_full=tr_full, trace_free=tr_free,
                       trace_gap=tr_free - tr_full, eig_min_gap=eig_gap, tol=tol)


def duhamel_residual(x_op: SymmetricOperator, y_pot: Potential, t: float,
                     steps: int = 128) -> float:
    """Spectral norm of the Duhamel defect at Simpson resolution ``steps``.

    R = e^{-t(X+Y)} - e^{-tX} + int_0^t e^{-(t-s)(X+Y)} Y e^{-sX} ds.
    steps must be even; the residual decays like steps^(-4).
    """
    if y_pot.dim != x_op.dim:
        raise ValueError("potential length does not match operator dimension")
    if t < 0.0:
        raise ValueError("time must be nonnegative")
    if steps < 2 or steps % 2:
        raise ValueError("steps must be a positive even integer")
    x = x_op.entries
    h = x + np.diag(y_pot.diagonal)
    wx, ux = np.linalg.eigh(x)
    wh, uh = np.linalg.eigh(h)
    ydiag = y_pot.diagonal

    def ex(tau):
        return (ux * np.exp(-tau * wx)) @ ux.T

    def eh(tau):
        return (uh * np.exp(-tau * wh)) @ uh.T

    grid = np.linspace(0.0, t, steps + 1)
    weights = np.ones(steps + 1)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    weights *= (t / steps) / 3.0
    integral = np.zeros_like(x)
    for s_val, w in zip(grid, weights):
        integral += w * (eh(t - s_val) * ydiag) @ ex(s_val)
    resid = eh(t) - ex(t) + integral
    return float(np.linalg.norm(resid, 2))


def commute_residual(op: SymmetricOperator, t: float) -> float:
    """Spectral norm of L e^{-tL} - e^{-tL} L; zero in exact arithmetic."""
    e = semigroup(op, t).entries
    return float(np.linalg.norm(op.entries @ e - e @ op.entries, 2))


def random_state(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Complex Gaussian vector, the generic test state for the checks above."""
    return rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
