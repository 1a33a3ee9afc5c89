"""Majorization primitives on finite real sequences.

Conventions: sequences are compared through prefix sums of their
decreasingly sorted rearrangements; ties are broken by original index
(numpy's stable sort on the negated array).  Tolerances are absolute but
default to 1e-12 relative to the larger total, so reports stay meaningful
for sequences that are not O(1).

``reciprocal_order_probe`` exists to interrogate the tempting claim that
x majorizing y forces the reciprocals to reorder the other way; it reports
what actually happens and asserts nothing (the claim fails already for
x = (3, 1), y = (2, 2)).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class MajorizationReport:
    verdict: str                 # "majorizes" | "weakly_majorizes" | "fails"
    x_sorted: np.ndarray
    y_sorted: np.ndarray
    prefix_gaps: np.ndarray      # partial-sum differences, x minus y
    total_gap: float
    first_violation: int | None  # 1-based prefix length, None if ok
    tol: float


@dataclass(frozen=True)
class DominationReport:
    ok: bool
    prefix_gaps: np.ndarray      # partial sums of b minus partial sums of a
    first_violation: int | None
    tol: float


def _as_vector(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError(f"{name} must be a nonempty 1-d sequence")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def _default_tol(x: np.ndarray, y: np.ndarray) -> float:
    return 1e-12 * max(1.0, abs(float(np.sum(x))), abs(float(np.sum(y))))


def _sort_desc(arr: np.ndarray) -> np.ndarray:
    # stable descending order, ties kept in original index order
    idx = np.argsort(-arr, kind="stable")
    return arr[idx]


def weak_majorizes(x, y, tol: float | None = None) -> MajorizationReport:
    """Report on sum-prefix domination of sorted x over sorted y.

    verdict is "weakly_majorizes" when every prefix sum of x (sorted
    decreasingly) is at least the matching prefix sum of y up to tol,
    "majorizes" when additionally the totals agree within tol, and "fails"
    otherwise.
    """
    xv, yv = _as_vector(x, "x"), _as_vector(y, "y")
    if xv.size != yv.size:
        raise ValueError("sequences must have equal length")
    t = _default_tol(xv, yv) if tol is None else float(tol)
    xs, ys = _sort_desc(xv), _sort_desc(yv)
    gaps = np.cumsum(xs) - np.cumsum(ys)
    bad = np.nonzero(gaps < -t)[0]
    first = int(bad[0]) + 1 if bad.size else None
    total = float(gaps[-1])
    if first is not None:
        verdict = "fails"
    elif abs(total) <= t:
        verdict = "majorizes"
    else:
        verdict = "weakly_majorizes"
    return MajorizationReport(
        verdict=verdict,
        x_sorted=xs,
        y_sorted=ys,
        prefix_gaps=gaps,
        total_gap=total,
        first_violation=first,
        tol=t,
    )


def majorizes(x, y, tol: float | None = None) -> MajorizationReport:
    """Full majorization report: prefix domination plus equal totals."""
    return weak_majorizes(x, y, tol=tol)


def partial_sum_domination(a, b, tol: float | None = None) -> DominationReport:
    """Check sum_{i<=K} a_i <= sum_{i<=K} b_i for every K, in natural order.

    No sorting: the sequences are compared as given, which is the form the
    zeta-term comparisons need.  Entries must be positive.
    """
    av, bv = _as_vector(a, "a"), _as_vector(b, "b")
    if av.size != bv.size:
        raise ValueError("sequences must have equal length")
    if np.any(av <= 0.0) or np.any(bv <= 0.0):
        raise ValueError("entries must be positive")
    t = _default_tol(av, bv) if tol is None else float(tol)
    gaps = np.cumsum(bv) - np.cumsum(av)
    bad = np.nonzero(gaps < -t)[0]
    first = int(bad[0]) + 1 if bad.size else None
    return DominationReport(ok=first is None, prefix_gaps=gaps,
                            first_violation=first, tol=t)


def schur_convex_probe(f, pairs, tol: float = 1e-9) -> list[bool]:
    """For each (x, y) with x majorizing y, test f(x) >= f(y) - tol.

    Raises if some pair is not actually a majorization pair; a Schur
    convexity probe on unordered data would be vacuous.
    """
    out = []
    for x, y in pairs:
        rep = majorizes(x, y)
        if rep.verdict != "majorizes":
            raise ValueError("probe pair is not a majorization pair")
        out.append(bool(f(np.asarray(x, float)) >= f(np.asarray(y, float)) - tol))
    return out


def reciprocal_order_probe(x, y, tol: float | None = None) -> MajorizationReport:
    """Given x majorizing y (all entries positive), report whether 1/y
    weakly majorizes 1/x.  Diagnostic only: the implication is false in
    general, and the returned report simply records the outcome."""
    xv, yv = _as_vector(x, "x"), _as_vector(y, "y")
    if np.any(xv <= 0.0) or np.any(yv <= 0.0):
        raise ValueError("entries must be positive")
    rep = majorizes(xv, yv, tol=tol)
    if rep.verdict != "majorizes":
        raise ValueError("premise failed: x does not majorize y")
    return weak_majorizes(1.0 / yv, 1.0 / xv, tol=tol)
