"""Entangled-mode counts for continuous-variable generator sets.

Generators are rows of a real (Z part | X part) matrix; the pairwise
product matrix HX @ HZ^T - HZ @ HX^T is antisymmetric, and half its
numerical rank counts the entangled modes the set consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InternalInvariantError, NonFiniteEntryError, ShapeError

__all__ = ["RealCheckMatrix", "cv_ebit_count", "numerical_rank"]

DEFAULT_TOLERANCE = 1e-10


@dataclass(frozen=True)
class RealCheckMatrix:
    """Real-valued (Z part, X part) pair with a rank-decision tolerance.

    ``tolerance`` is relative to the largest absolute entry of the
    product matrix; near-threshold inputs are the caller's call to make.
    """

    hz: np.ndarray
    hx: np.ndarray
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        hz = np.array(self.hz, dtype=np.float64)
        hx = np.array(self.hx, dtype=np.float64)
        if hz.ndim != 2 or hx.ndim != 2:
            raise ShapeError("Z and X parts must be 2-D")
        if hz.shape != hx.shape:
            raise ShapeError("Z and X parts must have identical shape")
        if not (np.isfinite(hz).all() and np.isfinite(hx).all()):
            raise NonFiniteEntryError("check matrix entries must be finite")
        if not (self.tolerance >= 0):
            raise ValueError("tolerance must be nonnegative")
        hz.setflags(write=False)
        hx.setflags(write=False)
        object.__setattr__(self, "hz", hz)
        object.__setattr__(self, "hx", hx)

    @property
    def n(self) -> int:
        return self.hz.shape[1]

    @property
    def generators(self) -> int:
        return self.hz.shape[0]


def numerical_rank(a: np.ndarray, relative_tolerance: float) -> int:
    """Pivot count of elimination with full pivoting on magnitude.

    Entries are treated as zero once the largest remaining magnitude
    drops to ``relative_tolerance`` times the largest magnitude of the
    original matrix.  Deterministic, no LAPACK involved.
    """
    work = np.array(a, dtype=np.float64)
    nrows, ncols = work.shape
    if nrows == 0 or ncols == 0:
        return 0
    reference = float(np.abs(work).max())
    if reference == 0.0:
        return 0
    threshold = relative_tolerance * reference
    r = 0
    steps = min(nrows, ncols)
    for _ in range(steps):
        sub = np.abs(work[r:, r:])
        flat = int(sub.argmax())
        pi, pj = divmod(flat, sub.shape[1])
        if sub[pi, pj] <= threshold:
            break
        pi += r
        pj += r
        if pi != r:
            work[[r, pi]] = work[[pi, r]]
        if pj != r:
            work[:, [r, pj]] = work[:, [pj, r]]
        pivot = work[r, r]
        for i in range(r + 1, nrows):
            if work[i, r] != 0.0:
                work[i, r:] -= (work[i, r] / pivot) * work[r, r:]
        r += 1
    return r


def cv_ebit_count(h: RealCheckMatrix) -> int:
    """Entangled modes consumed by a real generator set.

    The product matrix is formed once and antisymmetrized analytically,
    so antisymmetry holds exactly in floating point; the even-rank check
    still runs before halving.
    """
    half = h.hx @ h.hz.T
    omega = half - half.T
    skew_defect = np.abs(omega + omega.T).max() if omega.size else 0.0
    if skew_defect != 0.0:
        raise InternalInvariantError("real product matrix lost exact antisymmetry")
    r = numerical_rank(omega, h.tolerance)
    if r % 2:
        raise InternalInvariantError(f"real product matrix has odd numerical rank {r}")
    return r // 2
