"""Edit counts for qudit generator sets over a prime modulus.

The qudit analogue replaces the XOR in the pairwise product with
subtraction mod d, giving an antisymmetric matrix over Z_d whose rank is
even; half of it is the number of maximally entangled d-level pairs the
generators consume.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import InternalInvariantError, ShapeError, UnsupportedModulusError

__all__ = ["ModMatrix", "mod_rank", "qudit_ebits"]


def _is_prime(d: int) -> bool:
    if d < 2:
        return False
    if d < 4:
        return True
    if d % 2 == 0:
        return False
    f = 3
    while f * f <= d:
        if d % f == 0:
            return False
        f += 2
    return True


class ModMatrix:
    """Immutable matrix of residues modulo a prime."""

    __slots__ = ("_entries", "modulus")

    def __init__(self, entries: np.ndarray | Sequence[Sequence[int]], modulus: int):
        if not _is_prime(modulus):
            raise UnsupportedModulusError(
                f"modulus {modulus} is not prime; rank over Z_d needs a field"
            )
        arr = np.array(entries, dtype=np.int64) % modulus
        if arr.ndim != 2:
            raise ShapeError("ModMatrix needs a 2-D entry grid")
        arr.setflags(write=False)
        self._entries = arr
        self.modulus = modulus

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], modulus: int) -> "ModMatrix":
        if rows:
            return cls(rows, modulus)
        return cls(np.zeros((0, 0), dtype=np.int64), modulus)

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def cols(self) -> int:
        return self._entries.shape[1]

    def entry(self, i: int, j: int) -> int:
        return int(self._entries[i, j])

    def to_array(self) -> np.ndarray:
        return self._entries.copy()

    def scale_row(self, i: int, factor: int) -> "ModMatrix":
        out = self.to_array()
        out[i] = (out[i] * factor) % self.modulus
        return ModMatrix(out, self.modulus)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModMatrix):
            return NotImplemented
        return self.modulus == other.modulus and bool(
            np.array_equal(self._entries, other._entries)
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self._entries.shape, self._entries.tobytes()))

    def __repr__(self) -> str:
        return f"ModMatrix({self.rows}x{self.cols} mod {self.modulus})"


def mod_rank(m: ModMatrix) -> int:
    """Rank over the field Z_d via elimination with modular inverses."""
    d = m.modulus
    work = m.to_array()
    nrows, ncols = work.shape
    pivot_row = 0
    for col in range(ncols):
        hit = None
        for r in range(pivot_row, nrows):
            if work[r, col]:
                hit = r
                break
        if hit is None:
            continue
        if hit != pivot_row:
            work[[pivot_row, hit]] = work[[hit, pivot_row]]
        inv = pow(int(work[pivot_row, col]), -1, d)
        work[pivot_row] = (work[pivot_row] * inv) % d
        for r in range(nrows):
            if r != pivot_row and work[r, col]:
                work[r] = (work[r] - work[r, col] * work[pivot_row]) % d
        pivot_row += 1
        if pivot_row == nrows:
            break
    return pivot_row


def qudit_ebits(hz: ModMatrix, hx: ModMatrix) -> int:
    """Edits consumed by a qudit generator set (HZ | HX) over prime d.

    Half the Z_d rank of HX @ HZ^T - HZ @ HX^T; antisymmetry and even
    rank are verified, never assumed.
    """
    if hz.modulus != hx.modulus:
        raise ShapeError(f"moduli differ: {hz.modulus} vs {hx.modulus}")
    if (hz.rows, hz.cols) != (hx.rows, hx.cols):
        raise ShapeError("Z and X parts must have identical shape")
    d = hz.modulus
    a = hz.to_array()
    b = hx.to_array()
    omega = (b @ a.T - a @ b.T) % d
    if np.any((omega + omega.T) % d):
        raise InternalInvariantError("qudit product matrix is not antisymmetric")
    r = mod_rank(ModMatrix(omega, d))
    if r % 2:
        raise InternalInvariantError(f"qudit product matrix has odd rank {r}")
    return r // 2
