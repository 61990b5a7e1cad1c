"""GF(4) scalar arithmetic and dense quaternary matrices.

Field elements are plain ints 0..3 encoding {0, 1, w, v} where ``w`` is a
primitive cube root of unity and ``v = w + 1 = w*w`` its conjugate.
Addition is XOR; multiplication is a 16-entry table; conjugation is
squaring.  Matrices wrap read-only numpy uint8 arrays.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import ShapeError

__all__ = [
    "ZERO",
    "ONE",
    "OMEGA",
    "OMEGA_BAR",
    "gf4_add",
    "gf4_mul",
    "gf4_inv",
    "gf4_conj",
    "gf4_trace",
    "GF4Matrix",
    "gf4_rank",
]

ZERO, ONE, OMEGA, OMEGA_BAR = 0, 1, 2, 3

# w*w = v, w*v = 1, v*v = w
_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)
_INV = (None, 1, 3, 2)
_CONJ = (0, 1, 3, 2)
_TRACE = (0, 0, 1, 1)

MUL_TABLE = np.array(_MUL, dtype=np.uint8)
CONJ_TABLE = np.array(_CONJ, dtype=np.uint8)

_SYMBOLS = "01wv"
SYMBOL_TO_VALUE = {ch: i for i, ch in enumerate(_SYMBOLS)}


def gf4_add(a: int, b: int) -> int:
    return a ^ b


def gf4_mul(a: int, b: int) -> int:
    return _MUL[a][b]


def gf4_inv(a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in GF(4)")
    return _INV[a]


def gf4_conj(a: int) -> int:
    """Conjugation x -> x^2; fixes 0 and 1, swaps w and v."""
    return _CONJ[a]


def gf4_trace(a: int) -> int:
    """tr(x) = x + conj(x), always 0 or 1."""
    return _TRACE[a]


class GF4Matrix:
    """Immutable rectangular matrix over GF(4)."""

    __slots__ = ("_entries",)

    def __init__(self, entries: np.ndarray | Sequence[Sequence[int]]):
        arr = np.array(entries, dtype=np.uint8)
        if arr.ndim != 2:
            raise ShapeError("GF4Matrix needs a 2-D entry grid")
        if arr.size and arr.max() > 3:
            raise ValueError("GF(4) entries must be in 0..3")
        arr.setflags(write=False)
        self._entries = arr

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GF4Matrix":
        return cls(rows if rows else np.zeros((0, 0), dtype=np.uint8))

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "GF4Matrix":
        """Build from strings over the alphabet 0, 1, w, v."""
        rows = [[SYMBOL_TO_VALUE[ch] for ch in line] for line in lines]
        return cls.from_rows(rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "GF4Matrix":
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> "GF4Matrix":
        return cls(np.eye(n, dtype=np.uint8))

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

    def transpose(self) -> "GF4Matrix":
        return GF4Matrix(self._entries.T)

    def conj(self) -> "GF4Matrix":
        return GF4Matrix(CONJ_TABLE[self._entries])

    def conj_transpose(self) -> "GF4Matrix":
        return GF4Matrix(CONJ_TABLE[self._entries].T)

    def __add__(self, other: "GF4Matrix") -> "GF4Matrix":
        if self._entries.shape != other._entries.shape:
            raise ShapeError("cannot add GF(4) matrices of different shapes")
        return GF4Matrix(self._entries ^ other._entries)

    def __matmul__(self, other: "GF4Matrix") -> "GF4Matrix":
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return GF4Matrix.zeros(self.rows, other.cols)
        products = MUL_TABLE[self._entries[:, :, None], other._entries[None, :, :]]
        return GF4Matrix(np.bitwise_xor.reduce(products, axis=1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF4Matrix):
            return NotImplemented
        return self._entries.shape == other._entries.shape and bool(
            np.array_equal(self._entries, other._entries)
        )

    def __hash__(self) -> int:
        return hash((self._entries.shape, self._entries.tobytes()))

    def __repr__(self) -> str:
        return f"GF4Matrix({self.rows}x{self.cols})"

    def __str__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return repr(self)
        return "\n".join(
            "".join(_SYMBOLS[v] for v in row) for row in self._entries
        )


def gf4_rank(m: GF4Matrix) -> int:
    """Rank over GF(4) by Gaussian elimination.

    Same deterministic pivot rule as the GF(2) routines: sweep columns
    left to right, swap the first unprocessed row holding a nonzero
    entry up, scale it to 1, clear the column everywhere else.
    """
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
        inv = _INV[work[pivot_row, col]]
        work[pivot_row] = MUL_TABLE[inv, work[pivot_row]]
        for r in range(nrows):
            if r != pivot_row and work[r, col]:
                work[r] ^= MUL_TABLE[work[r, col], work[pivot_row]]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return pivot_row
