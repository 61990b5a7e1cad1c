"""Delay-polynomial matrices and per-frame ebit counts for convolutional codes.

Entries are polynomials in the delay operator D and its inverse with
GF(4) coefficients; binary matrices are the {0, 1}-coefficient subset,
and their rank over the rational-function field is unchanged by the
coefficient extension, so one elimination routine serves both.  The
per-frame formulas here are conjectured, not proven; callers surfacing
results should say so.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DegreeLimitError, InternalInvariantError, ShapeError
from .gf2 import BinMatrix
from .gf4 import GF4Matrix, _CONJ, _MUL

__all__ = [
    "MAX_EXPONENT",
    "LaurentPoly",
    "LaurentMatrix",
    "LaurentCheckMatrix",
    "shifted_symplectic_matrix",
    "laurent_rank",
    "conv_ebits",
    "gf4_conv_ebits",
    "css_conv_ebits",
]

MAX_EXPONENT = 64

_COEFF_PREFIX = {1: "", 2: "w*", 3: "v*"}
_COEFF_SYMBOL = {1: "1", 2: "w", 3: "v"}


class LaurentPoly:
    """Immutable polynomial in D and D^-1 with GF(4) coefficients.

    Zero coefficients are never stored; the zero polynomial has empty
    support.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        cleaned: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exponent, coeff in items:
            if not 0 <= coeff <= 3:
                raise ValueError(f"coefficient {coeff!r} is not a GF(4) element")
            if coeff:
                prior = cleaned.get(exponent, 0)
                merged = prior ^ coeff
                if merged:
                    cleaned[exponent] = merged
                elif exponent in cleaned:
                    del cleaned[exponent]
        self._terms = cleaned

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._raw({0: 1})

    @classmethod
    def delay(cls, exponent: int = 1, coeff: int = 1) -> "LaurentPoly":
        """coeff * D^exponent."""
        if not 0 <= coeff <= 3:
            raise ValueError(f"coefficient {coeff!r} is not a GF(4) element")
        return cls._raw({exponent: coeff} if coeff else {})

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "LaurentPoly":
        """Binary polynomial with 1-coefficients at the given exponents."""
        return cls((e, 1) for e in exponents)

    # -- inspection ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def min_exp(self) -> int | None:
        return min(self._terms) if self._terms else None

    def max_exp(self) -> int | None:
        return max(self._terms) if self._terms else None

    def is_binary(self) -> bool:
        return all(c == 1 for c in self._terms.values())

    # -- ring operations -----------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._terms)
        for e, c in other._terms.items():
            merged = out.get(e, 0) ^ c
            if merged:
                out[e] = merged
            elif e in out:
                del out[e]
        return LaurentPoly._raw(out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            mul_row = _MUL[c1]
            for e2, c2 in other._terms.items():
                e = e1 + e2
                merged = out.get(e, 0) ^ mul_row[c2]
                if merged:
                    out[e] = merged
                elif e in out:
                    del out[e]
        return LaurentPoly._raw(out)

    def scaled(self, coeff: int) -> "LaurentPoly":
        if coeff == 0:
            return LaurentPoly.zero()
        mul_row = _MUL[coeff]
        return LaurentPoly._raw({e: mul_row[c] for e, c in self._terms.items()})

    def shifted(self, delta: int) -> "LaurentPoly":
        """Multiply by D^delta."""
        return LaurentPoly._raw({e + delta: c for e, c in self._terms.items()})

    def subs_inverse(self) -> "LaurentPoly":
        """Substitute D -> D^-1 (negate every exponent)."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def conj(self) -> "LaurentPoly":
        """Conjugate every coefficient."""
        return LaurentPoly._raw({e: _CONJ[c] for e, c in self._terms.items()})

    # -- housekeeping ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            if e == 0:
                parts.append(_COEFF_SYMBOL[c])
            elif e == 1:
                parts.append(f"{_COEFF_PREFIX[c]}D")
            else:
                parts.append(f"{_COEFF_PREFIX[c]}D^{e}")
        return "+".join(parts)


def _check_support(entries: Sequence[Sequence[LaurentPoly]]) -> None:
    for i, row in enumerate(entries):
        for j, poly in enumerate(row):
            lo, hi = poly.min_exp(), poly.max_exp()
            if lo is not None and (lo < -MAX_EXPONENT or hi > MAX_EXPONENT):
                raise DegreeLimitError(
                    f"entry ({i},{j}) has exponents outside [-{MAX_EXPONENT}, {MAX_EXPONENT}]"
                )


class LaurentMatrix:
    """Immutable rectangular matrix of delay polynomials."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(
        self,
        entries: Sequence[Sequence[LaurentPoly]],
        cols: int | None = None,
        check_support: bool = True,
    ):
        grid = tuple(tuple(row) for row in entries)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        for i, row in enumerate(grid):
            if len(row) != cols:
                raise ShapeError(f"row {i} has {len(row)} entries, expected {cols}")
        if check_support:
            _check_support(grid)
        self.rows = len(grid)
        self.cols = cols
        self._entries = grid

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "LaurentMatrix":
        zero = LaurentPoly.zero()
        return cls(tuple((zero,) * cols for _ in range(rows)), cols=cols)

    @classmethod
    def from_constant_binary(cls, m: BinMatrix) -> "LaurentMatrix":
        one = LaurentPoly.one()
        zero = LaurentPoly.zero()
        return cls(
            tuple(
                tuple(one if m.entry(i, j) else zero for j in range(m.cols))
                for i in range(m.rows)
            ),
            cols=m.cols,
        )

    @classmethod
    def from_constant_gf4(cls, m: GF4Matrix) -> "LaurentMatrix":
        return cls(
            tuple(
                tuple(LaurentPoly.delay(0, m.entry(i, j)) for j in range(m.cols))
                for i in range(m.rows)
            ),
            cols=m.cols,
        )

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self._entries[i][j]

    def row(self, i: int) -> tuple[LaurentPoly, ...]:
        return self._entries[i]

    def is_binary(self) -> bool:
        return all(p.is_binary() for row in self._entries for p in row)

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self._entries for p in row)

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix(
            tuple(
                tuple(self._entries[i][j] for i in range(self.rows))
                for j in range(self.cols)
            ),
            cols=self.rows,
            check_support=False,
        )

    def subs_inverse(self) -> "LaurentMatrix":
        return LaurentMatrix(
            tuple(tuple(p.subs_inverse() for p in row) for row in self._entries),
            cols=self.cols,
            check_support=False,
        )

    def conj(self) -> "LaurentMatrix":
        return LaurentMatrix(
            tuple(tuple(p.conj() for p in row) for row in self._entries),
            cols=self.cols,
            check_support=False,
        )

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("cannot add delay matrices of different shapes")
        return LaurentMatrix(
            tuple(
                tuple(a + b for a, b in zip(r1, r2))
                for r1, r2 in zip(self._entries, other._entries)
            ),
            cols=self.cols,
            check_support=False,
        )

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = LaurentPoly.zero()
                for k in range(self.cols):
                    left = self._entries[i][k]
                    right = other._entries[k][j]
                    if left and right:
                        acc = acc + left * right
                row.append(acc)
            out.append(tuple(row))
        return LaurentMatrix(tuple(out), cols=other.cols, check_support=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._entries) == (
            other.rows,
            other.cols,
            other._entries,
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        return f"LaurentMatrix({self.rows}x{self.cols})"

    def __str__(self) -> str:
        return "\n".join(", ".join(str(p) for p in row) for row in self._entries)


@dataclass(frozen=True)
class LaurentCheckMatrix:
    """Convolutional generator set as a (Z part, X part) pair per frame.

    Generators need not commute frame-to-frame; no independence
    condition is imposed.
    """

    hz: LaurentMatrix
    hx: LaurentMatrix

    def __post_init__(self):
        if (self.hz.rows, self.hz.cols) != (self.hx.rows, self.hx.cols):
            raise ShapeError("Z and X parts must have identical shape")
        _check_support(self.hz._entries)
        _check_support(self.hx._entries)

    @property
    def n(self) -> int:
        return self.hz.cols

    @property
    def generators(self) -> int:
        return self.hz.rows

    @classmethod
    def from_constant(cls, hz: BinMatrix, hx: BinMatrix) -> "LaurentCheckMatrix":
        return cls(
            LaurentMatrix.from_constant_binary(hz),
            LaurentMatrix.from_constant_binary(hx),
        )


def shifted_symplectic_matrix(h: LaurentCheckMatrix) -> LaurentMatrix:
    """Pairwise products with the partner row evaluated at D^-1.

    The result satisfies M(D) == M^T(D^-1) entrywise, the shifted
    analogue of symmetry; that identity is verified on every call.
    """
    omega = (
        h.hx @ h.hz.subs_inverse().transpose()
        + h.hz @ h.hx.subs_inverse().transpose()
    )
    if omega != omega.transpose().subs_inverse():
        raise InternalInvariantError("shifted product matrix lost shifted symmetry")
    return omega


def _normalized_row(row: Sequence[LaurentPoly]) -> tuple[LaurentPoly, ...]:
    """Shift a row by a power of D so its lowest exponent is zero."""
    lows = [p.min_exp() for p in row if p]
    if not lows:
        return tuple(row)
    shift = -min(lows)
    if shift == 0:
        return tuple(row)
    return tuple(p.shifted(shift) for p in row)


def laurent_rank(m: LaurentMatrix) -> int:
    """Rank over the field of rational functions in D.

    Rows are first multiplied by powers of D to clear negative
    exponents (units of the Laurent ring, rank-neutral).  Elimination is
    fraction-free: the pivot is the lowest-degree nonzero entry in the
    pivot column, and each lower row is replaced by
    ``pivot * row + entry * pivot_row``, which stays in the polynomial
    ring; rows are re-normalized after every step to keep degrees small.
    """
    work = [list(_normalized_row(row)) for row in m._entries]
    nrows, ncols = m.rows, m.cols
    pivot_row = 0
    for col in range(ncols):
        best = None
        best_deg = None
        for r in range(pivot_row, nrows):
            p = work[r][col]
            if p:
                deg = p.max_exp()
                if best is None or deg < best_deg:
                    best, best_deg = r, deg
        if best is None:
            continue
        if best != pivot_row:
            work[pivot_row], work[best] = work[best], work[pivot_row]
        pivot = work[pivot_row][col]
        for r in range(pivot_row + 1, nrows):
            entry = work[r][col]
            if entry:
                work[r] = list(
                    _normalized_row(
                        [
                            pivot * work[r][j] + entry * work[pivot_row][j]
                            for j in range(ncols)
                        ]
                    )
                )
        pivot_row += 1
        if pivot_row == nrows:
            break
    return pivot_row


def conv_ebits(h: LaurentCheckMatrix) -> int:
    """Conjectured ebits per frame for a convolutional generator set.

    Half the rational-function rank of the shifted product matrix; an
    odd rank raises rather than truncating.
    """
    r = laurent_rank(shifted_symplectic_matrix(h))
    if r % 2:
        raise InternalInvariantError(f"shifted product matrix has odd rank {r}")
    return r // 2


def gf4_conv_ebits(h: LaurentMatrix) -> int:
    """Conjectured per-frame ebits for a quaternary convolutional import.

    Rank of H(D) @ H†(D^-1), where † conjugate-transposes and the
    D -> D^-1 substitution applies to the conjugated transpose.
    """
    return laurent_rank(h @ h.conj().transpose().subs_inverse())


def css_conv_ebits(h1: LaurentMatrix, h2: LaurentMatrix) -> int:
    """Per-frame ebits for a convolutional import of two binary codes."""
    if h1.cols != h2.cols:
        raise ShapeError(
            f"parity checks have different lengths: {h1.cols} vs {h2.cols}"
        )
    return laurent_rank(h1 @ h2.transpose().subs_inverse())
