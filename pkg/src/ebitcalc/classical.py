"""Imports of classical block codes as entanglement-assisted generator sets.

Two binary parity checks become pure-Z and pure-X generator blocks; a
quaternary parity check expands through the standard isomorphism between
GF(4) symbols and symplectic bit pairs.
"""

from __future__ import annotations

from .errors import ShapeError
from .gf2 import BinMatrix, rank
from .gf4 import GF4Matrix, OMEGA, OMEGA_BAR, gf4_rank, _MUL
from .symplectic import CodeParameters, QuantumCheckMatrix

__all__ = [
    "css_construct",
    "css_ebits",
    "css_parameters",
    "gf4_symplectic_rows",
    "gf4_to_binary",
    "gf4_ebits",
    "gf4_parameters",
]


def css_construct(h1: BinMatrix, h2: BinMatrix) -> QuantumCheckMatrix:
    """Block generator set from two parity checks over the same length.

    Rows of ``h1`` become pure-Z generators (bit flips), rows of ``h2``
    pure-X generators (phase flips).
    """
    if h1.cols != h2.cols:
        raise ShapeError(
            f"parity checks have different lengths: {h1.cols} vs {h2.cols}"
        )
    n = h1.cols
    hz = h1.vstack(BinMatrix.zeros(h2.rows, n))
    hx = BinMatrix.zeros(h1.rows, n).vstack(h2)
    return QuantumCheckMatrix(hz, hx)


def css_ebits(h1: BinMatrix, h2: BinMatrix) -> int:
    """Ebits consumed by the two-parity-check import: rank of h1 @ h2^T."""
    if h1.cols != h2.cols:
        raise ShapeError(
            f"parity checks have different lengths: {h1.cols} vs {h2.cols}"
        )
    return rank(h1 @ h2.transpose())


def css_parameters(
    h1: BinMatrix,
    h2: BinMatrix,
    d1: int | None = None,
    d2: int | None = None,
) -> CodeParameters:
    """Parameters of the two-parity-check import.

    Code dimensions are inferred from parity-check ranks, not trusted
    from any header.  The distance is min(d1, d2) when both are given.
    """
    c = css_ebits(h1, h2)
    n = h1.cols
    r1 = rank(h1)
    r2 = rank(h2)
    distance = min(d1, d2) if d1 is not None and d2 is not None else None
    return CodeParameters(
        n=n,
        logical=(n - r1) + (n - r2) - n + c,
        ebits=c,
        ancillas=r1 + r2 - 2 * c,
        distance=distance,
    )


# Bit decomposition of a GF(4) element over the basis {w, v}: the w
# coefficient feeds the X part, the v coefficient the Z part.
_X_COEFF = (0, 1, 1, 0)
_Z_COEFF = (0, 1, 0, 1)


def gf4_symplectic_rows(h: GF4Matrix) -> tuple[BinMatrix, BinMatrix]:
    """Raw binary (Z, X) expansion of the stacked [w*H; v*H] block.

    No generator-set validation happens here; see :func:`gf4_to_binary`.
    """
    z_words = []
    x_words = []
    for scale in (OMEGA, OMEGA_BAR):
        row_mul = _MUL[scale]
        for i in range(h.rows):
            z_word = 0
            x_word = 0
            for j in range(h.cols):
                e = row_mul[h.entry(i, j)]
                z_word |= _Z_COEFF[e] << j
                x_word |= _X_COEFF[e] << j
            z_words.append(z_word)
            x_words.append(x_word)
    return (
        BinMatrix(2 * h.rows, h.cols, z_words),
        BinMatrix(2 * h.rows, h.cols, x_words),
    )


def gf4_to_binary(h: GF4Matrix, drop_dependent: bool = False) -> QuantumCheckMatrix:
    """Generator set imported from a quaternary parity check.

    The 2r binary rows are independent exactly when the r quaternary
    rows are; a dependent input raises unless ``drop_dependent`` is set.
    """
    hz, hx = gf4_symplectic_rows(h)
    if drop_dependent:
        return QuantumCheckMatrix.reduced(hz, hx)
    return QuantumCheckMatrix(hz, hx)


def gf4_ebits(h: GF4Matrix) -> int:
    """Ebits consumed by the quaternary import: rank over GF(4) of H @ H†."""
    return gf4_rank(h @ h.conj_transpose())


def gf4_parameters(h: GF4Matrix) -> CodeParameters:
    """Parameters of the quaternary import; dimension inferred from rank.

    No distance is reported for quaternary imports.
    """
    c = gf4_ebits(h)
    n = h.cols
    k = n - gf4_rank(h)
    return CodeParameters(
        n=n,
        logical=2 * k - n + c,
        ebits=c,
        ancillas=2 * (n - k) - 2 * c,
        distance=None,
    )
