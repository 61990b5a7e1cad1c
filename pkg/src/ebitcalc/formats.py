"""Line-oriented text formats for every matrix kind the CLI accepts.

All formats share the same conventions: ASCII, one header line naming
the format and its dimensions, then one line per row; ``#`` starts a
comment and blank lines are ignored, so fixtures stay hand-editable.
"""

from __future__ import annotations

import numpy as np

from .errors import ParseError
from .gf2 import BinMatrix
from .gf4 import GF4Matrix, SYMBOL_TO_VALUE
from .laurent import LaurentCheckMatrix, LaurentMatrix, LaurentPoly
from .qudit import ModMatrix

__all__ = [
    "parse_gf2",
    "parse_qcheck",
    "parse_gf4",
    "parse_zmod",
    "parse_qcheckd",
    "parse_cvcheck",
    "parse_conv_pair",
    "parse_conv_plain",
    "parse_poly",
    "format_gf2",
    "format_qcheck",
    "format_conv_pair",
    "format_conv_plain",
]

_COEFF_VALUES = {"1": 1, "w": 2, "v": 3}


def _logical_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            out.append((number, content))
    return out


def _split_header(lines: list[tuple[int, str]], expected: str, ints: int) -> list[int]:
    if not lines:
        raise ParseError(f"empty file; expected header '{expected}'")
    number, content = lines[0]
    fields = content.split()
    tag = fields[0]
    if tag != expected:
        raise ParseError(f"expected header '{expected}', found '{tag}'", number)
    if len(fields) != ints + 1:
        raise ParseError(
            f"header '{expected}' needs {ints} integer fields, got {len(fields) - 1}",
            number,
        )
    try:
        return [int(f) for f in fields[1:]]
    except ValueError:
        raise ParseError(f"non-integer field in '{expected}' header", number) from None


def _take_rows(lines: list[tuple[int, str]], count: int, what: str) -> list[tuple[int, str]]:
    body = lines[1:]
    if len(body) < count:
        raise ParseError(f"expected {count} {what} rows, found {len(body)}")
    if len(body) > count:
        number, _ = body[count]
        raise ParseError(f"unexpected content after {count} {what} rows", number)
    return body


def _bits_from_string(chunk: str, width: int, number: int) -> list[int]:
    if len(chunk) != width:
        raise ParseError(f"expected {width} binary digits, got {len(chunk)}", number)
    bits = []
    for ch in chunk:
        if ch not in "01":
            raise ParseError(f"invalid binary digit {ch!r}", number)
        bits.append(int(ch))
    return bits


def parse_gf2(text: str) -> BinMatrix:
    """Binary matrix: header ``gf2 <rows> <cols>`` then 0/1 rows."""
    lines = _logical_lines(text)
    rows, cols = _split_header(lines, "gf2", 2)
    body = _take_rows(lines, rows, "matrix")
    return BinMatrix.from_rows(
        [_bits_from_string(content, cols, number) for number, content in body],
        cols=cols,
    )


def parse_qcheck(text: str) -> tuple[BinMatrix, BinMatrix]:
    """Generator set: header ``qcheck <generators> <n>`` then ``z|x`` rows.

    Returns the raw (Z, X) pair; generator validation is the caller's
    job so a dependent-row policy can apply.
    """
    lines = _logical_lines(text)
    generators, n = _split_header(lines, "qcheck", 2)
    body = _take_rows(lines, generators, "generator")
    z_rows, x_rows = [], []
    for number, content in body:
        if content.count("|") != 1:
            raise ParseError("generator row needs exactly one '|'", number)
        z_part, x_part = (side.strip() for side in content.split("|"))
        z_rows.append(_bits_from_string(z_part, n, number))
        x_rows.append(_bits_from_string(x_part, n, number))
    return (
        BinMatrix.from_rows(z_rows, cols=n),
        BinMatrix.from_rows(x_rows, cols=n),
    )


def parse_gf4(text: str) -> GF4Matrix:
    """Quaternary matrix: header ``gf4 <rows> <cols>`` then 0/1/w/v rows."""
    lines = _logical_lines(text)
    rows, cols = _split_header(lines, "gf4", 2)
    body = _take_rows(lines, rows, "matrix")
    grid = []
    for number, content in body:
        if len(content) != cols:
            raise ParseError(f"expected {cols} symbols, got {len(content)}", number)
        row = []
        for ch in content:
            if ch not in SYMBOL_TO_VALUE:
                raise ParseError(f"invalid GF(4) symbol {ch!r}", number)
            row.append(SYMBOL_TO_VALUE[ch])
        grid.append(row)
    return GF4Matrix(grid if grid else np.zeros((0, cols), dtype=np.uint8))


def _residues(chunk: str, width: int, number: int) -> list[int]:
    fields = chunk.split()
    if len(fields) != width:
        raise ParseError(f"expected {width} residues, got {len(fields)}", number)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError("non-integer residue", number) from None


def parse_zmod(text: str) -> ModMatrix:
    """Residue matrix: header ``zmod <d> <rows> <cols>`` then residue rows."""
    lines = _logical_lines(text)
    d, rows, cols = _split_header(lines, "zmod", 3)
    body = _take_rows(lines, rows, "matrix")
    grid = [_residues(content, cols, number) for number, content in body]
    if not grid:
        return ModMatrix(np.zeros((0, cols), dtype=np.int64), d)
    return ModMatrix(grid, d)


def parse_qcheckd(text: str) -> tuple[ModMatrix, ModMatrix]:
    """Qudit generator set: ``qcheckd <d> <generators> <n>``, ``z | x`` rows."""
    lines = _logical_lines(text)
    d, generators, n = _split_header(lines, "qcheckd", 3)
    body = _take_rows(lines, generators, "generator")
    z_grid, x_grid = [], []
    for number, content in body:
        if content.count("|") != 1:
            raise ParseError("generator row needs exactly one '|'", number)
        z_part, x_part = content.split("|")
        z_grid.append(_residues(z_part, n, number))
        x_grid.append(_residues(x_part, n, number))
    if not z_grid:
        empty = np.zeros((0, n), dtype=np.int64)
        return ModMatrix(empty, d), ModMatrix(empty, d)
    return ModMatrix(z_grid, d), ModMatrix(x_grid, d)


def parse_cvcheck(text: str) -> tuple[np.ndarray, np.ndarray]:
    """Real generator set: ``cvcheck <generators> <n>``, rows ``reals | reals``."""
    lines = _logical_lines(text)
    generators, n = _split_header(lines, "cvcheck", 2)
    body = _take_rows(lines, generators, "generator")
    z_grid, x_grid = [], []
    for number, content in body:
        if content.count("|") != 1:
            raise ParseError("generator row needs exactly one '|'", number)
        z_part, x_part = content.split("|")
        row = []
        for chunk, side in ((z_part, "Z"), (x_part, "X")):
            fields = chunk.split()
            if len(fields) != n:
                raise ParseError(
                    f"expected {n} reals in the {side} block, got {len(fields)}", number
                )
            try:
                row.append([float(f) for f in fields])
            except ValueError:
                raise ParseError(f"invalid real in the {side} block", number) from None
        z_grid.append(row[0])
        x_grid.append(row[1])
    shape = (generators, n)
    z = np.array(z_grid, dtype=np.float64).reshape(shape)
    x = np.array(x_grid, dtype=np.float64).reshape(shape)
    return z, x


# ---------------------------------------------------------------------------
# delay-polynomial formats


def parse_poly(token: str, gf4: bool = False, line: int | None = None) -> LaurentPoly:
    """Parse a sum of terms like ``1``, ``D``, ``D^-2``, ``w*D^3``.

    GF(4) coefficient prefixes (``w*``, ``v*``, or bare ``w``/``v``) are
    accepted only when ``gf4`` is set.
    """
    compact = "".join(token.split())
    if not compact:
        raise ParseError("empty polynomial token", line)
    if compact == "0":
        return LaurentPoly.zero()
    terms = []
    for part in compact.split("+"):
        coeff = 1
        body = part
        if "*" in part:
            prefix, _, body = part.partition("*")
            coeff = _COEFF_VALUES.get(prefix)
            if coeff is None:
                raise ParseError(f"bad coefficient {prefix!r} in term {part!r}", line)
        elif part in ("w", "v"):
            coeff = _COEFF_VALUES[part]
            body = "1"
        if coeff != 1 and not gf4:
            raise ParseError(
                f"GF(4) coefficient in term {part!r}; only conv4 files allow w and v",
                line,
            )
        if body == "1":
            exponent = 0
        elif body == "D":
            exponent = 1
        elif body.startswith("D^"):
            try:
                exponent = int(body[2:])
            except ValueError:
                raise ParseError(f"bad exponent in term {part!r}", line) from None
        else:
            raise ParseError(f"bad polynomial term {part!r}", line)
        terms.append((exponent, coeff))
    return LaurentPoly(terms)


def _poly_row(chunk: str, width: int, gf4: bool, number: int) -> list[LaurentPoly]:
    tokens = chunk.split(",")
    if len(tokens) != width:
        raise ParseError(f"expected {width} polynomial entries, got {len(tokens)}", number)
    return [parse_poly(tok, gf4=gf4, line=number) for tok in tokens]


def parse_conv_pair(text: str) -> LaurentCheckMatrix:
    """Convolutional generator set: ``conv <generators> <n>``.

    Each row holds n comma-separated polynomials for the Z block, a
    literal ``|``, then n for the X block.
    """
    lines = _logical_lines(text)
    generators, n = _split_header(lines, "conv", 2)
    body = _take_rows(lines, generators, "generator")
    z_rows, x_rows = [], []
    for number, content in body:
        if content.count("|") != 1:
            raise ParseError(
                "generator row needs one '|' between the Z and X blocks", number
            )
        z_part, x_part = content.split("|")
        z_rows.append(_poly_row(z_part, n, False, number))
        x_rows.append(_poly_row(x_part, n, False, number))
    return LaurentCheckMatrix(
        LaurentMatrix(z_rows, cols=n),
        LaurentMatrix(x_rows, cols=n),
    )


def parse_conv_plain(text: str, tag: str = "conv") -> LaurentMatrix:
    """Plain polynomial matrix: ``conv``/``conv4 <rows> <cols>``, no ``|``.

    Used for classical convolutional parity checks; ``conv4`` rows may
    carry GF(4) coefficient prefixes.
    """
    gf4 = tag == "conv4"
    lines = _logical_lines(text)
    rows, cols = _split_header(lines, tag, 2)
    body = _take_rows(lines, rows, "matrix")
    grid = []
    for number, content in body:
        if "|" in content:
            raise ParseError(
                f"'{tag}' matrix rows must not contain '|'; this file looks like a"
                " quantum Z|X pair",
                number,
            )
        grid.append(_poly_row(content, cols, gf4, number))
    return LaurentMatrix(grid, cols=cols)


# ---------------------------------------------------------------------------
# writers


def format_gf2(m: BinMatrix) -> str:
    return "\n".join([f"gf2 {m.rows} {m.cols}", *m.to_strings()]) + "\n"


def format_qcheck(hz: BinMatrix, hx: BinMatrix) -> str:
    header = f"qcheck {hz.rows} {hz.cols}"
    rows = [f"{z}|{x}" for z, x in zip(hz.to_strings(), hx.to_strings())]
    return "\n".join([header, *rows]) + "\n"


def format_conv_pair(h: LaurentCheckMatrix) -> str:
    header = f"conv {h.generators} {h.n}"
    rows = []
    for i in range(h.generators):
        z_part = ", ".join(str(h.hz.entry(i, j)) for j in range(h.n))
        x_part = ", ".join(str(h.hx.entry(i, j)) for j in range(h.n))
        rows.append(f"{z_part} | {x_part}")
    return "\n".join([header, *rows]) + "\n"


def format_conv_plain(m: LaurentMatrix, tag: str = "conv") -> str:
    header = f"{tag} {m.rows} {m.cols}"
    rows = [
        ", ".join(str(m.entry(i, j)) for j in range(m.cols)) for i in range(m.rows)
    ]
    return "\n".join([header, *rows]) + "\n"
