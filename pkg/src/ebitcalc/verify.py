"""Independent brute-force oracles and cross-check harnesses.

Every rank claim in the package can be replayed here by a different
method: span enumeration over GF(2) or GF(4), exact rational
elimination, or random evaluation of delay polynomials in a large
binary extension field.  :func:`verify_code` replays the ebit formula
against the pairing procedure (and the enumeration oracle when small
enough) on a single generator set; :func:`run_random_sweep` does so in
bulk with a fixed default seed so failures reproduce.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InternalInvariantError, SizeLimitError
from .gf2 import BinMatrix, rank, row_reduce
from .gf4 import GF4Matrix, _MUL, gf4_rank
from .laurent import LaurentMatrix
from .symplectic import (
    QuantumCheckMatrix,
    ebit_count,
    standard_form_matrix,
    symplectic_gram_schmidt,
    symplectic_product_matrix,
)

__all__ = [
    "DEFAULT_SEED",
    "VerificationReport",
    "SweepResult",
    "rank_by_span_enumeration",
    "gf4_rank_by_span_enumeration",
    "rational_rank",
    "BinaryExtField",
    "laurent_rank_by_evaluation",
    "verify_code",
    "run_random_sweep",
    "random_bin_matrix",
    "random_full_rank_matrix",
    "random_check_matrix",
    "random_gf4_matrix",
]

DEFAULT_SEED = 1729


# ---------------------------------------------------------------------------
# span-enumeration oracles


def rank_by_span_enumeration(m: BinMatrix) -> int:
    """GF(2) rank by enumerating all 2^rows row combinations.

    The span of r independent rows has exactly 2^r distinct vectors;
    counting them needs no elimination at all.
    """
    if m.rows > 20:
        raise SizeLimitError(f"span enumeration limited to 20 rows, got {m.rows}")
    words = [m.row_bits(i) for i in range(m.rows)]
    if m.cols <= 63:
        span = np.zeros(1, dtype=np.uint64)
        for w in words:
            span = np.concatenate([span, span ^ np.uint64(w)])
        distinct = len(np.unique(span))
    else:
        vectors = {0}
        for w in words:
            vectors |= {v ^ w for v in vectors}
        distinct = len(vectors)
    return distinct.bit_length() - 1


def gf4_rank_by_span_enumeration(m: GF4Matrix) -> int:
    """GF(4) rank by enumerating all 4^rows row combinations."""
    if m.rows > 10:
        raise SizeLimitError(f"span enumeration limited to 10 rows, got {m.rows}")
    # Rows pack into ints two bits per entry; GF(4) addition is then a
    # plain XOR because the 2-bit lanes never carry.
    multiples = []
    for i in range(m.rows):
        per_scale = []
        for scale in range(4):
            packed = 0
            for j in range(m.cols):
                packed |= _MUL[scale][m.entry(i, j)] << (2 * j)
            per_scale.append(packed)
        multiples.append(per_scale)
    if m.cols <= 31:
        span = np.zeros(1, dtype=np.uint64)
        for per_scale in multiples:
            scaled = np.array(per_scale, dtype=np.uint64)
            span = np.concatenate([span ^ s for s in scaled])
        distinct = len(np.unique(span))
    else:
        vectors = {0}
        for per_scale in multiples:
            vectors = {v ^ s for v in vectors for s in per_scale}
        distinct = len(vectors)
    return (distinct.bit_length() - 1) // 2


def rational_rank(rows: Sequence[Sequence[int | Fraction]]) -> int:
    """Exact rank over the rationals by fraction-based elimination."""
    work = [[Fraction(x) for x in row] for row in rows]
    nrows = len(work)
    ncols = len(work[0]) if work else 0
    pivot_row = 0
    for col in range(ncols):
        hit = None
        for r in range(pivot_row, nrows):
            if work[r][col]:
                hit = r
                break
        if hit is None:
            continue
        if hit != pivot_row:
            work[pivot_row], work[hit] = work[hit], work[pivot_row]
        pivot = work[pivot_row][col]
        for r in range(pivot_row + 1, nrows):
            if work[r][col]:
                factor = work[r][col] / pivot
                work[r] = [a - factor * b for a, b in zip(work[r], work[pivot_row])]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return pivot_row


# ---------------------------------------------------------------------------
# evaluation oracle for delay-polynomial matrices

# Standard primitive polynomials, condensed exponent form.
_PRIMITIVE_POLYS = {
    8: (8, 4, 3, 2, 0),
    9: (9, 4, 0),
    10: (10, 6, 5, 3, 2, 1, 0),
    12: (12, 7, 6, 5, 3, 1, 0),
    16: (16, 5, 3, 2, 0),
}


class BinaryExtField:
    """Arithmetic in GF(2^m) for the supported degrees."""

    def __init__(self, degree: int):
        if degree not in _PRIMITIVE_POLYS:
            supported = sorted(_PRIMITIVE_POLYS)
            raise ValueError(f"degree {degree} unsupported; choose one of {supported}")
        self.degree = degree
        self.order = 1 << degree
        poly = 0
        for e in _PRIMITIVE_POLYS[degree]:
            poly |= 1 << e
        self._poly = poly

    def mul(self, a: int, b: int) -> int:
        acc = 0
        top = 1 << self.degree
        while b:
            if b & 1:
                acc ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self._poly
        return acc

    def pow(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.order - 2)

    def gf4_embedding(self) -> tuple[int, int, int, int]:
        """Images of the four GF(4) elements inside this field.

        Needs an even degree; the cube root of unity is x^((2^m - 1)/3)
        for the primitive element x.
        """
        if self.degree % 2:
            raise ValueError("GF(4) embeds only in even-degree extensions")
        w = self.pow(2, (self.order - 1) // 3)
        return (0, 1, w, self.mul(w, w))


def _field_rank(field: BinaryExtField, rows: list[list[int]]) -> int:
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(ncols):
        hit = None
        for r in range(pivot_row, nrows):
            if rows[r][col]:
                hit = r
                break
        if hit is None:
            continue
        if hit != pivot_row:
            rows[pivot_row], rows[hit] = rows[hit], rows[pivot_row]
        inv = field.inv(rows[pivot_row][col])
        for r in range(pivot_row + 1, nrows):
            if rows[r][col]:
                factor = field.mul(rows[r][col], inv)
                rows[r] = [
                    a ^ field.mul(factor, b)
                    for a, b in zip(rows[r], rows[pivot_row])
                ]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return pivot_row


def _evaluate_matrix(
    m: LaurentMatrix, field: BinaryExtField, point: int
) -> list[list[int]]:
    embed = (0, 1, 1, 1) if m.is_binary() else field.gf4_embedding()
    inv_point = field.inv(point)
    powers: dict[int, int] = {0: 1}

    def power(e: int) -> int:
        cached = powers.get(e)
        if cached is None:
            base = point if e >= 0 else inv_point
            cached = field.pow(base, abs(e))
            powers[e] = cached
        return cached

    out = []
    for i in range(m.rows):
        row = []
        for j in range(m.cols):
            total = 0
            for e, c in m.entry(i, j).terms().items():
                total ^= field.mul(embed[c], power(e))
            row.append(total)
        out.append(row)
    return out


def laurent_rank_by_evaluation(
    m: LaurentMatrix,
    trials: int = 5,
    field_degree: int = 16,
    rng: random.Random | None = None,
) -> int:
    """Max rank of M(a) over random nonzero points a in GF(2^m).

    Always a lower bound on the rational-function rank; equal with high
    probability once the field is large next to the entry degrees.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if field_degree < 8:
        raise ValueError("field degree must be at least 8")
    field = BinaryExtField(field_degree)
    if rng is None:
        rng = random.Random(DEFAULT_SEED)
    best = 0
    for _ in range(trials):
        point = rng.randrange(1, field.order)
        best = max(best, _field_rank(field, _evaluate_matrix(m, field, point)))
    return best


# ---------------------------------------------------------------------------
# formula vs procedure cross-check


@dataclass(frozen=True)
class VerificationReport:
    """One generator set checked by every applicable route."""

    subject: str
    formula_value: int
    procedure_value: int
    oracle_value: int | None
    agreement: bool
    details: str


def verify_code(h: QuantumCheckMatrix) -> VerificationReport:
    """Replay the ebit count by formula, by pairing procedure, and (for
    at most 20 generators) by span enumeration.

    Structural guarantees of the pairing procedure -- exact paired
    standard form, invertible transform, preserved row space -- are
    asserted outright; a violation raises instead of lowering the
    report's agreement flag.
    """
    formula = ebit_count(h)
    result = symplectic_gram_schmidt(h)
    procedure = result.ebits

    if symplectic_product_matrix(result.transformed) != standard_form_matrix(
        h.generators, procedure
    ):
        raise InternalInvariantError(
            "transformed products deviate from the paired standard form"
        )
    if rank(result.transform) != h.generators:
        raise InternalInvariantError("row transform is not invertible")
    if result.transform @ h.stacked() != result.transformed.stacked():
        raise InternalInvariantError("transform does not reproduce the output rows")
    if (
        row_reduce(h.stacked()).reduced
        != row_reduce(result.transformed.stacked()).reduced
    ):
        raise InternalInvariantError("row space changed under the pairing procedure")

    oracle = None
    if h.generators <= 20:
        r = rank_by_span_enumeration(symplectic_product_matrix(h))
        if r % 2:
            raise InternalInvariantError(f"enumerated product rank {r} is odd")
        oracle = r // 2

    values = {formula, procedure}
    if oracle is not None:
        values.add(oracle)
    agreement = len(values) == 1
    parts = [f"formula {formula}", f"procedure {procedure}"]
    parts.append("enumeration skipped" if oracle is None else f"enumeration {oracle}")
    details = ", ".join(parts)
    return VerificationReport(
        subject=f"{h.generators} generators on {h.n} qubits",
        formula_value=formula,
        procedure_value=procedure,
        oracle_value=oracle,
        agreement=agreement,
        details=details,
    )


@dataclass(frozen=True)
class SweepResult:
    """Aggregate of a seeded randomized verification sweep."""

    seed: int
    cases: int
    failures: tuple[str, ...]

    @property
    def agreement(self) -> bool:
        return not self.failures


def run_random_sweep(count: int, max_n: int, seed: int = DEFAULT_SEED) -> SweepResult:
    """Run :func:`verify_code` on ``count`` random generator sets.

    Qubit counts are uniform in 1..max_n and generator counts uniform in
    1..2n; the seed is recorded so any failure replays exactly.
    """
    if count < 1:
        raise ValueError("count must be positive")
    if max_n < 1:
        raise ValueError("max_n must be positive")
    rng = random.Random(seed)
    failures = []
    for index in range(count):
        n = rng.randint(1, max_n)
        generators = rng.randint(1, 2 * n)
        h = random_check_matrix(rng, n, generators)
        report = verify_code(h)
        if not report.agreement:
            failures.append(f"case {index} ({report.subject}): {report.details}")
    return SweepResult(seed=seed, cases=count, failures=tuple(failures))


# ---------------------------------------------------------------------------
# random instance generators for sweeps and tests


def random_bin_matrix(rng: random.Random, rows: int, cols: int) -> BinMatrix:
    """Uniformly random binary matrix."""
    return BinMatrix(rows, cols, (rng.getrandbits(cols) if cols else 0 for _ in range(rows)))


def random_full_rank_matrix(rng: random.Random, rows: int, cols: int) -> BinMatrix:
    """Random binary matrix with independent rows (requires rows <= cols)."""
    if rows > cols:
        raise ValueError("cannot have more independent rows than columns")
    words: list[int] = []
    basis: dict[int, int] = {}
    while len(words) < rows:
        w = rng.getrandbits(cols)
        t = w
        while t:
            p = t.bit_length() - 1
            found = basis.get(p)
            if found is None:
                basis[p] = t
                words.append(w)
                break
            t ^= found
    return BinMatrix(rows, cols, words)


def random_check_matrix(rng: random.Random, n: int, generators: int) -> QuantumCheckMatrix:
    """Random generator set with independent rows on n qubits."""
    if generators > 2 * n:
        raise ValueError(f"at most {2 * n} independent generators exist on {n} qubits")
    stacked = random_full_rank_matrix(rng, generators, 2 * n)
    return QuantumCheckMatrix.from_stacked(stacked)


def random_gf4_matrix(
    rng: random.Random, rows: int, cols: int, full_row_rank: bool = False
) -> GF4Matrix:
    """Uniformly random GF(4) matrix, optionally resampled to full row rank."""
    while True:
        m = GF4Matrix.from_rows(
            [[rng.randrange(4) for _ in range(cols)] for _ in range(rows)]
        )
        if not full_row_rank or gf4_rank(m) == rows:
            return m
