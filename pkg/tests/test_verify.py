"""Tests for the brute-force oracles and the cross-check harness."""

import random

import pytest

from ebitcalc import (
    BinMatrix,
    GF4Matrix,
    LaurentMatrix,
    LaurentPoly,
    QuantumCheckMatrix,
    SizeLimitError,
    gf4_rank,
    rank,
)
from ebitcalc.verify import (
    DEFAULT_SEED,
    BinaryExtField,
    gf4_rank_by_span_enumeration,
    laurent_rank_by_evaluation,
    random_bin_matrix,
    random_check_matrix,
    random_full_rank_matrix,
    random_gf4_matrix,
    rank_by_span_enumeration,
    rational_rank,
    run_random_sweep,
    verify_code,
)

SHIFTED_5X5 = BinMatrix.from_rows(
    [
        [0, 1, 0, 0, 0],
        [1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1],
        [0, 0, 0, 1, 0],
    ]
)


def test_span_enumeration_examples():
    assert rank_by_span_enumeration(BinMatrix.identity(3)) == 3
    assert rank_by_span_enumeration(BinMatrix.from_rows([[1, 1], [1, 1]])) == 1
    assert rank_by_span_enumeration(SHIFTED_5X5) == 4
    assert rank_by_span_enumeration(BinMatrix.zeros(0, 4)) == 0


def test_span_enumeration_size_limit():
    with pytest.raises(SizeLimitError):
        rank_by_span_enumeration(BinMatrix.zeros(21, 3))


def test_span_enumeration_wide_matrix_fallback():
    # more than 63 columns exercises the big-int path
    m = BinMatrix.identity(3).hstack(BinMatrix.zeros(3, 70))
    assert rank_by_span_enumeration(m) == 3


def test_gf4_span_enumeration_examples():
    assert gf4_rank_by_span_enumeration(GF4Matrix.identity(2)) == 2
    assert gf4_rank_by_span_enumeration(GF4Matrix.from_strings(["w", "v"])) == 1
    with pytest.raises(SizeLimitError):
        gf4_rank_by_span_enumeration(GF4Matrix.zeros(11, 2))


def test_gf4_span_enumeration_wide_matrix_fallback():
    # more than 31 columns exercises the big-int path
    rng = random.Random(3)
    m = random_gf4_matrix(rng, 3, 35)
    assert gf4_rank_by_span_enumeration(m) == gf4_rank(m)


@pytest.mark.parametrize("seed", range(20))
def test_binary_oracle_matches_elimination(seed):
    rng = random.Random(seed)
    m = random_bin_matrix(rng, rng.randint(0, 10), rng.randint(1, 12))
    assert rank_by_span_enumeration(m) == rank(m)


@pytest.mark.parametrize("seed", range(12))
def test_gf4_oracle_matches_elimination(seed):
    rng = random.Random(300 + seed)
    m = random_gf4_matrix(rng, rng.randint(1, 7), rng.randint(1, 8))
    assert gf4_rank_by_span_enumeration(m) == gf4_rank(m)


def test_rational_rank_fractions():
    assert rational_rank([[1, 2, 3], [2, 4, 6], [0, 1, 1]]) == 2
    assert rational_rank([[3]]) == 1


def test_binary_ext_field_axioms():
    field = BinaryExtField(16)
    rng = random.Random(5)
    for _ in range(50):
        a = rng.randrange(field.order)
        b = rng.randrange(field.order)
        c = rng.randrange(field.order)
        assert field.mul(a, b) == field.mul(b, a)
        assert field.mul(a, field.mul(b, c)) == field.mul(field.mul(a, b), c)
        assert field.mul(a, b ^ c) == field.mul(a, b) ^ field.mul(a, c)
        if a:
            assert field.mul(a, field.inv(a)) == 1
    assert field.pow(3, field.order - 1) == 1  # Lagrange


def test_binary_ext_field_gf4_embedding():
    field = BinaryExtField(16)
    zero, one, w, v = field.gf4_embedding()
    assert (zero, one) == (0, 1)
    assert field.mul(w, w) == v
    assert field.mul(w, v) == 1
    assert w ^ 1 == v  # v = w + 1
    # every even degree embeds GF(4); odd degrees cannot
    f8 = BinaryExtField(8)
    _, _, w8, v8 = f8.gf4_embedding()
    assert f8.mul(w8, w8) == v8
    with pytest.raises(ValueError):
        BinaryExtField(9).gf4_embedding()


def test_unsupported_field_degree():
    with pytest.raises(ValueError):
        BinaryExtField(11)


def test_evaluation_oracle_examples():
    d = LaurentPoly.from_exponents([1])
    zero = LaurentPoly.zero()
    diag = LaurentMatrix([[d, zero], [zero, LaurentPoly.from_exponents([0, 1])]])
    assert laurent_rank_by_evaluation(diag, trials=3) == 2
    assert laurent_rank_by_evaluation(LaurentMatrix.zeros(2, 2), trials=2) == 0
    constant = LaurentMatrix.from_constant_binary(SHIFTED_5X5)
    assert laurent_rank_by_evaluation(constant, trials=1) == 4
    assert laurent_rank_by_evaluation(constant, trials=1, field_degree=12) == 4


def test_evaluation_oracle_validates_arguments():
    m = LaurentMatrix.zeros(1, 1)
    with pytest.raises(ValueError):
        laurent_rank_by_evaluation(m, trials=0)
    with pytest.raises(ValueError):
        laurent_rank_by_evaluation(m, field_degree=4)


def test_verify_single_qubit_pair():
    report = verify_code(QuantumCheckMatrix.from_pauli_strings(["Z", "X"]))
    assert report.formula_value == 1
    assert report.procedure_value == 1
    assert report.oracle_value == 1
    assert report.agreement


def test_verify_five_qubit_code():
    labels = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]
    report = verify_code(QuantumCheckMatrix.from_pauli_strings(labels))
    assert (report.formula_value, report.procedure_value, report.oracle_value) == (0, 0, 0)
    assert report.agreement


def test_verify_skips_oracle_beyond_twenty_generators():
    rng = random.Random(8)
    h = random_check_matrix(rng, 11, 22)
    report = verify_code(h)
    assert report.oracle_value is None
    assert report.agreement


def test_sweep_is_reproducible():
    a = run_random_sweep(30, 6, seed=77)
    b = run_random_sweep(30, 6, seed=77)
    assert a == b
    assert a.seed == 77
    assert a.cases == 30
    assert a.agreement


def test_sweep_default_seed_recorded():
    sweep = run_random_sweep(5, 4)
    assert sweep.seed == DEFAULT_SEED


def test_thousand_case_sweep_with_oracle():
    sweep = run_random_sweep(1000, 12)
    assert sweep.cases == 1000
    assert sweep.failures == ()


def test_random_generators_validate():
    rng = random.Random(0)
    with pytest.raises(ValueError):
        random_check_matrix(rng, 2, 5)
    with pytest.raises(ValueError):
        random_full_rank_matrix(rng, 4, 3)
    m = random_full_rank_matrix(rng, 5, 9)
    assert rank(m) == 5
    g = random_gf4_matrix(rng, 3, 5, full_row_rank=True)
    assert gf4_rank(g) == 3
