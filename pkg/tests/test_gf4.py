"""Tests for GF(4) scalar arithmetic and quaternary matrices."""

import itertools
import random

import pytest

from ebitcalc import (
    GF4Matrix,
    OMEGA,
    OMEGA_BAR,
    ONE,
    ZERO,
    ShapeError,
    gf4_add,
    gf4_conj,
    gf4_inv,
    gf4_mul,
    gf4_rank,
    gf4_trace,
)
from ebitcalc.verify import gf4_rank_by_span_enumeration, random_gf4_matrix

ELEMENTS = (ZERO, ONE, OMEGA, OMEGA_BAR)


def test_field_axioms_exhaustive():
    for a, b in itertools.product(ELEMENTS, repeat=2):
        assert gf4_add(a, b) == gf4_add(b, a)
        assert gf4_mul(a, b) == gf4_mul(b, a)
    for a, b, c in itertools.product(ELEMENTS, repeat=3):
        assert gf4_mul(a, gf4_mul(b, c)) == gf4_mul(gf4_mul(a, b), c)
        assert gf4_add(a, gf4_add(b, c)) == gf4_add(gf4_add(a, b), c)
        assert gf4_mul(a, gf4_add(b, c)) == gf4_add(gf4_mul(a, b), gf4_mul(a, c))
    for a in ELEMENTS:
        assert gf4_add(a, a) == ZERO  # characteristic 2
        assert gf4_mul(a, ONE) == a
        if a != ZERO:
            assert gf4_mul(a, gf4_inv(a)) == ONE


def test_omega_relations():
    assert gf4_mul(OMEGA, OMEGA) == OMEGA_BAR  # w^2 = v
    assert gf4_add(OMEGA, ONE) == OMEGA_BAR  # v = w + 1
    assert gf4_mul(OMEGA, gf4_mul(OMEGA, OMEGA)) == ONE  # w^3 = 1
    assert gf4_mul(OMEGA, OMEGA_BAR) == ONE


def test_conjugation_is_squaring():
    for a in ELEMENTS:
        assert gf4_conj(a) == gf4_mul(a, a)
    assert gf4_conj(OMEGA) == OMEGA_BAR
    assert gf4_conj(OMEGA_BAR) == OMEGA
    assert gf4_conj(ZERO) == ZERO
    assert gf4_conj(ONE) == ONE


def test_trace_values():
    assert [gf4_trace(a) for a in ELEMENTS] == [0, 0, 1, 1]
    for a in ELEMENTS:
        assert gf4_trace(a) == gf4_add(a, gf4_conj(a))


def test_inverse_of_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        gf4_inv(ZERO)


def test_matrix_string_round_trip():
    m = GF4Matrix.from_strings(["10w1", "01vw"])
    assert str(m).split("\n") == ["10w1", "01vw"]
    assert m.entry(1, 2) == OMEGA_BAR


def test_conj_transpose():
    m = GF4Matrix.from_strings(["0w", "v1"])
    assert m.conj_transpose() == GF4Matrix.from_strings(["0w", "v1"]).conj().transpose()
    assert m.conj_transpose() == GF4Matrix.from_strings(["0w", "v1"])  # happens to be Hermitian
    assert GF4Matrix.from_strings(["w1"]).conj_transpose() == GF4Matrix.from_strings(
        ["v", "1"]
    )


@pytest.mark.parametrize("seed", range(10))
def test_matmul_matches_scalar_loop(seed):
    rng = random.Random(seed)
    a = random_gf4_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
    b = random_gf4_matrix(rng, a.cols, rng.randint(1, 5))
    product = a @ b
    for i in range(a.rows):
        for j in range(b.cols):
            acc = ZERO
            for k in range(a.cols):
                acc = gf4_add(acc, gf4_mul(a.entry(i, k), b.entry(k, j)))
            assert product.entry(i, j) == acc


def test_matmul_shape_mismatch():
    with pytest.raises(ShapeError):
        GF4Matrix.zeros(2, 3) @ GF4Matrix.zeros(2, 3)


def test_rank_examples():
    assert gf4_rank(GF4Matrix.identity(2)) == 2
    # [w] and [v] rows are proportional
    assert gf4_rank(GF4Matrix.from_strings(["w", "v"])) == 1
    assert gf4_rank(GF4Matrix.zeros(3, 3)) == 0


def test_rank_proportional_rows_oracle_value():
    # enumeration fixes the ground truth: second row is v times the first
    m = GF4Matrix.from_strings(["1w", "v1"])
    assert gf4_rank_by_span_enumeration(m) == 1
    assert gf4_rank(m) == 1


@pytest.mark.parametrize("seed", range(20))
def test_rank_matches_span_enumeration(seed):
    rng = random.Random(500 + seed)
    m = random_gf4_matrix(rng, rng.randint(1, 6), rng.randint(1, 7))
    assert gf4_rank(m) == gf4_rank_by_span_enumeration(m)


@pytest.mark.parametrize("seed", range(8))
def test_rank_transpose_invariant(seed):
    rng = random.Random(900 + seed)
    m = random_gf4_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
    assert gf4_rank(m) == gf4_rank(m.transpose())


def test_entries_validated():
    with pytest.raises(ValueError):
        GF4Matrix.from_rows([[0, 4]])
