"""The dense reference implementations and the pinned PRNG."""

import pytest
from gmpy2 import mpq

from monomat.membership import nonnegative_on_halfline
from monomat.monomial import cyclic_block, from_dense, to_dense
from monomat.oracle import (
    SplitMix64,
    dense_horner_eval,
    dense_multiply,
    dense_power,
    identity_dense,
    random_monomial,
    refutation_grid,
    sample_refute_halfline,
)
from monomat.permutation import Permutation, cyclic, to_matrix
from monomat.polynomial import Polynomial, parse_polynomial


class TestSplitMix64:
    def test_reference_sequence(self):
        # canonical splitmix64 outputs for seed 0
        rng = SplitMix64(0)
        assert [rng.next_u64() for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_determinism(self):
        a = SplitMix64(987654321)
        b = SplitMix64(987654321)
        assert [a.next_u64() for _ in range(10)] == [b.next_u64() for _ in range(10)]

    def test_below(self):
        rng = SplitMix64(3)
        draws = [rng.below(7) for _ in range(100)]
        assert all(0 <= d < 7 for d in draws)
        with pytest.raises(ValueError):
            rng.below(0)


class TestDenseMultiply:
    def test_identity_neutral(self):
        m = to_dense(cyclic_block((3, 5, 2, 1)))
        assert dense_multiply(identity_dense(4), m) == m
        assert dense_multiply(m, identity_dense(4)) == m

    def test_cycle_squared(self):
        # C_3 @ C_3 is the matrix of the permutation (3, 1, 2); by hand
        got = dense_multiply(to_matrix(cyclic(3)), to_matrix(cyclic(3)))
        assert got == to_matrix(Permutation((3, 1, 2)))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            dense_multiply(identity_dense(2), identity_dense(3))

    def test_agrees_with_monomial_product(self):
        rng = SplitMix64(64)
        for _ in range(50):
            n = 1 + rng.below(7)
            a = random_monomial(rng.next_u64(), n)
            b = random_monomial(rng.next_u64(), n)
            from monomat.monomial import multiply

            assert dense_multiply(to_dense(a), to_dense(b)) == to_dense(multiply(a, b))


class TestDensePower:
    def test_zeroth_power(self):
        m = to_dense(random_monomial(5, 6))
        assert dense_power(m, 0) == identity_dense(6)

    def test_first_power(self):
        m = to_dense(random_monomial(6, 5))
        assert dense_power(m, 1) == m

    def test_worked_example_fourth_power(self):
        # one full cycle of the order-4 block: 30 times the identity
        m = to_dense(cyclic_block((3, 5, 2, 1)))
        assert dense_power(m, 4) == tuple(
            tuple(mpq(30) if i == j else mpq(0) for j in range(4)) for i in range(4)
        )

    def test_internal_consistency_with_multiply(self):
        m = to_dense(random_monomial(7, 4))
        acc = identity_dense(4)
        for j in range(6):
            assert dense_power(m, j) == acc
            acc = dense_multiply(acc, m)


class TestDenseHorner:
    def test_constant(self):
        m = to_dense(random_monomial(8, 3))
        assert dense_horner_eval(Polynomial.constant(7), m) == tuple(
            tuple(mpq(7) if i == j else mpq(0) for j in range(3)) for i in range(3)
        )

    def test_monomial_term_is_power(self):
        m = to_dense(random_monomial(9, 4))
        for k in (0, 1, 3, 6):
            assert dense_horner_eval(Polynomial.term(1, k), m) == dense_power(m, k)

    def test_zero_polynomial(self):
        m = identity_dense(2)
        assert dense_horner_eval(Polynomial.zero(), m) == (
            (mpq(0), mpq(0)),
            (mpq(0), mpq(0)),
        )

    def test_worked_example_adjudication(self):
        # ground truth for the cubic coefficient of the worked example: the
        # entry at (1, 4) is c3 * 3 * 5 * 2, and c3 comes out 4 * 30**3,
        # not the 30**3 a dropped factor would give
        p = parse_polynomial("t^20 + 4*t^15 + 2*t^8 + 3*t^2 + t + 5")
        m = to_dense(cyclic_block((3, 5, 2, 1)))
        result = dense_horner_eval(p, m)
        assert result[0][3] / (3 * 5 * 2) == 4 * mpq(30) ** 3 == 108000


class TestRandomMonomial:
    def test_seed_determinism(self):
        assert random_monomial(31337, 9) == random_monomial(31337, 9)
        assert random_monomial(31337, 9) != random_monomial(31338, 9)

    def test_values_positive(self):
        for seed in range(50):
            assert random_monomial(seed, 7).is_nonnegative

    def test_value_bound_respected(self):
        for seed in range(50):
            a = random_monomial(seed, 6, value_bound=4)
            for v in a.values:
                assert 1 <= v.numerator <= 4 and 1 <= v.denominator <= 4

    def test_round_trip_bulk(self):
        for seed in range(10_000):
            a = random_monomial(seed, 6)
            assert from_dense(to_dense(a)) == a

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            random_monomial(0, 0)
        with pytest.raises(ValueError):
            random_monomial(0, 3, value_bound=0)


class TestSampleRefuter:
    def test_finds_dip_of_linear(self):
        witness = sample_refute_halfline(parse_polynomial("t - 1"), points=200)
        assert witness is not None and 0 < witness < 1

    def test_no_witness_for_square(self):
        assert sample_refute_halfline(parse_polynomial("t^2 - 2*t + 1")) is None

    def test_grid_is_deterministic_and_spans_scales(self):
        p = parse_polynomial("t^2 + 1")
        grid = refutation_grid(p, 500)
        assert grid == refutation_grid(p, 500)
        assert all(g > 0 for g in grid)
        assert min(grid) <= mpq(1, 2**20)
        assert max(grid) >= 2**20

    def test_witness_implies_decider_false(self):
        rng = SplitMix64(414)
        from conftest import random_polynomial

        agreements = 0
        for _ in range(200):
            p = random_polynomial(rng, 10)
            witness = sample_refute_halfline(p, points=300)
            if witness is not None:
                assert not nonnegative_on_halfline(p).member
                agreements += 1
        assert agreements > 40
