"""Acceptance suite: one test per release criterion, each printing a
pass/fail line (run with ``pytest -s tests/test_acceptance.py`` to see them).

Every comparison is exact; the only tolerances anywhere are the stated
wall-clock budgets and the benchmark speedup floor.
"""

import time

import pytest
from gmpy2 import mpq

from conftest import random_polynomial, random_ps_form
from monomat.cli import main
from monomat.evaluator import block_coefficients, eval_monomial
from monomat.membership import (
    counterexample,
    nonnegative_on_halfline,
    preserves_monomial_nonnegativity,
)
from monomat.monomial import (
    MonomialMatrix,
    cyclic_block,
    cyclic_block_power,
    direct_sum,
    frobenius_normal_form,
    to_dense,
)
from monomat.oracle import (
    SplitMix64,
    dense_horner_eval,
    dense_multiply,
    identity_dense,
    random_monomial,
    sample_refute_halfline,
)
from monomat.permutation import inverse, to_matrix
from monomat.polynomial import Polynomial, parse_polynomial, parts_sum

EXAMPLE_POLY = "t^20 + 4*t^15 + 2*t^8 + 3*t^2 + t + 5"
EXAMPLE_TEXT = "4\n0 3 0 0\n0 0 5 0\n0 0 0 2\n1 0 0 0\n"


def report(name: str, elapsed: float, detail: str = ""):
    suffix = f"  [{detail}]" if detail else ""
    print(f"\ncriterion {name}: PASS in {elapsed:.2f}s{suffix}")


def random_signed_values(rng: SplitMix64, n: int) -> tuple[mpq, ...]:
    out = []
    for _ in range(n):
        v = mpq(1 + rng.below(9), 1 + rng.below(9))
        out.append(-v if rng.below(2) else v)
    return tuple(out)


def test_c1_worked_example_reproduction(tmp_path, capsys):
    """4x4 worked example: exact closed-form/oracle agreement and the
    adjudicated expansion coefficients, in under a second."""
    t0 = time.perf_counter()
    path = tmp_path / "a4.txt"
    path.write_text(EXAMPLE_TEXT)
    assert main(["eval", "-p", EXAMPLE_POLY, "-A", str(path), "--diff"]) == 0
    out = capsys.readouterr().out
    assert "discrepancy: none" in out

    p = parse_polynomial(EXAMPLE_POLY)
    bc = block_coefficients(p, (3, 5, 2, 1))
    assert bc.c[0] == mpq(30) ** 5 + 2 * mpq(30) ** 2 + 5 == 24301805
    assert bc.c[1] == 1
    assert bc.c[2] == 3
    # the cubic coefficient: the folding formula gives 4 * 30**3 = 108000
    # (the popular hand-expansion that prints 30**3 drops the factor 4);
    # the dense oracle is the adjudicator
    oracle_result = dense_horner_eval(p, to_dense(cyclic_block((3, 5, 2, 1))))
    assert oracle_result[0][3] == bc.c[3] * (3 * 5 * 2)
    assert bc.c[3] == 4 * mpq(30) ** 3 == 108000
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    report("1 (worked example)", elapsed, "cubic coefficient adjudicated: 108000")


def test_c2_structured_power_oracle_equivalence():
    """1000 seeded value vectors (signed rationals, order <= 8) x all
    exponents 0..100: closed-form power equals the naive dense power."""
    t0 = time.perf_counter()
    rng = SplitMix64(20_02)
    for _ in range(1000):
        n = 1 + rng.below(8)
        values = random_signed_values(rng, n)
        dense = to_dense(cyclic_block(values))
        acc = identity_dense(n)
        for j in range(101):
            assert to_dense(cyclic_block_power(values, j)) == acc
            acc = dense_multiply(acc, dense)
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0
    report("2 (structured powers)", elapsed, "101000 exact comparisons")


def test_c3_frobenius_reconstruction():
    """1000 seeded monomial matrices, order <= 12: the dense conjugation of
    the block direct sum reproduces the matrix exactly."""
    t0 = time.perf_counter()
    rng = SplitMix64(30_03)
    for _ in range(1000):
        n = 1 + rng.below(12)
        base = random_monomial(rng.next_u64(), n)
        values = tuple(-v if rng.below(2) else v for v in base.values)
        a = MonomialMatrix(values, base.perm)
        form = frobenius_normal_form(a)
        q = to_matrix(form.gamma)
        q_t = to_matrix(inverse(form.gamma))
        core = to_dense(direct_sum(cyclic_block(b) for b in form.blocks))
        assert dense_multiply(dense_multiply(q, core), q_t) == to_dense(a)
    elapsed = time.perf_counter() - t0
    report("3 (normal form reconstruction)", elapsed)


def test_c4_residue_parts_resum():
    """1000 random polynomials (degree <= 50) x moduli 1..8: the residue
    parts re-sum to the polynomial exactly."""
    t0 = time.perf_counter()
    rng = SplitMix64(40_04)
    for _ in range(1000):
        p = random_polynomial(rng, 50)
        for n in range(1, 9):
            assert parts_sum(p, n) == p
    elapsed = time.perf_counter() - t0
    report("4 (residue decomposition)", elapsed)


def _constructed_member(rng: SplitMix64) -> Polynomial:
    """A polynomial passing the order-6 condition by construction.

    Shape: t**c * q1(t**60) + t**(c+60) * q2(t**60) where each q is
    f**2 + u*g**2 with random signed pieces.  All exponents are congruent
    to c modulo every k <= 6 (60 is divisible by each), so every residue
    part is either zero or the whole polynomial, and the polynomial itself
    is a product/sum of nonnegative functions on the half-line.
    """
    shift = rng.below(60)
    u = Polynomial((0, 1))
    terms: dict[int, mpq] = {}

    def add_block(offset: int):
        f = random_polynomial(rng, 2)
        g = random_polynomial(rng, 2)
        q = f * f + u * (g * g)
        for e, c in enumerate(q.coeffs):
            if c:
                key = offset + 60 * e
                terms[key] = terms.get(key, mpq(0)) + c

    add_block(shift)
    if rng.below(2):
        add_block(shift + 60)
    return Polynomial.from_terms(terms)


def _planted_failure(rng: SplitMix64) -> Polynomial:
    """A nonnegative-coefficient polynomial with one coefficient rewritten so
    a chosen residue part sums to -1 at t = 1."""
    base = random_polynomial(rng, 40, signed=False)
    coeffs = list(base.coeffs)
    k0 = 1 + rng.below(6)
    e = rng.below(len(coeffs))
    others = sum(c for j, c in enumerate(coeffs) if j != e and j % k0 == e % k0)
    coeffs[e] = -others - 1
    return Polynomial(tuple(coeffs))


def test_c5_characterization_both_directions():
    """Sufficiency: 100 constructed members pass and 500 seeded nonnegative
    monomial matrices per order <= 6 stay entrywise nonnegative.  Necessity:
    100 planted failures are rejected and each counterexample matrix shows a
    strictly negative entry under the dense oracle."""
    t0 = time.perf_counter()
    rng = SplitMix64(50_05)

    for _ in range(100):
        p = _constructed_member(rng)
        assert preserves_monomial_nonnegativity(p, 6).verdict
        for order in range(1, 7):
            for _ in range(500):
                a = random_monomial(rng.next_u64(), order)
                result = eval_monomial(p, a)
                assert all(v >= 0 for row in result for v in row)

    for _ in range(100):
        p = _planted_failure(rng)
        report_n = preserves_monomial_nonnegativity(p, 6)
        assert not report_n.verdict
        cx = counterexample(p, 6, report_n.failures[0])
        assert cx.matrix.is_nonnegative
        dense = dense_horner_eval(p, to_dense(cx.matrix))
        i, j = cx.position
        assert dense[i - 1][j - 1] == cx.value < 0

    elapsed = time.perf_counter() - t0
    assert elapsed < 300.0
    report("5 (characterization, both directions)", elapsed, "300000 evaluations")


def test_c6_halfline_decider_consistency():
    """10000 random polynomials (degree <= 12): never 'true' when the
    sampling refuter holds a witness (first 100 sampled at 10**4 points,
    the rest at 300); 1000 constructed nonnegative shapes: never 'false'."""
    t0 = time.perf_counter()
    rng = SplitMix64(60_06)
    refuted = 0
    for i in range(10_000):
        p = random_polynomial(rng, 12)
        witness = sample_refute_halfline(p, points=10_000 if i < 100 else 300)
        if witness is not None:
            refuted += 1
            assert not nonnegative_on_halfline(p).member
    assert refuted > 2000  # the consistency check must actually bite

    for _ in range(1000):
        p = random_ps_form(rng)
        assert nonnegative_on_halfline(p).member

    elapsed = time.perf_counter() - t0
    report("6 (half-line decider)", elapsed, f"{refuted} refuted, 1000 members")


def test_c7_benchmark_closed_form_speedup():
    """Order 64, degree 1000: the closed form beats dense Horner by at
    least 10x wall-clock, with exact agreement checked first."""
    rng = SplitMix64(70_07)
    a = random_monomial(rng.next_u64(), 64)
    assert a.is_nonnegative
    p = Polynomial(tuple(mpq(1 + rng.below(9), 1 + rng.below(9)) for _ in range(1001)))

    t0 = time.perf_counter()
    fast = eval_monomial(p, a)
    t1 = time.perf_counter()
    slow = dense_horner_eval(p, to_dense(a))
    t2 = time.perf_counter()

    assert fast == slow
    t_fast, t_slow = t1 - t0, t2 - t1
    speedup = t_slow / t_fast
    assert speedup >= 10.0
    report(
        "7 (benchmark)",
        t2 - t0,
        f"closed {t_fast:.4f}s vs dense {t_slow:.2f}s, speedup {speedup:.0f}x",
    )
