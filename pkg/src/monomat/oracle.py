"""Naive dense reference implementations used as ground truth.

Everything here is deliberately unstructured: textbook cubic matrix
products, powers by repeated multiplication, matrix Horner with dense
arithmetic, refutation by brute sampling.  None of it knows about the
cyclic-block shortcuts, so exact agreement between these functions and the
structured fast paths is evidence rather than circularity.  No tolerance
appears anywhere; every comparison made against this module is ``==``.

Randomness is a fixed splitmix64 generator (constants below), so every
seeded draw is reproducible bit-for-bit on any platform:

* ``next_u64``: state += 0x9E3779B97F4A7C15; mix ``z ^= z >> 30``,
  ``z *= 0xBF58476D1CE4E5B9``, ``z ^= z >> 27``, ``z *= 0x94D049BB133111EB``,
  ``z ^= z >> 31`` (all mod 2**64).
* bounded draws are ``next_u64() % k``.
* ``random_monomial`` draws the permutation first (descending Fisher-Yates,
  one bounded draw per step), then numerator and denominator for each value,
  both uniform on ``1..value_bound``.
"""

from __future__ import annotations

from gmpy2 import mpq

from .monomial import MonomialMatrix
from .permutation import Permutation
from .polynomial import Polynomial, cauchy_bound, eval_scalar
from .rationals import Matrix

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The fixed 64-bit generator behind every seeded draw in this package."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-enough draw from ``0..bound-1`` (plain modulo)."""
        if bound < 1:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound


def identity_dense(n: int) -> Matrix:
    zero, one = mpq(0), mpq(1)
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def dense_multiply(a: Matrix, b: Matrix) -> Matrix:
    """Textbook cubic product of exact dense matrices."""
    if not a or not b or len(a[0]) != len(b):
        raise ValueError(
            f"dimension mismatch: {len(a)}x{len(a[0]) if a else 0} times "
            f"{len(b)}x{len(b[0]) if b else 0}"
        )
    b_cols = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in b_cols) for row in a
    )


def dense_power(a: Matrix, j: int) -> Matrix:
    """``a**j`` by repeated multiplication; intentionally no squaring tricks."""
    if j < 0:
        raise ValueError("exponent must be nonnegative")
    if len(a) == 0 or any(len(row) != len(a) for row in a):
        raise ValueError("matrix must be square")
    out = identity_dense(len(a))
    for _ in range(j):
        out = dense_multiply(out, a)
    return out


def dense_horner_eval(p: Polynomial, a: Matrix) -> Matrix:
    """Matrix Horner: ``(...(a_m A + a_{m-1} I) A + ...) + a_0 I``."""
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if p.is_zero:
        return tuple((mpq(0),) * n for _ in range(n))
    acc = tuple(
        tuple(p.coeffs[-1] if i == j else mpq(0) for j in range(n)) for i in range(n)
    )
    for c in reversed(p.coeffs[:-1]):
        acc = dense_multiply(acc, a)
        acc = tuple(
            tuple(v + c if i == j else v for j, v in enumerate(row))
            for i, row in enumerate(acc)
        )
    return acc


def random_monomial(seed: int, n: int, value_bound: int = 9) -> MonomialMatrix:
    """Seed-deterministic nonnegative monomial matrix.

    Uniform random permutation by Fisher-Yates, then positive values with
    numerator and denominator drawn from ``1..value_bound``; the exact draw
    order is pinned in the module docstring.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if value_bound < 1:
        raise ValueError("value bound must be positive")
    rng = SplitMix64(seed)
    images = list(range(1, n + 1))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        images[i], images[j] = images[j], images[i]
    values = tuple(
        mpq(1 + rng.below(value_bound), 1 + rng.below(value_bound)) for _ in range(n)
    )
    return MonomialMatrix(values, Permutation(tuple(images)))


def refutation_grid(p: Polynomial, points: int) -> tuple[mpq, ...]:
    """The deterministic sample grid used by :func:`sample_refute_halfline`.

    Mantissas ``1 + j/q`` scaled by powers of two from 2**-20 through 2**20,
    plus a neighborhood of the Cauchy root bound, sorted ascending.  All
    points are strictly positive; a polynomial negative at 0 is negative on
    the smallest scales too, so nothing is lost by skipping the origin and
    every witness stays usable as a matrix value.
    """
    if points < 1:
        raise ValueError("points must be positive")
    binades = range(-20, 21)
    per_binade = max(1, points // len(binades))
    grid = []
    for e in binades:
        scale = mpq(2) ** e
        for j in range(per_binade):
            if len(grid) > points:
                break
            grid.append(scale * (1 + mpq(j, per_binade)))
    if not p.is_zero:
        bound = cauchy_bound(p)
        grid.extend(
            bound * f
            for f in (
                mpq(1, 2), mpq(3, 4), mpq(7, 8), mpq(1),
                mpq(9, 8), mpq(5, 4), mpq(3, 2), mpq(2),
            )
        )
    return tuple(sorted(set(grid)))


def sample_refute_halfline(p: Polynomial, points: int = 10_000) -> mpq | None:
    """Search the grid for a nonnegative point where ``p`` is negative.

    Returns the smallest grid witness, or ``None``.  Absence of a witness
    proves nothing; this is a refuter, not a decider.
    """
    for t in refutation_grid(p, points):
        if eval_scalar(p, t) < 0:
            return t
    return None
