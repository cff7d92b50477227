"""Shared deterministic generators for the test suite.

Everything random in these tests is driven by the package's pinned
splitmix64 generator, so failures replay exactly.
"""

from __future__ import annotations

from gmpy2 import mpq

from monomat.oracle import SplitMix64
from monomat.polynomial import Polynomial


def random_rational(rng: SplitMix64, bound: int = 9, signed: bool = False) -> mpq:
    v = mpq(1 + rng.below(bound), 1 + rng.below(bound))
    if signed and rng.below(2):
        v = -v
    return v


def random_vector(
    rng: SplitMix64, n: int, bound: int = 9, signed: bool = False
) -> tuple[mpq, ...]:
    return tuple(random_rational(rng, bound, signed) for _ in range(n))


def random_polynomial(
    rng: SplitMix64,
    degree_bound: int,
    bound: int = 9,
    signed: bool = True,
    zero_one_in: int = 4,
) -> Polynomial:
    """Random polynomial of degree up to ``degree_bound`` (leading term
    forced nonzero); roughly one in ``zero_one_in`` lower coefficients is
    zeroed to keep supports interesting."""
    degree = rng.below(degree_bound + 1)
    coeffs = []
    for k in range(degree + 1):
        if k != degree and zero_one_in and rng.below(zero_one_in) == 0:
            coeffs.append(mpq(0))
        else:
            coeffs.append(random_rational(rng, bound, signed))
    return Polynomial(tuple(coeffs))


def random_ps_form(rng: SplitMix64, half_degree: int = 4) -> Polynomial:
    """Nonnegative-on-the-half-line by construction:
    ``f1^2 + f2^2 + t*(g1^2 + g2^2)`` with random signed pieces."""

    def piece() -> Polynomial:
        degree = rng.below(half_degree + 1)
        return Polynomial(
            tuple(random_rational(rng, 5, signed=True) for _ in range(degree + 1))
        )

    f1, f2, g1, g2 = piece(), piece(), piece(), piece()
    t = Polynomial((0, 1))
    return f1 * f1 + f2 * f2 + t * (g1 * g1 + g2 * g2)
