"""Exact decision procedures for entrywise-nonnegativity preservation.

Two questions are decided here, both exactly:

* order 1: is ``p(t) >= 0`` for every real ``t >= 0``?  (Equivalently, by
  continuity, for every ``t > 0``; this module standardizes on the closed
  half-line.)  Decided by sign screening plus Sturm root counting on the
  square-free odd part, with a strictly positive rational witness returned
  on failure.
* order n: is ``p(A)`` entrywise nonnegative for every nonnegative
  monomial matrix ``A`` of order ``n``?  This holds if and only if every
  residue part ``part(p, r, k)`` for ``k = 1..n``, ``r = 0..k-1`` passes
  the order-1 test (the conditions nest, so a true verdict covers smaller
  orders too).  The cyclic-block folding makes each entry of ``p(A)`` a
  positive multiple of one part value, so a failing part converts directly
  into a concrete counterexample matrix with a strictly negative entry,
  and conversely nonnegative parts force every entry nonnegative.

Failures carry rational witnesses; :func:`counterexample` turns one into an
explicit matrix, entry position, and entry value, re-verified through the
evaluator before being returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from gmpy2 import mpq

from .evaluator import eval_monomial
from .monomial import MonomialMatrix, cyclic_block
from .polynomial import (
    Polynomial,
    cauchy_bound,
    eval_scalar,
    part,
    squarefree_odd_part,
    sturm_count,
)
from .rationals import as_rational


class HalflineVerdict(NamedTuple):
    """Outcome of the order-1 test; ``witness`` is a strictly positive
    rational with ``p(witness) < 0`` whenever ``member`` is false."""

    member: bool
    witness: Optional[mpq]


class PartFailure(NamedTuple):
    """Residue part ``(r mod k)`` that is negative at ``witness``."""

    k: int
    r: int
    witness: mpq


class Counterexample(NamedTuple):
    """Nonnegative monomial matrix with ``p(matrix)[position] == value < 0``."""

    matrix: MonomialMatrix
    position: tuple[int, int]
    value: mpq


@dataclass(frozen=True)
class MembershipReport:
    """Verdict for order ``n`` plus every failing residue part, in
    lexicographic ``(k, r)`` order."""

    n: int
    verdict: bool
    failures: tuple[PartFailure, ...]

    def __post_init__(self):
        if self.verdict != (not self.failures):
            raise ValueError("verdict must mirror emptiness of failures")


def nonnegative_on_halfline(p: Polynomial) -> HalflineVerdict:
    """Decide ``p(t) >= 0 for all t >= 0`` exactly.

    Screening order: the zero polynomial passes; a negative leading
    coefficient fails far out (witness past the Cauchy bound); a negative
    trailing coefficient fails just right of 0 (witness by halving).
    Otherwise both tails are positive and ``p`` can only dip negative by
    crossing zero, i.e. at a root of odd multiplicity, so the square-free
    odd part is root-counted on ``(0, B]`` with a Sturm sequence.  Root
    found means a sign change; bisection guided by the root count then
    produces a rational point where ``p`` is strictly negative.

    The exponent lattice is compressed first (``p(t) = t^l * h(t^d)`` with
    ``d`` the gcd of exponent gaps): nonnegativity on the half-line is
    invariant under that substitution and the degree drop keeps the
    square-free and Sturm stages cheap for sparse high-degree inputs.

    >>> nonnegative_on_halfline(Polynomial((1, -2, 1))).member
    True
    >>> nonnegative_on_halfline(Polynomial((-1, 1)))
    HalflineVerdict(member=False, witness=mpq(1,2))
    """
    if p.is_zero:
        return HalflineVerdict(True, None)
    if p.leading_coefficient < 0:
        return HalflineVerdict(False, _witness_beyond_roots(p))
    low_exp, low_coeff = p.trailing_term()
    if low_coeff < 0:
        return HalflineVerdict(False, _witness_near_zero(p))
    lattice, h = _compress_exponents(p, low_exp)
    if h.degree == 0:
        return HalflineVerdict(True, None)
    odd = squarefree_odd_part(h)
    if odd.degree == 0:
        return HalflineVerdict(True, None)
    bound = cauchy_bound(h)
    if sturm_count(odd, 0, bound) == 0:
        return HalflineVerdict(True, None)
    u0 = _negative_point(h, odd, bound)
    return HalflineVerdict(False, _uncompress_witness(p, u0, lattice))


def preserves_monomial_nonnegativity(p: Polynomial, n: int) -> MembershipReport:
    """Test every residue part ``part(p, r, k)`` for ``k <= n`` on the
    half-line and aggregate the failures.

    ``verdict=True`` certifies that ``p`` maps every nonnegative monomial
    matrix of order ``n`` (hence also every smaller order) to an entrywise
    nonnegative matrix; ``verdict=False`` comes with failing parts that
    :func:`counterexample` converts into an explicit matrix.
    """
    if n < 1:
        raise ValueError("order must be a positive integer")
    failures = []
    for k in range(1, n + 1):
        for r in range(k):
            result = nonnegative_on_halfline(part(p, r, k))
            if not result.member:
                failures.append(PartFailure(k, r, result.witness))
    return MembershipReport(n, not failures, tuple(failures))


def counterexample(
    p: Polynomial, n: int, failure: PartFailure | None = None
) -> Counterexample | None:
    """Materialize a failing part as a matrix with a negative entry.

    For the failure ``(k, r, t0)`` the constant cyclic block of order ``k``
    with value ``t0`` has value-product ``t0**k``, so the folded coefficient
    of its r-th power is ``part(p, r, k)(t0) / t0**r`` and the entry of
    ``p(A)`` at ``(1, r+1)`` equals ``part(p, r, k)(t0) < 0``.  The entry is
    re-verified through :func:`monomat.evaluator.eval_monomial` before
    returning.

    With no ``failure`` given the first recorded failure of
    :func:`preserves_monomial_nonnegativity` is used; returns ``None`` if
    the verdict is true, and raises if the supplied failure does not
    actually certify a negative entry.
    """
    if failure is None:
        report = preserves_monomial_nonnegativity(p, n)
        if report.verdict:
            return None
        failure = report.failures[0]
    k, r, t0 = failure.k, failure.r, as_rational(failure.witness)
    if not (1 <= k <= n and 0 <= r < k and t0 > 0):
        raise ValueError(f"malformed failure triple {failure}")
    matrix = cyclic_block((t0,) * k)
    position = (1, r + 1)
    value = eval_monomial(p, matrix)[0][r]
    if value >= 0 or value != eval_scalar(part(p, r, k), t0):
        raise ValueError(
            f"failure {failure} does not certify a negative entry of p(A)"
        )
    return Counterexample(matrix, position, value)


# -- internals of the order-1 decision ----------------------------------------


def _witness_beyond_roots(p: Polynomial) -> mpq:
    """Rational point past every root; sign of p there is the leading sign."""
    t = cauchy_bound(p)
    while eval_scalar(p, t) >= 0:
        t *= 2
    return t


def _witness_near_zero(p: Polynomial) -> mpq:
    """Rational point just right of 0 where the trailing term dominates."""
    t = mpq(1, 2)
    while eval_scalar(p, t) >= 0:
        t /= 2
    return t


def _compress_exponents(p: Polynomial, low_exp: int) -> tuple[tuple[int, int], Polynomial]:
    """Write ``p(t) = t^l * h(t^d)`` with ``d`` the gcd of exponent gaps.

    Returns ``((l, d), h)``; ``h`` has a nonzero constant term, and
    ``p >= 0`` on the half-line iff ``h >= 0`` on the half-line.
    """
    d = 0
    for k, c in enumerate(p.coeffs):
        if c and k > low_exp:
            d = math.gcd(d, k - low_exp)
    if d == 0:
        # single-term polynomial
        return (low_exp, 1), Polynomial((p.coeffs[low_exp],))
    h = Polynomial(tuple(p.coeffs[low_exp::d]))
    return (low_exp, d), h


def _uncompress_witness(p: Polynomial, u0: mpq, lattice: tuple[int, int]) -> mpq:
    """Map a negativity witness of the compressed ``h`` back to one of ``p``.

    ``p`` is negative at the d-th root of ``u0``, which need not be
    rational; bisecting toward it must land in the surrounding negativity
    interval after finitely many steps, and every probe is exact.
    """
    _low, d = lattice
    if d == 1:
        return u0
    lo = mpq(0)
    hi = max(u0, mpq(1)) + 1
    while True:
        mid = (lo + hi) / 2
        if eval_scalar(p, mid) < 0:
            return mid
        if mid ** d < u0:
            lo = mid
        else:
            hi = mid


def _negative_point(h: Polynomial, odd: Polynomial, bound: mpq) -> mpq:
    """A rational ``u0`` in ``(0, bound)`` with ``h(u0) < 0``.

    Precondition: ``h > 0`` at 0 and at ``bound``, and ``odd`` (the
    square-free odd part of ``h``) has at least one root in ``(0, bound]``.
    Bisection keeps an interval holding a sign-change root; since ``h`` is
    positive at both original endpoints, shrinking far enough forces some
    probe strictly negative.  Probes that land on a root of ``h`` or
    ``odd`` are replaced by nearby split points.
    """
    lo, hi = mpq(0), bound
    while True:
        mid = _clean_split(h, odd, lo, hi)
        if eval_scalar(h, mid) < 0:
            return mid
        if sturm_count(odd, lo, mid) > 0:
            hi = mid
        else:
            lo = mid


def _clean_split(h: Polynomial, odd: Polynomial, lo: mpq, hi: mpq) -> mpq:
    """Interior split point avoiding the finitely many roots of h and odd."""
    denom = 2
    while True:
        for num in range(1, denom, 2):
            mid = lo + (hi - lo) * mpq(num, denom)
            if eval_scalar(h, mid) and eval_scalar(odd, mid):
                return mid
        denom *= 2
