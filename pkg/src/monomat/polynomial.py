"""Exact univariate polynomials over the rationals.

A polynomial is a dense ascending coefficient tuple with trailing zeros
stripped; the zero polynomial is the empty tuple, kept as a distinguished
value rather than a "degree -1" convention.  All coefficients are exact
rationals, so every identity asserted by the test suite is bit-exact.

Beyond ring arithmetic this module provides the residue-class decomposition
``part(p, r, n)`` (the sub-polynomial of the exponents congruent to ``r``
mod ``n``), square-free structure via Yun's algorithm, and exact real-root
counting with Sturm sequences.  The gcd / square-free / Sturm kernels run on
primitive integer coefficient lists internally: content-stripped pseudo
remainders keep coefficient growth near the subresultant bound, which
matters once degrees reach the hundreds.

Text form (shared with the command line): terms joined by ``+``/``-``; each
term is ``c``, ``c*t``, ``t``, ``c*t^k`` or ``t^k``; coefficients are
integers or ``num/den`` rationals; whitespace is ignored.  Example::

    t^20 + 4*t^15 + 2*t^8 + 3*t^2 + t + 5
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce

import gmpy2
from gmpy2 import mpq, mpz

from .rationals import as_rational


@dataclass(frozen=True)
class Polynomial:
    """Dense exact-rational polynomial; index k holds the t^k coefficient.

    >>> p = Polynomial((1, -2, 1))
    >>> p.degree, p(1), p(3)
    (2, mpq(0,1), mpq(4,1))
    >>> print(p)
    t^2 - 2*t + 1
    """

    coeffs: tuple[mpq, ...]

    def __post_init__(self):
        coeffs = [as_rational(c) for c in self.coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls) -> Polynomial:
        return cls(())

    @classmethod
    def one(cls) -> Polynomial:
        return cls((1,))

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls((c,))

    @classmethod
    def term(cls, c, k: int) -> Polynomial:
        """The single term ``c * t**k``."""
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * k + (c,))

    @classmethod
    def from_terms(cls, terms) -> Polynomial:
        """Build from an ``{exponent: coefficient}`` mapping."""
        if not terms:
            return cls.zero()
        if any(k < 0 for k in terms):
            raise ValueError("exponents must be nonnegative")
        coeffs = [mpq(0)] * (max(terms) + 1)
        for k, c in terms.items():
            coeffs[k] += as_rational(c)
        return cls(tuple(coeffs))

    # -- basic queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> mpq:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def trailing_term(self) -> tuple[int, mpq]:
        """Lowest-order nonzero term as ``(exponent, coefficient)``."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k, c
        raise ValueError("the zero polynomial has no trailing term")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(tuple(out))

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        out = [mpq(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Polynomial(tuple(out))

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> Polynomial:
        c = as_rational(c)
        return Polynomial(tuple(c * a for a in self.coeffs))

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.one()
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, t) -> mpq:
        return eval_scalar(self, t)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


# -- residue-class decomposition ---------------------------------------------


def part(p: Polynomial, r: int, n: int) -> Polynomial:
    """Sub-polynomial of ``p`` keeping exponents congruent to ``r`` mod ``n``.

    The untouched exponent positions are zeroed, so distinct residues have
    disjoint supports and the parts over ``r = 0..n-1`` re-sum to ``p``.
    Empty residue classes yield the zero polynomial.

    >>> p = Polynomial((5, 1, 3, 0, 0, 0, 0, 0, 2))
    >>> print(part(p, 0, 4))
    2*t^8 + 5
    """
    if n < 1:
        raise ValueError("modulus must be a positive integer")
    if not 0 <= r < n:
        raise ValueError(f"residue must satisfy 0 <= r < n, got r={r}, n={n}")
    if p.is_zero:
        return p
    return Polynomial(
        tuple(c if k % n == r else mpq(0) for k, c in enumerate(p.coeffs))
    )


def parts_sum(p: Polynomial, n: int) -> Polynomial:
    """Sum of ``part(p, r, n)`` over all residues; equals ``p`` exactly."""
    if n < 1:
        raise ValueError("modulus must be a positive integer")
    total = Polynomial.zero()
    for r in range(n):
        total = total + part(p, r, n)
    return total


# -- evaluation and calculus ---------------------------------------------------


def eval_scalar(p: Polynomial, t) -> mpq:
    """Exact Horner evaluation of ``p`` at the rational point ``t``."""
    t = as_rational(t)
    acc = mpq(0)
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def derivative(p: Polynomial) -> Polynomial:
    if p.is_zero:
        return p
    return Polynomial(tuple(k * c for k, c in enumerate(p.coeffs))[1:])


def cauchy_bound(p: Polynomial) -> mpq:
    """``1 + max|a_i| / |a_m|``: every root of ``p`` is smaller in absolute
    value, and the bound itself is never a root."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no root bound")
    if p.degree == 0:
        return mpq(1)
    top = abs(p.coeffs[-1])
    rest = max(abs(c) for c in p.coeffs[:-1])
    return 1 + rest / top


# -- division, gcd, square-free structure -------------------------------------


def poly_divmod(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Exact-rational quotient and remainder with ``deg r < deg den``."""
    if den.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(num.coeffs)
    dd = den.degree
    dlc = den.coeffs[-1]
    q = [mpq(0)] * max(0, len(r) - dd)
    while r and len(r) - 1 >= dd:
        c = r[-1] / dlc
        shift = len(r) - 1 - dd
        q[shift] = c
        for i, dc in enumerate(den.coeffs):
            r[shift + i] -= c * dc
        r.pop()
        while r and not r[-1]:
            r.pop()
    return Polynomial(tuple(q)), Polynomial(tuple(r))


def _exact_div(num: Polynomial, den: Polynomial) -> Polynomial:
    q, r = poly_divmod(num, den)
    if not r.is_zero:
        raise ArithmeticError("division expected to be exact")
    return q


def _monic(p: Polynomial) -> Polynomial:
    return p.scale(1 / p.leading_coefficient)


def _to_int(p: Polynomial) -> list:
    """Primitive integer coefficient list (positive content divided out)."""
    if p.is_zero:
        return []
    den_lcm = reduce(gmpy2.lcm, (c.denominator for c in p.coeffs), mpz(1))
    ints = [mpz(c.numerator * (den_lcm // c.denominator)) for c in p.coeffs]
    content = reduce(gmpy2.gcd, ints, mpz(0))
    return [c // content for c in ints]


def _int_primitive(f: list) -> list:
    while f and not f[-1]:
        f.pop()
    if not f:
        return f
    content = reduce(gmpy2.gcd, f, mpz(0))
    return [c // content for c in f]


def _int_derivative(f: list) -> list:
    out = [k * c for k, c in enumerate(f)][1:]
    while out and not out[-1]:
        out.pop()
    return out


def _int_prem(f: list, g: list) -> tuple[list, int]:
    """Pseudo-remainder: returns ``(r, e)`` with ``r == lc(g)**e * f mod g``.

    Integer-only long division; the caller owns sign bookkeeping via ``e``.
    """
    dg = len(g) - 1
    if dg == 0:
        return [], 1
    lg = g[-1]
    r = list(f)
    e = 0
    while len(r) - 1 >= dg:
        coef = r[-1]
        shift = len(r) - 1 - dg
        r = [lg * c for c in r]
        for i, gc in enumerate(g):
            r[shift + i] -= coef * gc
        r.pop()
        while r and not r[-1]:
            r.pop()
        e += 1
    return r, e


def _int_gcd(f: list, g: list) -> list:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    f = _int_primitive(list(f))
    g = _int_primitive(list(g))
    if len(f) < len(g):
        f, g = g, f
    while g:
        r, _ = _int_prem(f, g)
        f, g = g, _int_primitive(r)
    if f and f[-1] < 0:
        f = [-c for c in f]
    return f


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor.

    >>> print(gcd(Polynomial((1, -2, 1)), Polynomial((-1, 1))))
    t - 1
    """
    if p.is_zero and q.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero:
        return _monic(q)
    if q.is_zero:
        return _monic(p)
    ints = _int_gcd(_to_int(p), _to_int(q))
    return _monic(Polynomial(tuple(ints)))


def squarefree_decomposition(p: Polynomial) -> tuple[tuple[Polynomial, int], ...]:
    """Yun decomposition: monic square-free ``f_i`` with ``p = lc * prod f_i**i``.

    The ``f_i`` are pairwise coprime and the returned multiplicities are
    strictly increasing.  A constant input has no factors.
    """
    if p.is_zero:
        raise ValueError("square-free decomposition of the zero polynomial")
    if p.degree == 0:
        return ()
    f = _monic(p)
    fp = derivative(f)
    s = gcd(f, fp)
    v = _exact_div(f, s)
    w = _exact_div(fp, s)
    out: list[tuple[Polynomial, int]] = []
    i = 1
    while True:
        d = w - derivative(v)
        if d.is_zero:
            out.append((v, i))
            return tuple(out)
        g = gcd(v, d)
        if g.degree > 0:
            out.append((g, i))
        v = _exact_div(v, g)
        w = _exact_div(d, g)
        i += 1


def squarefree_odd_part(p: Polynomial) -> Polynomial:
    """Monic square-free polynomial whose roots are exactly the roots of
    ``p`` of odd multiplicity: the locus where ``p`` changes sign.

    >>> print(squarefree_odd_part(Polynomial((1, -2, 1))))
    1
    >>> print(squarefree_odd_part(Polynomial((0, 1, -2, 1))))
    t
    """
    if p.is_zero:
        raise ValueError("square-free odd part of the zero polynomial")
    out = Polynomial.one()
    for f, i in squarefree_decomposition(p):
        if i % 2 == 1:
            out = out * f
    return out


# -- Sturm sequences -----------------------------------------------------------


def _int_sign_at(f: list, t: mpq) -> int:
    """Sign of the integer polynomial ``f`` at the rational point ``t``."""
    a, b = t.numerator, t.denominator
    v = mpz(0)
    pw = mpz(1)
    for c in reversed(f):
        v = v * a + c * pw
        pw *= b
    return 1 if v > 0 else (-1 if v < 0 else 0)


def _sturm_chain(f: list) -> list[list]:
    chain = [_int_primitive(list(f)), _int_primitive(_int_derivative(f))]
    while chain[-1] and len(chain[-1]) - 1 > 0:
        prev, cur = chain[-2], chain[-1]
        r, e = _int_prem(prev, cur)
        if not r:
            break
        flip = -1 if (cur[-1] < 0 and e % 2 == 1) else 1
        chain.append(_int_primitive([-flip * c for c in r]))
    return [c for c in chain if c]


def _variations(chain: list[list], t: mpq) -> int:
    signs = [s for f in chain if (s := _int_sign_at(f, t))]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def sturm_count(s: Polynomial, lo, hi) -> int:
    """Number of distinct real roots of square-free ``s`` in ``(lo, hi]``.

    Endpoints must not be roots; callers arrange that (the membership
    decider uses 0 after stripping ``t`` factors and a Cauchy bound above
    every root), and the error below defends the contract.

    >>> sturm_count(Polynomial((-2, 0, 1)), 0, 2)
    1
    """
    lo, hi = as_rational(lo), as_rational(hi)
    if not lo < hi:
        raise ValueError("require lo < hi")
    if s.is_zero:
        raise ValueError("root counting needs a nonzero polynomial")
    if s.degree == 0:
        return 0
    if not eval_scalar(s, lo) or not eval_scalar(s, hi):
        raise ValueError("interval endpoint is a root; perturb the endpoint")
    chain = _sturm_chain(_to_int(s))
    return _variations(chain, lo) - _variations(chain, hi)


# -- text form ------------------------------------------------------------------


class ParseError(ValueError):
    """Malformed polynomial or matrix text; carries the offending offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


_TERM_RE = re.compile(
    r"(?:(?P<coef>\d+(?:/\d+)?)(?P<star>\*)?)?(?:(?P<var>t)(?:\^(?P<exp>\d+))?)?\Z"
)


def parse_polynomial(text: str) -> Polynomial:
    """Parse the term grammar described in the module docstring.

    Raises :class:`ParseError` with the character offset of the offending
    token.  Repeated exponents accumulate.
    """
    chars = [(ch, i) for i, ch in enumerate(text) if not ch.isspace()]
    if not chars:
        raise ParseError("empty polynomial", 0)
    terms: dict[int, mpq] = {}
    i, n = 0, len(chars)
    while i < n:
        sign = 1
        if chars[i][0] in "+-":
            if chars[i][0] == "-":
                sign = -1
            i += 1
        start = i
        buf = []
        while i < n and chars[i][0] not in "+-":
            buf.append(chars[i][0])
            i += 1
        pos = chars[start][1] if start < n else len(text)
        if not buf:
            raise ParseError("missing term", pos)
        m = _TERM_RE.match("".join(buf))
        if not m:
            raise ParseError(f"malformed term {''.join(buf)!r}", pos)
        coef, star, var, exp = m.group("coef", "star", "var", "exp")
        if coef is None and var is None:
            raise ParseError(f"malformed term {''.join(buf)!r}", pos)
        if star and not var:
            raise ParseError("dangling '*'", pos)
        if coef and var and not star:
            raise ParseError("missing '*' between coefficient and t", pos)
        try:
            c = as_rational(coef) if coef else mpq(1)
        except ValueError as exc:
            raise ParseError(str(exc), pos) from None
        k = int(exp) if exp else (1 if var else 0)
        terms[k] = terms.get(k, mpq(0)) + sign * c
    return Polynomial.from_terms(terms)


def format_polynomial(p: Polynomial) -> str:
    """Canonical text form; ``parse_polynomial`` round-trips it exactly."""
    if p.is_zero:
        return "0"
    pieces: list[tuple[bool, str]] = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            stem = "t" if k == 1 else f"t^{k}"
            body = stem if mag == 1 else f"{mag}*{stem}"
        pieces.append((c < 0, body))
    first_neg, first_body = pieces[0]
    out = ("-" if first_neg else "") + first_body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out
