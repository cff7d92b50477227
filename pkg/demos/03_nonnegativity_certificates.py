"""Which polynomials keep nonnegative monomial matrices nonnegative?

A polynomial with some negative coefficients can still map every
nonnegative matrix of a given shape to a nonnegative matrix.  For
nonnegative monomial matrices the answer is exactly computable: p works at
order n if and only if every exponent-residue part modulo every k <= n is
nonnegative on the half-line [0, oo).  The decision is exact (Sturm root
counting on the square-free odd part), and failures come with a concrete
matrix showing a negative entry.
"""

from monomat import (
    counterexample,
    eval_monomial,
    nonnegative_on_halfline,
    parse_polynomial,
    preserves_monomial_nonnegativity,
    to_dense,
)
from monomat.oracle import random_monomial

p = parse_polynomial("t^3 - 2*t^2 + t")
print("p(t) =", p, " = t*(t-1)^2\n")

print("On the half-line p is a product of nonnegative factors:")
print("    nonnegative on [0, oo)?", nonnegative_on_halfline(p).member)

print("\nAt order 1 that is the whole story:")
print("    order 1 verdict:", preserves_monomial_nonnegativity(p, 1).verdict)

print("\nAt order 3 the residue parts matter, and r=2 mod 3 is -2*t^2:")
report = preserves_monomial_nonnegativity(p, 3)
print("    order 3 verdict:", report.verdict)
for f in report.failures:
    print(f"    failing part: r={f.r} mod k={f.k}, negative at t = {f.witness}")

cx = counterexample(p, 3, report.failures[-1])
print("\nThe failing part converts into an explicit counterexample matrix:")
for row in to_dense(cx.matrix):
    print("   ", "  ".join(f"{str(v):>3}" for v in row))
print(f"    p(A) has entry {cx.value} at position {cx.position}:")
for row in eval_monomial(p, cx.matrix):
    print("   ", "  ".join(f"{str(v):>3}" for v in row))

print("\nA true verdict really is a guarantee; spot-check order 2")
print("with q = (t^2 - 1)^2 + t, whose residue parts mod 2 are the")
print("square (t^2 - 1)^2 and the line t:")
q = parse_polynomial("t^4 - 2*t^2 + t + 1")
report_q = preserves_monomial_nonnegativity(q, 2)
print("    q(t) =", q, "-> order 2 verdict:", report_q.verdict)
worst = None
for seed in range(500):
    a = random_monomial(seed, 2)
    low = min(v for row in eval_monomial(q, a) for v in row)
    worst = low if worst is None else min(worst, low)
print("    smallest entry of q(A) over 500 random nonnegative A:", worst)
