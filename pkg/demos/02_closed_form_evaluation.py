"""Evaluating a degree-20 polynomial on a matrix with four scalar products.

Exponents only matter modulo the block order: splitting a polynomial by
exponent residue and folding each class with powers of the value product
collapses p(A) onto I, A, A^2, A^3.  The classical way to write the folded
coefficients uses the irrational fourth root of 30; the rational folding
used here is identical and exact.

This is also where an easy hand-expansion slip lives: the cubic
coefficient of the worked example below is 4 * 30^3 = 108000 (the residue
part is 4*t^15, and its factor 4 survives the folding).  Dropping the 4
gives the tidier-looking 30^3, which the dense-Horner cross-check refutes.
"""

from monomat import (
    block_coefficients,
    cyclic_block,
    eval_monomial,
    parse_polynomial,
    part,
    to_dense,
)
from monomat.oracle import dense_horner_eval

p = parse_polynomial("t^20 + 4*t^15 + 2*t^8 + 3*t^2 + t + 5")
A = cyclic_block((3, 5, 2, 1))

print("p(t) =", p)
print("A    = cyclic block of 3, 5, 2, 1  (value product alpha = 30)\n")

print("Residue parts of p modulo 4:")
for r in range(4):
    print(f"    r = {r}:  {part(p, r, 4)}")

bc = block_coefficients(p, A.values)
print("\nFolded coefficients (exponent q*4 + r contributes a * alpha^q to c[r]):")
for r, c in enumerate(bc.c):
    print(f"    c[{r}] = {c}")
print("\n    c[0] = 30^5 + 2*30^2 + 5 =", 30**5 + 2 * 30**2 + 5)
print("    c[3] = 4 * 30^3          =", 4 * 30**3, " (note the factor 4 from 4*t^15)")

print("\nSo p(A) = c[0]*I + c[1]*A + c[2]*A^2 + c[3]*A^3:")
result = eval_monomial(p, A)
for row in result:
    print("   ", "  ".join(f"{str(v):>9}" for v in row))

oracle = dense_horner_eval(p, to_dense(A))
print("\nDense Horner (21 dense 4x4 products) agrees exactly:", result == oracle)

wrong = [
    [c if (i, j) != (0, 3) else 30**3 * 3 * 5 * 2 for j, c in enumerate(row)]
    for i, row in enumerate(result)
]
print(
    "Replacing c[3] by the slipped value 30^3 would break the match:",
    oracle == tuple(tuple(r) for r in wrong),
)
