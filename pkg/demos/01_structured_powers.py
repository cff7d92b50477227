"""Powers of a monomial matrix without repeated multiplication.

A monomial matrix keeps one nonzero per row and column, so its powers stay
monomial, and powers of a single cyclic block repeat up to a scalar with
period n.  This script walks through that on the 4x4 block with values
3, 5, 2, 1 and cross-checks everything against naive dense products.
"""

from monomat import cyclic_block, cyclic_block_power, power, to_dense, value_product
from monomat.oracle import dense_power, random_monomial


def show(m):
    for row in m:
        print("   ", "  ".join(f"{str(v):>8}" for v in row))


A = cyclic_block((3, 5, 2, 1))
print("A, the cyclic block of the values 3, 5, 2, 1:")
show(to_dense(A))

print("\nvalue product alpha = 3*5*2*1 =", value_product(A.values))

print("\nOne full cycle closes the loop: A^4 is alpha * I:")
show(to_dense(power(A, 4)))

print("\nSo A^20 = (A^4)^5 is alpha^5 * I = 30^5 * I:")
show(to_dense(power(A, 20)))

print("\nA^7 = alpha * A^3 (one full cycle, then three steps):")
show(to_dense(power(A, 7)))

print("\nCross-check of A^7 against seven naive dense multiplications:")
match = to_dense(cyclic_block_power((3, 5, 2, 1), 7)) == dense_power(to_dense(A), 7)
print("    exact match:", match)

print("\nThe same works for any monomial matrix, through its cycle structure.")
B = random_monomial(seed=11, n=6)
print("A random nonnegative monomial matrix of order 6:")
show(to_dense(B))
for j in (0, 5, 12):
    agree = to_dense(power(B, j)) == dense_power(to_dense(B), j)
    print(f"    B^{j}: structured equals naive dense -> {agree}")
