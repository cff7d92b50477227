"""Sparse algebra of monomial (generalized permutation) matrices.

A monomial matrix is an invertible diagonal matrix times a permutation
matrix.  It is stored as the pair ``(values, perm)`` with the single nonzero
of row ``i`` sitting at column ``perm(i)`` and equal to ``values[i-1]``; all
values are nonzero exact rationals.

The distinguished single-cycle shape is the *cyclic block*: values on the
cyclic permutation ``i -> (i mod n) + 1``, i.e. ``values[0..n-2]`` on the
superdiagonal and ``values[n-1]`` in the bottom-left corner.  Every monomial
matrix is permutation-similar to a direct sum of cyclic blocks (its
Frobenius normal form), which is what makes powers and polynomial
evaluation cheap: a cyclic block of order ``n`` satisfies::

    block**j  ==  value_product**q * block**r      (j = q*n + r)

so only the first ``n`` powers are ever materialized.

Pure functions over immutable values throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from . import permutation as perms
from .permutation import Permutation
from .rationals import Matrix, rational_vector


class NotMonomialError(ValueError):
    """Dense input is not monomial; ``row`` is the offending 1-indexed row."""

    def __init__(self, message: str, row: int | None = None):
        super().__init__(message)
        self.row = row


@dataclass(frozen=True)
class MonomialMatrix:
    """Monomial matrix ``diag(values) @ to_matrix(perm)``.

    >>> A = MonomialMatrix((3, 5, 2, 1), perms.cyclic(4))
    >>> A.n, A.is_nonnegative
    (4, True)
    """

    values: tuple[mpq, ...]
    perm: Permutation

    def __post_init__(self):
        values = rational_vector(self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.perm.n:
            raise ValueError(
                f"value vector length {len(values)} does not match order {self.perm.n}"
            )
        for i, v in enumerate(values, start=1):
            if not v:
                raise ValueError(f"zero value at index {i}: matrix not invertible")

    @property
    def n(self) -> int:
        return self.perm.n

    @property
    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self.values)


@dataclass(frozen=True)
class FrobeniusForm:
    """Conjugator ``gamma`` plus per-cycle value blocks.

    Conjugating the original matrix by ``Q = to_matrix(gamma)`` gives the
    direct sum of the cyclic blocks of the listed value tuples;
    :func:`assemble` inverts the decomposition exactly.
    """

    gamma: Permutation
    blocks: tuple[tuple[mpq, ...], ...]

    def __post_init__(self):
        blocks = tuple(rational_vector(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if sum(len(b) for b in blocks) != self.gamma.n:
            raise ValueError("block sizes do not sum to the order")

    @property
    def n(self) -> int:
        return self.gamma.n

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


def identity(n: int) -> MonomialMatrix:
    """The identity matrix as a monomial matrix (unit values, identity map)."""
    return MonomialMatrix((mpq(1),) * n, perms.identity(n))


def cyclic_block(values) -> MonomialMatrix:
    """The cyclic block of a value vector: superdiagonal + corner shape.

    >>> to_dense(cyclic_block((3, 5, 2, 1)))[0]
    (mpq(0,1), mpq(3,1), mpq(0,1), mpq(0,1))
    """
    vec = rational_vector(values)
    if not vec:
        raise ValueError("empty value vector")
    for i, v in enumerate(vec, start=1):
        if not v:
            raise ValueError(f"zero value at index {i}")
    return MonomialMatrix(vec, perms.cyclic(len(vec)))


def value_product(values) -> mpq:
    """Product of all entries: the determinant of the diagonal factor."""
    out = mpq(1)
    for v in rational_vector(values):
        out *= v
    return out


def to_dense(a: MonomialMatrix) -> Matrix:
    """Dense exact matrix with ``values[i-1]`` at ``(i, perm(i))``."""
    zero = mpq(0)
    rows = []
    for i, v in enumerate(a.values):
        row = [zero] * a.n
        row[a.perm.images[i] - 1] = v
        rows.append(tuple(row))
    return tuple(rows)


def from_dense(m: Matrix) -> MonomialMatrix:
    """Recover ``(values, perm)`` from a dense matrix.

    Raises :class:`NotMonomialError` naming the first row that breaks the
    one-nonzero-per-row/column structure.
    """
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise NotMonomialError(f"matrix must be square and nonempty, got {n} rows")
    values = []
    images = []
    column_owner = [0] * n
    for i, row in enumerate(m, start=1):
        nonzero = [(j, v) for j, v in enumerate(row, start=1) if v]
        if len(nonzero) != 1:
            raise NotMonomialError(
                f"row {i} has {len(nonzero)} nonzero entries, expected exactly one",
                row=i,
            )
        j, v = nonzero[0]
        if column_owner[j - 1]:
            raise NotMonomialError(
                f"row {i} repeats column {j} already used by row {column_owner[j - 1]}",
                row=i,
            )
        column_owner[j - 1] = i
        images.append(j)
        values.append(v)
    return MonomialMatrix(tuple(values), Permutation(tuple(images)))


def multiply(a: MonomialMatrix, b: MonomialMatrix) -> MonomialMatrix:
    """Product of monomial matrices, still monomial.

    Row ``i`` of the product picks up ``a``'s value times ``b``'s value at
    the permuted index, and the maps compose:

    >>> A = cyclic_block((3, 5, 2, 1))
    >>> multiply(A, identity(4)) == A
    True
    """
    if a.n != b.n:
        raise ValueError(f"order mismatch: {a.n} vs {b.n}")
    values = tuple(
        av * b.values[a.perm.images[i] - 1] for i, av in enumerate(a.values)
    )
    return MonomialMatrix(values, perms.compose(a.perm, b.perm))


def direct_sum(blocks) -> MonomialMatrix:
    """Block-diagonal direct sum of monomial matrices."""
    values: list[mpq] = []
    images: list[int] = []
    offset = 0
    for blk in blocks:
        values.extend(blk.values)
        images.extend(offset + s for s in blk.perm.images)
        offset += blk.n
    if offset == 0:
        raise ValueError("empty direct sum")
    return MonomialMatrix(tuple(values), Permutation(tuple(images)))


def frobenius_normal_form(a: MonomialMatrix) -> FrobeniusForm:
    """Decompose into the canonical conjugator and per-cycle value blocks.

    The blocks carry the values read along each cycle of the permutation, in
    the deterministic cycle order of
    :func:`monomat.permutation.cycle_decomposition`.

    >>> frobenius_normal_form(MonomialMatrix((7, 2, 9), Permutation((1, 3, 2)))).blocks
    ((mpq(7,1),), (mpq(2,1), mpq(9,1)))
    """
    gamma, _sizes = perms.cycle_decomposition(a.perm)
    blocks = tuple(
        tuple(a.values[elt - 1] for elt in cyc) for cyc in perms.cycles(a.perm)
    )
    return FrobeniusForm(gamma, blocks)


def assemble(form: FrobeniusForm) -> MonomialMatrix:
    """Rebuild the matrix from its normal form: conjugate the block direct
    sum back by ``gamma``.  Exact inverse of :func:`frobenius_normal_form`."""
    core = direct_sum(cyclic_block(b) for b in form.blocks)
    return _conjugate(form.gamma, core)


def _conjugate(gamma: Permutation, a: MonomialMatrix) -> MonomialMatrix:
    """``P_gamma @ a @ P_gamma.T`` computed monomially."""
    q = MonomialMatrix((mpq(1),) * gamma.n, gamma)
    q_t = MonomialMatrix((mpq(1),) * gamma.n, perms.inverse(gamma))
    return multiply(multiply(q, a), q_t)


def cyclic_block_power(values, j: int) -> MonomialMatrix:
    """j-th power of the cyclic block of ``values`` without iterating.

    With ``j = q*n + r`` the result is the value-product to the ``q`` times
    the r-th power, whose single nonzero in row ``i`` sits at column
    ``i+r (mod n)`` and equals the product of ``r`` consecutive values along
    the cycle starting at index ``i``:

    >>> cyclic_block_power((3, 5, 2, 1), 4) == MonomialMatrix((30,) * 4, perms.identity(4))
    True
    """
    if j < 0:
        raise ValueError("exponent must be nonnegative")
    vec = rational_vector(values)
    n = len(vec)
    if not vec:
        raise ValueError("empty value vector")
    for i, v in enumerate(vec, start=1):
        if not v:
            raise ValueError(f"zero value at index {i}")
    q, r = divmod(j, n)
    scale = value_product(vec) ** q
    out = []
    for i0 in range(n):
        prod = scale
        for t in range(r):
            prod *= vec[(i0 + t) % n]
        out.append(prod)
    images = tuple(((i0 + r) % n) + 1 for i0 in range(n))
    return MonomialMatrix(tuple(out), Permutation(images))


def power(a: MonomialMatrix, j: int) -> MonomialMatrix:
    """``a**j`` through the normal form: one closed-form power per cyclic
    block, then conjugate back.  Exactly equals the j-fold dense product.

    >>> power(cyclic_block((3, 5, 2, 1)), 0) == identity(4)
    True
    """
    if j < 0:
        raise ValueError("exponent must be nonnegative")
    form = frobenius_normal_form(a)
    core = direct_sum(cyclic_block_power(b, j) for b in form.blocks)
    return _conjugate(form.gamma, core)
