"""Permutations of {1..n}, their matrices, and cycle structure.

Conventions
-----------
* All public semantics are 1-indexed: a permutation of order ``n`` acts on
  the points ``1..n`` and ``sigma(i)`` is the image of point ``i``.
* ``Permutation.images`` is the word form ``(sigma(1), ..., sigma(n))``.
* The matrix of ``sigma`` has (i, j)-entry 1 exactly when ``j == sigma(i)``.
  With that convention, ``compose(sigma, tau)`` maps ``i`` to
  ``tau(sigma(i))`` so that matrices multiply homomorphically:
  ``to_matrix(compose(sigma, tau)) == to_matrix(sigma) @ to_matrix(tau)``.

Every value is immutable and every function is pure, so everything here is
safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .rationals import Matrix, rational_vector


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} in word form.

    >>> sigma = Permutation((2, 3, 1))
    >>> sigma(1), sigma(3)
    (2, 1)
    >>> sigma.n
    3
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise ValueError("permutation order must be at least 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        """Image of the point ``i`` (1-indexed)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"point {i} outside 1..{self.n}")
        return self.images[i - 1]


def identity(n: int) -> Permutation:
    """The identity permutation of order ``n``.

    >>> identity(3).images
    (1, 2, 3)
    """
    if n < 1:
        raise ValueError("order must be a positive integer")
    return Permutation(tuple(range(1, n + 1)))


def cyclic(n: int) -> Permutation:
    """The full cycle ``i -> (i mod n) + 1`` of order ``n``.

    >>> cyclic(3).images
    (2, 3, 1)
    >>> cyclic(1).images
    (1,)
    """
    if n < 1:
        raise ValueError("order must be a positive integer")
    return Permutation(tuple((i % n) + 1 for i in range(1, n + 1)))


def block_cyclic(sizes) -> Permutation:
    """Direct sum of full cycles: on each consecutive block of ``sizes`` the
    permutation acts as the cycle of that block's length.
    """
    images: list[int] = []
    offset = 0
    for size in sizes:
        if size < 1:
            raise ValueError("block sizes must be positive")
        images.extend(offset + (i % size) + 1 for i in range(1, size + 1))
        offset += size
    return Permutation(tuple(images))


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """The permutation ``i -> tau(sigma(i))``.

    This is the order under which ``to_matrix`` is a homomorphism.

    >>> compose(cyclic(3), cyclic(3)).images
    (3, 1, 2)
    """
    if sigma.n != tau.n:
        raise ValueError(f"order mismatch: {sigma.n} vs {tau.n}")
    return Permutation(tuple(tau.images[s - 1] for s in sigma.images))


def inverse(sigma: Permutation) -> Permutation:
    """The inverse permutation; its matrix is the transpose of ``sigma``'s.

    >>> inverse(cyclic(3)).images
    (3, 1, 2)
    """
    images = [0] * sigma.n
    for i, s in enumerate(sigma.images, start=1):
        images[s - 1] = i
    return Permutation(tuple(images))


def apply(sigma: Permutation, x) -> tuple[mpq, ...]:
    """The vector whose i-th entry is ``x[sigma(i)]`` (1-indexed).

    Equals the matrix-vector product ``to_matrix(sigma) @ x``.
    """
    vec = rational_vector(x)
    if len(vec) != sigma.n:
        raise ValueError(f"length mismatch: vector {len(vec)}, order {sigma.n}")
    return tuple(vec[s - 1] for s in sigma.images)


def to_matrix(sigma: Permutation) -> Matrix:
    """The 0/1 matrix with (i, j)-entry 1 exactly when ``j == sigma(i)``."""
    zero, one = mpq(0), mpq(1)
    return tuple(
        tuple(one if j == s else zero for j in range(1, sigma.n + 1))
        for s in sigma.images
    )


def cycles(sigma: Permutation) -> tuple[tuple[int, ...], ...]:
    """Disjoint cycles, ordered by minimal element and traversed from it.

    >>> cycles(Permutation((1, 3, 2)))
    ((1,), (2, 3))
    """
    seen = [False] * sigma.n
    out: list[tuple[int, ...]] = []
    for start in range(1, sigma.n + 1):
        if seen[start - 1]:
            continue
        cyc = []
        i = start
        while not seen[i - 1]:
            seen[i - 1] = True
            cyc.append(i)
            i = sigma.images[i - 1]
        out.append(tuple(cyc))
    return tuple(out)


def cycle_decomposition(sigma: Permutation) -> tuple[Permutation, tuple[int, ...]]:
    """Canonical conjugator ``gamma`` and cycle sizes of ``sigma``.

    Conjugating by ``Q = to_matrix(gamma)`` block-diagonalizes the matrix of
    ``sigma`` into full-cycle blocks::

        to_matrix(gamma).T @ to_matrix(sigma) @ to_matrix(gamma)
            == to_matrix(block_cyclic(sizes))

    ``gamma`` is pinned deterministically: list the cycles ordered by their
    minimal elements, each traversed from its minimal element; that listing
    is ``inverse(gamma)`` in word form.

    >>> cycle_decomposition(cyclic(4))[0].images
    (1, 2, 3, 4)
    >>> cycle_decomposition(Permutation((1, 3, 2)))[1]
    (1, 2)
    """
    cycs = cycles(sigma)
    listing = [elt for cyc in cycs for elt in cyc]
    gamma_images = [0] * sigma.n
    for pos, elt in enumerate(listing, start=1):
        gamma_images[elt - 1] = pos
    return Permutation(tuple(gamma_images)), tuple(len(c) for c in cycs)
