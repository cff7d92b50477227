"""Exact arithmetic for monomial (generalized permutation) matrices.

A monomial matrix is an invertible diagonal matrix times a permutation
matrix: exactly one nonzero per row and column.  This package provides, all
over exact rationals:

* permutations, their matrices, and canonical cycle decomposition;
* the sparse monomial representation, Frobenius normal form (direct sum of
  cyclic blocks), and closed-form powers;
* residue decompositions of polynomials and closed-form polynomial
  evaluation on monomial matrices;
* an exact decision procedure for which polynomials map every nonnegative
  monomial matrix of a given order to an entrywise nonnegative matrix, with
  constructive counterexamples;
* naive dense oracles that double-check every structured fast path.
"""

from .evaluator import (
    BlockCoefficients,
    block_coefficients,
    eval_cyclic_block,
    eval_monomial,
    eval_monomial_structured,
)
from .membership import (
    Counterexample,
    HalflineVerdict,
    MembershipReport,
    PartFailure,
    counterexample,
    nonnegative_on_halfline,
    preserves_monomial_nonnegativity,
)
from .monomial import (
    FrobeniusForm,
    MonomialMatrix,
    NotMonomialError,
    assemble,
    cyclic_block,
    cyclic_block_power,
    direct_sum,
    frobenius_normal_form,
    from_dense,
    multiply,
    power,
    to_dense,
    value_product,
)
from .permutation import (
    Permutation,
    apply,
    block_cyclic,
    compose,
    cycle_decomposition,
    cycles,
    cyclic,
    identity,
    inverse,
    to_matrix,
)
from .polynomial import (
    ParseError,
    Polynomial,
    cauchy_bound,
    derivative,
    eval_scalar,
    format_polynomial,
    gcd,
    parse_polynomial,
    part,
    parts_sum,
    poly_divmod,
    squarefree_decomposition,
    squarefree_odd_part,
    sturm_count,
)
from .rationals import Rational, as_rational, rational_vector

__version__ = "0.1.0"
