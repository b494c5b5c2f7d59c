"""Exact sparse linear algebra: rank, solving, and matrix products.

Everything is checked against a dense Fraction Gaussian elimination written
independently inside this file.
"""

import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from operad_forge.linalg import exact_rank, matmul_check_zero, solve, sparse_rows


def dense_rank(matrix):
    m = [[Fraction(v) for v in row] for row in matrix]
    rank = 0
    ncols = len(m[0]) if m else 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [v * inv for v in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        row += 1
        rank += 1
    return rank


def to_sparse(matrix):
    return [{j: v for j, v in enumerate(row) if v} for row in matrix]


@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2**32 - 1))
@settings(max_examples=200, deadline=None)
def test_rank_matches_dense_oracle(nrows, ncols, seed):
    rng = random.Random(seed)
    matrix = [[Fraction(rng.randint(-2, 2), rng.choice([1, 1, 2, 3]))
               for _ in range(ncols)] for _ in range(nrows)]
    # sprinkle zeros so sparsity paths get exercised
    for row in matrix:
        for j in range(ncols):
            if rng.random() < 0.5:
                row[j] = Fraction(0)
    assert exact_rank(to_sparse(matrix)) == dense_rank(matrix)


@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2**32 - 1))
@settings(max_examples=200, deadline=None)
def test_solve_returns_actual_solutions(nrows, ncols, seed):
    """Build A and a random x0, then ask for any solution of A x = A x0."""
    rng = random.Random(seed)
    matrix = [[Fraction(rng.randint(-2, 2)) if rng.random() < 0.6 else Fraction(0)
               for _ in range(ncols)] for _ in range(nrows)]
    x0 = [Fraction(rng.randint(-3, 3), rng.choice([1, 2])) for _ in range(ncols)]
    rhs = {i: sum(matrix[i][j] * x0[j] for j in range(ncols))
           for i in range(nrows)}
    x = solve(to_sparse(matrix), rhs, ncols)
    assert x is not None
    for i in range(nrows):
        lhs = sum(matrix[i][j] * x.get(j, Fraction(0)) for j in range(ncols))
        assert lhs == rhs[i]


def test_solve_detects_inconsistency():
    # x + y = 1 alongside 2x + 2y = 3 has no solution
    rows = [{0: 1, 1: 1}, {0: 2, 1: 2}]
    assert solve(rows, {0: 1, 1: 3}, 2) is None
    # a rhs entry with an all-zero matrix row is also inconsistent
    assert solve([{0: 1}, {}], {1: 5}, 1) is None
    # ... but a zero rhs there is fine
    assert solve([{0: 1}, {}], {0: 2}, 1) == {0: Fraction(2)}


def test_solve_prefers_sparse_witness():
    # underdetermined: one equation, three unknowns; free vars stay at zero
    x = solve([{0: 1, 1: 1, 2: 1}], {0: 6}, 3)
    assert x is not None
    assert sum(x.get(j, Fraction(0)) for j in range(3)) == 6
    assert len(x) == 1


def test_matmul_check_zero():
    # A = [[1, 1]], B = [[1], [-1]]  ->  AB = 0
    a = sparse_rows([{0: 1, 1: 1}])
    b = sparse_rows([{0: 1}, {0: -1}])
    assert matmul_check_zero(a, b)
    b2 = sparse_rows([{0: 1}, {0: 1}])
    assert not matmul_check_zero(a, b2)


@given(st.integers(2, 5), st.integers(0, 2**32 - 1))
@settings(max_examples=100, deadline=None)
def test_matmul_zero_agrees_with_dense_product(k, seed):
    rng = random.Random(seed)
    a = [[Fraction(rng.randint(-1, 1)) for _ in range(k)] for _ in range(k)]
    b = [[Fraction(rng.randint(-1, 1)) for _ in range(k)] for _ in range(k)]
    dense = [[sum(a[i][j] * b[j][kk] for j in range(k)) for kk in range(k)]
             for i in range(k)]
    is_zero = all(not v for row in dense for v in row)
    assert matmul_check_zero(to_sparse(a), to_sparse(b)) == is_zero
