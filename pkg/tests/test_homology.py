"""Stratum complexes: dimensions, Betti numbers, Euler characteristics.

The Betti oracle is the generating polynomial prod_{i=1}^{p-1} (1 + i t),
computed here from scratch; the face-count oracle for the purely planar
strata is the classical triangulation count C(q-2,k) C(q+k,k) / (k+1).
"""

import math
from fractions import Fraction

import pytest

from operad_forge import homology, trees
from operad_forge.algebra import FormalSum, tree_sum
from operad_forge.differential import d_tree
from operad_forge.linalg import matmul_check_zero
from conftest import P, l, n, s


def betti_oracle(p):
    """Coefficients of prod_{i=1}^{p-1} (1 + i*t)."""
    poly = [1]
    for i in range(1, p):
        poly = [a + i * b for a, b in
                zip(poly + [0], [0] + poly)]
    return poly


def normalize(v):
    out = list(v)
    while out and out[-1] == 0:
        out.pop()
    return out or [0]


@pytest.mark.parametrize("p,q", [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4),
                                 (2, 0), (2, 1), (2, 2),
                                 (3, 0), (3, 1)])
def test_betti_against_generating_polynomial(p, q):
    got = homology.betti(p, q)
    assert normalize(got) == normalize(betti_oracle(p))


def planar_face_count(q, k):
    """Faces with k diagonals of the (q+1)-gon triangulation fan."""
    return math.comb(q - 2, k) * math.comb(q + k, k) // (k + 1)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 6, 7])
def test_planar_f_vector_matches_face_counts(q):
    fv = homology.f_vector(0, q)
    expected = [planar_face_count(q, k) for k in range(q - 1)]
    assert fv == expected
    assert homology.euler_characteristic(0, q) == 1


def test_small_mixed_f_vectors():
    assert homology.f_vector(1, 2) == [1, 6, 6]
    assert homology.f_vector(2, 0) == [1, 3, 2]
    assert homology.f_vector(2, 1)[1] == 9


def test_euler_characteristic_split():
    # contractible for p <= 1, zero once a genuine bracket direction exists
    for p, q in [(0, 2), (0, 5), (1, 0), (1, 3)]:
        assert homology.euler_characteristic(p, q) == 1
    for p, q in [(2, 0), (2, 1), (2, 2), (3, 0)]:
        assert homology.euler_characteristic(p, q) == 0


def test_complex_report_shape():
    rep = homology.complex_report(2, 0)
    assert rep == {"p": 2, "q": 0, "f_vector": [1, 3, 2],
                   "betti": [1, 1, 0], "euler": 0}


@pytest.mark.parametrize("p,q", [(0, 4), (1, 2), (2, 0), (2, 1), (3, 0)])
def test_matrix_level_d_squared(p, q):
    cx = homology.assemble_complex(p, q)
    for m in sorted(cx.bases):
        if m >= 2:
            assert matmul_check_zero(cx.matrix_rows(m - 1), cx.matrix_rows(m))


def test_spatial_complex_dims():
    cx = homology.assemble_complex_spatial(4)
    # 26 trees on 4 wiggly leaves spread over chain degrees; the corolla
    # sits at the top and the (2n-3)!! = 15 binary trees at the bottom
    assert sum(cx.dims()) == 26
    assert cx.dims()[-1] == 1
    assert {m: len(ts) for m, ts in cx.bases.items()} == {3: 15, 4: 10, 5: 1}


def test_is_coboundary_positive():
    # d of anything is a coboundary, and the witness actually works
    t = trees.mixed_corolla(2, 1)
    x = d_tree(t)
    ok, w = homology.is_coboundary(x)
    assert ok
    lhs = FormalSum.zero()
    for u, c in w.items():
        lhs = lhs + d_tree(u) * c
    assert lhs == x


def test_is_coboundary_negative():
    # the top corolla spans H^0 of its stratum, so it is never exact
    t = trees.mixed_corolla(2, 0)
    ok, w = homology.is_coboundary(FormalSum.single(t))
    assert not ok and w is None


def test_is_coboundary_rejects_mixed_degrees():
    t = trees.mixed_corolla(1, 2)
    bad = FormalSum.single(t) + d_tree(t)
    with pytest.raises(trees.TreeError):
        homology.is_coboundary(bad)


def test_zero_is_trivially_exact():
    ok, w = homology.is_coboundary(FormalSum.zero())
    assert ok and w.is_zero()
