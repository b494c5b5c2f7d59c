"""Koszul signs, formal sums, grafting, and the relabelling action."""

import itertools
import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from operad_forge import trees
from operad_forge.algebra import (
    FormalSum, formal_sum_from_json, formal_sum_to_json, graft_planar,
    graft_spatial, relabel_action, tree_sum)
from operad_forge.signs import (
    antisymmetric_sign, koszul_sign, permutation_sign, sort_sign, unshuffles)
from conftest import P, l, n, s

# ---------------------------------------------------------------------------
# sign kernels
# ---------------------------------------------------------------------------


def bubble_oracle(perm, degrees):
    """Move elements one adjacent swap at a time, tallying Koszul factors."""
    items = list(zip(perm, [degrees[i - 1] for i in perm]))
    sign = 1
    for i in range(len(items)):
        for j in range(len(items) - 1 - i):
            if items[j][0] > items[j + 1][0]:
                sign *= (-1) ** (items[j][1] * items[j + 1][1])
                items[j], items[j + 1] = items[j + 1], items[j]
    return sign


@given(st.integers(2, 7), st.integers(0, 2**32 - 1))
@settings(max_examples=200, deadline=None)
def test_koszul_sign_matches_bubble_sort_oracle(k, seed):
    rng = random.Random(seed)
    perm = list(range(1, k + 1))
    rng.shuffle(perm)
    degrees = [rng.randint(-3, 3) for _ in range(k)]
    assert koszul_sign(perm, degrees) == bubble_oracle(perm, degrees)


@given(st.integers(2, 7), st.integers(0, 2**32 - 1))
@settings(max_examples=100, deadline=None)
def test_permutation_sign_is_koszul_on_odd_degrees(k, seed):
    rng = random.Random(seed)
    perm = list(range(1, k + 1))
    rng.shuffle(perm)
    assert permutation_sign(perm) == koszul_sign(perm, [1] * k)
    # antisymmetric sign = Koszul sign times the plain permutation sign
    degrees = [rng.randint(-2, 2) for _ in range(k)]
    assert antisymmetric_sign(perm, degrees) == \
        permutation_sign(perm) * koszul_sign(perm, degrees)


def test_unshuffle_count_and_order():
    for k, m in [(1, 1), (2, 2), (2, 3), (3, 2)]:
        got = list(unshuffles(k, m))
        import math
        assert len(got) == math.comb(k + m, k)
        for sigma in got:
            left, right = sigma[:k], sigma[k:]
            assert list(left) == sorted(left)
            assert list(right) == sorted(right)
        assert len(set(got)) == len(got)


def test_sort_sign_agrees_with_koszul():
    keys = [(3, 'c'), (1, 'a'), (2, 'b')]
    degrees = [1, 1, 0]
    sign, order = sort_sign(keys, degrees)
    assert [keys[i] for i in order] == sorted(keys)
    # moving the odd 'c' past the odd 'a' gives one sign
    assert sign == -1


# ---------------------------------------------------------------------------
# FormalSum
# ---------------------------------------------------------------------------

def test_formal_sum_drops_zeros_and_compares_by_value():
    a = FormalSum({'u': 1, 'v': 2})
    b = FormalSum({'v': 2, 'u': 1})
    assert a == b
    assert (a - b).is_zero()
    assert not (a - b)
    assert a.coefficient('u') == 1
    assert (a * 0).is_zero()
    assert (-a) + a == FormalSum.zero()
    assert len(a + b) == 2
    assert (a + b).coefficient('v') == 4


def test_formal_sum_from_terms_cancels():
    fs = FormalSum.from_terms([('u', 1), ('u', -1), ('w', Fraction(1, 2))])
    assert fs == FormalSum({'w': Fraction(1, 2)})


def test_formal_sum_linear_extension():
    fs = tree_sum((1, l(s(1), s(2))), (2, s(1)))
    doubled = fs.linear(lambda t: FormalSum.single(t, 2))
    assert doubled == fs * 2


def test_formal_sum_json_round_trip():
    fs = tree_sum((Fraction(-1, 2), l(s(1), s(2))),
                  (3, n([s(1)], [P])))
    back = formal_sum_from_json(formal_sum_to_json(fs))
    assert back == fs


# ---------------------------------------------------------------------------
# grafting
# ---------------------------------------------------------------------------

def _pools():
    sp = []
    for arity in range(1, 4):
        if arity == 1:
            sp.append(s(1))
        else:
            sp.extend(trees.enumerate_spatial_rooted(arity))
    mx = []
    for p in range(0, 3):
        for q in range(0, 4 - p):
            if 2 * p + q >= 2:
                mx.extend(trees.enumerate_planar_rooted(p, q))
    return sp, mx


SPATIAL_POOL, MIXED_POOL = _pools()
HOST_POOL = [t for t in MIXED_POOL + SPATIAL_POOL
             if trees.spatial_labels(t)]


@given(st.integers(0, len(HOST_POOL) - 1),
       st.integers(0, len(SPATIAL_POOL) - 1),
       st.integers(1, 4))
@settings(max_examples=200, deadline=None)
def test_spatial_graft_degree_additivity(hi, yi, slot)    :
    x, y = HOST_POOL[hi], SPATIAL_POOL[yi]
    nslots = len(trees.spatial_labels(x))
    i = 1 + (slot - 1) % nslots
    sign, out = graft_spatial(x, i, y)
    assert sign in (1, -1)
    assert trees.koszul_degree(out) == \
        trees.koszul_degree(x) + trees.koszul_degree(y)
    got_p, got_q = (len(trees.spatial_labels(out)), None)
    assert got_p == len(trees.spatial_labels(x)) + \
        len(trees.spatial_labels(y)) - 1
    assert trees.is_canonical(out)


PLANAR_HOSTS = [t for t in MIXED_POOL
                if not trees.is_spatial(t) and trees.leaf_profile(t)[1]]


@given(st.integers(0, len(PLANAR_HOSTS) - 1),
       st.integers(0, len(MIXED_POOL) - 1),
       st.integers(1, 4))
@settings(max_examples=200, deadline=None)
def test_planar_graft_degree_additivity(hi, yi, slot):
    x, y = PLANAR_HOSTS[hi], MIXED_POOL[yi]
    q = trees.leaf_profile(x)[1]
    i = 1 + (slot - 1) % q
    sign, out = graft_planar(x, i, y)
    assert sign in (1, -1)
    assert trees.koszul_degree(out) == \
        trees.koszul_degree(x) + trees.koszul_degree(y)
    assert trees.is_canonical(out)


def test_spatial_graft_identity_leaf():
    # grafting a bare leaf is relabelling only: no sign, same shape
    for x in HOST_POOL[:40]:
        for i in sorted(trees.spatial_labels(x)):
            sign, out = graft_spatial(x, i, s(1))
            assert (sign, out) == (1, x)


def test_nested_spatial_graft_associativity():
    # x o_i (y o_j z) == (x o_i y) o_{i+j-1} z up to the shared sign
    rng = random.Random(5)
    for _ in range(120):
        x = rng.choice([t for t in SPATIAL_POOL if not trees.is_leaf(t)])
        y = rng.choice([t for t in SPATIAL_POOL if not trees.is_leaf(t)])
        z = rng.choice(SPATIAL_POOL)
        px = len(trees.spatial_labels(x))
        py = len(trees.spatial_labels(y))
        i = rng.randint(1, px)
        j = rng.randint(1, py)
        s1, yz = graft_spatial(y, j, z)
        s2, left = graft_spatial(x, i, yz)
        t1, xy = graft_spatial(x, i, y)
        t2, right = graft_spatial(xy, i + j - 1, z)
        assert left == right
        assert s1 * s2 == t1 * t2


def test_disjoint_spatial_grafts_commute_with_koszul_swap():
    rng = random.Random(9)
    for _ in range(120):
        x = rng.choice([t for t in SPATIAL_POOL
                        if len(trees.spatial_labels(t)) >= 2])
        y = rng.choice(SPATIAL_POOL)
        z = rng.choice(SPATIAL_POOL)
        px = len(trees.spatial_labels(x))
        py = len(trees.spatial_labels(y))
        i, k = sorted(rng.sample(range(1, px + 1), 2))
        s1, xy = graft_spatial(x, i, y)
        s2, a = graft_spatial(xy, k + py - 1, z)
        t1, xz = graft_spatial(x, k, z)
        t2, b = graft_spatial(xz, i, y)
        assert a == b
        swap = (-1) ** (trees.koszul_degree(y) * trees.koszul_degree(z))
        assert s1 * s2 == swap * t1 * t2


# ---------------------------------------------------------------------------
# relabelling action
# ---------------------------------------------------------------------------

@given(st.integers(0, len(HOST_POOL) - 1), st.integers(0, 2**32 - 1))
@settings(max_examples=150, deadline=None)
def test_relabel_action_is_a_group_action(idx, seed):
    t = HOST_POOL[idx]
    p = len(trees.spatial_labels(t))
    rng = random.Random(seed)
    sigma = list(range(1, p + 1))
    tau = list(range(1, p + 1))
    rng.shuffle(sigma)
    rng.shuffle(tau)
    # identity
    assert relabel_action(list(range(1, p + 1)), t) == FormalSum.single(t)
    # composition: sigma after tau
    (u, cu), = relabel_action(tau, t).items()
    lhs = relabel_action(sigma, u) * cu
    comp = [sigma[tau[k] - 1] for k in range(p)]
    rhs = relabel_action(comp, t)
    assert lhs == rhs


def test_relabel_action_agrees_with_canonicalize():
    # relabelling then canonicalizing must give the same signed answer as
    # the action itself
    rng = random.Random(11)
    for _ in range(80):
        t = rng.choice(HOST_POOL)
        p = len(trees.spatial_labels(t))
        perm = list(range(1, p + 1))
        rng.shuffle(perm)

        def swap(node):
            if node[0] == 's':
                return ('s', perm[node[1] - 1])
            if node[0] == 'p':
                return node
            if node[0] == 'l':
                return ('l', tuple(swap(c) for c in node[1]))
            return ('n', tuple(swap(c) for c in node[1]),
                    tuple(swap(c) for c in node[2]))

        sign, canon = trees.canonicalize(swap(t))
        assert relabel_action(perm, t) == FormalSum.single(canon, sign)
