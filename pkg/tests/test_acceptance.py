"""Acceptance battery: one test per criterion, each with its stated budget.

Run with ``pytest tests/test_acceptance.py -v`` to get a pass/fail line per
criterion.  Every check is exact rational arithmetic; the timing asserts
encode the advertised budgets (generous on any recent machine).
"""

import math
import random
import time
from fractions import Fraction

from operad_forge import homology, morphism, trees
from operad_forge.algebra import FormalSum
from operad_forge.coderivation import (
    GradedMap, GradedSpace, antisymmetric_action, check_equivalence,
    conjugate_family, family_from_json, gerstenhaber_sign_check,
    shift_operator, symmetric_action)
from operad_forge.differential import d_sum, d_tree
from conftest import (
    PERTURBED_CASES, T_ACTION, VALID_FAMILY_DOCS, unitriangular_deg0)
from test_differential import D_N11, D_N12, D_N20, D_N21


def test_criterion_1_d_squared_is_zero_everywhere():
    start = time.monotonic()
    mixed = 0
    for p in range(0, 4):
        for q in range(0, 8 - 2 * p):
            if 2 * p + q < 2:
                continue
            for t in trees.enumerate_planar_rooted(p, q):
                assert d_sum(d_tree(t)).is_zero(), trees.serialize(t)
                mixed += 1
    spatial = 0
    for arity in range(2, 8):
        for t in trees.enumerate_spatial_rooted(arity):
            assert d_sum(d_tree(t)).is_zero(), trees.serialize(t)
            spatial += 1
    assert mixed == 6548
    assert spatial == 42227
    assert time.monotonic() - start < 300


def test_criterion_2_differential_term_counts_match_fixtures():
    from operad_forge.differential import d_corolla_mixed
    for (p, q), fixture, count in [((1, 1), D_N11, 2), ((2, 0), D_N20, 3),
                                   ((1, 2), D_N12, 6), ((2, 1), D_N21, 9)]:
        got = d_corolla_mixed(p, q)
        assert got == fixture
        assert len(got) == count


def _betti_oracle(p):
    poly = [1]
    for i in range(1, p):
        poly = [a + i * b for a, b in zip(poly + [0], [0] + poly)]
    return poly


def _normalize(v):
    out = list(v)
    while out and out[-1] == 0:
        out.pop()
    return out or [0]


def test_criterion_3_betti_numbers_match_the_polynomial_oracle():
    start = time.monotonic()
    targets = [(1, q) for q in range(5)] + \
              [(2, q) for q in range(3)] + [(3, 0), (3, 1)]
    for p, q in targets:
        assert _normalize(homology.betti(p, q)) == \
            _normalize(_betti_oracle(p)), (p, q)
    # the two spot values, written out (trailing zeros are padding: the
    # returned list always has one entry per chain degree of the stratum)
    assert _normalize(homology.betti(3, 0)) == [1, 3, 2]
    assert homology.betti(3, 1)[:5] == [1, 3, 2, 0, 0]
    assert all(b == 0 for b in homology.betti(3, 1)[5:])
    assert time.monotonic() - start < 120


def test_criterion_4_f_vectors_and_euler_characteristics():
    # purely planar strata against the closed-form face counts
    for q in range(2, 8):
        fv = homology.f_vector(0, q)
        oracle = [math.comb(q - 2, k) * math.comb(q + k, k) // (k + 1)
                  for k in range(q - 1)]
        assert fv == oracle, q
        assert homology.euler_characteristic(0, q) == 1
    assert homology.f_vector(1, 2) == [1, 6, 6]
    assert homology.f_vector(2, 0) == [1, 3, 2]
    assert homology.euler_characteristic(2, 0) == 0
    assert homology.f_vector(2, 1)[1] == 9
    assert homology.euler_characteristic(2, 1) == 0


def test_criterion_5_coderivation_detector_equivalence():
    start = time.monotonic()
    rng = random.Random(411)

    def conjugated(doc):
        fam = family_from_json(doc)
        return conjugate_family(fam, unitriangular_deg0(fam.L, rng),
                                unitriangular_deg0(fam.A, rng))

    # the worked action example, as written
    rep = check_equivalence(family_from_json(T_ACTION), max_word=4)
    assert rep.relations_ok and rep.d_squared_ok and rep.equivalent

    # 10 valid-by-construction families: random changes of basis applied to
    # the hand-proven ones
    labels = sorted(VALID_FAMILY_DOCS)
    valid = [conjugated(VALID_FAMILY_DOCS[lab]) for lab in labels]
    valid += [conjugated(VALID_FAMILY_DOCS[lab])
              for lab in ("dga", "dgla", "dgla-action", "homotopy-operator")]
    assert len(valid) == 10
    for fam in valid:
        rep = check_equivalence(fam, max_word=4)
        assert rep.equivalent
        assert rep.relations_ok and rep.d_squared_ok

    # 10 perturbed families, randomized the same way; the break must be seen
    # by the relation scan and by D^2 at the same first arity
    assert len(PERTURBED_CASES) == 10
    for label, doc, arity in PERTURBED_CASES:
        rep = check_equivalence(conjugated(doc), max_word=4)
        assert rep.equivalent, label
        assert not rep.relations_ok and not rep.d_squared_ok, label
        assert rep.min_relation_arity == rep.min_word_length == arity, label
    assert time.monotonic() - start < 120


def test_criterion_6_suspension_identities():
    rng = random.Random(9001)
    V = GradedSpace([("v0", 0), ("v1", 1), ("v2", 2)])
    deg = V.degrees
    deg_dn = {k: d - 1 for k, d in deg.items()}
    names = V.names()
    for length in range(1, 7):
        down = shift_operator(deg, length, -1)
        up = shift_operator(deg_dn, length, +1)
        sign = (-1) ** ((length * (length - 1) // 2) % 2)
        for _ in range(50):
            perm = list(range(1, length + 1))
            rng.shuffle(perm)
            sym = symmetric_action(perm, deg_dn)
            anti = antisymmetric_action(perm, deg)
            for _ in range(10):
                word = tuple(rng.choice(names) for _ in range(length))
                ws = FormalSum.single(word)
                assert up(down(ws)) == ws * sign
                assert up(sym(down(ws))) == anti(ws) * sign


def test_criterion_7_projection_chain_map_and_basis():
    start = time.monotonic()
    # the projection commutes with d up to exact terms on every tree in range
    rep = morphism.check_chain_map(bound=6, spatial_bound=5)
    assert rep["failures"] == []
    assert rep["cases"] == rep["literal_zero"] + rep["class_level_zero"]

    # the bracket-corolla case cancels on the nose, riding on the -1/2
    hook = ('n', (('s', 1),), (('n', (('s', 2),), ()),))
    capped = ('n', (('l', (('s', 1), ('s', 2))),), ())
    assert morphism.mu(hook) == FormalSum.single(capped, Fraction(-1, 2))
    assert morphism.mu_sum(d_tree(trees.mixed_corolla(2, 0))).is_zero()

    # grafted brackets pass through the projection untouched
    rep = morphism.check_module_morphism(bound=4)
    assert rep["failures"] == []
    assert rep["cases"] == rep["literal_zero"] == 99

    # harmonic representatives span exactly the cohomology, p <= 3, q <= 2
    for p in range(0, 4):
        for q in range(0, 3):
            if 2 * p + q < 2:
                continue
            basis = morphism.phi_basis(p, q).verify()
            assert basis["failures"] == [], (p, q)
            bet = homology.betti(p, q)
            dims = basis["dims"]
            assert dims == bet[:len(dims)], (p, q)
            assert all(b == 0 for b in bet[len(dims):]), (p, q)
    assert time.monotonic() - start < 300


def test_criterion_8_bracket_sign_identities():
    V = GradedSpace([("x", -1), ("y", 0)])
    l2 = GradedMap(2, 0, 1, V.degrees, {}, "L")
    l2.set(("x", "y"), (), "y", 1)
    m2 = GradedMap(2, 0, 0, V.degrees, {}, "L")
    rep = gerstenhaber_sign_check(V, l2, m2)
    assert rep["passed"]
    assert rep["antisymmetry"] == [] and rep["shifted_jacobi"] == []
    assert rep["jacobi"] == [] and rep["leibniz"] == []
    # dropping the sign prefactor must break antisymmetry
    assert rep["wrong_sign_detected"]
