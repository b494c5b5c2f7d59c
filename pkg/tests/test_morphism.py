"""The projection onto quotient shapes and the compatibility checkers.

Pinned values first (the -1/2 on the capped hook is the load-bearing one),
then the batch verifiers, then the calibration solver reproducing its own
frozen table from scratch on the smaller range.
"""

from fractions import Fraction

import pytest

from operad_forge import calibration, homology, trees
from operad_forge._mu_table import SKELETON_VALUES
from operad_forge.algebra import FormalSum, tree_sum
from operad_forge.differential import d_tree
from operad_forge.morphism import (
    OCClass, check_chain_map, check_module_morphism, in_generated_submodule,
    mu, mu_sum, phi_basis, verify_oc_relations)
from conftest import P, l, n, s

HOOK = n([s(1)], [n([s(2)], [])])
CAPPED = n([l(s(1), s(2))], [])


# --- pinned values ----------------------------------------------------------

def test_mu_fixes_quotient_shapes():
    for t in [n([], [P, P]), n([s(1)], []), CAPPED,
              n([], [n([], [P, P]), P]), l(s(1), s(2))]:
        assert mu(t) == FormalSum.single(t)


def test_mu_kills_wide_operations():
    assert mu(trees.mixed_corolla(2, 1)).is_zero()
    assert mu(trees.mixed_corolla(1, 1)).is_zero()
    assert mu(trees.spatial_corolla(3)).is_zero()
    assert mu(n([], [P, P, P])).is_zero()


def test_mu_on_the_hook_is_half_the_capped_bracket():
    assert mu(HOOK) == FormalSum.single(CAPPED, Fraction(-1, 2))
    # and the mirrored hook gives the same thing
    assert mu(n([s(2)], [n([s(1)], [])])) == \
        FormalSum.single(CAPPED, Fraction(-1, 2))


def test_mu_cancels_the_bracket_corolla_boundary_literally():
    assert mu_sum(d_tree(trees.mixed_corolla(2, 0))).is_zero()


def test_pinned_skeleton_entries():
    assert SKELETON_VALUES[HOOK] == {CAPPED: Fraction(-1, 2)}
    t = n([], [n([s(1)], []), P, n([s(2)], [])])
    u = n([], [n([l(s(1), s(2))], []), P])
    assert SKELETON_VALUES[t] == {u: Fraction(-1, 2)}
    t3 = n([s(1)], [n([s(2)], []), n([s(3)], [])])
    u3 = n([l(l(s(1), s(2)), s(3))], [])
    assert SKELETON_VALUES[t3] == {u3: Fraction(1, 3)}


def test_mu_is_chain_degree_preservingly_graded():
    for t, val in SKELETON_VALUES.items():
        kd = trees.koszul_degree(t)
        prof = trees.leaf_profile(t)
        for u, c in val.items():
            assert c != 0
            assert trees.koszul_degree(u) == kd
            assert trees.leaf_profile(u) == prof


# --- derived values on bracket-bearing trees --------------------------------

def test_bracket_grafted_hook_inherits_the_half():
    # replace leaf 1 of the hook by l(s1, s2): mu must transport along
    from operad_forge.algebra import graft_spatial
    sign, t = graft_spatial(HOOK, 1, trees.spatial_corolla(2))
    got = mu(t) * sign
    sign2, expect = graft_spatial(CAPPED, 1, trees.spatial_corolla(2))
    assert got == FormalSum.single(expect, Fraction(-1, 2) * sign2)


def test_in_generated_submodule():
    assert in_generated_submodule(HOOK)
    assert in_generated_submodule(CAPPED)
    assert in_generated_submodule(trees.spatial_corolla(5))
    assert not in_generated_submodule(trees.mixed_corolla(2, 1))


# --- batch verifiers --------------------------------------------------------

def test_chain_map_property_small():
    rep = check_chain_map(bound=5, spatial_bound=4)
    assert rep["failures"] == []
    assert rep["cases"] == rep["literal_zero"] + rep["class_level_zero"]
    assert rep["cases"] > 100


def test_module_morphism_identities():
    rep = check_module_morphism(bound=4, bidegree_bound=4, spatial_bound=3)
    assert rep["failures"] == []
    assert rep["cases"] == rep["literal_zero"] == 99


def test_oc_relations_hold():
    rep = verify_oc_relations(bound=4)
    assert rep["failures"] == []
    assert len(rep["witnesses"]) == 4


# --- cocycle classes --------------------------------------------------------

def test_oc_class_accepts_cocycles_and_rejects_the_rest():
    z = FormalSum.single(CAPPED)
    cls = OCClass(z)
    assert cls.rep == z
    assert cls.profile == ('n', 2, 0)
    assert not d_tree(trees.mixed_corolla(2, 1)).is_zero()
    with pytest.raises(trees.TreeError):
        OCClass(FormalSum.single(trees.mixed_corolla(2, 1)))


def test_oc_class_equality_mod_boundaries():
    t = trees.mixed_corolla(2, 0)
    z = FormalSum.single(CAPPED)
    shifted = z + d_tree(t)  # same class, different representative
    assert OCClass(z).equals(OCClass(shifted))
    assert not OCClass(z).equals(OCClass(z * 2))
    assert not OCClass(z).is_zero_class()
    assert OCClass(d_tree(t)).is_zero_class()


# --- the harmonic basis -----------------------------------------------------

@pytest.mark.parametrize("p,q", [(1, 1), (2, 0), (2, 1)])
def test_phi_basis_dimensions_match_betti(p, q):
    rep = phi_basis(p, q).verify()
    assert rep["failures"] == []
    bet = homology.betti(p, q)
    assert rep["dims"] == bet[:len(rep["dims"])]
    assert all(b == 0 for b in bet[len(rep["dims"]):])


# --- the solver reproduces its own table ------------------------------------

def test_calibration_regenerates_the_frozen_table():
    solved = calibration.solve_range(5)
    table = calibration.skeleton_table(solved)
    frozen = {t: v for t, v in SKELETON_VALUES.items()
              if 2 * trees.leaf_profile(t)[0] + trees.leaf_profile(t)[1] <= 5}
    assert table == frozen
