"""Shared fixtures: structure-constant families and small tree helpers."""

import copy

import pytest

# --- tree shorthand --------------------------------------------------------


def s(i):
    return ('s', i)


def l(*kids):
    return ('l', tuple(kids))


def n(skids, pkids):
    return ('n', tuple(skids), tuple(pkids))


P = ('p',)


# --- structure-constant families -------------------------------------------
# A graded-commutative DGA: d(a) = b, a*a = a, a*b = b (b*b = 0 by parity).
T_DGA = {
    "L": [], "A": [{"name": "a", "deg": 0}, {"name": "b", "deg": 1}],
    "maps": [
        {"kind": "n", "p": 0, "q": 1,
         "entries": [{"in": ["a"], "out": {"b": "1"}}]},
        {"kind": "n", "p": 0, "q": 2,
         "entries": [{"in": ["a", "a"], "out": {"a": "1"}},
                     {"in": ["a", "b"], "out": {"b": "1"}}]},
    ]}

# A chain map n_{1,0} into a square-zero algebra.
T3 = {
    "L": [{"name": "x", "deg": 0}],
    "A": [{"name": "a", "deg": 0}, {"name": "b", "deg": 0}],
    "maps": [
        {"kind": "n", "p": 1, "q": 0,
         "entries": [{"in": ["x"], "out": {"a": "1"}}]},
        {"kind": "n", "p": 0, "q": 2,
         "entries": [{"in": ["a", "a"], "out": {"b": "1"}}]},
    ]}

# A homotopy operator n_{1,1} over a product with no differential.
T_N11 = {
    "L": [{"name": "x", "deg": 1}],
    "A": [{"name": "a", "deg": 0}, {"name": "b", "deg": 0}],
    "maps": [
        {"kind": "n", "p": 0, "q": 2,
         "entries": [{"in": ["a", "a"], "out": {"b": "1"}}]},
        {"kind": "n", "p": 1, "q": 1,
         "entries": [{"in": ["x", "a"], "out": {"b": "1"}}]},
    ]}

# Differentials on both sides, no interaction.
T_L1 = {
    "L": [{"name": "x", "deg": 0}, {"name": "y", "deg": 1}],
    "A": [{"name": "a", "deg": 0}, {"name": "b", "deg": 1}],
    "maps": [
        {"kind": "l", "p": 1, "q": 0,
         "entries": [{"in": ["x"], "out": {"y": "1"}}]},
        {"kind": "n", "p": 0, "q": 1,
         "entries": [{"in": ["a"], "out": {"b": "1"}}]},
    ]}

# A DGLA: d(x0) = x1, [x0, y1] = x0, [x1, y1] = -x1 (Jacobi holds on the nose).
T_DGLA_L = {
    "L": [{"name": "x0", "deg": 0}, {"name": "x1", "deg": 1},
          {"name": "y1", "deg": 1}],
    "A": [{"name": "a", "deg": 0}, {"name": "b", "deg": 1}],
    "maps": [
        {"kind": "l", "p": 1, "q": 0,
         "entries": [{"in": ["x0"], "out": {"x1": "1"}}]},
        {"kind": "l", "p": 2, "q": 0,
         "entries": [{"in": ["x0", "y1"], "out": {"x0": "1"}},
                     {"in": ["x1", "y1"], "out": {"x1": "-1"}}]},
    ]}

# The same DGLA acting on an algebra by derivations: n_{1,1}(y1, -) scales,
# n_{0,2} squares a into b.  Found by hand and pinned after checking that the
# action constants are the unique ones (up to scale) compatible with the
# bracket above.
T_ACTION = {
    "L": [{"name": "x0", "deg": 0}, {"name": "x1", "deg": 1},
          {"name": "y1", "deg": 1}],
    "A": [{"name": "a", "deg": 1}, {"name": "b", "deg": 2}],
    "maps": [
        {"kind": "l", "p": 1, "q": 0,
         "entries": [{"in": ["x0"], "out": {"x1": "1"}}]},
        {"kind": "l", "p": 2, "q": 0,
         "entries": [{"in": ["x0", "y1"], "out": {"x0": "1"}},
                     {"in": ["x1", "y1"], "out": {"x1": "-1"}}]},
        {"kind": "n", "p": 0, "q": 2,
         "entries": [{"in": ["a", "a"], "out": {"b": "1"}}]},
        {"kind": "n", "p": 1, "q": 1,
         "entries": [{"in": ["y1", "a"], "out": {"a": "1"}},
                     {"in": ["y1", "b"], "out": {"b": "2"}}]},
    ]}

VALID_FAMILY_DOCS = {
    "dga": T_DGA,
    "chain-map": T3,
    "homotopy-operator": T_N11,
    "two-differentials": T_L1,
    "dgla": T_DGLA_L,
    "dgla-action": T_ACTION,
}


def perturb(doc, kind, p, q, ins, out, delta):
    """Copy `doc` with one structure constant added (degree-consistent)."""
    d2 = copy.deepcopy(doc)
    for m in d2["maps"]:
        if m["kind"] == kind and m["p"] == p and m.get("q", 0) == q:
            m["entries"].append({"in": ins, "out": {out: str(delta)}})
            return d2
    d2["maps"].append({"kind": kind, "p": p, "q": q,
                       "entries": [{"in": ins, "out": {out: str(delta)}}]})
    return d2


# (label, perturbed doc, minimal arity both detectors must report)
PERTURBED_CASES = [
    ("action+n11(x1;a)=a", perturb(T_ACTION, "n", 1, 1, ["x1", "a"], "a", 1), 2),
    ("action+l2(x0,y1)+=x0", perturb(T_ACTION, "l", 2, 0, ["x0", "y1"], "x0", 1), 2),
    ("dga+n02(a,b)+=b", perturb(T_DGA, "n", 0, 2, ["a", "b"], "b", 1), 2),
    ("dga+n03(a,a,b)=a", perturb(T_DGA, "n", 0, 3, ["a", "a", "b"], "a", 1), 3),
    ("action+n12(y1;a,a)=a", perturb(T_ACTION, "n", 1, 2, ["y1", "a", "a"], "a", 1), 4),
    ("two-diffs+n10(x)=a", perturb(T_L1, "n", 1, 0, ["x"], "a", 1), 1),
    ("action+l1(x0)+=y1", perturb(T_ACTION, "l", 1, 0, ["x0"], "y1", 1), 2),
    ("dga+n02(b,a)=b", perturb(T_DGA, "n", 0, 2, ["b", "a"], "b", 1), 2),
    ("homotopy+n11(x;b)=a", perturb(T_N11, "n", 1, 1, ["x", "b"], "a", 1), 3),
    ("dga+n04(b,b,a,a)=a", perturb(T_DGA, "n", 0, 4, ["b", "b", "a", "a"], "a", 1), 4),
]


@pytest.fixture
def action_family():
    from operad_forge.coderivation import family_from_json
    return family_from_json(T_ACTION)


def unitriangular_deg0(space, rng):
    """A guaranteed-invertible degree-0 change of basis (1s on the diagonal)."""
    from fractions import Fraction
    by_deg = {}
    for x, d in space.degrees.items():
        by_deg.setdefault(d, []).append(x)
    g = {}
    for names in by_deg.values():
        for i, x in enumerate(names):
            col = {x: Fraction(1)}
            for j in range(i + 1, len(names)):
                c = rng.randint(-2, 2)
                if c:
                    col[names[j]] = Fraction(c)
            g[x] = col
    return g
