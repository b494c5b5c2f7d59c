"""Solver that calibrates the projection's free values at desk scale.

Most of the projection is pinned by structure: quotient shapes pass through,
anything holding a bracket vertex of arity >= 3 dies, and bracket-bearing
binary trees inherit their value from one bidegree down through the grafting
action.  What remains -- "skeleton" trees, with no bracket vertices and at
least one planar vertex wider than a cap or a binary product -- is genuinely
free, and this module pins those down by solving, bidegree by bidegree, the
exact sparse linear system expressing

    mu(dU) is a coboundary, for every canonical tree U,

together with label-orbit equivariance (one unknown vector per orbit, with
stabilizer constraints).  Unknowns are coefficient vectors over the quotient
shapes of the same chain degree.  The system turns out to be solvable at
every bidegree with 2p+q <= 6, and the lowest mixed case already forces the
hook tree to -1/2 times the capped bracket with no freedom at all.  Wider
skeletons admit genuinely free directions; the table frozen in ``_mu_table``
is the deterministic solution with free variables at zero.

Regenerate with ``python -m operad_forge.calibration`` (prints the data
module to stdout) after any change to the differential's sign conventions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from . import homology, linalg, trees
from .algebra import graft_spatial, relabel_action
from .differential import d_tree
from .morphism import _all_binary, _derived_value, _oc_shape
from .trees import Tree

__all__ = ["solve_bidegree", "solve_range", "skeleton_table", "format_table"]


def _has_bracket(t: Tree) -> bool:
    return any(v[0] == 'l' for v in trees.iter_vertices(t))


def _has_wide_bracket(t: Tree) -> bool:
    return any(v[0] == 'l' and len(v[1]) > 2 for v in trees.iter_vertices(t))


def solve_bidegree(p: int, q: int, solved: dict) -> bool:
    """Extend `solved` with values for every canonical tree of one bidegree.

    `solved` maps canonical trees to {quotient shape: Fraction} dicts and
    must already contain all bidegrees (p', q) with p' < p.  Returns False
    if the constraint system admits no solution (which would falsify the
    whole construction -- it does not happen below total weight 7).
    """
    cx = homology.assemble_complex(p, q)
    nm = (max(cx.bases) + 1) if cx.bases else 0
    bases = [tuple(cx.bases.get(m, ())) for m in range(nm)]
    idx = [{t: i for i, t in enumerate(basis)} for basis in bases]

    kind = {}
    for basis in bases:
        for t in basis:
            if _oc_shape(t) and _all_binary(t):
                kind[t] = 'oc'
            elif _has_wide_bracket(t) or not _all_binary(t):
                kind[t] = 'zero'
            elif _has_bracket(t):
                kind[t] = 'derived'
            else:
                kind[t] = 'skel'

    for basis in bases:
        for t in basis:
            if kind[t] == 'oc':
                solved[t] = {t: Fraction(1)}
            elif kind[t] == 'zero':
                solved[t] = {}
            elif kind[t] == 'derived':
                solved[t] = _derived_value(t, solved.__getitem__)

    # label-orbit structure on the undetermined trees
    skels = [t for basis in bases for t in basis if kind[t] == 'skel']
    orbit_rep = {}
    orbit_map = {}   # t -> (rep, perm, c) with relabel(perm, rep) = c * t
    stab = []        # (rep, perm, c) fixing rep up to the sign c
    perms = [list(s) for s in permutations(range(1, p + 1))] or [[]]
    for t in skels:
        if t in orbit_rep:
            continue
        images = {}
        for perm in perms:
            (t2, c2), = relabel_action(perm, t).items()
            images.setdefault(t2, (perm, c2))
        rep = min(images, key=trees.serialize)
        for t2 in images:
            orbit_rep[t2] = rep
        for perm in perms:
            (t2, c2), = relabel_action(perm, rep).items()
            if t2 == rep and perm != perms[0]:
                stab.append((rep, perm, c2))
            orbit_map.setdefault(t2, (rep, perm, c2))

    # one unknown per (orbit representative, same-degree quotient shape)
    m_of = {t: m for m, basis in enumerate(bases) for t in basis}
    ocs = {m: [t for t in bases[m] if kind[t] == 'oc'] for m in range(nm)}
    xids = []
    xcol = {}
    reps = sorted({orbit_rep[t] for t in skels}, key=trees.serialize)
    for rep in reps:
        for O in ocs[m_of[rep]]:
            xcol[(rep, O)] = len(xids)
            xids.append((rep, O))

    def mu_sym(t):
        """Split mu(t) into (known part, linear part over the unknowns)."""
        if kind[t] != 'skel':
            return solved[t], {}
        rep, perm, c = orbit_map[t]
        lin = {}
        for O in ocs[m_of[rep]]:
            (O2, cO), = relabel_action(perm, O).items()
            lin.setdefault((rep, O), {})[O2] = cO / c
        return {}, lin

    # coboundary pivots per target degree, for reducing mod im(d)
    piv_data = {}
    for m in range(nm - 1):
        rows = []
        for W in bases[m + 1]:
            vec = {idx[m][u]: c for u, c in d_tree(W).items()}
            if vec:
                rows.append(vec)
        pivots = linalg._eliminate(linalg.sparse_rows(rows))
        by_col = {col: row for col, row in pivots}
        order = {col: i for i, (col, _) in enumerate(pivots)}
        piv_data[m] = (pivots, by_col, order)

    def reduce_vec(vec, pivots, by_col, order):
        vec = dict(vec)
        while vec:
            hits = [order[j] for j in vec if j in by_col]
            if not hits:
                break
            j, piv = pivots[min(hits)]
            factor = vec[j] / piv[j]
            for k, v in piv.items():
                new = vec.get(k, Fraction(0)) - factor * v
                if new:
                    vec[k] = new
                else:
                    vec.pop(k, None)
        return vec

    eq_rows = []
    eq_rhs = {}

    # equivariance: a label permutation fixing the orbit rep must fix its value
    for rep, perm, c in stab:
        m = m_of[rep]
        acc = {}
        for O in ocs[m]:
            (O2, cO), = relabel_action(perm, O).items()
            acc.setdefault(O2, {})[xcol[(rep, O)]] = cO / c
        for O2, row in acc.items():
            r = dict(row)
            j = xcol.get((rep, O2))
            if j is not None:
                r[j] = r.get(j, Fraction(0)) - 1
            r = {k: v for k, v in r.items() if v}
            if r:
                eq_rhs[len(eq_rows)] = Fraction(0)
                eq_rows.append(r)

    # boundary-kill: mu(dU) must reduce to zero against the coboundary pivots
    for m1 in range(1, nm):
        tgt = m1 - 1
        pivots, by_col, order = piv_data[tgt]
        for U in bases[m1]:
            const = {}
            lin = {}
            for term, cc in d_tree(U).items():
                cvec, lvec = mu_sym(term)
                for u, v in cvec.items():
                    j = idx[tgt][u]
                    nv = const.get(j, Fraction(0)) + cc * v
                    if nv:
                        const[j] = nv
                    else:
                        const.pop(j, None)
                for xid, vec in lvec.items():
                    dst = lin.setdefault(xid, {})
                    for u, v in vec.items():
                        j = idx[tgt][u]
                        nv = dst.get(j, Fraction(0)) + cc * v
                        if nv:
                            dst[j] = nv
                        else:
                            dst.pop(j, None)
            lin = {k: v for k, v in lin.items() if v}
            if not const and not lin:
                continue
            rconst = reduce_vec(const, pivots, by_col, order)
            rlin = {k: reduce_vec(v, pivots, by_col, order)
                    for k, v in lin.items()}
            rlin = {k: v for k, v in rlin.items() if v}
            for j in set(rconst) | {j for v in rlin.values() for j in v}:
                row = {}
                for xid, vec in rlin.items():
                    if j in vec:
                        row[xcol[xid]] = vec[j]
                rhs = -rconst.get(j, Fraction(0))
                if not row:
                    if rhs:
                        return False    # fixed part already inconsistent
                    continue
                eq_rhs[len(eq_rows)] = rhs
                eq_rows.append(row)

    sol = linalg.solve(eq_rows, eq_rhs, len(xids)) if eq_rows else {}
    if sol is None:
        return False

    for t in skels:
        rep, perm, c = orbit_map[t]
        out = {}
        for O in ocs[m_of[rep]]:
            v = sol.get(xcol[(rep, O)], Fraction(0))
            if not v:
                continue
            (O2, cO), = relabel_action(perm, O).items()
            nv = out.get(O2, Fraction(0)) + v * cO / c
            if nv:
                out[O2] = nv
            else:
                out.pop(O2, None)
        solved[t] = out
    return True


def solve_range(max_total: int = 6) -> dict:
    """Solve every mixed bidegree with 2 <= 2p+q <= max_total, ascending p."""
    solved = {}
    bids = sorted((p, q) for p in range(0, max_total // 2 + 1)
                  for q in range(0, max_total + 1)
                  if 2 <= 2 * p + q <= max_total)
    for p, q in bids:
        if not solve_bidegree(p, q, solved):
            raise ArithmeticError(f"no consistent projection at bidegree "
                                  f"({p},{q})")
    return solved


def skeleton_table(solved: dict) -> dict:
    """Just the nonzero skeleton entries -- what _mu_table freezes."""
    out = {}
    for t, val in solved.items():
        if not val or trees.is_spatial(t):
            continue
        if _has_bracket(t) or (_oc_shape(t) and _all_binary(t)):
            continue
        out[t] = dict(val)
    return out


def format_table(table: dict) -> str:
    lines = [
        '"""Calibrated projection values on skeleton trees, 2p+q <= 6.',
        "",
        "Generated by operad_forge.calibration; regenerate with",
        "``python -m operad_forge.calibration`` instead of editing.",
        '"""',
        "",
        "from fractions import Fraction",
        "",
        "SKELETON_VALUES = {",
    ]
    for t in sorted(table, key=trees.serialize):
        items = ", ".join(
            f"{u!r}: Fraction({c.numerator}, {c.denominator})"
            for u, c in sorted(table[t].items(),
                               key=lambda kv: trees.serialize(kv[0])))
        lines.append(f"    {t!r}:")
        lines.append(f"        {{{items}}},")
    lines.append("}")
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    print(format_table(skeleton_table(solve_range())), end="")
