"""Stratum chain complexes: bases by chain degree, Betti numbers, f-vectors.

Chain degree convention: a vertex-bearing tree T sits in chain degree
m(T) = -koszul_degree(T), which equals the dimension of its stratum.  The
corolla tops the complex at m = 2p+q-2 (planar-rooted) or 2n-3 (spatial) and
the fully expanded binary trees sit at the bottom.  The differential d_tree
drops m by exactly one, so the complex reads

    0 -> C_{top} -> ... -> C_m -> C_{m-1} -> ... -> 0

and we report homology as a Betti vector indexed by m >= 0.

The expected answers are classical: for planar-rooted (p,q) strata the Betti
vector matches the homology of configurations of p points in the plane
(coefficients of prod_{i<p}(1+i*t)), independent of q, and the f-vector of the
q-leaf planar stratum poset is the associahedron face count.  Both facts are
used as independent oracles by the tests, not assumed here.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import linalg, trees
from .algebra import FormalSum
from .differential import d_tree
from .trees import Tree, TreeError

__all__ = [
    "ChainComplex", "assemble_complex", "assemble_complex_spatial",
    "chain_degree", "betti", "f_vector", "euler_characteristic",
    "is_coboundary", "exact_rank", "complex_report", "thread_count",
]

exact_rank = linalg.exact_rank  # re-export: the homology-facing contract


def thread_count() -> int:
    """Worker cap for column-parallel assembly (OPERAD_FORGE_THREADS, default 1)."""
    raw = os.environ.get("OPERAD_FORGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def chain_degree(t: Tree) -> int:
    """m(T) = -koszul_degree(T): the dimension of the stratum of T."""
    return -trees.koszul_degree(t)


@dataclass(frozen=True)
class ChainComplex:
    """Bases and differential matrices of one stratum complex.

    ``bases[m]`` is the ordered tuple of canonical trees in chain degree m;
    ``rows[m]`` is the matrix of d: C_m -> C_{m-1} stored as sparse rows
    (row index = position in bases[m-1], column index = position in bases[m]).
    """

    p: int
    q: int | None  # None marks a spatial (all-wiggly) complex on p leaves
    bases: dict
    rows: dict

    def dims(self) -> list[int]:
        top = max(self.bases) if self.bases else 0
        return [len(self.bases.get(m, ())) for m in range(top + 1)]

    def matrix_rows(self, m: int) -> list[dict[int, Fraction]]:
        return self.rows.get(m, [])


def _group_by_degree(pool) -> dict:
    by_m: dict[int, list] = {}
    for t in pool:
        by_m.setdefault(chain_degree(t), []).append(t)
    # canonical, reproducible ordering inside each degree
    return {m: tuple(sorted(ts, key=trees.serialize)) for m, ts in by_m.items()}


def _build(p, q, pool) -> ChainComplex:
    bases = _group_by_degree(pool)
    index = {m: {t: i for i, t in enumerate(ts)} for m, ts in bases.items()}
    rows: dict[int, list] = {}

    def column(m, j, t):
        img = d_tree(t)
        out = []
        lower = index.get(m - 1, {})
        for u, c in img.items():
            i = lower.get(u)
            if i is None:
                raise TreeError(f"d image leaves the complex: {trees.serialize(u)}")
            out.append((i, j, c))
        return out

    workers = thread_count()
    for m, ts in bases.items():
        mat = [dict() for _ in bases.get(m - 1, ())]
        jobs = [(m, j, t) for j, t in enumerate(ts)]
        if workers > 1 and len(jobs) > 64:
            with ThreadPoolExecutor(max_workers=workers) as pool_:
                chunks = pool_.map(lambda a: column(*a), jobs)
        else:
            chunks = (column(*a) for a in jobs)
        for chunk in chunks:
            for i, j, c in chunk:
                mat[i][j] = c
        rows[m] = mat
    cx = ChainComplex(p=p, q=q, bases=bases, rows=rows)
    _verify_square_zero(cx)
    return cx


def _verify_square_zero(cx: ChainComplex) -> None:
    for m in cx.bases:
        a = cx.matrix_rows(m)      # C_m -> C_{m-1}
        b = cx.matrix_rows(m + 1)  # C_{m+1} -> C_m
        if not a or not b:
            continue
        # (d o d) column k = sum_j b[j][k] * a[.][j]
        ncols_b = len(cx.bases[m + 1])
        acc = [dict() for _ in range(ncols_b)]
        for j, brow in enumerate(b):
            for k, w in brow.items():
                for arow_i, arow in enumerate(a):
                    v = arow.get(j)
                    if v:
                        s = acc[k].get(arow_i, Fraction(0)) + v * w
                        if s:
                            acc[k][arow_i] = s
                        else:
                            acc[k].pop(arow_i, None)
        if any(col for col in acc):
            raise TreeError(f"d^2 != 0 in complex ({cx.p},{cx.q}) at degree {m + 1}")


_CX_CACHE: dict = {}


def assemble_complex(p: int, q: int) -> ChainComplex:
    """The chain complex of the planar-rooted (p,q) stratum poset.

    Requires 2p+q >= 2.  Verifies d od = 0 on assembly.
    """
    if p < 0 or q < 0 or 2 * p + q < 2:
        raise TreeError(f"no planar stratum for (p,q)=({p},{q})")
    key = ('n', p, q)
    if key not in _CX_CACHE:
        _CX_CACHE[key] = _build(p, q, trees.enumerate_planar_rooted(p, q))
    return _CX_CACHE[key]


def assemble_complex_spatial(n: int) -> ChainComplex:
    """Chain complex of the all-spatial stratum poset on n >= 2 leaves."""
    if n < 2:
        raise TreeError(f"no spatial stratum for n={n}")
    key = ('l', n)
    if key not in _CX_CACHE:
        _CX_CACHE[key] = _build(n, None, trees.enumerate_spatial_rooted(n))
    return _CX_CACHE[key]


def betti(p: int, q: int) -> list[int]:
    """Betti numbers of the (p,q) complex, indexed by chain degree m.

    b_m = dim C_m - rank d_m - rank d_{m+1}, all ranks exact.
    """
    cx = assemble_complex(p, q)
    top = max(cx.bases)
    ranks = {m: linalg.exact_rank(cx.matrix_rows(m)) for m in range(top + 2)}
    out = []
    for m in range(top + 1):
        dim = len(cx.bases.get(m, ()))
        out.append(dim - ranks.get(m, 0) - ranks.get(m + 1, 0))
    return out


def f_vector(p: int, q: int) -> list[int]:
    """Stratum counts grouped by codimension (= internal edge count)."""
    cx = assemble_complex(p, q)
    top = max(cx.bases)
    # codim k <-> chain degree top - k
    return [len(cx.bases.get(top - k, ())) for k in range(top + 1)]


def euler_characteristic(p: int, q: int) -> int:
    """Alternating sum of stratum counts by dimension (= chain degree)."""
    cx = assemble_complex(p, q)
    return sum((-1) ** m * len(ts) for m, ts in cx.bases.items())


def is_coboundary(x: FormalSum, m: int | None = None,
                  cx: ChainComplex | None = None,
                  p: int | None = None, q: int | None = None):
    """Decide x = d(w) in its stratum complex; return (bool, witness | None).

    ``x`` must be supported in a single chain degree (pass ``m`` to assert
    which, else it is inferred).  The zero sum is a coboundary with witness 0.
    The containing complex is located from the support unless given.
    """
    if not x:
        return True, FormalSum.zero()
    degs = {chain_degree(t) for t, _ in x.items()}
    if len(degs) > 1:
        raise TreeError(f"mixed chain degrees in coboundary query: {sorted(degs)}")
    m_found = degs.pop()
    if m is not None and m != m_found:
        raise TreeError(f"support sits in degree {m_found}, not {m}")
    m = m_found
    if cx is None:
        some = next(iter(x.items()))[0]
        if trees.is_spatial(some):
            cx = assemble_complex_spatial(trees.leaf_profile(some)[0])
        else:
            pp, qq = trees.leaf_profile(some)
            cx = assemble_complex(pp if p is None else p, qq if q is None else q)
    basis = cx.bases.get(m, ())
    index = {t: i for i, t in enumerate(basis)}
    rhs = {}
    for t, c in x.items():
        i = index.get(t)
        if i is None:
            raise TreeError(f"tree outside the complex: {trees.serialize(t)}")
        rhs[i] = c
    rows = cx.matrix_rows(m + 1)
    upper = cx.bases.get(m + 1, ())
    sol = linalg.solve(rows, rhs, len(upper))
    if sol is None:
        return False, None
    witness = FormalSum({upper[j]: c for j, c in sol.items()})
    return True, witness


def complex_report(p: int, q: int) -> dict:
    """The JSON-facing summary used by the command line front end."""
    return {
        "p": p,
        "q": q,
        "f_vector": f_vector(p, q),
        "betti": betti(p, q),
        "euler": euler_characteristic(p, q),
    }
