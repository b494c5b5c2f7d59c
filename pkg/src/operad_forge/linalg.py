"""Exact sparse linear algebra over the rationals.

Everything here works on a sparse row representation: a matrix is a list of
dicts mapping column index -> nonzero Fraction.  That shape fits the stratum
differentials well (each tree expands into a few dozen trees at most, so rows
stay short even when the bases run into the thousands).

Only two entry points matter: ``exact_rank`` and ``solve``.  Both run plain
Gaussian elimination over ``Fraction`` -- exact by construction -- with a
cheap min-fill-ish pivot rule (shortest eligible row first) that keeps the
fill-in tolerable on the matrices we actually meet.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping


def sparse_rows(rows: Iterable[Mapping[int, object]]) -> list[dict[int, Fraction]]:
    """Copy/normalize input into the internal row format, dropping zeros."""
    out = []
    for r in rows:
        row = {}
        for j, v in r.items():
            c = Fraction(v)
            if c:
                row[int(j)] = c
        out.append(row)
    return out


def _make_primitive(row: dict[int, Fraction]) -> None:
    """Scale a row in place by a positive rational so its entries become
    coprime integers.  Keeps the coefficient growth of the elimination in
    check without leaving the Fraction representation."""
    if not row:
        return
    den = 1
    for v in row.values():
        den = den * v.denominator // gcd(den, v.denominator)
    num = 0
    for v in row.values():
        num = gcd(num, abs(v.numerator * (den // v.denominator)))
    scale = Fraction(den, num)
    if scale != 1:
        for j in row:
            row[j] *= scale


def _eliminate(rows: list[dict[int, Fraction]],
               avoid: int | None = None) -> list[tuple[int, dict[int, Fraction]]]:
    """Destructive forward elimination; returns (pivot column, row) pairs in
    discovery order.  Each returned row is fully reduced against all earlier
    pivots, so the list is triangular with respect to that order."""
    # Process short rows first; break ties toward rows touching rare columns.
    live = sorted((r for r in rows if r), key=len, reverse=True)
    colcount: dict[int, int] = {}
    for r in live:
        for j in r:
            colcount[j] = colcount.get(j, 0) + 1
    pivots: list[tuple[int, dict[int, Fraction]]] = []
    by_col: dict[int, dict[int, Fraction]] = {}
    order: dict[int, int] = {}  # pivot column -> discovery index
    while live:
        row = live.pop()
        for j in row:
            colcount[j] = colcount.get(j, 1) - 1
        # Reduce against pivots in discovery order.  A reduction only ever
        # introduces columns of *later* pivots (each pivot row was cleaned of
        # earlier pivot columns at creation), so one monotone sweep suffices.
        while row:
            hits = [order[j] for j in row if j in by_col]
            if not hits:
                break
            j, piv = pivots[min(hits)]
            factor = row[j] / piv[j]
            for k, v in piv.items():
                new = row.get(k, Fraction(0)) - factor * v
                if new:
                    row[k] = new
                else:
                    row.pop(k, None)
        if not row:
            continue
        _make_primitive(row)
        # pivot column: rarest among the remaining unprocessed rows, avoiding
        # the augmented column unless nothing else is left
        candidates = [j for j in row if j != avoid] or list(row)
        col = min(candidates, key=lambda j: (colcount.get(j, 0), j))
        order[col] = len(pivots)
        pivots.append((col, row))
        by_col[col] = row
    return pivots


def exact_rank(rows: Iterable[Mapping[int, object]]) -> int:
    """Rank of a sparse rational matrix, computed exactly.

    >>> exact_rank([{0: 1}, {0: 2}])
    1
    """
    return len(_eliminate(sparse_rows(rows)))


def solve(rows: Iterable[Mapping[int, object]], rhs: Mapping[int, object],
          ncols: int) -> dict[int, Fraction] | None:
    """One exact solution of ``A x = b`` or None when the system is infeasible.

    ``rows`` are the rows of A (indexed 0..), ``rhs`` maps row index -> value,
    ``ncols`` bounds the unknown indices.  Free variables are set to zero, so
    the witness returned is sparse.
    """
    aug: list[dict[int, Fraction]] = []
    b = {int(i): Fraction(v) for i, v in rhs.items() if Fraction(v)}
    for i, r in enumerate(sparse_rows(rows)):
        row = dict(r)
        bv = b.pop(i, Fraction(0))
        if bv:
            row[ncols] = bv  # augmented column
        if row:
            aug.append(row)
    if b:
        # rhs hits a row index with no matrix entries -> that row reads 0 = b_i
        return None
    pivots = _eliminate(aug, avoid=ncols)
    for col, _row in pivots:
        if col == ncols:
            return None  # a pivot landed in the augmented column: 0 = nonzero
    # back-substitute in reverse discovery order: each row only references its
    # own pivot, later pivots (already solved), and free variables (left 0)
    x: dict[int, Fraction] = {}
    for col, row in reversed(pivots):
        acc = row.get(ncols, Fraction(0))
        for j, v in row.items():
            if j != col and j != ncols:
                acc -= v * x.get(j, Fraction(0))
        val = acc / row[col]
        if val:
            x[col] = val
    return x


def matmul_check_zero(rows_a: list[dict[int, Fraction]],
                      rows_b: list[dict[int, Fraction]]) -> bool:
    """True iff A·B = 0, with A given by rows and B given by rows as well."""
    # (A·B)[i][k] = sum_j A[i][j] * B[j][k]
    for ra in rows_a:
        acc: dict[int, Fraction] = {}
        for j, v in ra.items():
            if j < len(rows_b):
                for k, w in rows_b[j].items():
                    s = acc.get(k, Fraction(0)) + v * w
                    if s:
                        acc[k] = s
                    else:
                        acc.pop(k, None)
        if acc:
            return False
    return True
