"""Low-level sign conventions: Koszul signs of permutations and unshuffle generation.

Everything downstream (canonical forms, grafting, the differential, the coderivation
lab) funnels its sign bookkeeping through this module, so the conventions here are
load-bearing.  The rule of the house:

    A permutation ``perm`` is a tuple of 1-based images ``(s(1), ..., s(n))`` and it
    acts by *rearranging* a sequence ``(x_1, ..., x_n)`` into
    ``(x_{s(1)}, ..., x_{s(n)})``.

The Koszul sign of that rearrangement is the product of ``(-1)^(|x_a| |x_b|)`` over
all pairs that end up out of their original order -- equivalently, the sign picked up
by carrying out the rearrangement through adjacent graded transpositions.  Only the
parity of each degree matters.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence


def koszul_sign(perm: Sequence[int], degrees: Sequence[int]) -> int:
    """Koszul sign of rearranging ``(x_1..x_n)`` into ``(x_{perm[0]}, x_{perm[1]}, ...)``.

    ``degrees[i]`` is the degree of ``x_{i+1}`` (original order, 0-based list).
    Returns +1 or -1.
    """
    n = len(perm)
    if len(degrees) != n:
        raise ValueError(f"permutation length {n} != degree list length {len(degrees)}")
    sign = 1
    for k in range(n):
        dk = degrees[perm[k] - 1]
        if dk % 2 == 0:
            continue
        for l in range(k + 1, n):
            if perm[k] > perm[l] and degrees[perm[l] - 1] % 2:
                sign = -sign
    return sign


def permutation_sign(perm: Sequence[int]) -> int:
    """Ordinary sign of a permutation given as a tuple of 1-based images."""
    sign = 1
    n = len(perm)
    for k in range(n):
        for l in range(k + 1, n):
            if perm[k] > perm[l]:
                sign = -sign
    return sign


def antisymmetric_sign(perm: Sequence[int], degrees: Sequence[int]) -> int:
    """The twisted sign chi(s) = sgn(s) * koszul_sign(s); used on desuspended words."""
    return permutation_sign(perm) * koszul_sign(perm, degrees)


def unshuffles(k: int, l: int) -> Iterator[tuple[int, ...]]:
    """Yield all (k,l)-unshuffles of {1..k+l} as image tuples.

    An unshuffle here is a permutation increasing on its first k slots and on its
    last l slots; applying it to ``(x_1..x_{k+l})`` moves a chosen k-subset to the
    front, preserving relative order within both groups.  Yields C(k+l, k) tuples
    in lexicographic order of the chosen subset.
    """
    if k < 0 or l < 0:
        raise ValueError("unshuffle arities must be non-negative")
    universe = range(1, k + l + 1)
    for subset in combinations(universe, k):
        chosen = set(subset)
        rest = tuple(i for i in universe if i not in chosen)
        yield subset + rest


def sort_sign(keys: Sequence, degrees: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Stable-sort positions 0..n-1 by ``keys`` and return (koszul sign, order).

    ``order`` lists the original indices in their new order; the sign is the Koszul
    sign (w.r.t. ``degrees``, given in original order) of that rearrangement.
    """
    n = len(keys)
    order = sorted(range(n), key=lambda i: keys[i])
    sign = 1
    for a in range(n):
        da = degrees[order[a]]
        if da % 2 == 0:
            continue
        for b in range(a + 1, n):
            if order[a] > order[b] and degrees[order[b]] % 2:
                sign = -sign
    return sign, tuple(order)
