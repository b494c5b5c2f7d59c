"""Partially planar rooted trees: representation, canonical form, enumeration, JSON.

A tree is an immutable nested tuple, one of

    ('s', label)                    spatial leaf, label a positive int
    ('p',)                          planar leaf
    ('l', children)                 spatial vertex; children: >= 2 spatial-rooted trees
    ('n', spatial_kids, planar_kids)  planar vertex; spatial_kids: spatial-rooted trees
                                      (unordered up to sign), planar_kids: planar-rooted
                                      trees in their planar order; 2s + t >= 2 overall

The *root colour* of a tree is spatial for ('s', ...) / ('l', ...) nodes and planar
for ('p',) / ('n', ...) nodes.  Spatial leaves carry the input labels; planar leaves
are ordered left to right by the planar structure, so they need no labels.  A bare
leaf is the identity ("edge with no vertex") tree of its colour.

Degrees.  A vertex with n spatial-rooted children and no planar data contributes
3 - 2n; a planar vertex with s spatial and t planar children contributes 2 - 2s - t.
``degree`` is the closed formula  #internal_edges + (3 - 2n)  resp.
#internal_edges + (2 - 2p - q)  in terms of the tree's leaf profile; for every tree
that has at least one vertex this equals the sum of its vertex contributions.
``koszul_degree`` is that sum of vertex contributions itself -- 0 on bare leaves,
where the closed formula instead gives 1.  All sign computations use
``koszul_degree``; the chain grading (where identity trees never occur) uses
``degree``.

Canonical form.  At every vertex the spatial children are sorted by the key
(koszul_degree, smallest spatial label, serialization); sorting graded siblings
costs the Koszul sign of the rearrangement, so ``canonicalize`` returns a sign
along with the sorted tree.  Sibling spatial subtrees have disjoint label sets,
hence distinct smallest labels, so the key is effectively injective.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Any, Iterator, Sequence

from .signs import sort_sign

Tree = tuple  # nested tuples as described in the module docstring


class TreeError(ValueError):
    """Raised for structurally invalid trees or invalid tree operations."""


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

_PLEAF: Tree = ('p',)


def spatial_leaf(label: int) -> Tree:
    if not isinstance(label, int) or label < 1:
        raise TreeError(f"spatial leaf label must be a positive int, got {label!r}")
    return ('s', label)


def planar_leaf() -> Tree:
    return _PLEAF


def spatial_vertex(children: Sequence[Tree]) -> Tree:
    kids = tuple(children)
    if len(kids) < 2:
        raise TreeError(f"spatial vertex needs >= 2 children, got {len(kids)}")
    for c in kids:
        if not is_spatial(c):
            raise TreeError("spatial vertex children must be spatial-rooted")
    return ('l', kids)


def planar_vertex(spatial_children: Sequence[Tree], planar_children: Sequence[Tree]) -> Tree:
    skids = tuple(spatial_children)
    pkids = tuple(planar_children)
    if 2 * len(skids) + len(pkids) < 2:
        raise TreeError(
            f"planar vertex needs 2s + t >= 2, got s={len(skids)}, t={len(pkids)}")
    for c in skids:
        if not is_spatial(c):
            raise TreeError("spatial slot of planar vertex got a planar-rooted tree")
    for c in pkids:
        if is_spatial(c):
            raise TreeError("planar slot of planar vertex got a spatial-rooted tree")
    return ('n', skids, pkids)


def spatial_corolla(n: int) -> Tree:
    """The n-ary spatial generator on labels 1..n (degree 3 - 2n); needs n >= 2."""
    if n < 2:
        raise TreeError(f"spatial corolla needs arity >= 2, got {n}")
    return ('l', tuple(('s', i) for i in range(1, n + 1)))


def mixed_corolla(p: int, q: int) -> Tree:
    """The (p, q) planar-output generator: p spatial legs labelled 1..p, q planar legs.

    Degree 2 - 2p - q; requires 2p + q >= 2.
    """
    if 2 * p + q < 2 or p < 0 or q < 0:
        raise TreeError(f"mixed corolla needs 2p + q >= 2, got p={p}, q={q}")
    return ('n', tuple(('s', i) for i in range(1, p + 1)), (_PLEAF,) * q)


# ---------------------------------------------------------------------------
# cached structural queries
# ---------------------------------------------------------------------------

_PROFILE: dict[Tree, tuple[int, int]] = {}
_KDEG: dict[Tree, int] = {}
_EDGES: dict[Tree, int] = {}
_MINLBL: dict[Tree, int] = {}
_SER: dict[Tree, str] = {}
_LABELS: dict[Tree, frozenset] = {}


def is_spatial(t: Tree) -> bool:
    """True if the root colour is spatial ('s' or 'l' node)."""
    return t[0] in ('s', 'l')


def is_leaf(t: Tree) -> bool:
    return t[0] in ('s', 'p')


def leaf_profile(t: Tree) -> tuple[int, int]:
    """(number of spatial leaves, number of planar leaves)."""
    got = _PROFILE.get(t)
    if got is not None:
        return got
    kind = t[0]
    if kind == 's':
        val = (1, 0)
    elif kind == 'p':
        val = (0, 1)
    elif kind == 'l':
        p = q = 0
        for c in t[1]:
            cp, cq = leaf_profile(c)
            p += cp
            q += cq
        val = (p, q)
    else:
        p = q = 0
        for c in t[1]:
            cp, cq = leaf_profile(c)
            p += cp
            q += cq
        for c in t[2]:
            cp, cq = leaf_profile(c)
            p += cp
            q += cq
        val = (p, q)
    _PROFILE[t] = val
    return val


def koszul_degree(t: Tree) -> int:
    """Sum of vertex (generator) degrees; 0 on bare leaves.  Drives every sign."""
    got = _KDEG.get(t)
    if got is not None:
        return got
    kind = t[0]
    if kind in ('s', 'p'):
        val = 0
    elif kind == 'l':
        val = 3 - 2 * len(t[1])
        for c in t[1]:
            val += koszul_degree(c)
    else:
        val = 2 - 2 * len(t[1]) - len(t[2])
        for c in t[1]:
            val += koszul_degree(c)
        for c in t[2]:
            val += koszul_degree(c)
    _KDEG[t] = val
    return val


def internal_edge_count(t: Tree) -> int:
    """Number of vertex-to-vertex edges (the codimension of the tree's stratum)."""
    got = _EDGES.get(t)
    if got is not None:
        return got
    kind = t[0]
    if kind in ('s', 'p'):
        val = 0
    else:
        kids = t[1] if kind == 'l' else t[1] + t[2]
        val = 0
        for c in kids:
            if not is_leaf(c):
                val += 1 + internal_edge_count(c)
    _EDGES[t] = val
    return val


def vertex_count(t: Tree) -> int:
    kind = t[0]
    if kind in ('s', 'p'):
        return 0
    kids = t[1] if kind == 'l' else t[1] + t[2]
    return 1 + sum(vertex_count(c) for c in kids)


def degree(t: Tree) -> int:
    """Closed-formula degree: internal edges + (3 - 2n) resp. + (2 - 2p - q).

    Equals ``koszul_degree`` on every vertex-bearing tree; on a bare leaf it is 1.
    """
    p, q = leaf_profile(t)
    e = internal_edge_count(t)
    if is_spatial(t):
        return e + 3 - 2 * p
    return e + 2 - 2 * p - q


def spatial_labels(t: Tree) -> frozenset:
    got = _LABELS.get(t)
    if got is not None:
        return got
    kind = t[0]
    if kind == 's':
        val = frozenset((t[1],))
    elif kind == 'p':
        val = frozenset()
    else:
        kids = t[1] if kind == 'l' else t[1] + t[2]
        val = frozenset()
        for c in kids:
            val |= spatial_labels(c)
    _LABELS[t] = val
    return val


def min_spatial_label(t: Tree) -> int:
    """Smallest spatial label in the tree; a large sentinel for label-free trees."""
    got = _MINLBL.get(t)
    if got is not None:
        return got
    kind = t[0]
    if kind == 's':
        val = t[1]
    elif kind == 'p':
        val = 1 << 30
    else:
        kids = t[1] if kind == 'l' else t[1] + t[2]
        val = min(min_spatial_label(c) for c in kids)
    _MINLBL[t] = val
    return val


def serialize(t: Tree) -> str:
    """Compact deterministic string form, e.g. ``n(s1,l(s2,s3);o,o)``."""
    got = _SER.get(t)
    if got is not None:
        return got
    kind = t[0]
    if kind == 's':
        val = f"s{t[1]}"
    elif kind == 'p':
        val = "o"
    elif kind == 'l':
        val = "l(" + ",".join(serialize(c) for c in t[1]) + ")"
    else:
        val = ("n(" + ",".join(serialize(c) for c in t[1]) + ";"
               + ",".join(serialize(c) for c in t[2]) + ")")
    _SER[t] = val
    return val


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def validate(t: Tree) -> None:
    """Raise TreeError unless t is structurally well-formed with distinct labels."""
    seen: set[int] = set()

    def walk(node: Any, spatial_expected: bool | None) -> None:
        if not isinstance(node, tuple) or not node:
            raise TreeError(f"not a tree node: {node!r}")
        kind = node[0]
        if kind == 's':
            if len(node) != 2 or not isinstance(node[1], int) or node[1] < 1:
                raise TreeError(f"bad spatial leaf: {node!r}")
            if node[1] in seen:
                raise TreeError(f"duplicate spatial label {node[1]}")
            seen.add(node[1])
            spatial_here = True
        elif kind == 'p':
            if len(node) != 1:
                raise TreeError(f"bad planar leaf: {node!r}")
            spatial_here = False
        elif kind == 'l':
            if len(node) != 2 or not isinstance(node[1], tuple):
                raise TreeError(f"bad spatial vertex: {node!r}")
            if len(node[1]) < 2:
                raise TreeError("spatial vertex with arity < 2")
            for c in node[1]:
                walk(c, True)
            spatial_here = True
        elif kind == 'n':
            if len(node) != 3 or not isinstance(node[1], tuple) or not isinstance(node[2], tuple):
                raise TreeError(f"bad planar vertex: {node!r}")
            if 2 * len(node[1]) + len(node[2]) < 2:
                raise TreeError("planar vertex with 2s + t < 2")
            for c in node[1]:
                walk(c, True)
            for c in node[2]:
                walk(c, False)
            spatial_here = False
        else:
            raise TreeError(f"unknown node kind {kind!r}")
        if spatial_expected is not None and spatial_here != spatial_expected:
            colour = "spatial" if spatial_expected else "planar"
            raise TreeError(f"expected a {colour}-rooted subtree, got {node!r}")

    walk(t, None)


def is_standard_labelled(t: Tree) -> bool:
    """True if the spatial labels are exactly 1..p."""
    labels = spatial_labels(t)
    return labels == frozenset(range(1, len(labels) + 1))


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

def _child_key(c: Tree) -> tuple[int, int, str]:
    return (koszul_degree(c), min_spatial_label(c), serialize(c))


def canonicalize(t: Tree) -> tuple[int, Tree]:
    """Return (sign, canonical tree): spatial siblings sorted, Koszul cost tracked.

    The sign is the Koszul sign of the total rearrangement of graded sibling
    blocks, +1 if the tree was already canonical.
    """
    kind = t[0]
    if kind in ('s', 'p'):
        return 1, t
    if kind == 'l':
        sign = 1
        kids = []
        for c in t[1]:
            s, cc = canonicalize(c)
            sign *= s
            kids.append(cc)
        ssign, order = sort_sign([_child_key(c) for c in kids],
                                 [koszul_degree(c) for c in kids])
        return sign * ssign, ('l', tuple(kids[i] for i in order))
    sign = 1
    skids = []
    for c in t[1]:
        s, cc = canonicalize(c)
        sign *= s
        skids.append(cc)
    pkids = []
    for c in t[2]:
        s, cc = canonicalize(c)
        sign *= s
        pkids.append(cc)
    ssign, order = sort_sign([_child_key(c) for c in skids],
                             [koszul_degree(c) for c in skids])
    return sign * ssign, ('n', tuple(skids[i] for i in order), tuple(pkids))


def is_canonical(t: Tree) -> bool:
    return canonicalize(t) == (1, t) and _sorted_everywhere(t)


def _sorted_everywhere(t: Tree) -> bool:
    kind = t[0]
    if kind in ('s', 'p'):
        return True
    if kind == 'l':
        keys = [_child_key(c) for c in t[1]]
        return keys == sorted(keys) and all(_sorted_everywhere(c) for c in t[1])
    keys = [_child_key(c) for c in t[1]]
    return (keys == sorted(keys)
            and all(_sorted_everywhere(c) for c in t[1])
            and all(_sorted_everywhere(c) for c in t[2]))


# ---------------------------------------------------------------------------
# signature
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TreeSignature:
    root_colour: str        # 'spatial' | 'planar'
    spatial_inputs: int     # p
    planar_inputs: int      # q
    degree: int
    internal_edges: int
    vertices: int


def signature(t: Tree) -> TreeSignature:
    p, q = leaf_profile(t)
    return TreeSignature(
        root_colour='spatial' if is_spatial(t) else 'planar',
        spatial_inputs=p,
        planar_inputs=q,
        degree=degree(t),
        internal_edges=internal_edge_count(t),
        vertices=vertex_count(t),
    )


# ---------------------------------------------------------------------------
# JSON round-trip
# ---------------------------------------------------------------------------

def to_json_dict(t: Tree) -> dict:
    """Schema: {"sleaf": label} | {"pleaf": pos} | {"l": [...]} | {"n": {"s": [...], "p": [...]}}.

    Planar-leaf positions are assigned 1..q in planar (left-to-right) order.
    """
    counter = [0]

    def enc(node: Tree) -> dict:
        kind = node[0]
        if kind == 's':
            return {"sleaf": node[1]}
        if kind == 'p':
            counter[0] += 1
            return {"pleaf": counter[0]}
        if kind == 'l':
            return {"l": [enc(c) for c in node[1]]}
        return {"n": {"s": [enc(c) for c in node[1]], "p": [enc(c) for c in node[2]]}}

    return enc(t)


def from_json_dict(d: Any) -> tuple[int, Tree]:
    """Parse the schema above; returns (sign, canonical tree).

    The planar-leaf ``pleaf`` positions must read 1..q left to right.  The sign
    accounts for any spatial-sibling sorting needed to reach canonical form.
    """
    positions: list[int] = []

    def dec(node: Any) -> Tree:
        if not isinstance(node, dict) or len(node) != 1:
            raise TreeError(f"bad tree JSON node: {node!r}")
        (key, val), = node.items()
        if key == "sleaf":
            if not isinstance(val, int) or val < 1:
                raise TreeError(f"bad sleaf label: {val!r}")
            return ('s', val)
        if key == "pleaf":
            if not isinstance(val, int):
                raise TreeError(f"bad pleaf position: {val!r}")
            positions.append(val)
            return _PLEAF
        if key == "l":
            if not isinstance(val, list):
                raise TreeError("'l' expects a list of children")
            return ('l', tuple(dec(c) for c in val))
        if key == "n":
            if not isinstance(val, dict) or set(val) != {"s", "p"}:
                raise TreeError("'n' expects {\"s\": [...], \"p\": [...]}")
            return ('n', tuple(dec(c) for c in val["s"]), tuple(dec(c) for c in val["p"]))
        raise TreeError(f"unknown tree JSON key {key!r}")

    raw = dec(d)
    validate(raw)
    if positions != list(range(1, len(positions) + 1)):
        raise TreeError(f"planar leaf positions must read 1..q in order, got {positions}")
    return canonicalize(raw)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _set_partitions(items: tuple, min_blocks: int) -> Iterator[tuple[tuple, ...]]:
    """All partitions of ``items`` into >= min_blocks non-empty blocks.

    Blocks come out as tuples, each sorted, ordered by smallest element, so each
    partition appears exactly once.
    """
    if not items:
        if min_blocks <= 0:
            yield ()
        return

    first, rest = items[0], items[1:]

    def rec(remaining: tuple) -> Iterator[tuple[tuple, ...]]:
        if not remaining:
            yield ()
            return
        head, tail = remaining[0], remaining[1:]
        for sub in rec(tail):
            # head opens its own block
            yield ((head,),) + sub
            # or joins an existing one
            for i, block in enumerate(sub):
                yield sub[:i] + (block + (head,),) + sub[i + 1:]

    for part in rec(items):
        if len(part) >= min_blocks:
            yield tuple(tuple(sorted(b)) for b in part)


_SPATIAL_MEMO: dict[frozenset, tuple[Tree, ...]] = {}


def _spatial_trees(labels: frozenset) -> tuple[Tree, ...]:
    got = _SPATIAL_MEMO.get(labels)
    if got is not None:
        return got
    if len(labels) == 0:
        raise TreeError("spatial tree needs at least one label")
    if len(labels) == 1:
        (x,) = labels
        out = (('s', x),)
        _SPATIAL_MEMO[labels] = out
        return out
    found: list[Tree] = []
    items = tuple(sorted(labels))
    for part in _set_partitions(items, min_blocks=2):
        pools = [_spatial_trees(frozenset(b)) for b in part]
        for combo in product(*pools):
            _, canon = canonicalize(('l', combo))
            found.append(canon)
    found.sort(key=lambda t: (internal_edge_count(t), serialize(t)))
    out = tuple(found)
    _SPATIAL_MEMO[labels] = out
    return out


_PLANAR_MEMO: dict[tuple[frozenset, int], tuple[Tree, ...]] = {}


def _planar_child_seqs(labels: frozenset, q: int) -> Iterator[tuple]:
    """Ordered sequences of planar-slot fillers using exactly (labels, q) leaves.

    Each entry is either the token 'leaf' (one planar leaf) or a pair
    (label_subset, q_j) standing for a vertex-rooted planar subtree consuming
    those leaves (so 2|subset| + q_j >= 2).
    """
    if not labels and q == 0:
        yield ()
        return
    if q >= 1:
        for rest in _planar_child_seqs(labels, q - 1):
            yield ('leaf',) + rest
    items = tuple(sorted(labels))
    subsets = []
    for r in range(len(items) + 1):
        subsets.extend(combinations(items, r))
    for sub in subsets:
        subf = frozenset(sub)
        for qj in range(q + 1):
            if 2 * len(subf) + qj < 2:
                continue
            for rest in _planar_child_seqs(labels - subf, q - qj):
                yield ((subf, qj),) + rest


def _planar_trees(labels: frozenset, q: int) -> tuple[Tree, ...]:
    key = (labels, q)
    got = _PLANAR_MEMO.get(key)
    if got is not None:
        return got
    found: list[Tree] = []
    items = tuple(sorted(labels))
    for r in range(len(items) + 1):
        for asub in combinations(items, r):
            aset = frozenset(asub)
            rem = labels - aset
            for part in _set_partitions(tuple(sorted(aset)), min_blocks=0):
                s = len(part)
                spools = [_spatial_trees(frozenset(b)) for b in part]
                for seq in _planar_child_seqs(rem, q):
                    if 2 * s + len(seq) < 2:
                        continue
                    ppools = []
                    ok = True
                    for entry in seq:
                        if entry == 'leaf':
                            ppools.append((_PLEAF,))
                        else:
                            sub, qj = entry
                            pool = _planar_trees(sub, qj)
                            if not pool:
                                ok = False
                                break
                            ppools.append(pool)
                    if not ok:
                        continue
                    for scombo in product(*spools):
                        for pcombo in product(*ppools):
                            _, canon = canonicalize(('n', scombo, pcombo))
                            found.append(canon)
    found.sort(key=lambda t: (internal_edge_count(t), serialize(t)))
    out = tuple(found)
    _PLANAR_MEMO[key] = out
    return out


def enumerate_spatial_rooted(n: int, max_codim: int | None = None) -> tuple[Tree, ...]:
    """All canonical spatial-rooted trees on labels 1..n (n=1: the identity edge).

    Sorted by (internal edge count, serialization).  ``max_codim`` filters by
    internal edge count.
    """
    if n < 1:
        raise TreeError(f"need n >= 1 spatial inputs, got {n}")
    out = _spatial_trees(frozenset(range(1, n + 1)))
    if max_codim is not None:
        out = tuple(t for t in out if internal_edge_count(t) <= max_codim)
    return out


def enumerate_planar_rooted(p: int, q: int, max_codim: int | None = None) -> tuple[Tree, ...]:
    """All canonical planar-rooted trees with p labelled spatial and q planar leaves.

    Requires 2p + q >= 2, except (p, q) = (0, 1) which yields the identity edge.
    Sorted by (internal edge count, serialization).
    """
    if p < 0 or q < 0:
        raise TreeError("leaf counts must be non-negative")
    if (p, q) == (0, 1):
        return (_PLEAF,)
    if 2 * p + q < 2:
        raise TreeError(f"no planar-rooted trees with p={p}, q={q}")
    out = _planar_trees(frozenset(range(1, p + 1)), q)
    if max_codim is not None:
        out = tuple(t for t in out if internal_edge_count(t) <= max_codim)
    return out


# ---------------------------------------------------------------------------
# traversal helpers used by grafting and the differential
# ---------------------------------------------------------------------------

def children(t: Tree) -> tuple[Tree, ...]:
    """All children of the root vertex, spatial first for planar vertices."""
    kind = t[0]
    if kind in ('s', 'p'):
        return ()
    if kind == 'l':
        return t[1]
    return t[1] + t[2]


def iter_vertices(t: Tree) -> Iterator[Tree]:
    """Preorder iteration over the vertex-rooted subtrees of t."""
    if t[0] in ('s', 'p'):
        return
    yield t
    for c in children(t):
        yield from iter_vertices(c)
