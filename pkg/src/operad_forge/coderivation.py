"""Finite-basis graded spaces and the coderivation laboratory.

Two ways of saying "this pair of spaces carries the full homotopy structure":

1. Evaluate the quadratic relations directly on basis tuples.  The relations
   live on the unshifted spaces; the two-coloured family consists of symmetric
   brackets l_k (degree 3-2k) on L and mixed operations n_{p,q} (degree
   2-2p-q, symmetric in the L-slots only).  ``evaluate_ocha_relation`` returns
   left-minus-right; a genuine structure returns zero for every bidegree.

2. Shift both spaces down (L twice, A once), so every operation has degree
   +1, lift the whole family to a coderivation D on the word coalgebra
   S^c(L) (x) T^c(A) truncated by word length, and test D o D = 0.

``check_equivalence`` runs both and reports whether they agree, including the
matching of the minimal failing total arity with the minimal failing word
length.  The sign conventions connecting the two sides are concentrated in
``suspend`` (per-entry transport signs) and ``Coderivation.apply`` (the
operator-past-letters signs); everything is exact Fraction arithmetic.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .algebra import FormalSum
from .signs import koszul_sign, permutation_sign, sort_sign, unshuffles

__all__ = [
    "StructureError", "GradedSpace", "GradedMap", "OchaFamily",
    "CoalgebraWord", "Coderivation",
    "evaluate_ocha_relation", "evaluate_l_relation", "relation_scan",
    "suspend", "coderivation_maps", "lift_coderivation", "apply_D_squared",
    "coproduct", "check_equivalence", "EquivalenceReport",
    "gerstenhaber_sign_check", "conjugate_family",
    "family_to_json", "family_from_json",
    "shift_operator", "symmetric_action", "antisymmetric_action",
]


class StructureError(ValueError):
    """Inconsistent graded data (degree clash, bad arity, singular change of basis)."""


# ---------------------------------------------------------------------------
# spaces and maps
# ---------------------------------------------------------------------------

class GradedSpace:
    """A finite list of named basis elements with integer degrees."""

    def __init__(self, pairs: Iterable[tuple[str, int]]):
        degs: dict[str, int] = {}
        for name, d in pairs:
            if name in degs:
                raise StructureError(f"duplicate basis name {name!r}")
            degs[name] = int(d)
        self._deg = degs

    @property
    def degrees(self) -> dict[str, int]:
        return dict(self._deg)

    def degree(self, name: str) -> int:
        try:
            return self._deg[name]
        except KeyError:
            raise StructureError(f"unknown basis element {name!r}") from None

    def names(self) -> tuple[str, ...]:
        return tuple(self._deg)

    def shifted(self, shift: int) -> "GradedSpace":
        return GradedSpace((x, d + shift) for x, d in self._deg.items())

    def __contains__(self, name: str) -> bool:
        return name in self._deg

    def __len__(self) -> int:
        return len(self._deg)

    def __repr__(self) -> str:
        inner = ", ".join(f"{x}:{d}" for x, d in self._deg.items())
        return f"GradedSpace({inner})"


def _canonical_l_tuple(lnames: Sequence[str], ldeg: Mapping[str, int]):
    """(sign, sorted tuple) for the symmetric slots, or None when a repeated
    odd-degree letter forces the value to vanish."""
    keys = [(ldeg[x], x) for x in lnames]
    degs = [ldeg[x] for x in lnames]
    sign, order = sort_sign(keys, degs)
    out = tuple(lnames[i] for i in order)
    for i in range(len(out) - 1):
        if out[i] == out[i + 1] and ldeg[out[i]] % 2:
            return None
    return sign, out


class GradedMap:
    """Multilinear map given by exact structure constants on basis tuples.

    ``p`` symmetric slots (fed from ``ldeg``) and ``q`` ordered slots (from
    ``adeg``); values land in the space named by ``out`` ('L' or 'A').
    Constants are stored on the canonical (degree-sorted) key of the
    symmetric part, so ``lookup`` realizes the Koszul-symmetric extension.
    """

    def __init__(self, p: int, q: int, degree: int,
                 ldeg: Mapping[str, int], adeg: Mapping[str, int],
                 out: str, outdeg: Mapping[str, int] | None = None):
        if out not in ('L', 'A'):
            raise StructureError(f"output space must be 'L' or 'A', got {out!r}")
        self.p, self.q, self.degree, self.out = p, q, degree, out
        self.ldeg = dict(ldeg)
        self.adeg = dict(adeg)
        self.outdeg = dict(outdeg) if outdeg is not None else (
            self.ldeg if out == 'L' else self.adeg)
        self._entries: dict[tuple, dict[str, Fraction]] = {}

    def set(self, lnames: Sequence[str], anames: Sequence[str],
            out_name: str, coef) -> None:
        coef = Fraction(coef)
        if len(lnames) != self.p or len(anames) != self.q:
            raise StructureError(
                f"arity mismatch: expected {self.p}+{self.q} inputs, "
                f"got {len(lnames)}+{len(anames)}")
        canon = _canonical_l_tuple(lnames, self.ldeg)
        if canon is None:
            if coef:
                raise StructureError(
                    "nonzero constant on a repeated odd symmetric input")
            return
        sign, key_l = canon
        want = sum(self.ldeg[x] for x in lnames) + \
            sum(self.adeg[a] for a in anames) + self.degree
        if coef and self.outdeg[out_name] != want:
            raise StructureError(
                f"degree clash: |{out_name}| = {self.outdeg[out_name]}, "
                f"inputs + map degree give {want}")
        key = (key_l, tuple(anames))
        row = self._entries.setdefault(key, {})
        c = row.get(out_name, Fraction(0)) + sign * coef
        if c:
            row[out_name] = c
        else:
            row.pop(out_name, None)
            if not row:
                del self._entries[key]

    def lookup(self, lnames: Sequence[str], anames: Sequence[str]) -> dict[str, Fraction]:
        canon = _canonical_l_tuple(lnames, self.ldeg)
        if canon is None:
            return {}
        sign, key_l = canon
        row = self._entries.get((key_l, tuple(anames)))
        if not row:
            return {}
        return {name: sign * c for name, c in row.items()}

    def entries(self):
        """Canonical (l_tuple, a_tuple, out_name, coef) quadruples, sorted."""
        out = []
        for (kl, ka), row in self._entries.items():
            for name, c in row.items():
                out.append((kl, ka, name, c))
        out.sort()
        return out

    def is_zero(self) -> bool:
        return not self._entries

    def copy(self) -> "GradedMap":
        m = GradedMap(self.p, self.q, self.degree, self.ldeg, self.adeg,
                      self.out, self.outdeg)
        m._entries = {k: dict(v) for k, v in self._entries.items()}
        return m

    def scaled(self, c) -> "GradedMap":
        c = Fraction(c)
        m = self.copy()
        if c == 0:
            m._entries = {}
            return m
        for row in m._entries.values():
            for name in row:
                row[name] *= c
        return m


MapKey = tuple  # ('l', k) or ('n', p, q)


def _expected_signature(key: MapKey) -> tuple[int, int, int, str]:
    if key[0] == 'l':
        k = key[1]
        if k < 1:
            raise StructureError(f"bad bracket arity in {key}")
        return k, 0, 3 - 2 * k, 'L'
    if key[0] == 'n':
        p, q = key[1], key[2]
        if p < 0 or q < 0 or p + q < 1:
            raise StructureError(f"bad mixed arity in {key}")
        return p, q, 2 - 2 * p - q, 'A'
    raise StructureError(f"unknown map kind in {key}")


class OchaFamily:
    """Two graded spaces plus the keyed family of operations on them."""

    def __init__(self, L: GradedSpace, A: GradedSpace,
                 maps: Mapping[MapKey, GradedMap] | None = None):
        self.L, self.A = L, A
        self.maps: dict[MapKey, GradedMap] = {}
        for key, m in (maps or {}).items():
            p, q, deg, out = _expected_signature(key)
            if (m.p, m.q, m.degree, m.out) != (p, q, deg, out):
                raise StructureError(
                    f"map for {key} must have signature p={p}, q={q}, "
                    f"degree {deg}, out {out!r}")
            self.maps[key] = m

    def new_map(self, key: MapKey) -> GradedMap:
        p, q, deg, out = _expected_signature(key)
        m = GradedMap(p, q, deg, self.L.degrees, self.A.degrees, out)
        self.maps[key] = m
        return m

    def get(self, key: MapKey) -> GradedMap | None:
        return self.maps.get(key)

    def eval(self, key: MapKey, lnames: Sequence[str],
             anames: Sequence[str] = ()) -> dict[str, Fraction]:
        m = self.maps.get(key)
        if m is None:
            return {}
        return m.lookup(lnames, anames)


# ---------------------------------------------------------------------------
# direct relation evaluation (unshifted side)
# ---------------------------------------------------------------------------

def _acc(into: dict[str, Fraction], src: Mapping[str, Fraction], scale: Fraction):
    for name, c in src.items():
        v = into.get(name, Fraction(0)) + scale * c
        if v:
            into[name] = v
        else:
            into.pop(name, None)


def evaluate_l_relation(n: int, family: OchaFamily,
                        vs: Sequence[str]) -> FormalSum:
    """The arity-n quadratic relation on the bracket side, as left-minus-right.

    Spelled as a single signed double sum: the inner bracket takes k of the
    inputs (an unshuffle with Koszul sign), the outer bracket takes the value
    plus the rest, and terms containing exactly one arity-1 map enter with a
    flipped sign.  Zero for every n and every input tuple iff the l_k form a
    strong homotopy Lie structure.
    """
    if len(vs) != n:
        raise StructureError(f"expected {n} inputs, got {len(vs)}")
    ldeg = family.L.degrees
    degs = [ldeg[v] for v in vs]
    total: dict[str, Fraction] = {}
    for k in range(1, n + 1):
        flip = -1 if (k == 1) != (k == n) else 1
        for sigma in unshuffles(k, n - k):
            eps = koszul_sign(sigma, degs)
            head = [vs[sigma[u] - 1] for u in range(k)]
            tail = [vs[sigma[u] - 1] for u in range(k, n)]
            inner = family.eval(('l', k), head)
            for w, c in inner.items():
                outer = family.eval(('l', n - k + 1), [w] + tail)
                _acc(total, outer, Fraction(flip * eps) * c)
    return FormalSum(total)


def evaluate_ocha_relation(n: int, m: int | None, family: OchaFamily,
                           args) -> FormalSum:
    """Left-minus-right of the mixed relation at bidegree (n, m).

    ``args`` is ``(l_names, a_names)``; with ``m=None`` this delegates to the
    bracket-side relation (``args`` then is just the tuple of L-names).  The
    left side differentiates the single operation n_{n,m}; the right side sums
    the inner-bracket family (plain unshuffle signs) and the inner-mixed
    family, whose per-term sign is assembled from three Koszul moves plus the
    structural factor (-1)^(s+i+si+ms) -- see the tests for the closed form
    this expands to.
    """
    if m is None:
        return evaluate_l_relation(n, family, args)
    vs, aa = args
    vs, aa = list(vs), list(aa)
    if len(vs) != n or len(aa) != m:
        raise StructureError(
            f"expected {n}+{m} inputs, got {len(vs)}+{len(aa)}")
    ldeg, adeg = family.L.degrees, family.A.degrees
    vdegs = [ldeg[v] for v in vs]
    adegs = [adeg[a] for a in aa]
    vtot = sum(vdegs)
    total: dict[str, Fraction] = {}

    # left side: the one-operation terms
    base = family.eval(('n', n, m), vs, aa)
    for a_out, c in base.items():
        _acc(total, family.eval(('n', 0, 1), [], [a_out]), c)
    sgn_m = -1 if m % 2 else 1
    for i in range(n):
        pre = (-1) ** (sum(vdegs[:i]) % 2)
        for w, c in family.eval(('l', 1), [vs[i]]).items():
            out = family.eval(('n', n, m), vs[:i] + [w] + vs[i + 1:], aa)
            _acc(total, out, Fraction(-sgn_m * pre) * c)
    for j in range(m):
        pre = (-1) ** ((vtot + sum(adegs[:j])) % 2)
        for w, c in family.eval(('n', 0, 1), [], [aa[j]]).items():
            out = family.eval(('n', n, m), vs, aa[:j] + [w] + aa[j + 1:])
            _acc(total, out, Fraction(-sgn_m * pre) * c)

    # right side, inner bracket: n_{1+r, m}(l_p(head), tail; a)
    for p in range(2, n + 1):
        r = n - p
        for sigma in unshuffles(p, r):
            eps = koszul_sign(sigma, vdegs)
            head = [vs[sigma[u] - 1] for u in range(p)]
            tail = [vs[sigma[u] - 1] for u in range(p, n)]
            for w, c in family.eval(('l', p), head).items():
                out = family.eval(('n', 1 + r, m), [w] + tail, aa)
                _acc(total, out, Fraction(-eps) * c)

    # right side, inner mixed: n_{p, i+1+j}(head; a_1..a_i, n_{r,s}(tail; win), rest)
    for p in range(0, n + 1):
        r = n - p
        for s in range(0, m + 1):
            if (r, s) == (0, 1) or (r, s) == (n, m) or 2 * r + s < 1:
                continue
            for sigma in unshuffles(p, r):
                eps = koszul_sign(sigma, vdegs)
                head = [vs[sigma[u] - 1] for u in range(p)]
                tail = [vs[sigma[u] - 1] for u in range(p, n)]
                V_p = sum(ldeg[x] for x in head)
                W = sum(ldeg[x] for x in tail)
                for i in range(0, m - s + 1):
                    j = m - s - i
                    A_i = sum(adegs[:i])
                    expo = W * A_i + s * (V_p + A_i) + s + i + s * i + m * s
                    sgn = eps * ((-1) ** (expo % 2))
                    win = aa[i:i + s]
                    for w, c in family.eval(('n', r, s), tail, win).items():
                        out = family.eval(('n', p, i + 1 + j),
                                          head, aa[:i] + [w] + aa[i + s:])
                        _acc(total, out, Fraction(-sgn) * c)
    return FormalSum(total)


def relation_scan(family: OchaFamily, max_total: int):
    """All relation failures with total arity <= max_total.

    Returns a list of (total, kind, arity, args) tuples, kind 'l' or 'n'.
    Symmetric slots run over sorted tuples with repetition (the relations are
    equivariant, so this loses nothing); ordered slots over all tuples.
    """
    lnames = family.L.names()
    anames = family.A.names()
    failures = []
    for total in range(1, max_total + 1):
        for vset in itertools.combinations_with_replacement(lnames, total):
            if evaluate_l_relation(total, family, vset):
                failures.append((total, 'l', (total,), vset))
        for n in range(0, total + 1):
            m = total - n
            for vset in itertools.combinations_with_replacement(lnames, n):
                for aset in itertools.product(anames, repeat=m):
                    if evaluate_ocha_relation(n, m, family, (vset, aset)):
                        failures.append((total, 'n', (n, m), (vset, aset)))
    return failures


# ---------------------------------------------------------------------------
# suspension
# ---------------------------------------------------------------------------

def suspend(obj, shift: int):
    """Shift a space, or transport a map to the shifted spaces.

    Spaces shift by any integer.  For maps the convention is the paired one:
    symmetric slots move by twice the given ±1 step, ordered slots by the step
    itself, so ``suspend(m, -1)`` lands every operation of a family in degree
    +1.  Entry constants pick up one sign per ordered slot, from carrying that
    slot's shift operator past everything standing to its left (shifted
    degrees for the downward direction, original degrees upward — the two are
    mutually inverse).
    """
    if isinstance(obj, GradedSpace):
        return obj.shifted(shift)
    if not isinstance(obj, GradedMap):
        raise StructureError(f"cannot suspend {type(obj).__name__}")
    if obj.q == 0 and obj.out == 'L':
        if shift % 2:
            raise StructureError("bracket-side maps shift by even steps")
        step = shift // 2
    else:
        step = shift
    if step not in (-1, 1):
        raise StructureError("map transport works one step at a time")
    lshift, ashift = 2 * step, step
    new_ldeg = {x: d + lshift for x, d in obj.ldeg.items()}
    new_adeg = {a: d + ashift for a, d in obj.adeg.items()}
    new_outdeg = {x: d + (lshift if obj.out == 'L' else ashift)
                  for x, d in obj.outdeg.items()}
    new_degree = obj.degree - lshift * obj.p - ashift * obj.q + \
        (lshift if obj.out == 'L' else ashift)
    out = GradedMap(obj.p, obj.q, new_degree, new_ldeg, new_adeg, obj.out,
                    new_outdeg)
    sign_deg_l = new_ldeg if step == -1 else obj.ldeg
    sign_deg_a = new_adeg if step == -1 else obj.adeg
    for kl, ka, name, c in obj.entries():
        X = sum(sign_deg_l[x] for x in kl)
        expo = 0
        for u in range(len(ka)):
            expo += X + sum(sign_deg_a[b] for b in ka[:u])
        out.set(kl, ka, name, c * ((-1) ** (expo % 2)))
    return out


def coderivation_maps(family: OchaFamily) -> dict[MapKey, GradedMap]:
    """Transport every operation down to degree +1 and negate both arity-1
    maps (the convention the word-coalgebra lift expects).  The two arity-1
    slots are always materialized, so the lift never lacks its differentials.
    """
    out: dict[MapKey, GradedMap] = {}
    for key, m in family.maps.items():
        out[key] = suspend(m, -1 if key[0] == 'n' else -2)
    for key in (('l', 1), ('n', 0, 1)):
        if key not in out:
            p, q, deg, side = _expected_signature(key)
            out[key] = GradedMap(p, q, 1,
                                 family.L.shifted(-2).degrees,
                                 family.A.shifted(-1).degrees, side)
        else:
            out[key] = out[key].scaled(-1)
    return out


# --- tensor-word operators (shift powers and permutation actions) ----------

def shift_operator(degrees: Mapping[str, int], n: int, shift: int) -> Callable:
    """The n-fold tensor power of a single shift, acting on word sums.

    Word keys are tuples of basis names with degrees read from ``degrees``
    (pre-shift).  Each odd shift operator passes the letters standing before
    its slot, so the sign exponent is sum_i (n-i)|z_i|.
    """
    odd = shift % 2

    def act(ws: FormalSum) -> FormalSum:
        if not odd:
            return ws
        out = {}
        for word, c in ws.items():
            expo = sum((n - i - 1) * degrees[z] for i, z in enumerate(word))
            out[word] = out.get(word, Fraction(0)) + c * ((-1) ** (expo % 2))
        return FormalSum(out)
    return act


def symmetric_action(sigma: Sequence[int], degrees: Mapping[str, int]) -> Callable:
    """Permutation action with plain Koszul signs on tensor words."""
    def act(ws: FormalSum) -> FormalSum:
        out: dict[tuple, Fraction] = {}
        for word, c in ws.items():
            degs = [degrees[z] for z in word]
            eps = koszul_sign(sigma, degs)
            new = tuple(word[sigma[u] - 1] for u in range(len(word)))
            out[new] = out.get(new, Fraction(0)) + c * eps
        return FormalSum(out)
    return act


def antisymmetric_action(sigma: Sequence[int], degrees: Mapping[str, int]) -> Callable:
    """Koszul-times-sgn permutation action (the shifted-side convention)."""
    sgn = permutation_sign(sigma)

    def act(ws: FormalSum) -> FormalSum:
        return symmetric_action(sigma, degrees)(ws) * sgn
    return act


# ---------------------------------------------------------------------------
# the word coalgebra and the lifted coderivation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoalgebraWord:
    """One basis word: a sorted symmetric part and an ordered part."""
    lpart: tuple[str, ...]
    apart: tuple[str, ...]

    def length(self) -> int:
        return len(self.lpart) + len(self.apart)

    def __repr__(self) -> str:
        ls = "*".join(self.lpart) or "1"
        as_ = ",".join(self.apart) or "-"
        return f"<{ls}|{as_}>"


def normalize_word(lnames: Sequence[str], anames: Sequence[str],
                   ldeg: Mapping[str, int]):
    """(sign, CoalgebraWord) with the symmetric part Koszul-sorted, or None
    when a repeated odd letter annihilates the word."""
    canon = _canonical_l_tuple(lnames, ldeg)
    if canon is None:
        return None
    sign, key = canon
    return sign, CoalgebraWord(key, tuple(anames))


def word_degree(word: CoalgebraWord, ldeg: Mapping[str, int],
                adeg: Mapping[str, int]) -> int:
    return sum(ldeg[x] for x in word.lpart) + sum(adeg[a] for a in word.apart)


def _front_unshuffle_sign(degs: Sequence[int], chosen: Sequence[int]) -> int:
    """Koszul sign of pulling the chosen positions to the front (order kept)."""
    chosen_set = set(chosen)
    sign = 1
    for u in chosen:
        if degs[u] % 2 == 0:
            continue
        for v in range(u):
            if v not in chosen_set and degs[v] % 2:
                sign = -sign
    return sign


class Coderivation:
    """The lift of a degree-1 family to the truncated word coalgebra."""

    def __init__(self, maps: Mapping[MapKey, GradedMap], max_word: int):
        if ('l', 1) not in maps or ('n', 0, 1) not in maps:
            raise StructureError(
                "coderivation lift needs both arity-1 differentials present")
        for key, m in maps.items():
            if m.degree != 1:
                raise StructureError(
                    f"map {key} has degree {m.degree}; transport first")
        self.maps = dict(maps)
        self.max_word = max_word
        any_map = next(iter(maps.values()))
        self.ldeg = dict(any_map.ldeg)
        self.adeg = dict(any_map.adeg)

    def apply(self, w) -> FormalSum:
        if isinstance(w, FormalSum):
            out = FormalSum.zero()
            for word, c in w.items():
                out = out + self._apply_one(word) * c
            return out
        return self._apply_one(w)

    def _apply_one(self, word: CoalgebraWord) -> FormalSum:
        if word.length() > self.max_word:
            raise StructureError(
                f"word length {word.length()} exceeds truncation {self.max_word}")
        xs, aa = word.lpart, word.apart
        p, q = len(xs), len(aa)
        xdegs = [self.ldeg[x] for x in xs]
        acc: dict[CoalgebraWord, Fraction] = {}

        def add(w2: CoalgebraWord, c: Fraction):
            v = acc.get(w2, Fraction(0)) + c
            if v:
                acc[w2] = v
            else:
                acc.pop(w2, None)

        for k in range(0, p + 1):
            for chosen in itertools.combinations(range(p), k):
                eps = _front_unshuffle_sign(xdegs, chosen)
                sub = [xs[u] for u in chosen]
                rest = tuple(xs[u] for u in range(p) if u not in set(chosen))
                X_S = sum(xdegs[u] for u in chosen)
                X_rest = sum(xdegs) - X_S
                # bracket component: replaces the chosen letters in the
                # symmetric part
                if k >= 1 and ('l', k) in self.maps:
                    for wname, c in self.maps[('l', k)].lookup(sub, ()).items():
                        norm = normalize_word((wname,) + rest, aa, self.ldeg)
                        if norm is None:
                            continue
                        s2, neww = norm
                        add(neww, Fraction(eps * s2) * c)
                # mixed component: consumes a consecutive window of the
                # ordered part as well, lands back in the ordered part
                for i in range(0, q + 1):
                    A_i = sum(self.adeg[a] for a in aa[:i])
                    move = (-1) ** (((X_S + 1) * (X_rest + A_i)) % 2)
                    for s in range(0, q - i + 1):
                        if (k, s) == (0, 0):
                            continue
                        gm = self.maps.get(('n', k, s))
                        if gm is None:
                            continue
                        win = aa[i:i + s]
                        for wname, c in gm.lookup(sub, win).items():
                            neww = CoalgebraWord(
                                rest, aa[:i] + (wname,) + aa[i + s:])
                            add(neww, Fraction(eps * move) * c)
        return FormalSum(acc)


def lift_coderivation(maps: Mapping[MapKey, GradedMap],
                      max_word: int = 4) -> Coderivation:
    """Package a degree-1 family as the induced coderivation on words."""
    return Coderivation(maps, max_word)


def apply_D_squared(D: Coderivation, word: CoalgebraWord) -> FormalSum:
    return D.apply(D.apply(word))


def coproduct(word: CoalgebraWord, ldeg: Mapping[str, int],
              adeg: Mapping[str, int]) -> FormalSum:
    """Two-part splitting: unshuffle the symmetric part, cut the ordered part.

    Keys of the result are pairs of words.  Used by the property tests to
    confirm that the lifted operator really is a coderivation.
    """
    xs, aa = word.lpart, word.apart
    p, q = len(xs), len(aa)
    xdegs = [ldeg[x] for x in xs]
    acc: dict[tuple, Fraction] = {}
    for k in range(0, p + 1):
        for chosen in itertools.combinations(range(p), k):
            eps = _front_unshuffle_sign(xdegs, chosen)
            left = tuple(xs[u] for u in chosen)
            right = tuple(xs[u] for u in range(p) if u not in set(chosen))
            X_right = sum(xdegs) - sum(xdegs[u] for u in chosen)
            for i in range(0, q + 1):
                A_i = sum(adeg[a] for a in aa[:i])
                sgn = eps * ((-1) ** ((X_right * A_i) % 2))
                pair = (CoalgebraWord(left, aa[:i]),
                        CoalgebraWord(right, aa[i:]))
                acc[pair] = acc.get(pair, Fraction(0)) + sgn
    return FormalSum(acc)


# ---------------------------------------------------------------------------
# the two checks, side by side
# ---------------------------------------------------------------------------

@dataclass
class EquivalenceReport:
    max_word: int
    relations_ok: bool
    min_relation_arity: int | None
    relation_failures: list
    d_squared_ok: bool
    min_word_length: int | None
    word_failures: list
    equivalent: bool = field(init=False)

    def __post_init__(self):
        if self.relations_ok != self.d_squared_ok:
            self.equivalent = False
        elif self.relations_ok:
            self.equivalent = True
        else:
            self.equivalent = self.min_relation_arity == self.min_word_length


def _basis_words(family: OchaFamily, length: int):
    ldeg = family.L.shifted(-2).degrees
    lnames, anames = family.L.names(), family.A.names()
    for np_ in range(0, length + 1):
        nq = length - np_
        for lset in itertools.combinations_with_replacement(lnames, np_):
            if any(lset[i] == lset[i + 1] and ldeg[lset[i]] % 2
                   for i in range(len(lset) - 1)):
                continue
            norm = normalize_word(lset, (), ldeg)
            if norm is None:
                continue
            _, base = norm
            for aset in itertools.product(anames, repeat=nq):
                yield CoalgebraWord(base.lpart, aset)


def check_equivalence(family: OchaFamily, max_word: int = 4) -> EquivalenceReport:
    """Run the relation scan and the D² scan to the same bound and compare."""
    failures = relation_scan(family, max_word)
    min_rel = min((f[0] for f in failures), default=None)

    D = lift_coderivation(coderivation_maps(family), max_word)
    word_failures = []
    min_len = None
    for length in range(1, max_word + 1):
        for w in _basis_words(family, length):
            if apply_D_squared(D, w):
                word_failures.append(w)
                if min_len is None:
                    min_len = length
        if min_len is not None:
            break  # minimal length located; deeper scans only add noise
    return EquivalenceReport(
        max_word=max_word,
        relations_ok=not failures,
        min_relation_arity=min_rel,
        relation_failures=failures[:16],
        d_squared_ok=min_len is None,
        min_word_length=min_len,
        word_failures=word_failures[:16],
    )


# ---------------------------------------------------------------------------
# homology-level bracket sign conventions
# ---------------------------------------------------------------------------

def gerstenhaber_sign_check(space: GradedSpace, l2: GradedMap,
                            m2: GradedMap) -> dict:
    """Brute-force the bracket sign identities over all basis tuples.

    ``l2`` is the symmetric degree-1 pairing, ``m2`` the degree-0 graded
    commutative product on the same space.  Checks, in order: the cyclic
    pairing identity, the pairing-is-a-derivation identity, then the derived
    bracket [x,y] = (-1)^|x| l2(x,y): graded antisymmetry with shifted
    exponents and the shifted cyclic identity.  Finally the deliberately
    wrong bracket (the sign prefactor dropped) is run through the same
    antisymmetry check; a healthy nonzero example must make it fail.
    """
    names = space.names()
    deg = space.degree

    def pair(f, x, y):
        return f.lookup((x, y), ())

    def jacobi_defect(x, y, z):
        out: dict[str, Fraction] = {}
        for (u, v, w) in ((x, y, z), (y, z, x), (z, x, y)):
            sgn = (-1) ** ((deg(u) * deg(w)) % 2)
            for t, c in pair(l2, u, v).items():
                _acc(out, pair(l2, t, w), Fraction(sgn) * c)
        return out

    def leibniz_defect(x, y, z):
        out: dict[str, Fraction] = {}
        for t, c in pair(m2, y, z).items():
            _acc(out, pair(l2, x, t), c)
        for t, c in pair(l2, x, y).items():
            _acc(out, pair(m2, t, z), -c)
        sgn = (-1) ** (((deg(x) + 1) * deg(y)) % 2)
        for t, c in pair(l2, x, z).items():
            _acc(out, pair(m2, y, t), Fraction(-sgn) * c)
        return out

    def bracket(x, y, wrong=False):
        sgn = 1 if wrong else (-1) ** (deg(x) % 2)
        return {t: sgn * c for t, c in pair(l2, x, y).items()}

    def anti_defect(x, y, wrong=False):
        out = dict(bracket(x, y, wrong))
        sgn = (-1) ** (((deg(x) - 1) * (deg(y) - 1)) % 2)
        _acc(out, bracket(y, x, wrong), Fraction(sgn))
        return out

    def shifted_jacobi_defect(x, y, z):
        out: dict[str, Fraction] = {}
        for (u, v, w) in ((x, y, z), (y, z, x), (z, x, y)):
            sgn = (-1) ** (((deg(u) - 1) * (deg(w) - 1)) % 2)
            for t, c in bracket(u, v).items():
                _acc(out, bracket(t, w), Fraction(sgn) * c)
        return out

    report = {
        "jacobi": [], "leibniz": [], "antisymmetry": [],
        "shifted_jacobi": [], "wrong_sign_failures": [],
    }
    for x, y in itertools.product(names, repeat=2):
        if anti_defect(x, y):
            report["antisymmetry"].append((x, y))
        if anti_defect(x, y, wrong=True):
            report["wrong_sign_failures"].append((x, y))
    for x, y, z in itertools.product(names, repeat=3):
        if jacobi_defect(x, y, z):
            report["jacobi"].append((x, y, z))
        if leibniz_defect(x, y, z):
            report["leibniz"].append((x, y, z))
        if shifted_jacobi_defect(x, y, z):
            report["shifted_jacobi"].append((x, y, z))
    report["passed"] = not (report["jacobi"] or report["leibniz"]
                            or report["antisymmetry"] or report["shifted_jacobi"])
    report["wrong_sign_detected"] = bool(report["wrong_sign_failures"])
    return report


# ---------------------------------------------------------------------------
# change of basis
# ---------------------------------------------------------------------------

def _invert_deg0(mat: Mapping[str, Mapping[str, Fraction]],
                 space: GradedSpace) -> dict[str, dict[str, Fraction]]:
    names = list(space.names())
    idx = {x: i for i, x in enumerate(names)}
    n = len(names)
    for x, row in mat.items():
        for y, c in row.items():
            if c and space.degree(x) != space.degree(y):
                raise StructureError("change of basis must preserve degree")
    dense = [[Fraction(0)] * (2 * n) for _ in range(n)]
    for x, row in mat.items():
        for y, c in row.items():
            dense[idx[y]][idx[x]] = Fraction(c)  # column x holds image of x
    for i in range(n):
        dense[i][n + i] = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if dense[r][col]), None)
        if piv is None:
            raise StructureError("change of basis is singular")
        dense[col], dense[piv] = dense[piv], dense[col]
        inv = 1 / dense[col][col]
        dense[col] = [v * inv for v in dense[col]]
        for r in range(n):
            if r != col and dense[r][col]:
                f = dense[r][col]
                dense[r] = [a - f * b for a, b in zip(dense[r], dense[col])]
    out: dict[str, dict[str, Fraction]] = {x: {} for x in names}
    for j, x in enumerate(names):
        for i, y in enumerate(names):
            c = dense[i][n + j]
            if c:
                out[x][y] = c
    return out


def conjugate_family(family: OchaFamily,
                     gl: Mapping[str, Mapping[str, Fraction]],
                     ga: Mapping[str, Mapping[str, Fraction]]) -> OchaFamily:
    """Transport the family through degree-0 automorphisms of both spaces.

    ``gl[x]`` is the expansion of g(x) in the basis; likewise ``ga``.  The
    result g⁻¹ ∘ op ∘ g^{⊗…} satisfies the relations iff the original does,
    which makes this the cheap source of provably-valid randomized families.
    """
    gl_inv = _invert_deg0(gl, family.L)
    ga_inv = _invert_deg0(ga, family.A)
    out = OchaFamily(family.L, family.A)
    for key, m in family.maps.items():
        new = out.new_map(key)
        lnames = family.L.names()
        anames = family.A.names()
        for kl in itertools.combinations_with_replacement(lnames, m.p):
            if _canonical_l_tuple(kl, m.ldeg) is None:
                continue
            for ka in itertools.product(anames, repeat=m.q):
                val: dict[str, Fraction] = {}
                pools_l = [gl.get(x, {}) for x in kl]
                pools_a = [ga.get(a, {}) for a in ka]
                for imgs_l in itertools.product(*[p.items() for p in pools_l]) \
                        if pools_l else [()]:
                    coef_l = Fraction(1)
                    for _, c in imgs_l:
                        coef_l *= c
                    ys = [y for y, _ in imgs_l]
                    for imgs_a in itertools.product(*[p.items() for p in pools_a]) \
                            if pools_a else [()]:
                        coef = coef_l
                        for _, c in imgs_a:
                            coef *= c
                        bs = [b for b, _ in imgs_a]
                        _acc(val, m.lookup(ys, bs), coef)
                # pull the value back through the inverse
                back: dict[str, Fraction] = {}
                inv = gl_inv if m.out == 'L' else ga_inv
                for t, c in val.items():
                    _acc(back, inv[t], c)
                for t, c in back.items():
                    new.set(kl, ka, t, c)
    return out


# ---------------------------------------------------------------------------
# structure-constant JSON
# ---------------------------------------------------------------------------

def family_to_json(family: OchaFamily) -> dict:
    doc = {
        "L": [{"name": x, "deg": d} for x, d in family.L.degrees.items()],
        "A": [{"name": a, "deg": d} for a, d in family.A.degrees.items()],
        "maps": [],
    }
    for key in sorted(family.maps, key=repr):
        m = family.maps[key]
        entries = []
        for kl, ka, name, c in m.entries():
            entries.append({"in": list(kl) + list(ka), "out": {name: str(c)}})
        if key[0] == 'l':
            doc["maps"].append({"kind": "l", "p": key[1], "q": 0,
                                "entries": entries})
        else:
            doc["maps"].append({"kind": "n", "p": key[1], "q": key[2],
                                "entries": entries})
    return doc


def family_from_json(doc) -> OchaFamily:
    if isinstance(doc, str):
        doc = json.loads(doc)
    L = GradedSpace((e["name"], e["deg"]) for e in doc["L"])
    A = GradedSpace((e["name"], e["deg"]) for e in doc["A"])
    fam = OchaFamily(L, A)
    for spec in doc["maps"]:
        kind, p, q = spec["kind"], spec["p"], spec.get("q", 0)
        key = ('l', p) if kind == 'l' else ('n', p, q)
        m = fam.maps.get(key) or fam.new_map(key)
        for e in spec.get("entries", ()):
            ins = e["in"]
            if len(ins) != p + q:
                raise StructureError(f"entry arity mismatch in {key}")
            for name, c in e["out"].items():
                m.set(ins[:p], ins[p:], name, Fraction(c))
    return fam
