"""Families of downsets over a base poset, ordered by inclusion.

Every completion here returns a :class:`FamilyPoset`: the base, the member
sets in ascending bitmask order, and the inclusion order on them as a
poset of its own (so each completion can be fed back into any operation).

Family sizes can explode, so every enumerator takes a cap and raises
CapacityExceeded on overflow rather than truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .morphisms import MonotoneMap, iter_maps, map_kind
from .poset import (
    CapacityExceeded,
    Poset,
    bits,
    down_closure,
    induced,
    is_directed,
    linear_extension,
    mask_of,
    render_elemset,
)

DEFAULT_FAMILY_CAP = 1 << 20

KIND_DOWN = "down"
KIND_IDEAL = "ideal"
KIND_NONEMPTY_IDEAL = "nonempty_ideal"
KIND_CHAIN_IDEAL = "chain_ideal"
KIND_NONEMPTY_CHAIN_IDEAL = "nonempty_chain_ideal"
KIND_FDOWN = "fdown"
KIND_XDOWN = "xdown"


@dataclass(frozen=True)
class FamilyPoset:
    base: Poset
    sets: tuple[int, ...]  # ascending mask order
    order: Poset           # inclusion order; element i is sets[i]
    kind: str

    @cached_property
    def _index(self) -> dict[int, int]:
        return {s: i for i, s in enumerate(self.sets)}

    def index(self, mask: int) -> int:
        return self._index[mask]

    def __contains__(self, mask: int) -> bool:
        return mask in self._index

    def __len__(self) -> int:
        return len(self.sets)


def _inclusion_order(base: Poset, sets: Sequence[int]) -> Poset:
    rows = []
    for s in sets:
        row = 0
        for j, t in enumerate(sets):
            if s & ~t == 0:
                row |= 1 << j
        rows.append(row)
    labels = tuple(render_elemset(base, s) for s in sets)
    return Poset(len(sets), tuple(rows), labels)


def _family(base: Poset, sets, kind: str, cap: int) -> FamilyPoset:
    ordered = tuple(sorted(sets))
    if len(ordered) > cap:
        raise CapacityExceeded(f"family of {len(ordered)} sets exceeds cap {cap}")
    return FamilyPoset(base, ordered, _inclusion_order(base, ordered), kind)


def downsets(P: Poset, cap: int = DEFAULT_FAMILY_CAP) -> FamilyPoset:
    """All downsets of P, including the empty set and P itself.

    Walks a linear extension deciding membership element by element; an
    element may enter only once everything strictly below it has, so each
    leaf of the walk is exactly one downset.
    """
    ext = linear_extension(P)
    out: list[int] = []

    def rec(t: int, m: int):
        if t == len(ext):
            out.append(m)
            if len(out) > cap:
                raise CapacityExceeded(f"downset family exceeds cap {cap}")
            return
        rec(t + 1, m)
        e = ext[t]
        if P.down[e] & ~m == 1 << e:
            rec(t + 1, m | (1 << e))

    rec(0, 0)
    return _family(P, out, KIND_DOWN, cap)


def ideals(P: Poset, include_empty: bool, cap: int = DEFAULT_FAMILY_CAP) -> FamilyPoset:
    """Upward directed downsets.  The empty set is directed; the flag says
    whether to keep it."""
    fam = downsets(P, cap)
    keep = [s for s in fam.sets if (s or include_empty) and is_directed(P, s)]
    kind = KIND_IDEAL if include_empty else KIND_NONEMPTY_IDEAL
    return _family(P, keep, kind, cap)


def chain_ideals(P: Poset, include_empty: bool, cap: int = DEFAULT_FAMILY_CAP,
                 visit_budget: int = 1 << 22) -> FamilyPoset:
    """Downsets generated by chains: down-closures of totally ordered subsets.

    Enumerated from the definition (all chain subsets, depth-first in index
    order), not via any shortcut, so the coincidence with ideals(P) on
    finite posets stays an observable fact rather than an assumption.
    """
    comp = tuple(P.up[i] | P.down[i] for i in range(P.n))
    found: set[int] = set()
    if include_empty:
        found.add(0)
    visits = 0

    def rec(cmask: int, closure: int, start: int):
        nonlocal visits
        for j in range(start, P.n):
            if cmask & ~comp[j]:
                continue
            visits += 1
            if visits > visit_budget:
                raise CapacityExceeded(f"chain enumeration exceeded {visit_budget} visits")
            cl = closure | P.down[j]
            found.add(cl)
            if len(found) > cap:
                raise CapacityExceeded(f"chain ideal family exceeds cap {cap}")
            rec(cmask | (1 << j), cl, j + 1)

    rec(0, 0, 0)
    kind = KIND_CHAIN_IDEAL if include_empty else KIND_NONEMPTY_CHAIN_IDEAL
    return _family(P, found, kind, cap)


def fdown(P: Poset, cap: int = DEFAULT_FAMILY_CAP) -> FamilyPoset:
    """Finite nonempty unions of principal downsets.

    This is the free upper semilattice on P: the inclusion order has all
    binary joins (unions) and the principal downsets generate.  Empty P
    gives the empty family.
    """
    principal = {P.down[x] for x in range(P.n)}
    family = set(principal)
    frontier = set(principal)
    while frontier:
        fresh = set()
        for s in frontier:
            for x in range(P.n):
                u = s | P.down[x]
                if u not in family:
                    family.add(u)
                    fresh.add(u)
                    if len(family) > cap:
                        raise CapacityExceeded(f"fdown family exceeds cap {cap}")
        frontier = fresh
    return _family(P, family, KIND_FDOWN, cap)


def iterate_id(P: Poset, k: int, cap: int = DEFAULT_FAMILY_CAP) -> Poset:
    """Apply the nonempty-ideal completion k times, re-basing each stage;
    returns the final stage's order poset.  k = 0 returns P itself."""
    if k < 0:
        raise ValueError("k must be >= 0")
    cur = P
    for _ in range(k):
        cur = ideals(cur, include_empty=False, cap=cap).order
    return cur


def principal_embedding(P: Poset) -> MonotoneMap:
    """x |-> principal downset of x, as a map into ideals(P, nonempty).

    On a finite poset every nonempty ideal is principal, so this comes out
    an isomorphism; the kind field records what was actually verified.
    """
    fam = ideals(P, include_empty=False)
    image = tuple(fam.index(P.down[x]) for x in range(P.n))
    kind = map_kind(P, fam.order, image)
    assert kind is not None
    return MonotoneMap(P, fam.order, image, kind)


def _least_upper_bound(P: Poset, ub_mask: int) -> int | None:
    for m in bits(ub_mask):
        if ub_mask & ~P.up[m] == 0:
            return m
    return None


def compact_elements(P: Poset, cap: int = DEFAULT_FAMILY_CAP) -> int:
    """Elements x such that every nonempty directed set with a least upper
    bound above x already contains a member above x.

    Brute force over all nonempty directed subsets that possess a least
    upper bound; subsets without one impose no constraint.  The directed
    sets quantified over are nonempty: otherwise a least element, whose
    empty-set supremum it is, could never be compact.
    """
    if P.n == 0:
        return 0
    if (1 << P.n) > cap:
        raise CapacityExceeded(f"2^{P.n} subsets exceeds cap {cap}")
    candidates = P.full_mask
    lub_memo: dict[int, int | None] = {}
    for s in range(1, 1 << P.n):
        if not is_directed(P, s):
            continue
        ub = P.full_mask
        for i in bits(s):
            ub &= P.up[i]
        if not ub:
            continue
        if ub in lub_memo:
            lub = lub_memo[ub]
        else:
            lub = lub_memo[ub] = _least_upper_bound(P, ub)
        if lub is None:
            continue
        covered = down_closure(P, s)
        candidates &= ~(P.down[lub] & ~covered)
        if not candidates:
            break
    return candidates


def n_compact_elements(P: Poset, n: int, cap: int = DEFAULT_FAMILY_CAP) -> int:
    """Iterate compact_elements on the induced subposet n times (n >= 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    carrier = P.full_mask
    for _ in range(n):
        sub, elems = induced(P, carrier)
        c = compact_elements(sub, cap)
        carrier = mask_of(elems[i] for i in bits(c))
    return carrier


def least_compact_above(P: Poset, a: int, cap: int = DEFAULT_FAMILY_CAP) -> int | None:
    """The minimum of the compact elements above a, when that set has one."""
    cand = compact_elements(P, cap) & P.up[a]
    if not cand:
        return None
    for m in bits(cand):
        if cand & ~P.up[m] == 0:
            return m
    return None


def x_down(P: Poset, X: Sequence[Poset], cap: int = DEFAULT_FAMILY_CAP,
           budget: int | None = None) -> FamilyPoset:
    """Downsets of P arising as down-closures of isotone images of members
    of X.  The maps are enumerated by backtracking, one source poset at a
    time; distinct maps with the same closure collapse."""
    found: set[int] = set()
    for Q in X:
        for img in iter_maps(Q, P, "isotone", budget):
            cl = 0
            for q in range(Q.n):
                cl |= P.down[img[q]]
            found.add(cl)
            if len(found) > cap:
                raise CapacityExceeded(f"x_down family exceeds cap {cap}")
    return _family(P, found, KIND_XDOWN, cap)
