"""Finite partial orders over elements 0..n-1, with bitmask element sets.

The relation is stored as one bitmask row per element: ``up[i]`` has bit j
set exactly when i <= j.  An element set ("mask") is a plain int whose bit i
marks membership of element i.  Keeping everything in machine words makes
the exhaustive enumerations in the rest of the package cheap and keeps all
iteration orders deterministic: sets are always produced in ascending mask
value, elements in ascending index.

The hard size envelope is 64 elements so a mask never outgrows one word.
Anything that would enumerate past a configured bound raises
:class:`CapacityExceeded` instead of silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

MAX_ELEMENTS = 64


class PosetError(Exception):
    """Base class for order-axiom violations and capacity errors."""


class NotReflexive(PosetError):
    def __init__(self, i: int):
        super().__init__(f"relation is not reflexive at element {i}")
        self.element = i


class NotAntisymmetric(PosetError):
    def __init__(self, i: int, j: int):
        super().__init__(f"relation is not antisymmetric on pair ({i}, {j})")
        self.pair = (i, j)


class NotTransitive(PosetError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"relation is not transitive on ({i}, {j}, {k})")
        self.triple = (i, j, k)


class CapacityExceeded(PosetError):
    """An input or enumeration exceeded a configured size bound."""


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_desc(mask: int) -> Iterator[int]:
    """Indices of set bits, descending."""
    while mask:
        i = mask.bit_length() - 1
        yield i
        mask ^= 1 << i


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Poset:
    """An immutable finite poset.

    ``up[i]`` is the bitmask of elements j with i <= j (always including i
    itself).  ``labels`` is an optional display name per element; it plays
    no role in any algorithm.
    """

    n: int
    up: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    @cached_property
    def down(self) -> tuple[int, ...]:
        """down[j] = bitmask of elements i with i <= j."""
        rows = [0] * self.n
        for i, row in enumerate(self.up):
            for j in bits(row):
                rows[j] |= 1 << i
        return tuple(rows)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and bool(self.up[i] >> j & 1)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def __repr__(self):
        return f"Poset(n={self.n})"


def _check_capacity(n: int):
    if n > MAX_ELEMENTS:
        raise CapacityExceeded(f"{n} elements exceeds the {MAX_ELEMENTS}-element envelope")


def validate_poset(relation: Sequence[Sequence[int]], labels=None) -> Poset:
    """Build a Poset from an n x n 0/1 matrix, checking the order axioms.

    Raises NotReflexive, NotAntisymmetric or NotTransitive naming the first
    violation in scan order (rows ascending, columns ascending).
    """
    n = len(relation)
    _check_capacity(n)
    rows = []
    for i, row in enumerate(relation):
        if len(row) != n:
            raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        rows.append(mask_of(j for j, v in enumerate(row) if v))
    return validate_up_rows(rows, labels)


def validate_up_rows(rows: Sequence[int], labels=None) -> Poset:
    """Build a Poset from up-set masks, checking the order axioms."""
    n = len(rows)
    _check_capacity(n)
    rows = list(rows)
    for i in range(n):
        if rows[i] >> n:
            raise ValueError(f"row {i} mentions elements beyond {n}")
        if not rows[i] >> i & 1:
            raise NotReflexive(i)
    for i in range(n):
        for j in bits(rows[i] & ~((1 << (i + 1)) - 1)):
            if rows[j] >> i & 1:
                raise NotAntisymmetric(i, j)
    for i in range(n):
        for j in bits(rows[i]):
            missing = rows[j] & ~rows[i]
            if missing:
                k = (missing & -missing).bit_length() - 1
                raise NotTransitive(i, j, k)
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise ValueError("labels length does not match element count")
    return Poset(n, tuple(rows), labels)


def from_up_rows(rows: Sequence[int], labels=None) -> Poset:
    """Trusted constructor for internally built relations (no axiom checks)."""
    _check_capacity(len(rows))
    return Poset(len(rows), tuple(rows), labels)


def down_closure(P: Poset, x: int) -> int:
    """Least downset containing the elements of mask x."""
    out = 0
    for i in bits(x):
        out |= P.down[i]
    return out


def up_closure(P: Poset, x: int) -> int:
    out = 0
    for i in bits(x):
        out |= P.up[i]
    return out


def is_downset(P: Poset, x: int) -> bool:
    return down_closure(P, x) == x


def is_directed(P: Poset, d: int) -> bool:
    """Upward directed: every pair in d has an upper bound in d.

    The empty set and singletons are directed.
    """
    elems = list(bits(d))
    for a in range(len(elems)):
        for b in range(a + 1, len(elems)):
            if not P.up[elems[a]] & P.up[elems[b]] & d:
                return False
    return True


def is_chain(P: Poset, c: int) -> bool:
    """Totally ordered subset; empty and singletons count."""
    elems = list(bits(c))
    for a in range(len(elems)):
        for b in range(a + 1, len(elems)):
            i, j = elems[a], elems[b]
            if not (P.leq(i, j) or P.leq(j, i)):
                return False
    return True


def hasse_covers(P: Poset) -> tuple[tuple[int, int], ...]:
    """Cover pairs (i, j): i < j with nothing strictly between."""
    out = []
    for i in range(P.n):
        strict_up = P.up[i] & ~(1 << i)
        for j in bits(strict_up):
            between = P.up[i] & P.down[j] & ~(1 << i) & ~(1 << j)
            if not between:
                out.append((i, j))
    return tuple(out)


def dual(P: Poset) -> Poset:
    """Same elements, order reversed."""
    return Poset(P.n, P.down, P.labels)


def disjoint_union(parts: Sequence[Poset]) -> Poset:
    total = sum(p.n for p in parts)
    _check_capacity(total)
    rows = []
    offset = 0
    for p in parts:
        rows.extend(row << offset for row in p.up)
        offset += p.n
    labels = None
    if parts and all(p.labels is not None for p in parts):
        labels = tuple(lab for p in parts for lab in p.labels)
    return Poset(total, tuple(rows), labels)


def direct_product(P: Poset, Q: Poset) -> Poset:
    """Componentwise order on pairs; (i, j) is encoded as i * Q.n + j."""
    _check_capacity(P.n * Q.n)
    rows = []
    for i in range(P.n):
        for j in range(Q.n):
            row = 0
            for i2 in bits(P.up[i]):
                # bits of Q.up[j] shifted into block i2
                row |= Q.up[j] << (i2 * Q.n)
            rows.append(row)
    labels = None
    if P.labels is not None and Q.labels is not None:
        labels = tuple(f"({a},{b})" for a in P.labels for b in Q.labels)
    return Poset(P.n * Q.n, tuple(rows), labels)


def adjoin_bounds(P: Poset, add_top: bool = True, add_bottom: bool = True) -> Poset:
    """Add a new global bottom and/or top.  New indices follow the old ones:
    bottom first (index n), then top."""
    n = P.n
    extra = int(add_top) + int(add_bottom)
    _check_capacity(n + extra)
    rows = list(P.up)
    labels = list(P.labels) if P.labels is not None else None
    if add_bottom:
        b = len(rows)
        rows = [r for r in rows]
        rows.append(((1 << n) - 1) | (1 << b))
        if labels is not None:
            labels.append("bot")
    if add_top:
        t = len(rows)
        rows = [r | (1 << t) for r in rows]
        rows.append(1 << t)
        if labels is not None:
            labels.append("top")
    return Poset(len(rows), tuple(rows), tuple(labels) if labels is not None else None)


def induced(P: Poset, carrier: int) -> tuple[Poset, tuple[int, ...]]:
    """Subposet on the elements of mask carrier.

    Returns the subposet plus the tuple mapping new index -> old index.
    """
    elems = tuple(bits(carrier))
    pos = {e: k for k, e in enumerate(elems)}
    rows = []
    for e in elems:
        row = 0
        for j in bits(P.up[e] & carrier):
            row |= 1 << pos[j]
        rows.append(row)
    labels = tuple(P.labels[e] for e in elems) if P.labels is not None else None
    return Poset(len(elems), tuple(rows), labels), elems


def linear_extension(P: Poset) -> tuple[int, ...]:
    """A deterministic linear extension: ascending |down(x)|, ties by index."""
    return tuple(sorted(range(P.n), key=lambda i: (P.down[i].bit_count(), i)))


def minimal_elements(P: Poset) -> int:
    return mask_of(i for i in range(P.n) if P.down[i] == 1 << i)


def maximal_elements(P: Poset) -> int:
    return mask_of(i for i in range(P.n) if P.up[i] == 1 << i)


def render_elemset(P: Poset, mask: int) -> str:
    """Display form of an element set; members listed by descending index."""
    if not mask:
        return "∅"
    return "{" + ",".join(P.label(i) for i in bits_desc(mask)) + "}"
