"""JSON and DOT emitters plus loaders.

Poset JSON stores the covering pairs only; the loader rebuilds the full
order as a reflexive-transitive closure and re-validates antisymmetry, so
hand-written files may list any generating set of pairs.  All dumps go
through json_dumps for byte-stable output.
"""

from __future__ import annotations

import hashlib
import json

from .completions import FamilyPoset
from .morphisms import MonotoneMap
from .poset import Poset, bits, bits_desc, hasse_covers, validate_up_rows


def json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def poset_to_json(P: Poset) -> dict:
    doc = {"n": P.n, "leq": [[i, j] for i, j in hasse_covers(P)]}
    if P.labels is not None:
        doc["labels"] = list(P.labels)
    return doc


def poset_from_json(doc: dict) -> Poset:
    n = doc["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a nonnegative integer")
    rows = [1 << i for i in range(n)]
    for pair in doc.get("leq", ()):
        i, j = pair
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"leq pair {pair} out of range")
        rows[i] |= 1 << j
    # transitive closure, then validate antisymmetry on the result
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = rows[i]
            for j in bits(rows[i]):
                acc |= rows[j]
            if acc != rows[i]:
                rows[i] = acc
                changed = True
    labels = doc.get("labels")
    if labels is not None:
        labels = tuple(str(x) for x in labels)
    return validate_up_rows(rows, labels=labels)


def family_to_json(F: FamilyPoset) -> dict:
    return {
        "kind": F.kind,
        "base_n": F.base.n,
        "sets": list(F.sets),
        "leq": [[i, j] for i, j in hasse_covers(F.order)],
    }


def family_order_from_json(doc: dict) -> Poset:
    """Rebuild just the inclusion order of a dumped family, for rendering."""
    inner = {
        "n": len(doc["sets"]),
        "leq": doc["leq"],
        "labels": [_set_label(m, doc["base_n"]) for m in doc["sets"]],
    }
    return poset_from_json(inner)


def _set_label(mask: int, base_n: int) -> str:
    if mask == 0:
        return "∅"
    return "{" + ",".join(str(i) for i in bits_desc(mask)) + "}"


def invariant_hash(P: Poset) -> str:
    """Isomorphism-stable fingerprint: iterated degree refinement.

    Cheaper than a canonical form; equal posets hash equal, and unequal
    hashes certify non-isomorphism (the converse can fail).  The digest
    covers every round's signature table, not just the final partition:
    the partition shape alone cannot tell a three-chain from a chain plus
    a point.
    """
    colors = [0] * P.n
    rounds = []
    for _ in range(P.n + 1):
        sigs = []
        for i in range(P.n):
            below = sorted(colors[j] for j in bits(P.down[i]) if j != i)
            above = sorted(colors[j] for j in bits(P.up[i]) if j != i)
            sigs.append((colors[i], tuple(below), tuple(above)))
        table = sorted(set(sigs))
        ranking = {s: k for k, s in enumerate(table)}
        nxt = [ranking[s] for s in sigs]
        rounds.append([[c, list(b), list(a)] for c, b, a in table])
        if nxt == colors:
            break
        colors = nxt
    payload = json_dumps([P.n, rounds, sorted(colors)])
    return hashlib.sha256(payload.encode()).hexdigest()


def map_to_json(f: MonotoneMap) -> dict:
    return {
        "kind": f.kind,
        "image": list(f.image),
        "source": poset_to_json(f.source),
        "target": poset_to_json(f.target),
        "source_hash": invariant_hash(f.source),
        "target_hash": invariant_hash(f.target),
    }


def poset_to_dot(P: Poset, name: str = "poset") -> str:
    """Hasse diagram in DOT, drawn bottom-up."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i in range(P.n):
        lines.append(f'  {i} [label="{P.label(i)}"];')
    for i, j in hasse_covers(P):
        lines.append(f"  {i} -> {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
