"""Topologies on small finite sets and their groups of continuous bijections.

Subsets of {0, ..., n-1} are bit masks. Exhaustive enumeration is capped at
four points: beyond that the 2^(2^n - 2) candidate families are out of reach.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

MAX_POINTS = 4


class TooManyPoints(ValueError):
    pass


def _check_n(n: int):
    if n < 1:
        raise ValueError("need at least one point")
    if n > MAX_POINTS:
        raise TooManyPoints(f"n={n} exceeds exhaustive cap of {MAX_POINTS} points")


def mask(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def members(m: int, n: int) -> list[int]:
    return [i for i in range(n) if m >> i & 1]


@dataclass(frozen=True)
class FiniteTopology:
    n: int
    opens: frozenset

    def __post_init__(self):
        object.__setattr__(self, "opens", frozenset(self.opens))
        if not is_topology(self.opens, self.n):
            raise ValueError(f"not a topology on {self.n} points: {sorted(self.opens)}")

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "FiniteTopology":
        return cls(n, frozenset(mask(s) for s in sets))

    def key(self) -> tuple:
        return tuple(sorted(self.opens))

    def as_sets(self) -> list[list[int]]:
        return sorted((members(m, self.n) for m in self.opens), key=lambda s: (len(s), s))

    def __str__(self):
        return "{" + ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.as_sets()) + "}"


def is_topology(family: Iterable[int], n: int) -> bool:
    fam = set(family)
    full = (1 << n) - 1
    if 0 not in fam or full not in fam:
        return False
    if any(m < 0 or m > full for m in fam):
        return False
    return all(a | b in fam and a & b in fam for a in fam for b in fam)


def enumerate_topologies(n: int) -> list[FiniteTopology]:
    """All labeled topologies on n points, by brute force over families."""
    _check_n(n)
    full = (1 << n) - 1
    proper = list(range(1, full))
    out = []
    for choice in range(1 << len(proper)):
        fam = {0, full}
        fam.update(s for i, s in enumerate(proper) if choice >> i & 1)
        if is_topology(fam, n):
            out.append(FiniteTopology(n, frozenset(fam)))
    return out


def topologies_from_preorders(n: int) -> list[FiniteTopology]:
    """Labeled topologies on n points via reflexive transitive relations.

    Finite topologies correspond one-to-one with preorders; the open sets
    are the up-closed sets. Independent of `enumerate_topologies`.
    """
    _check_n(n)
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    seen = set()
    out = []
    for bits in product((False, True), repeat=len(pairs)):
        le = {(i, i) for i in range(n)} | {p for p, b in zip(reversed(pairs), bits) if b}
        if any((a, d) not in le for (a, b) in le for (c, d) in le if b == c):
            continue
        opens = frozenset(
            m for m in range(1 << n)
            if all(m >> j & 1 for (i, j) in le if m >> i & 1)
        )
        if opens not in seen:
            seen.add(opens)
            out.append(FiniteTopology(n, opens))
    return out


def relabel(m: int, perm: Sequence[int]) -> int:
    out = 0
    for i, j in enumerate(perm):
        if m >> i & 1:
            out |= 1 << j
    return out


def canonicalize_topology(t: FiniteTopology) -> FiniteTopology:
    """Lexicographically least relabeling over all point permutations."""
    best = min(tuple(sorted(relabel(m, p) for m in t.opens)) for p in permutations(range(t.n)))
    return FiniteTopology(t.n, frozenset(best))


def homeomorphism_classes(n: int) -> list[FiniteTopology]:
    classes = {canonicalize_topology(t) for t in enumerate_topologies(n)}
    return sorted(classes, key=lambda t: (len(t.opens), t.key()))


# -- maps and groups -----------------------------------------------------------

def preimage(table: Sequence[int], m: int) -> int:
    return mask(i for i, j in enumerate(table) if m >> j & 1)


def is_continuous_map(table: Sequence[int], t: FiniteTopology) -> bool:
    return all(preimage(table, u) in t.opens for u in t.opens)


def compose_tables(f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """f ∘ g as a function table."""
    return tuple(f[g[i]] for i in range(len(g)))


def continuous_bijection_monoid(t: FiniteTopology) -> frozenset:
    group = frozenset(p for p in permutations(range(t.n)) if is_continuous_map(p, t))
    assert tuple(range(t.n)) in group
    assert all(compose_tables(a, b) in group for a in group for b in group)
    return group


def element_order(p: Sequence[int]) -> int:
    ident = tuple(range(len(p)))
    q, k = tuple(p), 1
    while q != ident:
        q, k = compose_tables(p, q), k + 1
    return k


_TYPES_BY_ORDER = {
    1: "C1", 2: "C2", 3: "C3", 5: "C5", 8: "D4", 12: "A4", 24: "S4",
}


def group_type(group: Iterable[Sequence[int]]) -> str:
    """Isomorphism type of a permutation group of degree <= 4.

    Orders 4 and 6 are split by the multiset of element orders; the other
    orders of subgroups of S4 admit only one type.
    """
    orders = Counter(element_order(p) for p in group)
    size = sum(orders.values())
    if size == 4:
        return "C4" if orders[4] else "V4"
    if size == 6:
        return "C6" if orders[6] else "S3"
    try:
        return _TYPES_BY_ORDER[size]
    except KeyError:
        raise ValueError(f"no type known for group of order {size}") from None


# -- the three-point classification ---------------------------------------------

A, B, C = 0, 1, 2
# one labeled topology per homeomorphism class on three points
THREE_POINT_REPRESENTATIVES = [
    [[], [A, B, C]],
    [[], [A], [A, B, C]],
    [[], [A, B], [A, B, C]],
    [[], [A], [A, B], [A, B, C]],
    [[], [A], [B, C], [A, B, C]],
    [[], [A], [B], [A, B], [A, B, C]],
    [[], [A], [A, B], [A, C], [A, B, C]],
    [[], [A], [B], [A, B], [A, C], [A, B, C]],
    [list(s) for k in range(4) for s in combinations([A, B, C], k)],
]


def representative(class_id: int) -> FiniteTopology:
    """Representative number `class_id` (1-based) of the list above."""
    return FiniteTopology.from_sets(3, THREE_POINT_REPRESENTATIVES[class_id - 1])


def three_point_table() -> list[dict]:
    """Classes of topologies on three points with their continuity groups.

    Each enumerated class is matched to its labeled representative; the
    group of continuous bijections is recomputed from scratch.
    """
    ids = range(1, len(THREE_POINT_REPRESENTATIVES) + 1)
    labels = {canonicalize_topology(representative(k)): k for k in ids}
    if len(labels) != len(ids):
        raise AssertionError("representatives are not pairwise non-homeomorphic")
    rows = []
    for cls in homeomorphism_classes(3):
        label = labels[cls]
        rep = representative(label)
        group = continuous_bijection_monoid(rep)
        rows.append({
            "class_id": label,
            "opens": rep.as_sets(),
            "group_order": len(group),
            "group_type": group_type(group),
        })
    return sorted(rows, key=lambda r: r["class_id"])


def search_symmetric_realization(n: int, signature: str) -> FiniteTopology | None:
    """First topology on n points whose continuous bijections form `signature`.

    Topologies are scanned by number of open sets, then by canonical key; the
    canonical representative of the first hit is returned.
    """
    _check_n(n)
    for t in sorted(enumerate_topologies(n), key=lambda t: (len(t.opens), canonicalize_topology(t).key())):
        if group_type(continuous_bijection_monoid(t)) == signature:
            return canonicalize_topology(t)
    return None


def realizes_subgroup(n: int, subgroup: Iterable[Sequence[int]]) -> list[FiniteTopology]:
    """Labeled topologies whose continuous-bijection group equals `subgroup`."""
    target = frozenset(tuple(p) for p in subgroup)
    return [t for t in enumerate_topologies(n) if continuous_bijection_monoid(t) == target]


def bijection_group_orders(max_n: int = MAX_POINTS) -> dict[int, int]:
    """|B(X)| for |X| = 1..max_n, counted by enumeration."""
    return {n: sum(1 for _ in permutations(range(n))) for n in range(1, max_n + 1)}
