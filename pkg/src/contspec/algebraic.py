"""Realizing (monoid, submonoid) pairs by families of piecewise maps.

Elements of a finite monoid index the columns of a space. For the open
construction an element in S gets the column ``[0, 2)``, any other element
``[0, 1) ∪ [2, 3)``, and ``f_n`` carries column m onto column ``m*n`` with
the same four transfer cases as the integer line. For the compact
construction every column is ``[0, 1]``, an isolated point ``INF`` is added,
and ``f_n`` swaps the two endpoints exactly when it crosses between H and
its complement.

Families compose as ``f_n ∘ f_m = f_{mn}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .intervals import Interval, IntervalUnion
from .piecewise import (
    INF,
    ColumnSpace,
    Piece,
    PiecewiseMap,
    column_shape,
    compose,
    is_bijection,
    is_continuous,
    transfer_pieces,
)


class InvalidCayleyTable(ValueError):
    def __init__(self, law: str, witness: tuple):
        super().__init__(f"{law} fails at {witness}")
        self.law = law
        self.witness = witness


class NotASubmonoid(ValueError):
    pass


@dataclass(frozen=True)
class CayleyTable:
    op: tuple
    identity: int = 0
    names: tuple | None = None

    def __post_init__(self):
        op = tuple(tuple(int(x) for x in row) for row in self.op)
        object.__setattr__(self, "op", op)
        n = len(op)
        if n == 0 or any(len(row) != n for row in op):
            raise InvalidCayleyTable("square table", (n,))
        if any(not 0 <= x < n for row in op for x in row):
            raise InvalidCayleyTable("closure", (n,))
        if not 0 <= self.identity < n:
            raise InvalidCayleyTable("identity in range", (self.identity,))
        if self.names is not None:
            names = tuple(str(x) for x in self.names)
            if len(names) != n or len(set(names)) != n:
                raise ValueError("names must be distinct, one per element")
            object.__setattr__(self, "names", names)

    @property
    def size(self) -> int:
        return len(self.op)

    @property
    def elements(self) -> range:
        return range(self.size)

    def mul(self, a: int, b: int) -> int:
        return self.op[a][b]

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    def lookup(self, name: str) -> int:
        if self.names and name in self.names:
            return self.names.index(name)
        try:
            a = int(name)
        except ValueError:
            raise KeyError(f"unknown element {name!r}") from None
        if not 0 <= a < self.size:
            raise KeyError(f"element {a} out of range")
        return a

    def inverse(self, a: int) -> int | None:
        for b in self.elements:
            if self.mul(a, b) == self.identity and self.mul(b, a) == self.identity:
                return b
        return None

    def to_json(self) -> dict:
        out = {"size": self.size, "identity": self.identity, "op": [list(r) for r in self.op]}
        if self.names:
            out["names"] = list(self.names)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CayleyTable":
        table = cls(tuple(map(tuple, data["op"])), data["identity"], data.get("names"))
        if "size" in data and data["size"] != table.size:
            raise InvalidCayleyTable("declared size", (data["size"], table.size))
        return table

    @classmethod
    def load(cls, path) -> "CayleyTable":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


def validate(table: CayleyTable) -> str:
    """Return "group" or "monoid"; raise InvalidCayleyTable on the first broken law."""
    e = table.identity
    for x in table.elements:
        if table.mul(e, x) != x or table.mul(x, e) != x:
            raise InvalidCayleyTable("identity law", (e, x))
    for a in table.elements:
        for b in table.elements:
            ab = table.mul(a, b)
            for c in table.elements:
                if table.mul(ab, c) != table.mul(a, table.mul(b, c)):
                    raise InvalidCayleyTable("associativity", (a, b, c))
    if all(table.inverse(a) is not None for a in table.elements):
        return "group"
    return "monoid"


# -- built-in tables -----------------------------------------------------------

def cyclic(n: int) -> CayleyTable:
    return CayleyTable(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), 0)


def _perm_group(perms: Sequence[tuple], names: Sequence[str]) -> CayleyTable:
    # product a*b = "apply a, then b", matching the right action m -> m*n
    index = {p: i for i, p in enumerate(perms)}
    op = tuple(
        tuple(index[tuple(b[a[i]] for i in range(len(a)))] for b in perms) for a in perms
    )
    return CayleyTable(op, 0, tuple(names))


def symmetric3() -> CayleyTable:
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
    return _perm_group(perms, ["e", "r1", "r2", "s0", "s1", "s2"])


def dihedral8() -> CayleyTable:
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    perms = [(0, 1, 2, 3)]
    for _ in range(3):
        p = perms[-1]
        perms.append(tuple(r[p[i]] for i in range(4)))
    perms += [tuple(s[p[i]] for i in range(4)) for p in perms[:4]]
    return _perm_group(perms, ["e", "r1", "r2", "r3", "s0", "s1", "s2", "s3"])


def idempotent_monoid() -> CayleyTable:
    """{e, z} with z*z = z."""
    return CayleyTable(((0, 1), (1, 1)), 0, ("e", "z"))


def multiplicative01() -> CayleyTable:
    """{0, 1} under multiplication; identity 1."""
    return CayleyTable(((0, 0), (0, 1)), 1, ("0", "1"))


def builtin(name: str) -> CayleyTable:
    name = name.lower()
    if name.startswith("z") and name[1:].isdigit() and 1 <= int(name[1:]) <= 8:
        return cyclic(int(name[1:]))
    fixed = {"s3": symmetric3, "d4": dihedral8, "m2": idempotent_monoid, "mul01": multiplicative01}
    if name not in fixed:
        raise KeyError(f"unknown builtin {name!r}; choose z1..z8, s3, d4, m2, mul01")
    return fixed[name]()


# -- submonoids ---------------------------------------------------------------

def is_submonoid(table: CayleyTable, subset: Iterable[int]) -> bool:
    s = set(subset)
    return table.identity in s and all(table.mul(a, b) in s for a in s for b in s)


def is_subgroup(table: CayleyTable, subset: Iterable[int]) -> bool:
    s = set(subset)
    return is_submonoid(table, s) and all(table.inverse(a) in s for a in s)


def submonoids(table: CayleyTable) -> list[frozenset]:
    """All submonoids, by exhaustive subset search."""
    rest = [x for x in table.elements if x != table.identity]
    out = []
    for k in range(len(rest) + 1):
        for combo in combinations(rest, k):
            s = frozenset((table.identity, *combo))
            if is_submonoid(table, s):
                out.append(s)
    return out


def _require_submonoid(table, subset, group_needed=False):
    s = frozenset(subset)
    if not is_submonoid(table, s):
        raise NotASubmonoid(f"{sorted(s)} is not a submonoid")
    if group_needed and not is_subgroup(table, s):
        raise NotASubmonoid(f"{sorted(s)} is not a subgroup")
    return s


# -- realizations -------------------------------------------------------------

@dataclass
class Realization:
    table: CayleyTable
    subset: frozenset
    space: ColumnSpace
    family: dict  # element id -> PiecewiseMap
    kind: str

    def __iter__(self):
        return iter((self.space, self.family))


def _open_realization(table: CayleyTable, s: frozenset, kind: str) -> Realization:
    space = ColumnSpace({m: column_shape(m in s) for m in table.elements})
    family = {
        n: PiecewiseMap({
            m: transfer_pieces(m in s, table.mul(m, n) in s, table.mul(m, n)) for m in table.elements
        })
        for n in table.elements
    }
    return Realization(table, s, space, family, kind)


def build_group_realization(table: CayleyTable, subset: Iterable[int]) -> Realization:
    if validate(table) != "group":
        raise InvalidCayleyTable("inverses", ())
    return _open_realization(table, _require_submonoid(table, subset), "open")


def build_monoid_realization(table: CayleyTable, subset: Iterable[int]) -> Realization:
    validate(table)
    return _open_realization(table, _require_submonoid(table, subset), "monoid")


def build_compact_realization(table: CayleyTable, subgroup: Iterable[int]) -> Realization:
    """Columns [0, 1] over each element plus the isolated point INF."""
    if validate(table) != "group":
        raise InvalidCayleyTable("inverses", ())
    h = _require_submonoid(table, subgroup, group_needed=True)
    cols = {m: IntervalUnion.of(Interval.closed(0, 1)) for m in table.elements}
    cols[INF] = IntervalUnion.of(Interval.point(0))
    space = ColumnSpace(cols)
    family = {}
    for n in table.elements:
        pieces = {INF: [Piece(Interval.point(0), INF, 0)]}
        for m in table.elements:
            t = table.mul(m, n)
            flip = (m in h) != (t in h)
            pieces[m] = [
                Piece(Interval.point(0), t, 1 if flip else 0),
                Piece(Interval.open(0, 1), t, 0),
                Piece(Interval.point(1), t, -1 if flip else 0),
            ]
        family[n] = PiecewiseMap(pieces)
    return Realization(table, h, space, family, "compact")


def verify_composition_law(real: Realization) -> bool:
    """f_n ∘ f_m == f_{mn} for every ordered pair."""
    t, fam = real.table, real.family
    return all(compose(fam[n], fam[m]) == fam[t.mul(m, n)] for m in t.elements for n in t.elements)


def composition_failures(real: Realization) -> list[tuple[int, int]]:
    t, fam = real.table, real.family
    return [(m, n) for m in t.elements for n in t.elements
            if compose(fam[n], fam[m]) != fam[t.mul(m, n)]]


def spectrum_of_family(real: Realization) -> frozenset:
    return frozenset(n for n, f in real.family.items() if is_continuous(f, real.space).continuous)


def continuity_reports(real: Realization) -> dict:
    return {n: is_continuous(f, real.space) for n, f in real.family.items()}


def bijective_members(real: Realization) -> frozenset:
    return frozenset(n for n, f in real.family.items() if is_bijection(f, real.space))


def is_faithful(real: Realization) -> bool:
    """m -> f_m is injective."""
    maps = list(real.family.values())
    return all(a != b for i, a in enumerate(maps) for b in maps[i + 1:])


def family_table(real: Realization) -> CayleyTable:
    """Cayley table of the maps themselves; a*b means apply a, then b."""
    keys = list(real.family)
    maps = [real.family[k] for k in keys]
    op = []
    for a in maps:
        row = []
        for b in maps:
            ba = compose(b, a)
            row.append(next(i for i, m in enumerate(maps) if m == ba))
        op.append(tuple(row))
    ident = keys.index(real.table.identity)
    return CayleyTable(tuple(op), ident)


def find_pair_isomorphism(g: CayleyTable, s: Iterable[int], h: CayleyTable, t: Iterable[int]) -> dict | None:
    """A monoid isomorphism g -> h carrying s onto t, by backtracking."""
    s, t = frozenset(s), frozenset(t)
    if g.size != h.size or len(s) != len(t):
        return None
    others = [x for x in g.elements if x != g.identity]
    targets = [y for y in h.elements if y != h.identity]
    for image in permutations(targets):
        phi = {g.identity: h.identity, **dict(zip(others, image))}
        if any((x in s) != (phi[x] in t) for x in g.elements):
            continue
        if all(phi[g.mul(a, b)] == h.mul(phi[a], phi[b]) for a in g.elements for b in g.elements):
            return phi
    return None
