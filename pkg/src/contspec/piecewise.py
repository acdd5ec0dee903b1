"""Column spaces, piecewise translation maps and their continuity.

A `ColumnSpace` is a disjoint union of clopen columns, each a finite union of
rational intervals sitting over one column index (an integer, a monoid
element id, or ``INF``). A `PiecewiseMap` sends each column into the space by
finitely many translations ``(m, x) -> (target, x + offset)``. Because the
columns are clopen, continuity is decided column by column, and inside a
column only at piece endpoints.

The integer-line realization of a submonoid S lives here too: column n is
``[0, 2)`` when n is in S and ``[0, 1) ∪ [2, 3)`` otherwise; the shift map f
moves column n to column n + 1, splitting or gluing the upper part when
membership changes. Its continuity spectrum on a window is `spectrum`.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Iterator, Mapping

from gmpy2 import mpq

from .intervals import Interval, IntervalUnion, Rational, frac_json, frac_from_json, merge_adjacent
from .submonoid import CanonicalSubmonoid, contains

logger = logging.getLogger(__name__)

INF = "inf"
Column = Hashable

STRIP = IntervalUnion.of(Interval(0, 2))
SPLIT = IntervalUnion.of(Interval(0, 1), Interval(2, 3))

PROBE_DEPTH = 20
_PROBE_STEPS = [mpq(1, 2 ** k) for k in range(PROBE_DEPTH + 1)]


class WindowExhausted(ValueError):
    """The finite window is too small for the requested computation."""

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


class NotInvertible(ValueError):
    pass


def column_order(c):
    if isinstance(c, int):
        return (0, c, "")
    return (1, 0, str(c))


def column_json(c):
    return c if isinstance(c, int) else str(c)


@dataclass
class ColumnSpace:
    columns: dict
    window: int | None = None

    def __post_init__(self):
        self.columns = {c: self.columns[c] for c in sorted(self.columns, key=column_order)}
        for c, u in self.columns.items():
            if not isinstance(u, IntervalUnion):
                raise TypeError(f"column {c!r} is not an IntervalUnion")

    def __getitem__(self, c) -> IntervalUnion:
        return self.columns[c]

    def __contains__(self, point) -> bool:
        c, x = point
        return c in self.columns and x in self.columns[c]

    def __iter__(self):
        return iter(self.columns)

    def to_json(self) -> dict:
        return {
            "window": self.window,
            "columns": [{"index": column_json(c), "parts": u.to_json()} for c, u in self.columns.items()],
        }


@dataclass(frozen=True)
class Piece:
    source: Interval
    target: Column
    offset: Rational = 0

    def __post_init__(self):
        object.__setattr__(self, "offset", mpq(self.offset))

    @property
    def image(self) -> Interval:
        return self.source.shift(self.offset)

    def to_json(self) -> dict:
        return {"source": self.source.to_json(), "target": column_json(self.target), "offset": frac_json(self.offset)}


def _merge_pieces(pieces: Iterable[Piece]) -> tuple[Piece, ...]:
    out: list[Piece] = []
    for p in sorted(pieces, key=lambda p: p.source.sort_key()):
        if out:
            q = out[-1]
            if q.target == p.target and q.offset == p.offset and q.source.touches_after(p.source):
                src = Interval(q.source.lo, p.source.hi, q.source.lo_closed, p.source.hi_closed)
                out[-1] = Piece(src, p.target, p.offset)
                continue
        out.append(p)
    return tuple(out)


class PiecewiseMap:
    """Self-map of a column space given by translation pieces per column.

    Equality compares normalized piece lists, so two maps agreeing as
    functions on the same domain compare equal.
    """

    def __init__(self, columns: Mapping[Column, Iterable[Piece]]):
        self.columns: dict = {}
        for c in sorted(columns, key=column_order):
            pieces = tuple(sorted(columns[c], key=lambda p: p.source.sort_key()))
            if not pieces:
                raise ValueError(f"column {c!r} has no pieces")
            for i, a in enumerate(pieces):
                for b in pieces[i + 1:]:
                    if a.source.intersect(b.source) is not None:
                        raise ValueError(f"overlapping pieces in column {c!r}: {a.source} and {b.source}")
            self.columns[c] = pieces

    @property
    def domain(self) -> list:
        return list(self.columns)

    def source_union(self, c) -> list[Interval]:
        return merge_adjacent(p.source for p in self.columns[c])

    def piece_at(self, c, x) -> Piece:
        for p in self.columns[c]:
            if x in p.source:
                return p
        raise KeyError(f"({c!r}, {x}) not in domain")

    def __call__(self, c, x) -> tuple:
        x = mpq(x)
        p = self.piece_at(c, x)
        return (p.target, x + p.offset)

    def targets(self) -> set:
        return {p.target for ps in self.columns.values() for p in ps}

    def normalized(self) -> dict:
        return {c: _merge_pieces(ps) for c, ps in self.columns.items()}

    def restrict(self, cols: Iterable) -> "PiecewiseMap":
        cols = set(cols)
        return PiecewiseMap({c: ps for c, ps in self.columns.items() if c in cols})

    def __eq__(self, other):
        if not isinstance(other, PiecewiseMap):
            return NotImplemented
        return self.normalized() == other.normalized()

    def __hash__(self):
        return hash(tuple((c, ps) for c, ps in self.normalized().items()))

    def __repr__(self):
        return f"PiecewiseMap({len(self.columns)} columns)"

    def to_json(self) -> dict:
        return {
            "columns": [
                {"index": column_json(c), "pieces": [p.to_json() for p in ps]}
                for c, ps in self.normalized().items()
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> "PiecewiseMap":
        cols = {}
        for entry in data["columns"]:
            cols[entry["index"]] = [
                Piece(Interval.from_json(p["source"]), p["target"], frac_from_json(p["offset"]))
                for p in entry["pieces"]
            ]
        return cls(cols)


def identity_map(space: ColumnSpace | PiecewiseMap) -> PiecewiseMap:
    """Identity on a space, or on the domain of a map."""
    if isinstance(space, PiecewiseMap):
        return PiecewiseMap({c: [Piece(iv, c) for iv in space.source_union(c)] for c in space.columns})
    return PiecewiseMap({c: [Piece(iv, c) for iv in u] for c, u in space.columns.items()})


# -- the integer-line realization ------------------------------------------------

def column_shape(member: bool) -> IntervalUnion:
    return STRIP if member else SPLIT


def transfer_pieces(src_member: bool, tgt_member: bool, target) -> list[Piece]:
    """Pieces carrying one column onto `target`, keyed on membership.

    in -> in and out -> out translate rigidly; in -> out lifts [1, 2) up to
    [2, 3); out -> in drops [2, 3) down to [1, 2).
    """
    if src_member and tgt_member:
        return [Piece(Interval(0, 2), target, 0)]
    if not src_member and not tgt_member:
        return [Piece(Interval(0, 1), target, 0), Piece(Interval(2, 3), target, 0)]
    if src_member:
        return [Piece(Interval(0, 1), target, 0), Piece(Interval(1, 2), target, 1)]
    return [Piece(Interval(0, 1), target, 0), Piece(Interval(2, 3), target, -1)]


def line_case(s: CanonicalSubmonoid, n: int) -> int:
    """Which of the four transfer cases applies to column n -> n + 1."""
    a, b = contains(s, n), contains(s, n + 1)
    if a and b:
        return 1
    if not a and not b:
        return 2
    return 3 if a else 4


def build_line_space(s: CanonicalSubmonoid, w: int) -> ColumnSpace:
    if w < 1:
        raise ValueError("window must be >= 1")
    return ColumnSpace({n: column_shape(contains(s, n)) for n in range(-w, w + 1)}, window=w)


def build_line_map(s: CanonicalSubmonoid, w: int) -> PiecewiseMap:
    """The shift n -> n + 1 on columns -w .. w-1 of `build_line_space(s, w)`."""
    if w < 1:
        raise ValueError("window must be >= 1")
    return PiecewiseMap(
        {n: transfer_pieces(contains(s, n), contains(s, n + 1), n + 1) for n in range(-w, w)}
    )


# -- algebra of maps ----------------------------------------------------------

def compose(g: PiecewiseMap, h: PiecewiseMap) -> PiecewiseMap:
    """g ∘ h, on the columns of h whose images land inside g's domain."""
    out = {}
    for c, pieces in h.columns.items():
        if any(p.target not in g.columns for p in pieces):
            continue
        new = []
        for p in pieces:
            image = p.image
            covered = []
            for q in g.columns[p.target]:
                part = image.intersect(q.source)
                if part is None:
                    continue
                covered.append(part)
                new.append(Piece(part.shift(-p.offset), q.target, p.offset + q.offset))
            if merge_adjacent(covered) != [image]:
                raise ValueError(f"image {image} of column {c!r} is not inside the domain of the outer map")
        out[c] = new
    if not out:
        raise WindowExhausted("composite has an empty domain; enlarge the window")
    return PiecewiseMap(out)


def invert(f: PiecewiseMap) -> PiecewiseMap:
    out: dict = {}
    for c, pieces in f.columns.items():
        for p in pieces:
            out.setdefault(p.target, []).append(Piece(p.image, c, -p.offset))
    for t, pieces in out.items():
        for i, a in enumerate(pieces):
            for b in pieces[i + 1:]:
                if a.source.intersect(b.source) is not None:
                    raise NotInvertible(f"not invertible: images overlap in column {t!r}")
    return PiecewiseMap(out)


def power(f: PiecewiseMap, n: int) -> PiecewiseMap:
    """n-th iterate; negative n iterates the inverse, 0 gives the identity."""
    if n == 0:
        return identity_map(f)
    step = f if n > 0 else invert(f)
    acc = step
    for _ in range(abs(n) - 1):
        acc = compose(step, acc)
    return acc


def iterate(f: PiecewiseMap, count: int) -> Iterator[tuple[int, PiecewiseMap]]:
    """Yield (k, f^k) for k = 1..count, one composition per step."""
    acc = f
    for k in range(1, count + 1):
        if k > 1:
            acc = compose(f, acc)
        yield k, acc


# -- structure checks ---------------------------------------------------------

def images_of_column(f: PiecewiseMap, c) -> dict:
    out: dict = {}
    for p in f.columns[c]:
        out.setdefault(p.target, []).append(p.image)
    return out


def maps_column_onto(f: PiecewiseMap, space: ColumnSpace, c, target) -> bool:
    imgs = images_of_column(f, c)
    return set(imgs) == {target} and space[target].same_set(imgs[target])


def is_well_defined(f: PiecewiseMap, space: ColumnSpace) -> bool:
    """Sources tile each domain column and every image lands in the space."""
    for c, pieces in f.columns.items():
        if c not in space.columns or not space[c].same_set(p.source for p in pieces):
            return False
        for p in pieces:
            if p.target not in space.columns:
                return False
            img = p.image
            if not any(img.intersect(part) == img for part in space[p.target]):
                return False
    return True


def is_bijection(f: PiecewiseMap, space: ColumnSpace) -> bool:
    """Injective, and onto every column it has to cover.

    For a finite index set that is every column. For a windowed space only
    the interior is checked: domain columns between the least and greatest
    target column hit.
    """
    if not is_well_defined(f, space):
        return False
    hits: dict = {}
    for pieces in f.columns.values():
        for p in pieces:
            hits.setdefault(p.target, []).append(p.image)
    for t, imgs in hits.items():
        for i, a in enumerate(imgs):
            for b in imgs[i + 1:]:
                if a.intersect(b) is not None:
                    return False
        if not space[t].same_set(imgs):
            return False
    if space.window is None:
        must = set(space.columns)
        return must <= set(f.columns) and must <= set(hits)
    ints = [t for t in hits if isinstance(t, int)]
    lo, hi = min(ints), max(ints)
    return all(c in hits for c in f.columns if isinstance(c, int) and lo <= c <= hi)


def is_semi_open_union(space: ColumnSpace) -> bool:
    """Each column is one or two disjoint half-open intervals [a, b)."""
    return all(len(u) in (1, 2) and all(p.is_half_open for p in u) for u in space.columns.values())


# -- continuity ---------------------------------------------------------------

@dataclass
class ContinuityReport:
    continuous: bool
    witnesses: list = field(default_factory=list)

    def __bool__(self):
        return self.continuous

    def to_json(self) -> dict:
        return {
            "continuous": self.continuous,
            "witnesses": [[column_json(c), frac_json(x)] for c, x in self.witnesses],
        }


def boundary_points(f: PiecewiseMap, space: ColumnSpace, c) -> list:
    """Piece endpoints of column c that are points of the space."""
    pts = set()
    for p in f.columns[c]:
        pts.add(p.source.lo)
        pts.add(p.source.hi)
    return sorted(x for x in pts if x in space[c])


def continuity_at(f: PiecewiseMap, space: ColumnSpace, c, x) -> bool:
    """One-sided limits of the pieces at (c, x) against the value there."""
    x = mpq(x)
    value = f(c, x)
    column = space[c]
    for approachable, side in ((column.left_approachable, Interval.left_side_at),
                               (column.right_approachable, Interval.right_side_at)):
        if not approachable(x):
            continue
        piece = next(p for p in f.columns[c] if side(p.source, x))
        if (piece.target, x + piece.offset) != value:
            return False
    return True


def sequential_limit_check(f: PiecewiseMap, space: ColumnSpace, c, x, depth: int = PROBE_DEPTH) -> bool:
    """Decide continuity at (c, x) by probing x ± 2^-k, k = 1..depth.

    A side counts as approachable when the deepest probe lies in the space;
    the trailing run of in-space probes must then map into the value's
    column within 2^-k of the value (translations are 1-Lipschitz).
    """
    x = mpq(x)
    value = f(c, x)
    column = space[c]
    for sign in (-1, 1):
        probes = [(k, x + sign * _step(k)) for k in range(1, depth + 1)]
        tail = []
        for k, y in reversed(probes):
            if y not in column:
                break
            tail.append((k, y))
        if not tail or tail[0][0] != depth:
            continue
        for k, y in tail:
            t, fy = f(c, y)
            if t != value[0] or abs(fy - value[1]) > _step(k):
                return False
    return True


def _step(k: int):
    return _PROBE_STEPS[k] if k <= PROBE_DEPTH else mpq(1, 2 ** k)


def is_continuous(f: PiecewiseMap, space: ColumnSpace) -> ContinuityReport:
    witnesses = []
    for c in f.columns:
        for x in boundary_points(f, space, c):
            if not continuity_at(f, space, c, x):
                witnesses.append((c, x))
    return ContinuityReport(not witnesses, witnesses)


def oracle_disagreements(f: PiecewiseMap, space: ColumnSpace) -> list:
    """Boundary points where the symbolic and probing decisions differ."""
    bad = []
    for c in f.columns:
        for x in boundary_points(f, space, c):
            if continuity_at(f, space, c, x) != sequential_limit_check(f, space, c, x):
                bad.append((c, x))
    return bad


# -- continuity spectrum on a window -------------------------------------------

def line_powers(s: CanonicalSubmonoid, n: int, w: int, visit: Callable | None = None) -> dict:
    """Continuity reports for f^k, |k| <= n, on the window [-w, w]."""
    if n < 1:
        raise ValueError("N must be >= 1")
    if w < 2 * n:
        raise WindowExhausted(f"window W={w} too small for N={n}; need W >= {2 * n}", required=2 * n)
    space = build_line_space(s, w)
    f = build_line_map(s, w)
    reports = {}
    ident = identity_map(space)
    reports[0] = is_continuous(ident, space)
    if visit:
        visit(0, ident, space)
    for base, sign in ((f, 1), (invert(f), -1)):
        for k, g in iterate(base, n):
            reports[sign * k] = is_continuous(g, space)
            if visit:
                visit(sign * k, g, space)
    logger.debug("spectrum of %s on N=%d W=%d computed", s, n, w)
    return dict(sorted(reports.items()))


def spectrum(s: CanonicalSubmonoid, n: int, w: int) -> list[int]:
    """Integers k in [-n, n] for which f^k is continuous."""
    return [k for k, r in line_powers(s, n, w).items() if r.continuous]
