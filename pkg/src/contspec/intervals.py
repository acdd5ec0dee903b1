"""Exact rational intervals and finite disjoint unions of them.

Endpoints are gmpy2 ``mpq`` rationals; they compare and hash like
``fractions.Fraction`` and mix freely with ints and Fractions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from gmpy2 import mpq

Rational = Union[int, Fraction, type(mpq())]


def frac_json(x) -> list[int]:
    x = mpq(x)
    return [int(x.numerator), int(x.denominator)]


def frac_from_json(pair):
    if isinstance(pair, (list, tuple)):
        return mpq(pair[0], pair[1])
    return mpq(pair)


@dataclass(frozen=True, order=False)
class Interval:
    lo: Rational
    hi: Rational
    lo_closed: bool = True
    hi_closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", mpq(self.lo))
        object.__setattr__(self, "hi", mpq(self.hi))
        if self.lo > self.hi or (self.lo == self.hi and not (self.lo_closed and self.hi_closed)):
            raise ValueError(f"empty interval {self!r}")

    @classmethod
    def point(cls, x: Rational) -> "Interval":
        return cls(x, x, True, True)

    @classmethod
    def closed(cls, lo: Rational, hi: Rational) -> "Interval":
        return cls(lo, hi, True, True)

    @classmethod
    def open(cls, lo: Rational, hi: Rational) -> "Interval":
        return cls(lo, hi, False, False)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def is_half_open(self) -> bool:
        return self.lo < self.hi and self.lo_closed and not self.hi_closed

    def __contains__(self, x: Rational) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def left_side_at(self, x: Rational) -> bool:
        """True iff (x - eps, x) lies inside for all small eps."""
        return self.lo < x <= self.hi

    def right_side_at(self, x: Rational) -> bool:
        return self.lo <= x < self.hi

    def shift(self, offset: Rational) -> "Interval":
        return Interval(self.lo + offset, self.hi + offset, self.lo_closed, self.hi_closed)

    def intersect(self, other: "Interval") -> "Interval | None":
        if self.lo > other.lo:
            lo, lo_c = self.lo, self.lo_closed
        elif self.lo < other.lo:
            lo, lo_c = other.lo, other.lo_closed
        else:
            lo, lo_c = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hi_c = self.hi, self.hi_closed
        elif self.hi > other.hi:
            hi, hi_c = other.hi, other.hi_closed
        else:
            hi, hi_c = self.hi, self.hi_closed and other.hi_closed
        if lo < hi or (lo == hi and lo_c and hi_c):
            return Interval(lo, hi, lo_c, hi_c)
        return None

    def touches_after(self, other: "Interval") -> bool:
        """`other` starts exactly where self ends, with no gap and no overlap."""
        return self.hi == other.lo and self.hi_closed != other.lo_closed

    def sort_key(self):
        return (self.lo, not self.lo_closed, self.hi, self.hi_closed)

    def to_json(self) -> dict:
        return {
            "lo": frac_json(self.lo),
            "hi": frac_json(self.hi),
            "lo_closed": self.lo_closed,
            "hi_closed": self.hi_closed,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Interval":
        return cls(frac_from_json(data["lo"]), frac_from_json(data["hi"]), data["lo_closed"], data["hi_closed"])

    def __str__(self):
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        if self.is_point:
            return f"{{{self.lo}}}"
        return f"{left}{self.lo},{self.hi}{right}"


def merge_adjacent(parts: Iterable[Interval]) -> list[Interval]:
    """Sort disjoint intervals and fuse neighbours that touch."""
    out: list[Interval] = []
    for iv in sorted(parts, key=Interval.sort_key):
        if out and out[-1].touches_after(iv):
            prev = out.pop()
            iv = Interval(prev.lo, iv.hi, prev.lo_closed, iv.hi_closed)
        out.append(iv)
    return out


@dataclass(frozen=True)
class IntervalUnion:
    """Finite union of pairwise disjoint intervals, sorted by left end."""

    parts: tuple[Interval, ...]

    def __post_init__(self):
        parts = tuple(sorted(self.parts, key=Interval.sort_key))
        if not parts:
            raise ValueError("empty interval union")
        for a, b in zip(parts, parts[1:]):
            if a.intersect(b) is not None:
                raise ValueError(f"overlapping parts {a} and {b}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: Interval) -> "IntervalUnion":
        return cls(tuple(parts))

    def __contains__(self, x: Rational) -> bool:
        return any(x in p for p in self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def left_approachable(self, x: Rational) -> bool:
        return any(p.left_side_at(x) for p in self.parts)

    def right_approachable(self, x: Rational) -> bool:
        return any(p.right_side_at(x) for p in self.parts)

    def normalized(self) -> tuple[Interval, ...]:
        return tuple(merge_adjacent(self.parts))

    def same_set(self, parts: Iterable[Interval]) -> bool:
        return tuple(merge_adjacent(parts)) == self.normalized()

    def to_json(self) -> list[dict]:
        return [p.to_json() for p in self.parts]

    def __str__(self):
        return " ∪ ".join(str(p) for p in self.parts)
