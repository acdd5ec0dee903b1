"""Finitely generated submonoids of the integers.

A submonoid of Z generated by finitely many integers is one of:

* ``{0}``,
* ``dZ`` when the generators have mixed signs (d = gcd),
* ``{0} ∪ {d*k : k >= 1, k not a gap}`` for a numerical semigroup scaled by d,
  or its mirror image in the negatives.

`canonicalize` computes that form once; `contains` is then constant time.
`closure_oracle` is an independent brute-force saturation used to check it.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

ZERO = "zero"
GROUP = "group"
POSITIVE = "positive"
NEGATIVE = "negative"
VARIANTS = (ZERO, GROUP, POSITIVE, NEGATIVE)


@dataclass(frozen=True)
class CanonicalSubmonoid:
    """Canonical form of a finitely generated submonoid of Z.

    For the one-signed variants, ``gaps`` lists the quotients k (by ``d``)
    missing from the semigroup and ``conductor`` is ``frobenius + 2``: the
    first k such that both k - 1 and every larger quotient are members.
    With that convention ⟨3, 5⟩ reads ``{0, 3, 5, 6, 8} ∪ {k >= 9}``.
    """

    variant: str
    d: int = 0
    gaps: tuple[int, ...] = ()
    conductor: int = 0

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant != ZERO and self.d < 1:
            raise ValueError("d must be a positive integer")
        object.__setattr__(self, "gaps", tuple(sorted(self.gaps)))
        object.__setattr__(self, "_gapset", frozenset(self.gaps))

    @property
    def sign(self) -> int:
        return {POSITIVE: 1, NEGATIVE: -1}.get(self.variant, 0)

    @property
    def frobenius(self) -> int | None:
        """Largest missing multiple of d (signed), None for zero/group."""
        if self.sign == 0:
            return None
        k = self.gaps[-1] if self.gaps else -1
        return self.sign * self.d * k

    def __contains__(self, n: int) -> bool:
        return contains(self, n)

    def to_json(self) -> dict:
        out: dict = {"variant": self.variant}
        if self.variant == ZERO:
            return out
        out["d"] = self.d
        if self.variant in (POSITIVE, NEGATIVE):
            out["gaps"] = list(self.gaps)
            out["conductor"] = self.conductor
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CanonicalSubmonoid":
        return cls(
            data["variant"],
            d=data.get("d", 0),
            gaps=tuple(data.get("gaps", ())),
            conductor=data.get("conductor", 0),
        )

    def __str__(self):
        if self.variant == ZERO:
            return "{0}"
        if self.variant == GROUP:
            return f"{self.d}Z"
        sgn = "" if self.sign > 0 else "-"
        gaps = ",".join(map(str, self.gaps))
        return f"{sgn}{self.d}*NS(gaps={{{gaps}}}, conductor={self.conductor})"


def _gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def semigroup_gaps(gens: Iterable[int]) -> tuple[int, ...]:
    """Gaps of the numerical semigroup spanned by coprime positive `gens`.

    Reachability is computed by dynamic programming up to Schur's bound
    (a_min - 1)(a_max - 1), beyond which every integer is representable.
    """
    gens = sorted(set(gens))
    if not gens or gens[0] < 1 or _gcd_all(gens) != 1:
        raise ValueError(f"need coprime positive generators, got {gens}")
    if gens[0] == 1:
        return ()
    limit = (gens[0] - 1) * (gens[-1] - 1)
    reach = [False] * (limit + 1)
    reach[0] = True
    for k in range(1, limit + 1):
        reach[k] = any(g <= k and reach[k - g] for g in gens)
    return tuple(k for k in range(1, limit + 1) if not reach[k])


def canonicalize(gens: Iterable[int]) -> CanonicalSubmonoid:
    nonzero = {g for g in gens if g != 0}
    if not nonzero:
        return CanonicalSubmonoid(ZERO)
    d = _gcd_all(abs(g) for g in nonzero)
    has_pos = any(g > 0 for g in nonzero)
    has_neg = any(g < 0 for g in nonzero)
    if has_pos and has_neg:
        return CanonicalSubmonoid(GROUP, d=d)
    gaps = semigroup_gaps(abs(g) // d for g in nonzero)
    conductor = (gaps[-1] if gaps else -1) + 2
    return CanonicalSubmonoid(POSITIVE if has_pos else NEGATIVE, d=d, gaps=gaps, conductor=conductor)


def contains(s: CanonicalSubmonoid, n: int) -> bool:
    if n == 0:
        return True
    if s.variant == ZERO:
        return False
    if n % s.d:
        return False
    if s.variant == GROUP:
        return True
    k = s.sign * n // s.d
    if k <= 0:
        return False
    return k >= s.conductor or k not in s._gapset


def window(s: CanonicalSubmonoid, bound: int) -> list[int]:
    """Members of `s` in [-bound, bound], ascending."""
    return [n for n in range(-bound, bound + 1) if contains(s, n)]


def is_negation_closed(s: CanonicalSubmonoid) -> bool:
    return s.variant in (ZERO, GROUP)


def closure_oracle(gens: Iterable[int], bound: int) -> list[int]:
    """Brute-force saturation of {0} under adding generators.

    Intermediate sums are kept in [-(bound + G), bound + G] with G the sum of
    |generators|. That range is enough: any sum of generators with total t
    can be reordered so every partial sum stays within max|g| of the segment
    between 0 and t (add a positive term while below t, a negative one
    otherwise), so members in [-bound, bound] are never missed.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    gens = sorted({g for g in gens if g != 0})
    reach = bound + sum(abs(g) for g in gens)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x + g
                if -reach <= y <= reach and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(x for x in seen if -bound <= x <= bound)
