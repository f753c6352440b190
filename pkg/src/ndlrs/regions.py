"""Exponent vectors (points of Z^n) and product regions of Z^n.

An exponent vector is a plain ``tuple`` of ints.  Every region used by the
library (boxes ``[a, b]``, lower sets ``(-inf, a]``, border cells) is a
product of per-axis intervals, so :class:`Region` stores one optional lower
and one optional upper bound per axis; ``None`` means unbounded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from .errors import DomainError

ExponentVector = Tuple[int, ...]


def vec(a: Sequence[int]) -> ExponentVector:
    return tuple(int(x) for x in a)


def zeros(n: int) -> ExponentVector:
    return (0,) * n


def ones(n: int) -> ExponentVector:
    return (1,) * n


def add(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(x - y for x, y in zip(a, b))


def neg(a: ExponentVector) -> ExponentVector:
    return tuple(-x for x in a)


def leq(a: ExponentVector, b: ExponentVector) -> bool:
    """Componentwise partial order: a <= b iff a_i <= b_i for every i."""
    return all(x <= y for x, y in zip(a, b))


def box_points(lo: ExponentVector, hi: ExponentVector) -> Iterator[ExponentVector]:
    """Points of [lo, hi] in lexicographic ascending order (last axis fastest)."""
    return itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi)))


Bound = Optional[int]


@dataclass(frozen=True)
class Region:
    """Product of intervals ``prod_i [lo_i, hi_i]`` with optional bounds.

    ``kind`` is descriptive only ("box", "lower-set", "border-cell", ...);
    membership and intersection look at the bounds alone.
    """

    lo: Tuple[Bound, ...]
    hi: Tuple[Bound, ...]
    kind: str = "region"

    def __post_init__(self):
        if len(self.lo) != len(self.hi):
            raise DomainError("region bounds have different lengths")

    @classmethod
    def box(cls, a: Sequence[int], b: Sequence[int]) -> "Region":
        return cls(vec(a), vec(b), "box")

    @classmethod
    def lower_set(cls, a: Sequence[int]) -> "Region":
        return cls((None,) * len(a), vec(a), "lower-set")

    @classmethod
    def everything(cls, n: int) -> "Region":
        return cls((None,) * n, (None,) * n, "all")

    @property
    def n(self) -> int:
        return len(self.lo)

    @property
    def is_finite(self) -> bool:
        return None not in self.lo and None not in self.hi

    @property
    def is_empty(self) -> bool:
        return any(l is not None and h is not None and l > h for l, h in zip(self.lo, self.hi))

    def __contains__(self, a: ExponentVector) -> bool:
        return all(
            (l is None or l <= x) and (h is None or x <= h)
            for x, l, h in zip(a, self.lo, self.hi)
        )

    contains = __contains__

    def intersect(self, other: "Region") -> "Region":
        if self.n != other.n:
            raise DomainError("dimension mismatch in region intersection")
        lo = tuple(_max_bound(a, b) for a, b in zip(self.lo, other.lo))
        hi = tuple(_min_bound(a, b) for a, b in zip(self.hi, other.hi))
        return Region(lo, hi, kind_of(lo, hi))

    def truncate_below(self, floor: Sequence[int]) -> "Region":
        """Clip every lower bound at ``floor`` (makes infinite axes finite)."""
        return self.intersect(Region(vec(floor), (None,) * self.n))

    def points(self) -> Iterator[ExponentVector]:
        if not self.is_finite:
            raise DomainError("cannot enumerate an unbounded region")
        if self.is_empty:
            return iter(())
        return box_points(self.lo, self.hi)

    def size(self) -> int:
        if not self.is_finite:
            raise DomainError("unbounded region has no finite size")
        if self.is_empty:
            return 0
        out = 1
        for l, h in zip(self.lo, self.hi):
            out *= h - l + 1
        return out

    def __str__(self) -> str:
        def fmt(b, inf):
            return inf if b is None else str(b)

        parts = [f"[{fmt(l, '-inf')},{fmt(h, 'inf')}]" for l, h in zip(self.lo, self.hi)]
        return " x ".join(parts)


def _max_bound(a: Bound, b: Bound) -> Bound:
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def _min_bound(a: Bound, b: Bound) -> Bound:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def kind_of(lo, hi) -> str:
    if None not in lo and None not in hi:
        return "box"
    if all(x is None for x in lo) and None not in hi:
        return "lower-set"
    return "region"
