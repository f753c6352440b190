"""n-D sequences indexed by -N^n and the right-shift action of polynomials.

A sequence handle evaluates ``s_a`` for ``a <= 0``.  Handles come in a few
backings:

* :class:`WindowSequence` - a finite table on a box ``[lo, 0]``;
  evaluation outside raises :class:`~ndlrs.errors.WindowError`.
* :class:`EvrSequence` - determined by monic axis polynomials
  ``f_1(X_1), ..., f_n(X_n)`` and the initial box ``prod [-(deg f_i - 1), 0]``.
* :class:`ShiftedSequence` / :class:`SectionSequence` - lazy views
  (``f o s`` and sections) over another handle.

Value tables are addressed by *offsets* ``c = -a >= 0``; flat value lists use
lexicographic ascending offset order with the last axis varying fastest.
"""

from __future__ import annotations

from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from . import regions as rg
from .errors import DomainError, WindowError
from .field import FieldCtx, Scalar
from .poly import Poly, Series, _PowerTable, degree_vector
from .regions import ExponentVector, Region


class NDSequence:
    """Base class for sequence handles.

    Subclasses implement ``_eval`` for an already validated index.
    ``lo`` is the componentwise lower limit of the evaluable domain, or
    ``None`` when the handle is total on -N^n.
    """

    ctx: FieldCtx
    n: int
    lo: Optional[ExponentVector] = None

    def eval(self, a: Sequence[int]) -> Scalar:
        a = rg.vec(a)
        if len(a) != self.n:
            raise DomainError(f"index {a} does not have {self.n} components")
        if max(a) > 0:
            raise DomainError(f"index {a} is not <= 0")
        if self.lo is not None and not rg.leq(self.lo, a):
            raise WindowError(f"index {a} lies outside the window [{self.lo}, 0]")
        return self._eval(a)

    __getitem__ = eval

    def _eval(self, a: ExponentVector) -> Scalar:
        raise NotImplementedError

    def covers(self, lo: Sequence[int]) -> bool:
        return self.lo is None or rg.leq(self.lo, lo)

    def window(self, lo: Sequence[int], hi: Optional[Sequence[int]] = None) -> Dict[ExponentVector, Scalar]:
        """Values on the box [lo, hi] (hi defaults to 0)."""
        hi = rg.zeros(self.n) if hi is None else rg.vec(hi)
        return {a: self.eval(a) for a in rg.box_points(rg.vec(lo), hi)}

    def is_zero_on(self, lo: Sequence[int]) -> bool:
        return all(not v for v in self.window(lo).values())


def _offset_table(values, extent: Sequence[int], ctx: FieldCtx) -> Dict[ExponentVector, Scalar]:
    """Normalize a value table over offsets [0, extent - 1].

    ``values`` is either a flat list in canonical offset order or a mapping
    keyed by sequence indices ``a <= 0`` (ints allowed when n = 1).
    """
    extent = rg.vec(extent)
    n = len(extent)
    offsets = list(rg.box_points(rg.zeros(n), tuple(e - 1 for e in extent)))
    if isinstance(values, Mapping):
        table = {}
        for key, v in values.items():
            key = (key,) if isinstance(key, int) else rg.vec(key)
            table[rg.neg(key)] = ctx(v)
        if set(table) != set(offsets):
            raise DomainError(f"value table does not cover exactly the box of extent {extent}")
        return table
    values = list(values)
    if len(values) != len(offsets):
        raise DomainError(f"expected {len(offsets)} values for extent {extent}, got {len(values)}")
    return {c: ctx(v) for c, v in zip(offsets, values)}


class WindowSequence(NDSequence):
    """Finite table on the box [lo, 0]."""

    def __init__(self, ctx: FieldCtx, lo: Sequence[int], values):
        self.ctx = ctx
        self.lo = rg.vec(lo)
        self.n = len(self.lo)
        if max(self.lo) > 0:
            raise DomainError("window lower corner must be <= 0")
        extent = tuple(1 - x for x in self.lo)
        self._table = _offset_table(values, extent, ctx)

    @classmethod
    def from_function(cls, ctx: FieldCtx, lo: Sequence[int], fn: Callable[[ExponentVector], object]):
        lo = rg.vec(lo)
        return cls(ctx, lo, {a: fn(a) for a in rg.box_points(lo, rg.zeros(len(lo)))})

    def _eval(self, a):
        return self._table[rg.neg(a)]

    def values(self) -> List[Scalar]:
        return [self._table[c] for c in sorted(self._table)]


class EvrSequence(NDSequence):
    """Sequence annihilated by monic ``f_i in F[X_i]`` for every axis i.

    ``s_{-m}`` is obtained by reducing ``X^m`` modulo (f_1, ..., f_n) one axis
    at a time, axis 1 first, and pairing the result with the initial box.
    Partial reductions are memoized by index prefix.
    """

    def __init__(self, axis_polys: Sequence[Poly], init: Dict[ExponentVector, Scalar]):
        self.axis_polys = tuple(axis_polys)
        self.ctx = axis_polys[0].ctx
        self.n = len(axis_polys)
        self.degrees = tuple(len(f.univariate_coeffs(i)) - 1 for i, f in enumerate(axis_polys))
        self._tables = [_PowerTable(f.univariate_coeffs(i), self.ctx)
                        for i, f in enumerate(axis_polys)]
        self._init = dict(init)
        self._partials: Dict[tuple, Dict[tuple, Scalar]] = {(): self._init}

    @property
    def init_values(self) -> List[Scalar]:
        return [self._init[c] for c in sorted(self._init)]

    def _partial(self, prefix: tuple) -> Dict[tuple, Scalar]:
        got = self._partials.get(prefix)
        if got is not None:
            return got
        parent = self._partial(prefix[:-1])
        row = self._tables[len(prefix) - 1][prefix[-1]]
        acc: Dict[tuple, Scalar] = {}
        for key, v in parent.items():
            r = row[key[0]]
            if r and v:
                rest = key[1:]
                acc[rest] = acc.get(rest, 0) + r * v
        reduce = self.ctx.reduce
        out = {k: reduce(v) for k, v in acc.items()}
        self._partials[prefix] = out
        return out

    def _eval(self, a):
        return self._partial(rg.neg(a)).get((), self.ctx.zero)


class ShiftedSequence(NDSequence):
    """The sequence f o s with (f o s)_b = sum_a f_a s_{b-a}."""

    def __init__(self, f: Poly, s: NDSequence):
        if f.n != s.n or f.ctx != s.ctx:
            raise DomainError("polynomial and sequence disagree on dimension or field")
        self.f, self.s = f, s
        self.ctx, self.n = s.ctx, s.n
        self._items = f.items()
        if s.lo is not None:
            self.lo = rg.add(s.lo, degree_vector(f)) if f.terms else s.lo
        self._memo: Dict[ExponentVector, Scalar] = {}

    def _eval(self, b):
        got = self._memo.get(b)
        if got is None:
            s_eval = self.s._eval
            acc = 0
            for a, c in self._items:
                acc += c * s_eval(tuple(x - y for x, y in zip(b, a)))
            got = self._memo[b] = self.ctx.reduce(acc)
        return got


class SectionSequence(NDSequence):
    """Lower-dimensional sequence obtained by fixing some coordinates of s."""

    def __init__(self, s: NDSequence, fixed_axes: Sequence[int], values: Sequence[int]):
        fixed_axes = tuple(fixed_axes)
        values = rg.vec(values)
        if not fixed_axes or len(fixed_axes) >= s.n:
            raise DomainError("a section must fix a nonempty proper subset of the axes")
        if len(set(fixed_axes)) != len(fixed_axes) or not all(0 <= i < s.n for i in fixed_axes):
            raise DomainError(f"bad axis set {fixed_axes}")
        if len(values) != len(fixed_axes):
            raise DomainError("one fixed value per fixed axis is required")
        if values and max(values) > 0:
            raise DomainError(f"section index {values} is not <= 0")
        if s.lo is not None and any(v < s.lo[i] for i, v in zip(fixed_axes, values)):
            raise WindowError(f"section index {values} lies outside the window")
        self.s = s
        self.ctx = s.ctx
        self.fixed = dict(zip(fixed_axes, values))
        self.free = tuple(i for i in range(s.n) if i not in self.fixed)
        self.n = len(self.free)
        if s.lo is not None:
            self.lo = tuple(s.lo[i] for i in self.free)

    def _eval(self, a):
        full = [0] * self.s.n
        for i, v in self.fixed.items():
            full[i] = v
        for i, x in zip(self.free, a):
            full[i] = x
        return self.s._eval(tuple(full))


# ---------------------------------------------------------------------------
# operations


def _normalize_axis_polys(axis_polys: Sequence[Poly]) -> List[Poly]:
    if not axis_polys:
        raise DomainError("need at least one axis polynomial")
    n = len(axis_polys)
    ctx = axis_polys[0].ctx
    out = []
    for i, f in enumerate(axis_polys):
        if f.n != n or f.ctx != ctx:
            raise DomainError("axis polynomials disagree on dimension or field")
        if f.is_zero() or f.is_constant():
            raise DomainError(f"axis polynomial {i + 1} must have degree >= 1")
        if not f.is_univariate_in(i):
            raise DomainError(f"axis polynomial {i + 1} is not univariate in X{i + 1}")
        out.append(f.monic())
    return out


def evr_seq_new(axis_polys: Sequence[Poly], init_box) -> EvrSequence:
    """EVR sequence from axis polynomials and the initial value box.

    ``init_box`` covers exactly ``prod [-(deg f_i - 1), 0]``: a flat list in
    canonical offset order or a mapping keyed by indices.
    """
    polys = _normalize_axis_polys(axis_polys)
    extent = tuple(len(f.univariate_coeffs(i)) - 1 for i, f in enumerate(polys))
    return EvrSequence(polys, _offset_table(init_box, extent, polys[0].ctx))


def evr_from_rational(g: Poly, axis_polys: Sequence[Poly]) -> EvrSequence:
    """The unique sequence with generating function X*g/f, f = prod f_i.

    Equivalently beta_0(f, s) = X*g.  The map from initial values to the
    coefficients of beta_0(f, s)/X is unitriangular (f is monic), so the
    initial box is recovered by forward substitution in lex order.
    """
    polys = _normalize_axis_polys(axis_polys)
    ctx, n = polys[0].ctx, len(polys)
    if g.n != n or g.ctx != ctx:
        raise DomainError("g disagrees with the axis polynomials on dimension or field")
    f = polys[0]
    for p in polys[1:]:
        f = f * p
    df = degree_vector(f)
    top = tuple(d - 1 for d in df)
    if g.terms and not rg.leq(degree_vector(g), top):
        raise DomainError(f"deg g = {degree_vector(g)} exceeds deg f - 1 = {top}")
    init: Dict[ExponentVector, Scalar] = {}
    for a in rg.box_points(rg.zeros(n), top):
        acc = g.coeff(rg.sub(top, a))
        for a2 in rg.box_points(rg.zeros(n), a):
            if a2 == a:
                continue
            fc = f.coeff(tuple(d - x + y for d, x, y in zip(df, a, a2)))
            if fc:
                acc -= init[a2] * fc
        init[a] = ctx.reduce(acc)
    return EvrSequence(polys, init)


def shift_action(f: Poly, s: NDSequence) -> ShiftedSequence:
    """Right-shift action: (f o s)_b = sum_{0 <= a <= deg f} f_a s_{b-a}."""
    return ShiftedSequence(f, s)


def gamma_window(s: NDSequence, box: Region) -> Series:
    """Generating function of s truncated to a finite box inside (-inf, 0]."""
    if box.n != s.n:
        raise DomainError("box dimension does not match the sequence")
    if not box.is_finite or (not box.is_empty and max(box.hi) > 0):
        raise DomainError(f"box {box} leaves -N^n")
    return Series(s.ctx, s.n, {a: s.eval(a) for a in box.points()}, box)


def section(s: NDSequence, fixed_axes: Sequence[int], values: Sequence[int]) -> SectionSequence:
    """s^(a'): fix the coordinates on ``fixed_axes`` at ``values``."""
    return SectionSequence(s, fixed_axes, values)


def _table_hi(table: Mapping) -> Tuple[ExponentVector, Dict[ExponentVector, object]]:
    clean = {((k,) if isinstance(k, int) else rg.vec(k)): v for k, v in table.items()}
    if not clean:
        raise DomainError("empty table")
    n = len(next(iter(clean)))
    hi = tuple(max(k[i] for k in clean) for i in range(n))
    if min(min(k) for k in clean) < 0:
        raise DomainError("N^n-indexed table has a negative index")
    if set(clean) != set(rg.box_points(rg.zeros(n), hi)):
        raise DomainError("table must cover a full box [0, hi]")
    return hi, clean


def minus_map(table: Mapping, ctx: FieldCtx) -> WindowSequence:
    """Window sequence (s^-)_a = s_{-a} from a table indexed by [0, hi]."""
    hi, clean = _table_hi(table)
    return WindowSequence(ctx, rg.neg(hi), {rg.neg(k): v for k, v in clean.items()})


def left_shift(f: Poly, table: Mapping, ctx: FieldCtx) -> Dict[ExponentVector, Scalar]:
    """Left-shift action on an N^n-indexed table, (f o s)_b = sum_a f_a s_{b+a},
    on the box where it is defined, [0, hi - deg f]."""
    hi, clean = _table_hi(table)
    d = degree_vector(f)
    top = rg.sub(hi, d)
    out = {}
    for b in rg.box_points(rg.zeros(len(hi)), top):
        out[b] = ctx.reduce(sum(c * ctx(clean[rg.add(b, a)]) for a, c in f.terms.items()))
    return out
