"""Sparse multivariate polynomials and finitely supported Laurent truncations.

:class:`Poly` is an element of F[X_1, ..., X_n] stored as a dict from
exponent tuples to nonzero field scalars.  :class:`Series` holds a finite
piece of a Laurent series in X_1^-1, ..., X_n^-1 together with the region
it was cut from.  Both are treated as immutable values.

Axes are 0-based in the Python API; text output names them X1..Xn.
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from . import regions as rg
from .errors import DomainError
from .field import FieldCtx, Scalar
from .regions import ExponentVector, Region


class _NegInf:
    """Degree of the zero polynomial/series; compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self


NEG_INF = _NegInf()


def _check_compatible(a, b):
    if a.n != b.n:
        raise DomainError(f"dimension mismatch: {a.n} vs {b.n}")
    if a.ctx != b.ctx:
        raise DomainError(f"field mismatch: {a.ctx} vs {b.ctx}")


class Poly:
    """Polynomial in ``n`` variables over ``ctx`` with canonical sparse terms."""

    __slots__ = ("ctx", "n", "_terms", "_hash")

    def __init__(self, ctx: FieldCtx, n: int, terms: Optional[Mapping] = None):
        if n < 1:
            raise DomainError("polynomials need n >= 1 variables")
        clean: Dict[ExponentVector, Scalar] = {}
        for exp, c in (terms or {}).items():
            exp = rg.vec(exp)
            if len(exp) != n:
                raise DomainError(f"exponent {exp} does not have {n} components")
            if min(exp) < 0:
                raise DomainError(f"negative exponent {exp} in a polynomial")
            c = ctx.reduce(clean.get(exp, 0) + ctx(c))
            if c:
                clean[exp] = c
            else:
                clean.pop(exp, None)
        self.ctx = ctx
        self.n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ctx: FieldCtx, n: int, terms: Dict[ExponentVector, Scalar]) -> "Poly":
        # terms must already be reduced with no zero entries
        obj = cls.__new__(cls)
        obj.ctx, obj.n, obj._terms, obj._hash = ctx, n, terms, None
        return obj

    # constructors --------------------------------------------------------

    @classmethod
    def zero(cls, ctx: FieldCtx, n: int) -> "Poly":
        return cls._raw(ctx, n, {})

    @classmethod
    def const(cls, ctx: FieldCtx, n: int, c=1) -> "Poly":
        return cls(ctx, n, {rg.zeros(n): c})

    @classmethod
    def monomial(cls, ctx: FieldCtx, n: int, exp: Sequence[int], c=1) -> "Poly":
        return cls(ctx, n, {rg.vec(exp): c})

    @classmethod
    def var(cls, ctx: FieldCtx, n: int, axis: int) -> "Poly":
        exp = [0] * n
        exp[axis] = 1
        return cls.monomial(ctx, n, exp)

    @classmethod
    def from_univariate(cls, ctx: FieldCtx, n: int, axis: int, coeffs: Sequence) -> "Poly":
        """Build sum_k coeffs[k] * X_axis^k (coefficients low to high)."""
        terms = {}
        for k, c in enumerate(coeffs):
            exp = [0] * n
            exp[axis] = k
            terms[tuple(exp)] = c
        return cls(ctx, n, terms)

    # basic queries -------------------------------------------------------

    @property
    def terms(self) -> Mapping[ExponentVector, Scalar]:
        return MappingProxyType(self._terms)

    def items(self) -> List[Tuple[ExponentVector, Scalar]]:
        """Terms in canonical order: lexicographic ascending, axis 1 most significant."""
        return sorted(self._terms.items())

    def coeff(self, exp: Sequence[int]) -> Scalar:
        return self._terms.get(tuple(exp), self.ctx.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def degree(self):
        return degree_vector(self)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def axes_used(self) -> set:
        return {i for e in self._terms for i, x in enumerate(e) if x}

    def is_univariate_in(self, axis: int) -> bool:
        return self.axes_used() <= {axis}

    def univariate_coeffs(self, axis: int) -> List[Scalar]:
        if not self.is_univariate_in(axis):
            raise DomainError(f"polynomial is not univariate in axis {axis + 1}")
        if not self._terms:
            return []
        out = [self.ctx.zero] * (max(e[axis] for e in self._terms) + 1)
        for e, c in self._terms.items():
            out[e[axis]] = c
        return out

    def leading_coeff(self) -> Scalar:
        """Coefficient of the lexicographically largest exponent."""
        if not self._terms:
            return self.ctx.zero
        return self._terms[max(self._terms)]

    def monic(self) -> "Poly":
        if not self._terms:
            return self
        return self.scale(self.ctx.inv(self.leading_coeff()))

    # arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.ctx, self.n, other)
        _check_compatible(self, other)
        ctx = self.ctx
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = ctx.reduce(out.get(e, 0) + c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(ctx, self.n, out)

    __radd__ = __add__

    def __neg__(self):
        ctx = self.ctx
        return Poly._raw(ctx, self.n, {e: ctx.reduce(-c) for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.ctx, self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        ctx = self.ctx
        c = ctx(c)
        if not c:
            return Poly.zero(ctx, self.n)
        return Poly._raw(ctx, self.n, {e: ctx.reduce(v * c) for e, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        _check_compatible(self, other)
        ctx = self.ctx
        acc: Dict[ExponentVector, Scalar] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        out = {}
        for e, c in acc.items():
            c = ctx.reduce(c)
            if c:
                out[e] = c
        return Poly._raw(ctx, self.n, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative power of a polynomial")
        out = Poly.const(self.ctx, self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, exp: Sequence[int]) -> "Poly":
        """Multiply by the monomial X^exp (exp may be negative if the result stays polynomial)."""
        exp = tuple(exp)
        return Poly(self.ctx, self.n, {rg.add(e, exp): c for e, c in self._terms.items()})

    def div_monomial(self, exp: Sequence[int]) -> "Poly":
        exp = tuple(exp)
        out = {}
        for e, c in self._terms.items():
            q = rg.sub(e, exp)
            if min(q) < 0:
                raise DomainError(f"polynomial is not divisible by X^{exp}")
            out[q] = c
        return Poly._raw(self.ctx, self.n, out)

    # structural maps -------------------------------------------------------

    def section(self, fixed_axes: Sequence[int], values: Sequence[int]) -> "Poly":
        """Terms whose exponent on ``fixed_axes`` equals ``values``, as a
        polynomial in the remaining axes (kept in increasing axis order)."""
        fixed = dict(zip(fixed_axes, values))
        free = [i for i in range(self.n) if i not in fixed]
        if not free:
            raise DomainError("section must leave at least one free axis")
        out = {}
        for e, c in self._terms.items():
            if all(e[i] == v for i, v in fixed.items()):
                out[tuple(e[i] for i in free)] = c
        return Poly._raw(self.ctx, len(free), out)

    def embed(self, n: int, axes: Sequence[int]) -> "Poly":
        """Re-index into ``n`` variables, sending variable j to axis ``axes[j]``."""
        if len(axes) != self.n:
            raise DomainError("embed needs one target axis per variable")
        out = {}
        for e, c in self._terms.items():
            full = [0] * n
            for j, a in enumerate(axes):
                full[a] = e[j]
            out[tuple(full)] = c
        return Poly._raw(self.ctx, n, out)

    def to_series(self, region: Optional[Region] = None) -> "Series":
        if region is None:
            region = natural_region(self)
        return Series(self.ctx, self.n, self._terms, region)

    # comparison / display ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.n == other.n and self.ctx == other.ctx and self._terms == other._terms
        if isinstance(other, (int,)) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.ctx, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return render_terms(self.ctx, self.items())

    def __repr__(self):
        return f"Poly({self.ctx}, n={self.n}, {self})"


class Series:
    """Finite truncation of a Laurent series with a declared bounding region."""

    __slots__ = ("ctx", "n", "_terms", "region")

    def __init__(self, ctx: FieldCtx, n: int, terms: Mapping, region: Region):
        if region.n != n:
            raise DomainError("region dimension does not match series dimension")
        clean = {}
        for exp, c in terms.items():
            exp = rg.vec(exp)
            if len(exp) != n:
                raise DomainError(f"exponent {exp} does not have {n} components")
            c = ctx.reduce(c)
            if not c:
                continue
            if exp not in region:
                raise DomainError(f"exponent {exp} lies outside region {region}")
            clean[exp] = c
        self.ctx, self.n, self._terms, self.region = ctx, n, clean, region

    @classmethod
    def empty(cls, ctx: FieldCtx, region: Region) -> "Series":
        return cls(ctx, region.n, {}, region)

    @property
    def terms(self) -> Mapping[ExponentVector, Scalar]:
        return MappingProxyType(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exp) -> Scalar:
        return self._terms.get(tuple(exp), self.ctx.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def degree(self):
        return degree_vector(self)

    def __add__(self, other: "Series") -> "Series":
        _check_compatible(self, other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = self.ctx.reduce(out.get(e, 0) + c)
        return Series(self.ctx, self.n, out, hull(self.region, other.region))

    def __neg__(self):
        return Series(self.ctx, self.n, {e: -c for e, c in self._terms.items()}, self.region)

    def __sub__(self, other):
        return self + (-other)

    def to_poly(self) -> Poly:
        return Poly(self.ctx, self.n, self._terms)

    def same_terms(self, other) -> bool:
        """Coefficient-wise equality, ignoring declared regions."""
        return dict(self._terms) == dict(other.terms)

    def __eq__(self, other):
        if isinstance(other, Series):
            return (self.n == other.n and self.ctx == other.ctx
                    and self._terms == other._terms and self.region == other.region)
        return NotImplemented

    __hash__ = None

    def __str__(self):
        return render_terms(self.ctx, self.items())

    def __repr__(self):
        return f"Series({self.ctx}, n={self.n}, {self}, region={self.region})"


def hull(a: Region, b: Region) -> Region:
    """Smallest product region containing both."""
    lo = tuple(None if x is None or y is None else min(x, y) for x, y in zip(a.lo, b.lo))
    hi = tuple(None if x is None or y is None else max(x, y) for x, y in zip(a.hi, b.hi))
    return Region(lo, hi, rg.kind_of(lo, hi))


def natural_region(f: Poly) -> Region:
    """[0, deg f] for nonzero f; the nonnegative orthant for f = 0."""
    if f.is_zero():
        return Region(rg.zeros(f.n), (None,) * f.n, "region")
    return Region.box(rg.zeros(f.n), degree_vector(f))


# ---------------------------------------------------------------------------
# text rendering


def _monomial_text(exp: ExponentVector) -> str:
    parts = []
    for i, e in enumerate(exp):
        if e == 1:
            parts.append(f"X{i + 1}")
        elif e:
            parts.append(f"X{i + 1}^{e}")
    return "*".join(parts)


def render_terms(ctx: FieldCtx, items: Iterable[Tuple[ExponentVector, Scalar]]) -> str:
    """Plain-text rendering in the given (canonical) order, e.g. ``-X1 + X1*X2``."""
    out = []
    for exp, c in items:
        c = ctx.signed(c)
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        mono = _monomial_text(exp)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out) if out else "0"


# ---------------------------------------------------------------------------
# algebra_core operations


def poly_arith(f: Poly, g, which: str) -> Poly:
    """Ring operation by name: ``add``, ``mul`` or ``scale`` (g a scalar)."""
    if which == "add":
        return f + g
    if which == "mul":
        return f * g
    if which == "scale":
        return f.scale(g)
    raise DomainError(f"unknown operation {which!r}")


def degree_vector(G: Union[Poly, Series]):
    """Vector of partial degrees; ``NEG_INF`` for the zero element."""
    if not G.terms:
        return NEG_INF
    exps = list(G.terms)
    return tuple(max(e[i] for e in exps) for i in range(G.n))


def restrict(G: Union[Poly, Series], A: Region) -> Series:
    """G|A: the terms of G whose exponent lies in A."""
    if A.n != G.n:
        raise DomainError("dimension mismatch in restrict")
    base = G.region if isinstance(G, Series) else natural_region(G)
    region = A.intersect(base)
    return Series(G.ctx, G.n, {e: c for e, c in G.terms.items() if e in A}, region)


def reciprocal(f: Poly) -> Poly:
    """f* = X^{deg f} f(X^-1); the reciprocal of 0 is 0."""
    if f.is_zero():
        return f
    d = degree_vector(f)
    return Poly._raw(f.ctx, f.n, {rg.sub(d, e): c for e, c in f.terms.items()})


def divided_difference(f: Poly, a: Sequence[int]) -> Poly:
    """Newton divided difference: (f restricted to [a, deg f]) / X^a."""
    a = rg.vec(a)
    if len(a) != f.n:
        raise DomainError("divided difference index has wrong dimension")
    if min(a) < 0:
        raise DomainError(f"divided difference needs a >= 0, got {a}")
    out = {}
    for e, c in f.terms.items():
        if rg.leq(a, e):
            out[rg.sub(e, a)] = c
    return Poly._raw(f.ctx, f.n, out)


# univariate helpers on coefficient lists (low to high) ---------------------


def _trim(a: List[Scalar]) -> List[Scalar]:
    while a and not a[-1]:
        a.pop()
    return a


def _ul_divrem(a, b, ctx: FieldCtx):
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    inv_lead = ctx.inv(b[-1])
    db = len(b) - 1
    q = [ctx.zero] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        c = ctx.reduce(a[-1] * inv_lead)
        q[shift] = c
        for k, bk in enumerate(b):
            a[shift + k] = ctx.reduce(a[shift + k] - c * bk)
        _trim(a)
    return _trim(q), a


def _ul_monic(a, ctx):
    a = _trim(list(a))
    if not a:
        return a
    inv = ctx.inv(a[-1])
    return [ctx.reduce(c * inv) for c in a]


def _ul_gcd(a, b, ctx):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _ul_divrem(a, b, ctx)
        a, b = b, r
    return _ul_monic(a, ctx)


def _common_axis(*polys: Poly) -> int:
    used = set()
    for p in polys:
        used |= p.axes_used()
    if len(used) > 1:
        raise DomainError("polynomials are not univariate in a common axis")
    return used.pop() if used else 0


def uni_divrem(f: Poly, g: Poly, axis: Optional[int] = None) -> Tuple[Poly, Poly]:
    """Euclidean division f = q*g + r with deg r < deg g (univariate inputs)."""
    _check_compatible(f, g)
    if g.is_zero():
        raise DomainError("division by the zero polynomial")
    axis = _common_axis(f, g) if axis is None else axis
    q, r = _ul_divrem(f.univariate_coeffs(axis), g.univariate_coeffs(axis), f.ctx)
    return (Poly.from_univariate(f.ctx, f.n, axis, q),
            Poly.from_univariate(f.ctx, f.n, axis, r))


def uni_gcd(f: Poly, g: Poly, axis: Optional[int] = None) -> Poly:
    """Monic gcd of two univariate polynomials in the same axis."""
    _check_compatible(f, g)
    if f.is_zero() and g.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    axis = _common_axis(f, g) if axis is None else axis
    d = _ul_gcd(f.univariate_coeffs(axis), g.univariate_coeffs(axis), f.ctx)
    return Poly.from_univariate(f.ctx, f.n, axis, d)


def uni_lcm(f: Poly, g: Poly, axis: Optional[int] = None) -> Poly:
    """Monic lcm; lcm with zero is zero."""
    _check_compatible(f, g)
    if f.is_zero() or g.is_zero():
        return Poly.zero(f.ctx, f.n)
    axis = _common_axis(f, g) if axis is None else axis
    q, r = uni_divrem(f * g, uni_gcd(f, g, axis), axis)
    assert r.is_zero()
    return q.monic()


def axis_content(h: Poly, axis: int) -> Poly:
    """Monic gcd in F[X_axis] of the coefficients of h viewed as a
    polynomial in the other variables; 0 when h = 0."""
    groups: Dict[tuple, List[Scalar]] = {}
    for e, c in h.terms.items():
        rest = e[:axis] + e[axis + 1:]
        coeffs = groups.setdefault(rest, [])
        if len(coeffs) <= e[axis]:
            coeffs.extend([h.ctx.zero] * (e[axis] + 1 - len(coeffs)))
        coeffs[e[axis]] = c
    g: List[Scalar] = []
    for key in sorted(groups):
        g = _ul_gcd(g, groups[key], h.ctx)
        if len(g) == 1:
            break
    return Poly.from_univariate(h.ctx, h.n, axis, g)


def gcd_axis(f_i: Poly, h: Poly, axis: Optional[int] = None) -> Poly:
    """gcd(f_i, h) for f_i univariate in ``axis``; any common divisor of f_i
    lies in F[X_axis], so this is gcd(f_i, axis content of h)."""
    _check_compatible(f_i, h)
    if f_i.is_zero():
        raise DomainError("gcd_axis needs a nonzero f_i")
    if axis is None:
        axis = _common_axis(f_i)
    if not f_i.is_univariate_in(axis):
        raise DomainError(f"f_i is not univariate in axis {axis + 1}")
    return uni_gcd(f_i, axis_content(h, axis), axis)


def _check_gammas(gammas: Sequence[Poly], n: int) -> List[List[Scalar]]:
    if len(gammas) != n:
        raise DomainError(f"need one generator per axis ({n}), got {len(gammas)}")
    out = []
    for i, g in enumerate(gammas):
        if g.n != n or not g.is_univariate_in(i):
            raise DomainError(f"generator {i + 1} is not univariate in X{i + 1}")
        coeffs = g.univariate_coeffs(i)
        if len(coeffs) < 2:
            raise DomainError(f"generator {i + 1} must have degree >= 1")
        if coeffs[-1] != 1:
            raise DomainError(f"generator {i + 1} is not monic")
        out.append(coeffs)
    return out


class _PowerTable:
    """Remainders X^e mod gamma for a monic univariate gamma, grown on demand."""

    def __init__(self, coeffs: List[Scalar], ctx: FieldCtx):
        self.ctx = ctx
        self.tail = [ctx.reduce(-c) for c in coeffs[:-1]]  # X^d = -(lower terms)
        self.d = len(coeffs) - 1
        self.rows: List[List[Scalar]] = []
        for e in range(self.d):
            row = [ctx.zero] * self.d
            row[e] = ctx.one
            self.rows.append(row)

    def __getitem__(self, e: int) -> List[Scalar]:
        ctx = self.ctx
        while len(self.rows) <= e:
            prev = self.rows[-1]
            top = prev[-1]
            row = [ctx.zero] + prev[:-1]
            if top:
                row = [ctx.reduce(r + top * t) for r, t in zip(row, self.tail)]
            self.rows.append(row)
        return self.rows[e]


def normal_form(g: Poly, gammas: Sequence[Poly]) -> Poly:
    """Unique representative of g modulo (gamma_1, ..., gamma_n) with every
    axis-i degree below deg gamma_i.  {gamma_i} is a Groebner basis for any
    term order, so reducing axis by axis is enough."""
    coeff_lists = _check_gammas(gammas, g.n)
    for gm in gammas:
        _check_compatible(g, gm)
    ctx = g.ctx
    tables = [_PowerTable(c, ctx) for c in coeff_lists]
    current: Dict[ExponentVector, Scalar] = dict(g.terms)
    for axis, table in enumerate(tables):
        if all(e[axis] < table.d for e in current):
            continue
        nxt: Dict[ExponentVector, Scalar] = {}
        for e, c in current.items():
            if e[axis] < table.d:
                nxt[e] = nxt.get(e, 0) + c
                continue
            for k, r in enumerate(table[e[axis]]):
                if r:
                    e2 = e[:axis] + (k,) + e[axis + 1:]
                    nxt[e2] = nxt.get(e2, 0) + c * r
        current = {}
        for e, c in nxt.items():
            c = ctx.reduce(c)
            if c:
                current[e] = c
    return Poly._raw(ctx, g.n, current)
