"""Border partition of (-inf, d] and the decomposition of f * Gamma(s).

For ``d >= 1`` the 2^n cells are products of ``(-inf, 0]`` and ``[1, d_i]``.
Cell ``k`` is infinite on axis i exactly when bit i of k is set (bit 0 is
axis 1), so cell 0 is the box [1, d] and cell 2^n - 1 is (-inf, 0].

The summands of f * Gamma(s) on the cells are computed two ways: from the
divided-difference / cross-product-of-sections formulas, and directly as a
restriction of the truncated product.  The second route exists as an
independent check of the first.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from . import regions as rg
from .errors import DomainError
from .poly import Poly, Series, degree_vector, divided_difference
from .regions import ExponentVector, Region
from .sequences import NDSequence, section, shift_action


def _check_degree(f: Poly) -> ExponentVector:
    if f.is_zero():
        raise DomainError("f must be nonzero")
    d = degree_vector(f)
    if min(d) < 1:
        raise DomainError(f"need deg f >= 1 componentwise, got {d}")
    return d


def _check_pair(f: Poly, s: NDSequence):
    if f.n != s.n or f.ctx != s.ctx:
        raise DomainError("polynomial and sequence disagree on dimension or field")


def border_cell(k: int, d: Sequence[int]) -> Region:
    """The k-th member of the border partition of (-inf, d]."""
    d = rg.vec(d)
    n = len(d)
    if not 0 <= k < 2 ** n:
        raise DomainError(f"border index {k} out of range for n = {n}")
    if min(d) < 1:
        raise DomainError(f"border partition needs d >= 1, got {d}")
    lo = tuple(None if (k >> i) & 1 else 1 for i in range(n))
    hi = tuple(0 if (k >> i) & 1 else d[i] for i in range(n))
    return Region(lo, hi, "border-cell")


def infinite_axes(k: int, n: int) -> List[int]:
    return [i for i in range(n) if (k >> i) & 1]


def classify(a: Sequence[int], d: Sequence[int]) -> int:
    """Index of the border cell containing a (requires a <= d, d >= 1)."""
    a, d = rg.vec(a), rg.vec(d)
    if min(d) < 1:
        raise DomainError(f"border partition needs d >= 1, got {d}")
    if not rg.leq(a, d):
        raise DomainError(f"{a} is not <= {d}")
    return sum(1 << i for i, x in enumerate(a) if x <= 0)


def default_depth(f: Poly) -> ExponentVector:
    """Truncation depth used by the CLI: 2 * deg_i f + 2 on every axis."""
    return tuple(2 * x + 2 for x in _check_degree(f))


def truncated_product(f: Poly, s: NDSequence, region: Region) -> Series:
    """(f * Gamma(s)) restricted to a finite region, computed coefficient by
    coefficient: (f Gamma(s))_c = sum_{b in Supp f, b >= c} f_b s_{c-b}."""
    _check_pair(f, s)
    ctx = f.ctx
    items = f.items()
    out = {}
    for c in region.points():
        acc = 0
        for b, fb in items:
            if rg.leq(c, b):
                acc += fb * s.eval(rg.sub(c, b))
        out[c] = ctx.reduce(acc)
    return Series(ctx, f.n, out, region)


def beta0(f: Poly, s: NDSequence) -> Poly:
    """Border polynomial X * sum_{0 <= a <= deg f - 1} s_{-a} nu^{a+1} f."""
    _check_pair(f, s)
    d = _check_degree(f)
    n = f.n
    one = rg.ones(n)
    total = Poly.zero(f.ctx, n)
    for a in rg.box_points(rg.zeros(n), rg.sub(d, one)):
        v = s.eval(rg.neg(a))
        if v:
            total = total + divided_difference(f, rg.add(a, one)).scale(v)
    return total.shift(one)


def beta0_direct(f: Poly, s: NDSequence) -> Poly:
    """(f * Gamma(s)) | [1, deg f], from the truncated product."""
    _check_pair(f, s)
    d = _check_degree(f)
    return truncated_product(f, s, border_cell(0, d)).to_poly()


def _cell_region(k: int, d: ExponentVector, depth: Optional[Sequence[int]]) -> Region:
    n = len(d)
    depth = rg.zeros(n) if depth is None else rg.vec(depth)
    if len(depth) != n or min(depth) < 0:
        raise DomainError(f"depth must be a nonnegative {n}-vector, got {depth}")
    return border_cell(k, d).truncate_below(rg.neg(depth))


def beta_k(f: Poly, s: NDSequence, k: int, depth: Optional[Sequence[int]] = None) -> Series:
    """k-th border summand of f * Gamma(s), truncated to exponents >= -depth
    on the infinite axes of the cell.

    For 0 < k < 2^n - 1 this evaluates the sum of cross-products of sections
    X_{I'} sum_{a, a'} (nu^{a'+1} f^{(a)})(X_{I'}) * Gamma(X_I^a o s^{(-a')})
    where I is the set of infinite axes of cell k and I' its complement.
    """
    _check_pair(f, s)
    d = _check_degree(f)
    n = f.n
    region = _cell_region(k, d, depth)
    full = 2 ** n - 1
    if k == 0:
        return beta0(f, s).to_series(region)
    if k == full:
        fs = shift_action(f, s)
        return Series(f.ctx, n, {b: fs.eval(b) for b in region.points()}, region)

    ctx = f.ctx
    inf_axes = infinite_axes(k, n)
    fin_axes = [i for i in range(n) if i not in inf_axes]
    n_inf, n_fin = len(inf_axes), len(fin_axes)
    d_inf = tuple(d[i] for i in inf_axes)
    d_fin = tuple(d[i] for i in fin_axes)
    window_lo = tuple(region.lo[i] for i in inf_axes)
    one_fin = rg.ones(n_fin)

    acc = {}
    for a in rg.box_points(rg.zeros(n_inf), d_inf):
        f_a = f.section(inf_axes, a)
        if f_a.is_zero():
            continue
        x_a = Poly.monomial(ctx, n_inf, a)
        for a2 in rg.box_points(rg.zeros(n_fin), rg.sub(d_fin, one_fin)):
            nu = divided_difference(f_a, rg.add(a2, one_fin))
            if nu.is_zero():
                continue
            shifted = shift_action(x_a, section(s, fin_axes, rg.neg(a2)))
            for e in rg.box_points(window_lo, rg.zeros(n_inf)):
                val = shifted.eval(e)
                if not val:
                    continue
                for u, c in nu.terms.items():
                    full_exp = [0] * n
                    for i, x in zip(inf_axes, e):
                        full_exp[i] = x
                    for i, x in zip(fin_axes, u):
                        full_exp[i] = x + 1
                    key = tuple(full_exp)
                    acc[key] = acc.get(key, 0) + c * val
    return Series(ctx, n, acc, region)


def beta_k_direct(f: Poly, s: NDSequence, k: int, depth: Optional[Sequence[int]] = None) -> Series:
    """Oracle for :func:`beta_k`: restriction of the truncated product."""
    _check_pair(f, s)
    d = _check_degree(f)
    return truncated_product(f, s, _cell_region(k, d, depth))


def decompose(f: Poly, s: NDSequence, depth: Optional[Sequence[int]] = None) -> List[Series]:
    """All 2^n truncated border summands, indexed by k."""
    _check_degree(f)
    return [beta_k(f, s, k, depth) for k in range(2 ** f.n)]


def is_char_window(f: Poly, s: NDSequence, box: Region) -> bool:
    """Whether (f o s) vanishes on ``box``.

    A finite box can only refute membership in Ann(s); use
    :func:`ndlrs.annihilator.is_member` for an exact answer.
    """
    _check_pair(f, s)
    if not box.is_finite or (not box.is_empty and max(box.hi) > 0):
        raise DomainError(f"box {box} must be a finite box inside (-inf, 0]")
    if box.is_empty:
        return True
    if f.terms and not s.covers(rg.sub(box.lo, degree_vector(f))):
        raise DomainError("sequence window is too small for this box and polynomial")
    fs = shift_action(f, s)
    return all(not fs.eval(b) for b in box.points())
