"""Characteristic ideal Ann(s) of an eventually rectilinear sequence.

Given witness polynomials f_i(X_i) annihilating s, the monic generator
gamma_i of Ann(s) ∩ F[X_i] is found either from one border polynomial
(``gamma_axis_gcd``) or as an lcm of 1-D generators over finitely many
sections (``gamma_axis_lcm``).  Ann(s) is then the ideal quotient
((gamma_1, ..., gamma_n) : b) with b = beta_0(gamma, s)/X, whose elements of
bounded support form the kernel of a D x D linear map, D = prod deg gamma_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from . import regions as rg
from .border import beta0
from .errors import DomainError
from .field import FieldCtx
from .linalg import nullspace
from .poly import (
    Poly,
    _check_gammas,
    degree_vector,
    gcd_axis,
    normal_form,
    uni_divrem,
    uni_gcd,
    uni_lcm,
)
from .sequences import NDSequence, section, shift_action


def _spot_box_lo(s: NDSequence, degrees: Sequence[int], axis: int) -> Tuple[int, ...]:
    """Lower corner of the box on which f_axis o s is spot-checked.

    Reaches 2*deg + 1 below zero on every axis, clipped so that every
    evaluation stays inside a finite window.
    """
    lo = []
    for j, dj in enumerate(degrees):
        want = -(2 * dj + 1)
        if s.lo is not None:
            need = s.lo[j] + (degrees[axis] if j == axis else 0)
            want = max(want, need)
        if want > 0:
            raise DomainError(f"sequence window too small to check the axis-{axis + 1} witness")
        lo.append(want)
    return tuple(lo)


@dataclass(frozen=True)
class EvrWitness:
    """Monic axis polynomials f_1(X_1), ..., f_n(X_n) claimed to annihilate s.

    :meth:`check` is a finite spot-check, not a proof.
    """

    axis_polys: Tuple[Poly, ...]

    def __post_init__(self):
        polys = tuple(self.axis_polys)
        if not polys:
            raise DomainError("witness needs at least one polynomial")
        n = len(polys)
        normalized = []
        for i, f in enumerate(polys):
            if f.n != n or f.ctx != polys[0].ctx:
                raise DomainError("witness polynomials disagree on dimension or field")
            if f.is_zero() or f.is_constant() or not f.is_univariate_in(i):
                raise DomainError(f"witness polynomial {i + 1} must be a nonconstant polynomial in X{i + 1}")
            normalized.append(f.monic())
        object.__setattr__(self, "axis_polys", tuple(normalized))

    @property
    def n(self) -> int:
        return len(self.axis_polys)

    @property
    def ctx(self) -> FieldCtx:
        return self.axis_polys[0].ctx

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(f.degree[i] for i, f in enumerate(self.axis_polys))

    @property
    def product(self) -> Poly:
        out = self.axis_polys[0]
        for f in self.axis_polys[1:]:
            out = out * f
        return out

    def check(self, s: NDSequence) -> None:
        if s.n != self.n or s.ctx != self.ctx:
            raise DomainError("witness and sequence disagree on dimension or field")
        for i, f in enumerate(self.axis_polys):
            lo = _spot_box_lo(s, self.degrees, i)
            if not shift_action(f, s).is_zero_on(lo):
                raise DomainError(f"witness polynomial {i + 1} ({f}) does not annihilate s")


@dataclass(frozen=True)
class AnnBasisResult:
    gammas: Tuple[Poly, ...]
    b: Poly
    kernel: Tuple[Poly, ...]

    @property
    def basis(self) -> Tuple[Poly, ...]:
        return self.kernel + self.gammas

    @property
    def n(self) -> int:
        return len(self.gammas)

    def is_member(self, g: Poly) -> bool:
        return is_member(g, self)

    def cofinite_dim(self) -> int:
        return cofinite_dim(self)


def gamma_1d(f: Poly, t: NDSequence) -> Poly:
    """Monic generator of Ann(t) for a 1-D sequence t with f in Ann(t):
    f / gcd(f, beta_0(f, t)/X)."""
    if f.n != 1 or t.n != 1:
        raise DomainError("gamma_1d works on 1-D polynomials and sequences")
    if f.is_zero() or f.is_constant():
        raise DomainError("gamma_1d needs deg f >= 1")
    d = f.degree[0]
    lo = -(2 * d - 1)
    if t.lo is not None:
        lo = max(lo, t.lo[0] + d)
        if lo > 0:
            raise DomainError("sequence window too small to check f")
    if not shift_action(f, t).is_zero_on((lo,)):
        raise DomainError(f"{f} does not annihilate the sequence")
    h = beta0(f, t).div_monomial((1,))
    g = uni_gcd(f, h)
    q, r = uni_divrem(f, g)
    assert r.is_zero()
    return q.monic()


def _checked(w: EvrWitness, s: NDSequence, i: int) -> None:
    if not 0 <= i < w.n:
        raise DomainError(f"axis {i} out of range")
    w.check(s)


def gamma_axis_gcd(i: int, w: EvrWitness, s: NDSequence) -> Poly:
    """gamma_i = f_i / gcd(f_i, beta_0(f, s)/X_i), normalized monic."""
    _checked(w, s, i)
    f_i = w.axis_polys[i]
    unit = [0] * w.n
    unit[i] = 1
    h = beta0(w.product, s).div_monomial(unit)
    d_i = gcd_axis(f_i, h, i)
    q, r = uni_divrem(f_i, d_i, i)
    assert r.is_zero()
    return q.monic()


def gamma_axis_lcm(i: int, w: EvrWitness, s: NDSequence) -> Poly:
    """gamma_i as the lcm of the 1-D generators of the sections s^(a') over
    the finite box -Delta'_i <= a' <= 0 of the other axes."""
    if w.n < 2:
        raise DomainError("gamma_axis_lcm needs n >= 2; use gamma_1d")
    _checked(w, s, i)
    ctx = w.ctx
    others = [j for j in range(w.n) if j != i]
    delta = tuple(w.degrees[j] - 1 for j in others)
    f_1d = Poly(ctx, 1, {(e[i],): c for e, c in w.axis_polys[i].terms.items()})
    acc = Poly.const(ctx, 1, 1)
    for a2 in rg.box_points(rg.neg(delta), rg.zeros(len(others))):
        acc = uni_lcm(acc, gamma_1d(f_1d, section(s, others, a2)))
    return acc.embed(w.n, [i])


def quotient_kernel(gammas: Sequence[Poly], b: Poly) -> List[Poly]:
    """Basis of {f : Supp f <= deg gamma - 1, f*b in (gamma_1, ..., gamma_n)}.

    The map c -> normal_form((sum c_m X^m) * b) is assembled column by column
    over the D reduced monomials (canonical order) and its kernel is taken by
    Gaussian elimination.
    """
    n = b.n
    _check_gammas(gammas, n)
    ctx = b.ctx
    top = tuple(g.degree[i] - 1 for i, g in enumerate(gammas))
    monomials = list(rg.box_points(rg.zeros(n), top))
    index = {m: k for k, m in enumerate(monomials)}
    D = len(monomials)
    b_red = normal_form(b, gammas)
    matrix = [[ctx.zero] * D for _ in range(D)]
    for col, m in enumerate(monomials):
        for e, c in normal_form(b_red.shift(m), gammas).terms.items():
            matrix[index[e]][col] = c
    kernel = []
    for v in nullspace(matrix, D, ctx):
        kernel.append(Poly(ctx, n, {m: c for m, c in zip(monomials, v) if c}))
    return kernel


def ann_basis(s: NDSequence, w: EvrWitness, cross_check: bool = True) -> AnnBasisResult:
    """F-basis of Ann(s): kernel of the quotient map plus the axis generators.

    With ``cross_check`` (and n >= 2) every gamma_i is recomputed by the lcm
    route and a disagreement raises :class:`DomainError`.
    """
    w.check(s)
    gammas = [gamma_axis_gcd(i, w, s) for i in range(w.n)]
    if any(g.is_constant() for g in gammas):
        raise DomainError("s is the zero sequence; Ann(s) is the whole ring")
    if cross_check and w.n >= 2:
        for i, g in enumerate(gammas):
            other = gamma_axis_lcm(i, w, s)
            if other != g:
                raise DomainError(f"axis {i + 1}: gcd route gave {g}, lcm route gave {other}")
    gamma = gammas[0]
    for g in gammas[1:]:
        gamma = gamma * g
    b = beta0(gamma, s).div_monomial(rg.ones(w.n))
    kernel = quotient_kernel(gammas, b)
    return AnnBasisResult(tuple(gammas), b, tuple(kernel))


def is_member(g: Poly, r: AnnBasisResult) -> bool:
    """Exact test g in Ann(s): normal_form(g * b) == 0."""
    if g.n != r.n or g.ctx != r.b.ctx:
        raise DomainError("polynomial and result disagree on dimension or field")
    return normal_form(g * r.b, r.gammas).is_zero()


def cofinite_dim(r: AnnBasisResult) -> int:
    """D = prod deg gamma_i, the number of reduced monomials mod (gamma)."""
    out = 1
    for i, g in enumerate(r.gammas):
        out *= degree_vector(g)[i]
    return out
