"""JSON and plain-text encodings for polynomials, series, sequences and results.

Polynomial::

    {"terms": [{"exp": [e1, ..., en], "coef": "c"}, ...]}

with terms in canonical order and ``coef`` a decimal residue in [0, p) for
F_p or a normalized ``num/den`` (plain integer when den = 1) for Q.

Sequence (an optional ``"field"`` key selects F_p or Q, default Q)::

    {"kind": "evr", "axis_polys": [...], "init_box": {"extent": [...], "values": [...]}}
    {"kind": "window", "lo": [...], "values": [...]}
    {"kind": "rational", "g": {...}, "axis_polys": [...]}

Value lists are in lexicographic ascending order of offsets -a (last axis
fastest), so ``values[0]`` is always s_0.  Wherever a polynomial is
expected, a plain-text string such as ``"X1^2 - X1"`` is accepted as well.
"""

from __future__ import annotations

import json
import re
from typing import Any, Dict, List, Optional, Tuple

from .annihilator import AnnBasisResult, EvrWitness
from .errors import DomainError, ParseError
from .field import FieldCtx
from .poly import Poly, Series
from .regions import Region, kind_of
from .sequences import EvrSequence, NDSequence, WindowSequence, evr_from_rational, evr_seq_new


def dumps(payload: Any) -> str:
    """Canonical compact JSON (key order as constructed)."""
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=True)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


# --- fields -----------------------------------------------------------------


def field_from_json(obj) -> FieldCtx:
    if obj is None:
        return FieldCtx.rationals()
    try:
        return FieldCtx.parse(obj)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def field_to_json(ctx: FieldCtx) -> str:
    return "Q" if ctx.p is None else str(ctx.p)


# --- polynomials ------------------------------------------------------------


def _terms_json(ctx: FieldCtx, items) -> List[Dict[str, Any]]:
    return [{"exp": list(e), "coef": ctx.format(c)} for e, c in items]


def poly_to_json(f: Poly) -> Dict[str, Any]:
    return {"terms": _terms_json(f.ctx, f.items())}


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_VAR_RE = re.compile(r"^[Xx]_?(\d*)(?:\^(\d+))?$")
_NUM_RE = re.compile(r"^\d+(?:/\d+)?$")


def parse_poly_text(text: str, ctx: FieldCtx, n: int) -> Poly:
    """Parse e.g. ``"X1^2*X2 - 3*X1 + 1/2"``; ``X`` alone means X1."""
    src = text.replace(" ", "").replace("**", "^")
    if not src:
        raise ParseError("empty polynomial text")
    if src == "0":
        return Poly.zero(ctx, n)
    pos = 0
    terms: Dict[Tuple[int, ...], Any] = {}
    for m in _TERM_RE.finditer(src):
        if m.start() != pos:
            raise ParseError(f"cannot parse polynomial {text!r}")
        pos = m.end()
        sign, body = m.groups()
        coef = ctx.one
        exp = [0] * n
        for factor in body.split("*"):
            if _NUM_RE.match(factor):
                coef = ctx.reduce(coef * ctx.parse_scalar(factor))
                continue
            v = _VAR_RE.match(factor)
            if not v:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            axis = int(v.group(1) or 1) - 1
            if not 0 <= axis < n:
                raise ParseError(f"variable {factor!r} out of range for n = {n}")
            exp[axis] += int(v.group(2) or 1)
        if sign == "-":
            coef = ctx.reduce(-coef)
        key = tuple(exp)
        terms[key] = ctx.reduce(terms.get(key, 0) + coef)
    if pos != len(src):
        raise ParseError(f"cannot parse polynomial {text!r}")
    return Poly(ctx, n, terms)


def poly_from_json(obj, ctx: FieldCtx, n: Optional[int] = None) -> Poly:
    """Polynomial from its JSON object or from plain text (``n`` required for text)."""
    if isinstance(obj, str):
        if n is None:
            raise ParseError("dimension unknown for a text polynomial")
        return parse_poly_text(obj, ctx, n)
    if not isinstance(obj, dict) or not isinstance(obj.get("terms"), list):
        raise ParseError(f"polynomial must be an object with a 'terms' list, got {obj!r}")
    terms = {}
    for t in obj["terms"]:
        try:
            exp = tuple(int(x) for x in t["exp"])
            coef = t["coef"]
        except (KeyError, TypeError, ValueError):
            raise ParseError(f"bad term {t!r}") from None
        if n is None:
            n = len(exp)
        if len(exp) != n:
            raise ParseError(f"term {t!r} does not have {n} exponents")
        if min(exp) < 0:
            raise ParseError(f"negative exponent in {t!r}")
        value = ctx.parse_scalar(coef) if isinstance(coef, str) else _coerce(ctx, coef)
        terms[exp] = ctx.reduce(terms.get(exp, 0) + value)
    if n is None:
        raise ParseError("cannot infer the dimension of an empty polynomial")
    return Poly(ctx, n, terms)


def _coerce(ctx: FieldCtx, value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"coefficient must be a string or integer, got {value!r}")
    return ctx(value)


# --- series / regions -------------------------------------------------------


def region_to_json(region: Region) -> Dict[str, Any]:
    return {"lo": list(region.lo), "hi": list(region.hi)}


def region_from_json(obj) -> Region:
    try:
        lo = tuple(None if x is None else int(x) for x in obj["lo"])
        hi = tuple(None if x is None else int(x) for x in obj["hi"])
    except (KeyError, TypeError, ValueError):
        raise ParseError(f"bad region {obj!r}") from None
    return Region(lo, hi, kind_of(lo, hi))


def series_to_json(G: Series) -> Dict[str, Any]:
    return {"region": region_to_json(G.region), "terms": _terms_json(G.ctx, G.items())}


def series_from_json(obj, ctx: FieldCtx) -> Series:
    if not isinstance(obj, dict) or "region" not in obj or "terms" not in obj:
        raise ParseError("series must have 'region' and 'terms'")
    region = region_from_json(obj["region"])
    terms = {}
    for t in obj["terms"]:
        try:
            terms[tuple(int(x) for x in t["exp"])] = ctx.parse_scalar(str(t["coef"]))
        except (KeyError, TypeError, ValueError):
            raise ParseError(f"bad term {t!r}") from None
    return Series(ctx, region.n, terms, region)


# --- sequences --------------------------------------------------------------


def _scalars(values, ctx: FieldCtx) -> list:
    if not isinstance(values, list):
        raise ParseError("'values' must be a list")
    return [ctx.parse_scalar(v) if isinstance(v, str) else _coerce(ctx, v) for v in values]


def _axis_polys(obj, ctx: FieldCtx) -> List[Poly]:
    if not isinstance(obj, list) or not obj:
        raise ParseError("'axis_polys' must be a nonempty list")
    n = len(obj)
    return [poly_from_json(p, ctx, n) for p in obj]


def sequence_from_json(obj, ctx: Optional[FieldCtx] = None) -> Tuple[NDSequence, Optional[EvrWitness]]:
    """Sequence handle plus the witness implied by its axis polynomials (if any)."""
    if not isinstance(obj, dict):
        raise ParseError("sequence description must be a JSON object")
    if ctx is None:
        ctx = field_from_json(obj.get("field"))
    kind = obj.get("kind")
    if kind == "evr":
        polys = _axis_polys(obj.get("axis_polys"), ctx)
        box = obj.get("init_box")
        if not isinstance(box, dict) or "values" not in box:
            raise ParseError("evr sequence needs 'init_box' with 'values'")
        values = _scalars(box["values"], ctx)
        seq = evr_seq_new(polys, values)
        if "extent" in box and [int(x) for x in box["extent"]] != list(seq.degrees):
            raise ParseError(f"init_box extent {box['extent']} does not match degrees {list(seq.degrees)}")
        return seq, EvrWitness(tuple(polys))
    if kind == "window":
        try:
            lo = [int(x) for x in obj["lo"]]
        except (KeyError, TypeError, ValueError):
            raise ParseError("window sequence needs an integer 'lo' list") from None
        return WindowSequence(ctx, lo, _scalars(obj.get("values"), ctx)), None
    if kind == "rational":
        polys = _axis_polys(obj.get("axis_polys"), ctx)
        g = poly_from_json(obj.get("g"), ctx, len(polys))
        return evr_from_rational(g, polys), EvrWitness(tuple(polys))
    raise ParseError(f"unknown sequence kind {kind!r}")


def sequence_to_json(seq: NDSequence) -> Dict[str, Any]:
    """Encode window and evr handles (rational ones are stored as evr)."""
    field = field_to_json(seq.ctx)
    if isinstance(seq, EvrSequence):
        return {
            "kind": "evr",
            "field": field,
            "axis_polys": [poly_to_json(f) for f in seq.axis_polys],
            "init_box": {"extent": list(seq.degrees),
                         "values": [seq.ctx.format(v) for v in seq.init_values]},
        }
    if isinstance(seq, WindowSequence):
        return {"kind": "window", "field": field, "lo": list(seq.lo),
                "values": [seq.ctx.format(v) for v in seq.values()]}
    raise ParseError(f"cannot encode a {type(seq).__name__}")


def witness_from_json(obj, ctx: FieldCtx, n: int) -> EvrWitness:
    polys = obj.get("axis_polys") if isinstance(obj, dict) else obj
    if not isinstance(polys, list) or len(polys) != n:
        raise ParseError(f"witness must list {n} axis polynomials")
    return EvrWitness(tuple(poly_from_json(p, ctx, n) for p in polys))


# --- results ----------------------------------------------------------------


def ann_basis_to_json(r: AnnBasisResult) -> Dict[str, Any]:
    return {
        "gammas": [poly_to_json(g) for g in r.gammas],
        "b": poly_to_json(r.b),
        "kernel": [poly_to_json(k) for k in r.kernel],
        "basis": [poly_to_json(g) for g in r.basis],
        "cofinite_dim": r.cofinite_dim(),
    }


def ann_basis_from_json(obj, ctx: FieldCtx) -> AnnBasisResult:
    try:
        n = len(obj["gammas"])
        gammas = tuple(poly_from_json(g, ctx, n) for g in obj["gammas"])
        b = poly_from_json(obj["b"], ctx, n)
        kernel = tuple(poly_from_json(k, ctx, n) for k in obj["kernel"])
    except (KeyError, TypeError):
        raise ParseError("malformed ann-basis payload") from None
    r = AnnBasisResult(gammas, b, kernel)
    if "cofinite_dim" in obj and obj["cofinite_dim"] != r.cofinite_dim():
        raise ParseError("cofinite_dim does not match the gammas")
    return r


def decompose_lines(parts: List[Series], d) -> List[Dict[str, Any]]:
    """One object per border index k; ``cell`` is the untruncated cell of (-inf, d]."""
    from .border import border_cell

    return [
        {"k": k, "cell": region_to_json(border_cell(k, d)), "terms": _terms_json(G.ctx, G.items())}
        for k, G in enumerate(parts)
    ]
