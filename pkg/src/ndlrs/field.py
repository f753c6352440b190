"""Exact scalar arithmetic over a prime field F_p or the rationals Q.

Scalars are plain Python objects: ``int`` in ``[0, p)`` for F_p and
``fractions.Fraction`` for Q.  Polynomial code combines them with the usual
operators and calls :meth:`FieldCtx.reduce` to bring results back into
canonical form, so no wrapper type sits on the hot path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .errors import DomainError, ParseError

Scalar = Union[int, Fraction]


@lru_cache(maxsize=64)
def is_prime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


@dataclass(frozen=True)
class FieldCtx:
    """Field context; ``p=None`` means Q, otherwise F_p with p prime."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or self.p < 2 or not is_prime(self.p):
                raise DomainError(f"field characteristic must be prime, got {self.p!r}")

    @classmethod
    def rationals(cls) -> "FieldCtx":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldCtx":
        return cls(p)

    @classmethod
    def parse(cls, text: Union[str, int]) -> "FieldCtx":
        """Parse ``"Q"``, ``"QQ"`` or a prime such as ``"5"`` / ``"GF(5)"`` / ``"F5"``."""
        if isinstance(text, int) and not isinstance(text, bool):
            return cls(text)
        if not isinstance(text, str):
            raise ParseError(f"bad field {text!r}")
        t = text.strip().upper()
        if t in ("Q", "QQ"):
            return cls(None)
        for prefix in ("GF(", "F_", "F", "GF"):
            if t.startswith(prefix):
                t = t[len(prefix):].rstrip(")")
                break
        try:
            return cls(int(t))
        except ValueError:
            raise ParseError(f"bad field {text!r}") from None

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def zero(self) -> Scalar:
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.p is not None else Fraction(1)

    def reduce(self, x) -> Scalar:
        if self.p is not None:
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return x % self.p
        return x if isinstance(x, Fraction) else Fraction(x)

    def __call__(self, x) -> Scalar:
        """Coerce an int, Fraction or decimal/``num/den`` string."""
        if isinstance(x, str):
            return self.parse_scalar(x)
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise ParseError(f"cannot coerce {x!r} to a field element")
        if self.p is not None and isinstance(x, Fraction) and x.denominator % self.p == 0:
            raise DomainError(f"{x} has no image in F_{self.p}")
        return self.reduce(x)

    def inv(self, x: Scalar) -> Scalar:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is not None:
            return pow(x, -1, self.p)
        return 1 / Fraction(x)

    def div(self, x: Scalar, y: Scalar) -> Scalar:
        return self.reduce(x * self.inv(y))

    def parse_scalar(self, text: str) -> Scalar:
        try:
            value = Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad scalar {text!r}") from None
        return self(value)

    def format(self, x: Scalar) -> str:
        """Canonical string: residue in [0, p) or normalized ``num/den``."""
        return str(self.reduce(x))

    def signed(self, x: Scalar) -> Scalar:
        """Representative closest to zero, used only for human-readable text."""
        if self.p is not None and x > self.p // 2:
            return x - self.p
        return x

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"
