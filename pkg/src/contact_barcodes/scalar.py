"""Exact scalars for the persistence parameter line.

A Scalar is an exact rational extended with the two symbolic endpoints
-inf and +inf.  Comparisons follow the extended-real order; arithmetic is
defined on finite values only.  The canonical text form is "p/q" with
q > 0 and gcd(p, q) = 1, or "-inf" / "inf", and round-trips bit-exactly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

ScalarLike = Union["Scalar", Fraction, int, str]

_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?")

_POS = float("inf")
_NEG = float("-inf")


@total_ordering
@dataclass(frozen=True, slots=True)
class Scalar:
    value: Union[Fraction, float]

    def __post_init__(self):
        v = self.value
        if isinstance(v, float):
            if not math.isinf(v):
                raise ValueError(f"only +/-inf floats are allowed, got {v!r}")
        elif isinstance(v, int):
            object.__setattr__(self, "value", Fraction(v))
        elif not isinstance(v, Fraction):
            raise TypeError(f"scalar value must be Fraction or +/-inf, got {type(v)!r}")

    # -- classification ------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return isinstance(self.value, Fraction)

    @property
    def is_pos_inf(self) -> bool:
        return self.value == _POS

    @property
    def is_neg_inf(self) -> bool:
        return self.value == _NEG

    # -- order ----------------------------------------------------------

    def __lt__(self, other: "Scalar") -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.value < other.value

    # -- arithmetic (finite operands only) -------------------------------

    def _finite(self) -> Fraction:
        if not self.is_finite:
            raise ValueError(f"arithmetic on infinite scalar {self}")
        return self.value

    def __add__(self, other: "Scalar") -> "Scalar":
        return Scalar(self._finite() + other._finite())

    def __sub__(self, other: "Scalar") -> "Scalar":
        return Scalar(self._finite() - other._finite())

    def __neg__(self) -> "Scalar":
        if self.is_pos_inf:
            return NEG_INF
        if self.is_neg_inf:
            return POS_INF
        return Scalar(-self.value)

    def __abs__(self) -> "Scalar":
        return -self if self < ZERO else self

    def __mul__(self, k: Union[int, Fraction]) -> "Scalar":
        return Scalar(self._finite() * k)

    def __truediv__(self, k: Union[int, Fraction]) -> "Scalar":
        return Scalar(self._finite() / k)

    # -- text form --------------------------------------------------------

    def __str__(self) -> str:
        if self.is_pos_inf:
            return "inf"
        if self.is_neg_inf:
            return "-inf"
        return f"{self.value.numerator}/{self.value.denominator}"

    def __repr__(self) -> str:
        return f"Scalar({self})"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse "p/q", an integer literal, or "-inf"/"inf".

        Decimal notation is rejected deliberately: a rounded parameter can
        silently miss a spectrum point.
        """
        t = text.strip()
        if t in ("inf", "+inf"):
            return POS_INF
        if t == "-inf":
            return NEG_INF
        if not _RATIONAL_RE.fullmatch(t):
            raise ValueError(f"not a scalar: {text!r}")
        try:
            return cls(Fraction(t))
        except ZeroDivisionError as exc:
            raise ValueError(f"not a scalar: {text!r}") from exc


def as_scalar(x: ScalarLike) -> Scalar:
    """Coerce an int, Fraction, or "p/q" / "inf" string to a Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return Scalar.parse(x)
    return Scalar(Fraction(x))


def rational(p: int, q: int = 1) -> Scalar:
    return Scalar(Fraction(p, q))


def midpoint(a: Scalar, b: Scalar) -> Scalar:
    return (a + b) / 2


ZERO = Scalar(Fraction(0))
POS_INF = Scalar(_POS)
NEG_INF = Scalar(_NEG)
