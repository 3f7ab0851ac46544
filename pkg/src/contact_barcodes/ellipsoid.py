"""Closed-form barcodes for ellipsoid Reeb flows.

For axes a_1 <= ... <= a_n the action spectrum is the set of multiples
k * a_j, and every connected component of its complement carries exactly
one bar, all of parity n mod 2.  The Conley-Zehnder index away from the
spectrum is n + 2 * sum_j floor(s / a_j).

A horizon T truncates the picture.  The component touching T keeps its
right endpoint when that endpoint is itself a spectrum value inside the
window, and is emitted with death +inf otherwise; either way it carries
the `truncated` flag, since nothing above T is certified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, NamedTuple, Tuple

from .errors import OnSpectrumError
from .persistence import Bar, Barcode, Spectrum
from .scalar import POS_INF, Scalar, ScalarLike, ZERO, as_scalar


@dataclass(frozen=True, slots=True)
class EllipsoidParams:
    """Sorted positive axes a_1 <= ... <= a_n and a finite horizon T > 0."""

    axes: Tuple[Scalar, ...]
    horizon: Scalar

    def __post_init__(self):
        if not self.axes:
            raise ValueError("need at least one axis")
        prev = None
        for a in self.axes:
            if not (a.is_finite and ZERO < a):
                raise ValueError("axes must be positive rationals")
            if prev is not None and a < prev:
                raise ValueError("axes must be sorted ascending")
            prev = a
        if not (self.horizon.is_finite and ZERO < self.horizon):
            raise ValueError("horizon must be a positive rational")

    @classmethod
    def of(cls, axes, horizon: ScalarLike) -> "EllipsoidParams":
        return cls(tuple(as_scalar(a) for a in axes), as_scalar(horizon))

    @property
    def n(self) -> int:
        return len(self.axes)


def ellipsoid_spectrum(p: EllipsoidParams) -> Spectrum:
    """All multiples k * a_j inside [0, T], deduplicated and sorted."""
    T = p.horizon
    values = set()
    for a in p.axes:
        k = 0
        while True:
            point = a * k
            if T < point:
                break
            values.add(point)
            k += 1
    return Spectrum(tuple(sorted(values)), ZERO, T)


class CzIndex(NamedTuple):
    index: int
    parity: int


def cz_index(s: Scalar, p: EllipsoidParams) -> CzIndex:
    """Conley-Zehnder index n + 2 * sum floor(s / a_j) of the lone generator.

    Defined for finite s > 0 off the spectrum (no s / a_j may be an
    integer); the parity always equals n mod 2.
    """
    if not s.is_finite:
        raise ValueError("parameter must be finite")
    if not (ZERO < s):
        raise ValueError("parameter must be positive")
    total = 0
    for a in p.axes:
        ratio = s.value / a.value
        if ratio.denominator == 1:
            raise OnSpectrumError(f"{s} is a multiple of axis {a}")
        total += math.floor(ratio)
    index = p.n + 2 * total
    return CzIndex(index, index % 2)


def _components(p: EllipsoidParams) -> Tuple[List[Tuple[Scalar, Scalar]], bool]:
    """Components of (0, T) minus the spectrum, plus whether T is spectral."""
    points = ellipsoid_spectrum(p).points
    T = p.horizon
    comps = list(zip(points, points[1:]))
    t_on_spectrum = bool(points) and points[-1] == T
    if not t_on_spectrum:
        start = points[-1] if points else ZERO
        comps.append((start, T))
    return comps, t_on_spectrum


def ellipsoid_barcode(p: EllipsoidParams) -> Barcode:
    """One bar per spectrum gap in (0, T), all with parity n mod 2.

    The last component reaches the horizon and is flagged truncated: its
    death stays at T when T is a spectrum value (the gap genuinely closes
    there) and is emitted as +inf when the horizon cuts the gap open.
    """
    comps, t_on_spectrum = _components(p)
    parity = p.n % 2
    bars = []
    for idx, (lo, hi) in enumerate(comps):
        last = idx == len(comps) - 1
        if last and not t_on_spectrum:
            bars.append(Bar(lo, POS_INF, parity, truncated=True))
        else:
            bars.append(Bar(lo, hi, parity, truncated=last))
    return Barcode(ellipsoid_spectrum(p), tuple(bars))


def gaps_longer_than(p: EllipsoidParams, ell: Scalar) -> List[Tuple[Scalar, Scalar]]:
    """Maximal spectrum-free open intervals in (0, T) longer than ell.

    Requires 0 <= ell < a_1 (ell = 0 lists every gap); the recurrence of
    the multiples guarantees long gaps keep appearing as the horizon grows.
    """
    if ell < ZERO or not (ell < p.axes[0]):
        raise ValueError("threshold must satisfy 0 <= ell < smallest axis")
    comps, _ = _components(p)
    return [(lo, hi) for lo, hi in comps if ell < hi - lo]
