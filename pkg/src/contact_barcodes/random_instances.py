"""Seeded random barcodes and modules for property harnesses.

All generators take an explicit random.Random so that identical seeds
reproduce identical instances, byte for byte.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Optional, Tuple

from .gf2 import Gf2Matrix, invertible_matrices
from .persistence import Bar, Barcode, SampledModule, Spectrum
from .scalar import NEG_INF, POS_INF, Scalar, rational


def random_rational(rng: random.Random, lo: int = -8, hi: int = 8,
                    denominators: Tuple[int, ...] = (1, 2, 3, 4)) -> Scalar:
    q = rng.choice(denominators)
    return Scalar(Fraction(rng.randint(lo * q, hi * q), q))


def random_spectrum(rng: random.Random, max_points: int = 6,
                    min_points: int = 0) -> Spectrum:
    n = rng.randint(min_points, max_points)
    pts = set()
    while len(pts) < n:
        pts.add(random_rational(rng, 0, 10))
    points = tuple(sorted(pts))
    lo = points[0] if points else rational(0)
    hi = points[-1] if points else rational(10)
    if not (lo < hi):
        hi = lo + rational(1)
    return Spectrum(points, lo, hi)


def random_barcode(rng: random.Random, max_bars: int = 8, max_points: int = 6,
                   allow_infinite: bool = True,
                   force_half_infinite: bool = False) -> Barcode:
    """A barcode with positive-length bars over a fresh random spectrum."""
    spectrum = random_spectrum(rng, max_points=max_points, min_points=1)
    points = spectrum.points
    bars: List[Bar] = []
    n_bars = rng.randint(0, max_bars)
    for _ in range(n_bars):
        parity = rng.randint(0, 1)
        kind = rng.random()
        if allow_infinite and kind < 0.15:
            bars.append(Bar(NEG_INF, rng.choice(points), parity))
        elif allow_infinite and kind < 0.30:
            bars.append(Bar(rng.choice(points), POS_INF, parity))
        elif allow_infinite and kind < 0.35:
            bars.append(Bar(NEG_INF, POS_INF, parity))
        elif len(points) >= 2:
            i = rng.randrange(len(points) - 1)
            j = rng.randrange(i + 1, len(points))
            bars.append(Bar(points[i], points[j], parity))
    if force_half_infinite and not any(
            b.birth.is_finite and b.death.is_pos_inf for b in bars):
        bars.append(Bar(rng.choice(points), POS_INF, rng.randint(0, 1)))
    return Barcode(spectrum, tuple(bars))


def random_module(rng: random.Random, max_points: int = 4, max_dim: int = 2,
                  spectrum: Optional[Spectrum] = None,
                  density: int = 1) -> SampledModule:
    """A valid random module: random dims per region, random matrices
    across spectrum points, random invertible matrices inside regions."""
    if spectrum is None:
        spectrum = random_spectrum(rng, max_points=max_points)
    points, lo, hi = spectrum.points, spectrum.lo, spectrum.hi
    if not points:
        cells = [(lo, hi)]
    else:
        gaps = [b - a for a, b in zip(points, points[1:])]
        pad = min(gaps) if gaps else rational(1)
        left = lo if lo < points[0] else points[0] - pad
        right = hi if points[-1] < hi else points[-1] + pad
        cells = [(left, points[0])] + list(zip(points, points[1:])) + [(points[-1], right)]
    samples: List[Scalar] = []
    region_of: List[int] = []
    for r, (a, b) in enumerate(cells):
        width = b - a
        for t in range(1, density + 1):
            samples.append(a + width * Fraction(t, density + 1))
            region_of.append(r)

    region_dims = []
    for _ in range(len(cells)):
        total = rng.randint(0, max_dim)
        d0 = rng.randint(0, total)
        region_dims.append((d0, total - d0))
    dims = tuple(region_dims[r] for r in region_of)
    maps = []
    for i in range(len(samples) - 1):
        pair = []
        for parity in (0, 1):
            nr, nc = dims[i + 1][parity], dims[i][parity]
            if region_of[i] == region_of[i + 1]:
                pair.append(random_invertible(rng, nc))
            else:
                pair.append(random_matrix(rng, nr, nc))
        maps.append((pair[0], pair[1]))
    return SampledModule(spectrum, tuple(samples), dims, tuple(maps))


def random_matrix(rng: random.Random, nrows: int, ncols: int) -> Gf2Matrix:
    return Gf2Matrix(tuple(rng.randrange(1 << ncols) for _ in range(nrows)), ncols)


def random_invertible(rng: random.Random, n: int) -> Gf2Matrix:
    if n == 0:
        return Gf2Matrix((), 0)
    choices = invertible_matrices(n)
    return rng.choice(choices)
