"""Persistence modules with spectrum, and their barcode normal form.

The central data are exact: a Spectrum is a finite sorted set of rational
points inside a horizon window, a Barcode is a graded multiset of bars
whose finite endpoints lie on the spectrum, and a SampledModule is a
finite functor presentation: one GF(2) structure matrix per parity between
consecutive sample parameters, sampled so that consecutive samples straddle
at most one spectrum point and every spectrum point is straddled.

A SampledModule is read with constant extension beyond its grid: a bar
alive at the first (last) sample is considered born at -inf (undying).
That convention is what `decompose` and `module_from_barcode` invert
against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Tuple

from .errors import (
    EmptyHorizonError,
    IndexOutOfRangeError,
    NonUniqueSnapError,
)
from .gf2 import Gf2Matrix
from .scalar import NEG_INF, POS_INF, Scalar, ScalarLike, as_scalar, rational

Parity = int  # 0 or 1; the Z/2 supergrading


@dataclass(frozen=True, slots=True)
class Spectrum:
    """Strictly increasing finite points inside a finite horizon [lo, hi]."""

    points: Tuple[Scalar, ...]
    lo: Scalar
    hi: Scalar

    def __post_init__(self):
        if not (self.lo.is_finite and self.hi.is_finite):
            raise ValueError("horizon endpoints must be finite")
        if self.hi < self.lo:
            raise ValueError("horizon is empty")
        prev = None
        for p in self.points:
            if not p.is_finite:
                raise ValueError("spectrum points must be finite")
            if p < self.lo or self.hi < p:
                raise ValueError(f"spectrum point {p} outside horizon")
            if prev is not None and not (prev < p):
                raise ValueError("spectrum points must be strictly increasing")
            prev = p

    @classmethod
    def of(cls, points: Iterable[ScalarLike], lo: ScalarLike, hi: ScalarLike) -> "Spectrum":
        return cls(tuple(as_scalar(p) for p in points), as_scalar(lo), as_scalar(hi))

    def __contains__(self, s: Scalar) -> bool:
        return s in set(self.points)

    def shifted(self, t: Scalar) -> "Spectrum":
        return Spectrum(tuple(p + t for p in self.points), self.lo + t, self.hi + t)


@dataclass(frozen=True, slots=True)
class Bar:
    """An interval (birth, death) with Z/2 parity.

    Containment is strict: the bar covers s exactly when birth < s < death.
    The `truncated` flag marks bars cut off by a horizon (the recorded
    death is only a certified lower bound on the true one); it is carried
    as metadata and ignored by equality and hashing.
    """

    birth: Scalar
    death: Scalar
    parity: Parity
    truncated: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.birth.is_pos_inf or self.death.is_neg_inf:
            raise ValueError("bar endpoints must satisfy birth in [-inf, inf), death in (-inf, inf]")
        if self.death < self.birth:
            raise ValueError(f"bar has death {self.death} before birth {self.birth}")
        if self.parity not in (0, 1):
            raise ValueError("parity must be 0 or 1")

    @classmethod
    def of(cls, birth: ScalarLike, death: ScalarLike, parity: Parity = 0,
           truncated: bool = False) -> "Bar":
        return cls(as_scalar(birth), as_scalar(death), parity, truncated)

    @property
    def is_finite(self) -> bool:
        return self.birth.is_finite and self.death.is_finite

    def contains(self, s: Scalar) -> bool:
        return self.birth < s < self.death

    def length(self) -> Scalar:
        """death - birth; +inf when either endpoint is infinite."""
        if not self.is_finite:
            return POS_INF
        return self.death - self.birth

    def half_length(self) -> Scalar:
        if not self.is_finite:
            return POS_INF
        return (self.death - self.birth) / 2

    def sort_key(self):
        return (self.birth, self.death, self.parity)


@dataclass(frozen=True, slots=True)
class Barcode:
    """A multiset of bars over a common spectrum (stored sorted)."""

    spectrum: Spectrum
    bars: Tuple[Bar, ...]

    def __post_init__(self):
        object.__setattr__(self, "bars", tuple(sorted(self.bars, key=Bar.sort_key)))
        points = set(self.spectrum.points)
        for b in self.bars:
            for end in (b.birth, b.death):
                if end.is_finite and end not in points:
                    raise ValueError(f"bar endpoint {end} is not a spectrum point")

    @classmethod
    def of(cls, spectrum: Spectrum, bars: Iterable[Bar]) -> "Barcode":
        return cls(spectrum, tuple(bars))

    def graded_dim_at(self, s: Scalar) -> Tuple[int, int]:
        d = [0, 0]
        for b in self.bars:
            if b.contains(s):
                d[b.parity] += 1
        return (d[0], d[1])

    def same_bars(self, other: "Barcode") -> bool:
        """Multiset equality of bars, ignoring the ambient spectra."""
        return self.bars == other.bars


@dataclass(frozen=True, slots=True)
class SampledModule:
    """A persistence module sampled on a finite grid.

    `samples` are strictly increasing finite parameters avoiding the
    spectrum; `dims[i]` is the graded dimension at samples[i]; `maps[i]`
    holds the two structure matrices (one per parity) from samples[i] to
    samples[i+1], with shape dims[i+1][p] x dims[i][p].
    """

    spectrum: Spectrum
    samples: Tuple[Scalar, ...]
    dims: Tuple[Tuple[int, int], ...]
    maps: Tuple[Tuple[Gf2Matrix, Gf2Matrix], ...]

    def __post_init__(self):
        if len(self.dims) != len(self.samples):
            raise ValueError("dims and samples disagree in length")
        if len(self.maps) != max(len(self.samples) - 1, 0):
            raise ValueError("need exactly one map pair per consecutive sample pair")

    @property
    def n_samples(self) -> int:
        return len(self.samples)

    def points_between(self, i: int) -> Tuple[Scalar, ...]:
        """Spectrum points strictly between samples[i] and samples[i+1]."""
        return tuple(p for p in self.spectrum.points
                     if self.samples[i] < p < self.samples[i + 1])


def validate_module(m: SampledModule) -> List[str]:
    """Collect invariant violations; an empty list means the module is valid."""
    issues: List[str] = []
    points = set(m.spectrum.points)
    for i, s in enumerate(m.samples):
        if not s.is_finite:
            issues.append(f"sample {i} is not finite")
        elif s in points:
            issues.append(f"sample {i} collides with spectrum point {s}")
        if i > 0 and not (m.samples[i - 1] < s):
            issues.append(f"samples {i - 1} and {i} are not strictly increasing")
    for i, (d0, d1) in enumerate(m.dims):
        if d0 < 0 or d1 < 0:
            issues.append(f"negative dimension at sample {i}")
    for i, pair in enumerate(m.maps):
        for parity in (0, 1):
            mat = pair[parity]
            want = (m.dims[i + 1][parity], m.dims[i][parity])
            if mat.shape != want:
                issues.append(
                    f"map {i} parity {parity} has shape {mat.shape}, expected {want}")
    # Grid discipline relative to the spectrum.
    if m.samples:
        for p in m.spectrum.points:
            if p < m.samples[0] or m.samples[-1] < p:
                issues.append(f"spectrum point {p} is not straddled by the samples")
    for i in range(len(m.samples) - 1):
        between = m.points_between(i)
        if len(between) > 1:
            issues.append(
                f"{len(between)} spectrum points between samples {i} and {i + 1}")
        if not between:
            for parity in (0, 1):
                if i < len(m.maps):
                    mat = m.maps[i][parity]
                    if mat.shape == (m.dims[i + 1][parity], m.dims[i][parity]) \
                            and not mat.is_invertible():
                        issues.append(
                            f"map {i} parity {parity} crosses no spectrum point "
                            "but is not invertible")
    return issues


def composite_map(m: SampledModule, i: int, j: int, parity: Parity) -> Gf2Matrix:
    """Structure map from samples[i] to samples[j] (i <= j)."""
    if not (0 <= i <= j < m.n_samples):
        raise IndexOutOfRangeError(f"sample range ({i}, {j}) outside 0..{m.n_samples - 1}")
    acc = Gf2Matrix.identity(m.dims[i][parity])
    for step in range(i, j):
        acc = m.maps[step][parity] @ acc
    return acc


def rank_invariant(m: SampledModule, i: int, j: int) -> Tuple[int, int]:
    """Graded rank of the composite map from sample i to sample j."""
    return (composite_map(m, i, j, 0).rank(), composite_map(m, i, j, 1).rank())


def _snap_point(m: SampledModule, gap_index: int) -> Scalar:
    between = m.points_between(gap_index)
    if len(between) != 1:
        raise NonUniqueSnapError(
            f"gap between samples {gap_index} and {gap_index + 1} holds "
            f"{len(between)} spectrum points; endpoint snapping is ambiguous")
    return between[0]


def decompose(m: SampledModule) -> Barcode:
    """Interval decomposition of a valid SampledModule.

    The multiplicity of the summand alive exactly on samples i..j is the
    inclusion-exclusion of composite ranks
        r(i, j) - r(i-1, j) - r(i, j+1) + r(i-1, j+1)
    with out-of-range ranks read as 0.  Births snap to the unique spectrum
    point in the gap just before sample i (or -inf at the grid's left end),
    deaths symmetrically.
    """
    issues = validate_module(m)
    if issues:
        raise ValueError("cannot decompose an invalid module: " + "; ".join(issues))
    k = m.n_samples
    bars: List[Bar] = []
    for parity in (0, 1):
        # rank table; rank(i, i) is the dimension at sample i
        rank: List[List[int]] = [[0] * k for _ in range(k)]
        for i in range(k):
            acc = Gf2Matrix.identity(m.dims[i][parity])
            rank[i][i] = m.dims[i][parity]
            for j in range(i + 1, k):
                acc = m.maps[j - 1][parity] @ acc
                rank[i][j] = acc.rank()

        def r(i: int, j: int) -> int:
            if i < 0 or j >= k or i > j:
                return 0
            return rank[i][j]

        for i in range(k):
            for j in range(i, k):
                mult = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1)
                if mult < 0:
                    raise AssertionError(f"negative multiplicity at span ({i}, {j})")
                if mult == 0:
                    continue
                birth = NEG_INF if i == 0 else _snap_point(m, i - 1)
                death = POS_INF if j == k - 1 else _snap_point(m, j)
                bars.extend([Bar(birth, death, parity)] * mult)
    code = Barcode(m.spectrum, tuple(bars))
    for idx, s in enumerate(m.samples):
        if code.graded_dim_at(s) != m.dims[idx]:
            raise AssertionError(
                f"decomposition loses rank at sample {idx}: "
                f"{code.graded_dim_at(s)} != {m.dims[idx]}")
    return code


def _sample_positions(spectrum: Spectrum, density: int) -> List[Scalar]:
    """Sample grid bracketing every spectrum point.

    One region per connected component of the complement; `density` samples
    are spread inside each region.  When an extreme spectrum point sits on
    the horizon boundary the outer sample is placed just beyond it, since a
    one-sided point could not be told apart from an unbounded bar end.
    """
    lo, hi = spectrum.lo, spectrum.hi
    if not (lo < hi):
        raise EmptyHorizonError("horizon window has no interior to sample")
    points = spectrum.points
    if not points:
        regions = [(lo, hi)]
    else:
        gaps = [b - a for a, b in zip(points, points[1:])]
        pad = min(gaps) if gaps else rational(1)
        left = (lo, points[0]) if lo < points[0] else (points[0] - pad, points[0])
        right = (points[-1], hi) if points[-1] < hi else (points[-1], points[-1] + pad)
        regions = [left] + list(zip(points, points[1:])) + [right]
    positions: List[Scalar] = []
    for a, b in regions:
        width = b - a
        for t in range(1, density + 1):
            positions.append(a + width * Fraction(t, density + 1))
    return positions


def module_from_barcode(b: Barcode, grid_density_hint: int = 1) -> SampledModule:
    """Canonical bar-tracking SampledModule presenting the barcode.

    Dimensions count the bars strictly containing each sample; structure
    matrices are the 0/1 matrices that follow each bar from one sample to
    the next and kill it in between otherwise.
    """
    if grid_density_hint < 1:
        raise ValueError("grid_density_hint must be a positive integer")
    samples = _sample_positions(b.spectrum, grid_density_hint)
    alive: List[Tuple[List[int], List[int]]] = []
    for s in samples:
        by_parity: Tuple[List[int], List[int]] = ([], [])
        for idx, bar in enumerate(b.bars):
            if bar.contains(s):
                by_parity[bar.parity].append(idx)
        alive.append(by_parity)
    dims = tuple((len(a0), len(a1)) for a0, a1 in alive)
    maps: List[Tuple[Gf2Matrix, Gf2Matrix]] = []
    for i in range(len(samples) - 1):
        pair = []
        for parity in (0, 1):
            src = alive[i][parity]
            dst = alive[i + 1][parity]
            col_of = {bar_idx: c for c, bar_idx in enumerate(src)}
            rows = tuple(
                (1 << col_of[bar_idx]) if bar_idx in col_of else 0
                for bar_idx in dst
            )
            pair.append(Gf2Matrix(rows, len(src)))
        maps.append((pair[0], pair[1]))
    return SampledModule(b.spectrum, tuple(samples), dims, tuple(maps))
