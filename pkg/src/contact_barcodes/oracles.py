"""Independent brute-force oracles.

Each function here recomputes a quantity by a route deliberately different
from the production implementation: interval decomposition by enumerating
GF(2) basis changes, bottleneck distance by exhausting all matchings,
covering numbers by minimizing over group partitions and center subsets.
They exist to be slow and obviously correct.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import List, Optional, Sequence, Tuple

from .errors import TooLargeError
from .gf2 import Gf2Matrix, invertible_matrices
from .persistence import Bar, Barcode, SampledModule, validate_module
from .scalar import NEG_INF, POS_INF, Scalar, ZERO, midpoint


def brute_force_decompose(m: SampledModule, limit: int = 2_000_000) -> Barcode:
    """Interval decomposition by enumerating all changes of basis.

    Searches, per parity, for basis changes making every structure matrix a
    partial permutation, then reads the intervals off the surviving threads.
    The structure theorem guarantees some tuple works.
    """
    issues = validate_module(m)
    if issues:
        raise ValueError("invalid module: " + "; ".join(issues))
    k = m.n_samples
    bars: List[Bar] = []
    for parity in (0, 1):
        dims = [d[parity] for d in m.dims]
        mats = [pair[parity] for pair in m.maps]
        total = 1
        for d in dims:
            total *= len(invertible_matrices(d))
            if total > limit:
                raise TooLargeError("basis enumeration bound exceeded")
        found = None
        for combo in product(*[invertible_matrices(d) for d in dims]):
            ok = True
            transformed = []
            for i, mat in enumerate(mats):
                t = combo[i + 1] @ mat @ combo[i].inverse()
                if not t.is_partial_permutation():
                    ok = False
                    break
                transformed.append(t)
            if ok:
                found = transformed
                break
        if found is None:
            raise AssertionError("no interval form found; structure theorem violated")
        bars.extend(_threads_to_bars(m, dims, found, parity))
    return Barcode(m.spectrum, tuple(bars))


def _threads_to_bars(m: SampledModule, dims: Sequence[int],
                     mats: Sequence[Gf2Matrix], parity: int) -> List[Bar]:
    from .persistence import _snap_point  # same snapping as the fast path

    k = len(dims)
    bars: List[Bar] = []
    # active[r] = sample index at which the thread currently in row r began
    active: dict = {r: 0 for r in range(dims[0])} if k else {}
    for i in range(k - 1):
        nxt: dict = {}
        for r, start in active.items():
            target = None
            for rr in range(dims[i + 1]):
                if mats[i].entry(rr, r):
                    target = rr
                    break
            if target is None:
                bars.append(_make_bar(m, start, i, k, parity))
            else:
                nxt[target] = start
        for rr in range(dims[i + 1]):
            if rr not in nxt:
                nxt[rr] = i + 1
        active = nxt
    for start in active.values():
        bars.append(_make_bar(m, start, k - 1, k, parity))
    return bars


def _make_bar(m: SampledModule, i: int, j: int, k: int, parity: int) -> Bar:
    from .persistence import _snap_point

    birth = NEG_INF if i == 0 else _snap_point(m, i - 1)
    death = POS_INF if j == k - 1 else _snap_point(m, j)
    return Bar(birth, death, parity)


def _pair_cost(a: Optional[Bar], b: Optional[Bar]) -> Scalar:
    from .distances import bar_cost, half_length

    if a is None and b is None:
        return ZERO
    if a is None:
        return half_length(b)
    if b is None:
        return half_length(a)
    return bar_cost(a, b)


def exhaustive_bottleneck(b1: Barcode, b2: Barcode, graded: bool = False,
                          limit: int = 500_000) -> Scalar:
    """Bottleneck distance by minimizing over every padded bijection."""
    if graded:
        best = ZERO
        for parity in (0, 1):
            sub = exhaustive_bottleneck(
                _filter_parity(b1, parity), _filter_parity(b2, parity),
                graded=False, limit=limit)
            best = max(best, sub)
        return best
    left: List[Optional[Bar]] = list(b1.bars) + [None] * len(b2.bars)
    right: List[Optional[Bar]] = list(b2.bars) + [None] * len(b1.bars)
    n = len(left)
    count = 1
    for i in range(2, n + 1):
        count *= i
        if count > limit:
            raise TooLargeError("matching enumeration bound exceeded")
    best: Optional[Scalar] = None
    for perm in permutations(range(n)):
        cost = ZERO
        for i, j in enumerate(perm):
            c = _pair_cost(left[i], right[j])
            if cost < c:
                cost = c
            if best is not None and not (cost < best):
                break
        if best is None or cost < best:
            best = cost
    return best if best is not None else ZERO


def _filter_parity(b: Barcode, parity: int) -> Barcode:
    return Barcode(b.spectrum, tuple(bar for bar in b.bars if bar.parity == parity))


def covering_min_partition(points: Sequence[Scalar], delta: Scalar) -> int:
    """Minimal number of open delta/2-balls covering the points.

    Dynamic program over sorted points: a ball can cover a consecutive group
    exactly when the group's span is strictly less than delta.
    """
    pts = sorted(set(points))
    n = len(pts)
    INF = n + 1
    best = [INF] * (n + 1)
    best[0] = 0
    for i in range(1, n + 1):
        for j in range(i):
            if pts[i - 1] - pts[j] < delta:
                best[i] = min(best[i], best[j] + 1)
    return best[n]


def covering_min_subsets(points: Sequence[Scalar], delta: Scalar,
                         limit: int = 500_000) -> int:
    """Minimal covering by exhausting center subsets drawn from midpoints."""
    pts = sorted(set(points))
    if not pts:
        return 0
    candidates = sorted({midpoint(a, b) for a in pts for b in pts})
    radius = delta / 2

    def covered_by(centers: Tuple[Scalar, ...]) -> bool:
        return all(any(abs(p - c) < radius for c in centers) for p in pts)

    checked = 0
    for k in range(1, len(pts) + 1):
        for centers in combinations(candidates, k):
            checked += 1
            if checked > limit:
                raise TooLargeError("center subset enumeration bound exceeded")
            if covered_by(centers):
                return k
    return len(pts)


def spectrum_member_by_divisibility(s: Scalar, axes: Sequence[Scalar]) -> bool:
    """Membership of s in the union of the axis multiples, by direct division."""
    if not s.is_finite:
        return False
    for a in axes:
        ratio = s.value / a.value
        if ratio.denominator == 1 and ratio >= 0:
            return True
    return False
