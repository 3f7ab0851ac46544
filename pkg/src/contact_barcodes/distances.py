"""Bottleneck distance with witness matchings, and a brute-force
delta-interleaving search over sampled modules.

The bottleneck side works on barcodes: candidate values are endpoint
differences and half-lengths, feasibility at a candidate is a bipartite
matching problem, and the infimum is attained at a candidate.  The
interleaving side works directly on SampledModules, enumerating GF(2)
interleaving maps region by region; the two routes are kept independent so
they can be played against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Set, Tuple

from .errors import ShapeMismatchError, TooLargeError
from .gf2 import Gf2Matrix, Gf2System, SpanSolver, all_row_vectors
from .persistence import Bar, Barcode, SampledModule, composite_map, validate_module
from .scalar import NEG_INF, POS_INF, Scalar, ZERO


def endpoint_gap(x: Scalar, y: Scalar) -> Scalar:
    """|x - y| on the extended line: same-type infinities are 0 apart,
    an infinity and anything else are infinitely far apart."""
    if x == y:
        return ZERO
    if not (x.is_finite and y.is_finite):
        return POS_INF
    return abs(x - y)


def bar_cost(a: Bar, b: Bar) -> Scalar:
    return max(endpoint_gap(a.birth, b.birth), endpoint_gap(a.death, b.death))


def half_length(b: Bar) -> Scalar:
    return b.half_length()


@dataclass(frozen=True, slots=True)
class Matching:
    """A bijective matching after ersatz padding.

    Each pair is (left bar index, right bar index); None stands for the
    ersatz zero-length partner at the other bar's midpoint.  Every real bar
    index appears exactly once per side.
    """

    pairs: Tuple[Tuple[Optional[int], Optional[int]], ...]
    cost: Scalar


def _max_bipartite(n_left: int, n_right: int, adj: Sequence[Sequence[int]]
                   ) -> Tuple[int, List[int]]:
    match_l = [-1] * n_left
    match_r = [-1] * n_right

    def augment(u: int, seen: List[bool]) -> bool:
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                if match_r[v] == -1 or augment(match_r[v], seen):
                    match_r[v] = u
                    match_l[u] = v
                    return True
        return False

    size = 0
    for u in range(n_left):
        if augment(u, [False] * n_right):
            size += 1
    return size, match_l


def _finite_matching(left: Sequence[Bar], right: Sequence[Bar], delta: Scalar
                     ) -> Optional[List[Tuple[Optional[int], Optional[int]]]]:
    """Perfect matching of finite bars at cost <= delta, ghosts included."""
    n1, n2 = len(left), len(right)
    size = n1 + n2
    # left vertices: bars of b1, then one ghost per bar of b2;
    # right vertices: bars of b2, then one ghost per bar of b1.
    adj: List[List[int]] = [[] for _ in range(size)]
    for i, a in enumerate(left):
        for j, b in enumerate(right):
            if not (delta < bar_cost(a, b)):
                adj[i].append(j)
        if not (delta < half_length(a)):
            adj[i].append(n2 + i)
    for gi in range(n2):
        if not (delta < half_length(right[gi])):
            adj[n1 + gi].append(gi)
        for gj in range(n1):
            adj[n1 + gi].append(n2 + gj)
    matched, match_l = _max_bipartite(size, size, adj)
    if matched != size:
        return None
    pairs: List[Tuple[Optional[int], Optional[int]]] = []
    for i in range(n1):
        v = match_l[i]
        pairs.append((i, v) if v < n2 else (i, None))
    for gi in range(n2):
        v = match_l[n1 + gi]
        if v < n2:
            pairs.append((None, v))
    return pairs


def _sorted_pairing(xs: List[Tuple[Scalar, int]], ys: List[Tuple[Scalar, int]]
                    ) -> Tuple[Scalar, List[Tuple[int, int]]]:
    xs = sorted(xs)
    ys = sorted(ys)
    worst = ZERO
    pairs = []
    for (vx, i), (vy, j) in zip(xs, ys):
        worst = max(worst, endpoint_gap(vx, vy))
        pairs.append((i, j))
    return worst, pairs


def _bottleneck_ungraded(b1: Barcode, b2: Barcode
                         ) -> Tuple[Scalar, Optional[Matching]]:
    neg1, pos1, full1, fin1 = _split(b1)
    neg2, pos2, full2, fin2 = _split(b2)
    if len(neg1) != len(neg2) or len(pos1) != len(pos2) or len(full1) != len(full2):
        return POS_INF, None

    pairs: List[Tuple[Optional[int], Optional[int]]] = []
    worst = ZERO
    for (i, a), (j, b) in zip(full1, full2):
        pairs.append((i, j))
    w, pp = _sorted_pairing([(b1.bars[i].death, i) for i, _ in neg1],
                            [(b2.bars[j].death, j) for j, _ in neg2])
    worst = max(worst, w)
    pairs.extend(pp)
    w, pp = _sorted_pairing([(b1.bars[i].birth, i) for i, _ in pos1],
                            [(b2.bars[j].birth, j) for j, _ in pos2])
    worst = max(worst, w)
    pairs.extend(pp)

    left = [bar for _, bar in fin1]
    right = [bar for _, bar in fin2]
    candidates: Set[Scalar] = {ZERO, worst}
    for a in left:
        candidates.add(half_length(a))
        for b in right:
            candidates.add(endpoint_gap(a.birth, b.birth))
            candidates.add(endpoint_gap(a.death, b.death))
    for b in right:
        candidates.add(half_length(b))
    grid = sorted(c for c in candidates if c.is_finite and not (c < worst))
    lo, hi = 0, len(grid) - 1
    best: Optional[Tuple[Scalar, List]] = None
    while lo <= hi:
        mid = (lo + hi) // 2
        res = _finite_matching(left, right, grid[mid])
        if res is not None:
            best = (grid[mid], res)
            hi = mid - 1
        else:
            lo = mid + 1
    if best is None:
        return POS_INF, None
    delta, fin_pairs = best
    index1 = [i for i, _ in fin1]
    index2 = [j for j, _ in fin2]
    for li, rj in fin_pairs:
        pairs.append((index1[li] if li is not None else None,
                      index2[rj] if rj is not None else None))
    return delta, Matching(tuple(pairs), delta)


def _split(b: Barcode):
    neg, pos, full, fin = [], [], [], []
    for i, bar in enumerate(b.bars):
        if bar.birth.is_neg_inf and bar.death.is_pos_inf:
            full.append((i, bar))
        elif bar.birth.is_neg_inf:
            neg.append((i, bar))
        elif bar.death.is_pos_inf:
            pos.append((i, bar))
        else:
            fin.append((i, bar))
    return neg, pos, full, fin


def matching_feasible(b1: Barcode, b2: Barcode, delta: Scalar) -> bool:
    """Whether some matching of cost <= delta exists (ungraded)."""
    if delta.is_pos_inf:
        return True
    if delta < ZERO:
        return False
    neg1, pos1, full1, fin1 = _split(b1)
    neg2, pos2, full2, fin2 = _split(b2)
    if len(neg1) != len(neg2) or len(pos1) != len(pos2) or len(full1) != len(full2):
        return False
    w1, _ = _sorted_pairing([(b1.bars[i].death, i) for i, _ in neg1],
                            [(b2.bars[j].death, j) for j, _ in neg2])
    w2, _ = _sorted_pairing([(b1.bars[i].birth, i) for i, _ in pos1],
                            [(b2.bars[j].birth, j) for j, _ in pos2])
    if delta < w1 or delta < w2:
        return False
    return _finite_matching([bar for _, bar in fin1],
                            [bar for _, bar in fin2], delta) is not None


def bottleneck_distance(b1: Barcode, b2: Barcode, graded: bool = False
                        ) -> Tuple[Scalar, Optional[Matching]]:
    """Infimal delta admitting a matching of cost <= delta, with a witness.

    Returns +inf (and no witness) when the infinite-bar classes cannot be
    matched.  With graded=True bars may only match within their parity.
    """
    if not graded:
        return _bottleneck_ungraded(b1, b2)
    worst = ZERO
    all_pairs: List[Tuple[Optional[int], Optional[int]]] = []
    for parity in (0, 1):
        idx1 = [i for i, bar in enumerate(b1.bars) if bar.parity == parity]
        idx2 = [j for j, bar in enumerate(b2.bars) if bar.parity == parity]
        sub1 = Barcode(b1.spectrum, tuple(b1.bars[i] for i in idx1))
        sub2 = Barcode(b2.spectrum, tuple(b2.bars[j] for j in idx2))
        delta, matching = _bottleneck_ungraded(sub1, sub2)
        if matching is None:
            return POS_INF, None
        worst = max(worst, delta)
        for li, rj in matching.pairs:
            all_pairs.append((idx1[li] if li is not None else None,
                              idx2[rj] if rj is not None else None))
    return worst, Matching(tuple(all_pairs), worst)


# ---------------------------------------------------------------------------
# Interleavings
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class InterleavingCertificate:
    """Interleaving maps, one per region per parity.

    Regions are the connected components cut out of the line by the
    spectrum points a module actually straddles; forward_maps[r][p] maps
    module 1's region r to module 2's region shifted by delta, and
    backward_maps the other way.
    """

    delta: Scalar
    forward_maps: Tuple[Tuple[Gf2Matrix, Gf2Matrix], ...]
    backward_maps: Tuple[Tuple[Gf2Matrix, Gf2Matrix], ...]


class _Regions:
    """Cut-point/region view of a validated SampledModule."""

    def __init__(self, m: SampledModule):
        issues = validate_module(m)
        if issues:
            raise ValueError("invalid module: " + "; ".join(issues))
        if m.n_samples == 0:
            raise ValueError("module has no samples")
        self.module = m
        cuts: List[Scalar] = []
        reps: List[int] = [0] if m.n_samples else []
        for i in range(m.n_samples - 1):
            between = m.points_between(i)
            if between:
                cuts.append(between[0])
                reps.append(i + 1)
        self.cuts = tuple(cuts)
        self.reps = tuple(reps)
        self.n = len(reps)
        self.dims = tuple(m.dims[i] for i in reps)

    def region_at(self, x: Scalar) -> int:
        """Region holding points just to the right of x."""
        return sum(1 for c in self.cuts if not (x < c))

    def boundary(self, r: int) -> Scalar:
        """Left boundary of region r (-inf for the first region)."""
        return NEG_INF if r == 0 else self.cuts[r - 1]

    def comp(self, a: int, b: int, parity: int) -> Gf2Matrix:
        return composite_map(self.module, self.reps[a], self.reps[b], parity)

    def shift_target(self, other: "_Regions", r: int, delta: Scalar) -> int:
        b = self.boundary(r)
        if b.is_neg_inf:
            return 0
        return other.region_at(b + delta)

    def shift_self(self, r: int, delta2: Scalar) -> int:
        b = self.boundary(r)
        if b.is_neg_inf:
            return 0
        return self.region_at(b + delta2)


def interleaving_candidates(m1: SampledModule, m2: SampledModule) -> List[Scalar]:
    values = set(m1.spectrum.points) | set(m2.spectrum.points)
    values |= {m1.spectrum.lo, m1.spectrum.hi, m2.spectrum.lo, m2.spectrum.hi}
    vals = sorted(values)
    out = {ZERO}
    for i, a in enumerate(vals):
        for b in vals[i + 1:]:
            gap = b - a
            out.add(gap)
            out.add(gap / 2)
    return sorted(out)


def _enumerate_chain(regions1: _Regions, regions2: _Regions, parity: int,
                     delta: Scalar, budget: List[int]):
    """Yield (F maps, solved G system) pairs satisfying every constraint.

    F maps are searched depth-first along the forward naturality chain;
    G equations are accumulated incrementally so contradictions prune the
    search as early as possible.
    """
    R1, R2 = regions1.n, regions2.n
    d1 = [d[parity] for d in regions1.dims]
    d2 = [d[parity] for d in regions2.dims]
    phi = [regions1.shift_target(regions2, r, delta) for r in range(R1)]
    psi = [regions2.shift_target(regions1, t, delta) for t in range(R2)]
    two_delta = delta + delta
    phi2 = [regions1.shift_self(r, two_delta) for r in range(R1)]
    psi2 = [regions2.shift_self(t, two_delta) for t in range(R2)]

    # G[t] has shape (d1[psi[t]], d2[t]); dole out unknown ids
    g_offset = []
    n_unknowns = 0
    for t in range(R2):
        g_offset.append(n_unknowns)
        n_unknowns += d1[psi[t]] * d2[t]

    def g_bit(t: int, i: int, j: int) -> int:
        return g_offset[t] + i * d2[t] + j

    base = Gf2System(n_unknowns)

    # backward naturality chain is independent of F
    for t in range(R2 - 1):
        a2 = regions2.comp(t, t + 1, parity)
        c1x = regions1.comp(psi[t], psi[t + 1], parity)
        for i in range(d1[psi[t + 1]]):
            for j in range(d2[t]):
                coeffs = 0
                for s in range(d2[t + 1]):
                    if a2.entry(s, j):
                        coeffs ^= 1 << g_bit(t + 1, i, s)
                for s in range(d2[t]):
                    if c1x.entry(i, s):
                        coeffs ^= 1 << g_bit(t, s, j)
                base.add(coeffs, 0)
                if not base.consistent:
                    return

    # rank obstructions that need no enumeration at all
    for r in range(R1):
        need = regions1.comp(r, phi2[r], parity).rank()
        if need > d2[phi[r]]:
            return
        if need > regions1.comp(psi[phi[r]], phi2[r], parity).rank():
            return
    for t in range(R2):
        need = regions2.comp(t, psi2[t], parity).rank()
        if need > d1[psi[t]]:
            return
        if need > regions2.comp(phi[psi[t]], psi2[t], parity).rank():
            return

    # equations carrying F[r] enter the system at DFS depth r
    e3_by_depth: List[List[int]] = [[] for _ in range(R1)]
    for t in range(R2):
        e3_by_depth[psi[t]].append(t)

    fwd_solvers = [None] * max(R1 - 1, 0)

    def add_e2(system: Gf2System, r: int, fmat: Gf2Matrix) -> bool:
        u = phi2[r]
        c1a = regions1.comp(psi[phi[r]], u, parity)
        rhs = regions1.comp(r, u, parity)
        for i in range(d1[u]):
            for j in range(d1[r]):
                coeffs = 0
                for s in range(d1[psi[phi[r]]]):
                    if not c1a.entry(i, s):
                        continue
                    for sp in range(d2[phi[r]]):
                        if fmat.entry(sp, j):
                            coeffs ^= 1 << g_bit(phi[r], s, sp)
                if not system.add(coeffs, rhs.entry(i, j)):
                    return False
        return True

    def add_e3(system: Gf2System, t: int, fmat: Gf2Matrix) -> bool:
        v = psi2[t]
        c2a = regions2.comp(phi[psi[t]], v, parity)
        rhs = regions2.comp(t, v, parity)
        proj = c2a @ fmat
        for i in range(d2[v]):
            for j in range(d2[t]):
                coeffs = 0
                for sp in range(d1[psi[t]]):
                    if proj.entry(i, sp):
                        coeffs ^= 1 << g_bit(t, sp, j)
                if not system.add(coeffs, rhs.entry(i, j)):
                    return False
        return True

    def f_candidates(r: int, prev: Optional[Gf2Matrix]):
        nrows, ncols = d2[phi[r]], d1[r]
        if r == 0:
            rows_options = [list(all_row_vectors(ncols)) for _ in range(nrows)]
        else:
            a1 = regions1.comp(r - 1, r, parity)
            target = (regions2.comp(phi[r - 1], phi[r], parity) @ prev)
            solver = fwd_solvers[r - 1]
            if solver is None:
                solver = SpanSolver(list(a1.rows), a1.ncols)
                fwd_solvers[r - 1] = solver
            rows_options = []
            for i in range(nrows):
                part = solver.express(target.rows[i])
                if part is None:
                    return None
                opts = [part]
                for null_mask in solver.nullspace:
                    opts = opts + [o ^ null_mask for o in opts]
                rows_options.append(opts)
        return rows_options

    def dfs(r: int, prev: Optional[Gf2Matrix], system: Gf2System,
            stack: List[Gf2Matrix]):
        if r == R1:
            sol = system.solve()
            if sol is not None:
                gs = []
                for t in range(R2):
                    rows = []
                    for i in range(d1[psi[t]]):
                        acc = 0
                        for j in range(d2[t]):
                            acc |= ((sol >> g_bit(t, i, j)) & 1) << j
                        rows.append(acc)
                    gs.append(Gf2Matrix(tuple(rows), d2[t]))
                yield list(stack), gs
            return
        rows_options = f_candidates(r, prev)
        if rows_options is None:
            return

        def rec(i: int, rows: List[int]):
            if i == len(rows_options):
                budget[0] -= 1
                if budget[0] <= 0:
                    raise TooLargeError("interleaving search budget exhausted")
                fmat = Gf2Matrix(tuple(rows), d1[r])
                sub = system.copy()
                if not add_e2(sub, r, fmat):
                    return
                ok = True
                for t in e3_by_depth[r]:
                    if not add_e3(sub, t, fmat):
                        ok = False
                        break
                if not ok:
                    return
                stack.append(fmat)
                yield from dfs(r + 1, fmat, sub, stack)
                stack.pop()
                return
            for row in rows_options[i]:
                yield from rec(i + 1, rows + [row])

        yield from rec(0, [])

    yield from dfs(0, None, base, [])


_SEARCH_BUDGET = 400_000


def find_interleaving(m1: SampledModule, m2: SampledModule, delta: Scalar
                      ) -> Optional[InterleavingCertificate]:
    """A delta-interleaving certificate, or None when none exists."""
    if delta < ZERO:
        return None
    regions1, regions2 = _Regions(m1), _Regions(m2)
    _check_enumeration_bound(m1, m2)
    per_parity = []
    for parity in (0, 1):
        budget = [_SEARCH_BUDGET]
        found = None
        for fs, gs in _enumerate_chain(regions1, regions2, parity, delta, budget):
            found = (fs, gs)
            break
        if found is None:
            return None
        per_parity.append(found)
    fwd = tuple((per_parity[0][0][r], per_parity[1][0][r])
                for r in range(regions1.n))
    bwd = tuple((per_parity[0][1][t], per_parity[1][1][t])
                for t in range(regions2.n))
    return InterleavingCertificate(delta, fwd, bwd)


def _check_enumeration_bound(m1: SampledModule, m2: SampledModule) -> None:
    for m in (m1, m2):
        for d0, d1 in m.dims:
            if d0 + d1 > 4:
                raise TooLargeError(
                    "per-sample total dimension exceeds the enumeration bound (4)")


def interleaving_distance_bruteforce(m1: SampledModule, m2: SampledModule
                                     ) -> Scalar:
    """Smallest candidate delta admitting an interleaving; +inf if none.

    Candidates are spectrum point differences and their halves.  Modules
    must share a horizon; the search enumerates interleaving maps directly.
    """
    if (m1.spectrum.lo, m1.spectrum.hi) != (m2.spectrum.lo, m2.spectrum.hi):
        raise ValueError("modules must share one horizon")
    _check_enumeration_bound(m1, m2)
    grid = interleaving_candidates(m1, m2)
    lo, hi = 0, len(grid) - 1
    best: Optional[Scalar] = None
    while lo <= hi:
        mid = (lo + hi) // 2
        if find_interleaving(m1, m2, grid[mid]) is not None:
            best = grid[mid]
            hi = mid - 1
        else:
            lo = mid + 1
    return best if best is not None else POS_INF


def verify_interleaving(cert: InterleavingCertificate, m1: SampledModule,
                        m2: SampledModule) -> List[str]:
    """Check every square and 2-delta composite; empty list means valid."""
    regions1, regions2 = _Regions(m1), _Regions(m2)
    delta = cert.delta
    R1, R2 = regions1.n, regions2.n
    if len(cert.forward_maps) != R1 or len(cert.backward_maps) != R2:
        raise ShapeMismatchError("certificate map count does not match the regions")
    phi = [regions1.shift_target(regions2, r, delta) for r in range(R1)]
    psi = [regions2.shift_target(regions1, t, delta) for t in range(R2)]
    two_delta = delta + delta
    phi2 = [regions1.shift_self(r, two_delta) for r in range(R1)]
    psi2 = [regions2.shift_self(t, two_delta) for t in range(R2)]

    for parity in (0, 1):
        for r in range(R1):
            want = (regions2.dims[phi[r]][parity], regions1.dims[r][parity])
            if cert.forward_maps[r][parity].shape != want:
                raise ShapeMismatchError(
                    f"forward map at region {r} parity {parity} has shape "
                    f"{cert.forward_maps[r][parity].shape}, expected {want}")
        for t in range(R2):
            want = (regions1.dims[psi[t]][parity], regions2.dims[t][parity])
            if cert.backward_maps[t][parity].shape != want:
                raise ShapeMismatchError(
                    f"backward map at region {t} parity {parity} has shape "
                    f"{cert.backward_maps[t][parity].shape}, expected {want}")

    issues: List[str] = []
    for parity in (0, 1):
        F = [pair[parity] for pair in cert.forward_maps]
        G = [pair[parity] for pair in cert.backward_maps]
        for r in range(R1 - 1):
            lhs = F[r + 1] @ regions1.comp(r, r + 1, parity)
            rhs = regions2.comp(phi[r], phi[r + 1], parity) @ F[r]
            if lhs != rhs:
                issues.append(f"forward square at regions {r}->{r + 1} parity {parity}")
        for t in range(R2 - 1):
            lhs = G[t + 1] @ regions2.comp(t, t + 1, parity)
            rhs = regions1.comp(psi[t], psi[t + 1], parity) @ G[t]
            if lhs != rhs:
                issues.append(f"backward square at regions {t}->{t + 1} parity {parity}")
        for r in range(R1):
            u = phi2[r]
            lhs = regions1.comp(psi[phi[r]], u, parity) @ G[phi[r]] @ F[r]
            if lhs != regions1.comp(r, u, parity):
                issues.append(
                    f"2-delta composite through module 2 at region {r} parity {parity}")
        for t in range(R2):
            v = psi2[t]
            lhs = regions2.comp(phi[psi[t]], v, parity) @ F[psi[t]] @ G[t]
            if lhs != regions2.comp(t, v, parity):
                issues.append(
                    f"2-delta composite through module 1 at region {t} parity {parity}")
    return issues
