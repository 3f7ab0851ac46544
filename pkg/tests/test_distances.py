import random

import pytest

from contact_barcodes.errors import ShapeMismatchError, TooLargeError
from contact_barcodes.gf2 import Gf2Matrix
from contact_barcodes.distances import (
    InterleavingCertificate,
    bar_cost,
    bottleneck_distance,
    endpoint_gap,
    find_interleaving,
    interleaving_candidates,
    interleaving_distance_bruteforce,
    matching_feasible,
    verify_interleaving,
)
from contact_barcodes.oracles import exhaustive_bottleneck
from contact_barcodes.persistence import (
    Bar,
    Barcode,
    SampledModule,
    Spectrum,
    decompose,
    module_from_barcode,
)
from contact_barcodes.random_instances import random_barcode, random_module, random_spectrum
from contact_barcodes.scalar import NEG_INF, POS_INF, ZERO, rational


def test_endpoint_gap_conventions():
    assert endpoint_gap(POS_INF, POS_INF) == ZERO
    assert endpoint_gap(NEG_INF, NEG_INF) == ZERO
    assert endpoint_gap(NEG_INF, POS_INF) == POS_INF
    assert endpoint_gap(POS_INF, rational(3)) == POS_INF
    assert endpoint_gap(rational(1), rational(4)) == rational(3)


def test_identity_distance_zero():
    rng = random.Random(2)
    for _ in range(20):
        b = random_barcode(rng)
        d, matching = bottleneck_distance(b, b)
        assert d == ZERO
        assert matching.cost == ZERO
        assert all(l is not None and r is not None for l, r in matching.pairs)


def test_bar_to_ersatz():
    sp = Spectrum.of([0, 2], 0, 2)
    b = Barcode(sp, (Bar.of(0, 2),))
    empty = Barcode(sp, ())
    d, matching = bottleneck_distance(b, empty)
    assert d == rational(1)
    assert matching.pairs == ((0, None),)


def test_infinite_bar_against_empty_is_infinite():
    sp = Spectrum.of([0], 0, 1)
    b = Barcode(sp, (Bar(rational(0), POS_INF, 0),))
    d, matching = bottleneck_distance(b, Barcode(sp, ()))
    assert d == POS_INF and matching is None


def test_mixed_example():
    sp = Spectrum.of([0, 1, 2], 0, 2)
    left = Barcode(sp, (Bar.of(0, 2), Bar(rational(0), POS_INF, 0)))
    right = Barcode(sp, (Bar.of(1, 2), Bar(rational(1), POS_INF, 0)))
    d, _ = bottleneck_distance(left, right)
    assert d == rational(1)


def test_agrees_with_exhaustive_oracle():
    rng = random.Random(17)
    for _ in range(120):
        b1 = random_barcode(rng, max_bars=3, max_points=4)
        b2 = random_barcode(rng, max_bars=3, max_points=4)
        fast, matching = bottleneck_distance(b1, b2)
        slow = exhaustive_bottleneck(b1, b2)
        assert fast == slow
        if matching is not None:
            # the witness matching realizes the reported cost
            worst = ZERO
            seen_l, seen_r = set(), set()
            for li, rj in matching.pairs:
                if li is not None:
                    assert li not in seen_l
                    seen_l.add(li)
                if rj is not None:
                    assert rj not in seen_r
                    seen_r.add(rj)
                if li is not None and rj is not None:
                    worst = max(worst, bar_cost(b1.bars[li], b2.bars[rj]))
                elif li is not None:
                    worst = max(worst, b1.bars[li].half_length())
                elif rj is not None:
                    worst = max(worst, b2.bars[rj].half_length())
            assert worst == fast
            assert seen_l == set(range(len(b1.bars)))
            assert seen_r == set(range(len(b2.bars)))


def test_graded_agrees_with_graded_oracle():
    rng = random.Random(18)
    for _ in range(60):
        b1 = random_barcode(rng, max_bars=3, max_points=4)
        b2 = random_barcode(rng, max_bars=3, max_points=4)
        fast, _ = bottleneck_distance(b1, b2, graded=True)
        slow = exhaustive_bottleneck(b1, b2, graded=True)
        assert fast == slow
        ungraded, _ = bottleneck_distance(b1, b2)
        assert not (fast < ungraded)


def test_symmetry_and_triangle():
    rng = random.Random(19)
    for _ in range(100):
        b1 = random_barcode(rng, max_bars=4, max_points=4)
        b2 = random_barcode(rng, max_bars=4, max_points=4)
        b3 = random_barcode(rng, max_bars=4, max_points=4)
        d12, _ = bottleneck_distance(b1, b2)
        d21, _ = bottleneck_distance(b2, b1)
        assert d12 == d21
        d13, _ = bottleneck_distance(b1, b3)
        d23, _ = bottleneck_distance(b2, b3)
        if d12.is_finite and d23.is_finite:
            assert not (d12 + d23 < d13)


def test_zero_distance_means_equal_bars():
    rng = random.Random(23)
    for _ in range(60):
        b1 = random_barcode(rng, max_bars=4, max_points=4)
        b2 = random_barcode(rng, max_bars=4, max_points=4)
        d, _ = bottleneck_distance(b1, b2)
        assert (d == ZERO) == b1.same_bars(b2)


def test_feasibility_monotone_and_search_consistent():
    rng = random.Random(29)
    for _ in range(40):
        b1 = random_barcode(rng, max_bars=4, max_points=4)
        b2 = random_barcode(rng, max_bars=4, max_points=4)
        d, _ = bottleneck_distance(b1, b2)
        grid = sorted({ZERO, rational(1, 2), rational(1), rational(2),
                       rational(4), rational(8), d} - {POS_INF})
        state = [matching_feasible(b1, b2, g) for g in grid]
        assert state == sorted(state)  # False... then True...
        if d.is_finite:
            for g, ok in zip(grid, state):
                assert ok == (not (g < d))


# -- interleavings ----------------------------------------------------------


def interval_module(spectrum, bars):
    return module_from_barcode(Barcode(spectrum, bars))


def test_interleaving_identity():
    sp = Spectrum.of([0, 1, 2, 3], 0, 3)
    m = interval_module(sp, (Bar.of(0, 2),))
    assert interleaving_distance_bruteforce(m, m) == ZERO
    cert = find_interleaving(m, m, ZERO)
    assert cert is not None and verify_interleaving(cert, m, m) == []


def test_interleaving_shifted_intervals():
    sp = Spectrum.of([0, 1, 2, 3], 0, 3)
    m1 = interval_module(sp, (Bar.of(0, 2),))
    m2 = interval_module(sp, (Bar.of(1, 3),))
    assert interleaving_distance_bruteforce(m1, m2) == rational(1)


def test_interleaving_against_empty():
    sp = Spectrum.of([0, 1, 2, 3], 0, 3)
    m1 = interval_module(sp, (Bar.of(0, 2),))
    m0 = interval_module(sp, ())
    assert interleaving_distance_bruteforce(m1, m0) == rational(1)


def test_interleaving_requires_shared_horizon():
    m1 = interval_module(Spectrum.of([1], 0, 2), ())
    m2 = interval_module(Spectrum.of([1], 0, 3), ())
    with pytest.raises(ValueError):
        interleaving_distance_bruteforce(m1, m2)


def test_interleaving_dimension_bound():
    sp = Spectrum.of([], 0, 1)
    big = SampledModule(sp, (rational(1, 2),), ((5, 0),), ())
    small = SampledModule(sp, (rational(1, 2),), ((0, 0),), ())
    with pytest.raises(TooLargeError):
        interleaving_distance_bruteforce(big, small)


def test_interleaving_feasibility_monotone():
    rng = random.Random(31)
    for _ in range(25):
        sp = random_spectrum(rng, max_points=3)
        m1 = random_module(rng, max_dim=2, spectrum=sp)
        m2 = random_module(rng, max_dim=2, spectrum=sp)
        grid = interleaving_candidates(m1, m2)
        state = [find_interleaving(m1, m2, g) is not None for g in grid]
        assert state == sorted(state)


def test_isometry_on_random_pairs():
    rng = random.Random(37)
    for _ in range(60):
        sp = random_spectrum(rng, max_points=4)
        m1 = random_module(rng, max_dim=2, spectrum=sp)
        m2 = random_module(rng, max_dim=2, spectrum=sp)
        graded, _ = bottleneck_distance(decompose(m1), decompose(m2), graded=True)
        assert interleaving_distance_bruteforce(m1, m2) == graded


def test_search_certificates_verify():
    rng = random.Random(41)
    for _ in range(30):
        sp = random_spectrum(rng, max_points=3)
        m1 = random_module(rng, max_dim=2, spectrum=sp)
        m2 = random_module(rng, max_dim=2, spectrum=sp)
        d = interleaving_distance_bruteforce(m1, m2)
        if not d.is_finite:
            continue
        cert = find_interleaving(m1, m2, d)
        assert cert is not None
        assert verify_interleaving(cert, m1, m2) == []


def test_zero_cert_between_constant_modules_fails():
    sp = Spectrum.of([1], 0, 2)
    m = interval_module(sp, (Bar(NEG_INF, POS_INF, 0),))
    zero = Gf2Matrix.zeros(1, 1)
    none = Gf2Matrix.identity(0)
    cert = InterleavingCertificate(
        ZERO,
        tuple((zero, none) for _ in range(2)),
        tuple((zero, none) for _ in range(2)))
    issues = verify_interleaving(cert, m, m)
    assert issues and all("2-delta" in i for i in issues)


def test_certificate_shape_mismatch():
    sp = Spectrum.of([1], 0, 2)
    m = interval_module(sp, (Bar(NEG_INF, POS_INF, 0),))
    cert = InterleavingCertificate(
        ZERO,
        tuple((Gf2Matrix.identity(2), Gf2Matrix.identity(0)) for _ in range(2)),
        tuple((Gf2Matrix.identity(1), Gf2Matrix.identity(0)) for _ in range(2)))
    with pytest.raises(ShapeMismatchError):
        verify_interleaving(cert, m, m)
