import random

import pytest

from contact_barcodes.errors import EmptyHorizonError, IndexOutOfRangeError, NonUniqueSnapError
from contact_barcodes.gf2 import Gf2Matrix
from contact_barcodes.oracles import brute_force_decompose
from contact_barcodes.persistence import (
    Bar,
    Barcode,
    SampledModule,
    Spectrum,
    _snap_point,
    decompose,
    module_from_barcode,
    rank_invariant,
    validate_module,
)
from contact_barcodes.random_instances import random_barcode, random_module
from contact_barcodes.scalar import NEG_INF, POS_INF, ZERO, rational


def ident(n):
    return Gf2Matrix.identity(n)


def test_spectrum_invariants():
    with pytest.raises(ValueError):
        Spectrum.of([1, 1], 0, 2)          # duplicates
    with pytest.raises(ValueError):
        Spectrum.of([3], 0, 2)             # outside horizon
    with pytest.raises(ValueError):
        Spectrum.of([], 2, 1)              # empty window
    sp = Spectrum.of([1, 2], 0, 3)
    assert rational(1) in sp and rational(3, 2) not in sp


def test_bar_invariants():
    with pytest.raises(ValueError):
        Bar.of(2, 1)
    with pytest.raises(ValueError):
        Bar(POS_INF, POS_INF, 0)
    with pytest.raises(ValueError):
        Bar.of(0, 1, parity=2)
    b = Bar.of(0, 1)
    assert b.contains(rational(1, 2))
    assert not b.contains(ZERO) and not b.contains(rational(1))  # strict
    assert Bar.of(0, 1, truncated=True) == Bar.of(0, 1)  # flag is metadata


def test_barcode_requires_spectral_endpoints():
    sp = Spectrum.of([0, 1], 0, 1)
    with pytest.raises(ValueError):
        Barcode(sp, (Bar.of(0, rational(1, 2)),))
    code = Barcode(sp, (Bar.of(0, 1), Bar(NEG_INF, POS_INF, 1)))
    assert code.graded_dim_at(rational(1, 2)) == (1, 1)


def test_validate_trivial_cases():
    sp = Spectrum.of([], 0, 1)
    one = SampledModule(sp, (rational(1, 2),), ((1, 0),), ())
    assert validate_module(one) == []

    sp2 = Spectrum.of([], 0, 2)
    zero_map = SampledModule(
        sp2, (rational(1, 2), rational(3, 2)), ((1, 0), (1, 0)),
        ((Gf2Matrix.zeros(1, 1), ident(0)),))
    issues = validate_module(zero_map)
    assert len(issues) == 1 and "not invertible" in issues[0]


def test_validate_flags_collisions_and_shapes():
    sp = Spectrum.of([1], 0, 2)
    collide = SampledModule(sp, (rational(1), rational(3, 2)),
                            ((0, 0), (0, 0)), ((ident(0), ident(0)),))
    assert any("collides" in i for i in validate_module(collide))
    bad_shape = SampledModule(sp, (rational(1, 2), rational(3, 2)),
                              ((1, 0), (1, 0)), ((ident(2), ident(0)),))
    assert any("shape" in i for i in validate_module(bad_shape))
    unstraddled = SampledModule(sp, (rational(5, 4), rational(3, 2)),
                                ((0, 0), (0, 0)), ((ident(0), ident(0)),))
    assert any("straddled" in i for i in validate_module(unstraddled))


def test_validator_passes_generator_output():
    rng = random.Random(4)
    for _ in range(50):
        b = random_barcode(rng, max_bars=6, max_points=5)
        m = module_from_barcode(b, grid_density_hint=rng.choice((1, 2)))
        assert validate_module(m) == []


def test_decompose_constant_module():
    sp = Spectrum.of([1], 0, 2)
    m = SampledModule(sp, (rational(1, 2), rational(3, 2)),
                      ((1, 0), (1, 0)), ((ident(1), ident(0)),))
    code = decompose(m)
    assert [(b.birth, b.death, b.parity) for b in code.bars] == \
        [(NEG_INF, POS_INF, 0)]


def test_decompose_zero_map_splits():
    sp = Spectrum.of([1], 0, 2)
    m = SampledModule(sp, (rational(1, 2), rational(3, 2)),
                      ((1, 0), (1, 0)), ((Gf2Matrix.zeros(1, 1), ident(0)),))
    code = decompose(m)
    assert {(str(b.birth), str(b.death)) for b in code.bars} == \
        {("-inf", "1/1"), ("1/1", "inf")}
    assert all(b.parity == 0 for b in code.bars)


def test_decompose_rejects_invalid():
    sp = Spectrum.of([], 0, 2)
    m = SampledModule(sp, (rational(1, 2), rational(3, 2)), ((1, 0), (1, 0)),
                      ((Gf2Matrix.zeros(1, 1), ident(0)),))
    with pytest.raises(ValueError):
        decompose(m)


def test_snap_point_requires_unique_point():
    sp = Spectrum.of([1, 2], 0, 3)
    m = SampledModule(sp, (rational(1, 2), rational(5, 2)),
                      ((1, 0), (1, 0)), ((ident(1), ident(0)),))
    with pytest.raises(NonUniqueSnapError):
        _snap_point(m, 0)


def test_module_from_barcode_trivial():
    empty = Barcode(Spectrum.of([0, 1, 2], 0, 2), ())
    m = module_from_barcode(empty)
    assert all(d == (0, 0) for d in m.dims)

    const = Barcode(Spectrum.of([1], 0, 2), (Bar(NEG_INF, POS_INF, 0),))
    m2 = module_from_barcode(const)
    assert all(d == (1, 0) for d in m2.dims)
    assert all(pair[0] == ident(1) for pair in m2.maps)


def test_module_from_barcode_dims_profile():
    code = Barcode(Spectrum.of([0, 1, 2], 0, 2), (Bar.of(0, 1), Bar.of(0, 2)))
    m = module_from_barcode(code)
    assert [d[0] for d in m.dims] == [0, 2, 1, 0]
    assert [d[1] for d in m.dims] == [0, 0, 0, 0]


def test_module_from_barcode_empty_horizon():
    degenerate = Barcode(Spectrum.of([1], 1, 1), (Bar(NEG_INF, rational(1), 0),))
    with pytest.raises(EmptyHorizonError):
        module_from_barcode(degenerate)
    with pytest.raises(ValueError):
        module_from_barcode(Barcode(Spectrum.of([0, 1], 0, 1), ()), 0)


def test_rank_invariant_identity_and_monotone():
    sp = Spectrum.of([1, 2], 0, 3)
    m = SampledModule(
        sp, (rational(1, 2), rational(3, 2), rational(5, 2)),
        ((2, 1), (2, 1), (2, 1)),
        ((ident(2), ident(1)), (ident(2), ident(1))))
    for j in range(3):
        assert rank_invariant(m, 0, j) == (2, 1)
    with pytest.raises(IndexOutOfRangeError):
        rank_invariant(m, 0, 3)
    rng = random.Random(6)
    for _ in range(25):
        mod = random_module(rng, max_points=3, max_dim=3)
        k = mod.n_samples
        for i in range(k):
            prev = None
            for j in range(i, k):
                r = rank_invariant(mod, i, j)
                assert rank_invariant(mod, i, i) == mod.dims[i]
                if prev is not None:
                    assert r[0] <= prev[0] and r[1] <= prev[1]
                prev = r


def test_rank_across_zero_map_is_zero():
    sp = Spectrum.of([1], 0, 2)
    m = SampledModule(sp, (rational(1, 2), rational(3, 2)),
                      ((1, 0), (1, 0)), ((Gf2Matrix.zeros(1, 1), ident(0)),))
    assert rank_invariant(m, 0, 1) == (0, 0)


def test_round_trip_random_barcodes():
    rng = random.Random(13)
    for _ in range(150):
        b = random_barcode(rng, max_bars=8, max_points=6)
        m = module_from_barcode(b, grid_density_hint=rng.choice((1, 1, 2)))
        assert decompose(m).same_bars(b)


def test_round_trip_boundary_endpoints():
    # endpoints sitting exactly on the horizon boundary still round-trip
    sp = Spectrum.of([0, 1, 2], 0, 2)
    bars = (Bar.of(0, 2), Bar.of(0, 1, 1), Bar.of(1, 2), Bar(rational(2), POS_INF, 1))
    b = Barcode(sp, bars)
    assert decompose(module_from_barcode(b)).same_bars(b)


def test_decompose_counts_match_dims():
    rng = random.Random(21)
    for _ in range(80):
        m = random_module(rng, max_points=4, max_dim=3,
                          density=rng.choice((1, 2)))
        code = decompose(m)
        for idx, s in enumerate(m.samples):
            assert code.graded_dim_at(s) == m.dims[idx]


def test_decompose_agrees_with_basis_enumeration():
    rng = random.Random(34)
    done = 0
    while done < 60:
        m = random_module(rng, max_points=3, max_dim=2)
        if sum(d0 + d1 for d0, d1 in m.dims) > 4:
            continue
        assert decompose(m).same_bars(brute_force_decompose(m))
        done += 1


def test_endpoint_spectrality_of_decompositions():
    rng = random.Random(55)
    for _ in range(60):
        m = random_module(rng, max_points=4, max_dim=2)
        code = decompose(m)
        points = set(m.spectrum.points)
        for bar in code.bars:
            for end in (bar.birth, bar.death):
                assert (not end.is_finite) or end in points


def test_parity_never_mixes():
    rng = random.Random(89)
    for _ in range(40):
        m = random_module(rng, max_points=3, max_dim=3)
        code = decompose(m)
        for idx, s in enumerate(m.samples):
            for parity in (0, 1):
                count = sum(1 for b in code.bars
                            if b.parity == parity and b.contains(s))
                assert count == m.dims[idx][parity]
