import json
import random

import pytest

from contact_barcodes.persistence import Bar, Barcode, Spectrum, module_from_barcode
from contact_barcodes.random_instances import random_barcode, random_module
from contact_barcodes.scalar import NEG_INF, POS_INF, rational
from contact_barcodes.serialization import (
    barcode_from_dict,
    barcode_to_dict,
    dumps,
    loads,
    module_from_dict,
    module_to_dict,
)


def test_barcode_round_trip_random():
    rng = random.Random(1)
    for _ in range(50):
        b = random_barcode(rng)
        again = loads(dumps(b))
        assert again == b
        assert again.spectrum == b.spectrum


def test_module_round_trip_random():
    rng = random.Random(2)
    for _ in range(50):
        m = random_module(rng, max_points=4, max_dim=3)
        again = loads(dumps(m))
        assert again == m


def test_scalars_serialize_exactly():
    sp = Spectrum.of(["1/3"], 0, 1)
    b = Barcode(sp, (Bar(NEG_INF, rational(1, 3), 1),))
    d = barcode_to_dict(b)
    assert d["cpv"] == 1
    assert d["bars"][0]["birth"] == "-inf"
    assert d["bars"][0]["death"] == "1/3"
    assert d["spectrum"]["horizon"] == ["0/1", "1/1"]


def test_truncated_flag_round_trips():
    sp = Spectrum.of([0, 1], 0, 1)
    b = Barcode(sp, (Bar.of(0, 1, truncated=True),))
    d = barcode_to_dict(b)
    assert d["bars"][0]["truncated"] is True
    again = barcode_from_dict(d)
    assert again.bars[0].truncated
    plain = barcode_to_dict(Barcode(sp, (Bar.of(0, 1),)))
    assert "truncated" not in plain["bars"][0]


def test_loads_dispatches_on_keys():
    sp = Spectrum.of([1], 0, 2)
    b = Barcode(sp, (Bar.of(1, 1),))
    m = module_from_barcode(Barcode(sp, ()))
    assert isinstance(loads(dumps(b)), Barcode)
    assert type(loads(dumps(m))).__name__ == "SampledModule"
    with pytest.raises(ValueError):
        loads("[1, 2]")
    with pytest.raises(ValueError):
        loads('{"cpv": 1}')


def test_version_is_checked():
    sp = Spectrum.of([1], 0, 2)
    d = barcode_to_dict(Barcode(sp, ()))
    d["cpv"] = 2
    with pytest.raises(ValueError):
        barcode_from_dict(d)
    d2 = module_to_dict(module_from_barcode(Barcode(sp, ())))
    del d2["cpv"]
    with pytest.raises(ValueError):
        module_from_dict(d2)


def test_dumps_is_deterministic():
    rng = random.Random(3)
    b = random_barcode(rng)
    assert dumps(b) == dumps(loads(dumps(b)))


def test_matrix_rows_are_plain_arrays():
    sp = Spectrum.of([1], 0, 2)
    code = Barcode(sp, (Bar(NEG_INF, POS_INF, 0), Bar(NEG_INF, POS_INF, 0)))
    m = module_from_barcode(code)
    d = module_to_dict(m)
    assert d["maps"][0][0] == [[1, 0], [0, 1]]
    assert d["dims"] == [[2, 0], [2, 0]]
    text = dumps(m)
    assert json.loads(text)["samples"] == [str(s) for s in m.samples]
