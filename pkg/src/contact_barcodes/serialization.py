"""JSON round-tripping for barcodes and sampled modules.

Scalars serialize as exact strings ("3/2", "-inf", "inf"); GF(2) matrices
as arrays of 0/1 row arrays.  Every document carries the schema version
field "cpv": 1.
"""

from __future__ import annotations

import json
from typing import Any, Dict

from .gf2 import Gf2Matrix
from .persistence import Bar, Barcode, SampledModule, Spectrum
from .scalar import Scalar

SCHEMA_VERSION = 1


def scalar_to_str(s: Scalar) -> str:
    return str(s)


def scalar_from_str(text: str) -> Scalar:
    return Scalar.parse(text)


def spectrum_to_dict(sp: Spectrum) -> Dict[str, Any]:
    return {
        "points": [str(p) for p in sp.points],
        "horizon": [str(sp.lo), str(sp.hi)],
    }


def spectrum_from_dict(d: Dict[str, Any]) -> Spectrum:
    lo, hi = d["horizon"]
    return Spectrum(
        tuple(Scalar.parse(p) for p in d["points"]),
        Scalar.parse(lo),
        Scalar.parse(hi),
    )


def bar_to_dict(b: Bar) -> Dict[str, Any]:
    d: Dict[str, Any] = {
        "birth": str(b.birth),
        "death": str(b.death),
        "parity": b.parity,
    }
    if b.truncated:
        d["truncated"] = True
    return d


def bar_from_dict(d: Dict[str, Any]) -> Bar:
    return Bar(
        Scalar.parse(d["birth"]),
        Scalar.parse(d["death"]),
        int(d["parity"]),
        bool(d.get("truncated", False)),
    )


def barcode_to_dict(b: Barcode) -> Dict[str, Any]:
    return {
        "cpv": SCHEMA_VERSION,
        "spectrum": spectrum_to_dict(b.spectrum),
        "bars": [bar_to_dict(bar) for bar in b.bars],
    }


def barcode_from_dict(d: Dict[str, Any]) -> Barcode:
    _check_version(d)
    return Barcode(
        spectrum_from_dict(d["spectrum"]),
        tuple(bar_from_dict(bd) for bd in d["bars"]),
    )


def module_to_dict(m: SampledModule) -> Dict[str, Any]:
    return {
        "cpv": SCHEMA_VERSION,
        "spectrum": spectrum_to_dict(m.spectrum),
        "samples": [str(s) for s in m.samples],
        "dims": [list(d) for d in m.dims],
        "maps": [[mat.to_rows() for mat in pair] for pair in m.maps],
    }


def module_from_dict(d: Dict[str, Any]) -> SampledModule:
    _check_version(d)
    dims = tuple((int(a), int(b)) for a, b in d["dims"])
    maps = []
    for i, pair in enumerate(d["maps"]):
        mats = []
        for parity in (0, 1):
            ncols = dims[i][parity]
            mats.append(Gf2Matrix.from_rows(pair[parity], ncols=ncols))
        maps.append((mats[0], mats[1]))
    return SampledModule(
        spectrum_from_dict(d["spectrum"]),
        tuple(Scalar.parse(s) for s in d["samples"]),
        dims,
        tuple(maps),
    )


def loads(text: str):
    """Parse a barcode or module document, dispatching on its keys."""
    d = json.loads(text)
    if not isinstance(d, dict):
        raise ValueError("expected a JSON object")
    if "bars" in d:
        return barcode_from_dict(d)
    if "samples" in d:
        return module_from_dict(d)
    raise ValueError("document is neither a barcode nor a module")


def dumps(obj) -> str:
    if isinstance(obj, Barcode):
        d = barcode_to_dict(obj)
    elif isinstance(obj, SampledModule):
        d = module_to_dict(obj)
    else:
        d = obj
    return json.dumps(d, indent=2) + "\n"


def _check_version(d: Dict[str, Any]) -> None:
    if d.get("cpv") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version: {d.get('cpv')!r}")
