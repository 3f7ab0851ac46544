#!/usr/bin/env python3
"""Emit barcodes and SVG diagrams for a small gallery of ellipsoids."""

import pathlib
import sys

from contact_barcodes import EllipsoidParams, ellipsoid_barcode
from contact_barcodes.serialization import dumps
from contact_barcodes.svg import barcode_svg

GALLERY = [
    ("round_sphere", ["1", "1"], "5"),
    ("squashed", ["1", "3/2"], "6"),
    ("three_axes", ["1", "2", "5"], "10"),
    ("near_sqrt2", ["1", "1393/985"], "20"),
]


def main() -> int:
    out_dir = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path("gallery")
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, axes, horizon in GALLERY:
        code = ellipsoid_barcode(EllipsoidParams.of(axes, horizon))
        (out_dir / f"{name}.json").write_text(dumps(code))
        (out_dir / f"{name}.svg").write_text(barcode_svg(code))
        print(f"{name}: {len(code.bars)} bars, "
              f"{len(code.spectrum.points)} spectrum points")
    return 0


if __name__ == "__main__":
    sys.exit(main())
