"""Exact persistence barcodes and contact invariants.

Core data: Scalar (exact rational with symbolic infinities), Spectrum,
Bar/Barcode, SampledModule over GF(2).  Operations: interval
decomposition, canonical module generation, bottleneck and brute-force
interleaving distances, ellipsoid barcodes with Conley-Zehnder grading,
and the derived invariants (spectral values, covering bounds on
translated points, boundary depth).
"""

from .scalar import NEG_INF, POS_INF, ZERO, Scalar, as_scalar, rational
from .gf2 import Gf2Matrix
from .persistence import (
    Bar,
    Barcode,
    SampledModule,
    Spectrum,
    decompose,
    module_from_barcode,
    rank_invariant,
    validate_module,
)
from .distances import (
    InterleavingCertificate,
    Matching,
    bottleneck_distance,
    find_interleaving,
    interleaving_distance_bruteforce,
    verify_interleaving,
)
from .ellipsoid import (
    CzIndex,
    EllipsoidParams,
    cz_index,
    ellipsoid_barcode,
    ellipsoid_spectrum,
    gaps_longer_than,
)
from .invariants import (
    LipschitzReport,
    PerturbationBall,
    ShClass,
    VanishingReport,
    bar_endpoint_set,
    boundary_depth,
    check_lipschitz,
    covering_number,
    perturb_barcode,
    spectral_invariant,
    translate_barcode,
    translated_point_lower_bound,
    vanishing_predicates,
)
from . import errors

__all__ = [
    "Scalar", "as_scalar", "rational", "ZERO", "POS_INF", "NEG_INF",
    "Gf2Matrix",
    "Spectrum", "Bar", "Barcode", "SampledModule",
    "validate_module", "decompose", "module_from_barcode", "rank_invariant",
    "Matching", "InterleavingCertificate", "bottleneck_distance",
    "interleaving_distance_bruteforce", "find_interleaving",
    "verify_interleaving",
    "EllipsoidParams", "CzIndex", "ellipsoid_spectrum", "cz_index",
    "ellipsoid_barcode", "gaps_longer_than",
    "ShClass", "PerturbationBall", "VanishingReport", "LipschitzReport",
    "spectral_invariant", "translate_barcode", "boundary_depth",
    "covering_number", "bar_endpoint_set", "translated_point_lower_bound",
    "vanishing_predicates", "perturb_barcode", "check_lipschitz",
    "errors",
]

__version__ = "0.1.0"
