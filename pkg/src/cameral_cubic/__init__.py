"""Exact evaluation of the cubic form attached to families of type A
spectral models, localized at branch points of the cover.

The library computes the same trilinear form four independent ways
(pantev, ks, symmetric, sl2) in exact rational arithmetic and ships the
verification machinery that checks them against each other.
"""

from .cover import (
    BranchPoint,
    CoverModel,
    IrrationalBranchPointError,
    NonSimpleBranchError,
    SheetExpansion,
    base_poly,
    build_cover,
)
from .cubic import (
    EVALUATORS,
    CubicCheck,
    CubicReport,
    CubicTensor,
    CubicValue,
    cubic_tensor,
    ks_pairing_eval,
    pantev_eval,
    sl2_eval,
    symmetric_eval,
    trace_pair,
    verify_identities,
)
from .deform import (
    TangentVector,
    discriminant_ratio,
    discriminant_ratio_via_roots,
    ks_cocycle_local,
    ks_field,
    sheet_variation,
)
from .poly import Poly, char_discriminant, poly_gcd, rational_roots, resultant, squarefree_part
from .rootsys import (
    CartanVector,
    RootSystem,
    build_root_system,
    discriminant_h,
    pairing,
    trace_form,
    weyl_reflect,
)
from .scalars import (
    DualNumber,
    MixedRadicandError,
    QuadExt,
    RationalityError,
    format_fraction,
    parse_fraction,
    rational_sqrt,
    to_rational,
)
from .series import DEFAULT_ORDER, LocalDifferential, TruncationError, TruncSeries

__version__ = "0.1.0"

__all__ = [
    "BranchPoint",
    "CartanVector",
    "CoverModel",
    "CubicCheck",
    "CubicReport",
    "CubicTensor",
    "CubicValue",
    "DEFAULT_ORDER",
    "DualNumber",
    "EVALUATORS",
    "IrrationalBranchPointError",
    "LocalDifferential",
    "MixedRadicandError",
    "NonSimpleBranchError",
    "Poly",
    "QuadExt",
    "RationalityError",
    "RootSystem",
    "SheetExpansion",
    "TangentVector",
    "TruncSeries",
    "TruncationError",
    "base_poly",
    "build_cover",
    "build_root_system",
    "char_discriminant",
    "cubic_tensor",
    "discriminant_h",
    "discriminant_ratio",
    "discriminant_ratio_via_roots",
    "format_fraction",
    "ks_cocycle_local",
    "ks_field",
    "ks_pairing_eval",
    "pairing",
    "pantev_eval",
    "parse_fraction",
    "poly_gcd",
    "rational_roots",
    "rational_sqrt",
    "resultant",
    "sheet_variation",
    "sl2_eval",
    "squarefree_part",
    "symmetric_eval",
    "to_rational",
    "trace_form",
    "trace_pair",
    "verify_identities",
    "weyl_reflect",
]
