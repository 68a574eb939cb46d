"""Splitting analysis for even octavic hyperelliptic curves.

The package walks the chain from a curve Y^2 = X^8 + a X^6 + b X^4 + c X^2 + 1
to its two degree 2 quotients, classifies the reduced automorphism group from
the dihedral invariant triple, tests membership in the isomorphic-subcover
locus, and computes the j-invariants of the degree 4 elliptic subfields both
in closed form and through a controlled-precision numeric layer.
"""

from .curves import (
    EllipticModel,
    Genus2Curve,
    Genus3Curve,
    UVPoint,
    genus2_from_uv,
    make_genus3,
    subcovers,
)
from .errors import (
    CalibrationFailure,
    DegenerateTransform,
    DegenerateUV,
    DegreeTooLow,
    DenominatorZero,
    J2Vanishes,
    NonConvergence,
    NotACurve,
    PZero,
    SingularCubic,
    SingularCurve,
    SingularQuartic,
    Split244Error,
    UnknownGroup,
    ZeroPolynomial,
)
from .exact import QuadExtValue, TriPoly, UniPoly, quadext, rat, rat_str
from .invariants import (
    AbsoluteInvariants2,
    DihedralPoint,
    absolute_invariants,
    d4_orbit,
    delta_abc,
    delta_s,
    dihedral_invariants,
    invariant_scale,
    j2_invariant,
    j_cubic,
    j_quartic,
)
from .loci import (
    AutGroupLabel,
    LocusVerdict,
    SplitType,
    classify_aut,
    frakT_components,
    locus_T,
    split_type,
    trichotomy,
)
from .subfields import (
    JPair,
    SubfieldConditions,
    discrepancy_diagnostic,
    full_pipeline,
    isomorphic_subfields,
    j12_quadratic,
    j12_roots,
    j_E,
    point_pipeline,
    uv_for_Z23,
    uv_from_j,
)

__version__ = "0.1.0"

__all__ = [
    "EllipticModel",
    "Genus2Curve",
    "Genus3Curve",
    "UVPoint",
    "genus2_from_uv",
    "make_genus3",
    "subcovers",
    "CalibrationFailure",
    "DegenerateTransform",
    "DegenerateUV",
    "DegreeTooLow",
    "DenominatorZero",
    "J2Vanishes",
    "NonConvergence",
    "NotACurve",
    "PZero",
    "SingularCubic",
    "SingularCurve",
    "SingularQuartic",
    "Split244Error",
    "UnknownGroup",
    "ZeroPolynomial",
    "QuadExtValue",
    "TriPoly",
    "UniPoly",
    "quadext",
    "rat",
    "rat_str",
    "AbsoluteInvariants2",
    "DihedralPoint",
    "absolute_invariants",
    "d4_orbit",
    "delta_abc",
    "delta_s",
    "dihedral_invariants",
    "invariant_scale",
    "j2_invariant",
    "j_cubic",
    "j_quartic",
    "AutGroupLabel",
    "LocusVerdict",
    "SplitType",
    "classify_aut",
    "frakT_components",
    "locus_T",
    "split_type",
    "trichotomy",
    "JPair",
    "SubfieldConditions",
    "discrepancy_diagnostic",
    "full_pipeline",
    "isomorphic_subfields",
    "j12_quadratic",
    "j12_roots",
    "j_E",
    "point_pipeline",
    "uv_for_Z23",
    "uv_from_j",
    "__version__",
]
