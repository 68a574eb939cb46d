"""Locus membership, automorphism classification, splitting shapes.

Everything here consumes a dihedral invariant point.  The automorphism
classifier evaluates the exact polynomial conditions for each stratum with
extra symmetry; the locus test evaluates the three-factor product

    (2 s2^2 - s4) (2 s2^2 + s4) F1(s2, s3, s4)

whose vanishing characterizes curves whose Jacobian picks up a second pair
of degree 4 elliptic subcovers; and the component test evaluates the five
plane curves g1..g5 cutting out the stratum where those two subcovers are
isomorphic.  The splitting-type table maps (automorphism group,
hyperelliptic or not) to the shape of the Jacobian decomposition.

F1 below is one of two independent transcriptions of the same 116-term
polynomial; the test suite keys the other from scratch in a different
encoding and insists they match term for term.
"""
from __future__ import annotations

import re as _re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import NotACurve, UnknownGroup
from .exact import TriPoly, rat_str
from .invariants import DihedralPoint, delta_s, invariant_scale

# Transcription pass 1 (dictionary encoding).  116 terms, degrees 13, 8, 6
# in s2, s3, s4.  Exponent triples are (s2, s3, s4).
F1_POLY = TriPoly({
    (13, 0, 0): 1024,
    (12, 1, 0): -256,
    (12, 0, 0): 1536,
    (11, 1, 0): -8448,
    (11, 0, 1): 2560,
    (10, 2, 0): 1664,
    (10, 1, 1): -512,
    (9, 3, 0): 64,
    (11, 0, 0): 33600,
    (10, 1, 0): -48720,
    (10, 0, 1): 10752,
    (9, 2, 0): 37696,
    (9, 1, 1): -20928,
    (9, 0, 2): 2560,
    (8, 3, 0): -4448,
    (8, 2, 1): 3008,
    (8, 1, 2): -384,
    (7, 4, 0): -432,
    (7, 3, 1): 96,
    (6, 5, 0): -4,
    (10, 0, 0): 20000,
    (9, 1, 0): -140000,
    (9, 0, 1): 84000,
    (8, 2, 0): 172600,
    (8, 1, 1): -139200,
    (8, 0, 2): 21120,
    (7, 3, 0): -71680,
    (7, 2, 1): 78368,
    (7, 1, 2): -20736,
    (7, 0, 3): 1280,
    (6, 4, 0): 2288,
    (6, 3, 1): -6200,
    (6, 2, 2): 2016,
    (6, 1, 3): -128,
    (5, 5, 0): 1256,
    (5, 4, 1): -568,
    (5, 3, 2): 48,
    (4, 6, 0): 26,
    (4, 5, 1): -4,
    (8, 0, 1): 50000,
    (7, 2, 0): 80000,
    (7, 1, 1): -280000,
    (7, 0, 2): 84000,
    (6, 3, 0): -140000,
    (6, 2, 1): 345500,
    (6, 1, 2): -156600,
    (6, 0, 3): 19200,
    (5, 4, 0): 30000,
    (5, 3, 1): -107520,
    (5, 2, 2): 61008,
    (5, 1, 3): -10272,
    (5, 0, 4): 320,
    (4, 5, 0): 8060,
    (4, 4, 1): -204,
    (4, 3, 2): -2628,
    (4, 2, 3): 592,
    (4, 1, 4): -16,
    (3, 6, 0): -1464,
    (3, 5, 1): 1256,
    (3, 4, 2): -244,
    (3, 3, 3): 8,
    (2, 7, 0): -72,
    (2, 6, 1): 21,
    (2, 5, 2): -1,
    (6, 0, 2): 50000,
    (5, 2, 1): 120000,
    (5, 1, 2): -210000,
    (5, 0, 3): 42000,
    (4, 4, 0): 40000,
    (4, 3, 1): -210000,
    (4, 2, 2): 259350,
    (4, 1, 3): -87000,
    (4, 0, 4): 9120,
    (3, 4, 1): 30000,
    (3, 3, 2): -53760,
    (3, 2, 3): 21080,
    (3, 1, 4): -2544,
    (3, 0, 5): 32,
    (2, 6, 0): -3600,
    (2, 5, 1): 8060,
    (2, 4, 2): -1920,
    (2, 3, 3): -202,
    (2, 2, 4): 64,
    (1, 6, 1): -732,
    (1, 5, 2): 314,
    (1, 4, 3): -34,
    (0, 8, 0): 81,
    (0, 7, 1): -36,
    (0, 6, 2): 4,
    (4, 0, 3): 25000,
    (3, 2, 2): 60000,
    (3, 1, 3): -70000,
    (3, 0, 4): 10500,
    (2, 4, 1): 40000,
    (2, 3, 2): -105000,
    (2, 2, 3): 86525,
    (2, 1, 4): -23925,
    (2, 0, 5): 2208,
    (1, 4, 2): 7500,
    (1, 3, 3): -8960,
    (1, 2, 4): 2728,
    (1, 1, 5): -252,
    (0, 6, 1): -1800,
    (0, 5, 2): 2015,
    (0, 4, 3): -623,
    (0, 3, 4): 59,
    (2, 0, 4): 6250,
    (1, 2, 3): 10000,
    (1, 1, 4): -8750,
    (1, 0, 5): 1050,
    (0, 4, 2): 10000,
    (0, 3, 3): -17500,
    (0, 2, 4): 10825,
    (0, 1, 5): -2610,
    (0, 0, 6): 216,
    (0, 0, 5): 625,
})

# The five plane components (in s2 and s4 only) of the stratum where the two
# degree 4 elliptic subcovers are isomorphic.
G_COMPONENTS: dict[str, TriPoly] = {
    "g1": TriPoly({
        (0, 0, 1): 1,
        (2, 0, 0): 2,
        (1, 0, 0): -100,
        (0, 0, 0): 625,
    }),
    "g2": TriPoly({
        (0, 0, 1): -27,
        (3, 0, 0): 1,
        (2, 0, 0): 6,
        (1, 0, 0): 768,
        (0, 0, 0): -4096,
    }),
    "g3": TriPoly({
        (0, 0, 0): -16777216,
        (1, 0, 0): 5242880,
        (2, 0, 0): -450560,
        (3, 0, 0): 7680,
        (4, 0, 0): -340,
        (5, 0, 0): 8,
        (0, 0, 1): -102400,
        (1, 0, 1): 16640,
        (2, 0, 1): -220,
        (3, 0, 1): 4,
        (0, 0, 2): -125,
    }),
    "g4": TriPoly({
        (0, 0, 0): 3515625,
        (1, 0, 0): -937500,
        (2, 0, 0): 62500,
        (4, 0, 0): 64,
        (0, 0, 1): 15000,
        (1, 0, 1): -2000,
    }),
    "g5": TriPoly({
        (0, 0, 0): 35153041,
        (0, 0, 1): -16173862,
        (0, 0, 2): 2926323,
        (1, 0, 0): 131244344,
        (4, 0, 0): -11788512,
        (2, 0, 0): 133698380,
        (0, 0, 3): 41050,
        (7, 0, 0): 1792,
        (3, 0, 2): 22764,
        (5, 0, 1): -21768,
        (6, 0, 0): 136952,
        (5, 0, 0): -134208,
        (3, 0, 0): 16762008,
        (2, 0, 2): -57934,
        (4, 0, 1): -111744,
        (1, 0, 2): -1040380,
        (3, 0, 1): 1987608,
        (2, 0, 1): 2559786,
        (1, 0, 1): -27622208,
        (7, 0, 1): -16,
        (6, 0, 1): -316,
        (5, 0, 2): 16,
        (3, 0, 3): -4,
        (2, 0, 3): -530,
        (1, 0, 3): -6180,
        (4, 0, 2): 685,
        (8, 0, 0): 132,
        (0, 0, 4): 125,
    }),
}


class AutGroupLabel(Enum):
    """Automorphism group of an even octavic curve, read off its dihedral
    invariant point.  Z2 never comes out of the classifier (members of the
    family always keep the full Klein four group); it exists so the
    splitting table can also speak about generic hyperelliptic curves."""

    Z2 = "Z2"
    Z2xZ2 = "Z2xZ2"
    Z2_CUBED = "Z2^3"
    Z2xZ4 = "Z2xZ4"
    Z2xD8 = "Z2xD8"
    D12 = "D12"
    OTHER = "other/bigger"


class SplitType(Enum):
    """Shape of the Jacobian decomposition up to isogeny."""

    E_X_JAC2 = "ExJac2"
    E1_E2_E3 = "E1xE2xE3"
    E1SQ_E2 = "E1^2xE2"
    E_CUBED = "E^3"


@dataclass(frozen=True)
class LocusVerdict:
    """Membership report for the three-factor locus equation.

    components lists the vanishing factors by name: T1 for 2 s2^2 - s4,
    T2 for 2 s2^2 + s4, T3 for F1.  in_T holds exactly when the set is
    nonempty.  F1_value is the exact value of F1 at the point, zero or not.
    """

    in_T: bool
    components: frozenset[str]
    F1_value: Fraction

    def to_json(self) -> dict:
        return {
            "in_T": self.in_T,
            "components": sorted(self.components),
            "F1_value": rat_str(self.F1_value),
        }


def _curve_gate(p: DihedralPoint) -> None:
    # A vanishing 28-term discriminant normally means no nonsingular curve
    # sits over the point.  The one exception is the stratum s4 = -2 s2^2,
    # where the discriminant vanishes identically in s3 although honest
    # curves (with an order 4 automorphism) live there; those pass through.
    if delta_s(p) == 0 and invariant_scale(p) != 0:
        raise NotACurve(f"discriminant vanishes at {p.to_json()}")


def stratum_warnings(p: DihedralPoint) -> tuple[str, ...]:
    """Caveats attached to points on the s4 = -2 s2^2 stratum.

    There, the invariant triple forgets the middle octavic coefficient
    (every preimage has a^2 + c^2 = 0, which kills s3 regardless of b), and
    points with s3 != 0 are not hit by any coefficient triple at all.
    """
    if invariant_scale(p) != 0:
        return ()
    if p.s3 == 0:
        return ("degenerate stratum: middle coefficient not recoverable",)
    return ("point lies off the coefficient-triple image",)


def _d12_s3(s2: Fraction) -> Fraction:
    return Fraction(1, 75) * (9 * s2 - 224) * (s2 - 196)


def _d12_s4(s2: Fraction) -> Fraction:
    return (
        -Fraction(9, 125) * s2**3
        + Fraction(1962, 125) * s2 * s2
        - Fraction(840448, 1125) * s2
        + Fraction(9834496, 1125)
    )


def classify_aut(p: DihedralPoint) -> AutGroupLabel:
    """Automorphism group label of the curve over a dihedral point.

    The strata are polynomial conditions on (s2, s3, s4); when several hold
    at once the largest group wins, since the deeper stratum refines the
    shallower one.  Raises NotACurve when no nonsingular curve corresponds
    to the point (see _curve_gate for the one stratum exempted).
    """
    _curve_gate(p)
    if p.s2 == 0 and p.s4 == 0:
        return AutGroupLabel.Z2xD8
    if p.s3 == _d12_s3(p.s2) and p.s4 == _d12_s4(p.s2):
        return AutGroupLabel.D12
    if invariant_scale(p) == 0 and p.s3 == 0:
        return AutGroupLabel.Z2xZ4
    if p.s4 == 2 * p.s2 * p.s2:
        return AutGroupLabel.Z2_CUBED
    return AutGroupLabel.Z2xZ2


def locus_T(p: DihedralPoint) -> LocusVerdict:
    """Exact membership in the split locus, factor by factor."""
    _curve_gate(p)
    f1 = F1_POLY(p.s2, p.s3, p.s4)
    components = set()
    if 2 * p.s2 * p.s2 - p.s4 == 0:
        components.add("T1")
    if 2 * p.s2 * p.s2 + p.s4 == 0:
        components.add("T2")
    if f1 == 0:
        components.add("T3")
    return LocusVerdict(bool(components), frozenset(components), f1)


TRICHOTOMY_CASES = ("Z2^3-case", "Z2xZ4-case", "T3-case", "not-split")


def trichotomy(p: DihedralPoint) -> str:
    """Which of the three component cases a split point falls into.

    T1 carries the curves with three commuting involutions, T2 those with
    an order 4 automorphism, T3 the rest of the split locus.  Components
    are checked in that fixed order; a point on none is "not-split".
    """
    verdict = locus_T(p)
    if "T1" in verdict.components:
        return "Z2^3-case"
    if "T2" in verdict.components:
        return "Z2xZ4-case"
    if "T3" in verdict.components:
        return "T3-case"
    return "not-split"


def frakT_components(p: DihedralPoint) -> frozenset[str]:
    """Names of the vanishing g-components at (s2, s4).

    The five polynomials involve only s2 and s4; no gate applies, so this
    can probe arbitrary points of the invariant plane.
    """
    return frozenset(
        name for name, poly in G_COMPONENTS.items()
        if poly(p.s2, p.s3, p.s4) == 0
    )


def _normalize_group_name(label) -> str:
    if isinstance(label, AutGroupLabel):
        label = label.value
    s = str(label).lower().replace(" ", "").replace("-", "").replace("_", "")
    # The table's group names arrive in several spellings; fold cyclic C_n
    # into Z_n and normalize product symbols.
    s = s.replace("×", "x").replace("⋊", ":")
    s = _re.sub(r"c(\d)", r"z\1", s)
    return s

# Rows of the splitting-type table, keyed by normalized group name.
_HYPERELLIPTIC_ROWS = {
    "v4": SplitType.E_X_JAC2,
    "z2xz2": SplitType.E_X_JAC2,
    "z2xz4": SplitType.E_X_JAC2,
    "z2^3": SplitType.E1_E2_E3,
    "d12": SplitType.E1SQ_E2,
    "z2xs4": SplitType.E1SQ_E2,
    "order24": SplitType.E1SQ_E2,
    "order32": SplitType.E1SQ_E2,
}

_NONHYPERELLIPTIC_ROWS = {
    "z2": SplitType.E_X_JAC2,
    "v4": SplitType.E1_E2_E3,
    "z2xz2": SplitType.E1_E2_E3,
    "s3": SplitType.E1SQ_E2,
    "d8": SplitType.E1SQ_E2,
    "order16": SplitType.E1SQ_E2,
    "order48": SplitType.E1SQ_E2,
    "s4": SplitType.E_CUBED,
    "l3(2)": SplitType.E_CUBED,
    "z2^3:s3": SplitType.E_CUBED,
}


def split_type(label, hyperelliptic: bool) -> SplitType:
    """Shape of the Jacobian splitting for a given automorphism group.

    Accepts an AutGroupLabel or a table group name as a string (several
    spellings tolerated).  Raises UnknownGroup for groups without a table
    row; notably the hyperelliptic table has no row of order 16, so
    Z2xD8 has no defined shape here.
    """
    key = _normalize_group_name(label)
    table = _HYPERELLIPTIC_ROWS if hyperelliptic else _NONHYPERELLIPTIC_ROWS
    if key not in table:
        raise UnknownGroup(
            f"no splitting row for group {label!r} "
            f"({'hyperelliptic' if hyperelliptic else 'non-hyperelliptic'})"
        )
    return table[key]
