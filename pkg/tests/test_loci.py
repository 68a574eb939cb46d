"""Locus membership, automorphism classification, splitting shapes.

F1_REKEYED below is a from-scratch transcription of the printed 116-term
polynomial, entered line by line in source notation.  The package encoding
must match it term for term, and the canonical-text hash is frozen so any
later edit to either copy trips a test.
"""

import random
from fractions import Fraction as F

import pytest

from split244.errors import NotACurve, UnknownGroup
from split244.exact import poly_gcd, tripoly_from_text
from split244.invariants import DihedralPoint, delta_s, dihedral_invariants
from split244.loci import (
    F1_POLY,
    G_COMPONENTS,
    AutGroupLabel,
    SplitType,
    classify_aut,
    frakT_components,
    locus_T,
    split_type,
    stratum_warnings,
    trichotomy,
)

F1_SHA256 = "849e67366e497ac4b706bbce820f6653892faa05eb3159d9fdbe38cb8cd8ab33"

F1_REKEYED = tripoly_from_text(
    """
    1024*s2^13 - 256*s2^12*s3 + 1536*s2^12 - 8448*s2^11*s3 + 2560*s2^11*s4 + 1664*s2^10*s3^2
    - 512*s2^10*s3*s4 + 64*s2^9*s3^3 + 33600*s2^11 - 48720*s2^10*s3 + 10752*s2^10*s4 + 37696*s2^9*s3^2
    - 20928*s2^9*s3*s4 + 2560*s2^9*s4^2 - 4448*s2^8*s3^3 + 3008*s2^8*s3^2*s4 - 384*s2^8*s3*s4^2 - 432*s2^7*s3^4
    + 96*s2^7*s3^3*s4 - 4*s2^6*s3^5 + 20000*s2^10 - 140000*s2^9*s3 + 84000*s2^9*s4 + 172600*s2^8*s3^2
    - 139200*s2^8*s3*s4 + 21120*s2^8*s4^2 - 71680*s2^7*s3^3 + 78368*s2^7*s3^2*s4 - 20736*s2^7*s3*s4^2
    + 1280*s2^7*s4^3 + 2288*s2^6*s3^4 - 6200*s2^6*s3^3*s4 + 2016*s2^6*s3^2*s4^2 - 128*s2^6*s3*s4^3 + 1256*s2^5*s3^5
    - 568*s2^5*s3^4*s4 + 48*s2^5*s3^3*s4^2 + 26*s2^4*s3^6 - 4*s2^4*s3^5*s4 + 50000*s2^8*s4 + 80000*s2^7*s3^2
    - 280000*s2^7*s3*s4 + 84000*s2^7*s4^2 - 140000*s2^6*s3^3 + 345500*s2^6*s3^2*s4 - 156600*s2^6*s3*s4^2
    + 19200*s2^6*s4^3 + 30000*s2^5*s3^4 - 107520*s2^5*s3^3*s4 + 61008*s2^5*s3^2*s4^2 - 10272*s2^5*s3*s4^3
    + 320*s2^5*s4^4 + 8060*s2^4*s3^5 - 204*s2^4*s3^4*s4 - 2628*s2^4*s3^3*s4^2 + 592*s2^4*s3^2*s4^3 - 16*s2^4*s3*s4^4
    - 1464*s2^3*s3^6 + 1256*s2^3*s3^5*s4 - 244*s2^3*s3^4*s4^2 + 8*s2^3*s3^3*s4^3 - 72*s2^2*s3^7 + 21*s2^2*s3^6*s4
    - s2^2*s3^5*s4^2 + 50000*s2^6*s4^2 + 120000*s2^5*s3^2*s4 - 210000*s2^5*s3*s4^2 + 42000*s2^5*s4^3 + 40000*s2^4*s3^4
    - 210000*s2^4*s3^3*s4 + 259350*s2^4*s3^2*s4^2 - 87000*s2^4*s3*s4^3 + 9120*s2^4*s4^4 + 30000*s2^3*s3^4*s4
    - 53760*s2^3*s3^3*s4^2 + 21080*s2^3*s3^2*s4^3 - 2544*s2^3*s3*s4^4 + 32*s2^3*s4^5 - 3600*s2^2*s3^6 + 8060*s2^2*s3^5*s4
    - 1920*s2^2*s3^4*s4^2 - 202*s2^2*s3^3*s4^3 + 64*s2^2*s3^2*s4^4 - 732*s2*s3^6*s4 + 314*s2*s3^5*s4^2 - 34*s2*s3^4*s4^3
    + 81*s3^8 - 36*s3^7*s4 + 4*s3^6*s4^2 + 25000*s2^4*s4^3 + 60000*s2^3*s3^2*s4^2 - 70000*s2^3*s3*s4^3 + 10500*s2^3*s4^4
    + 40000*s2^2*s3^4*s4 - 105000*s2^2*s3^3*s4^2 + 86525*s2^2*s3^2*s4^3 - 23925*s2^2*s3*s4^4 + 2208*s2^2*s4^5
    + 7500*s2*s3^4*s4^2 - 8960*s2*s3^3*s4^3 + 2728*s2*s3^2*s4^4 - 252*s2*s3*s4^5 - 1800*s3^6*s4 + 2015*s3^5*s4^2
    - 623*s3^4*s4^3 + 59*s3^3*s4^4 + 6250*s2^2*s4^4 + 10000*s2*s3^2*s4^3 - 8750*s2*s3*s4^4 + 1050*s2*s4^5 + 10000*s3^4*s4^2
    - 17500*s3^3*s4^3 + 10825*s3^2*s4^4 - 2610*s3*s4^5 + 216*s4^6 + 625*s4^5
    """
)


def P(s2, s3, s4) -> DihedralPoint:
    return DihedralPoint(F(s2), F(s3), F(s4))


def test_f1_transcriptions_agree_term_for_term():
    assert len(F1_REKEYED.terms) == 116
    assert F1_POLY.terms == F1_REKEYED.terms


def test_f1_content_hash_frozen():
    assert F1_POLY.content_hash() == F1_SHA256
    assert F1_REKEYED.content_hash() == F1_SHA256


def test_f1_point_values():
    assert F1_POLY(F(1), F(1), F(1)) == 42216
    assert F1_POLY(F(1), F(2), F(2)) == 352000


def test_f1_vanishes_identically_on_the_order4_stratum():
    # s3 = 0, s4 = -2 s2^2 forces membership whatever s2 is
    rng = random.Random(9)
    for _ in range(30):
        s2 = F(rng.randint(-60, 60), rng.randint(1, 8))
        assert F1_POLY(s2, F(0), -2 * s2 * s2) == 0


# ---------------------------------------------------------------------------
# classification

def test_classify_anchor_points():
    cases = [
        ((1, 2, 2), AutGroupLabel.Z2_CUBED),
        ((1, 0, -2), AutGroupLabel.Z2xZ4),
        ((196, 0, -76832), AutGroupLabel.D12),
        ((0, 5, 0), AutGroupLabel.Z2xD8),
        ((3, 20, 82), AutGroupLabel.Z2xZ2),
    ]
    for (s2, s3, s4), want in cases:
        assert classify_aut(P(s2, s3, s4)) == want


def test_classify_precedence_at_overlap():
    # (196, 0, -76832) also satisfies the order 4 conditions (s3 = 0 with
    # vanishing scale factor); the order 12 group must win
    p = P(196, 0, -76832)
    assert p.s4 + 2 * p.s2 * p.s2 == 0 and p.s3 == 0
    assert classify_aut(p) == AutGroupLabel.D12


def test_classify_via_curve_coefficients():
    assert classify_aut(dihedral_invariants(1, 1, 1)) == AutGroupLabel.Z2_CUBED
    assert classify_aut(dihedral_invariants(0, 1, 0)) == AutGroupLabel.Z2xD8


def test_classify_rejects_singular_fiber():
    # (1, 0, 1) is a singular octavic; its invariant point (1, 0, 2) has
    # vanishing 28-term discriminant but nonzero scale factor
    p = dihedral_invariants(1, 0, 1)
    assert (p.s2, p.s3, p.s4) == (1, 0, 2)
    with pytest.raises(NotACurve):
        classify_aut(p)


def test_locus_also_guards_the_gate():
    with pytest.raises(NotACurve):
        locus_T(P(1, 0, 2))


def test_stratum_warnings():
    w = stratum_warnings(P(1, 0, -2))
    assert len(w) == 1 and "middle coefficient" in w[0]
    off = stratum_warnings(P(1, 5, -2))
    assert len(off) == 1 and "image" in off[0]
    assert stratum_warnings(P(1, 2, 2)) == ()


# ---------------------------------------------------------------------------
# locus membership and trichotomy

def test_locus_membership_anchor():
    v = locus_T(P(1, 2, 2))
    assert v.in_T
    assert v.components == frozenset({"T1"})
    assert v.F1_value == 352000


def test_locus_membership_on_order4_stratum():
    v = locus_T(P(1, 0, -2))
    assert v.in_T
    assert v.components == frozenset({"T2", "T3"})
    assert v.F1_value == 0


def test_locus_membership_f1_only():
    v = locus_T(P(4, -45, -257))
    assert v.components == frozenset({"T3"})
    assert v.F1_value == 0


def test_locus_non_membership():
    v = locus_T(P(3, 20, 82))
    assert not v.in_T
    assert v.components == frozenset()
    assert v.F1_value != 0


def test_locus_verdict_json_shape():
    j = locus_T(P(1, 2, 2)).to_json()
    assert j == {"in_T": True, "components": ["T1"], "F1_value": "352000"}


def test_trichotomy_cases():
    assert trichotomy(P(1, 2, 2)) == "Z2^3-case"
    assert trichotomy(P(1, 0, -2)) == "Z2xZ4-case"
    assert trichotomy(P(4, -45, -257)) == "T3-case"
    assert trichotomy(P(3, 20, 82)) == "not-split"


# ---------------------------------------------------------------------------
# 1-dimensional components

def test_frakT_anchor_points():
    assert frakT_components(P(F(25, 2), 0, F(625, 2))) == frozenset({"g1", "g4"})
    assert frakT_components(P(4, 0, -32)) == frozenset({"g2"})
    assert frakT_components(P(0, 0, 0)) == frozenset()


def test_frakT_ignores_s3():
    a = frakT_components(P(4, 0, -32))
    b = frakT_components(P(4, 777, -32))
    assert a == b


def test_g_component_polynomials_at_anchors():
    assert G_COMPONENTS["g1"](F(25, 2), F(0), F(625, 2)) == 0
    assert G_COMPONENTS["g4"](F(25, 2), F(0), F(625, 2)) == 0
    assert G_COMPONENTS["g2"](F(4), F(0), F(-32)) == 0
    assert G_COMPONENTS["g1"](F(4), F(0), F(-32)) != 0


def test_g1_parametrization():
    # solving the g1 equation for s4 gives -2 s2^2 + 100 s2 - 625
    rng = random.Random(3)
    for _ in range(20):
        s2 = F(rng.randint(-40, 40), rng.randint(1, 6))
        s4 = -2 * s2 * s2 + 100 * s2 - 625
        assert G_COMPONENTS["g1"](s2, F(0), s4) == 0


def test_f1_vanishes_on_g1_fiber_root():
    # at s2 = 4 on g1 (s4 = -257) the fiber polynomial has the rational
    # root s3 = -45; this pins the incidence of g1 inside the F1 surface
    assert G_COMPONENTS["g1"](F(4), F(0), F(-257)) == 0
    assert F1_POLY(F(4), F(-45), F(-257)) == 0


def _fiber_double_root(s2, s4):
    f = F1_POLY.restrict(1, (s2, s4))
    g = poly_gcd(f, f.derivative())
    assert g.degree == 1, "expected exactly one repeated fiber root"
    return -g.coeffs[0] / g.coeffs[1]


def test_g2_double_root_branch_is_singular():
    # the repeated fiber root over g2 is rational and sits exactly on the
    # vanishing locus of the 28-term discriminant: those fibers carry no
    # nonsingular curve, so no subcover comparison can be made there
    for s2, want_s3 in ((F(1), F(-33)), (F(2), F(-68, 3)), (F(7), F(39))):
        s4 = (s2**3 + 6 * s2**2 + 768 * s2 - 4096) / 27
        s3 = _fiber_double_root(s2, s4)
        assert s3 == want_s3
        assert F1_POLY(s2, s3, s4) == 0
        assert delta_s(DihedralPoint(s2, s3, s4)) == 0


def test_g4_double_root_branch_is_nonsingular():
    # over g4 the repeated fiber root is an honest curve; this is the
    # branch on which the two degree-4 subcovers coincide
    s2 = F(4)
    s4 = F(-(3515625 - 937500 * 4 + 62500 * 16 + 64 * 256), 15000 - 2000 * 4)
    assert G_COMPONENTS["g4"](s2, F(0), s4) == 0
    s3 = _fiber_double_root(s2, s4)
    assert s3 == F(-6723, 350)
    assert F1_POLY(s2, s3, s4) == 0
    assert delta_s(DihedralPoint(s2, s3, s4)) != 0


# ---------------------------------------------------------------------------
# splitting shapes

def test_split_type_hyperelliptic_rows():
    assert split_type(AutGroupLabel.Z2xZ2, hyperelliptic=True) == SplitType.E_X_JAC2
    assert split_type(AutGroupLabel.Z2xZ4, hyperelliptic=True) == SplitType.E_X_JAC2
    assert split_type(AutGroupLabel.Z2_CUBED, hyperelliptic=True) == SplitType.E1_E2_E3
    assert split_type(AutGroupLabel.D12, hyperelliptic=True) == SplitType.E1SQ_E2
    assert split_type("Z2xS4", hyperelliptic=True) == SplitType.E1SQ_E2


def test_split_type_nonhyperelliptic_rows():
    assert split_type("Z2", hyperelliptic=False) == SplitType.E_X_JAC2
    assert split_type("V4", hyperelliptic=False) == SplitType.E1_E2_E3
    assert split_type("S4", hyperelliptic=False) == SplitType.E_CUBED
    assert split_type("L3(2)", hyperelliptic=False) == SplitType.E_CUBED
    assert split_type("D8", hyperelliptic=False) == SplitType.E1SQ_E2


def test_split_type_hyperelliptic_order16_is_unmapped():
    with pytest.raises(UnknownGroup):
        split_type(AutGroupLabel.Z2xD8, hyperelliptic=True)


def test_split_type_accepts_alias_spellings():
    assert split_type("C2 x C4", hyperelliptic=True) == SplitType.E_X_JAC2
    assert split_type("C2^3", hyperelliptic=True) == SplitType.E1_E2_E3
    assert split_type("c2-x-c2", hyperelliptic=False) == SplitType.E1_E2_E3


def test_split_type_unknown_group_message_names_the_table():
    with pytest.raises(UnknownGroup, match="hyperelliptic"):
        split_type("F36", hyperelliptic=True)
