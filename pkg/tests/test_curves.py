"""Curve containers, quotient models, and the (u, v) reconstruction."""

import random
from fractions import Fraction as F

import pytest

from split244.curves import (
    CUBIC,
    QUARTIC,
    EllipticModel,
    Genus2Curve,
    UVPoint,
    genus2_from_uv,
    make_genus3,
    subcovers,
)
from split244.errors import DegenerateUV, SingularCurve
from split244.exact import UniPoly, discriminant


def test_make_genus3_anchor():
    curve = make_genus3(1, 1, 1)
    assert (curve.a, curve.b, curve.c) == (1, 1, 1)
    assert curve.octavic() == UniPoly([1, 0, 1, 0, 1, 0, 1, 0, 1])


def test_octavic_coefficient_layout():
    curve = make_genus3(2, 3, 5)
    # ascending: constant 1, then c at X^2, b at X^4, a at X^6
    assert curve.octavic() == UniPoly([1, 0, 5, 0, 3, 0, 2, 0, 1])


def test_make_genus3_rejects_singular():
    # b = a + c - 2 puts X^2 = -1 on the octavic
    with pytest.raises(SingularCurve):
        make_genus3(2, 2, 2)
    with pytest.raises(SingularCurve):
        make_genus3(1, 0, 1)


def test_genus3_accepts_all_zero_coefficients():
    # X^8 + 1 has distinct roots; the curve exists even though its
    # invariant point is the degenerate one
    curve = make_genus3(0, 0, 0)
    assert curve.octavic().degree == 8


def test_subcovers_read_back_coefficients():
    e, c = subcovers(make_genus3(1, 2, 3))
    assert e.coefficients == UniPoly([1, 3, 2, 1, 1])
    assert c.sextic == UniPoly([0, 1, 3, 2, 1, 1])


def test_subcover_model_kinds():
    e, _ = subcovers(make_genus3(1, 1, 1))
    assert e.kind == QUARTIC
    with pytest.raises(ValueError):
        EllipticModel("octic", UniPoly([1, 0, 0, 0, 0, 0, 0, 0, 1]))
    with pytest.raises(ValueError):
        EllipticModel(CUBIC, UniPoly([1, 1, 1, 1, 1]))


def test_genus2_degree5_discriminant_scaling():
    # one root at infinity: the gate works through the homogenized sextic
    f5 = UniPoly([0, 1, 1, 1, 1, 1])
    curve = Genus2Curve(f5)
    assert curve.sextic.degree == 5
    assert curve.discriminant6() == discriminant(f5) * f5.lc ** 2


def test_genus2_rejects_repeated_roots():
    with pytest.raises(SingularCurve):
        Genus2Curve(UniPoly([0, 0, 0, 1, 2, 1]))  # x^3 (x + 1)^2


def test_genus2_rejects_wrong_degree():
    with pytest.raises(ValueError):
        Genus2Curve(UniPoly([1, 2, 1, 1]))


def test_elliptic_model_allows_repeated_roots():
    # quotient models carry no root gate of their own; the j routines
    # reject degenerate input later
    e = EllipticModel(QUARTIC, UniPoly([0, 0, 1, 2, 1]))
    assert e.coefficients.degree == 4


# ---------------------------------------------------------------------------
# (u, v) -> curve

def test_genus2_from_uv_is_twisted_palindrome():
    # ascending coeffs (c0..c6) with c2 = t c4, c1 = t^2 c5, c0 = t^3 c6
    c = genus2_from_uv(UVPoint(F(9), F(-754, 5)))
    f = c.sextic
    assert f.degree == 6
    c0, c1, c2, c3, c4, c5, c6 = f.coeffs
    t = c2 / c4
    assert c1 == t * t * c5
    assert c0 == t**3 * c6


def test_genus2_from_uv_rejects_gate_zero():
    # v^2 = 4 u^3 branch of the gate
    with pytest.raises(DegenerateUV):
        genus2_from_uv(UVPoint(F(1), F(2)))
    # u^2 - 4v + 18u - 27 = 0 branch: u = 1, v = -2
    with pytest.raises(DegenerateUV):
        gen2 = genus2_from_uv(UVPoint(F(1), F(-2)))
    # 4v - u^2 + 110u - 1125 = 0 branch: u = 5, v = 150
    with pytest.raises(DegenerateUV):
        genus2_from_uv(UVPoint(F(5), F(150)))


def test_genus2_from_uv_u_zero_branch():
    c = genus2_from_uv(UVPoint(F(0), F(5)))
    assert c.sextic.degree == 6


def test_genus2_from_uv_random_points_are_nonsingular():
    rng = random.Random(101)
    built = 0
    while built < 60:
        u = F(rng.randint(-200, 200), rng.randint(1, 10))
        v = F(rng.randint(-200, 200), rng.randint(1, 10))
        try:
            curve = genus2_from_uv(UVPoint(u, v))
        except DegenerateUV:
            continue
        # constructor re-checks nonsingularity; reaching here is the assert
        assert curve.discriminant6() != 0
        built += 1


def test_uvpoint_equality_and_coercion():
    assert UVPoint(F(9), F(-754, 5)) == UVPoint(9, "-754/5")
    assert UVPoint(F(1), F(2)) != UVPoint(F(1), F(3))
