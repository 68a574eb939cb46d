"""Exact-arithmetic substrate: rationals, Gaussian rationals, quadratic
extensions, dense/sparse polynomials, resultants."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from split244.errors import DegreeTooLow, ZeroPolynomial
from split244.exact import (
    GaussianRational,
    QuadExtValue,
    TriPoly,
    UniPoly,
    discriminant,
    poly_divmod,
    poly_gcd,
    quadext,
    quadext_sqrt,
    rat,
    rat_str,
    resultant,
    squarefree_part,
    tripoly_from_text,
)

rationals = st.fractions(
    min_value=-1000, max_value=1000, max_denominator=50
)


def test_rat_parses_integers_fractions_and_strings():
    assert rat(3) == F(3)
    assert rat("7/4") == F(7, 4)
    assert rat("-7/4") == F(-7, 4)
    assert rat(F(2, 6)) == F(1, 3)


def test_rat_rejects_floats():
    with pytest.raises(TypeError):
        rat(0.5)


@given(rationals)
def test_rat_str_round_trip(q):
    assert rat(rat_str(q)) == q


def test_rat_str_format():
    assert rat_str(F(4, 2)) == "2"
    assert rat_str(F(-3, 9)) == "-1/3"


# ---------------------------------------------------------------------------
# Gaussian rationals

def test_gaussian_mult_and_conjugate():
    z = GaussianRational(F(1), F(2))
    w = GaussianRational(F(3), F(-1))
    assert z * w == GaussianRational(F(5), F(5))
    assert z.conjugate() == GaussianRational(F(1), F(-2))


gauss = st.builds(GaussianRational, rationals, rationals)


def _norm(z):
    return z.re * z.re + z.im * z.im


@given(gauss, gauss)
def test_gaussian_norm_multiplicative(z, w):
    assert _norm(z * w) == _norm(z) * _norm(w)


@given(gauss)
def test_gaussian_division_inverts(z):
    if _norm(z) == 0:
        return
    assert (z / z) == GaussianRational(F(1), F(0))


def test_gaussian_hash_agrees_with_rational_value():
    # a Gaussian value with zero imaginary part must hash like the Fraction
    assert hash(GaussianRational(F(5, 3), F(0))) == hash(F(5, 3))


# ---------------------------------------------------------------------------
# Quadratic extension values

def test_quadext_normalizes_square_parts():
    v = quadext(F(0), F(1), F(8))      # sqrt(8) -> 2 sqrt(2)
    assert (v.coeff, v.radicand) == (F(2), F(2))
    w = quadext(F(0), F(1), F(9, 4))   # rational square collapses
    assert w.is_rational and w.rat == F(3, 2)


def test_quadext_keeps_fractional_radicand_reduced():
    v = quadext(F(0), F(1), F(8, 3))
    assert v.radicand == F(2, 3) and v.coeff == F(2)


def test_quadext_sqrt_of_negative():
    v = quadext_sqrt(F(-4))
    assert v.radicand == F(-1) and v.coeff == F(2)


@given(rationals, rationals)
def test_quadext_conjugate_product_is_rational(a, b):
    v = quadext(a, b, F(7))
    prod = v * v.conjugate()
    assert prod.is_rational
    assert prod.rat == a * a - 7 * b * b


def test_quadext_arithmetic_known_case():
    # (1 + sqrt 2)(3 - sqrt 2) = 1 + 2 sqrt 2
    x = quadext(F(1), F(1), F(2))
    y = quadext(F(3), F(-1), F(2))
    z = x * y
    assert (z.rat, z.coeff, z.radicand) == (F(1), F(2), F(2))


def test_quadext_float_value():
    v = quadext(F(1), F(1), F(2))
    assert abs(float(v) - 2.414213562373095) < 1e-12


# ---------------------------------------------------------------------------
# Dense univariate polynomials

def test_unipoly_strips_leading_zeros_and_evaluates():
    f = UniPoly([1, 2, 1, 0, 0])
    assert f.degree == 2
    assert f(F(3)) == 16


def test_unipoly_derivative():
    f = UniPoly([5, 0, 3, 1])
    assert f.derivative() == UniPoly([0, 6, 3])


@given(st.lists(rationals, min_size=1, max_size=6), rationals)
def test_unipoly_product_evaluates_pointwise(cs, x):
    f = UniPoly(cs)
    g = UniPoly([2, 0, 1])
    assert (f * g)(x) == f(x) * g(x)


def test_resultant_sign_pin():
    # classical Sylvester layout, f-rows first
    assert resultant(UniPoly([-1, 1]), UniPoly([-2, 1])) == -1


@given(st.lists(rationals, min_size=3, max_size=5), st.lists(rationals, min_size=2, max_size=4))
@settings(max_examples=40)
def test_resultant_swap_sign(fc, gc):
    f, g = UniPoly(fc), UniPoly(gc)
    if f.degree < 1 or g.degree < 1:
        return
    sign = (-1) ** (f.degree * g.degree)
    assert resultant(f, g) == sign * resultant(g, f)


def test_resultant_vanishes_on_shared_root():
    f = UniPoly([-2, 1]) * UniPoly([1, 1])
    g = UniPoly([-2, 1]) * UniPoly([3, 1])
    assert resultant(f, g) == 0


def test_discriminant_of_quadratic():
    # b^2 - 4ac for a x^2 + b x + c, via the resultant route
    f = UniPoly([F(3), F(5), F(2)])
    assert discriminant(f) == 25 - 24


def test_discriminant_needs_degree_two():
    with pytest.raises(DegreeTooLow):
        discriminant(UniPoly([1, 1]))


def test_octavic_discriminant_anchor():
    # X^8 + X^6 + X^4 + X^2 + 1
    f = UniPoly([1, 0, 1, 0, 1, 0, 1, 0, 1])
    assert discriminant(f) == 4000000


def test_poly_divmod_reconstructs():
    f = UniPoly([2, -3, 0, 1, 4])
    g = UniPoly([1, 2, 1])
    q, r = poly_divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


def test_poly_divmod_zero_divisor():
    with pytest.raises(ZeroPolynomial):
        poly_divmod(UniPoly([1]), UniPoly([]))


@given(
    st.lists(rationals, min_size=2, max_size=5),
    st.lists(rationals, min_size=1, max_size=3),
)
@settings(max_examples=40)
def test_poly_divmod_property(fc, gc):
    f, g = UniPoly(fc), UniPoly(gc)
    if not g.coeffs:
        return
    q, r = poly_divmod(f, g)
    assert q * g + r == f


def test_poly_gcd_of_coprime_is_one():
    assert poly_gcd(UniPoly([-1, 1]), UniPoly([-2, 1])) == UniPoly([1])


def test_squarefree_part_strips_multiplicity():
    f = UniPoly([-1, 1]) * UniPoly([-1, 1]) * UniPoly([-1, 1]) * UniPoly([5, 1])
    sf = squarefree_part(f)
    assert sf == UniPoly([-1, 1]) * UniPoly([5, 1]) * F(1)
    # already squarefree input comes back monic and unchanged
    g = UniPoly([F(6), F(5), F(1)])
    assert squarefree_part(g * 3) == g


# ---------------------------------------------------------------------------
# Sparse trivariate polynomials

def test_tripoly_evaluates_and_drops_zeros():
    p = TriPoly({(1, 0, 0): F(2), (0, 1, 1): F(-1), (2, 0, 0): F(0)})
    assert len(p.terms) == 2
    assert p(F(3), F(2), F(5)) == 6 - 10


def test_tripoly_restrict_axis_order():
    # p = s2^2 s3 + s4; fixing (s2, s4) = (2, 7) leaves 4 s3 + 7
    p = TriPoly({(2, 1, 0): F(1), (0, 0, 1): F(1)})
    f = p.restrict(1, (F(2), F(7)))
    assert f == UniPoly([7, 4])


def test_tripoly_content_hash_is_encoding_independent():
    a = TriPoly({(1, 2, 0): F(3), (0, 0, 2): F(-1, 2)})
    b = tripoly_from_text("3*s2*s3^2 - 1/2*s4^2")
    assert a.terms == b.terms
    assert a.content_hash() == b.content_hash()


def test_tripoly_from_text_merges_repeated_monomials():
    p = tripoly_from_text("s2 + 2*s2 - 3*s2")
    assert p.terms == {}


@given(rationals, rationals, rationals)
@settings(max_examples=30)
def test_tripoly_restrict_agrees_with_full_evaluation(x, y, z):
    p = tripoly_from_text("2*s2^2 - s3*s4 + s3^3 - 5")
    assert p.restrict(0, (y, z))(x) == p(x, y, z)
    assert p.restrict(1, (x, z))(y) == p(x, y, z)
    assert p.restrict(2, (x, y))(z) == p(x, y, z)
