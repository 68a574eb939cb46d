"""Curve models and their quotient tower.

The central object is the even octavic family

    Y^2 = X^8 + a X^6 + b X^4 + c X^2 + 1

which maps onto an elliptic quartic model through U = X^2, V = Y and onto a
genus 2 model through x = X^2, y = Y X.  Both quotients keep the coefficient
triple (a, b, c) intact, so each record here is little more than that triple
plus a nonsingularity certificate.  The module also rebuilds a genus 2 curve
from its (u, v) moduli pair.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateUV, SingularCurve
from .exact import RationalLike, UniPoly, discriminant, rat, rat_str


@dataclass(frozen=True)
class Genus3Curve:
    """Nonsingular member of the even octavic family.

    Construction fails with SingularCurve when the octavic has a repeated
    root; the check runs through the Sylvester-resultant discriminant so it
    is independent of any closed-form discriminant polynomial.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", rat(self.a))
        object.__setattr__(self, "b", rat(self.b))
        object.__setattr__(self, "c", rat(self.c))
        if discriminant(self.octavic()) == 0:
            raise SingularCurve(
                f"repeated octavic root at (a, b, c) = "
                f"({rat_str(self.a)}, {rat_str(self.b)}, {rat_str(self.c)})"
            )

    def octavic(self) -> UniPoly:
        a, b, c = self.a, self.b, self.c
        return UniPoly([1, 0, c, 0, b, 0, a, 0, 1])

    def to_json(self) -> dict:
        return {
            "model": "genus3_even_octavic",
            "a": rat_str(self.a),
            "b": rat_str(self.b),
            "c": rat_str(self.c),
        }


@dataclass(frozen=True)
class Genus2Curve:
    """y^2 = sextic(x) with sextic of degree 5 or 6 and distinct roots.

    Degree 5 means one root sits at infinity; the nonsingularity gate then
    uses the degree 6 homogenization, whose discriminant is the square of
    the degree 5 leading coefficient times the degree 5 discriminant.
    """

    sextic: UniPoly

    def __post_init__(self):
        if self.sextic.degree not in (5, 6):
            raise ValueError(
                f"genus 2 model needs degree 5 or 6, got {self.sextic.degree}"
            )
        if self.discriminant6() == 0:
            raise SingularCurve("repeated root in genus 2 sextic")

    def discriminant6(self) -> Fraction:
        """Discriminant of the degree 6 homogenization of the sextic."""
        d = discriminant(self.sextic)
        if self.sextic.degree == 5:
            d *= self.sextic.lc**2
        return d

    def to_json(self) -> dict:
        return {
            "model": "genus2_sextic",
            "coeffs": self.sextic.to_json(),
        }


QUARTIC = "quartic"
CUBIC = "cubic"


@dataclass(frozen=True)
class EllipticModel:
    """V^2 = quartic(U) or V^2 = cubic(U).

    The constructor pins kind against degree only.  Repeated roots are not
    rejected here: the j-invariant routines are the gate and raise
    SingularQuartic / SingularCubic, so a degenerate model can be built but
    never silently evaluated.
    """

    kind: str
    coefficients: UniPoly

    def __post_init__(self):
        want = {QUARTIC: 4, CUBIC: 3}.get(self.kind)
        if want is None:
            raise ValueError(f"unknown elliptic model kind {self.kind!r}")
        if self.coefficients.degree != want:
            raise ValueError(
                f"{self.kind} model needs degree {want}, "
                f"got {self.coefficients.degree}"
            )

    def to_json(self) -> dict:
        return {"model": f"elliptic_{self.kind}", "coeffs": self.coefficients.to_json()}


@dataclass(frozen=True)
class UVPoint:
    """A point of the (u, v) moduli plane of genus 2 curves with an extra
    involution.  Carries no intrinsic gate; each operation consuming one
    imposes its own nondegeneracy condition."""

    u: Fraction
    v: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", rat(self.u))
        object.__setattr__(self, "v", rat(self.v))

    def to_json(self) -> dict:
        return {"u": rat_str(self.u), "v": rat_str(self.v)}


def make_genus3(a: RationalLike, b: RationalLike, c: RationalLike) -> Genus3Curve:
    """Build Y^2 = X^8 + a X^6 + b X^4 + c X^2 + 1, rejecting singular input."""
    return Genus3Curve(rat(a), rat(b), rat(c))


def subcovers(curve: Genus3Curve) -> tuple[EllipticModel, Genus2Curve]:
    """The two degree 2 quotients of an even octavic curve.

    Returns (E, C) with E: V^2 = U^4 + a U^3 + b U^2 + c U + 1 obtained by
    U = X^2, V = Y, and C: y^2 = x (x^4 + a x^3 + b x^2 + c x + 1) obtained
    by x = X^2, y = Y X.  Both read back the input triple coefficient for
    coefficient.
    """
    a, b, c = curve.a, curve.b, curve.c
    quartic = EllipticModel(QUARTIC, UniPoly([1, c, b, a, 1]))
    sextic = Genus2Curve(UniPoly([0, 1, c, b, a, 1]))
    return quartic, sextic


def genus2_from_uv(p: UVPoint) -> Genus2Curve:
    """Reconstruct the genus 2 curve attached to a moduli pair (u, v).

    The model is y^2 = a0 x^6 + a1 x^5 + a2 x^4 + a3 x^3 + t a2 x^2
    + t^2 a1 x + t^3 a0, with the coefficients given by one closed form for
    u != 0 and another for u = 0.  Raises DegenerateUV when

        (u^2 - 4v + 18u - 27) (v^2 - 4u^3) (4v - u^2 + 110u - 1125) = 0,

    the locus where the construction breaks down.
    """
    u, v = p.u, p.v
    gate = (u * u - 4 * v + 18 * u - 27) * (v * v - 4 * u**3) * (
        4 * v - u * u + 110 * u - 1125
    )
    if gate == 0:
        raise DegenerateUV(f"degenerate moduli pair (u, v) = ({u}, {v})")
    if u != 0:
        t = v * v - 4 * u**3
        a0 = v * v + u * u * v - 2 * u**3
        a1 = 2 * (u * u + 3 * v) * t
        a2 = (15 * v * v - u * u * v - 30 * u**3) * t
        a3 = 4 * (5 * v - u * u) * t * t
    else:
        t = Fraction(1)
        a0 = 1 + 2 * v
        a1 = 2 * (3 - 4 * v)
        a2 = 15 + 14 * v
        a3 = 4 * (5 - 4 * v)
    sextic = UniPoly([t**3 * a0, t * t * a1, t * a2, a3, a2, a1, a0])
    return Genus2Curve(sextic)
