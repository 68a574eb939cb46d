"""Dihedral invariants, their symmetry group, and discriminant encodings.

The coefficient triple (a, b, c) of an even octavic curve is only defined up
to an order 8 dihedral action generated by

    tau1: (a, b, c) -> (-i a, -b, i c)        tau2: (a, b, c) -> (c, b, a)

and the three invariants s2 = a c, s3 = (a^2 + c^2) b, s4 = a^4 + c^4
separate the orbits away from the degenerate fiber a = c = 0.  This module
evaluates that invariant map, the orbit itself, the two discriminant
encodings (one in (a, b, c), one in (s2, s3, s4)), the absolute invariants
of the genus 2 quotient, and closed-form j-invariants of quartic and cubic
elliptic models.

All polynomial data lives in explicit TriPoly term dictionaries so each
transcription can be checked term by term against an independent keying.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .curves import CUBIC, QUARTIC, EllipticModel
from .errors import J2Vanishes, SingularCubic, SingularQuartic
from .exact import GaussianRational, RationalLike, TriPoly, rat, rat_str

Coefficient = Union[Fraction, GaussianRational]


# 28-term discriminant in the dihedral invariants, exponents (s2, s3, s4).
DELTA_S_POLY = TriPoly({
    (7, 0, 0): 16,
    (6, 0, 0): 24,
    (5, 1, 0): -72,
    (5, 0, 1): 16,
    (5, 0, 0): 768,
    (4, 2, 0): -2,
    (4, 1, 0): -576,
    (4, 0, 1): 132,
    (4, 0, 0): -1024,
    (3, 2, 0): 160,
    (3, 1, 1): -72,
    (3, 0, 2): 4,
    (3, 0, 1): 768,
    (2, 3, 0): 8,
    (2, 2, 1): -1,
    (2, 2, 0): 256,
    (2, 1, 1): -576,
    (2, 0, 2): 114,
    (2, 0, 1): -1024,
    (1, 2, 1): 80,
    (1, 1, 2): -18,
    (1, 0, 2): 192,
    (0, 4, 0): -16,
    (0, 3, 1): 4,
    (0, 2, 1): 128,
    (0, 1, 2): -144,
    (0, 0, 3): 27,
    (0, 0, 2): -256,
})

# 16-term bracket in (a, b, c) whose square, scaled by 256, is the octavic
# discriminant.
OCTAVIC_DISC_BRACKET = TriPoly({
    (0, 0, 0): -256,
    (1, 2, 1): 80,
    (3, 1, 1): -18,
    (1, 1, 3): -18,
    (2, 2, 2): -1,
    (2, 0, 2): 6,
    (0, 1, 2): -144,
    (3, 0, 3): 4,
    (2, 3, 0): 4,
    (0, 3, 2): 4,
    (0, 2, 0): 128,
    (2, 1, 0): -144,
    (1, 0, 1): 192,
    (0, 4, 0): -16,
    (0, 0, 4): 27,
    (4, 0, 0): 27,
})

# Numerator brackets of the first two absolute invariants of the genus 2
# quotient; the third shares DELTA_S_POLY (one transcription, two uses).
_I1_BRACKET = TriPoly({
    (4, 0, 0): 2,
    (3, 0, 0): 2,
    (2, 1, 0): -6,
    (2, 0, 1): 1,
    (2, 0, 0): -40,
    (1, 0, 1): 1,
    (0, 2, 0): 9,
    (0, 1, 1): -3,
    (0, 0, 1): -20,
})

_I2_BRACKET = TriPoly({
    (5, 0, 0): 8,
    (4, 0, 0): 12,
    (3, 1, 0): -36,
    (3, 0, 1): 4,
    (3, 0, 0): 1248,
    (2, 1, 0): -558,
    (2, 0, 1): 114,
    (2, 0, 0): -2240,
    (1, 2, 0): 81,
    (1, 1, 1): -18,
    (1, 0, 1): 624,
    (0, 2, 0): 216,
    (0, 1, 1): -279,
    (0, 0, 2): 54,
    (0, 0, 1): -1120,
})

# Degree 2 invariant of the genus 2 quotient; all three absolute invariants
# carry powers of it in the denominator.
_J2_POLY = TriPoly({
    (3, 0, 0): 16,
    (2, 0, 0): -40,
    (1, 0, 1): 8,
    (0, 2, 0): -3,
    (0, 0, 1): -20,
})


@dataclass(frozen=True)
class DihedralPoint:
    """Invariant triple (s2, s3, s4) of an even octavic curve.

    The fiber over (0, 0, 0) is not faithful: every triple (0, b, 0) maps
    there regardless of b, so such points carry a degeneracy flag rather
    than a forgotten coefficient.
    """

    s2: Coefficient
    s3: Coefficient
    s4: Coefficient

    @property
    def degenerate(self) -> bool:
        return self.s2 == 0 and self.s3 == 0 and self.s4 == 0

    def to_json(self) -> dict:
        return {
            "s2": rat_str(self.s2),
            "s3": rat_str(self.s3),
            "s4": rat_str(self.s4),
        }


@dataclass(frozen=True)
class AbsoluteInvariants2:
    """Absolute invariants (i1, i2, i3) of the genus 2 quotient.  Defined
    only where the degree 2 invariant is nonzero."""

    i1: Fraction
    i2: Fraction
    i3: Fraction

    def to_json(self) -> dict:
        return {
            "i1": rat_str(self.i1),
            "i2": rat_str(self.i2),
            "i3": rat_str(self.i3),
        }


def _as_coefficient(x) -> Coefficient:
    if isinstance(x, GaussianRational):
        # Collapse rational-valued Gaussian input so equal points compare
        # equal regardless of which arithmetic produced them.
        return x.re if x.im == 0 else x
    return rat(x)


def dihedral_invariants(a, b, c) -> DihedralPoint:
    """Invariant triple (a c, (a^2 + c^2) b, a^4 + c^4).

    Accepts rational or Gaussian-rational coefficients; values that land in
    the rationals are returned as plain Fractions.  The result for (c, b, a)
    equals the result for (a, b, c) by construction.
    """
    a, b, c = _as_coefficient(a), _as_coefficient(b), _as_coefficient(c)
    s2 = a * c
    s3 = (a * a + c * c) * b
    s4 = a**4 + c**4
    return DihedralPoint(_as_coefficient(s2), _as_coefficient(s3), _as_coefficient(s4))


def _tau1(t):
    a, b, c = t
    i = GaussianRational(0, 1)
    return (-i * a, -b, i * c)


def _tau2(t):
    a, b, c = t
    return (c, b, a)


def d4_orbit(a, b, c) -> frozenset:
    """Orbit of a coefficient triple under the dihedral symmetry group.

    Entries are Gaussian rationals because the order 4 generator mixes in
    the imaginary unit.  The orbit size divides 8; symmetric triples give
    shorter orbits (for instance (0, b, 0) pairs only with (0, -b, 0)).
    """

    def g(x):
        x = _as_coefficient(x)
        return x if isinstance(x, GaussianRational) else GaussianRational(x)

    start = (g(a), g(b), g(c))
    seen = {start}
    frontier = [start]
    while frontier:
        t = frontier.pop()
        for image in (_tau1(t), _tau2(t)):
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return frozenset(seen)


def delta_s(p: DihedralPoint) -> Coefficient:
    """The 28-term discriminant polynomial evaluated at (s2, s3, s4)."""
    return DELTA_S_POLY(p.s2, p.s3, p.s4)


def delta_abc(a, b, c) -> Coefficient:
    """Discriminant of the octavic in closed form: 256 times the square of
    a 16-term bracket in (a, b, c).  Agrees with the Sylvester-resultant
    discriminant of X^8 + a X^6 + b X^4 + c X^2 + 1 exactly."""
    a, b, c = _as_coefficient(a), _as_coefficient(b), _as_coefficient(c)
    bracket = OCTAVIC_DISC_BRACKET(a, b, c)
    return 256 * bracket * bracket


def invariant_scale(p: DihedralPoint) -> Coefficient:
    """s4 + 2 s2^2: the factor scaling all three absolute invariants.

    Its square also links the two discriminant encodings, and its vanishing
    (together with s3 = 0) marks the stratum with an order 4 automorphism.
    """
    return p.s4 + 2 * p.s2 * p.s2


def j2_invariant(p: DihedralPoint) -> Coefficient:
    """16 s2^3 - 40 s2^2 + 8 s2 s4 - 3 s3^2 - 20 s4, the degree 2 invariant
    of the genus 2 quotient.  Absolute invariants need it nonzero."""
    return _J2_POLY(p.s2, p.s3, p.s4)


def absolute_invariants(p: DihedralPoint) -> AbsoluteInvariants2:
    """Absolute invariants of the genus 2 quotient at a dihedral point.

    i1 = 144 m/d^2 * A1,  i2 = 432 m^2/d^3 * A2,  i3 = 243/16 m^3/d^5 * A3

    with m = s4 + 2 s2^2, d the degree 2 invariant, and A3 the same 28-term
    polynomial as delta_s.  Raises J2Vanishes when d = 0.
    """
    d = j2_invariant(p)
    if d == 0:
        raise J2Vanishes(f"degree 2 invariant vanishes at {p.to_json()}")
    m = invariant_scale(p)
    i1 = 144 * m / d**2 * _I1_BRACKET(p.s2, p.s3, p.s4)
    i2 = 432 * m * m / d**3 * _I2_BRACKET(p.s2, p.s3, p.s4)
    i3 = Fraction(243, 16) * m**3 / d**5 * delta_s(p)
    return AbsoluteInvariants2(i1, i2, i3)


def _descending(coefficients, length: int) -> list:
    cs = list(coefficients.coeffs)
    cs += [Fraction(0)] * (length - len(cs))
    return list(reversed(cs))


def j_quartic(e: EllipticModel) -> Fraction:
    """j-invariant of V^2 = quartic(U) from the two classical invariants.

    For the quartic a0 U^4 + a1 U^3 + a2 U^2 + a3 U + a4,

        I = 12 a0 a4 - 3 a1 a3 + a2^2
        J = 72 a0 a2 a4 - 27 a0 a3^2 - 27 a1^2 a4 + 9 a1 a2 a3 - 2 a2^3
        j = 1728 * 4 I^3 / (4 I^3 - J^2)

    which sends U^4 + U^3 + U^2 + U + 1 to 2048, anchoring the convention.
    Raises SingularQuartic when 4 I^3 = J^2 (repeated roots).
    """
    if e.kind != QUARTIC:
        raise ValueError(f"expected a quartic model, got {e.kind}")
    a0, a1, a2, a3, a4 = _descending(e.coefficients, 5)
    inv_i = 12 * a0 * a4 - 3 * a1 * a3 + a2 * a2
    inv_j = (
        72 * a0 * a2 * a4
        - 27 * a0 * a3 * a3
        - 27 * a1 * a1 * a4
        + 9 * a1 * a2 * a3
        - 2 * a2**3
    )
    denom = 4 * inv_i**3 - inv_j * inv_j
    if denom == 0:
        raise SingularQuartic("quartic has a repeated root")
    return 1728 * 4 * inv_i**3 / denom


def j_cubic(e: EllipticModel) -> Fraction:
    """j-invariant of V^2 = cubic(U), cubic not necessarily monic.

    Scaling (U, V) by the leading coefficient turns c3 U^3 + c2 U^2 + c1 U
    + c0 into a monic long Weierstrass form with a2 = c2, a4 = c1 c3,
    a6 = c0 c3^2; from there the usual b-quantities give j = c4^3 / Delta.
    Raises SingularCubic when Delta = 0.
    """
    if e.kind != CUBIC:
        raise ValueError(f"expected a cubic model, got {e.kind}")
    c0, c1, c2, c3 = list(e.coefficients.coeffs) + [Fraction(0)] * (
        4 - len(e.coefficients.coeffs)
    )
    a2, a4, a6 = c2, c1 * c3, c0 * c3 * c3
    b2 = 4 * a2
    b4 = 2 * a4
    b6 = 4 * a6
    b8 = 4 * a2 * a6 - a4 * a4
    delta = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    if delta == 0:
        raise SingularCubic("cubic has a repeated root")
    c4 = b2 * b2 - 24 * b4
    return c4**3 / delta
