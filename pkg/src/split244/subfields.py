"""Elliptic subfield data: the degree-2 subcover's j-invariant, the quadratic
whose roots are the two degree-4 subcover j-invariants, and the exact (u, v)
coordinates on the split-Jacobian genus-2 locus for the Z2^3 stratum.

Everything here is exact rational or quadratic-extension arithmetic; the
numeric fallbacks inside :func:`full_pipeline` delegate to :mod:`.oracle`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .curves import Genus3Curve, UVPoint, subcovers
from .errors import DenominatorZero, J2Vanishes, PZero
from .exact import QuadExtValue, RationalLike, TriPoly, quadext, rat
from .invariants import (
    DihedralPoint,
    absolute_invariants,
    delta_s,
    dihedral_invariants,
    invariant_scale,
)
from .loci import classify_aut, locus_T, stratum_warnings

__all__ = [
    "JPair",
    "j_E",
    "j12_quadratic",
    "j12_roots",
    "uv_for_Z23",
    "uv_from_j",
    "isomorphic_subfields",
    "full_pipeline",
    "point_pipeline",
]


# Numerator cube of the degree-2 subcover's j-invariant, in (s2, s3, s4).
_JE_CUBE_ROOT = TriPoly(
    {
        (0, 2, 0): -1,
        (0, 0, 1): -12,
        (2, 0, 0): -24,
        (1, 0, 1): 3,
        (3, 0, 0): 6,
    }
)


def j_E(p: DihedralPoint) -> Fraction:
    """j-invariant of the degree-2 elliptic subcover, as a closed form.

    Undefined (DenominatorZero) when the scale factor s4 + 2 s2^2 or the
    28-term discriminant vanishes.
    """
    m = invariant_scale(p)
    d = delta_s(p)
    if m == 0 or d == 0:
        raise DenominatorZero(
            "j_E denominator vanishes at %s (scale %s, discriminant %s)"
            % (p.to_json(), m, d)
        )
    n = _JE_CUBE_ROOT(p.s2, p.s3, p.s4)
    return Fraction(256) * n**3 / (m * d)


def j12_quadratic(u: RationalLike, v: RationalLike) -> tuple[Fraction, Fraction]:
    """Monic quadratic j^2 + B j + C satisfied by the two degree-4 subcover
    j-invariants of the curve sitting over (u, v).  Returns (B, C)."""
    u, v = rat(u), rat(v)
    den = u * u + 18 * u - 4 * v - 27
    if den == 0:
        raise DenominatorZero(f"quadratic undefined at (u, v) = ({u}, {v})")
    b = 256 * (2 * u**3 - 54 * u * u + 9 * u * v - v * v + 27 * v) / den
    c = 65536 * (u * u + 9 * u - 3 * v) / den**2
    return b, c


@dataclass(frozen=True)
class JPair:
    """The two degree-4 subcover j-invariants, conjugate over Q when the
    discriminant of their quadratic is not a square."""

    j1: QuadExtValue
    j2: QuadExtValue
    equal: bool

    def to_json(self) -> dict:
        return {
            "j1": self.j1.to_json(),
            "j2": self.j2.to_json(),
            "equal": self.equal,
        }


def j12_roots(u: RationalLike, v: RationalLike) -> JPair:
    """Solve the (u, v) quadratic exactly.  j1 carries + sqrt, j2 the
    conjugate; equal is set when the discriminant vanishes."""
    b, c = j12_quadratic(u, v)
    disc = b * b - 4 * c
    half = Fraction(1, 2)
    j1 = quadext(-b * half, half, disc)
    j2 = quadext(-b * half, -half, disc)
    return JPair(j1=j1, j2=j2, equal=disc == 0)


def uv_for_Z23(s2: RationalLike, s3: RationalLike) -> UVPoint:
    """Exact (u, v) for a point on the stratum s4 = 2 s2^2 (automorphism
    group containing Z2^3).  Only s2 and s3 enter; s4 is implied.

    Raises PZero on the vanishing locus of the shared denominator P.
    """
    s2, s3 = rat(s2), rat(s3)
    p = -(s3 * s3) - 8 * s2 * s3 - 16 * s2 * s2 + 16 * s2**3
    if p == 0:
        raise PZero(f"denominator P vanishes at (s2, s3) = ({s2}, {s3})")
    u = (-9 * s3 * s3 + 120 * s2 * s3 - 400 * s2 * s2 + 16 * s2**3) / p
    v_num = (
        432 * s2 * s3**3
        - 27 * s3**4
        - 1440 * s2 * s2 * s3 * s3
        - 6400 * s2**3 * s3
        + 32000 * s2**4
        + 288 * s2**3 * s3 * s3
        - 5376 * s2**4 * s3
        + 23040 * s2**5
        + 256 * s2**6
    )
    v = -2 * v_num / (p * p)
    return UVPoint(u, v)


def uv_from_j(lam: RationalLike) -> UVPoint:
    """The (u, v) point whose quadratic is expected to have lam as a double
    root.  Exact and total; the expectation itself fails off a small locus,
    which :func:`discrepancy_diagnostic` makes visible."""
    t = rat(lam) / 256
    return UVPoint(9 - t, 9 * (6 - t))


@dataclass(frozen=True)
class SubfieldConditions:
    """Which of the two isomorphism conditions a (u, v) point satisfies.

    disc_zero is None when the quadratic's denominator vanishes there, so
    the discriminant test cannot be evaluated.
    """

    cond_d8: bool
    cond_line: bool
    disc_zero: Optional[bool]

    def to_json(self) -> dict:
        return {
            "cond_d8": self.cond_d8,
            "cond_line": self.cond_line,
            "disc_zero": self.disc_zero,
        }


def isomorphic_subfields(p: UVPoint) -> SubfieldConditions:
    """Test the two printed conditions for the degree-4 subcovers to be
    isomorphic, and independently whether the quadratic has a double root."""
    u, v = p.u, p.v
    cond_d8 = v * v - 4 * u**3 == 0
    cond_line = v - 9 * u + 27 == 0
    try:
        b, c = j12_quadratic(u, v)
    except DenominatorZero:
        disc_zero: Optional[bool] = None
    else:
        disc_zero = b * b - 4 * c == 0
    return SubfieldConditions(cond_d8=cond_d8, cond_line=cond_line, disc_zero=disc_zero)


def _blocked(reason: str, **extra: Any) -> dict:
    out: dict[str, Any] = {"unavailable": reason}
    out.update(extra)
    return out


def _pipeline_core(
    p: DihedralPoint,
    sextic_coeffs: Optional[list],
    tol: float,
    precision: Optional[int],
    no_model_reason: str = "no genus-2 model available for the numeric route",
) -> dict:
    """Shared pipeline body.  sextic_coeffs, when given, is an ascending
    coefficient list (possibly complex) for the genus-2 subcover used by
    the numeric branch; None means that branch reports unavailable with
    no_model_reason."""
    report: dict[str, Any] = {"s": p}
    warnings = list(stratum_warnings(p))

    if p.degenerate:
        report["warnings"] = warnings + [
            "non-faithful fiber: (0, 0, 0) does not determine the curve;"
            " classification and locus analysis skipped"
        ]
        why = "degenerate invariant point"
        for key in ("i", "aut", "locus", "jE", "uv", "jpair"):
            report[key] = _blocked(why)
        return report

    report["warnings"] = warnings

    try:
        report["i"] = absolute_invariants(p)
    except J2Vanishes as exc:
        report["i"] = _blocked(str(exc))

    report["aut"] = classify_aut(p)
    report["locus"] = locus_T(p)

    try:
        report["jE"] = j_E(p)
    except DenominatorZero as exc:
        report["jE"] = _blocked(str(exc))

    uv_entry: dict[str, Any]
    if p.s4 == 2 * p.s2 * p.s2:
        try:
            pt = uv_for_Z23(p.s2, p.s3)
            uv_entry = {"u": pt.u, "v": pt.v, "provenance": "exact-Z2^3"}
        except PZero as exc:
            uv_entry = _blocked(str(exc))
    elif sextic_coeffs is None:
        uv_entry = _blocked(no_model_reason)
    else:
        from . import oracle

        witness, best = oracle.best_involution_candidate(
            sextic_coeffs, precision=precision
        )
        if witness is None or best > tol:
            uv_entry = _blocked(
                "no involution within tolerance", best_residual=best
            )
        else:
            nuv = oracle.uv_numeric_from_coeffs(
                sextic_coeffs, witness, precision=precision
            )
            uv_entry = {
                "u": nuv.u,
                "v": nuv.v,
                "provenance": "numeric",
                "residual": best,
            }
    report["uv"] = uv_entry

    if "unavailable" in uv_entry:
        report["jpair"] = _blocked("requires (u, v)")
    elif uv_entry["provenance"] == "exact-Z2^3":
        try:
            report["jpair"] = j12_roots(uv_entry["u"], uv_entry["v"])
        except DenominatorZero as exc:
            report["jpair"] = _blocked(str(exc))
    else:
        from . import oracle

        ja, jb = oracle.subcover_js_from_coeffs(
            sextic_coeffs, witness, precision=precision
        )
        scale = 1 + abs(ja) + abs(jb)
        report["jpair"] = {
            "j1": ja,
            "j2": jb,
            "provenance": "numeric",
            "equal_within_tol": bool(abs(ja - jb) / scale < tol),
        }
    return report


def full_pipeline(
    curve: Genus3Curve, tol: float = 1e-6, precision: Optional[int] = None
) -> dict:
    """Run the whole chain on an even octavic curve: invariants, absolute
    genus-2 invariants, automorphism classification, locus membership, the
    degree-2 subcover j, (u, v), and the degree-4 j-pair.

    Fields that cannot be computed are reported as {"unavailable": reason}
    rather than raised, so one bad stage never hides the rest.
    """
    p = dihedral_invariants(curve.a, curve.b, curve.c)
    if p.degenerate:
        coeffs = None
    else:
        _, genus2 = subcovers(curve)
        coeffs = list(genus2.sextic.coeffs)
    return _pipeline_core(p, coeffs, tol, precision)


def point_pipeline(
    p: DihedralPoint, tol: float = 1e-6, precision: Optional[int] = None
) -> dict:
    """Same report as :func:`full_pipeline` but starting from an invariant
    triple.  The numeric branch lifts the point to a (generally complex)
    coefficient triple first; NotACurve propagates when no nonsingular
    curve sits over the point.
    """
    from .loci import _curve_gate

    if not p.degenerate:
        _curve_gate(p)
    coeffs: Optional[list] = None
    reason = "no genus-2 model available for the numeric route"
    if not p.degenerate and p.s4 != 2 * p.s2 * p.s2:
        from . import oracle

        try:
            a, b, c = oracle.lift_point(p)
        except ValueError as exc:
            # the s4 = -2 s2^2 stratum: the invariant triple does not pin
            # down a coefficient triple, so the numeric route has nothing
            # to work on
            reason = str(exc)
        else:
            coeffs = [0, 1, c, b, a, 1]
    return _pipeline_core(p, coeffs, tol, precision, no_model_reason=reason)


# Diagnostic for the double-root construction: uv_from_j promises a double
# root at lam, which holds at lam = 256 but fails at other sampled values;
# the table records the facts without taking sides.

def discrepancy_diagnostic(points: Optional[list] = None) -> list[dict]:
    """Evaluate both isomorphism conditions and the actual discriminant on
    a fixed panel of (u, v) points plus optional extras.  Returns rows fit
    for JSON; never raises."""
    panel: list[tuple[str, UVPoint]] = [
        ("double-root-check", uv_from_j(256)),
        ("line-point", UVPoint(2, -9)),
        ("line-point", UVPoint(7, 36)),
        ("round-trip", uv_from_j(0)),
        ("round-trip", uv_from_j(1728)),
        ("round-trip", uv_from_j(2048)),
    ]
    if points is not None:
        panel.extend(("extra", q) for q in points)
    rows = []
    for tag, q in panel:
        row: dict[str, Any] = {
            "tag": tag,
            "u": str(q.u),
            "v": str(q.v),
        }
        conds = isomorphic_subfields(q)
        row["cond_d8"] = conds.cond_d8
        row["cond_line"] = conds.cond_line
        row["disc_zero"] = conds.disc_zero
        try:
            b, c = j12_quadratic(q.u, q.v)
        except DenominatorZero:
            row["disc"] = None
            row["double_root"] = None
        else:
            disc = b * b - 4 * c
            row["disc"] = str(disc)
            row["double_root"] = str(-b / 2) if disc == 0 else None
        rows.append(row)
    return rows
