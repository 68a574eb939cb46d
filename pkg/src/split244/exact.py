"""Exact arithmetic kernels.

Rationals are plain ``fractions.Fraction`` (already in lowest terms with a
positive denominator, which is exactly the contract we need); this module
adds the "p/q" wire format, Gaussian rationals, quadratic-extension values
with square-factor normalization, dense univariate polynomials, sparse
trivariate polynomials with a canonical serialization, and Sylvester
resultants computed fraction-free.

Floating point never enters here.
"""
from __future__ import annotations

import hashlib
import re as _re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Mapping, Sequence, Union

from .errors import DegreeTooLow, ZeroPolynomial

Rational = Fraction

RationalLike = Union[int, str, Fraction]


def rat(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction.

    Floats are rejected on purpose: they would smuggle rounding error into
    code that promises exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_str(value: RationalLike) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    q = rat(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# Gaussian rationals

def _coerce_gauss(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(Fraction(x), Fraction(0))
    return None


@dataclass(frozen=True)
class GaussianRational:
    """Element re + im*i of Q(i), exact in both parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", rat(self.re))
        object.__setattr__(self, "im", rat(self.im))

    def __add__(self, other):
        o = _coerce_gauss(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = _coerce_gauss(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce_gauss(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce_gauss(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce_gauss(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = _coerce_gauss(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = GaussianRational(Fraction(1))
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = _coerce_gauss(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        # Rational-valued elements must hash like their Fraction so that
        # mixed sets behave (same rule complex follows for real values).
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    @property
    def is_rational(self) -> bool:
        return self.im == 0

    def __repr__(self):
        return f"GaussianRational({rat_str(self.re)}, {rat_str(self.im)})"


GAUSS_I = GaussianRational(Fraction(0), Fraction(1))


# ---------------------------------------------------------------------------
# Quadratic extension values

_SIEVE_BOUND = 10**6
_PRIME_CACHE: list[int] = []


def _primes_to_bound() -> list[int]:
    # Sieve once per process; used only for radicand normalization.
    if not _PRIME_CACHE:
        sieve = bytearray([1]) * (_SIEVE_BOUND + 1)
        sieve[0:2] = b"\x00\x00"
        for p in range(2, isqrt(_SIEVE_BOUND) + 1):
            if sieve[p]:
                sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
        _PRIME_CACHE.extend(i for i in range(_SIEVE_BOUND + 1) if sieve[i])
    return _PRIME_CACHE


def _square_split(n: int) -> tuple[int, int]:
    """Write n >= 1 as s^2 * m, pulling out square factors found by trial
    division over primes up to 10^6 (plus a perfect-square fast path).

    m may retain square factors built from primes beyond the bound; callers
    accept that, matching the documented normalization contract.
    """
    r = isqrt(n)
    if r * r == n:
        return r, 1
    s = 1
    m = n
    for p in _primes_to_bound():
        pp = p * p
        if pp > m:
            break
        while m % pp == 0:
            m //= pp
            s *= p
    r = isqrt(m)
    if r * r == m:
        return s * r, 1
    return s, m


@dataclass(frozen=True)
class QuadExtValue:
    """Value rat + coeff * sqrt(radicand), all parts exact rationals.

    Use :func:`quadext` to construct; it normalizes so the radicand carries
    no square factor discoverable by trial division up to 10^6 and collapses
    perfect squares into the rational part.
    """

    rat: Fraction
    coeff: Fraction
    radicand: Fraction

    @property
    def is_rational(self) -> bool:
        return self.coeff == 0

    def _compatible(self, other: "QuadExtValue") -> Fraction:
        if self.coeff == 0:
            return other.radicand
        if other.coeff == 0:
            return self.radicand
        if self.radicand != other.radicand:
            raise ValueError(
                "mixed radicands %s and %s" % (self.radicand, other.radicand)
            )
        return self.radicand

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadExtValue(rat(other), Fraction(0), Fraction(0))
        if not isinstance(other, QuadExtValue):
            return NotImplemented
        d = self._compatible(other)
        return quadext(self.rat + other.rat, self.coeff + other.coeff, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtValue(-self.rat, -self.coeff, self.radicand)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadExtValue) else -rat(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return quadext(self.rat * other, self.coeff * other, self.radicand)
        if not isinstance(other, QuadExtValue):
            return NotImplemented
        d = self._compatible(other)
        return quadext(
            self.rat * other.rat + self.coeff * other.coeff * d,
            self.rat * other.coeff + self.coeff * other.rat,
            d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExtValue":
        return QuadExtValue(self.rat, -self.coeff, self.radicand)

    def to_json(self) -> dict:
        return {
            "rat": rat_str(self.rat),
            "coeff": rat_str(self.coeff),
            "radicand": rat_str(self.radicand),
        }

    def __float__(self):
        if self.radicand < 0:
            raise ValueError("negative radicand has no real value")
        return float(self.rat) + float(self.coeff) * float(self.radicand) ** 0.5

    def __repr__(self):
        if self.coeff == 0:
            return f"QuadExtValue({rat_str(self.rat)})"
        return "QuadExtValue(%s + %s*sqrt(%s))" % (
            rat_str(self.rat),
            rat_str(self.coeff),
            rat_str(self.radicand),
        )


def quadext(rational: RationalLike, coeff: RationalLike, radicand: RationalLike) -> QuadExtValue:
    """Build a normalized quadratic-extension value.

    Square parts of the radicand's numerator and denominator move into the
    coefficient; a perfect-square (or zero) radicand collapses the value
    into its rational part. Negative radicands keep their sign.
    """
    r, c, d = rat(rational), rat(coeff), rat(radicand)
    if c == 0 or d == 0:
        return QuadExtValue(r, Fraction(0), Fraction(0))
    sign = -1 if d < 0 else 1
    num, den = abs(d.numerator), d.denominator
    sn, mn = _square_split(num)
    sd, md = _square_split(den)
    c = c * Fraction(sn, sd)
    m = Fraction(mn, md)
    if m == 1 and sign == 1:
        return QuadExtValue(r + c, Fraction(0), Fraction(0))
    return QuadExtValue(r, c, sign * m)


def quadext_sqrt(x: RationalLike) -> QuadExtValue:
    """Square root of a rational as a normalized QuadExtValue."""
    return quadext(0, 1, x)


# ---------------------------------------------------------------------------
# Dense univariate polynomials

class UniPoly:
    """Dense univariate polynomial over Q, coefficients in ascending order.

    The zero polynomial has degree -1. Instances are immutable.

    >>> f = UniPoly([1, 0, 1])   # 1 + x^2
    >>> f.degree, f(Fraction(2))
    (2, Fraction(5, 1))
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike]):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("UniPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x):
        # Horner; works for Fraction, GaussianRational, complex and mpmath
        # inputs alike since Fraction coefficients coerce rightward.
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_json(self) -> list[str]:
        return [rat_str(c) for c in self.coeffs]

    def __repr__(self):
        return "UniPoly([%s])" % ", ".join(rat_str(c) for c in self.coeffs)


def _bareiss_det(mat: list[list[int]]) -> int:
    """Determinant of an integer matrix, fraction-free (Bareiss)."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact integer division is the Bareiss invariant
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Sylvester resultant of f and g.

    Sign convention (pinned; the descending-coefficient Sylvester matrix is
    written with the f rows first): res(f, g) = lc(f)^deg(g) * prod g(alpha)
    over the roots alpha of f. In particular res(x-1, x-2) = -1, and
    res(f, g) = (-1)^(deg f * deg g) * res(g, f).
    """
    if f.degree < 0 or g.degree < 0:
        raise ZeroPolynomial("resultant of the zero polynomial")
    m, n = f.degree, g.degree
    if m == 0:
        return f.lc**n
    if n == 0:
        return g.lc**m
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    size = m + n
    rows: list[list[Fraction]] = []
    for i in range(n):
        rows.append([Fraction(0)] * i + fd + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gd + [Fraction(0)] * (size - n - 1 - i))
    # Clear denominators row-wise so Bareiss runs over the integers.
    scale = Fraction(1)
    int_rows: list[list[int]] = []
    for row in rows:
        k = 1
        for c in row:
            if c.denominator != 1:
                k = k * c.denominator // _gcd(k, c.denominator)
        scale *= k
        int_rows.append([int(c * k) for c in row])
    det = _bareiss_det(int_rows)
    return Fraction(det) / scale


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def discriminant(f: UniPoly) -> Fraction:
    """Standard discriminant (-1)^(n(n-1)/2) * res(f, f') / lc(f)."""
    n = f.degree
    if n < 2:
        raise DegreeTooLow(f"discriminant needs degree >= 2, got {n}")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


def poly_divmod(f: UniPoly, g: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Quotient and remainder of f by g over the rationals."""
    if not g.coeffs:
        raise ZeroPolynomial("division by the zero polynomial")
    rem = list(f.coeffs)
    dg, lg = g.degree, g.lc
    quo = [Fraction(0)] * max(len(rem) - dg, 0)
    for k in range(len(rem) - dg - 1, -1, -1):
        factor = rem[k + dg] / lg
        if factor == 0:
            continue
        quo[k] = factor
        for i, c in enumerate(g.coeffs):
            rem[k + i] -= factor * c
    return UniPoly(quo), UniPoly(rem[:dg])


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor, by the Euclidean algorithm."""
    a, b = f, g
    while b.coeffs:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a.coeffs:
        return a
    return a * (1 / a.lc)


def squarefree_part(f: UniPoly) -> UniPoly:
    """The product of the distinct irreducible factors of f, monic.

    Root finding by simultaneous iteration stalls on repeated roots, so
    callers facing polynomials on a discriminant locus divide them out
    first; the roots of the result are exactly the distinct roots of f.
    """
    if f.degree < 1:
        raise DegreeTooLow(f"squarefree part needs degree >= 1, got {f.degree}")
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return f * (1 / f.lc)
    q, _ = poly_divmod(f, g)
    return q * (1 / q.lc)


# ---------------------------------------------------------------------------
# Sparse trivariate polynomials

ExponentTriple = tuple[int, int, int]


class TriPoly:
    """Sparse polynomial in three variables with exact coefficients.

    Storage is a term dict keyed by exponent triples; zero coefficients are
    never stored. Serialization uses graded-lex order (total degree
    descending, then exponent triple descending), which makes the content
    hash reproducible across encodings.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[ExponentTriple, RationalLike] | Iterable):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[ExponentTriple, Fraction] = {}
        for exps, c in items:
            e = (int(exps[0]), int(exps[1]), int(exps[2]))
            if min(e) < 0:
                raise ValueError(f"negative exponent in {e}")
            c = rat(c)
            if e in clean:
                c = clean[e] + c
            if c == 0:
                clean.pop(e, None)
            else:
                clean[e] = c
        object.__setattr__(self, "terms", dict(clean))

    def __setattr__(self, *a):
        raise AttributeError("TriPoly is immutable")

    @property
    def n_terms(self) -> int:
        return len(self.terms)

    def __call__(self, x, y, z):
        # Pre-compute the powers once; exponents here run up to 13.
        px = _power_table(x, max((e[0] for e in self.terms), default=0))
        py = _power_table(y, max((e[1] for e in self.terms), default=0))
        pz = _power_table(z, max((e[2] for e in self.terms), default=0))
        acc = 0
        for (e1, e2, e3), c in self.terms.items():
            acc = acc + c * px[e1] * py[e2] * pz[e3]
        return acc

    def restrict(self, axis: int, fixed: tuple) -> UniPoly:
        """Collapse to a univariate polynomial in the given axis, the other
        two variables held at the exact values in `fixed` (in axis order).
        """
        others = [i for i in range(3) if i != axis]
        vals = {others[0]: rat(fixed[0]), others[1]: rat(fixed[1])}
        coeffs: dict[int, Fraction] = {}
        for e, c in self.terms.items():
            term = c * vals[others[0]] ** e[others[0]] * vals[others[1]] ** e[others[1]]
            k = e[axis]
            coeffs[k] = coeffs.get(k, Fraction(0)) + term
        top = max(coeffs, default=0)
        return UniPoly([coeffs.get(i, Fraction(0)) for i in range(top + 1)])

    def sorted_terms(self) -> list[tuple[ExponentTriple, Fraction]]:
        return sorted(
            self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True
        )

    def serialize(self) -> str:
        lines = [
            f"{e1} {e2} {e3} {rat_str(c)}"
            for (e1, e2, e3), c in self.sorted_terms()
        ]
        return "\n".join(lines)

    def content_hash(self) -> str:
        return hashlib.sha256(self.serialize().encode("ascii")).hexdigest()

    def __eq__(self, other):
        return isinstance(other, TriPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.sorted_terms()))

    def __repr__(self):
        return f"TriPoly({self.n_terms} terms)"


def _power_table(x, top: int) -> list:
    out = [1]
    for _ in range(top):
        out.append(out[-1] * x)
    return out


def eval_tripoly(p: TriPoly, point: Sequence[RationalLike]) -> Fraction:
    """Exact value of p at a rational point."""
    x, y, z = (rat(v) for v in point)
    return p(x, y, z)


_TERM_RE = _re.compile(r"[+-]?[^+-]+")


def tripoly_from_text(text: str, names: Sequence[str] = ("s2", "s3", "s4")) -> TriPoly:
    """Parse a human-keyed polynomial like "16*s2^7+24*s2^6-72*s3*s2^5".

    Whitespace and newlines are ignored. Every term is a signed integer (or
    p/q) coefficient times optional name^exponent factors joined by '*'.
    Exists so transcriptions can be keyed in the notation of their source
    and compared term-by-term against an independent encoding.
    """
    compact = "".join(text.split())
    if not compact:
        return TriPoly({})
    idx = {name: i for i, name in enumerate(names)}
    terms: list[tuple[ExponentTriple, Fraction]] = []
    for raw in _TERM_RE.findall(compact):
        sign = Fraction(1)
        body = raw
        if body[0] in "+-":
            if body[0] == "-":
                sign = Fraction(-1)
            body = body[1:]
        coeff = sign
        exps = [0, 0, 0]
        for factor in body.split("*"):
            if not factor:
                raise ValueError(f"empty factor in term {raw!r}")
            if factor[0].isdigit():
                coeff *= Fraction(factor)
                continue
            if "^" in factor:
                name, _, power = factor.partition("^")
                exps[idx[name]] += int(power)
            else:
                exps[idx[factor]] += 1
        terms.append(((exps[0], exps[1], exps[2]), coeff))
    return TriPoly(terms)
