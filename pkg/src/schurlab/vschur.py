"""Determinantal polynomials in three variables and their Schur identities.

The central family: for an exponent pair A > B >= 1 with d = gcd(A, B),
the determinant of the 3x3 matrix with rows (X^A, Y^A, Z^A),
(X^B, Y^B, Z^B), (1, 1, 1) is divisible by the Vandermonde determinant in
X^d, Y^d, Z^d, and the exact quotient is a symmetric polynomial: the Schur
polynomial of the partition (A/d - 2, B/d - 1, 0) evaluated at
X^d, Y^d, Z^d.  This module builds all of these exactly, over the
rationals or any finite field, and cross-asserts the determinant against
its closed three-term form at construction time.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .ffield import DESK_CEILING, FieldSpec, FieldTooSmallError, roots_of_unity
from .mpoly import (
    RATIONALS,
    CoeffField,
    LinearForm,
    MultiPoly,
    exact_divide,
    is_rationals,
)


@dataclass(frozen=True)
class ExponentPair:
    """The pair (A, B) with A > B >= 1, over a chosen coefficient field."""

    A: int
    B: int
    field: CoeffField = RATIONALS

    def __post_init__(self):
        if not (self.A > self.B >= 1):
            raise ValueError(f"need A > B >= 1, got A={self.A}, B={self.B}")

    @property
    def d(self) -> int:
        return math.gcd(self.A, self.B)

    @property
    def partition(self) -> "Partition3":
        d = self.d
        return Partition3((self.A // d - 2, self.B // d - 1, 0))

    def characteristic(self) -> int:
        return 0 if is_rationals(self.field) else self.field.p


@dataclass(frozen=True)
class Partition3:
    """A partition with at most three parts."""

    parts: tuple[int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        a, b, c = self.parts
        if not (a >= b >= c >= 0):
            raise ValueError(f"parts must be non-increasing and >= 0, got {self.parts}")


def _generalized_vandermonde(exps: tuple[int, int, int], d: int, field: CoeffField) -> MultiPoly:
    """det of the matrix with rows (X^(e*d), Y^(e*d), Z^(e*d)) for e in exps."""
    e1, e2, e3 = (e * d for e in exps)
    terms = {}
    for (a, b, c), sign in (
        ((e1, e2, e3), 1),
        ((e1, e3, e2), -1),
        ((e2, e3, e1), 1),
        ((e2, e1, e3), -1),
        ((e3, e1, e2), 1),
        ((e3, e2, e1), -1),
    ):
        terms[(a, b, c)] = terms.get((a, b, c), 0) + sign
    return MultiPoly(field, terms)


def vandermonde(d: int, field: CoeffField = RATIONALS) -> MultiPoly:
    """(X^d - Y^d)(Z^d - X^d)(Z^d - Y^d), expanded."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    return _generalized_vandermonde((2, 1, 0), d, field)


def r_poly(e: ExponentPair) -> MultiPoly:
    """The determinant for (A, B), built two ways and cross-asserted.

    Route one is the cofactor expansion of the matrix; route two is the
    closed form Z^A(X^B - Y^B) - Z^B(X^A - Y^A) + X^B Y^B (X^(A-B) - Y^(A-B)).
    """
    A, B, field = e.A, e.B, e.field
    det = _generalized_vandermonde((A, B, 0), 1, field)
    closed = MultiPoly(
        field,
        {
            (B, 0, A): 1,
            (0, B, A): -1,
            (A, 0, B): -1,
            (0, A, B): 1,
            (A, B, 0): 1,
            (B, A, 0): -1,
        },
    )
    if det != closed:
        raise ArithmeticError(
            f"determinant expansion and closed form disagree for (A,B)=({A},{B})"
        )
    return det


def i_poly(e: ExponentPair, *, unity_check: bool = True, ceiling: int = DESK_CEILING) -> MultiPoly:
    """The intermediate quotient R / (X^d - Y^d).

    When the characteristic divides none of A, B, A - B, the quotient is
    additionally cross-checked against its product expansion over roots of
    unity: Z^A prod(X - zY | z^B = 1, z^d != 1) - Z^B prod(X - zY | z^A = 1,
    z^d != 1) + X^B Y^B prod(X - zY | z^(A-B) = 1, z^d != 1).  The check
    needs a field containing all those roots; it is skipped with a warning
    when building one would exceed the ceiling.
    """
    field = e.field
    d = e.d
    divisor = MultiPoly(field, {(d, 0, 0): 1, (0, d, 0): -1})
    quotient = exact_divide(r_poly(e), divisor)
    if unity_check:
        _i_poly_unity_check(e, quotient, ceiling)
    return quotient


def _i_poly_unity_check(e: ExponentPair, quotient: MultiPoly, ceiling: int) -> None:
    p = e.characteristic()
    if p == 0:
        return  # the product form lives over roots of unity; finite fields only
    A, B, d = e.A, e.B, e.d
    if A % p == 0 or B % p == 0 or (A - B) % p == 0:
        return
    n = math.lcm(A, B, A - B)
    spec = e.field
    if (spec.order() - 1) % n == 0:
        big = spec
    elif spec.r == 1:
        # only the prime field embeds canonically; find the minimal level
        rr = 1
        acc = p % n
        while acc != 1:
            acc = (acc * p) % n
            rr += 1
        if p**rr > ceiling:
            warnings.warn(
                f"roots-of-unity cross-check skipped for (A,B)=({A},{B}): "
                f"needs F({p}^{rr}) > ceiling {ceiling}",
                RuntimeWarning,
                stacklevel=3,
            )
            return
        from .ffield import make_field

        big = make_field(p, rr)
    else:
        warnings.warn(
            f"roots-of-unity cross-check skipped for (A,B)=({A},{B}): "
            f"{spec} lacks the roots and embeddings beyond the prime field "
            "are out of scope",
            RuntimeWarning,
            stacklevel=3,
        )
        return

    def lifted(poly: MultiPoly) -> MultiPoly:
        if big == spec:
            return poly
        return MultiPoly(big, {m: big.from_int(c.coeffs[0]) for m, c in poly._terms.items()})

    try:
        product_form = _unity_product_form(A, B, d, big)
    except FieldTooSmallError as exc:  # pragma: no cover - level chosen above
        warnings.warn(str(exc), RuntimeWarning, stacklevel=3)
        return
    if lifted(quotient) != product_form:
        raise ArithmeticError(
            f"quotient and roots-of-unity product disagree for (A,B)=({A},{B})"
        )


def _unity_product_form(A: int, B: int, d: int, spec: FieldSpec) -> MultiPoly:
    one = MultiPoly.one(spec)

    def prod_over(n: int) -> MultiPoly:
        dth = set(roots_of_unity(d, spec))
        out = one
        for zeta in roots_of_unity(n, spec):
            if zeta in dth:
                continue
            out = out * LinearForm(spec, 1, -zeta).as_poly()
        return out

    ZA = MultiPoly.monomial(spec, (0, 0, A))
    ZB = MultiPoly.monomial(spec, (0, 0, B))
    XBYB = MultiPoly.monomial(spec, (B, B, 0))
    return ZA * prod_over(B) - ZB * prod_over(A) + XBYB * prod_over(A - B)


def t_poly(e: ExponentPair) -> MultiPoly:
    """The exact quotient of the determinant by the level-d Vandermonde.

    Symmetric of total degree A + B - 3d and degree A - 2d in Z; the pair
    A = 2d gives the constant 1.
    """
    return exact_divide(r_poly(e), vandermonde(e.d, e.field))


def complete_homogeneous(k: int, field: CoeffField = RATIONALS) -> MultiPoly:
    """Sum of all monomials of total degree k in X, Y, Z."""
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    terms = {}
    for a in range(k + 1):
        for b in range(k - a + 1):
            terms[(a, b, k - a - b)] = 1
    return MultiPoly(field, terms)


def schur_bialternant(partition: Partition3, d: int = 1, field: CoeffField = RATIONALS) -> MultiPoly:
    """The bialternant quotient for the partition, evaluated at X^d, Y^d, Z^d."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    l1, l2, l3 = partition.parts
    numerator = _generalized_vandermonde((l1 + 2, l2 + 1, l3), d, field)
    return exact_divide(numerator, vandermonde(d, field))


def inverted_transform(f: MultiPoly, D: int) -> MultiPoly:
    """(XYZ)^D * f(1/X, 1/Y, 1/Z): each exponent triple reflects to D minus it."""
    out = {}
    for (a, b, c), coeff in f._terms.items():
        if a > D or b > D or c > D:
            raise ValueError(
                f"reflection bound {D} is below the degree of {f.to_text()}"
            )
        out[(D - a, D - b, D - c)] = coeff
    return MultiPoly(f.field, out)
