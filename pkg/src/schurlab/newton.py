"""Power sums in two variables and the counterexample family they admit.

In characteristic p, pairs of linear forms z = alpha*x + (1-alpha)*y,
w = (1-alpha)*x + alpha*y can reproduce x^m + y^m for whole families of
exponents m, which is what makes three power sums fail to generate the
full symmetric field for suitably chosen indices.  This module constructs
such pairs, checks the polynomial identities exactly (by direct expansion
or through a Frobenius shortcut that never expands huge powers), and
computes the resulting field-extension degrees twice: by closed formula
and by a brute-force counting oracle.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .ffield import DESK_CEILING, FFElement, FieldSpec, frobenius, is_prime, make_field
from .mpoly import (
    RATIONALS,
    CoeffField,
    LinearForm,
    MultiPoly,
    partial_derivative,
)


def newton_poly(m: int, field: CoeffField = RATIONALS) -> MultiPoly:
    """The power sum x^m + y^m (kept in the first two variable slots)."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    return MultiPoly(field, {(m, 0, 0): 1, (0, m, 0): 1})


@dataclass(frozen=True)
class NewtonTriple:
    """Indices a > b > c >= 1 of three power sums, with divisibility flags."""

    a: int
    b: int
    c: int
    p: int = 0  # characteristic, 0 or prime

    def __post_init__(self):
        if not (self.a > self.b > self.c >= 1):
            raise ValueError(f"need a > b > c >= 1, got {(self.a, self.b, self.c)}")
        if self.p and not is_prime(self.p):
            raise ValueError(f"characteristic must be 0 or prime, got {self.p}")

    @property
    def gcd(self) -> int:
        return math.gcd(math.gcd(self.a, self.b), self.c)

    @property
    def p_divides(self) -> dict:
        """Which of a, b, c and their differences the characteristic divides."""
        if not self.p:
            return {k: False for k in ("a", "b", "c", "a-b", "a-c", "b-c")}
        return {
            "a": self.a % self.p == 0,
            "b": self.b % self.p == 0,
            "c": self.c % self.p == 0,
            "a-b": (self.a - self.b) % self.p == 0,
            "a-c": (self.a - self.c) % self.p == 0,
            "b-c": (self.b - self.c) % self.p == 0,
        }

    def exponent_pair(self, field: CoeffField):
        """The difference pair (a - c, b - c) indexing the determinant family."""
        from .vschur import ExponentPair

        return ExponentPair(self.a - self.c, self.b - self.c, field)


def two_generator_degree(a: int, b: int, p: int = 0) -> int:
    """Degree of the symmetric field over the field of two power sums.

    Valid for coprime a > b >= 1 with the characteristic dividing neither:
    a*b/2 when a*b is even, (a-1)*b/2 when odd.  Out-of-hypothesis input is
    refused rather than extrapolated.
    """
    if not (a > b >= 1):
        raise ValueError(f"need a > b >= 1, got ({a}, {b})")
    if math.gcd(a, b) != 1:
        raise ValueError(f"indices must be coprime, got gcd={math.gcd(a, b)}")
    if p:
        if not is_prime(p):
            raise ValueError(f"characteristic must be 0 or prime, got {p}")
        if a % p == 0 or b % p == 0:
            raise ValueError(
                f"characteristic {p} divides an index; the formula does not apply"
            )
    return a * b // 2 if (a * b) % 2 == 0 else (a - 1) * b // 2


def jacobian_nonzero_check(a: int, b: int, p: int = 0) -> bool:
    """Whether the Jacobian of (x, y) -> (x^a + y^a, x^b + y^b) is nonzero.

    Computed symbolically from the partial derivatives; over characteristic
    p this is equivalent to p dividing neither a nor b.
    """
    if not (a > b >= 1):
        raise ValueError(f"need a > b >= 1, got ({a}, {b})")
    field: CoeffField = RATIONALS if p == 0 else make_field(p, 1)
    na, nb = newton_poly(a, field), newton_poly(b, field)
    jac = partial_derivative(na, "X") * partial_derivative(nb, "Y") - partial_derivative(
        na, "Y"
    ) * partial_derivative(nb, "X")
    return not jac.is_zero()


def find_irreducible_eta(p: int) -> int:
    """Smallest eta in F_p making X^2 - 2*eta*X + eta rootless over F_p.

    Exists for every odd prime; the two roots then lie in the quadratic
    extension and are swapped by Frobenius.
    """
    if p == 2:
        raise ValueError("characteristic 2 uses a cube root of unity instead")
    if not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    for eta in range(p):
        if all((x * x - 2 * eta * x + eta) % p for x in range(p)):
            return eta
    raise AssertionError("unreachable: a rootless eta exists for every odd p")


@dataclass(frozen=True)
class AlternativePair:
    """The pair z = alpha*x + (1-alpha)*y, w = (1-alpha)*x + alpha*y."""

    alpha: FFElement
    z: LinearForm
    w: LinearForm
    ambient: FieldSpec

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha.token(),
            "z": [self.z.c_x.token(), self.z.c_y.token()],
            "w": [self.w.c_x.token(), self.w.c_y.token()],
            "ambient": self.ambient.to_json(),
        }


def build_alternative_pair(p: int, eta: int | None = None) -> AlternativePair:
    """Construct the pair over F_{p^2} (odd p) or F_4 (p = 2).

    For odd p, alpha is the first root (by coordinate vector) of the
    rootless quadratic for eta; its Frobenius conjugate beta satisfies
    2*alpha*beta = alpha + beta = 2*eta, which is verified here.  For
    p = 2, alpha is the first primitive cube root of unity.
    """
    if p == 2:
        ambient = make_field(2, 2)
        one = ambient.one()
        alpha = next(
            x for x in ambient.elements() if x**3 == one and x != one and not x.is_zero()
        )
    else:
        if eta is None:
            eta = find_irreducible_eta(p)
        if any((x * x - 2 * eta * x + eta) % p == 0 for x in range(p)):
            raise ValueError(f"eta={eta} has a root mod {p}; pick a rootless eta")
        ambient = make_field(p, 2)
        roots = [
            x
            for x in ambient.elements()
            if (x * x - 2 * eta * x + eta).is_zero()
        ]
        alpha = roots[0]
        beta = frobenius(alpha, 1)
        if 2 * alpha * beta != alpha + beta or alpha + beta != ambient.from_int(2 * eta):
            raise ArithmeticError("conjugate-root invariant failed at construction")
    z = LinearForm(ambient, alpha, 1 - alpha)
    w = LinearForm(ambient, 1 - alpha, alpha)
    return AlternativePair(alpha=alpha, z=z, w=w, ambient=ambient)


#: Largest exponent the direct expansion mode will take on.
DIRECT_EXPANSION_CAP = 10**4


def frobenius_power_shape(m: int, p: int) -> int | None:
    """j >= 1 with m = p^j + 1, or None if m has no such shape."""
    t, j = m - 1, 0
    while t > 1 and t % p == 0:
        t //= p
        j += 1
    return j if t == 1 and j >= 1 else None


def verify_newton_identity(pair: AlternativePair, m: int, mode: str = "direct") -> bool:
    """Whether z^m + w^m equals x^m + y^m as polynomials over the ambient field.

    ``direct`` expands the powers (bounded by DIRECT_EXPANSION_CAP);
    ``frobenius_shortcut`` requires m = p^j + 1 and rewrites u^(p^j+1) as
    u^(p^j) * u, mapping the form coefficients through j Frobenius steps,
    so nothing large is ever expanded.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    field = pair.ambient
    rhs = newton_poly(m, field)
    if mode == "direct":
        if m > DIRECT_EXPANSION_CAP:
            raise ValueError(
                f"m={m} is too large to expand directly; use frobenius_shortcut"
            )
        lhs = pair.z.as_poly() ** m + pair.w.as_poly() ** m
        return lhs == rhs
    if mode == "frobenius_shortcut":
        j = frobenius_power_shape(m, field.p)
        if j is None:
            raise ValueError(
                f"shortcut mode needs m = {field.p}^j + 1 with j >= 1, got m={m}"
            )
        q = field.p**j

        def twisted(form: LinearForm) -> MultiPoly:
            return MultiPoly(
                field,
                {(q, 0, 0): frobenius(form.c_x, j), (0, q, 0): frobenius(form.c_y, j)},
            )

        lhs = twisted(pair.z) * pair.z.as_poly() + twisted(pair.w) * pair.w.as_poly()
        return lhs == rhs
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class TowerParams:
    """Exponent data (p, r, s) of the three indices p^r + 1, p^s + 1, 1."""

    p: int
    r: int
    s: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if not (self.r > self.s >= 0):
            raise ValueError(f"need r > s >= 0, got r={self.r}, s={self.s}")

    @property
    def m(self) -> int:
        return math.gcd(self.r, self.s)


@dataclass(frozen=True)
class DegreeReport:
    """Extension degree by closed formula and/or by the counting oracle."""

    p: int
    r: int
    s: int
    m: int
    formula_value: int | None
    oracle_count: int | None
    oracle_value: int | None
    agree: bool | None

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "s": self.s,
            "m": self.m,
            "formula": self.formula_value,
            "oracle_count": self.oracle_count,
            "oracle": self.oracle_value,
            "agree": self.agree,
        }


@functools.lru_cache(maxsize=None)
def _frobenius_step_table(spec: FieldSpec) -> dict:
    """x -> x^p for every element, precomputed once per field."""
    return {x: x**spec.p for x in spec.elements()}


def brute_count_alternatives(t: TowerParams, ceiling: int = DESK_CEILING) -> int:
    """Count alpha in F_{p^(r-s)} with 2*alpha*alpha^(p^s) = alpha + alpha^(p^s).

    Exhaustive enumeration; the count always includes the trivial
    alpha = 0, 1 and is even.  In characteristic 2 the condition
    degenerates to alpha^(p^s) = alpha.
    """
    if t.s < 1:
        raise ValueError("counting needs r > s >= 1")
    n = t.r - t.s
    if t.p**n > ceiling:
        raise ValueError(f"field order {t.p}^{n} exceeds the ceiling {ceiling}")
    spec = make_field(t.p, n)
    step = _frobenius_step_table(spec)
    s_eff = t.s % n if n > 0 else 0
    count = 0
    for alpha in spec.elements():
        beta = alpha
        for _ in range(s_eff):
            beta = step[beta]
        if 2 * alpha * beta == alpha + beta:
            count += 1
    return count


def degree_of_extension(
    t: TowerParams, mode: str = "both", ceiling: int = DESK_CEILING
) -> DegreeReport:
    """Degree of the symmetric field over the field of the three power sums.

    ``formula`` applies the closed forms: 2^(m-1) in characteristic 2;
    otherwise 1 when 2m does not divide r - s and (p^m + 1)/2 when it
    does.  ``oracle`` divides the brute count by two.  ``both`` computes
    the two independently and reports whether they agree.
    """
    if t.s < 1:
        raise ValueError("the degree formula requires r > s >= 1")
    if mode not in ("formula", "oracle", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    m = t.m
    formula = None
    if mode in ("formula", "both"):
        if t.p == 2:
            formula = 2 ** (m - 1)
        elif (t.r - t.s) % (2 * m) == 0:
            formula = (t.p**m + 1) // 2
        else:
            formula = 1
    count = value = None
    if mode in ("oracle", "both"):
        count = brute_count_alternatives(t, ceiling)
        if count % 2:
            raise ArithmeticError(f"odd alternative count {count}; invariant broken")
        value = count // 2
    agree = (formula == value) if mode == "both" else None
    return DegreeReport(
        p=t.p,
        r=t.r,
        s=t.s,
        m=m,
        formula_value=formula,
        oracle_count=count,
        oracle_value=value,
        agree=agree,
    )


def gcd_reduction_degree(g: int, base_degree) -> Fraction:
    """Rescale a degree through the index-gcd reduction: g^2 times the base."""
    if g < 1:
        raise ValueError(f"need g >= 1, got {g}")
    return Fraction(g * g) * Fraction(base_degree)
