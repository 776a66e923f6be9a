"""Factorization and irreducibility evidence over finite fields.

Three kinds of verdicts come out of this module, and they are kept
deliberately distinct:

* closed-form factorizations of the determinant quotients into linear
  factors (checked by exact polynomial equality, never numerically);
* signature witnesses: divisibility patterns on the Z-coefficients that
  force any factor to have large Z-degree, the structural half of the
  irreducibility argument;
* the power-of-a-linear-form criterion: a homogeneous polynomial whose
  Z-constant coefficient is a pure power of an irreducible linear form not
  dividing the Z^1 coefficient is irreducible.

Absence of linear factors alone never yields an "irreducible" verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .ffield import FFElement, FieldSpec, make_field, roots_of_unity
from .mpoly import (
    RATIONALS,
    ZERO_POLY,
    CoeffField,
    LinearForm,
    MultiPoly,
    coeff_from_int,
    coeff_one,
    exact_divide,
    is_homogeneous,
    is_rationals,
    linear_multiplicity,
    substitute,
)
from .vschur import ExponentPair, i_poly, t_poly

#: Default cap on field size for full (alpha, beta) sweeps, which are
#: quadratic in the field order.
SWEEP_CEILING = 512


def _mult_json(m):
    return "inf" if m == math.inf else m


@dataclass(frozen=True)
class SignatureWitness:
    """Divisibility pattern of Z-coefficients relative to one linear prime.

    For a lower signature of length L the pattern is: multiplicity exactly
    one at Z^0, at least one for 0 < j < L, zero at Z^L.  An upper
    signature mirrors this from the top coefficient down.
    """

    kind: str  # "lower" | "upper"
    length: int
    root: object  # the theta / zeta indexing the prime form
    prime_form: LinearForm
    checks: tuple  # ((z_power, multiplicity), ...)
    verdict: bool

    def to_json(self) -> dict:
        root = self.root.token() if isinstance(self.root, FFElement) else str(self.root)
        return {
            "kind": self.kind,
            "length": self.length,
            "root": root,
            "checks": [[z, _mult_json(m)] for z, m in self.checks],
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class FactorReport:
    """Linear factors Z - alpha*X - beta*Y found in a polynomial."""

    input_label: str
    field: FieldSpec
    linear_factors: tuple  # (((alpha, beta), multiplicity), ...)
    leading_coeff: str
    residual_degree_in_z: int
    fully_split: bool

    def factor_count(self) -> int:
        return sum(m for _, m in self.linear_factors)

    def to_json(self) -> dict:
        return {
            "input": self.input_label,
            "field": self.field.to_json(),
            "linear_factors": [
                {"alpha": a.token(), "beta": b.token(), "multiplicity": m}
                for (a, b), m in self.linear_factors
            ],
            "leading_coeff": self.leading_coeff,
            "residual_degree_in_z": self.residual_degree_in_z,
            "fully_split": self.fully_split,
        }


@dataclass(frozen=True)
class ProbeReport:
    """Values of a polynomial and its three partials at one point."""

    point: tuple
    value: object
    partials: tuple  # values of the X, Y, Z partials
    vanishing: tuple  # (f, dX, dY, dZ) zero-flags
    singular: bool

    def to_json(self) -> dict:
        def tok(v):
            return v.token() if isinstance(v, FFElement) else str(v)

        return {
            "point": [tok(v) for v in self.point],
            "value": tok(self.value),
            "partials": [tok(v) for v in self.partials],
            "vanishing": list(self.vanishing),
            "singular": self.singular,
        }


def linear_factors_over(f: MultiPoly, spec: FieldSpec, ceiling: int = SWEEP_CEILING) -> FactorReport:
    """Sweep all (alpha, beta) in the field, extracting Z - alpha*X - beta*Y.

    Divisibility is detected by the substitution Z <- alpha*X + beta*Y
    annihilating the polynomial; multiplicities come from repeated exact
    division.  The sweep order (and hence the factor list) is lexicographic
    by coordinate vectors.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.field != spec:
        raise ValueError(f"polynomial lives over {f.field}, not {spec}")
    if spec.order() > ceiling:
        raise ValueError(
            f"field order {spec.order()} exceeds the sweep ceiling {ceiling}"
        )
    z_degree = f.degree_in("Z")
    leading = f.coeff_of("Z", z_degree)
    residual = f
    factors = []
    for alpha in spec.elements():
        for beta in spec.elements():
            mult = 0
            while substitute(residual, "Z", LinearForm(spec, alpha, beta)).is_zero():
                divisor = MultiPoly(
                    spec, {(0, 0, 1): 1, (1, 0, 0): -alpha, (0, 1, 0): -beta}
                )
                residual = exact_divide(residual, divisor)
                mult += 1
            if mult:
                factors.append(((alpha, beta), mult))
    residual_deg = residual.degree_in("Z")
    return FactorReport(
        input_label=f.to_text(),
        field=spec,
        linear_factors=tuple(factors),
        leading_coeff=leading.to_text(),
        residual_degree_in_z=residual_deg,
        fully_split=residual_deg == 0,
    )


def verify_fact_eq1(p: int, r: int) -> tuple[bool, FactorReport]:
    """Check that the quotient for (p^r, 1) splits into its closed-form factors.

    The claimed identity: over F_{p^r}, the quotient polynomial equals the
    product of Z - alpha*X + (alpha - 1)*Y over all alpha other than 0, 1.
    Both sides are monic in Z; equality is exact.
    """
    spec = make_field(p, r)
    q = spec.order()
    T = t_poly(ExponentPair(q, 1, spec))
    zero, one = spec.zero(), spec.one()
    product = MultiPoly.one(spec)
    factors = []
    for alpha in spec.elements():
        if alpha == zero or alpha == one:
            continue
        lin = MultiPoly(spec, {(0, 0, 1): 1, (1, 0, 0): -alpha, (0, 1, 0): alpha - 1})
        product = product * lin
        factors.append(((alpha, one - alpha), 1))
    ok = product == T
    report = FactorReport(
        input_label=f"T({q},1) over {spec}",
        field=spec,
        linear_factors=tuple(factors),
        leading_coeff="1",
        residual_degree_in_z=0 if ok else (T.degree_in("Z") or 0),
        fully_split=ok,
    )
    return ok, report


def verify_fact_eq2(p: int, r: int) -> tuple[bool, FactorReport]:
    """Check the companion splitting for the pair (p^(2r) - 1, p^r - 1).

    Over F_{p^r} the quotient polynomial equals the product of
    Z - alpha*X - beta*Y over all nonzero alpha, beta; the factor count is
    (p^r - 1)^2, its degree in Z.
    """
    spec = make_field(p, r)
    q = spec.order()
    T = t_poly(ExponentPair(q * q - 1, q - 1, spec))
    product = MultiPoly.one(spec)
    factors = []
    for alpha in spec.elements():
        if alpha.is_zero():
            continue
        for beta in spec.elements():
            if beta.is_zero():
                continue
            lin = MultiPoly(spec, {(0, 0, 1): 1, (1, 0, 0): -alpha, (0, 1, 0): -beta})
            product = product * lin
            factors.append(((alpha, beta), 1))
    ok = product == T
    report = FactorReport(
        input_label=f"T({q * q - 1},{q - 1}) over {spec}",
        field=spec,
        linear_factors=tuple(factors),
        leading_coeff="1",
        residual_degree_in_z=0 if ok else (T.degree_in("Z") or 0),
        fully_split=ok,
    )
    return ok, report


def divides(f: MultiPoly, g: MultiPoly) -> bool:
    """True iff f divides g exactly; False is a verdict, not an error."""
    if f.is_zero():
        raise ValueError("divisibility by the zero polynomial is undefined")
    try:
        exact_divide(g, f)
    except ArithmeticError:
        return False
    return True


def _roots_of_unity_any(n: int, field: CoeffField):
    if is_rationals(field):
        if n == 1:
            return [Fraction(1)]
        if n == 2:
            return [Fraction(1), Fraction(-1)]
        raise ValueError(
            f"the rationals contain no primitive {n}-th roots of unity; "
            "use a finite field containing them"
        )
    return roots_of_unity(n, field)


def signature_witness(e: ExponentPair) -> list[SignatureWitness]:
    """All lower and upper signature witnesses for the intermediate quotient.

    Lower signatures have length B relative to X - theta*Y for each theta
    with theta^(A-B) = 1, theta^d != 1; upper signatures have length A - B
    relative to X - zeta*Y for each zeta with zeta^B = 1, zeta^d != 1.
    Requires B != d and A - B != d (otherwise one of the two signature
    families is empty and this route says nothing; see
    eisenstein_like_check for the companion criterion) and, in
    characteristic p, that p divides neither B nor A - B.
    """
    A, B, d = e.A, e.B, e.d
    if B == d or A - B == d:
        raise ValueError(
            f"(A,B)=({A},{B}) has B = d or A - B = d; the signature route "
            "does not apply -- see eisenstein_like_check"
        )
    p = e.characteristic()
    if p and (B % p == 0 or (A - B) % p == 0):
        raise ValueError(
            f"characteristic {p} divides B or A - B; signatures degenerate"
        )
    I = i_poly(e)
    dth = set(_roots_of_unity_any(d, e.field))
    top = I.degree_in("Z")  # equals A
    witnesses = []
    for theta in _roots_of_unity_any(A - B, e.field):
        if theta in dth:
            continue
        form = LinearForm(e.field, 1, -theta)
        checks = tuple(
            (j, linear_multiplicity(I.coeff_of("Z", j), form)) for j in range(B + 1)
        )
        mults = dict(checks)
        verdict = (
            mults[0] == 1
            and all(mults[j] >= 1 for j in range(1, B))
            and mults[B] == 0
        )
        witnesses.append(SignatureWitness("lower", B, theta, form, checks, verdict))
    for zeta in _roots_of_unity_any(B, e.field):
        if zeta in dth:
            continue
        form = LinearForm(e.field, 1, -zeta)
        checks = tuple(
            (top - j, linear_multiplicity(I.coeff_of("Z", top - j), form))
            for j in range(A - B + 1)
        )
        mults = dict(checks)
        verdict = (
            mults[top] == 1
            and all(mults[top - j] >= 1 for j in range(1, A - B))
            and mults[top - (A - B)] == 0
        )
        witnesses.append(SignatureWitness("upper", A - B, zeta, form, checks, verdict))
    return witnesses


def eisenstein_like_check(f: MultiPoly, P: LinearForm) -> bool:
    """Irreducibility via the constant-coefficient power criterion.

    True iff f, viewed in Z with bivariate coefficients, has Z-constant
    coefficient equal to a unit times a positive power of P while P does
    not divide the Z^1 coefficient.  A True verdict proves irreducibility
    of the homogeneous f over the coefficient field.
    """
    hom = is_homogeneous(f)
    if hom is None or hom == ZERO_POLY:
        raise ValueError("the criterion applies to homogeneous polynomials only")
    if P.is_zero():
        raise ValueError("P must be a nonzero linear form")
    f0 = f.coeff_of("Z", 0)
    if f0.is_zero():
        return False
    divisor = P.as_poly()
    power = 0
    residual = f0
    while True:
        try:
            residual = exact_divide(residual, divisor)
        except ArithmeticError:
            break
        power += 1
    if power < 1 or residual.total_degree() != 0:
        return False
    return linear_multiplicity(f.coeff_of("Z", 1), P) == 0


def singular_point_probe(f: MultiPoly, point) -> ProbeReport:
    """Evaluate f and its three partials at a point; singular iff all vanish."""
    from .mpoly import coerce_coeff, partial_derivative, _is_coeff_zero

    hom = is_homogeneous(f)
    if hom is None or hom == ZERO_POLY:
        raise ValueError("the probe applies to nonzero homogeneous polynomials")
    values = tuple(coerce_coeff(f.field, v) for v in point)
    if all(_is_coeff_zero(v) for v in values):
        raise ValueError("the zero point is not a projective point")
    value = f.evaluate(values)
    partials = tuple(partial_derivative(f, v).evaluate(values) for v in ("X", "Y", "Z"))
    vanishing = (_is_coeff_zero(value),) + tuple(_is_coeff_zero(v) for v in partials)
    return ProbeReport(
        point=values,
        value=value,
        partials=partials,
        vanishing=vanishing,
        singular=all(vanishing),
    )


def grad_eval_identity(k: int, phi, psi) -> bool:
    """Check the evaluated Z-derivative of the (k,1) quotient at (phi, psi, 1).

    phi and psi must be (k-1)-th roots of unity with phi, psi, 1 pairwise
    distinct, and the characteristic must divide neither k nor k - 1; the
    asserted value is (k - 1) / ((1 - phi)(1 - psi)).
    """
    from .mpoly import partial_derivative

    if isinstance(phi, FFElement) or isinstance(psi, FFElement):
        if not (isinstance(phi, FFElement) and isinstance(psi, FFElement)):
            raise ValueError("phi and psi must live in one field")
        if phi.spec != psi.spec:
            raise ValueError("phi and psi must live in one field")
        field: CoeffField = phi.spec
        p = field.p
        if k % p == 0 or (k - 1) % p == 0:
            raise ValueError(f"characteristic {p} divides k or k - 1")
    else:
        field = RATIONALS
        phi, psi = Fraction(phi), Fraction(psi)
    one = coeff_one(field)
    if phi ** (k - 1) != one or psi ** (k - 1) != one:
        raise ValueError(f"phi and psi must be (k-1)-th roots of unity, k={k}")
    if phi == psi or phi == one or psi == one:
        raise ValueError("phi, psi and 1 must be pairwise distinct")
    T = t_poly(ExponentPair(k, 1, field))
    lhs = partial_derivative(T, "Z").evaluate((phi, psi, 1))
    rhs = coeff_from_int(field, k - 1) / ((one - phi) * (one - psi))
    return lhs == rhs
