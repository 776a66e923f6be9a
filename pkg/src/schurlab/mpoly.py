"""Sparse exact multivariate polynomials over the rationals or a finite field.

Monomials are exponent triples for the fixed variable order (X, Y, Z);
two-variable work simply leaves the unused slot at zero.  Coefficients are
either :class:`fractions.Fraction` (coefficient field ``"rationals"``) or
:class:`schurlab.ffield.FFElement` values of one shared
:class:`~schurlab.ffield.FieldSpec`.  There is no floating point anywhere.

The monomial order used throughout (leading terms, division, text output)
is graded lexicographic with X > Y > Z.  Polynomials are immutable and in
canonical form: no zero coefficient is ever stored.

Division is exact division only: :func:`exact_divide` returns the quotient
when the remainder vanishes and raises :class:`InexactDivisionError`
otherwise, which downstream code uses as a divisibility verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .ffield import FFElement, FieldMismatchError, FieldSpec

#: Sentinel naming the rational coefficient field.
RATIONALS = "rationals"

#: Distinguished verdict of :func:`is_homogeneous` for the zero polynomial.
ZERO_POLY = "zero"

VARS = ("X", "Y", "Z")
_VAR_INDEX = {"X": 0, "Y": 1, "Z": 2, "x": 0, "y": 1, "z": 2}

#: Exponents are kept below this bound; crossing it is a checked error.
EXPONENT_CAP = 1 << 62

CoeffField = Union[str, FieldSpec]
Monomial = tuple[int, int, int]


class ExponentOverflowError(OverflowError):
    """A monomial exponent crossed EXPONENT_CAP."""


class InexactDivisionError(ArithmeticError):
    """Division left a nonzero remainder: the divisibility claim is false."""


def _order_key(mon: Monomial) -> tuple[int, int, int]:
    # graded lex, X > Y > Z
    return (mon[0] + mon[1] + mon[2], mon[0], mon[1])


# -- coefficient field helpers ----------------------------------------------

def is_rationals(field: CoeffField) -> bool:
    return field == RATIONALS


def coeff_zero(field: CoeffField):
    return Fraction(0) if is_rationals(field) else field.zero()


def coeff_one(field: CoeffField):
    return Fraction(1) if is_rationals(field) else field.one()


def coeff_from_int(field: CoeffField, n: int):
    return Fraction(n) if is_rationals(field) else field.from_int(n)


def coerce_coeff(field: CoeffField, value):
    """Bring an int/Fraction/FFElement into the coefficient field."""
    if isinstance(value, FFElement):
        if is_rationals(field) or value.spec != field:
            raise FieldMismatchError(f"coefficient {value} does not belong to {field}")
        return value
    if isinstance(value, Fraction):
        if not is_rationals(field):
            if value.denominator != 1:
                raise FieldMismatchError(f"cannot place {value} in {field}")
            return field.from_int(value.numerator)
        return value
    if isinstance(value, int):
        return coeff_from_int(field, value)
    raise TypeError(f"unsupported coefficient type {type(value).__name__}")


def coeff_token(field: CoeffField, c) -> str:
    """Serialized coefficient: Fraction text, bare residue, or p^r:[...]."""
    if is_rationals(field):
        return str(c)
    if field.r == 1:
        return str(c.coeffs[0])
    return c.token()


def parse_coeff_token(field: CoeffField, token: str):
    if is_rationals(field):
        return Fraction(token)
    if ":" in token:
        from .ffield import element_from_token

        return element_from_token(token, field)
    return field.from_int(int(token))


@dataclass(frozen=True)
class LinearForm:
    """The bivariate linear form c_x*X + c_y*Y over one coefficient field."""

    field: CoeffField
    c_x: object
    c_y: object

    def __post_init__(self):
        object.__setattr__(self, "c_x", coerce_coeff(self.field, self.c_x))
        object.__setattr__(self, "c_y", coerce_coeff(self.field, self.c_y))

    def as_poly(self) -> "MultiPoly":
        return MultiPoly(self.field, {(1, 0, 0): self.c_x, (0, 1, 0): self.c_y})

    def is_zero(self) -> bool:
        return self.as_poly().is_zero()


class MultiPoly:
    """Immutable sparse polynomial in X, Y, Z over a fixed coefficient field."""

    __slots__ = ("field", "_terms")

    def __init__(self, field: CoeffField, terms=None):
        clean: dict[Monomial, object] = {}
        for mon, c in (terms or {}).items():
            mon = tuple(int(e) for e in mon)
            if len(mon) != 3 or any(e < 0 for e in mon):
                raise ValueError(f"bad monomial {mon}")
            if any(e >= EXPONENT_CAP for e in mon):
                raise ExponentOverflowError(f"exponent too large in {mon}")
            c = coerce_coeff(field, c)
            if not _is_coeff_zero(c):
                prev = clean.get(mon)
                if prev is not None:
                    c = prev + c
                    if _is_coeff_zero(c):
                        del clean[mon]
                        continue
                clean[mon] = c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def _raw(cls, field: CoeffField, terms: dict) -> "MultiPoly":
        # trusted path: terms already canonical for this field
        self = object.__new__(cls)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_terms", terms)
        return self

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field: CoeffField) -> "MultiPoly":
        return cls._raw(field, {})

    @classmethod
    def one(cls, field: CoeffField) -> "MultiPoly":
        return cls.constant(field, 1)

    @classmethod
    def constant(cls, field: CoeffField, c) -> "MultiPoly":
        return cls(field, {(0, 0, 0): c})

    @classmethod
    def monomial(cls, field: CoeffField, mon: Monomial, c=1) -> "MultiPoly":
        return cls(field, {tuple(mon): c})

    @classmethod
    def variable(cls, field: CoeffField, name: str) -> "MultiPoly":
        mon = [0, 0, 0]
        mon[_VAR_INDEX[name]] = 1
        return cls(field, {tuple(mon): 1})

    @classmethod
    def gens(cls, field: CoeffField):
        """The generator triple (X, Y, Z)."""
        return tuple(cls.variable(field, v) for v in VARS)

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self) -> list[tuple[Monomial, object]]:
        """Terms sorted descending by the monomial order."""
        return sorted(self._terms.items(), key=lambda kv: _order_key(kv[0]), reverse=True)

    def num_terms(self) -> int:
        return len(self._terms)

    def coefficient(self, mon: Monomial):
        return self._terms.get(tuple(mon), coeff_zero(self.field))

    def leading(self) -> tuple[Monomial, object]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mon = max(self._terms, key=_order_key)
        return mon, self._terms[mon]

    def total_degree(self):
        """Total degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(m) for m in self._terms)

    def degree_in(self, var: str):
        """Degree in one variable, or None for the zero polynomial."""
        if not self._terms:
            return None
        i = _VAR_INDEX[var]
        return max(m[i] for m in self._terms)

    def coeff_of(self, var: str, k: int) -> "MultiPoly":
        """The coefficient of var^k, as a polynomial with that slot zeroed."""
        i = _VAR_INDEX[var]
        out = {}
        for mon, c in self._terms.items():
            if mon[i] == k:
                rest = list(mon)
                rest[i] = 0
                out[tuple(rest)] = c
        return MultiPoly._raw(self.field, out)

    # -- ring operations ------------------------------------------------------

    def _check_same_field(self, other: "MultiPoly"):
        if self.field != other.field:
            raise FieldMismatchError(
                f"cannot combine polynomials over {self.field} and {other.field}"
            )

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.field == other.field and self._terms == other._terms
        if isinstance(other, (int, Fraction, FFElement)):
            return self == MultiPoly.constant(self.field, other)
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __add__(self, other):
        if isinstance(other, (int, Fraction, FFElement)):
            other = MultiPoly.constant(self.field, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_same_field(other)
        out = dict(self._terms)
        for mon, c in other._terms.items():
            acc = out.get(mon)
            acc = c if acc is None else acc + c
            if _is_coeff_zero(acc):
                out.pop(mon, None)
            else:
                out[mon] = acc
        return MultiPoly._raw(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.field, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, FFElement)):
            other = MultiPoly.constant(self.field, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FFElement)):
            c = coerce_coeff(self.field, other)
            if _is_coeff_zero(c):
                return MultiPoly.zero(self.field)
            return MultiPoly._raw(self.field, {m: v * c for m, v in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_same_field(other)
        out: dict[Monomial, object] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mon = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                if mon[0] >= EXPONENT_CAP or mon[1] >= EXPONENT_CAP or mon[2] >= EXPONENT_CAP:
                    raise ExponentOverflowError(f"exponent overflow at {mon}")
                acc = out.get(mon)
                prod = c1 * c2
                acc = prod if acc is None else acc + prod
                if _is_coeff_zero(acc):
                    out.pop(mon, None)
                else:
                    out[mon] = acc
        return MultiPoly._raw(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("negative polynomial power")
        if n == 0:
            if self.is_zero():
                raise ValueError("0**0 is undefined")
            return MultiPoly.one(self.field)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- evaluation ------------------------------------------------------------

    def evaluate(self, point):
        """Evaluate at a triple of values from the coefficient field."""
        vals = tuple(coerce_coeff(self.field, v) for v in point)
        total = coeff_zero(self.field)
        for (a, b, c), coeff in self._terms.items():
            term = coeff
            if a:
                term = term * vals[0] ** a
            if b:
                term = term * vals[1] ** b
            if c:
                term = term * vals[2] ** c
            total = total + term
        return total

    # -- text / JSON forms -------------------------------------------------------

    def to_text(self, names: tuple[str, str, str] = VARS) -> str:
        if not self._terms:
            return "0"
        rational = is_rationals(self.field)
        pieces = []
        for mon, c in self.terms():
            negative = rational and c < 0
            mag = -c if negative else c
            factors = []
            for name, e in zip(names, mon):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            token = coeff_token(self.field, mag)
            if not factors:
                body = token
            elif token == "1":
                body = "*".join(factors)
            else:
                body = "*".join([token] + factors)
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    @classmethod
    def from_text(cls, text: str, field: CoeffField) -> "MultiPoly":
        text = text.strip()
        if text == "0":
            return cls.zero(field)
        out: dict[Monomial, object] = {}
        for chunk in text.replace("- ", "+ -").split("+ "):
            chunk = chunk.strip()
            if not chunk:
                continue
            sign = 1
            if chunk.startswith("-"):
                sign = -1
                chunk = chunk[1:]
            coeff = coeff_one(field)
            mon = [0, 0, 0]
            for factor in chunk.split("*"):
                factor = factor.strip()
                base, _, exp = factor.partition("^")
                if base in _VAR_INDEX and (exp == "" or exp.isdigit()) and ":" not in factor:
                    mon[_VAR_INDEX[base]] += int(exp) if exp else 1
                else:
                    coeff = coeff * parse_coeff_token(field, factor)
            if sign < 0:
                coeff = -coeff
            key = tuple(mon)
            prev = out.get(key)
            coeff = coeff if prev is None else prev + coeff
            if _is_coeff_zero(coeff):
                out.pop(key, None)
            else:
                out[key] = coeff
        return cls._raw(field, out)

    def to_json_terms(self) -> list:
        """JSON form: list of [coefficient token, [a, b, c]]."""
        return [[coeff_token(self.field, c), list(mon)] for mon, c in self.terms()]

    @classmethod
    def from_json_terms(cls, data, field: CoeffField) -> "MultiPoly":
        return cls(field, {tuple(mon): parse_coeff_token(field, tok) for tok, mon in data})

    def __repr__(self) -> str:
        return f"MultiPoly({self.field}, {self.to_text()})"

    def __str__(self) -> str:
        return self.to_text()


def _is_coeff_zero(c) -> bool:
    if isinstance(c, FFElement):
        return c.is_zero()
    return c == 0


# ---------------------------------------------------------------------------
# free functions on polynomials


def exact_divide(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """The quotient f / g when the division is exact.

    Multivariate division by the single divisor g in graded lex order;
    raises InexactDivisionError as soon as the leading term of the running
    remainder is not divisible by the leading term of g, which for a single
    divisor happens exactly when g does not divide f.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    f._check_same_field(g)
    if f.is_zero():
        return MultiPoly.zero(f.field)
    gm, gc = g.leading()
    g_items = list(g._terms.items())
    rem = dict(f._terms)
    quot: dict[Monomial, object] = {}
    while rem:
        mon = max(rem, key=_order_key)
        dm = (mon[0] - gm[0], mon[1] - gm[1], mon[2] - gm[2])
        if dm[0] < 0 or dm[1] < 0 or dm[2] < 0:
            raise InexactDivisionError(
                f"{g.to_text()} does not divide exactly (stuck at {mon})"
            )
        qc = rem[mon] / gc
        quot[dm] = qc
        for m2, c2 in g_items:
            tm = (dm[0] + m2[0], dm[1] + m2[1], dm[2] + m2[2])
            acc = rem.get(tm, None)
            sub = qc * c2
            acc = -sub if acc is None else acc - sub
            if _is_coeff_zero(acc):
                rem.pop(tm, None)
            else:
                rem[tm] = acc
    return MultiPoly._raw(f.field, quot)


def substitute(f: MultiPoly, var: str, form: LinearForm) -> MultiPoly:
    """Replace one variable by the linear form c_x*X + c_y*Y, exactly."""
    if f.field != form.field:
        raise FieldMismatchError("substitution form over a different field")
    i = _VAR_INDEX[var]
    fp = form.as_poly()
    # powers of the form, computed once up to the largest exponent used
    max_e = max((m[i] for m in f._terms), default=0)
    pows = [MultiPoly.one(f.field)]
    for _ in range(max_e):
        pows.append(pows[-1] * fp)
    out: dict[Monomial, object] = {}
    for mon, c in f._terms.items():
        e = mon[i]
        rest = list(mon)
        rest[i] = 0
        for pm, pc in pows[e]._terms.items():
            tm = (rest[0] + pm[0], rest[1] + pm[1], rest[2] + pm[2])
            if tm[0] >= EXPONENT_CAP or tm[1] >= EXPONENT_CAP or tm[2] >= EXPONENT_CAP:
                raise ExponentOverflowError(f"exponent overflow at {tm}")
            acc = out.get(tm)
            add = c * pc
            acc = add if acc is None else acc + add
            if _is_coeff_zero(acc):
                out.pop(tm, None)
            else:
                out[tm] = acc
    return MultiPoly._raw(f.field, out)


def partial_derivative(f: MultiPoly, var: str) -> MultiPoly:
    """Formal partial derivative; exponents divisible by p die in char p."""
    i = _VAR_INDEX[var]
    out: dict[Monomial, object] = {}
    for mon, c in f._terms.items():
        e = mon[i]
        if e == 0:
            continue
        nc = c * coeff_from_int(f.field, e)
        if _is_coeff_zero(nc):
            continue
        nm = list(mon)
        nm[i] = e - 1
        out[tuple(nm)] = nc
    return MultiPoly._raw(f.field, out)


def is_homogeneous(f: MultiPoly):
    """Total degree if every term shares it, None otherwise, ZERO_POLY for 0."""
    if f.is_zero():
        return ZERO_POLY
    degrees = {sum(m) for m in f._terms}
    return degrees.pop() if len(degrees) == 1 else None


_PERMS = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))


def is_symmetric3(f: MultiPoly) -> bool:
    """True iff f is invariant under all permutations of X, Y, Z."""
    for perm in _PERMS[1:]:
        for mon, c in f._terms.items():
            image = (mon[perm[0]], mon[perm[1]], mon[perm[2]])
            if f._terms.get(image) != c:
                return False
    return True


def linear_multiplicity(g: MultiPoly, form: LinearForm):
    """Exact multiplicity of the linear form as a factor of g.

    The zero polynomial is divisible arbitrarily often; that case returns
    the distinguished verdict math.inf.
    """
    if g.is_zero():
        return math.inf
    if form.is_zero():
        raise ValueError("multiplicity of the zero form is undefined")
    divisor = form.as_poly()
    mult = 0
    while True:
        try:
            g = exact_divide(g, divisor)
        except InexactDivisionError:
            return mult
        mult += 1
