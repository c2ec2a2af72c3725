"""Exact coefficient arithmetic.

Three scalar variants are supported:

* rationals, represented by :class:`fractions.Fraction`;
* prime-field elements, :class:`PrimeFieldElement`;
* integer Laurent polynomials in ``q``, :class:`LaurentPoly`.

:class:`FieldSpec` names a coefficient field (``q`` for the rationals,
``fpP`` for the prime field of order ``P``) and coerces integers and
fractions into it. :data:`LAURENT` plays the same role for ``Z[q, q^-1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

try:
    from . import config
except ImportError:
    import brauer_lab.config as config

Rational = Fraction


class PrimeFieldElement:
    """An element of the prime field of order ``modulus``."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        if modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {modulus}")
        self.modulus = modulus
        self.value = value % modulus

    @classmethod
    def from_fraction(cls, x: Fraction, modulus: int) -> "PrimeFieldElement":
        den = x.denominator % modulus
        if den == 0:
            raise ZeroDivisionError(
                f"denominator of {x} vanishes modulo {modulus}")
        return cls(x.numerator * pow(den, -1, modulus), modulus)

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise TypeError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.modulus)
        if isinstance(other, Fraction):
            return PrimeFieldElement.from_fraction(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PrimeFieldElement(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PrimeFieldElement(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PrimeFieldElement(other.value - self.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PrimeFieldElement(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.modulus)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inv() ** (-exponent)
        return PrimeFieldElement(pow(self.value, exponent, self.modulus), self.modulus)

    def inv(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse modulo {self.modulus}")
        return PrimeFieldElement(pow(self.value, -1, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"PrimeFieldElement({self.value}, {self.modulus})"

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"


class LaurentPoly:
    """Integer Laurent polynomial in ``q``; the zero polynomial has no terms."""

    __slots__ = ("_terms",)

    EXPONENT_BOUND = 2**31 - 1

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        for exp, coeff in (terms or {}).items():
            if abs(exp) > self.EXPONENT_BOUND:
                raise OverflowError(f"Laurent exponent {exp} out of range")
            if coeff:
                clean[int(exp)] = int(coeff)
        self._terms = clean

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def q(cls, exp: int = 1) -> "LaurentPoly":
        return cls({exp: 1})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        if isinstance(other, (Fraction, PrimeFieldElement)):
            raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            out[exp] = out.get(exp, 0) + coeff
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = LaurentPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def inv(self) -> "LaurentPoly":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of Z[q, q^-1]")
        (exp, coeff), = self._terms.items()
        return LaurentPoly({-exp: coeff})

    def specialize(self) -> int:
        return sum(self._terms.values())

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self._terms.items()))!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        return "+".join(f"{c}*q^{e}" for e, c in sorted(self._terms.items()))


Scalar = Union[Fraction, PrimeFieldElement, LaurentPoly]


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field: the rationals (``p is None``) or F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not config.is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, token: str) -> "FieldSpec":
        """Parse ``q`` or ``fpP`` (for example ``fp5``)."""
        token = token.strip().lower()
        if token == "q":
            return cls.rationals()
        if token.startswith("fp"):
            try:
                return cls.prime(int(token[2:]))
            except ValueError as exc:
                raise ValueError(f"invalid field token {token!r}: {exc}") from exc
        raise ValueError(f"invalid field token {token!r}")

    @classmethod
    def parse_list(cls, text: str) -> list["FieldSpec"]:
        return [cls.parse(tok) for tok in text.split(",") if tok.strip()]

    @property
    def name(self) -> str:
        return "q" if self.p is None else f"fp{self.p}"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def is_field(self) -> bool:
        return True

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x) -> Scalar:
        if self.p is None:
            if isinstance(x, PrimeFieldElement):
                raise TypeError("cannot lift a prime-field element to the rationals")
            if isinstance(x, LaurentPoly):
                raise TypeError("cannot coerce a Laurent polynomial into a field")
            return Fraction(x)
        if isinstance(x, PrimeFieldElement):
            if x.modulus != self.p:
                raise TypeError(f"modulus mismatch: {x.modulus} vs {self.p}")
            return x
        if isinstance(x, Fraction):
            return PrimeFieldElement.from_fraction(x, self.p)
        if isinstance(x, int):
            return PrimeFieldElement(x, self.p)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self.name}")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class LaurentRing:
    """The ring Z[q, q^-1]."""

    @property
    def name(self) -> str:
        return "laurent"

    @property
    def is_field(self) -> bool:
        return False

    @property
    def zero(self) -> LaurentPoly:
        return LaurentPoly()

    @property
    def one(self) -> LaurentPoly:
        return LaurentPoly.constant(1)

    def __call__(self, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.constant(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into Z[q, q^-1]")

    def __str__(self):
        return self.name


Ring = Union[FieldSpec, LaurentRing]

QQ = FieldSpec.rationals()
LAURENT = LaurentRing()


def specialize_q1(poly: LaurentPoly) -> int:
    """Specialize ``q -> 1``: the sum of all coefficients."""
    return poly.specialize()


def _variant(x) -> str:
    if isinstance(x, (Fraction, int)):
        return "rational"
    if isinstance(x, PrimeFieldElement):
        return "prime"
    if isinstance(x, LaurentPoly):
        return "laurent"
    raise TypeError(f"unsupported scalar type {type(x).__name__}")


def field_arith(a: Scalar, b: Scalar | None, op: str) -> Scalar:
    """Apply ``op`` (add, mul, inv, neg) with variant checking."""
    if op in ("add", "mul"):
        if b is None:
            raise ValueError(f"{op} needs two operands")
        va, vb = _variant(a), _variant(b)
        if va != vb:
            raise TypeError(f"scalar variant mismatch: {va} vs {vb}")
        if va == "prime" and a.modulus != b.modulus:
            raise TypeError(f"modulus mismatch: {a.modulus} vs {b.modulus}")
        if va == "rational":
            a, b = Fraction(a), Fraction(b)
        return a + b if op == "add" else a * b
    if op == "neg":
        return -Fraction(a) if _variant(a) == "rational" else -a
    if op == "inv":
        variant = _variant(a)
        if variant == "rational":
            if a == 0:
                raise ZeroDivisionError("division by zero")
            return 1 / Fraction(a)
        return a.inv()
    raise ValueError(f"unknown operation {op!r}")


def render_scalar(x) -> str:
    """Textual rendering used in reports: ``a/b``, ``a (mod p)`` or ``c*q^e`` terms."""
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return f"{x.numerator}/{x.denominator}"
    return str(x)

