"""
Exact arithmetic in Q(z), z a primitive cubic root of unity (z^2 + z + 1 = 0).

Elements are stored on the basis {1, z}; the reduction z^2 -> -1 - z is applied
inside every product, so the representation is unique and equality/hashing are
componentwise.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from resint.errors import ParseError

Rational = Fraction
Scalar = Union["CycQ", Fraction, int]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")
_TERM_RE = re.compile(
    r"\s*([+-])?\s*"
    r"(?:(\d+(?:\s*/\s*\d+)?)\s*(\*\s*z)?|(z))"
    r"\s*"
)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" (optional whitespace) into a reduced Fraction"""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ParseError(f"Invalid rational: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise ParseError(f"Zero denominator in rational: {text!r}")
    return Fraction(numerator, denominator)


class CycQ:
    """An element re + ze*z of Q(z). Immutable."""

    __slots__ = ("re", "ze")

    def __init__(self, re: Union[Fraction, int] = 0, ze: Union[Fraction, int] = 0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "ze", ze if type(ze) is Fraction else Fraction(ze))

    @classmethod
    def _raw(cls, re: Fraction, ze: Fraction) -> CycQ:
        # Skips the Fraction coercion; callers guarantee both parts are Fractions.
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "ze", ze)
        return obj

    @classmethod
    def coerce(cls, value: Scalar) -> CycQ:
        if isinstance(value, CycQ):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        if isinstance(value, str):
            return parse_cycq(value)
        raise TypeError(f"Cannot convert {type(value).__name__} to CycQ")

    def __setattr__(self, name, value):
        raise AttributeError("CycQ is immutable")

    # field operations

    def __add__(self, other):
        if isinstance(other, CycQ):
            return CycQ._raw(self.re + other.re, self.ze + other.ze)
        if isinstance(other, (int, Fraction)):
            return CycQ._raw(self.re + other, self.ze)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> CycQ:
        return CycQ._raw(-self.re, -self.ze)

    def __sub__(self, other):
        if isinstance(other, CycQ):
            return CycQ._raw(self.re - other.re, self.ze - other.ze)
        if isinstance(other, (int, Fraction)):
            return CycQ._raw(self.re - other, self.ze)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycQ._raw(other - self.re, -self.ze)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, CycQ):
            a1, a2, b1, b2 = self.re, self.ze, other.re, other.ze
            a2b2 = a2 * b2
            return CycQ._raw(a1 * b1 - a2b2, a1 * b2 + a2 * b1 - a2b2)
        if isinstance(other, (int, Fraction)):
            return CycQ._raw(self.re * other, self.ze * other)
        return NotImplemented

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Exact squared complex modulus: N(a + bz) = a^2 - ab + b^2"""
        a, b = self.re, self.ze
        return a * a - a * b + b * b

    def conjugate(self) -> CycQ:
        # complex conjugation maps z to z^2 = -1 - z
        return CycQ._raw(self.re - self.ze, -self.ze)

    def inv(self) -> CycQ:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("CycQ division by zero")
        a1, a2 = self.re, self.ze
        return CycQ._raw((a1 - a2) / n, -a2 / n)

    def __truediv__(self, other):
        if isinstance(other, CycQ):
            return self * other.inv()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("CycQ division by zero")
            return CycQ._raw(self.re / other, self.ze / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inv() * other
        return NotImplemented

    def __pow__(self, exponent: int) -> CycQ:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inv()
        result = ONE
        for _ in range(abs(exponent)):
            result = result * base
        return result

    # comparisons

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.ze)

    def is_zero(self) -> bool:
        return not self

    def __eq__(self, other) -> bool:
        if isinstance(other, CycQ):
            return self.re == other.re and self.ze == other.ze
        if isinstance(other, (int, Fraction)):
            return self.ze == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.ze == 0:
            return hash(self.re)
        return hash((self.re, self.ze))

    def to_complex(self) -> complex:
        """Floating-point value for display only"""
        return complex(float(self.re) - float(self.ze) / 2, float(self.ze) * 3 ** 0.5 / 2)

    # text form

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        if self.re:
            parts.append(format_rational(self.re))
        if self.ze:
            ze_text = format_rational(abs(self.ze)) + "*z"
            if not parts:
                parts.append(ze_text if self.ze > 0 else "-" + ze_text)
            else:
                parts.append(("+ " if self.ze > 0 else "- ") + ze_text)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"CycQ({str(self)!r})"

    def __reduce__(self):
        return (CycQ, (self.re, self.ze))


def parse_cycq(text: str) -> CycQ:
    """
    Parse the text form of a CycQ.

    Accepts a sum of terms "p/q", "p/q*z" or "z", each optionally signed,
    with arbitrary whitespace, e.g. "1/2 - 3*z", "-z", "2 + 1*z".
    """
    if not text or not text.strip():
        raise ParseError("Empty CycQ literal")
    position = 0
    re_part = Fraction(0)
    ze_part = Fraction(0)
    first = True
    while position < len(text):
        match = _TERM_RE.match(text, position)
        if match is None or match.end() == position:
            raise ParseError(f"Invalid CycQ literal: {text!r}", column=position + 1)
        sign, number, times_z, bare_z = match.groups()
        if sign is None and not first:
            raise ParseError(f"Missing operator in CycQ literal: {text!r}", column=position + 1)
        factor = -1 if sign == "-" else 1
        if bare_z:
            ze_part += factor
        else:
            value = parse_rational(number.replace(" ", "")) * factor
            if times_z:
                ze_part += value
            else:
                re_part += value
        position = match.end()
        first = False
    return CycQ(re_part, ze_part)


def add(a: CycQ, b: CycQ) -> CycQ:
    return a + b


def mul(a: CycQ, b: CycQ) -> CycQ:
    return a * b


def inv(a: CycQ) -> CycQ:
    return a.inv()


def eval_divisor(k1: int, k2: int, k3: int) -> CycQ:
    """k1 + k2*z + k3*z^2 as a CycQ; zero exactly when k1 = k2 = k3"""
    return CycQ._raw(Fraction(k1 - k3), Fraction(k2 - k3))


ZERO = CycQ(0, 0)
ONE = CycQ(1, 0)
ZETA = CycQ(0, 1)
ZETA2 = CycQ(-1, -1)
# eigenvalues of the linear part diag(1, z, z^2)
KAPPA = (ONE, ZETA, ZETA2)
