"""Exact scalars over the rationals and over prime fields GF(p).

A :class:`FieldSpec` names the field; a :class:`Scalar` is an immutable
element tagged with its field. Plain ``int`` and ``Fraction`` operands are
coerced into the field of the other operand, so formulas can be written
with literal integers::

    >>> F = FieldSpec.prime(5)
    >>> F(3) * 4
    Scalar('2', GF(5))
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import CharTwoUnsupported, DivisionByZero, FieldMismatch, InvalidField

RATIONAL = "rational"
PRIME = "prime"

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first twelve prime bases.

    Deterministic for n < 3.3e24, which covers every modulus below 2**64.
    """
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    r, s = 0, n - 1
    while s % 2 == 0:
        r += 1
        s //= 2
    for a in _MR_BASES:
        x = pow(a, s, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str = RATIONAL
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == RATIONAL:
            if self.p is not None:
                raise InvalidField("rational field takes no modulus")
        elif self.kind == PRIME:
            if not isinstance(self.p, int) or not is_prime(self.p):
                raise InvalidField(f"modulus {self.p!r} is not prime")
        else:
            raise InvalidField(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(RATIONAL)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(PRIME, p)

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == RATIONAL else self.p

    def __repr__(self):
        return "QQ" if self.kind == RATIONAL else f"GF({self.p})"

    def _raw(self, value):
        """Reduce an int/Fraction to this field's canonical raw value."""
        if self.kind == RATIONAL:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def __call__(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")
        return Scalar(self._raw(value), self)

    @property
    def zero(self) -> "Scalar":
        return self(0)

    @property
    def one(self) -> "Scalar":
        return self(1)

    def parse(self, text: str) -> "Scalar":
        """Parse ``"n"`` or ``"n/m"``; a leading ``-`` (or U+2212) is allowed."""
        m = _SCALAR_RE.fullmatch(text.strip().replace("−", "-"))
        if m is None:
            raise ValueError(f"malformed scalar {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise DivisionByZero(f"zero denominator in {text!r}")
        return Scalar(self._raw(Fraction(num, den)), self)

    def elements(self):
        """Iterate over all elements of a prime field."""
        if self.kind != PRIME:
            raise ValueError("only finite fields can be enumerated")
        return (Scalar(v, self) for v in range(self.p))

    def to_json(self) -> dict:
        if self.kind == RATIONAL:
            return {"kind": RATIONAL}
        return {"kind": PRIME, "p": self.p}

    @classmethod
    def from_json(cls, obj) -> "FieldSpec":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise ValueError(f"malformed field spec {obj!r}")
        if obj["kind"] == RATIONAL:
            return cls.rational()
        if obj["kind"] == PRIME:
            p = obj.get("p")
            if not isinstance(p, int) or isinstance(p, bool):
                raise ValueError(f"prime field needs an integer 'p', got {p!r}")
            return cls.prime(p)
        raise ValueError(f"unknown field kind {obj['kind']!r}")


QQ = FieldSpec.rational()

_SCALAR_RE = re.compile(r"(-?\d+)(?:/(\d+))?")

Operand = Union["Scalar", int, Fraction]


class Scalar:
    """An immutable element of a :class:`FieldSpec`."""

    __slots__ = ("value", "field")

    def __init__(self, value, field: FieldSpec):
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Scalar(self.field._raw(other), self.field)
        return NotImplemented

    def _wrap(self, raw) -> "Scalar":
        if self.field.kind == PRIME:
            raw %= self.field.p
        return Scalar(raw, self.field)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(o.value - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value * o.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __neg__(self):
        return self._wrap(-self.value)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if self.field.kind == PRIME:
            return Scalar(pow(self.value, n, self.field.p), self.field)
        return Scalar(self.value**n, self.field)

    def inverse(self) -> "Scalar":
        if self.value == 0:
            raise DivisionByZero("inverse of zero")
        if self.field.kind == PRIME:
            return Scalar(pow(self.value, -1, self.field.p), self.field)
        return Scalar(1 / self.value, self.field)

    def __bool__(self):
        return self.value != 0

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value == o.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Scalar({str(self)!r}, {self.field!r})"

    def sort_key(self):
        """Deterministic ordering key (numeric for QQ, residue for GF(p))."""
        return self.value


def arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Apply ``op`` in {add, sub, mul, div} to two scalars of the same field."""
    if not isinstance(a, Scalar) or not isinstance(b, Scalar):
        raise TypeError("arith expects Scalar operands")
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def characteristic_guard(spec: FieldSpec, d: int) -> bool:
    """True iff the characteristic is zero or an odd prime greater than ``d``."""
    c = spec.characteristic
    return c == 0 or (c != 2 and c > d)


def _sqrt_mod(a: int, p: int) -> Optional[int]:
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p < 1 << 16:
        return next(x for x in range(1, p) if x * x % p == a)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def _sqrt_rational(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    n, m = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n == x.numerator and m * m == x.denominator:
        return Fraction(n, m)
    return None


def sqrt(x: Scalar) -> Optional[Scalar]:
    """A square root of ``x`` in its field, or None if there is none."""
    f = x.field
    if f.kind == RATIONAL:
        r = _sqrt_rational(x.value)
    else:
        r = _sqrt_mod(x.value, f.p)
    return None if r is None else Scalar(r, f)


def solve_quadratic_in_field(a: Scalar, b: Scalar, c: Scalar) -> tuple:
    """Roots of ``a*x**2 + b*x + c`` lying in the field.

    Returns a tuple of *distinct* roots sorted by :meth:`Scalar.sort_key`;
    a 1-tuple means a double root.
    """
    f = a.field
    b, c = a._coerce(b), a._coerce(c)
    if f.characteristic == 2:
        raise CharTwoUnsupported("quadratic solving needs characteristic != 2")
    if a.is_zero():
        raise ValueError("leading coefficient must be nonzero")
    disc = b * b - 4 * a * c
    root = sqrt(disc)
    if root is None:
        return ()
    r1 = (-b + root) / (2 * a)
    r2 = (-b - root) / (2 * a)
    if r1 == r2:
        return (r1,)
    return tuple(sorted((r1, r2), key=Scalar.sort_key))
