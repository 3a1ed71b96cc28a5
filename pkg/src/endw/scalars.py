"""Exact coefficient fields: the rationals and quadratic fields Q(sqrt d).

A :class:`Scalar` is ``a + b*sqrt(d)`` with ``a, b`` reduced fractions.  Over
Q the radical part is always zero.  The only field automorphisms are the
identity and (over Q(sqrt d)) conjugation ``sqrt d -> -sqrt d``.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "Field",
    "Q",
    "Scalar",
    "FieldAutomorphism",
    "FieldMismatchError",
    "scalar_arith",
    "apply_field_automorphism",
    "fresh_scalar",
]

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

Rational = Union[int, Fraction]
NUMBER_TYPES = (int, Fraction, _Q) if _Q is not Fraction else (int, Fraction)


class FieldMismatchError(ValueError):
    """Operands live in different coefficient fields (or algebras)."""


def _squarefree(d: int) -> bool:
    m = abs(d)
    k = 2
    while k * k <= m:
        if m % (k * k) == 0:
            return False
        k += 1
    return True


class Field:
    """Q (``d is None``) or Q(sqrt d) for a square-free ``d`` other than 0, 1."""

    __slots__ = ("d",)
    _instances: dict = {}

    def __new__(cls, d: int | None = None):
        if d is not None:
            d = int(d)
            if d in (0, 1) or not _squarefree(d):
                raise ValueError(f"d must be a square-free integer other than 0 and 1, got {d}")
        inst = cls._instances.get(d)
        if inst is None:
            inst = object.__new__(cls)
            object.__setattr__(inst, "d", d)
            cls._instances[d] = inst
        return inst

    def __reduce__(self):
        return (Field, (self.d,))

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    @classmethod
    def parse(cls, text: str) -> Field:
        """Parse ``q`` or ``qsqrt:<d>``."""
        t = text.strip().lower()
        if t == "q":
            return cls()
        m = re.fullmatch(r"qsqrt:(-?\d+)", t)
        if not m:
            raise ValueError(f"bad field {text!r}; expected 'q' or 'qsqrt:<d>'")
        return cls(int(m.group(1)))

    @property
    def is_rational(self) -> bool:
        return self.d is None

    def __hash__(self):
        return hash(("Field", self.d))

    def __repr__(self):
        return "Q" if self.d is None else f"QSqrt({self.d})"

    def __str__(self):
        return "q" if self.d is None else f"qsqrt:{self.d}"

    def __call__(self, a: Rational | Scalar = 0, b: Rational = 0) -> Scalar:
        if isinstance(a, Scalar):
            if a.field != self:
                raise FieldMismatchError(f"{a!r} is not in {self!r}")
            return a
        return Scalar(a, b, self)

    def zero(self) -> Scalar:
        return Scalar(0, 0, self)

    def one(self) -> Scalar:
        return Scalar(1, 0, self)

    def sqrt(self) -> Scalar:
        """The adjoined root ``sqrt d``."""
        if self.d is None:
            raise ValueError("Q has no adjoined square root")
        return Scalar(0, 1, self)

    def automorphisms(self) -> tuple[FieldAutomorphism, ...]:
        if self.d is None:
            return (FieldAutomorphism.IDENTITY,)
        return (FieldAutomorphism.IDENTITY, FieldAutomorphism.CONJUGATION)

    def parse_scalar(self, text: str) -> Scalar:
        """Parse the textual form ``p/q`` or ``p/q+r/t*s`` (``s`` is sqrt d)."""
        from .parsing import parse_scalar

        return parse_scalar(text, self)


Q = Field()

_ZERO = _Q(0)
_ONE = _Q(1)


class Scalar:
    """Immutable element ``a + b*sqrt(d)`` of a :class:`Field`."""

    __slots__ = ("a", "b", "field", "_hash")

    def __init__(self, a: Rational = 0, b: Rational = 0, field: Field = Q):
        a = a if type(a) is _Q else _Q(a)
        b = b if type(b) is _Q else _Q(b)
        if field.d is None and b:
            raise ValueError("radical part must be zero over Q")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _make(cls, a: Fraction, b: Fraction, field: Field) -> Scalar:
        s = object.__new__(cls)
        object.__setattr__(s, "a", a)
        object.__setattr__(s, "b", b)
        object.__setattr__(s, "field", field)
        object.__setattr__(s, "_hash", None)
        return s

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar, (self.a, self.b, self.field))

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other) -> Scalar:
        if type(other) is Scalar:
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"field mismatch: {self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, NUMBER_TYPES):
            return Scalar._make(_Q(other), _ZERO, self.field)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar._make(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._make(-self.a, -self.b, self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar._make(self.a - o.a, self.b - o.b, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.b and not o.b:
            return Scalar._make(self.a * o.a, _ZERO, self.field)
        d = self.field.d
        return Scalar._make(
            self.a * o.a + d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.field,
        )

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if not self:
            raise ZeroDivisionError("inverse of zero scalar")
        if not self.b:
            return Scalar._make(1 / self.a, _ZERO, self.field)
        # (a + b r)^-1 = (a - b r) / (a^2 - d b^2); the norm is nonzero since d is not a square
        norm = self.a * self.a - self.field.d * self.b * self.b
        return Scalar._make(self.a / norm, -self.b / norm, self.field)

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

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Scalar._make(_ONE, _ZERO, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> Scalar:
        if self.field.d is None:
            raise ValueError("conjugation is not defined over Q")
        return Scalar._make(self.a, -self.b, self.field)

    def norm(self):
        if self.field.d is None:
            return self.a * self.a
        return self.a * self.a - self.field.d * self.b * self.b

    # -- predicates ---------------------------------------------------------

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    @property
    def is_rational(self) -> bool:
        return not self.b

    def is_one(self) -> bool:
        return self.a == 1 and not self.b

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.a == other.a and self.b == other.b
        if isinstance(other, NUMBER_TYPES):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.a) if not self.b else hash((self.a, self.b, self.field.d))
            object.__setattr__(self, "_hash", h)
        return h

    def sort_key(self):
        return (self.a, self.b)

    def is_negative_leading(self) -> bool:
        """True when the printed form starts with a minus sign."""
        return self.a < 0 or (self.a == 0 and self.b < 0)

    def __repr__(self):
        return f"Scalar({self}, {self.field!r})"

    def __str__(self):
        a, b = self.a, self.b
        if not b:
            return str(a)
        if b == 1:
            rad = "s"
        elif b == -1:
            rad = "-s"
        else:
            rad = f"{b}*s"
        if not a:
            return rad
        if rad.startswith("-"):
            return f"{a}{rad}"
        return f"{a}+{rad}"


class FieldAutomorphism(enum.Enum):
    """Automorphisms of the implemented fields."""

    IDENTITY = "id"
    CONJUGATION = "conj"

    def __call__(self, a: Scalar) -> Scalar:
        return apply_field_automorphism(self, a)

    def compose(self, other: FieldAutomorphism) -> FieldAutomorphism:
        """``self o other``."""
        if self is other:
            return FieldAutomorphism.IDENTITY
        return FieldAutomorphism.CONJUGATION

    def inverse(self) -> FieldAutomorphism:
        return self

    def valid_for(self, field: Field) -> bool:
        return self is FieldAutomorphism.IDENTITY or field.d is not None

    def __str__(self):
        return self.value


def apply_field_automorphism(alpha: FieldAutomorphism, a: Scalar) -> Scalar:
    if alpha is FieldAutomorphism.IDENTITY:
        return a
    if a.field.d is None:
        raise ValueError("conjugation requested over Q")
    return a.conjugate()


def scalar_arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    """Dispatch ``add | mul | neg | inv`` on scalars."""
    if op == "add":
        return a + a._coerce(b)
    if op == "mul":
        return a * a._coerce(b)
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown scalar op {op!r}")


def fresh_scalar(avoid: Iterable[Scalar], field: Field) -> Scalar:
    """Return a rational scalar of ``field`` not in ``avoid``."""
    seen = set(avoid)
    k = 0
    while True:
        c = field(k)
        if c not in seen:
            return c
        k += 1
