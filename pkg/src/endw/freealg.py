"""Free commutative algebras P[x1..xn] and free associative algebras P<x1..xn>.

Elements are sparse maps from monomials to nonzero scalars.  A commutative
monomial is an exponent vector of length n; an associative monomial is a word,
i.e. a tuple of 0-based generator indices.  Generators are numbered from 1 in
every public method and in printed output.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterable, Sequence

from .scalars import NUMBER_TYPES, Field, FieldMismatchError, Q, Scalar

__all__ = [
    "Kind",
    "Algebra",
    "Element",
    "DegreeCapError",
    "NEG_INF",
    "elem_arith",
    "substitute",
    "mirror",
    "evaluate_at_point",
]

NEG_INF = -math.inf
DEFAULT_MAX_DEGREE = 12


class DegreeCapError(ArithmeticError):
    """A product would exceed the algebra's degree cap."""


class Kind(enum.Enum):
    COMMUTATIVE = "comm"
    ASSOCIATIVE = "assoc"

    @classmethod
    def parse(cls, text: str) -> Kind:
        t = text.strip().lower()
        for k in cls:
            if t in (k.value, k.name.lower()):
                return k
        raise ValueError(f"bad algebra kind {text!r}; expected 'comm' or 'assoc'")

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Algebra:
    """Algebra context: kind, number of generators, coefficient field, degree cap.

    The degree cap does not take part in equality; it only guards products.
    """

    kind: Kind
    n: int
    field: Field = Q
    max_degree: int = dc_field(default=DEFAULT_MAX_DEGREE, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one generator")
        if self.max_degree < 1:
            raise ValueError("degree cap must be at least 1")

    @property
    def is_associative(self) -> bool:
        return self.kind is Kind.ASSOCIATIVE

    def with_max_degree(self, d: int) -> Algebra:
        return Algebra(self.kind, self.n, self.field, d)

    # -- monomials ----------------------------------------------------------

    @property
    def unit_monomial(self) -> tuple:
        return () if self.is_associative else (0,) * self.n

    def gen_monomial(self, i: int) -> tuple:
        """Monomial of generator ``x_i`` (1-based)."""
        self._check_index(i)
        if self.is_associative:
            return (i - 1,)
        e = [0] * self.n
        e[i - 1] = 1
        return tuple(e)

    def mono_degree(self, m: tuple) -> int:
        return len(m) if self.is_associative else sum(m)

    def mono_mul(self, m1: tuple, m2: tuple) -> tuple:
        if self.is_associative:
            return m1 + m2
        return tuple(a + b for a, b in zip(m1, m2))

    def mono_word(self, m: tuple) -> tuple:
        """The monomial as a word of 0-based indices (sorted in the commutative case)."""
        if self.is_associative:
            return m
        return tuple(i for i, e in enumerate(m) for _ in range(e))

    def word_monomial(self, w: Iterable[int]) -> tuple:
        if self.is_associative:
            return tuple(w)
        e = [0] * self.n
        for i in w:
            e[i] += 1
        return tuple(e)

    def mono_involves(self, m: tuple, i: int) -> bool:
        """Whether 0-based generator ``i`` occurs in ``m``."""
        return i in m if self.is_associative else m[i] > 0

    def mono_sort_key(self, m: tuple):
        return (-self.mono_degree(m), self.mono_word(m))

    def format_monomial(self, m: tuple) -> str:
        w = self.mono_word(m)
        if not w:
            return "1"
        parts = []
        j = 0
        while j < len(w):
            k = j
            while k < len(w) and w[k] == w[j]:
                k += 1
            run = k - j
            parts.append(f"x{w[j] + 1}" if run == 1 else f"x{w[j] + 1}^{run}")
            j = k
        return "*".join(parts)

    # -- elements -----------------------------------------------------------

    def _check_index(self, i: int):
        if not 1 <= i <= self.n:
            raise ValueError(f"generator index {i} out of range 1..{self.n}")

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return self.scalar(1)

    def scalar(self, c) -> Element:
        c = self.field(c) if not isinstance(c, Scalar) else c
        if c.field != self.field:
            raise FieldMismatchError(f"{c!r} is not in {self.field!r}")
        return Element(self, {self.unit_monomial: c} if c else {})

    def x(self, i: int) -> Element:
        """Generator ``x_i`` (1-based)."""
        return Element(self, {self.gen_monomial(i): self.field.one()})

    def gens(self) -> list[Element]:
        return [self.x(i) for i in range(1, self.n + 1)]

    def monomial(self, m: tuple, c=1) -> Element:
        c = c if isinstance(c, Scalar) else self.field(c)
        return Element(self, {m: c} if c else {})

    def from_terms(self, terms: dict) -> Element:
        """Build an element from ``{monomial: coefficient}``, dropping zeros."""
        out = {}
        for m, c in terms.items():
            c = c if isinstance(c, Scalar) else self.field(c)
            if c:
                out[m] = c
        return Element(self, out)

    def parse(self, text: str) -> Element:
        from .parsing import parse_expression

        return parse_expression(text, self)

    def coerce(self, value) -> Element:
        if isinstance(value, Element):
            if value.alg != self:
                raise FieldMismatchError(f"element of {value.alg} used in {self}")
            return value
        if isinstance(value, (Scalar, *NUMBER_TYPES)):
            return self.scalar(value)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def monomials_up_to(self, degree: int) -> list[tuple]:
        """All monomials of total degree <= ``degree``."""
        out = []
        words = [()]
        for d in range(degree + 1):
            for w in words:
                out.append(self.word_monomial(w))
            if self.is_associative:
                words = [w + (i,) for w in words for i in range(self.n)]
            else:
                words = [w + (i,) for w in words for i in range(w[-1] if w else 0, self.n)]
        return out

    def __str__(self):
        return f"{self.kind}[n={self.n}, {self.field}]"


def _mismatch(f: Element, g: Element):
    raise FieldMismatchError(f"algebra mismatch: {f.alg} vs {g.alg}")


class Element:
    """Immutable sparse element of an :class:`Algebra`."""

    __slots__ = ("alg", "terms", "_hash")

    def __init__(self, alg: Algebra, terms: dict):
        # callers guarantee: no zero coefficients, keys are valid monomials
        self.alg = alg
        self.terms = terms
        self._hash = None

    # -- structure ----------------------------------------------------------

    @property
    def degree(self) -> float:
        if not self.terms:
            return NEG_INF
        md = self.alg.mono_degree
        return max(md(m) for m in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_scalar(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.alg.unit_monomial in self.terms)

    def to_scalar(self) -> Scalar:
        if not self.is_scalar():
            raise ValueError(f"{self} is not a scalar")
        return self.constant_term()

    def constant_term(self) -> Scalar:
        return self.terms.get(self.alg.unit_monomial, self.alg.field.zero())

    def coefficient(self, m: tuple) -> Scalar:
        return self.terms.get(m, self.alg.field.zero())

    def involves(self, i: int) -> bool:
        """Whether generator ``x_i`` (1-based) occurs."""
        return any(self.alg.mono_involves(m, i - 1) for m in self.terms)

    def sorted_terms(self) -> list[tuple[tuple, Scalar]]:
        key = self.alg.mono_sort_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]))

    def map_coefficients(self, fn: Callable[[Scalar], Scalar]) -> Element:
        out = {}
        for m, c in self.terms.items():
            c2 = fn(c)
            if c2:
                out[m] = c2
        return Element(self.alg, out)

    def with_algebra(self, alg: Algebra) -> Element:
        """Same element viewed in an algebra that differs only in its degree cap."""
        if alg != self.alg:
            raise FieldMismatchError(f"cannot move {self.alg} element into {alg}")
        return Element(alg, self.terms)

    # -- arithmetic ---------------------------------------------------------

    def _other(self, other) -> Element | None:
        if isinstance(other, Element):
            if other.alg != self.alg:
                _mismatch(self, other)
            return other
        if isinstance(other, (Scalar, *NUMBER_TYPES)):
            return self.alg.scalar(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if len(o.terms) > len(self.terms):
            big, small = o.terms, self.terms
        else:
            big, small = self.terms, o.terms
        out = dict(big)
        for m, c in small.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Element(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> Element:
        c = c if isinstance(c, Scalar) else self.alg.field(c)
        if c.field != self.alg.field:
            raise FieldMismatchError(f"{c!r} is not in {self.alg.field!r}")
        if not c:
            return self.alg.zero()
        return Element(self.alg, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Scalar, *NUMBER_TYPES)):
            return self.scale(other)
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not self.terms or not o.terms:
            return self.alg.zero()
        alg = self.alg
        if self.degree + o.degree > alg.max_degree:
            raise DegreeCapError(
                f"product degree {self.degree + o.degree} exceeds cap {alg.max_degree}"
            )
        out: dict = {}
        assoc = alg.is_associative
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = m1 + m2 if assoc else tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m)
                out[m] = c1 * c2 if v is None else v + c1 * c2
        return Element(alg, {m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (Scalar, *NUMBER_TYPES)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (Scalar, *NUMBER_TYPES)):
            c = other if isinstance(other, Scalar) else self.alg.field(other)
            return self.scale(c.inverse())
        if isinstance(other, Element) and other.is_scalar():
            return self.scale(other.to_scalar().inverse())
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = self.alg.one()
        for _ in range(k):
            result = result * self
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.alg == other.alg and self.terms == other.terms
        if isinstance(other, (Scalar, *NUMBER_TYPES)):
            try:
                return self.terms == self.alg.scalar(other).terms
            except FieldMismatchError:
                return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.alg, frozenset(self.terms.items())))
        return self._hash

    # -- printing -----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            neg = c.is_negative_leading()
            mag = -c if neg else c
            mono = self.alg.format_monomial(m)
            if mono == "1":
                body = _format_coefficient(mag, standalone=True)
            elif mag.is_one():
                body = mono
            else:
                body = f"{_format_coefficient(mag, standalone=False)}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"Element({self}, {self.alg})"


def _format_coefficient(c: Scalar, standalone: bool) -> str:
    # mixed a+b*s coefficients are parenthesised so that a leading sign applies to both parts
    if c.b and c.a:
        return f"({c})"
    return str(c)


# -- module-level operations ------------------------------------------------


def elem_arith(op: str, f: Element, g=None) -> Element:
    """Dispatch ``add | mul | scalar_mul | neg``."""
    if op == "add":
        return f + f.alg.coerce(g)
    if op == "mul":
        return f * f.alg.coerce(g)
    if op == "scalar_mul":
        return f.scale(g)
    if op == "neg":
        return -f
    raise ValueError(f"unknown element op {op!r}")


def substitute(f: Element, images: Sequence[Element]) -> Element:
    """Replace each ``x_i`` in ``f`` by ``images[i-1]``.

    Products of images are memoised by word prefix, so shared prefixes among
    the monomials of ``f`` are multiplied once.
    """
    alg = f.alg
    if len(images) != alg.n:
        raise ValueError(f"expected {alg.n} images, got {len(images)}")
    for img in images:
        if img.alg != alg:
            _mismatch(f, img)
    target = images[0].alg if images else alg
    cache: dict[tuple, Element] = {(): target.one()}
    out: dict = {}
    for m, c in f.terms.items():
        w = alg.mono_word(m)
        k = len(w)
        while w[:k] not in cache:
            k -= 1
        v = cache[w[:k]]
        for j in range(k, len(w)):
            v = v * images[w[j]]
            cache[w[: j + 1]] = v
        for mm, cc in v.terms.items():
            t = out.get(mm)
            out[mm] = cc * c if t is None else t + cc * c
    return Element(target, {m: c for m, c in out.items() if c})


def mirror(f: Element) -> Element:
    """Reverse every word, keeping coefficients (associative kind only)."""
    if not f.alg.is_associative:
        raise ValueError("mirror is only defined in the associative kind")
    return Element(f.alg, {m[::-1]: c for m, c in f.terms.items()})


def evaluate_at_point(f: Element, point: Sequence) -> Scalar:
    """Value of ``f`` with ``x_i`` replaced by the scalar ``point[i-1]``."""
    alg = f.alg
    if len(point) != alg.n:
        raise ValueError(f"expected {alg.n} coordinates, got {len(point)}")
    pt = [p if isinstance(p, Scalar) else alg.field(p) for p in point]
    for p in pt:
        if p.field != alg.field:
            raise FieldMismatchError(f"{p!r} is not in {alg.field!r}")
    total = alg.field.zero()
    powers: dict[tuple[int, int], Scalar] = {}
    for m, c in f.terms.items():
        v = c
        if alg.is_associative:
            exps = [0] * alg.n
            for i in m:
                exps[i] += 1
        else:
            exps = m
        for i, e in enumerate(exps):
            if e:
                key = (i, e)
                p = powers.get(key)
                if p is None:
                    p = pt[i] ** e
                    powers[key] = p
                v = v * p
        total = total + v
    return total
