"""Tame automorphisms with explicit inverses, and basic elements.

A tame automorphism is a word of generators ``[g1, ..., gk]`` standing for
``g1 o g2 o ... o gk`` (``gk`` applied first).  Generators are affine maps
``x_i -> sum_j M[i][j] x_j + b_i`` or elementary maps ``x_i -> x_i + f`` with
``f`` free of ``x_i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union

from .endo import Endomorphism, apply, compose, identity
from .freealg import Algebra, Element, mirror
from .scalars import FieldAutomorphism, FieldMismatchError, Scalar

__all__ = [
    "Affine",
    "Elementary",
    "TameAutomorphism",
    "BasicElementWitness",
    "as_endomorphism",
    "invert",
    "twist_by_field_automorphism",
    "mirror_twist",
    "basic_element",
    "matrix_inverse",
    "determinant",
]


# -- exact linear algebra -----------------------------------------------------


def _eliminate(matrix, field):
    """Gauss-Jordan on ``[M | I]``; returns ``(det, inverse or None)``."""
    n = len(matrix)
    rows = [list(r) + [field.one() if i == j else field.zero() for j in range(n)] for i, r in enumerate(matrix)]
    det = field.one()
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return field.zero(), None
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        p = rows[col][col]
        det = det * p
        inv_p = p.inverse()
        rows[col] = [v * inv_p for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det, tuple(tuple(r[n:]) for r in rows)


def determinant(matrix, field) -> Scalar:
    return _eliminate(matrix, field)[0]


def matrix_inverse(matrix, field):
    det, inv = _eliminate(matrix, field)
    if inv is None:
        raise ZeroDivisionError("singular matrix")
    return inv


# -- generators ---------------------------------------------------------------


@dataclass(frozen=True)
class Affine:
    """``x_i -> sum_j matrix[i][j] * x_j + shift[i]``."""

    matrix: tuple[tuple[Scalar, ...], ...]
    shift: tuple[Scalar, ...]

    def __post_init__(self):
        n = len(self.matrix)
        if any(len(r) != n for r in self.matrix) or len(self.shift) != n:
            raise ValueError("affine generator needs an n x n matrix and n shifts")
        field = self.shift[0].field
        if not determinant(self.matrix, field):
            raise ValueError("affine generator has a singular matrix")

    @classmethod
    def build(cls, alg: Algebra, matrix, shift=None) -> Affine:
        f = alg.field
        m = tuple(tuple(f(v) for v in row) for row in matrix)
        b = tuple(f(v) for v in shift) if shift is not None else (f.zero(),) * alg.n
        return cls(m, b)

    def images(self, alg: Algebra) -> list[Element]:
        out = []
        gens = alg.gens()
        for row, b in zip(self.matrix, self.shift):
            img = alg.scalar(b)
            for c, x in zip(row, gens):
                if c:
                    img = img + x.scale(c)
            out.append(img)
        return out

    def inverse(self) -> Affine:
        field = self.shift[0].field
        inv = matrix_inverse(self.matrix, field)
        shift = tuple(-sum((a * b for a, b in zip(row, self.shift)), field.zero()) for row in inv)
        return Affine(inv, shift)

    def twist(self, alpha: FieldAutomorphism) -> Affine:
        return Affine(
            tuple(tuple(alpha(v) for v in row) for row in self.matrix),
            tuple(alpha(v) for v in self.shift),
        )

    def is_identity(self) -> bool:
        n = len(self.matrix)
        return all(
            self.matrix[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n)
        ) and not any(self.shift)

    def __str__(self):
        rows = ",".join("[" + ",".join(_scalar_text(v) for v in row) + "]" for row in self.matrix)
        shift = ",".join(_scalar_text(v) for v in self.shift)
        return f"affine [{rows}] + [{shift}]"


@dataclass(frozen=True)
class Elementary:
    """``x_index -> x_index + f`` with ``f`` free of ``x_index`` (1-based index)."""

    index: int
    f: Element

    def __post_init__(self):
        if not 1 <= self.index <= self.f.alg.n:
            raise ValueError(f"elementary index {self.index} out of range")
        if self.f.involves(self.index):
            raise ValueError(f"elementary map on x{self.index} may not involve x{self.index}")

    def images(self, alg: Algebra) -> list[Element]:
        return [x + self.f if i == self.index else x for i, x in enumerate(alg.gens(), 1)]

    def inverse(self) -> Elementary:
        return Elementary(self.index, -self.f)

    def twist(self, alpha: FieldAutomorphism) -> Elementary:
        return Elementary(self.index, self.f.map_coefficients(alpha))

    def __str__(self):
        return f"elem {self.index} {self.f}"


Generator = Union[Affine, Elementary]


def _scalar_text(c: Scalar) -> str:
    return f"({c})" if c.a and c.b else str(c)


class TameAutomorphism:
    """Composite ``word[0] o word[1] o ... o word[-1]`` of generators."""

    __slots__ = ("alg", "word", "_endo")

    def __init__(self, alg: Algebra, word: Sequence[Generator] = ()):
        word = tuple(word)
        for g in word:
            if isinstance(g, Elementary):
                if g.f.alg != alg:
                    raise FieldMismatchError(f"elementary generator over {g.f.alg} used in {alg}")
            elif isinstance(g, Affine):
                if len(g.shift) != alg.n or g.shift[0].field != alg.field:
                    raise FieldMismatchError(f"affine generator does not fit {alg}")
            else:
                raise TypeError(f"not a tame generator: {g!r}")
        self.alg = alg
        self.word = word
        self._endo = None

    @classmethod
    def identity(cls, alg: Algebra) -> TameAutomorphism:
        return cls(alg, ())

    def __call__(self, f: Element) -> Element:
        return apply(as_endomorphism(self), f)

    def __matmul__(self, other: TameAutomorphism) -> TameAutomorphism:
        """``self o other``."""
        if other.alg != self.alg:
            raise FieldMismatchError("tame automorphisms over different algebras")
        return TameAutomorphism(self.alg, self.word + other.word)

    def __len__(self):
        return len(self.word)

    def __eq__(self, other):
        # structural; use same_action for equality as maps
        if not isinstance(other, TameAutomorphism):
            return NotImplemented
        return self.alg == other.alg and self.word == other.word

    def __hash__(self):
        return hash((self.alg, self.word))

    def same_action(self, other: TameAutomorphism) -> bool:
        return as_endomorphism(self) == as_endomorphism(other)

    def is_affine(self) -> bool:
        return as_endomorphism(self).degree <= 1

    def __str__(self):
        return "; ".join(str(g) for g in self.word) if self.word else "id"

    def __repr__(self):
        return f"TameAutomorphism({self})"

    @classmethod
    def parse(cls, text: str, alg: Algebra) -> TameAutomorphism:
        return parse_tame_word(text, alg)


def as_endomorphism(phi: TameAutomorphism) -> Endomorphism:
    if phi._endo is None:
        alg = phi.alg
        result = identity(alg)
        for g in phi.word:
            result = compose(result, Endomorphism(alg, g.images(alg)))
        phi._endo = result
    return phi._endo


def invert(phi: TameAutomorphism) -> TameAutomorphism:
    return TameAutomorphism(phi.alg, [g.inverse() for g in reversed(phi.word)])


def twist_by_field_automorphism(phi: TameAutomorphism, alpha: FieldAutomorphism) -> TameAutomorphism:
    """``phi^alpha`` with ``alpha o phi = phi^alpha o alpha`` on W."""
    if not alpha.valid_for(phi.alg.field):
        raise ValueError(f"{alpha} is not an automorphism of {phi.alg.field!r}")
    if alpha is FieldAutomorphism.IDENTITY:
        return phi
    return TameAutomorphism(phi.alg, [g.twist(alpha) for g in phi.word])


def mirror_twist(phi: TameAutomorphism) -> TameAutomorphism:
    """``phi^beta`` with ``beta o phi = phi^beta o beta``; affine generators are unchanged."""
    if not phi.alg.is_associative:
        raise ValueError("mirror twist needs the associative kind")
    return TameAutomorphism(
        phi.alg,
        [Elementary(g.index, mirror(g.f)) if isinstance(g, Elementary) else g for g in phi.word],
    )


@dataclass(frozen=True)
class BasicElementWitness:
    """The basic element ``phi(x_index)`` together with the base it belongs to."""

    phi: TameAutomorphism
    index: int

    def __post_init__(self):
        if not 1 <= self.index <= self.phi.alg.n:
            raise ValueError(f"index {self.index} out of range")

    @property
    def alg(self) -> Algebra:
        return self.phi.alg

    def base(self) -> tuple[Element, ...]:
        return as_endomorphism(self.phi).images


def basic_element(w: BasicElementWitness) -> Element:
    return as_endomorphism(w.phi).images[w.index - 1]


# -- text form ----------------------------------------------------------------

_ELEM = re.compile(r"\s*elem\s+(\d+)\s+(.+?)\s*$", re.S)
_AFFINE = re.compile(r"\s*affine\s*(\[.*\])\s*\+\s*(\[.*\])\s*$", re.S)


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _strip_brackets(text: str) -> str:
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ValueError(f"expected a bracketed list, got {text!r}")
    return t[1:-1]


def parse_generator(text: str, alg: Algebra) -> Generator:
    from .parsing import ParseError, parse_expression, parse_scalar

    m = _ELEM.match(text)
    if m:
        f = parse_expression(m.group(2), alg)
        return Elementary(int(m.group(1)), f)
    m = _AFFINE.match(text)
    if m:
        try:
            rows = [
                [parse_scalar(v, alg.field) for v in _split_top(_strip_brackets(r), ",")]
                for r in _split_top(_strip_brackets(m.group(1)), ",")
            ]
            shift = [parse_scalar(v, alg.field) for v in _split_top(_strip_brackets(m.group(2)), ",")]
        except ValueError as exc:
            raise ParseError(str(exc), text, 0) from exc
        if len(rows) != alg.n:
            raise ParseError(f"affine matrix must be {alg.n} x {alg.n}", text, 0)
        return Affine.build(alg, rows, shift)
    raise ParseError(f"expected 'affine [[..]] + [..]' or 'elem i <expr>', got {text.strip()!r}", text, 0)


def parse_tame_word(text: str, alg: Algebra) -> TameAutomorphism:
    """Parse ``;``-separated generators; ``id`` or empty text is the identity."""
    t = text.strip()
    if t in ("", "id"):
        return TameAutomorphism.identity(alg)
    return TameAutomorphism(alg, [parse_generator(part, alg) for part in _split_top(t, ";")])
