"""Substitution endomorphisms of a free algebra.

Composition convention, used everywhere in the package: ``compose(s, t)`` is
the map ``f -> s(t(f))``, i.e. ``t`` is applied first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .freealg import Algebra, Element, substitute
from .scalars import FieldAutomorphism, FieldMismatchError, Scalar

__all__ = [
    "Endomorphism",
    "identity",
    "constant",
    "apply",
    "compose",
    "is_constant",
    "ProbeSet",
    "theorem2_probe_set",
    "collapse_probe",
    "one_slot_probe",
    "vanishes_on_grid",
    "grid_points",
]


class Endomorphism:
    """Endomorphism given by the images of ``x_1..x_n``."""

    __slots__ = ("alg", "images")

    def __init__(self, alg: Algebra, images: Sequence[Element]):
        images = tuple(alg.coerce(img) for img in images)
        if len(images) != alg.n:
            raise ValueError(f"expected {alg.n} images, got {len(images)}")
        self.alg = alg
        self.images = images

    def __call__(self, f: Element) -> Element:
        return apply(self, f)

    def __matmul__(self, other: Endomorphism) -> Endomorphism:
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.alg == other.alg and self.images == other.images

    def __hash__(self):
        return hash((self.alg, self.images))

    @property
    def degree(self) -> float:
        return max(img.degree for img in self.images)

    def map_images(self, fn: Callable[[Element], Element]) -> Endomorphism:
        return Endomorphism(self.alg, [fn(img) for img in self.images])

    def twist(self, alpha: FieldAutomorphism) -> Endomorphism:
        """``alpha o self o alpha^-1``: coefficients of every image mapped through alpha."""
        if alpha is FieldAutomorphism.IDENTITY:
            return self
        return self.map_images(lambda f: f.map_coefficients(alpha))

    def with_algebra(self, alg: Algebra) -> Endomorphism:
        return Endomorphism(alg, [img.with_algebra(alg) for img in self.images])

    def __str__(self):
        return "; ".join(f"x{i} -> {img}" for i, img in enumerate(self.images, 1))

    def __repr__(self):
        return f"Endomorphism({self})"

    @classmethod
    def parse(cls, text: str, alg: Algebra) -> Endomorphism:
        """Parse ``x1 -> <expr>; x2 -> <expr>; ...`` (every generator exactly once)."""
        from .parsing import ParseError, parse_expression

        images: dict[int, Element] = {}
        for chunk in text.split(";"):
            if not chunk.strip():
                continue
            if "->" not in chunk:
                raise ParseError(f"expected 'x<i> -> <expr>', got {chunk.strip()!r}", text, text.find(chunk))
            lhs, rhs = chunk.split("->", 1)
            lhs = lhs.strip()
            if not (lhs.startswith("x") and lhs[1:].isdigit()):
                raise ParseError(f"bad generator {lhs!r}", text, text.find(chunk))
            i = int(lhs[1:])
            if not 1 <= i <= alg.n:
                raise ParseError(f"unknown variable {lhs!r} (n={alg.n})", text, text.find(chunk))
            if i in images:
                raise ParseError(f"generator {lhs} given twice", text, text.find(chunk))
            images[i] = parse_expression(rhs, alg)
        missing = [i for i in range(1, alg.n + 1) if i not in images]
        if missing:
            raise ParseError(f"missing images for {', '.join(f'x{i}' for i in missing)}", text, len(text))
        return cls(alg, [images[i] for i in range(1, alg.n + 1)])


def identity(alg: Algebra) -> Endomorphism:
    return Endomorphism(alg, alg.gens())


def constant(alg: Algebra, point: Sequence) -> Endomorphism:
    """Constant endomorphism ``x_i -> point[i-1]``."""
    return Endomorphism(alg, [alg.scalar(p) for p in point])


def apply(s: Endomorphism, f: Element) -> Element:
    if f.alg != s.alg:
        raise FieldMismatchError(f"endomorphism of {s.alg} applied to element of {f.alg}")
    return substitute(f, s.images)


def compose(s: Endomorphism, t: Endomorphism) -> Endomorphism:
    """``s o t``: apply ``t`` first, then ``s``."""
    if s.alg != t.alg:
        raise FieldMismatchError(f"cannot compose endomorphisms of {s.alg} and {t.alg}")
    return Endomorphism(s.alg, [substitute(img, s.images) for img in t.images])


def is_constant(s: Endomorphism) -> bool:
    return all(img.degree <= 0 for img in s.images)


def collapse_probe(alg: Algebra, j: int) -> Endomorphism:
    """``x_j -> x_j`` and every other generator to 0."""
    return Endomorphism(alg, [alg.x(i) if i == j else alg.zero() for i in range(1, alg.n + 1)])


def one_slot_probe(alg: Algebra, j: int, u: Element) -> Endomorphism:
    """``x_j -> u``, every other generator fixed."""
    return Endomorphism(alg, [u if i == j else alg.x(i) for i in range(1, alg.n + 1)])


@dataclass(frozen=True)
class ProbeSet:
    """Endomorphisms used to test whether a bijection commutes with End(W).

    ``collapse[j-1]`` keeps ``x_j`` and kills the other generators (other
    generators, not ``x_1`` itself, are sent to 0).  ``one_slot(j, u)``
    replaces ``x_j`` by ``u``.
    """

    alg: Algebra
    collapse: tuple[Endomorphism, ...]

    def one_slot(self, j: int, u: Element) -> Endomorphism:
        return one_slot_probe(self.alg, j, u)

    def __iter__(self) -> Iterator[Endomorphism]:
        return iter(self.collapse)


def theorem2_probe_set(alg: Algebra) -> ProbeSet:
    return ProbeSet(alg, tuple(collapse_probe(alg, j) for j in range(1, alg.n + 1)))


def grid_points(alg: Algebra, per_axis: int) -> Iterator[tuple[Scalar, ...]]:
    """The grid ``{0..per_axis-1}^n`` of rational points."""
    axis = [alg.field(k) for k in range(per_axis)]
    return itertools.product(axis, repeat=alg.n)


def vanishes_on_grid(f: Element, per_axis: int | None = None) -> bool:
    """Whether every constant endomorphism on the point grid kills ``f``.

    With ``per_axis = deg f + 1`` (the default) a commutative ``f`` vanishes
    on the grid only if ``f = 0``.  In the associative kind constant
    endomorphisms also kill every commutator, so there is no such certificate.
    """
    from .freealg import evaluate_at_point

    if f.is_zero():
        return True
    if per_axis is None:
        per_axis = int(f.degree) + 1
    return all(not evaluate_at_point(f, p) for p in grid_points(f.alg, per_axis))
