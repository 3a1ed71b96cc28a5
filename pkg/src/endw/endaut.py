"""Automorphisms of End(W) induced by bijections of W.

A bijection ``mu`` of W induces ``s -> mu o s o mu^-1`` on End(W).  The
bijections handled here are words in four primitives:

* ``Linear(c, d)``:        ``u -> c*u + d``
* ``FieldSemilinear(a)``:  apply the field automorphism ``a`` to every coefficient
* ``AlgebraAuto(phi)``:    a tame automorphism of W
* ``Mirror()``:            reverse every word (associative kind only)

Every such word rewrites to the canonical shape
``Linear o FieldSemilinear o AlgebraAuto o Mirror^e`` (rightmost applied
first), which is what :func:`normalize` returns.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .autos import (
    Affine,
    Elementary,
    TameAutomorphism,
    _split_top,
    as_endomorphism,
    invert,
    mirror_twist,
    parse_tame_word,
    twist_by_field_automorphism,
)
from .endo import Endomorphism, apply, compose, theorem2_probe_set
from .freealg import Algebra, Element, Kind, mirror
from .scalars import Field, FieldAutomorphism, FieldMismatchError, Scalar

__all__ = [
    "Linear",
    "FieldSemilinear",
    "AlgebraAuto",
    "Mirror",
    "BijectionWord",
    "CanonicalQuasiInner",
    "OracleTable",
    "DecompositionError",
    "DecompositionReport",
    "LawResult",
    "UnaryPolynomial",
    "CentralityVerdict",
    "apply_bijection",
    "conjugate",
    "conjugate_by_definition",
    "normalize",
    "decompose_blackbox",
    "solve_product_coefficients",
    "law_checks",
    "centrality_probe",
    "base_image_check",
    "base_image_witness",
    "standard_probes",
    "law_probes",
]


# -- primitives ---------------------------------------------------------------


@dataclass(frozen=True)
class Linear:
    """``u -> c*u + d`` with ``c != 0``."""

    c: Scalar
    d: Scalar

    def __post_init__(self):
        if not self.c:
            raise ValueError("linear bijection needs c != 0")
        if self.c.field != self.d.field:
            raise FieldMismatchError("linear bijection coefficients from different fields")

    @classmethod
    def identity(cls, field: Field) -> Linear:
        return cls(field.one(), field.zero())

    def __call__(self, f: Element) -> Element:
        return f.scale(self.c) + self.d

    def then(self, other: Linear) -> Linear:
        """``self o other``."""
        return Linear(self.c * other.c, self.c * other.d + self.d)

    def inverse(self) -> Linear:
        inv = self.c.inverse()
        return Linear(inv, -self.d * inv)

    def twist(self, alpha: FieldAutomorphism) -> Linear:
        return Linear(alpha(self.c), alpha(self.d))

    def is_identity(self) -> bool:
        return self.c.is_one() and not self.d

    def __str__(self):
        return f"linear({self.c},{self.d})"


@dataclass(frozen=True)
class FieldSemilinear:
    alpha: FieldAutomorphism

    def __call__(self, f: Element) -> Element:
        if self.alpha is FieldAutomorphism.IDENTITY:
            return f
        return f.map_coefficients(self.alpha)

    def __str__(self):
        return f"alpha({self.alpha})"


@dataclass(frozen=True)
class AlgebraAuto:
    phi: TameAutomorphism

    def __call__(self, f: Element) -> Element:
        return self.phi(f)

    def __str__(self):
        return f"auto[{self.phi}]"


@dataclass(frozen=True)
class Mirror:
    def __call__(self, f: Element) -> Element:
        return mirror(f)

    def __str__(self):
        return "mirror"


Primitive = Union[Linear, FieldSemilinear, AlgebraAuto, Mirror]

_RANK = {Linear: 0, FieldSemilinear: 1, AlgebraAuto: 2, Mirror: 3}


def _check_primitive(p: Primitive, alg: Algebra):
    if isinstance(p, Mirror):
        if not alg.is_associative:
            raise ValueError("mirror is only available in the associative kind")
    elif isinstance(p, Linear):
        if p.c.field != alg.field:
            raise FieldMismatchError(f"linear bijection over {p.c.field!r} used in {alg}")
    elif isinstance(p, FieldSemilinear):
        if not p.alpha.valid_for(alg.field):
            raise ValueError(f"{p.alpha} is not an automorphism of {alg.field!r}")
    elif isinstance(p, AlgebraAuto):
        if p.phi.alg != alg:
            raise FieldMismatchError(f"automorphism of {p.phi.alg} used in {alg}")
    else:
        raise TypeError(f"not a primitive bijection: {p!r}")


class BijectionWord:
    """``prims[0] o prims[1] o ... o prims[-1]`` (last one applied first)."""

    __slots__ = ("alg", "prims")

    def __init__(self, alg: Algebra, prims: Sequence[Primitive] = ()):
        prims = tuple(prims)
        for p in prims:
            _check_primitive(p, alg)
        self.alg = alg
        self.prims = prims

    def __call__(self, f: Element) -> Element:
        return apply_bijection(self, f)

    def __len__(self):
        return len(self.prims)

    def __str__(self):
        return " . ".join(str(p) for p in self.prims) if self.prims else "id"

    def __repr__(self):
        return f"BijectionWord({self})"

    @classmethod
    def parse(cls, text: str, alg: Algebra) -> BijectionWord:
        return parse_bijection_word(text, alg)


def apply_bijection(w: BijectionWord, f: Element) -> Element:
    if f.alg != w.alg:
        raise FieldMismatchError(f"bijection of {w.alg} applied to element of {f.alg}")
    for p in reversed(w.prims):
        f = p(f)
    return f


# -- canonical form -----------------------------------------------------------


@dataclass(frozen=True)
class CanonicalQuasiInner:
    """``linear o alpha o phi o mirror^e``."""

    linear: Linear
    alpha: FieldAutomorphism
    phi: TameAutomorphism
    mirror: bool = False

    def __post_init__(self):
        if self.mirror and not self.phi.alg.is_associative:
            raise ValueError("mirror flag requires the associative kind")
        if not self.alpha.valid_for(self.phi.alg.field):
            raise ValueError(f"{self.alpha} is not an automorphism of {self.phi.alg.field!r}")

    @property
    def alg(self) -> Algebra:
        return self.phi.alg

    @classmethod
    def identity(cls, alg: Algebra) -> CanonicalQuasiInner:
        return cls(Linear.identity(alg.field), FieldAutomorphism.IDENTITY, TameAutomorphism.identity(alg), False)

    def __call__(self, f: Element) -> Element:
        if self.mirror:
            f = mirror(f)
        f = self.phi(f)
        if self.alpha is not FieldAutomorphism.IDENTITY:
            f = f.map_coefficients(self.alpha)
        return self.linear(f)

    def as_word(self) -> BijectionWord:
        prims: list[Primitive] = [self.linear, FieldSemilinear(self.alpha), AlgebraAuto(self.phi)]
        if self.mirror:
            prims.append(Mirror())
        return BijectionWord(self.alg, prims)

    def inverse(self) -> CanonicalQuasiInner:
        prims: list[Primitive] = [Mirror()] if self.mirror else []
        prims += [AlgebraAuto(invert(self.phi)), FieldSemilinear(self.alpha.inverse()), self.linear.inverse()]
        return normalize(BijectionWord(self.alg, prims))

    def without_linear(self) -> CanonicalQuasiInner:
        return CanonicalQuasiInner(Linear.identity(self.alg.field), self.alpha, self.phi, self.mirror)

    def is_semi_inner(self) -> bool:
        return not self.mirror

    def same_action(self, other: CanonicalQuasiInner) -> bool:
        """Equal components, comparing the automorphism part by its generator images."""
        return (
            self.linear == other.linear
            and self.alpha is other.alpha
            and self.mirror == other.mirror
            and self.phi.same_action(other.phi)
        )

    def __str__(self):
        return f"{self.linear} . alpha({self.alpha}) . auto[{self.phi}] . mirror^{int(self.mirror)}"

    @classmethod
    def parse(cls, text: str, alg: Algebra) -> CanonicalQuasiInner:
        return normalize(parse_bijection_word(text, alg))


def _fuse(p: Primitive, q: Primitive) -> list[Primitive]:
    if isinstance(p, Linear):
        return [p.then(q)]
    if isinstance(p, FieldSemilinear):
        return [FieldSemilinear(p.alpha.compose(q.alpha))]
    if isinstance(p, AlgebraAuto):
        return [AlgebraAuto(p.phi @ q.phi)]
    return []  # mirror o mirror


def _swap(p: Primitive, q: Primitive) -> list[Primitive]:
    """Rewrite ``p o q`` (rank p > rank q) as ``q' o p'``."""
    if isinstance(q, Linear):
        if isinstance(p, FieldSemilinear):
            return [q.twist(p.alpha), p]
        return [q, p]  # linear maps commute with automorphisms and the mirror
    if isinstance(q, FieldSemilinear):
        if isinstance(p, AlgebraAuto):
            # phi o a = a o phi^(a^-1)
            return [q, AlgebraAuto(twist_by_field_automorphism(p.phi, q.alpha.inverse()))]
        return [q, p]  # the mirror commutes with coefficient maps
    # p is the mirror, q an algebra automorphism: beta o phi = phi^beta o beta
    return [AlgebraAuto(mirror_twist(q.phi)), p]


def rewrite_step(prims: list[Primitive]) -> list[Primitive] | None:
    """One rewrite at the leftmost out-of-order or same-type adjacent pair."""
    for i in range(len(prims) - 1):
        p, q = prims[i], prims[i + 1]
        rp, rq = _RANK[type(p)], _RANK[type(q)]
        if rp == rq:
            return prims[:i] + _fuse(p, q) + prims[i + 2 :]
        if rp > rq:
            return prims[:i] + _swap(p, q) + prims[i + 2 :]
    return None


def normalize(w: BijectionWord) -> CanonicalQuasiInner:
    """Rewrite a bijection word into ``linear o alpha o phi o mirror^e``.

    Each step either fuses two neighbours (the word gets shorter) or swaps an
    out-of-order pair without changing the length (type inversions drop by
    one), so rewriting terminates.
    """
    prims = list(w.prims)
    while True:
        nxt = rewrite_step(prims)
        if nxt is None:
            break
        prims = nxt
    alg = w.alg
    canon = CanonicalQuasiInner.identity(alg)
    linear, alpha, phi, mir = canon.linear, canon.alpha, canon.phi, False
    for p in prims:
        if isinstance(p, Linear):
            linear = p
        elif isinstance(p, FieldSemilinear):
            alpha = p.alpha
        elif isinstance(p, AlgebraAuto):
            phi = p.phi
        else:
            mir = True
    return CanonicalQuasiInner(linear, alpha, phi, mir)


# -- conjugation --------------------------------------------------------------


def conjugate(mu: CanonicalQuasiInner | BijectionWord, s: Endomorphism) -> Endomorphism:
    """``mu o s o mu^-1`` as an endomorphism.

    Computed componentwise: the mirror reverses the images of ``s``, the
    algebra automorphism conjugates by composition, the field automorphism maps
    coefficients, and the linear part drops out.
    """
    if isinstance(mu, BijectionWord):
        mu = normalize(mu)
    if s.alg != mu.alg:
        raise FieldMismatchError(f"cannot conjugate an endomorphism of {s.alg} by a bijection of {mu.alg}")
    t = s
    if mu.mirror:
        t = t.map_images(mirror)
    if mu.phi.word:
        phi = as_endomorphism(mu.phi).with_algebra(s.alg)
        phi_inv = as_endomorphism(invert(mu.phi)).with_algebra(s.alg)
        t = compose(phi, compose(t, phi_inv))
    return t.twist(mu.alpha)


def conjugate_by_definition(mu: CanonicalQuasiInner, s: Endomorphism) -> Endomorphism:
    """``x_i -> mu(s(mu^-1(x_i)))`` evaluated literally."""
    inv = mu.inverse()
    return Endomorphism(s.alg, [mu(apply(s, inv(x))) for x in s.alg.gens()])


# -- oracle tables ------------------------------------------------------------


class OracleTable:
    """Values of a bijection on finitely many probe elements."""

    def __init__(self, alg: Algebra, entries: Iterable[tuple[Element, Element]] = (), witnesses: Sequence[TameAutomorphism] = ()):
        self.alg = alg
        self.entries: dict[Element, Element] = {}
        for k, v in entries:
            k, v = alg.coerce(k), alg.coerce(v)
            if k in self.entries:
                raise ValueError(f"duplicate table key {k}")
            self.entries[k] = v
        self.witnesses = tuple(witnesses)

    def __contains__(self, key: Element) -> bool:
        return key in self.entries

    def __getitem__(self, key: Element) -> Element:
        return self.entries[key]

    def get(self, key: Element):
        return self.entries.get(key)

    def __len__(self):
        return len(self.entries)

    def items(self):
        return self.entries.items()

    @classmethod
    def from_map(cls, fn, alg: Algebra, probes: Iterable[Element], witnesses: Sequence[TameAutomorphism] = ()) -> OracleTable:
        return cls(alg, [(p, fn(p)) for p in probes], witnesses)

    def with_entry(self, key: Element, value: Element) -> OracleTable:
        t = OracleTable(self.alg, witnesses=self.witnesses)
        t.entries = dict(self.entries)
        t.entries[self.alg.coerce(key)] = self.alg.coerce(value)
        return t

    def dumps(self) -> str:
        lines = [f"witness: {w}" for w in self.witnesses]
        lines += [f"{k} => {v}" for k, v in self.entries.items()]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str, alg: Algebra) -> OracleTable:
        from .parsing import ParseError, parse_expression

        entries = []
        witnesses = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("witness:"):
                witnesses.append(parse_tame_word(line[len("witness:") :], alg))
                continue
            if "=>" not in line:
                raise ParseError(f"line {lineno}: expected '<expr> => <expr>'", line, 0)
            lhs, rhs = line.split("=>", 1)
            entries.append((parse_expression(lhs, alg), parse_expression(rhs, alg)))
        return cls(alg, entries, witnesses)


def standard_probes(alg: Algebra, products: bool = True) -> list[Element]:
    """``0, 1, x_i``, ``sqrt(d)`` when available, and ``x_i*x_j`` for ``i != j``."""
    probes = [alg.zero(), alg.one(), *alg.gens()]
    if alg.field.d is not None:
        probes.append(alg.scalar(alg.field.sqrt()))
    if products:
        for i, j in itertools.permutations(range(1, alg.n + 1), 2):
            if alg.is_associative or i < j:
                probes.append(alg.x(i) * alg.x(j))
    return probes


def law_probes(alg: Algebra) -> list[Element]:
    """:func:`standard_probes` plus sums, scalar multiples and squares of generators."""
    probes = standard_probes(alg)
    gens = alg.gens()
    scalars = [alg.field(2), alg.field(-1, 0)]
    if alg.field.d is not None:
        scalars.append(alg.field(1, 1))
    probes += [alg.scalar(c) for c in scalars]
    probes += [x.scale(c) for x in gens for c in scalars]
    probes += [x + y for x, y in itertools.combinations(gens, 2)]
    probes += [gens[0] + 1, gens[0] * gens[0]]
    seen, out = set(), []
    for p in probes:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


# -- black-box decomposition --------------------------------------------------


class DecompositionError(ValueError):
    pass


@dataclass
class DecompositionReport:
    canonical: CanonicalQuasiInner
    normalizer: Linear
    steps: list[str]
    violations: list[tuple[Element, Element, Element]]

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        out = list(self.steps)
        out.append(f"canonical: {self.canonical}")
        for k, want, got in self.violations:
            out.append(f"violation: {k} => {want} but canonical form gives {got}")
        out.append(f"violations: {len(self.violations)}")
        return out


def _scalar_value(e: Element, what: str) -> Scalar:
    if not e.is_scalar():
        raise DecompositionError(f"{what} = {e} is not a scalar")
    return e.to_scalar()


def _recognize_automorphism(alg: Algebra, images: Sequence[Element]) -> TameAutomorphism | None:
    gens = alg.gens()
    if list(images) == gens:
        return TameAutomorphism.identity(alg)
    if all(img.degree <= 1 for img in images):
        unit = alg.unit_monomial
        matrix = [[img.coefficient(alg.gen_monomial(j)) for j in range(1, alg.n + 1)] for img in images]
        shift = [img.coefficient(unit) for img in images]
        try:
            return TameAutomorphism(alg, [Affine.build(alg, matrix, shift)])
        except ValueError:
            return None
    moved = [i for i, (img, x) in enumerate(zip(images, gens), 1) if img != x]
    if len(moved) == 1:
        i = moved[0]
        f = images[i - 1] - gens[i - 1]
        if not f.involves(i):
            return TameAutomorphism(alg, [Elementary(i, f)])
    return None


def decompose_blackbox(table: OracleTable, witnesses: Sequence[TameAutomorphism] = ()) -> DecompositionReport:
    """Recover ``linear o alpha o phi o mirror^e`` from values on probes.

    The automorphism part must match one of ``witnesses`` (or the table's own
    witnesses), or be a single affine or elementary generator; recognizing
    arbitrary automorphisms from images is not attempted.
    """
    alg = table.alg
    steps: list[str] = []
    zero, one = alg.zero(), alg.one()
    for need in [zero, one, *alg.gens()]:
        if need not in table:
            raise DecompositionError(f"table has no entry for {need}")

    # linear normalization: l(mu(0)) = 0, l(mu(1)) = 1
    a = _scalar_value(table[zero], "mu(0)")
    b = _scalar_value(table[one], "mu(1)")
    if a == b:
        raise DecompositionError(f"mu(0) = mu(1) = {a}")
    inv = (b - a).inverse()
    normalizer = Linear(inv, -a * inv)
    linear = Linear(b - a, a)
    steps.append(f"normalizer: {normalizer}")
    norm = {k: normalizer(v) for k, v in table.items()}

    # field automorphism from scalar probes
    scalar_keys = [k for k in norm if k.is_scalar()]
    for k in scalar_keys:
        _scalar_value(norm[k], f"normalized mu({k})")
    if alg.field.d is None:
        alpha = FieldAutomorphism.IDENTITY
    else:
        irrational = [k for k in scalar_keys if not k.to_scalar().is_rational]
        if not irrational:
            raise DecompositionError("no non-rational scalar probe to determine the field automorphism")
        candidates = [
            al for al in alg.field.automorphisms()
            if all(norm[k].to_scalar() == al(k.to_scalar()) for k in scalar_keys)
        ]
        if not candidates:
            raise DecompositionError("scalar probes are not consistent with any field automorphism")
        alpha = candidates[0]
    steps.append(f"alpha: {alpha}")

    # automorphism part: normalized mu(x_i) = phi^alpha(x_i)
    images = [norm[x].map_coefficients(alpha.inverse()) for x in alg.gens()]
    phi = None
    for w in (*witnesses, *table.witnesses):
        if w.alg == alg and list(as_endomorphism(w).images) == images:
            phi = w
            steps.append(f"auto: matched witness {w}")
            break
    if phi is None:
        phi = _recognize_automorphism(alg, images)
        if phi is None:
            raise DecompositionError(
                "generator images " + ", ".join(str(i) for i in images) + " match no supplied witness"
            )
        steps.append(f"auto: recognized {phi}")

    # mirror flag from a product probe x_i*x_j, i != j
    mir = False
    if alg.is_associative and alg.n == 1:
        steps.append("mirror: 0 (one generator, reversal acts trivially)")
    elif alg.is_associative:
        decided = None
        for i, j in itertools.permutations(range(1, alg.n + 1), 2):
            key = alg.x(i) * alg.x(j)
            if key not in norm:
                continue
            mi, mj = norm[alg.x(i)], norm[alg.x(j)]
            forward, backward = mi * mj, mj * mi
            v = norm[key]
            if v == forward and v != backward:
                flag = False
            elif v == backward and v != forward:
                flag = True
            elif v == forward:
                continue
            else:
                raise DecompositionError(
                    f"mu({key}) = {table[key]} matches neither mu(x{i})mu(x{j}) nor mu(x{j})mu(x{i})"
                )
            if decided is not None and decided != flag:
                raise DecompositionError("product probes disagree on the mirror flag")
            decided = flag
        if decided is None:
            raise DecompositionError("no product probe x_i*x_j (i != j) decides the mirror flag")
        mir = decided
        steps.append(f"mirror: {int(mir)}")

    canon = CanonicalQuasiInner(linear, alpha, phi, mir)
    violations = []
    for k, v in table.items():
        got = canon(k)
        if got != v:
            violations.append((k, v, got))
    return DecompositionReport(canon, normalizer, steps, violations)


# -- product coefficient system ----------------------------------------------


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def field_sqrt(x: Scalar) -> Scalar | None:
    """A square root of a rational scalar inside its field, or None."""
    if not x.is_rational:
        raise NotImplementedError("square roots of irrational scalars are not needed here")
    field = x.field
    r = _rational_sqrt(x.a)
    if r is not None:
        return field(r)
    if field.d is not None:
        r = _rational_sqrt(x.a / field.d)
        if r is not None:
            return Scalar(0, r, field)
    return None


def quadratic_roots(a: Scalar, b: Scalar, c: Scalar) -> list[Scalar]:
    """Roots in the field of ``a t^2 + b t + c`` (``a != 0``, rational discriminant)."""
    disc = b * b - a * c * 4
    root = field_sqrt(disc)
    if root is None:
        return []
    two_a = a * 2
    roots = {(-b + root) / two_a, (-b - root) / two_a}
    return sorted(roots, key=Scalar.sort_key)


def solve_product_coefficients(field: Field) -> set[tuple[Scalar, Scalar]]:
    """Solutions of ``a = a^2, b = b^2, ab = 0, a + b = 1`` over ``field``."""
    one, zero = field.one(), field.zero()
    sols = set()
    for a in quadratic_roots(one, -one, zero):
        b = one - a
        if b * b == b and a * b == zero and a * a == a and a + b == one:
            sols.add((a, b))
    return sols


# -- law checks ---------------------------------------------------------------


@dataclass
class LawResult:
    name: str
    status: str  # "pass" | "fail" | "not-checkable"
    witnesses: list[str] = dc_field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _normalized(table: OracleTable) -> dict[Element, Element] | None:
    alg = table.alg
    t0, t1 = table.get(alg.zero()), table.get(alg.one())
    if t0 is None or t1 is None or not t0.is_scalar() or not t1.is_scalar() or t0 == t1:
        return None
    a, b = t0.to_scalar(), t1.to_scalar()
    inv = (b - a).inverse()
    nz = Linear(inv, -a * inv)
    return {k: nz(v) for k, v in table.items()}


def law_checks(table: OracleTable) -> dict[str, LawResult]:
    """Check the additive, scalar and multiplicative laws on normalized table values.

    Values are first normalized by the linear map sending ``mu(0), mu(1)`` to
    ``0, 1``.  A law whose probe combinations are absent from the table is
    reported as ``not-checkable``.
    """
    names = ["additivity", "scalar-proportional", "scalar-multiplicative", "multiplicativity", "product-dichotomy"]
    norm = _normalized(table)
    if norm is None:
        return {n: LawResult(n, "not-checkable", ["mu(0), mu(1) missing, non-scalar or equal"]) for n in names}
    keys = list(norm)
    results = {n: LawResult(n, "pass") for n in names}

    def fail(name, text):
        r = results[name]
        r.status = "fail"
        r.witnesses.append(text)

    for u, v in itertools.combinations_with_replacement(keys, 2):
        if u.is_zero() or v.is_zero():
            continue
        s = u + v
        if s in norm:
            results["additivity"].checked += 1
            if norm[s] != norm[u] + norm[v]:
                fail("additivity", f"mu({u} + {v}) = {norm[s]} != {norm[u] + norm[v]}")

    scalars = [k for k in keys if k.is_scalar() and not k.is_zero()]
    for a in scalars:
        for u in keys:
            if u.is_scalar():
                continue
            au = u.scale(a.to_scalar())
            if au == u or au not in norm:
                continue
            results["scalar-multiplicative"].checked += 1
            if norm[au] != norm[a] * norm[u]:
                fail("scalar-multiplicative", f"mu({a} * {u}) = {norm[au]} != mu({a}) mu({u}) = {norm[a] * norm[u]}")
            if u.degree == 1 and len(u.terms) == 1 and u.terms[next(iter(u.terms))].is_one():
                results["scalar-proportional"].checked += 1
                if not _proportional(norm[au], norm[u]):
                    fail("scalar-proportional", f"mu({au}) = {norm[au]} is not a scalar multiple of mu({u}) = {norm[u]}")

    orders = set()
    nonscalar = [k for k in keys if not k.is_scalar()]
    for u, v in itertools.product(nonscalar, repeat=2):
        try:
            uv = u * v
        except ArithmeticError:
            continue
        if uv not in norm:
            continue
        results["multiplicativity"].checked += 1
        fwd, bwd = norm[u] * norm[v], norm[v] * norm[u]
        if norm[uv] != fwd:
            if norm[uv] == bwd:
                fail("multiplicativity", f"({u}, {v}): mu({uv}) = mu({v}) mu({u}) (anti-multiplicative)")
            else:
                fail("multiplicativity", f"({u}, {v}): mu({uv}) = {norm[uv]} != mu({u}) mu({v}) = {fwd}")
        if fwd != bwd:
            results["product-dichotomy"].checked += 1
            if norm[uv] == fwd:
                orders.add("forward")
            elif norm[uv] == bwd:
                orders.add("backward")
            else:
                fail("product-dichotomy", f"({u}, {v}): mu({uv}) matches neither order")
    if len(orders) > 1:
        fail("product-dichotomy", "some products keep the order and others reverse it")

    for r in results.values():
        if r.status == "pass" and r.checked == 0:
            r.status = "not-checkable"
    return results


def _proportional(f: Element, g: Element) -> bool:
    if g.is_zero():
        return f.is_zero()
    m, c = next(iter(g.terms.items()))
    ratio = f.coefficient(m) / c
    return f == g.scale(ratio) if ratio else f.is_zero()


# -- centrality ---------------------------------------------------------------


@dataclass(frozen=True)
class UnaryPolynomial:
    """``u -> coeffs[0] + coeffs[1] u + ... + coeffs[k] u^k``."""

    coeffs: tuple[Scalar, ...]

    @classmethod
    def of(cls, field: Field, *coeffs) -> UnaryPolynomial:
        return cls(tuple(c if isinstance(c, Scalar) else field(c) for c in coeffs))

    @property
    def degree(self) -> int:
        nz = [k for k, c in enumerate(self.coeffs) if c]
        return nz[-1] if nz else -1

    def __call__(self, u: Element) -> Element:
        result = u.alg.zero()
        for c in reversed(self.coeffs):
            result = result * u + c
        return result

    def __str__(self):
        if not self.coeffs:
            return "0"
        line = Algebra(Kind.COMMUTATIVE, 1, self.coeffs[0].field, max(self.degree, 1))
        return str(self(line.x(1))).replace("x1", "u")


@dataclass
class CentralityVerdict:
    verdict: str  # "central-linear" | "central-nonbijective" | "not-central"
    witness: str | None = None
    notes: list[str] = dc_field(default_factory=list)


def _collision(r: UnaryPolynomial, alg: Algebra) -> tuple[Element, Element] | None:
    x = alg.x(1)
    k = r.degree
    if k <= 0:
        return alg.zero(), alg.one()
    top, sub = r.coeffs[k], r.coeffs[k - 1]
    # reflection about the centre of the top two coefficients: exact for quadratics
    shift = -(sub * 2) / (top * k)
    v = -x + shift
    if v != x and r(x) == r(v):
        return x, v
    field = alg.field
    points = [field(i) for i in range(-6, 7)]
    for p, q in itertools.combinations(points, 2):
        if r(alg.scalar(p)) == r(alg.scalar(q)):
            return alg.scalar(p), alg.scalar(q)
    return None


def _unary_verdict(r: UnaryPolynomial, alg: Algebra) -> CentralityVerdict:
    if r.degree == 1:
        return CentralityVerdict("central-linear", None, [f"r(u) = {r} is a linear bijection"])
    notes = [f"r(u) = {r} commutes with every substitution"]
    pair = _collision(r, alg)
    if pair is not None:
        u, v = pair
        witness = f"collision: r({u}) = r({v}) = {r(u)}"
    else:
        witness = None
    if r.degree >= 2:
        notes.append(f"x1 has no preimage: deg r(u) is 0 or at least {r.degree}")
        if witness is None:
            witness = "no preimage of x1"
    return CentralityVerdict("central-nonbijective", witness, notes)


def centrality_probe(
    candidate: UnaryPolynomial | OracleTable,
    alg: Algebra,
    samples: int = 10,
    seed: int = 0,
) -> CentralityVerdict:
    """Decide whether ``candidate`` commutes with End(W) and, if so, whether it is linear."""
    if isinstance(candidate, UnaryPolynomial):
        if not candidate.coeffs:
            raise ValueError("empty candidate")
        for s in theorem2_probe_set(alg):
            x = alg.x(1)
            if apply(s, candidate(x)) != candidate(apply(s, x)):
                return CentralityVerdict("not-central", f"{s}: s(r(x1)) != r(s(x1))")
        return _unary_verdict(candidate, alg)

    table = candidate
    if not len(table):
        raise ValueError("empty candidate")
    probes = theorem2_probe_set(alg)
    endos: list[tuple[str, Endomorphism]] = [(f"collapse x{j}", s) for j, s in enumerate(probes.collapse, 1)]
    keys = list(table.entries)
    for u in keys:
        for j in range(1, alg.n + 1):
            endos.append((f"x{j} -> {u}", probes.one_slot(j, u)))
    from .sampling import random_endomorphism

    rng = random.Random(seed)
    for k in range(samples):
        s = random_endomorphism(rng, alg, max_degree=2, max_terms=2)
        endos.append((f"random[{k}] {s}", s))
    for name, s in endos:
        for k in keys:
            try:
                sk = apply(s, k)
            except ArithmeticError:
                continue
            if sk not in table:
                continue
            lhs = table[sk]
            rhs = apply(s, table[k])
            if lhs != rhs:
                return CentralityVerdict(
                    "not-central",
                    f"s = ({s}) [{name}], at {k}: mu(s({k})) = {lhs} != s(mu({k})) = {rhs}",
                )
    x1 = alg.x(1)
    if x1 not in table:
        raise ValueError("table candidate needs an entry for x1")
    r_img = table[x1]
    if any(r_img.involves(i) for i in range(2, alg.n + 1)):
        return CentralityVerdict("not-central", f"mu(x1) = {r_img} is not a polynomial in x1 alone")
    deg = int(max(r_img.degree, 0))
    coeffs = tuple(r_img.coefficient(alg.word_monomial((0,) * k)) for k in range(deg + 1))
    r = UnaryPolynomial(coeffs)
    for x in alg.gens():
        if x in table and table[x] != r(x):
            return CentralityVerdict("not-central", f"mu({x}) = {table[x]} != r({x}) = {r(x)}")
    return _unary_verdict(r, alg)


# -- bases --------------------------------------------------------------------


def base_image_witness(mu: CanonicalQuasiInner, base: TameAutomorphism) -> TameAutomorphism:
    """A tame automorphism whose generator images are ``mu(base(x_i))``.

    ``l o a o phi o beta^e o psi`` sends ``x_i`` to
    ``((phi o psi^(beta^e))^a o A)(x_i)`` where ``A(x_i) = c x_i + d``.
    """
    alg = mu.alg
    psi = mirror_twist(base) if mu.mirror else base
    chi = twist_by_field_automorphism(mu.phi @ psi, mu.alpha)
    n = alg.n
    c, d = mu.linear.c, mu.linear.d
    scaling = Affine.build(alg, [[c if i == j else 0 for j in range(n)] for i in range(n)], [d] * n)
    return TameAutomorphism(alg, chi.word + (scaling,))


def base_image_check(mu: CanonicalQuasiInner, base: TameAutomorphism) -> bool:
    """Whether ``mu`` maps the base ``base(x_1), ..., base(x_n)`` to a base."""
    if base.alg != mu.alg:
        raise FieldMismatchError("base and bijection live in different algebras")
    images = [mu(u) for u in as_endomorphism(base).images]
    w = base_image_witness(mu, base)
    if list(as_endomorphism(w).images) != images:
        return False
    back = as_endomorphism(invert(w))
    return [apply(back, img) for img in images] == mu.alg.gens()


# -- text form ----------------------------------------------------------------


def parse_primitive(text: str, alg: Algebra) -> list[Primitive]:
    from .parsing import ParseError, parse_scalar

    t = text.strip()
    if t.startswith("linear(") and t.endswith(")"):
        parts = _split_top(t[len("linear(") : -1], ",")
        if len(parts) != 2:
            raise ParseError("linear(c,d) takes two scalars", text, 0)
        return [Linear(parse_scalar(parts[0], alg.field), parse_scalar(parts[1], alg.field))]
    if t.startswith("alpha(") and t.endswith(")"):
        name = t[len("alpha(") : -1].strip()
        try:
            return [FieldSemilinear(FieldAutomorphism(name))]
        except ValueError as exc:
            raise ParseError(f"unknown field automorphism {name!r}", text, 0) from exc
    if t.startswith("auto[") and t.endswith("]"):
        return [AlgebraAuto(parse_tame_word(t[len("auto[") : -1], alg))]
    if t in ("mirror", "mirror^1"):
        return [Mirror()]
    if t == "mirror^0":
        return []
    raise ParseError(f"unknown primitive {t!r}", text, 0)


def parse_bijection_word(text: str, alg: Algebra) -> BijectionWord:
    """Parse primitives joined by ``.``, e.g. ``linear(2,1) . alpha(conj) . mirror``."""
    t = text.strip()
    if t in ("", "id"):
        return BijectionWord(alg, ())
    prims: list[Primitive] = []
    for part in _split_top(t, "."):
        prims.extend(parse_primitive(part, alg))
    return BijectionWord(alg, prims)
