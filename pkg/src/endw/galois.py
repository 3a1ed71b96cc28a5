"""Ideals versus sets of endomorphisms, on finitely checkable instances.

For a set ``T`` of elements, ``T'`` is the set of endomorphisms killing ``T``;
for a set ``A`` of endomorphisms, ``A'`` is the intersection of their kernels.
Both are infinite, so only membership tests and finite samples are exposed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .autos import BasicElementWitness, TameAutomorphism, as_endomorphism, basic_element, invert
from .endo import Endomorphism, apply, compose
from .freealg import Algebra, Element, substitute
from .scalars import FieldMismatchError

__all__ = [
    "PrincipalBasicIdeal",
    "in_prime_set",
    "in_double_prime",
    "sample_ideal",
    "killing_endomorphism",
    "random_prime_member",
]


@dataclass(frozen=True)
class PrincipalBasicIdeal:
    """The ideal generated by a basic element (two-sided in the associative kind)."""

    witness: BasicElementWitness

    @property
    def alg(self) -> Algebra:
        return self.witness.alg

    @property
    def generator(self) -> Element:
        return basic_element(self.witness)

    @classmethod
    def of(cls, phi: TameAutomorphism, index: int) -> PrincipalBasicIdeal:
        return cls(BasicElementWitness(phi, index))


def in_prime_set(generators: Sequence[Element], eta: Endomorphism) -> bool:
    """Whether ``eta`` kills every generator, hence the ideal they generate."""
    for g in generators:
        if g.alg != eta.alg:
            raise FieldMismatchError(f"element of {g.alg} tested against endomorphism of {eta.alg}")
    return all(apply(eta, g).is_zero() for g in generators)


def pullback(f: Element, ideal: PrincipalBasicIdeal) -> Element:
    """``f`` written in the coordinates of the witness base: ``phi^-1(f)``."""
    return apply(as_endomorphism(invert(ideal.witness.phi)), f)


def in_double_prime(f: Element, ideal: PrincipalBasicIdeal) -> bool:
    """Membership of ``f`` in ``<u>`` (equivalently in ``<u>''``) for basic ``u = phi(x_i)``.

    Writing ``f = F(phi(x_1), ..., phi(x_n))``, ``f`` lies in ``<u>`` exactly
    when ``F`` vanishes after ``x_i -> 0``.
    """
    if f.alg != ideal.alg:
        raise FieldMismatchError(f"element of {f.alg} tested against ideal in {ideal.alg}")
    F = pullback(f, ideal)
    alg = f.alg
    i = ideal.witness.index
    images = [alg.zero() if j == i else alg.x(j) for j in range(1, alg.n + 1)]
    return substitute(F, images).is_zero()


def sample_ideal(sample: Sequence[Endomorphism], f: Element) -> bool:
    """Whether every endomorphism in ``sample`` kills ``f``."""
    return all(apply(eta, f).is_zero() for eta in sample)


def killing_endomorphism(ideal: PrincipalBasicIdeal) -> Endomorphism:
    """``eta`` with ``eta(u_i) = 0`` and ``eta(u_j) = u_j`` on the witness base."""
    w = ideal.witness
    alg = w.alg
    phi = as_endomorphism(w.phi)
    phi_inv = as_endomorphism(invert(w.phi))
    kill = Endomorphism(alg, [alg.zero() if j == w.index else alg.x(j) for j in range(1, alg.n + 1)])
    return compose(phi, compose(kill, phi_inv))


def random_prime_member(rng: random.Random, ideal: PrincipalBasicIdeal, max_degree: int = 2, max_terms: int = 2) -> Endomorphism:
    """A random endomorphism killing the basic generator: ``zeta o eta``."""
    from .sampling import random_endomorphism

    zeta = random_endomorphism(rng, ideal.alg, max_degree, max_terms)
    return compose(zeta, killing_endomorphism(ideal))
