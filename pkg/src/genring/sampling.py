"""Seeded random elements and matrices, reproducible across runs.

Finite rings are sampled uniformly through their canonical enumeration;
localizations are sampled as bounded-height fractions with denominator
coprime to p. Everything is driven by a caller-supplied ``random.Random``
so identical seeds give identical reports.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .genmat import GenMatrix
from .localring import LocalizedInt, Quotient, Ring, RingElement


def random_element(ring: Ring, rng: Random, height: int = 20) -> RingElement:
    if isinstance(ring, LocalizedInt):
        num = rng.randint(-height, height)
        den = rng.randint(1, height)
        while den % ring.p == 0:
            den = rng.randint(1, height)
        return ring.element(Fraction(num, den))
    if isinstance(ring, Quotient):
        return ring.element([random_element(ring.base, rng, height) for _ in range(ring.n)])
    card = ring.cardinality()
    return ring.from_int(rng.randrange(card))


def random_unit(ring: Ring, rng: Random, height: int = 20) -> RingElement:
    while True:
        a = random_element(ring, rng, height)
        if a.is_unit():
            return a


def random_jacobson(ring: Ring, rng: Random, height: int = 20) -> RingElement:
    """A random non-unit (rejection sampling; non-units have density >= 1/p)."""
    while True:
        a = random_element(ring, rng, height)
        if a.in_jacobson():
            return a


def random_matrix(ring: Ring, s: RingElement, rng: Random, height: int = 20) -> GenMatrix:
    return GenMatrix(
        random_element(ring, rng, height),
        random_element(ring, rng, height),
        random_element(ring, rng, height),
        random_element(ring, rng, height),
        s,
    )
