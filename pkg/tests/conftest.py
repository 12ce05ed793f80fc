from __future__ import annotations

import pytest

from genring import LocalizedInt, Quotient, ZMod, parse_ring


@pytest.fixture
def z4():
    return ZMod(2, 2)


@pytest.fixture
def z8():
    return ZMod(2, 3)


@pytest.fixture
def z9():
    return ZMod(3, 2)


@pytest.fixture
def f3():
    return ZMod(3, 1)


@pytest.fixture
def zloc2():
    return LocalizedInt(2)


@pytest.fixture
def f2t2():
    return Quotient(ZMod(2, 1), 2)


def small_finite_rings():
    """Every finite ring with at most 9 elements that the suite sweeps."""
    return [
        parse_ring("Z/2"),
        parse_ring("Z/4"),
        parse_ring("Z/8"),
        parse_ring("F3"),
        parse_ring("Z/9"),
        parse_ring("Z/2[t]/t^2"),
        parse_ring("Z/2[t]/t^3"),
        parse_ring("F3[t]/t^2"),
    ]
