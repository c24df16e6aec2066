"""Shared structure fixtures: chains, the diamond, the pentagon, and the
size-2 mosaic whose every cell is the whole carrier."""

from __future__ import annotations

import pytest

from hyperkit import BJoinSemilattice, Carrier, LMosaic, full_set


def make_chain(n: int) -> BJoinSemilattice:
    """Total order 0 < 1 < ... < n-1 with join = max."""
    table = tuple(tuple(max(x, y) for y in range(n)) for x in range(n))
    return BJoinSemilattice(Carrier(n), table, 0)


def make_diamond() -> BJoinSemilattice:
    """bot < a, b < top with a and b incomparable."""
    table = (
        (0, 1, 2, 3),
        (1, 1, 3, 3),
        (2, 3, 2, 3),
        (3, 3, 3, 3),
    )
    return BJoinSemilattice(Carrier(4, ("bot", "a", "b", "top")), table, 0)


def make_pentagon() -> BJoinSemilattice:
    """bot < a < c < top and bot < b < top with b incomparable to a, c."""
    table = (
        (0, 1, 2, 3, 4),
        (1, 1, 4, 3, 4),
        (2, 4, 2, 4, 4),
        (3, 3, 4, 3, 4),
        (4, 4, 4, 4, 4),
    )
    return BJoinSemilattice(Carrier(5), table, 0)


def make_full_mosaic(n: int) -> LMosaic:
    """Every cell is the whole carrier; identity reversibility map."""
    cell = full_set(n)
    table = tuple(tuple(cell for _ in range(n)) for _ in range(n))
    return LMosaic(Carrier(n), table, 0, tuple(range(n)))


@pytest.fixture
def chain2() -> BJoinSemilattice:
    return make_chain(2)


@pytest.fixture
def chain3() -> BJoinSemilattice:
    return make_chain(3)


@pytest.fixture
def diamond() -> BJoinSemilattice:
    return make_diamond()


@pytest.fixture
def pentagon() -> BJoinSemilattice:
    return make_pentagon()


@pytest.fixture
def full2() -> LMosaic:
    return make_full_mosaic(2)
