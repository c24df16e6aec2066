"""The semilattice-to-mosaic construction."""

from __future__ import annotations

import pytest

from hyperkit import (
    AxiomError,
    BJoinSemilattice,
    Carrier,
    check_lmosaic,
    contains,
    elem_set,
    members,
    nakano,
)
from .conftest import make_chain, make_diamond, make_pentagon


def test_two_chain_table_exactly():
    m = nakano(make_chain(2))
    assert m.e == 0
    assert m.rho == (0, 1)
    assert m.hyp == (
        (elem_set((0,)), elem_set((1,))),
        (elem_set((1,)), elem_set((0, 1))),
    )


def test_diamond_cells():
    m = nakano(make_diamond())
    bot, a, b, top = range(4)
    assert members(m.hyper(a, b)) == (top,)
    assert members(m.hyper(a, a)) == (bot, a)
    assert members(m.hyper(top, top)) == (bot, a, b, top)
    assert members(m.hyper(bot, bot)) == (bot,)
    assert m.carrier.labels == ("bot", "a", "b", "top")


def test_diagonal_is_the_down_set():
    for s in (make_chain(1), make_chain(4), make_diamond(), make_pentagon()):
        m = nakano(s)
        for x in range(s.n):
            down = elem_set(z for z in range(s.n) if s.join[z][x] == x)
            assert m.hyper(x, x) == down


def test_join_is_always_a_member():
    for s in (make_chain(3), make_diamond(), make_pentagon()):
        m = nakano(s)
        for x in range(s.n):
            for y in range(s.n):
                assert contains(m.hyper(x, y), s.join[x][y])


def test_membership_matches_definition():
    s = make_pentagon()
    m = nakano(s)
    j = s.join
    for x in range(s.n):
        for y in range(s.n):
            for z in range(s.n):
                in_cell = j[x][y] == j[x][z] == j[z][y]
                assert contains(m.hyper(x, y), z) == in_cell


def test_every_derived_mosaic_is_an_lmosaic():
    for s in (make_chain(1), make_chain(5), make_diamond(), make_pentagon()):
        report = check_lmosaic(nakano(s))
        assert report.ok, str(report)


def test_refuses_non_semilattices():
    bad = BJoinSemilattice(Carrier(2), ((0, 1), (1, 0)), 0)
    with pytest.raises(AxiomError) as exc_info:
        nakano(bad)
    assert not exc_info.value.report.ok
    assert not exc_info.value.report.verdict("idem").passed
