"""Covering relation, DOT emission and image rendering."""

from __future__ import annotations

from pathlib import Path

import pytest

from hyperkit import (
    AxiomError,
    BJoinSemilattice,
    Carrier,
    covering_edges,
    emit_hasse,
    nakano,
    order_relation,
    render_hasse,
)
from .conftest import make_chain, make_diamond, make_full_mosaic, make_pentagon

DATA = Path(__file__).parent / "data"


def test_order_relation_of_chain():
    leq = order_relation(make_chain(3))
    assert leq == (
        (True, True, True),
        (False, True, True),
        (False, False, True),
    )


def test_covering_edges():
    assert covering_edges(order_relation(make_chain(1))) == ()
    assert covering_edges(order_relation(make_chain(2))) == ((0, 1),)
    assert covering_edges(order_relation(make_chain(3))) == ((0, 1), (1, 2))
    diamond_edges = covering_edges(order_relation(make_diamond()))
    assert diamond_edges == ((0, 1), (0, 2), (1, 3), (2, 3))
    pentagon_edges = covering_edges(order_relation(make_pentagon()))
    assert pentagon_edges == ((0, 1), (0, 2), (1, 3), (2, 4), (3, 4))


def test_diamond_dot_matches_golden():
    golden = (DATA / "diamond.dot").read_text(encoding="utf-8")
    assert emit_hasse(make_diamond()) == golden
    assert golden.count("->") == 4


def test_mosaic_diagram_equals_semilattice_diagram():
    diamond = make_diamond()
    assert covering_edges(order_relation(nakano(diamond))) == covering_edges(
        order_relation(diamond)
    )


def test_unlabeled_nodes_use_indices():
    dot = emit_hasse(make_chain(2))
    assert 'n0 [label="0"];' in dot
    assert "n0 -> n1;" in dot


def test_label_escaping():
    s = BJoinSemilattice(
        Carrier(2, ('say "hi"', "back\\slash")), ((0, 1), (1, 1)), 0
    )
    dot = emit_hasse(s)
    assert 'label="say \\"hi\\""' in dot
    assert 'label="back\\\\slash"' in dot


def test_emission_refuses_invalid_structures(full2):
    bad = BJoinSemilattice(Carrier(2), ((0, 1), (1, 0)), 0)
    with pytest.raises(AxiomError):
        emit_hasse(bad)
    with pytest.raises(AxiomError):
        emit_hasse(full2)
    with pytest.raises(AxiomError):
        render_hasse(full2, "/tmp/never-written.png")


def test_render_writes_an_image(tmp_path):
    out = tmp_path / "diamond.png"
    render_hasse(make_diamond(), out)
    assert out.stat().st_size > 0
    out2 = tmp_path / "point.png"
    render_hasse(make_chain(1), out2)
    assert out2.stat().st_size > 0
