"""Round-trips, structure diffs and whole-family verification."""

from __future__ import annotations

import pytest

from hyperkit import (
    Carrier,
    LMosaic,
    diff_bjoin,
    diff_lmosaic,
    elem_set,
    hyper_assoc_witness,
    nakano,
    relabel_bjoin,
    roundtrip_bjoin,
    roundtrip_lmosaic,
    set_mul,
    verify_family,
)
from .conftest import make_chain, make_diamond, make_pentagon


def test_roundtrip_bjoin_is_identical():
    for s in (make_chain(1), make_chain(3), make_diamond(), make_pentagon()):
        diff = roundtrip_bjoin(s)
        assert diff.kind == "identical"
        assert diff.details == ()
        assert str(diff) == "identical"


def test_roundtrip_lmosaic_is_identical():
    for s in (make_chain(2), make_diamond(), make_pentagon()):
        assert roundtrip_lmosaic(nakano(s)).kind == "identical"


def test_diff_reports_cell_sites():
    a = make_chain(2)
    b = relabel_bjoin(make_chain(2), (1, 0))
    diff = diff_bjoin(a, b)
    assert diff.kind == "differs"
    sites = [d.site for d in diff.details]
    assert sites == [("bot",), ("cell", 0, 1), ("cell", 1, 0)]
    d0 = next(d for d in diff.details if d.site == ("cell", 0, 1))
    assert (d0.expected, d0.actual) == (1, 0)
    assert "expected" in str(diff)


def test_diff_lmosaic_reports_masks_as_tuples():
    m1 = nakano(make_chain(2))
    table = list(list(row) for row in m1.hyp)
    table[1][1] = elem_set((1,))
    m2 = LMosaic(Carrier(2), tuple(tuple(r) for r in table), 0, (0, 1))
    diff = diff_lmosaic(m1, m2)
    assert [d.site for d in diff.details] == [("cell", 1, 1)]
    assert diff.details[0].expected == (0, 1)
    assert diff.details[0].actual == (1,)
    rho_diff = diff_lmosaic(m1, LMosaic(Carrier(2), m1.hyp, 0, (1, 0)))
    assert [d.site for d in rho_diff.details] == [("rho", 0), ("rho", 1)]


def test_diff_json_shape():
    a = make_chain(2)
    b = relabel_bjoin(make_chain(2), (1, 0))
    doc = diff_bjoin(a, b).to_json_dict()
    assert doc["kind"] == "differs"
    assert all(set(d) == {"site", "expected", "actual"} for d in doc["details"])
    assert diff_bjoin(a, a).to_json_dict() == {"kind": "identical", "details": []}


def test_size_mismatch_is_rejected():
    with pytest.raises(ValueError):
        diff_bjoin(make_chain(2), make_chain(3))
    with pytest.raises(ValueError):
        diff_lmosaic(nakano(make_chain(2)), nakano(make_chain(3)))


def test_derived_hyperoperation_calls_associative_at_small_sizes():
    for s in (make_chain(1), make_chain(2), make_chain(4), make_diamond()):
        assert hyper_assoc_witness(nakano(s)) is None


def test_pentagon_breaks_derived_associativity():
    m = nakano(make_pentagon())
    witness = hyper_assoc_witness(m)
    assert witness == (1, 2, 2)
    x, y, z = witness
    left = set_mul(m, m.hyper(x, y), elem_set((z,)))
    right = set_mul(m, elem_set((x,)), m.hyper(y, z))
    assert left != right
    # nothing lexicographically earlier distinguishes the two sides
    for a in range(m.n):
        for b in range(m.n):
            for c in range(m.n):
                if (a, b, c) == witness:
                    return
                assert set_mul(m, m.hyper(a, b), elem_set((c,))) == set_mul(
                    m, elem_set((a,)), m.hyper(b, c)
                )


def test_verify_family_small_sizes():
    for n in (1, 2, 3):
        summary = verify_family(n)
        assert summary.ok, str(summary)
        assert summary.bjoin_count == 1
        assert summary.lmosaic_count == 1
        assert summary.counts_match and summary.bijection_ok
        assert summary.failures == ()


def test_verify_family_four():
    summary = verify_family(4)
    assert summary.ok, str(summary)
    assert summary.bjoin_count == 2
    assert summary.lmosaic_count == 2
    kinds = {(r.kind, r.index) for r in summary.rows}
    assert ("bjoin", 0) in kinds and ("lmosaic", 1) in kinds
    assert all(r.axioms_ok and r.roundtrip_ok for r in summary.rows)
    doc = summary.to_json_dict()
    assert doc["ok"] is True
    assert doc["bjoin_count"] == 2
    assert len(doc["rows"]) == 4


def test_verify_family_beyond_mosaic_bound():
    summary = verify_family(5)
    assert summary.ok, str(summary)
    assert summary.bjoin_count == 5
    assert summary.lmosaic_count is None
    assert summary.counts_match is None
    assert summary.bijection_ok is None
    assert "skipped" in str(summary)
