"""Axiom checkers: verdict order, witness correctness, replayability."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperkit import (
    BJoinSemilattice,
    Carrier,
    LMosaic,
    Verdict,
    check_bjoin,
    check_lmosaic,
    check_mosaic,
    full_set,
    nakano,
)
from hyperkit.axioms import (
    comm_at,
    lm1_e_at,
    lm1_id_at,
    lm2_at,
    lm3_at,
    lm4_witnesses,
    neutral_at,
    reversible_at,
)
from .conftest import make_chain, make_diamond, make_full_mosaic

BJOIN_VERDICTS = ("closed", "assoc", "comm", "idem", "bot_in", "bot_left", "bot_right")
MOSAIC_VERDICTS = ("nonempty", "neutrality", "reversibility")
LMOSAIC_VERDICTS = MOSAIC_VERDICTS + ("comm", "lm1_e", "lm1_id", "lm2", "lm3", "lm4")


def test_verdict_requires_witness_iff_failed():
    Verdict("assoc", True)
    Verdict("assoc", False, (0, 0, 0))
    with pytest.raises(ValueError):
        Verdict("assoc", True, (0,))
    with pytest.raises(ValueError):
        Verdict("assoc", False)


def test_bjoin_verdict_names_are_stable(chain2):
    report = check_bjoin(chain2)
    assert tuple(v.axiom for v in report.verdicts) == BJOIN_VERDICTS
    assert report.ok
    assert report.failures() == ()
    assert str(report.verdict("assoc")) == "assoc: pass"


def test_lmosaic_verdict_names_are_stable(chain2):
    report = check_lmosaic(nakano(chain2))
    assert tuple(v.axiom for v in report.verdicts) == LMOSAIC_VERDICTS
    assert report.ok
    mosaic = check_mosaic(nakano(chain2))
    assert tuple(v.axiom for v in mosaic.verdicts) == MOSAIC_VERDICTS


def test_idempotence_failure_witness():
    s = BJoinSemilattice(Carrier(2), ((0, 1), (1, 0)), 0)
    v = check_bjoin(s).verdict("idem")
    assert not v.passed and v.witness == (1,)


def test_commutativity_failure_witness():
    # left projection on {1, 2}, patched to keep 0 neutral
    s = BJoinSemilattice(Carrier(3), ((0, 1, 2), (1, 1, 1), (2, 2, 2)), 0)
    v = check_bjoin(s).verdict("comm")
    assert not v.passed and v.witness == (1, 2)


def test_bottom_failure_witness():
    s = BJoinSemilattice(Carrier(2), ((1, 1), (1, 1)), 0)
    report = check_bjoin(s)
    assert report.verdict("bot_left").witness == (0,)
    assert report.verdict("bot_right").witness == (0,)


def test_assoc_failure_witness_is_lex_first_and_replays():
    # x v y = max except 1 v 1 = 2 patched to break associativity cleanly
    s = BJoinSemilattice(Carrier(3), ((0, 1, 2), (1, 2, 2), (2, 2, 1)), 0)
    v = check_bjoin(s).verdict("assoc")
    assert not v.passed
    x, y, z = v.witness
    j = s.join
    assert j[j[x][y]][z] != j[x][j[y][z]]
    # nothing lexicographically earlier fails
    for a in range(3):
        for b in range(3):
            for c in range(3):
                if (a, b, c) == (x, y, z):
                    return
                assert j[j[a][b]][c] == j[a][j[b][c]]


def test_nakano_mosaics_pass_everything():
    for s in (make_chain(1), make_chain(4), make_diamond()):
        m = nakano(s)
        assert check_mosaic(m).ok
        assert check_mosaic(m, strict_neutral=True).ok
        assert check_lmosaic(m).ok
        assert check_lmosaic(m, strict_neutral=True).ok


def test_full_mosaic_fails_exactly_lm4(full2):
    report = check_lmosaic(full2)
    failed = [v.axiom for v in report.failures()]
    assert failed == ["lm4"]
    assert report.verdict("lm4").witness == (0, 0, (0, 1))


def test_full_mosaic_strict_neutrality_fails(full2):
    report = check_lmosaic(full2, strict_neutral=True)
    v = report.verdict("neutrality")
    assert not v.passed and v.witness == (0,)
    assert check_lmosaic(full2).verdict("neutrality").passed


def test_reversibility_failure_witness():
    # 1 in 0(+)0 but 0 not in 1(+)rho(0) = 1(+)0
    table = ((0b11, 0b10), (0b10, 0b11))
    m = LMosaic(Carrier(2), table, 0, (0, 1))
    v = check_mosaic(m).verdict("reversibility")
    assert not v.passed
    assert v.witness == (0, 0, 1)
    assert not reversible_at(m, 0, 0, 1)


def test_one_point_structures_pass():
    assert check_bjoin(make_chain(1)).ok
    assert check_lmosaic(nakano(make_chain(1))).ok
    assert check_lmosaic(make_full_mosaic(1)).ok


def test_report_json_shape(full2):
    doc = check_lmosaic(full2).to_json_dict()
    assert doc["ok"] is False
    by_axiom = {v["axiom"]: v for v in doc["verdicts"]}
    assert by_axiom["lm4"]["pass"] is False
    assert by_axiom["lm4"]["witness"] == [0, 0, [0, 1]]
    assert by_axiom["comm"]["witness"] is None


@st.composite
def random_mosaics(draw):
    n = draw(st.integers(1, 3))
    cells = st.integers(1, full_set(n))
    table = tuple(tuple(draw(cells) for _ in range(n)) for _ in range(n))
    return LMosaic(Carrier(n), table, 0, tuple(range(n)))


@given(random_mosaics())
def test_every_failed_verdict_replays(m):
    """The recorded witness must falsify the named axiom when re-evaluated."""
    report = check_lmosaic(m)
    for v in report.failures():
        if v.axiom == "neutrality":
            (x,) = v.witness
            assert not neutral_at(m, x, strict=False)
        elif v.axiom == "reversibility":
            assert not reversible_at(m, *v.witness)
        elif v.axiom == "comm":
            assert not comm_at(m, *v.witness)
        elif v.axiom == "lm1_e":
            assert not lm1_e_at(m, *v.witness)
        elif v.axiom == "lm1_id":
            assert not lm1_id_at(m, *v.witness)
        elif v.axiom == "lm2":
            assert not lm2_at(m, *v.witness)
        elif v.axiom == "lm3":
            assert not lm3_at(m, *v.witness)
        elif v.axiom == "lm4":
            x, y, zs = v.witness
            ws = lm4_witnesses(m, x, y)
            assert ws == zs and len(ws) != 1
        else:
            raise AssertionError(f"unexpected failing axiom {v.axiom}")


@given(random_mosaics())
def test_witnesses_are_lex_first(m):
    """Scanning order: for pair-indexed axioms nothing earlier may fail."""
    report = check_lmosaic(m)
    v = report.verdict("comm")
    if not v.passed:
        wx, wy = v.witness
        for x in range(m.n):
            for y in range(m.n):
                if (x, y) >= (wx, wy):
                    break
                assert comm_at(m, x, y)
    v = report.verdict("lm4")
    if not v.passed:
        wx, wy = v.witness[0], v.witness[1]
        for x in range(m.n):
            for y in range(m.n):
                if (x, y) >= (wx, wy):
                    break
                assert len(lm4_witnesses(m, x, y)) == 1
