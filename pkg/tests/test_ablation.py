"""Dropping one axiom at a time and checking what breaks downstream."""

from __future__ import annotations

import pytest

from hyperkit import ABLATABLE_AXIOMS, ablate, ablate_all, check_lmosaic
from .conftest import make_full_mosaic


def test_ablate_lm4_at_two_finds_the_full_structure():
    result = ablate(2, "lm4")
    assert result is not None
    assert result.dropped == "lm4"
    assert result.structure == make_full_mosaic(2)
    assert result.broken_names() == (
        "order_antisymmetry", "extract_join_definedness",
    )
    antisym, definedness = result.broken
    assert antisym.witness == (0, 1)
    assert definedness.witness == (0, 0, (0, 1))


def test_ablate_is_deterministic():
    a = ablate(2, "lm4")
    b = ablate(2, "lm4")
    assert a.structure == b.structure
    assert a.broken == b.broken


def test_ablate_one_point_carrier_has_no_violators():
    for axiom in ABLATABLE_AXIOMS:
        assert ablate(1, axiom) is None


# smallest size at which some structure fails exactly this axiom, within
# the default bound; None means every candidate also breaks something else.
# lm1_e and lm1_id can never fail alone: the neutral element's diagonal
# membership follows from weak neutrality plus reversibility, and an
# element's own diagonal membership from lm2 plus lm4.
SEPARABILITY = {
    "comm": None,
    "lm1_e": None,
    "lm1_id": None,
    "lm2": 4,
    "lm3": None,
    "lm4": 2,
    "reversibility": 2,
}


@pytest.mark.parametrize("axiom", ABLATABLE_AXIOMS)
def test_separability_table_is_pinned(axiom):
    smallest = None
    for n in (2, 3, 4):
        if ablate(n, axiom) is not None:
            smallest = n
            break
    assert smallest == SEPARABILITY[axiom]


@pytest.mark.parametrize(
    "axiom", [a for a, n in SEPARABILITY.items() if n is not None]
)
def test_ablated_structures_fail_exactly_the_dropped_axiom(axiom):
    result = ablate(SEPARABILITY[axiom], axiom)
    report = check_lmosaic(result.structure)
    failed = [v.axiom for v in report.failures()]
    assert failed == [axiom]


def test_broken_witnesses_replay():
    result = ablate(4, "lm2")
    assert result is not None
    report = check_lmosaic(result.structure)
    assert not report.verdict("lm2").passed
    for broken in result.broken:
        assert broken.witness is not None


def test_ablate_all_returns_sorted_distinct_classes():
    results = ablate_all(2, "lm4")
    assert len(results) >= 1
    structures = [r.structure for r in results]
    assert any(s == make_full_mosaic(2) for s in structures)
    from hyperkit import canonical_form

    forms = [canonical_form(s) for s in structures]
    assert sorted(forms) == forms
    assert len(set(forms)) == len(forms)
    for r in results:
        failed = [v.axiom for v in check_lmosaic(r.structure).failures()]
        assert failed == ["lm4"]


def test_unknown_axiom_is_rejected():
    with pytest.raises(ValueError, match="unknown axiom"):
        ablate(2, "assoc")
    with pytest.raises(ValueError):
        ablate(9, "lm4")


def test_ablate_reversibility_golden():
    from hyperkit import elem_set

    result = ablate(2, "reversibility")
    assert result is not None
    assert result.structure.hyp == (
        (elem_set((0,)), elem_set((0, 1))),
        (elem_set((0, 1)), elem_set((0, 1))),
    )
    assert result.broken_names() == ("roundtrip_identity",)
