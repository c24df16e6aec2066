"""Necessity search: drop one axiom and exhibit what breaks downstream.

For a dropped axiom the search looks for a structure that fails exactly
that axiom while passing every other check, then evaluates which derived
properties (order axioms, join extraction, least-upper-bound laws, the
round-trip identity) no longer hold on it, each with a replayable witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .axioms import check_bjoin, check_lmosaic
from .core import BJoinSemilattice, LMosaic
from .enumeration import (
    SEARCH_AXIOMS,
    CanonicalForm,
    _canonicalize,
    lmosaic_bound,
    search_lmosaics,
)
from .equivalence import diff_lmosaic
from .extraction import (
    JoinWitnessError,
    MultipleWitnesses,
    check_partial_order,
    extract_join,
    induced_order,
    lub_properties,
)
from .nakano import nakano

#: Axioms that may be dropped, in reporting order.
ABLATABLE_AXIOMS = (
    "comm", "lm1_e", "lm1_id", "lm2", "lm3", "lm4", "reversibility",
)


@dataclass(frozen=True)
class BrokenProperty:
    """A derived property that fails on the ablated structure."""

    name: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.name}: witness={self.witness}"


@dataclass(frozen=True)
class AblationResult:
    """A structure violating exactly one axiom, with the damage report."""

    dropped: str
    structure: LMosaic
    broken: Tuple[BrokenProperty, ...]

    def broken_names(self) -> Tuple[str, ...]:
        return tuple(b.name for b in self.broken)


def _qualifies(m: LMosaic, dropped: str) -> bool:
    report = check_lmosaic(m)
    for verdict in report.verdicts:
        if verdict.axiom == dropped:
            if verdict.passed:
                return False
        elif not verdict.passed:
            return False
    return True


def _broken_properties(m: LMosaic) -> Tuple[BrokenProperty, ...]:
    broken: List[BrokenProperty] = []
    order = induced_order(m)
    order_report = check_partial_order(order)
    names = {
        "reflexive": "order_reflexivity",
        "antisymmetric": "order_antisymmetry",
        "transitive": "order_transitivity",
    }
    for verdict in order_report.verdicts:
        if not verdict.passed:
            broken.append(BrokenProperty(names[verdict.axiom], verdict.witness))

    table: List[List[int]] = [[0] * m.n for _ in range(m.n)]
    defined = True
    for x in range(m.n):
        for y in range(m.n):
            try:
                table[x][y] = extract_join(m, x, y)
            except MultipleWitnesses as exc:
                broken.append(
                    BrokenProperty("extract_join_definedness",
                                   (exc.x, exc.y, exc.witnesses))
                )
                defined = False
                break
            except JoinWitnessError as exc:
                broken.append(
                    BrokenProperty("extract_join_definedness", (exc.x, exc.y, ()))
                )
                defined = False
                break
        if not defined:
            break
    if not defined:
        return tuple(broken)

    lub_report = lub_properties(m)
    lub_names = {
        "ub_left": "lub_ub_left",
        "ub_right": "lub_ub_right",
        "least": "lub_leastness",
    }
    for verdict in lub_report.verdicts:
        if not verdict.passed:
            broken.append(BrokenProperty(lub_names[verdict.axiom], verdict.witness))

    extracted = BJoinSemilattice(m.carrier,
                                 tuple(tuple(row) for row in table), m.e)
    join_report = check_bjoin(extracted)
    if not join_report.ok:
        first = join_report.failures()[0]
        broken.append(
            BrokenProperty("roundtrip_identity",
                           ("extracted join fails", first.axiom) + first.witness)
        )
    else:
        diff = diff_lmosaic(m, nakano(extracted))
        if diff.kind != "identical":
            first = diff.details[0]
            broken.append(
                BrokenProperty("roundtrip_identity",
                               first.site + (first.expected, first.actual))
            )
    return tuple(broken)


def _result_for(m: LMosaic, dropped: str) -> AblationResult:
    result = AblationResult(dropped, m, _broken_properties(m))
    if dropped == "lm4":
        expected = {"extract_join_definedness", "lub_leastness"}
        if not expected & set(result.broken_names()):
            raise RuntimeError(
                "dropping lm4 yielded a structure where join extraction "
                "still behaves; this contradicts the uniqueness analysis"
            )
    return result


def _candidates(n: int, dropped: str):
    if dropped not in ABLATABLE_AXIOMS:
        raise ValueError(
            f"unknown axiom {dropped!r}; choose one of {', '.join(ABLATABLE_AXIOMS)}"
        )
    bound = lmosaic_bound()
    if not 1 <= n <= bound:
        raise ValueError(f"size must be in 1..{bound}, got {n}")
    enforced = SEARCH_AXIOMS - {dropped}
    for m in search_lmosaics(n, enforced=enforced):
        if _qualifies(m, dropped):
            yield m


def ablate(n: int, dropped: str) -> Optional[AblationResult]:
    """First structure of size n failing exactly the dropped axiom, or None.

    The search order is fixed, so the returned structure is deterministic.
    """
    for m in _candidates(n, dropped):
        return _result_for(m, dropped)
    return None


def ablate_all(n: int, dropped: str) -> Tuple[AblationResult, ...]:
    """Every qualifying structure of size n up to isomorphism."""
    reps: Dict[CanonicalForm, LMosaic] = {}
    for m in _candidates(n, dropped):
        form, canon = _canonicalize(m)
        reps.setdefault(form, canon)
    return tuple(
        _result_for(reps[form], dropped) for form in sorted(reps)
    )
