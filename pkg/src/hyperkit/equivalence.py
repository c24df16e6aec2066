"""Mutual-inverse checks between the two structure views.

The two constructions should be inverse bijections on isomorphism classes:
building the hyperoperation from a join table and then extracting the join
must reproduce the table cell for cell, and vice versa. verify_family runs
the whole story at one size and reports every discrepancy rather than
stopping at the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from .axioms import AxiomError, check_bjoin, check_lmosaic
from .core import BJoinSemilattice, LMosaic, elem_set, members, set_mul
from .enumeration import (
    canonical_form,
    enumerate_bjoin,
    enumerate_lmosaic,
    lmosaic_bound,
)
from .extraction import extract_bjoin
from .nakano import nakano


@dataclass(frozen=True)
class Diff:
    """One disagreement site: a table cell or a distinguished element."""

    site: tuple
    expected: object
    actual: object

    def __str__(self) -> str:
        where = ", ".join(str(part) for part in self.site)
        return f"({where}): expected {self.expected}, got {self.actual}"


@dataclass(frozen=True)
class StructureDiff:
    """Cell-level comparison of two same-size structures."""

    details: Tuple[Diff, ...]

    @property
    def kind(self) -> str:
        return "identical" if not self.details else "differs"

    def __str__(self) -> str:
        if not self.details:
            return "identical"
        lines = [f"differs at {len(self.details)} site(s):"]
        lines.extend(f"  {d}" for d in self.details)
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "details": [
                {
                    "site": list(d.site),
                    "expected": _jsonable(d.expected),
                    "actual": _jsonable(d.actual),
                }
                for d in self.details
            ],
        }


def _jsonable(value: object) -> object:
    if isinstance(value, tuple):
        return list(value)
    return value


def diff_bjoin(expected: BJoinSemilattice, actual: BJoinSemilattice) -> StructureDiff:
    """Cell-by-cell comparison under shared indexing."""
    if expected.n != actual.n:
        raise ValueError(f"size mismatch: {expected.n} vs {actual.n}")
    details: List[Diff] = []
    if expected.bot != actual.bot:
        details.append(Diff(("bot",), expected.bot, actual.bot))
    for x in range(expected.n):
        for y in range(expected.n):
            if expected.join[x][y] != actual.join[x][y]:
                details.append(
                    Diff(("cell", x, y), expected.join[x][y], actual.join[x][y])
                )
    return StructureDiff(tuple(details))


def diff_lmosaic(expected: LMosaic, actual: LMosaic) -> StructureDiff:
    """Cell-by-cell comparison under shared indexing; cells as index tuples."""
    if expected.n != actual.n:
        raise ValueError(f"size mismatch: {expected.n} vs {actual.n}")
    details: List[Diff] = []
    if expected.e != actual.e:
        details.append(Diff(("e",), expected.e, actual.e))
    for x in range(expected.n):
        if expected.rho[x] != actual.rho[x]:
            details.append(Diff(("rho", x), expected.rho[x], actual.rho[x]))
    for x in range(expected.n):
        for y in range(expected.n):
            if expected.hyp[x][y] != actual.hyp[x][y]:
                details.append(
                    Diff(
                        ("cell", x, y),
                        members(expected.hyp[x][y]),
                        members(actual.hyp[x][y]),
                    )
                )
    return StructureDiff(tuple(details))


def roundtrip_bjoin(s: BJoinSemilattice) -> StructureDiff:
    """Compare s against the join extracted from its derived hyperoperation."""
    return diff_bjoin(s, extract_bjoin(nakano(s)))


def roundtrip_lmosaic(m: LMosaic) -> StructureDiff:
    """Compare m against the hyperoperation derived from its extracted join."""
    return diff_lmosaic(m, nakano(extract_bjoin(m)))


def hyper_assoc_witness(m: LMosaic) -> Optional[Tuple[int, int, int]]:
    """First triple (x, y, z) where (x + y) + z != x + (y + z), or None.

    Both sides evaluate through the set-lifted product, scanning triples in
    lexicographic order.
    """
    for x in range(m.n):
        for y in range(m.n):
            xy = m.hyper(x, y)
            for z in range(m.n):
                left = set_mul(m, xy, elem_set((z,)))
                right = set_mul(m, elem_set((x,)), m.hyper(y, z))
                if left != right:
                    return (x, y, z)
    return None


@dataclass(frozen=True)
class FamilyRow:
    """Outcome for one enumerated structure inside a family summary."""

    kind: str
    index: int
    digest: str
    axioms_ok: bool
    roundtrip_ok: bool


@dataclass(frozen=True)
class FamilySummary:
    """Results of cross-checking every structure of one size."""

    size: int
    bjoin_count: int
    lmosaic_count: Optional[int]
    rows: Tuple[FamilyRow, ...]
    failures: Tuple[str, ...]
    counts_match: Optional[bool]
    bijection_ok: Optional[bool]

    @property
    def ok(self) -> bool:
        return (
            not self.failures
            and self.counts_match is not False
            and self.bijection_ok is not False
        )

    def __str__(self) -> str:
        lines = [
            f"size {self.size}: {self.bjoin_count} semilattice class(es)",
        ]
        if self.lmosaic_count is None:
            lines.append("mosaic enumeration skipped (size beyond bound)")
        else:
            lines.append(f"size {self.size}: {self.lmosaic_count} mosaic class(es)")
            lines.append(f"class counts match: {_yn(self.counts_match)}")
            lines.append(f"construction is a bijection: {_yn(self.bijection_ok)}")
        lines.append(f"failures: {len(self.failures)}")
        lines.extend(f"  {f}" for f in self.failures)
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "size": self.size,
            "bjoin_count": self.bjoin_count,
            "lmosaic_count": self.lmosaic_count,
            "counts_match": self.counts_match,
            "bijection_ok": self.bijection_ok,
            "ok": self.ok,
            "failures": list(self.failures),
            "rows": [
                {
                    "kind": r.kind,
                    "index": r.index,
                    "digest": r.digest,
                    "axioms_ok": r.axioms_ok,
                    "roundtrip_ok": r.roundtrip_ok,
                }
                for r in self.rows
            ],
        }


def _yn(flag: Optional[bool]) -> str:
    return "yes" if flag else "no"


def verify_family(n: int) -> FamilySummary:
    """Cross-check every structure of size n in both directions.

    For each enumerated semilattice: the derived hyperoperation satisfies
    every mosaic axiom and extracting the join gives back the original
    table. For
    each enumerated mosaic (when n is within the mosaic bound): the
    extracted join round-trips to the same hyperoperation, and the derived
    forms biject with the mosaic classes.
    """
    rows: List[FamilyRow] = []
    failures: List[str] = []

    bjoins = list(enumerate_bjoin(n))
    derived_forms = []
    for i, s in enumerate(bjoins):
        m = nakano(s)
        report = check_lmosaic(m)
        axioms_ok = report.ok
        if not axioms_ok:
            for v in report.failures():
                failures.append(f"bjoin[{i}] derived mosaic: {v}")
        try:
            diff = roundtrip_bjoin(s)
        except AxiomError as exc:
            diff = None
            failures.append(f"bjoin[{i}] roundtrip: {exc}")
        if diff is not None and diff.kind != "identical":
            for d in diff.details:
                failures.append(f"bjoin[{i}] roundtrip differs at {d}")
        roundtrip_ok = diff is not None and diff.kind == "identical"
        derived_forms.append(canonical_form(m))
        rows.append(
            FamilyRow("bjoin", i, canonical_form(s).digest(), axioms_ok, roundtrip_ok)
        )

    lmosaic_count: Optional[int] = None
    counts_match: Optional[bool] = None
    bijection_ok: Optional[bool] = None
    if n <= lmosaic_bound():
        lmosaics = list(enumerate_lmosaic(n))
        lmosaic_count = len(lmosaics)
        mosaic_forms = []
        for i, m in enumerate(lmosaics):
            axioms_ok = check_lmosaic(m).ok
            if not axioms_ok:
                failures.append(f"lmosaic[{i}] fails its own axioms")
            try:
                diff = roundtrip_lmosaic(m)
            except AxiomError as exc:
                diff = None
                failures.append(f"lmosaic[{i}] roundtrip: {exc}")
            if diff is not None and diff.kind != "identical":
                for d in diff.details:
                    failures.append(f"lmosaic[{i}] roundtrip differs at {d}")
            roundtrip_ok = diff is not None and diff.kind == "identical"
            mosaic_forms.append(canonical_form(m))
            rows.append(FamilyRow("lmosaic", i, mosaic_forms[-1].digest(),
                                  axioms_ok, roundtrip_ok))
        counts_match = len(bjoins) == len(lmosaics)
        if not counts_match:
            failures.append(
                f"class counts differ: {len(bjoins)} semilattices "
                f"vs {len(lmosaics)} mosaics"
            )
        bijection_ok = (
            len(set(derived_forms)) == len(derived_forms)
            and set(derived_forms) == set(mosaic_forms)
        )
        if not bijection_ok:
            failures.append("derived mosaics do not biject with enumerated mosaics")

    return FamilySummary(
        size=n,
        bjoin_count=len(bjoins),
        lmosaic_count=lmosaic_count,
        rows=tuple(rows),
        failures=tuple(failures),
        counts_match=counts_match,
        bijection_ok=bijection_ok,
    )
