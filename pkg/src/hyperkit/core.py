"""Finite carriers, operation tables, and the two structure kinds.

Elements are dense indices 0..n-1; subsets of the carrier are int bitmasks
(bit i set <=> element i present), which keeps membership, union and
intersection single machine-word operations for all supported sizes.
Structure values are immutable after construction and validate only shape:
whether the tables satisfy any algebraic axiom is the checkers' business.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

MAX_CARRIER = 64  # element sets must fit one machine word

ElemSet = int
BinOpTable = Tuple[Tuple[int, ...], ...]
HyperOpTable = Tuple[Tuple[ElemSet, ...], ...]


class StructureError(ValueError):
    """Raised when a structure fails shape validation at construction."""


def elem_set(indices: Iterable[int]) -> ElemSet:
    """Bitmask for a collection of element indices."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def members(mask: ElemSet) -> Tuple[int, ...]:
    """Element indices of a bitmask, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def set_size(mask: ElemSet) -> int:
    return mask.bit_count()


def contains(mask: ElemSet, x: int) -> bool:
    return bool(mask >> x & 1)


def full_set(n: int) -> ElemSet:
    return (1 << n) - 1


@dataclass(frozen=True)
class Carrier:
    """A finite carrier set; labels are display-only metadata."""

    size: int
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if not 1 <= self.size <= MAX_CARRIER:
            raise StructureError(
                f"carrier size must be in 1..{MAX_CARRIER}, got {self.size}"
            )
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.size:
                raise StructureError(
                    f"expected {self.size} labels, got {len(self.labels)}"
                )
            if len(set(self.labels)) != self.size:
                raise StructureError("labels must be distinct")

    def label_of(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)


def _freeze_bin_table(table: Sequence[Sequence[int]], n: int) -> BinOpTable:
    rows = tuple(tuple(row) for row in table)
    if len(rows) != n or any(len(row) != n for row in rows):
        raise StructureError(f"operation table must be {n}x{n}")
    for x, row in enumerate(rows):
        for y, v in enumerate(row):
            if not 0 <= v < n:
                raise StructureError(f"table entry {v} at ({x},{y}) out of range")
    return rows


def _freeze_hyper_table(table: Sequence[Sequence[ElemSet]], n: int) -> HyperOpTable:
    rows = tuple(tuple(row) for row in table)
    if len(rows) != n or any(len(row) != n for row in rows):
        raise StructureError(f"hyperoperation table must be {n}x{n}")
    all_mask = full_set(n)
    for x, row in enumerate(rows):
        for y, cell in enumerate(row):
            if cell == 0:
                raise StructureError(f"empty hyperoperation cell at ({x},{y})")
            if cell & ~all_mask:
                raise StructureError(f"cell at ({x},{y}) exceeds the carrier")
    return rows


@dataclass(frozen=True)
class BJoinSemilattice:
    """Carrier, join table and a distinguished bottom element.

    Shape-valid only; run the bjoin checker to decide whether the table is
    actually an associative/commutative/idempotent join with neutral bottom.
    """

    carrier: Carrier
    join: BinOpTable
    bot: int

    def __post_init__(self) -> None:
        n = self.carrier.size
        object.__setattr__(self, "join", _freeze_bin_table(self.join, n))
        if not 0 <= self.bot < n:
            raise StructureError(f"bot index {self.bot} out of range")

    @property
    def n(self) -> int:
        return self.carrier.size

    def sup(self, x: int, y: int) -> int:
        return self.join[x][y]


@dataclass(frozen=True)
class LMosaic:
    """Carrier, multivalued operation table, neutral element and
    reversibility map.

    Shape-valid only: every cell nonempty and within the carrier, e and the
    rho entries in range. The mosaic / L-mosaic axioms are the checkers' job;
    ablation search deliberately builds axiom-violating values of this type.
    """

    carrier: Carrier
    hyp: HyperOpTable
    e: int
    rho: Tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.carrier.size
        object.__setattr__(self, "hyp", _freeze_hyper_table(self.hyp, n))
        object.__setattr__(self, "rho", tuple(self.rho))
        if not 0 <= self.e < n:
            raise StructureError(f"neutral element index {self.e} out of range")
        if len(self.rho) != n:
            raise StructureError(f"rho must have {n} entries")
        for x, v in enumerate(self.rho):
            if not 0 <= v < n:
                raise StructureError(f"rho entry {v} at {x} out of range")

    @property
    def n(self) -> int:
        return self.carrier.size

    def hyper(self, x: int, y: int) -> ElemSet:
        """The cell x (+) y as a bitmask."""
        n = self.carrier.size
        if not (0 <= x < n and 0 <= y < n):
            raise IndexError(f"element pair ({x},{y}) out of range for size {n}")
        return self.hyp[x][y]


def hyper(m: LMosaic, x: int, y: int) -> ElemSet:
    """Table lookup of the multivalued operation."""
    return m.hyper(x, y)


def set_mul(m: LMosaic, xs: ElemSet, ys: ElemSet) -> ElemSet:
    """Elementwise extension: union of x (+) y over x in xs, y in ys."""
    out = 0
    for x in members(xs):
        row = m.hyp[x]
        for y in members(ys):
            out |= row[y]
    return out


def right_mul(m: LMosaic, x: int, ys: ElemSet) -> ElemSet:
    """Union of x (+) y over y in ys."""
    row = m.hyp[x]
    out = 0
    for y in members(ys):
        out |= row[y]
    return out


def left_mul(m: LMosaic, xs: ElemSet, y: int) -> ElemSet:
    """Union of x (+) y over x in xs."""
    out = 0
    for x in members(xs):
        out |= m.hyp[x][y]
    return out
