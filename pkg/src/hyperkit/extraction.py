"""Reverse construction: recover a join-semilattice from an L-mosaic.

The diagonal cells induce an order (x below y iff x lies in y (+) y); the
join of x and y is the unique member of x (+) y that dominates both in that
order. Witness scans run fresh on every call so the operations stay safe on
unchecked, deliberately broken structures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .axioms import AxiomError, CheckReport, Verdict, check_bjoin, check_lmosaic, lm4_witnesses
from .core import BJoinSemilattice, LMosaic, contains


@dataclass(frozen=True)
class InducedOrder:
    """Boolean table of the diagonal-membership relation."""

    size: int
    leq: Tuple[Tuple[bool, ...], ...]

    def holds(self, x: int, y: int) -> bool:
        return self.leq[x][y]


class JoinWitnessError(ValueError):
    """The unique-join scan found no single witness; the input is not an
    L-mosaic, which callers must treat as invalid input rather than a bug."""


class ZeroWitnesses(JoinWitnessError):
    def __init__(self, x: int, y: int):
        super().__init__(f"no join witness for ({x},{y})")
        self.x = x
        self.y = y


class MultipleWitnesses(JoinWitnessError):
    def __init__(self, x: int, y: int, witnesses: Tuple[int, ...]):
        super().__init__(f"join witnesses {witnesses} for ({x},{y}) are not unique")
        self.x = x
        self.y = y
        self.witnesses = witnesses


def induced_order(m: LMosaic) -> InducedOrder:
    """x below y iff x is a member of the diagonal cell of y. No axiom check."""
    n = m.n
    return InducedOrder(
        size=n,
        leq=tuple(
            tuple(contains(m.hyp[y][y], x) for y in range(n)) for x in range(n)
        ),
    )


def check_partial_order(order: InducedOrder) -> CheckReport:
    """Reflexivity, antisymmetry and transitivity verdicts with witnesses."""
    n = order.size
    leq = order.leq

    witness = None
    for x in range(n):
        if not leq[x][x]:
            witness = (x,)
            break
    verdicts = [Verdict("reflexive", witness is None, witness)]

    witness = None
    for x in range(n):
        for y in range(n):
            if x != y and leq[x][y] and leq[y][x]:
                witness = (x, y)
                break
        if witness:
            break
    verdicts.append(Verdict("antisymmetric", witness is None, witness))

    witness = None
    for x in range(n):
        for y in range(n):
            if not leq[x][y]:
                continue
            for z in range(n):
                if leq[y][z] and not leq[x][z]:
                    witness = (x, y, z)
                    break
            if witness:
                break
        if witness:
            break
    verdicts.append(Verdict("transitive", witness is None, witness))

    return CheckReport(tuple(verdicts))


def extract_join(m: LMosaic, x: int, y: int) -> int:
    """The unique z in x (+) y dominating x and y in the induced order.

    Scans ascending; raises ZeroWitnesses / MultipleWitnesses when the
    unique-supremum axiom fails at (x, y).
    """
    zs = lm4_witnesses(m, x, y)
    if not zs:
        raise ZeroWitnesses(x, y)
    if len(zs) > 1:
        raise MultipleWitnesses(x, y, zs)
    return zs[0]


def extract_bjoin(m: LMosaic) -> BJoinSemilattice:
    """Join table from the unique witnesses, bottom from the neutral element.

    Refuses inputs failing check_lmosaic. The result is itself re-checked
    with check_bjoin: a violation there would falsify the extracted table
    being a semilattice join, so it fails loudly instead of returning.
    """
    report = check_lmosaic(m)
    if not report.ok:
        raise AxiomError("cannot extract join: input is not an L-mosaic", report)

    n = m.n
    table = tuple(
        tuple(extract_join(m, x, y) for y in range(n)) for x in range(n)
    )
    result = BJoinSemilattice(carrier=m.carrier, join=table, bot=m.e)
    post = check_bjoin(result)
    if not post.ok:
        raise AxiomError("extracted join table fails the semilattice axioms", post)
    return result


def lub_properties(m: LMosaic) -> CheckReport:
    """Upper-bound and leastness verdicts for the extracted join.

    ub_left / ub_right: each argument sits below the join in the induced
    order; least: the join sits below every common upper bound. Witness
    scan errors from extract_join propagate.
    """
    n = m.n
    order = induced_order(m)
    leq = order.leq
    join = [[extract_join(m, x, y) for y in range(n)] for x in range(n)]

    witness = None
    for x in range(n):
        for y in range(n):
            if not leq[x][join[x][y]]:
                witness = (x, y)
                break
        if witness:
            break
    verdicts = [Verdict("ub_left", witness is None, witness)]

    witness = None
    for x in range(n):
        for y in range(n):
            if not leq[y][join[x][y]]:
                witness = (x, y)
                break
        if witness:
            break
    verdicts.append(Verdict("ub_right", witness is None, witness))

    witness = None
    for x in range(n):
        for y in range(n):
            for t in range(n):
                if leq[x][t] and leq[y][t] and not leq[join[x][y]][t]:
                    witness = (x, y, t)
                    break
            if witness:
                break
        if witness:
            break
    verdicts.append(Verdict("least", witness is None, witness))

    return CheckReport(tuple(verdicts))
