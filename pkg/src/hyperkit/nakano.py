"""Forward construction: an L-mosaic from a bounded join-semilattice.

The multivalued cell x (+) y collects every z whose joins against x and y
both land on x v y; the neutral element is the bottom and the reversibility
map is the identity. The full table is materialized eagerly so downstream
enumeration and equivalence checks can compare cell-for-cell.
"""

from __future__ import annotations

from .axioms import AxiomError, check_bjoin
from .core import BJoinSemilattice, LMosaic


def nakano(s: BJoinSemilattice) -> LMosaic:
    """Build the L-mosaic of a semilattice; refuses tables failing check_bjoin."""
    report = check_bjoin(s)
    if not report.ok:
        raise AxiomError("cannot build mosaic: input is not a join-semilattice", report)

    n = s.n
    j = s.join
    table = []
    for x in range(n):
        row = []
        for y in range(n):
            target = j[x][y]
            cell = 0
            for z in range(n):
                if j[x][z] == target and j[z][y] == target:
                    cell |= 1 << z
            row.append(cell)
        table.append(tuple(row))
    return LMosaic(
        carrier=s.carrier,
        hyp=tuple(table),
        e=s.bot,
        rho=tuple(range(n)),
    )
