"""Hasse diagrams of the order carried by a structure.

For a semilattice the order is x <= y iff x v y = y; for an L-mosaic it is
the induced order. Emission refuses structures that fail their axiom check,
since the covering relation of a non-order is meaningless. DOT output is
deterministic: nodes ascending, edges sorted by (lower, upper), rankdir=BT
so diagrams read bottom-up.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple, Union

from .axioms import AxiomError, check_bjoin, check_lmosaic
from .core import BJoinSemilattice, LMosaic
from .extraction import induced_order

Structure = Union[BJoinSemilattice, LMosaic]

LeqTable = Tuple[Tuple[bool, ...], ...]


def order_relation(s: Structure) -> LeqTable:
    """The full reflexive order table of a structure, unchecked."""
    if isinstance(s, BJoinSemilattice):
        return tuple(
            tuple(s.join[x][y] == y for y in range(s.n)) for x in range(s.n)
        )
    return induced_order(s).leq


def covering_edges(leq: LeqTable) -> Tuple[Tuple[int, int], ...]:
    """Pairs (lo, hi) with lo < hi and nothing strictly between."""
    n = len(leq)
    edges: List[Tuple[int, int]] = []
    for lo in range(n):
        for hi in range(n):
            if lo == hi or not leq[lo][hi]:
                continue
            if any(
                w != lo and w != hi and leq[lo][w] and leq[w][hi]
                for w in range(n)
            ):
                continue
            edges.append((lo, hi))
    return tuple(sorted(edges))


def _checked_order(s: Structure) -> LeqTable:
    if isinstance(s, BJoinSemilattice):
        report = check_bjoin(s)
        what = "semilattice"
    else:
        report = check_lmosaic(s)
        what = "L-mosaic"
    if not report.ok:
        raise AxiomError(
            f"cannot draw an order diagram: input fails the {what} axioms", report
        )
    return order_relation(s)


def _escape(label: str) -> str:
    return label.replace("\\", "\\\\").replace('"', '\\"')


def emit_hasse(s: Structure) -> str:
    """DOT digraph of the covering relation; refuses invalid structures."""
    leq = _checked_order(s)
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for x in range(s.n):
        lines.append(f'  n{x} [label="{_escape(s.carrier.label_of(x))}"];')
    for lo, hi in covering_edges(leq):
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _levels(leq: LeqTable, edges: Sequence[Tuple[int, int]]) -> List[int]:
    """Height of each node: longest covering chain up from a minimal node."""
    n = len(leq)
    level = [0] * n
    changed = True
    while changed:
        changed = False
        for lo, hi in edges:
            if level[hi] < level[lo] + 1:
                level[hi] = level[lo] + 1
                changed = True
    return level


def draw_hasse(ax, s: Structure) -> None:
    """Draw the diagram of an already-validated structure onto an axes."""
    leq = order_relation(s)
    edges = covering_edges(leq)
    level = _levels(leq, edges)
    by_level: dict = {}
    for x in range(s.n):
        by_level.setdefault(level[x], []).append(x)
    pos = {}
    for lvl, nodes in by_level.items():
        for i, x in enumerate(sorted(nodes)):
            pos[x] = ((i + 1) / (len(nodes) + 1), lvl)
    for lo, hi in edges:
        ax.plot(
            [pos[lo][0], pos[hi][0]], [pos[lo][1], pos[hi][1]],
            color="0.4", linewidth=1.0, zorder=1,
        )
    xs = [pos[x][0] for x in range(s.n)]
    ys = [pos[x][1] for x in range(s.n)]
    ax.scatter(xs, ys, s=220, color="white", edgecolors="black", zorder=2)
    for x in range(s.n):
        ax.annotate(
            s.carrier.label_of(x), pos[x],
            ha="center", va="center", fontsize=9, zorder=3,
        )
    ax.set_xlim(-0.05, 1.05)
    ax.set_ylim(-0.5, max(level) + 0.5 if s.n > 1 else 0.5)
    ax.set_axis_off()


def render_hasse(s: Structure, path) -> None:
    """Render the diagram to an image file; refuses invalid structures."""
    _checked_order(s)
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(3.2, 3.2))
    draw_hasse(ax, s)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
