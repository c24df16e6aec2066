"""File reports for family verification runs.

Writes a delimited results table plus rendered diagram galleries of every
enumerated structure at the verified size, one figure per structure kind.
Enumeration is deterministic, so row order and figure panels line up with
the indices in the summary.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path
from typing import List

from .enumeration import enumerate_bjoin, enumerate_lmosaic
from .equivalence import FamilySummary
from .hasse import draw_hasse


def _gallery(structures, title: str, path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    count = len(structures)
    cols = min(5, max(1, math.ceil(math.sqrt(count))))
    rows = math.ceil(count / cols)
    fig, axes = plt.subplots(rows, cols, figsize=(3.0 * cols, 3.0 * rows))
    flat = list(axes.flat) if hasattr(axes, "flat") else [axes]
    for ax in flat[count:]:
        ax.set_axis_off()
    for i, s in enumerate(structures):
        draw_hasse(flat[i], s)
        flat[i].set_title(f"#{i}", fontsize=9)
    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_family_report(summary: FamilySummary, out_dir) -> List[Path]:
    """Write results.csv and diagram galleries; returns the written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: List[Path] = []

    csv_path = out / f"family_n{summary.size}.csv"
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["kind", "index", "digest", "axioms_ok", "roundtrip_ok"])
        for row in summary.rows:
            writer.writerow(
                [row.kind, row.index, row.digest,
                 str(row.axioms_ok).lower(), str(row.roundtrip_ok).lower()]
            )
    written.append(csv_path)

    bjoins = list(enumerate_bjoin(summary.size))
    fig_path = out / f"bjoin_hasse_n{summary.size}.png"
    _gallery(bjoins, f"join-semilattices of size {summary.size}", fig_path)
    written.append(fig_path)

    if summary.lmosaic_count is not None:
        lmosaics = list(enumerate_lmosaic(summary.size))
        fig_path = out / f"lmosaic_order_n{summary.size}.png"
        _gallery(lmosaics, f"L-mosaic induced orders, size {summary.size}", fig_path)
        written.append(fig_path)

    return written
