"""Optional report artifacts: a valence-arousal scatter and a TSV table.

Both functions consume the per-segment rows of the analysis report (plain
mappings), so they can be fed either from a live run or from a report
loaded back off disk.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

_QUADRANT_COLORS = {
    "Excitement": "tab:orange",
    "Anger": "tab:red",
    "Sadness": "tab:blue",
    "Relaxation": "tab:green",
    "Neutral": "tab:gray",
}

Row = Mapping[str, object]


def write_va_figure(rows: Sequence[Row], path: str | Path) -> None:
    """Scatter the segments in valence-arousal space and save the figure."""
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.axhline(0.0, color="0.7", lw=1)
    ax.axvline(0.0, color="0.7", lw=1)
    for quadrant, color in _QUADRANT_COLORS.items():
        pts = [r for r in rows if r["quadrant"] == quadrant]
        if not pts:
            continue
        ax.scatter(
            [r["valence"] for r in pts],
            [r["arousal"] for r in pts],
            s=[30 + 170 * float(r["normalized_intensity"]) for r in pts],
            c=color,
            alpha=0.75,
            label=quadrant,
        )
    ax.set_xlim(-1.05, 1.05)
    ax.set_ylim(-1.05, 1.05)
    ax.set_xlabel("valence")
    ax.set_ylabel("arousal")
    ax.set_title("Segment emotions")
    ax.legend(loc="lower left", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


_TABLE_FIELDS = (
    "segment_id",
    "sentence_id",
    "kind",
    "quadrant",
    "valence",
    "arousal",
    "intensity",
    "normalized_intensity",
    "rank_score",
    "stroke_id",
    "text",
)


def write_table(rows: Sequence[Row], path: str | Path) -> None:
    """Write the segment rows as a tab-delimited table with a header."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, delimiter="\t", lineterminator="\n")
        writer.writerow(_TABLE_FIELDS)
        for row in rows:
            writer.writerow(
                ["" if row[field] is None else row[field] for field in _TABLE_FIELDS]
            )
