"""Figures for scan reports, written as PNG files next to the text output."""

from __future__ import annotations

import re
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .report import ScanReport  # noqa: E402

STATUS_COLORS = {"pass": "#4c9a5a", "fail": "#c0392b", "report": "#5b7db1", "skipped": "#999999"}


def _slug(text: str) -> str:
    return re.sub(r"[^a-z0-9]+", "-", text.lower()).strip("-")


def _bar(ax, labels, values, colors=None) -> None:
    xs = range(len(labels))
    ax.bar(xs, values, color=colors or "#5b7db1")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=30 if len(labels) > 4 else 0, ha="right" if len(labels) > 4 else "center")
    for x, v in zip(xs, values):
        ax.annotate(str(v), (x, v), ha="center", va="bottom", fontsize=8)
    ax.spines[["top", "right"]].set_visible(False)


def _key_order(key: str):
    # numeric keys sort numerically, the rest lexicographically
    return (0, int(key), "") if key.lstrip("-").isdigit() else (1, 0, key)


def render_report(report: ScanReport, outdir: str | Path) -> list[Path]:
    """Write a status chart plus one bar chart per histogram; return paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    stem = _slug(report.command + "-" + str(report.parameters.get("suite", "")))
    written = []

    counts = report.status_counts()
    fig, ax = plt.subplots(figsize=(5, 3.2))
    labels = list(counts)
    _bar(ax, labels, [counts[k] for k in labels], [STATUS_COLORS.get(k, "#8e7cc3") for k in labels])
    ax.set_ylabel("records")
    ax.set_title(f"{stem}: {'PASS' if report.passed else 'FAIL'} ({report.corpus_size} items)")
    fig.tight_layout()
    path = outdir / f"{stem}-status.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    for name, hist in report.histograms.items():
        keys = sorted(hist, key=_key_order)
        fig, ax = plt.subplots(figsize=(max(5, 0.5 * len(keys) + 2), 3.4))
        _bar(ax, keys, [hist[k] for k in keys])
        ax.set_title(f"{stem}: {name}")
        ax.set_ylabel("count")
        fig.tight_layout()
        path = outdir / f"{stem}-{_slug(name)}.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    return written
