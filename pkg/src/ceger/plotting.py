"""Report figures: command-type distribution and per-method WER / length."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .metrics import DistributionSummary, MethodSummary  # noqa: E402
from .tokens import CommandKind  # noqa: E402

_STYLE = {
    "font.size": 10,
    "axes.labelsize": 10,
    "xtick.labelsize": 9,
    "ytick.labelsize": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.bbox": "tight",
    "savefig.dpi": 150,
}

# png metadata would otherwise embed the matplotlib version string
_METADATA = {"Software": None}


def plot_distribution(dist: DistributionSummary, path: str | Path, title: str = "") -> Path:
    pct = dist.percentages()
    kinds = sorted(CommandKind, key=lambda k: -pct[k])
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(5, 3.2))
        bars = ax.bar([k.value for k in kinds], [pct[k] for k in kinds], color="0.35")
        for bar, k in zip(bars, kinds):
            ax.annotate(f"{pct[k]:.1f}%", (bar.get_x() + bar.get_width() / 2, bar.get_height()),
                        ha="center", va="bottom", fontsize=8)
        ax.set_ylabel("share of commands (%)")
        ax.set_ylim(0, max(100.0, max(pct.values(), default=0) * 1.1))
        if title:
            ax.set_title(title)
        path = Path(path)
        fig.savefig(path, metadata=_METADATA)
        plt.close(fig)
    return path


def plot_methods(summaries: Sequence[MethodSummary], path: str | Path,
                 asr_wer: float | None = None) -> Path:
    names = [s.method for s in summaries]
    with plt.rc_context(_STYLE):
        fig, (ax_wer, ax_len) = plt.subplots(1, 2, figsize=(8, 3.2))
        ax_wer.bar(names, [100 * s.corpus_wer for s in summaries], color="0.35")
        if asr_wer is not None:
            ax_wer.axhline(100 * asr_wer, color="k", ls="--", lw=1, label="raw ASR")
            ax_wer.legend(frameon=False)
        ax_wer.set_ylabel("corpus WER (%)")
        ax_len.bar(names, [s.avg_output_len for s in summaries], color="0.6")
        ax_len.set_ylabel("avg output length (tokens)")
        path = Path(path)
        fig.savefig(path, metadata=_METADATA)
        plt.close(fig)
    return path
